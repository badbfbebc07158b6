#include "nlsis/growth.hpp"

#include "nlsis/format.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace nlsis {

namespace {

struct Fit {
    double slope;
    double r2;
};

Fit least_squares(const std::vector<double>& x, const std::vector<double>& y)
{
    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    const double slope = sxy / sxx;
    const double r2 = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
    return {slope, r2};
}

}  // namespace

GrowthClass classify_growth(std::span<const GrowthPoint> points)
{
    if (points.size() < 4)
        throw std::invalid_argument("growth classification needs at least 4 points");
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!(points[i].n > 0.0) || !(points[i].statistic > 0.0) || !std::isfinite(points[i].statistic))
            throw std::invalid_argument("growth classification needs positive n and statistics");
        if (i > 0 && !(points[i].n > points[i - 1].n))
            throw std::invalid_argument("growth classification needs strictly increasing n");
    }

    std::vector<double> ln_n, ln_stat, stat;
    for (const GrowthPoint& p : points) {
        ln_n.push_back(std::log(p.n));
        ln_stat.push_back(std::log(p.statistic));
        stat.push_back(p.statistic);
    }
    const Fit power = least_squares(ln_n, ln_stat);
    const Fit logarithmic = least_squares(ln_n, stat);

    const std::size_t last = points.size() - 1;
    auto heavily_censored = [&](std::size_t i) {
        return points[i].censored_fraction && *points[i].censored_fraction > kSuperCensoredFraction;
    };
    bool super = heavily_censored(last) && heavily_censored(last - 1);

    std::vector<double> local;
    for (std::size_t i = 1; i < points.size(); ++i)
        local.push_back((ln_stat[i] - ln_stat[i - 1]) / (ln_n[i] - ln_n[i - 1]));
    const bool increasing = std::adjacent_find(local.begin(), local.end(), std::greater_equal<>()) == local.end();
    if (increasing && local.back() - local.front() >= kSuperExponentRise)
        super = true;
    if (super)
        return {GrowthKind::super_polynomial, power.slope, logarithmic.r2};

    const auto [lo, hi] = std::minmax_element(stat.begin(), stat.end());
    double mean = 0.0;
    for (double s : stat)
        mean += s;
    mean /= static_cast<double>(stat.size());
    const bool flat = (*hi - *lo) <= kFlatRelativeRange * mean;
    if (power.slope < kLogMaxExponent && (logarithmic.r2 >= kLogFitMinR2 || flat))
        return {GrowthKind::logarithmic, power.slope, logarithmic.r2};
    return {GrowthKind::polynomial, power.slope, logarithmic.r2};
}

std::string to_string(const GrowthClass& growth)
{
    switch (growth.kind) {
    case GrowthKind::logarithmic: return "logarithmic";
    case GrowthKind::super_polynomial: return "super_polynomial";
    case GrowthKind::polynomial: break;
    }
    return "polynomial(" + format_double(growth.exponent) + ")";
}

}  // namespace nlsis
