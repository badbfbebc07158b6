#include "nlsis/analysis.hpp"

#include "nlsis/params.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace nlsis {

namespace {

void validate_walk(const GamblersRuin& w)
{
    if (!(w.p > 0.0 && w.p < 1.0))
        throw std::invalid_argument("gambler's ruin requires 0 < p < 1");
    if (w.lower >= w.upper)
        throw std::invalid_argument("gambler's ruin requires l < u");
    if (w.start < w.lower || w.start > w.upper)
        throw std::invalid_argument("gambler's ruin requires l <= P0 <= u");
}

// log(-expm1(x)) for x < 0, i.e. log(1 - e^x).
double log_one_minus_exp(double x)
{
    return x > -0.6931471805599453 ? std::log(-std::expm1(x)) : std::log1p(-std::exp(x));
}

void require_positive_lambda(double lambda)
{
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        throw std::invalid_argument("lambda must be a finite value > 0");
}

void require_alpha(double alpha)
{
    if (!(alpha > -1.0))
        throw std::invalid_argument("alpha must be > -1 (infection exponent)");
    if (!(alpha <= kMaxAlpha))
        throw std::invalid_argument("alpha must be <= 4 (supported numeric envelope)");
}

}  // namespace

RuinProbabilities gamblers_ruin_log_absorption(const GamblersRuin& w)
{
    validate_walk(w);
    const double a = static_cast<double>(w.start - w.lower);
    const double b = static_cast<double>(w.upper - w.start);
    const double m = a + b;
    constexpr double neg_inf = -std::numeric_limits<double>::infinity();
    if (w.p == 0.5)
        return {b > 0 ? std::log(b / m) : neg_inf, a > 0 ? std::log(a / m) : neg_inf};

    // rho = p / q; every expression below is arranged so that the exponent
    // handed to log_one_minus_exp is negative.
    const double log_rho = std::log(w.p) - std::log1p(-w.p);
    const double s = std::abs(log_rho);
    const double denom = log_one_minus_exp(-m * s);
    const double part_b = b > 0 ? log_one_minus_exp(-b * s) : neg_inf;
    const double part_a = a > 0 ? log_one_minus_exp(-a * s) : neg_inf;
    if (log_rho < 0.0)
        return {part_b - denom, -b * s + part_a - denom};
    return {-a * s + part_b - denom, part_a - denom};
}

RuinProbabilities gamblers_ruin_absorption(const GamblersRuin& w)
{
    const RuinProbabilities logs = gamblers_ruin_log_absorption(w);
    if (w.p == 0.5) {
        const double m = static_cast<double>(w.upper - w.lower);
        return {static_cast<double>(w.upper - w.start) / m, static_cast<double>(w.start - w.lower) / m};
    }
    return {std::exp(logs.lower), std::exp(logs.upper)};
}

double equilibrium_infected(std::size_t n, double lambda, double alpha)
{
    validate_vertex_count(n, "n");
    require_positive_lambda(lambda);
    require_alpha(alpha);
    if (alpha == 0.0)
        throw std::domain_error("equilibrium point is undefined for linear scaling (alpha = 0)");
    return std::exp(-std::log(lambda * static_cast<double>(n)) / alpha);
}

double beta(std::size_t n, double lambda, double alpha)
{
    validate_vertex_count(n, "n");
    require_positive_lambda(lambda);
    require_alpha(alpha);
    return lambda * std::pow(lambda * static_cast<double>(n), 1.0 + alpha);
}

double drop_probability_exact(std::size_t x, std::size_t y, double lambda, double alpha)
{
    if (y > x)
        throw std::invalid_argument("drop probability requires 0 <= y <= x");
    if (!(lambda >= 0.0) || !std::isfinite(lambda))
        throw std::invalid_argument("lambda must be a finite value >= 0");
    require_alpha(alpha);
    double log_p = 0.0;
    for (std::size_t i = y + 1; i <= x; ++i)
        log_p -= std::log1p(lambda * std::exp(alpha * std::log(static_cast<double>(i))));
    return std::exp(log_p);
}

double drop_probability_bound(std::size_t x, std::size_t y, double lambda, double alpha)
{
    if (y > x)
        throw std::invalid_argument("drop bound requires 0 <= y <= x");
    if (!(lambda >= 0.0) || !std::isfinite(lambda))
        throw std::invalid_argument("lambda must be a finite value >= 0");
    require_alpha(alpha);
    if (x == y)
        return 1.0;
    const std::size_t z = alpha > 0.0 ? y : x;
    if (alpha > 0.0 && z == 0)
        throw std::invalid_argument("drop bound with alpha > 0 requires y >= 1 (z = y)");
    const double z_pow = std::pow(static_cast<double>(z), alpha);
    const double rate = lambda * z_pow;
    if (rate > 1.0)
        throw std::invalid_argument("drop bound requires lambda * z^alpha <= 1");
    return std::exp(-static_cast<double>(x - y) * rate / 2.0);
}

double reach_equilibrium_level(std::size_t n, double lambda, double alpha)
{
    validate_vertex_count(n, "n");
    require_positive_lambda(lambda);
    require_alpha(alpha);
    if (!(alpha > 0.0))
        throw std::invalid_argument("reach bounds require alpha > 0");
    return std::exp(-std::log(lambda * static_cast<double>(n) / 2.0) / alpha);
}

ProbabilityBounds reach_equilibrium_prob_bounds(std::size_t n, double lambda, double alpha)
{
    const double level = reach_equilibrium_level(n, lambda, alpha);
    const double half_n = static_cast<double>(n) / 2.0;
    constexpr double tol = 1e-12;
    if (level < 1.0 * (1.0 - tol) || level > half_n * (1.0 + tol))
        throw std::invalid_argument("reach bounds require 1 <= (lambda n / 2)^(-1/alpha) <= n/2, got level " +
                                    std::to_string(level));
    const double nl = lambda * static_cast<double>(n);
    const double lower = std::exp(level * std::log(nl / 2.0));
    const double upper = std::exp2(1.0 - std::exp(-std::log(2.0 * nl) / alpha));
    return {std::min(lower, 1.0), std::min(upper, 1.0)};
}

double max_exponential_expectation(std::size_t n, double lambda)
{
    if (n < 1)
        throw std::invalid_argument("max of exponentials requires n >= 1");
    require_positive_lambda(lambda);
    double h = 0.0;
    for (std::size_t k = n; k >= 1; --k)
        h += 1.0 / static_cast<double>(k);
    return h / lambda;
}

double threshold_lambda(GraphKind kind, std::size_t n, double alpha, ThresholdSide side)
{
    if (n < 2)
        throw std::invalid_argument("threshold boundaries require n >= 2");
    validate_vertex_count(n, "n");
    require_alpha(alpha);
    const double nd = static_cast<double>(n);
    const double ln_n = std::log(nd);
    const bool slow = side == ThresholdSide::slow;
    if (kind == GraphKind::clique) {
        if (alpha < 0.0)
            return slow ? std::exp(-alpha * std::log(ln_n)) / nd : 1.0 / nd;
        if (alpha == 0.0)
            return 1.0 / nd;
        const double fast = std::exp((-1.0 - alpha) * ln_n);
        return slow ? fast * std::exp(alpha * std::log(ln_n)) : fast;
    }
    const double fast = std::exp((-0.5 - alpha / (2.0 * (2.0 + alpha))) * ln_n);
    return slow ? fast * std::exp(4.0 / (2.0 + alpha) * std::log(ln_n)) : fast;
}

}  // namespace nlsis
