#pragma once

#include <optional>
#include <span>
#include <string>

namespace nlsis {

struct GrowthPoint {
    double n;
    double statistic;
    std::optional<double> censored_fraction;
};

enum class GrowthKind { logarithmic, polynomial, super_polynomial };

struct GrowthClass {
    GrowthKind kind;
    double exponent;  // least-squares slope of ln(statistic) on ln(n)
    double log_r2;    // R^2 of statistic against ln(n)
};

// Decision constants.
inline constexpr double kLogFitMinR2 = 0.9;
inline constexpr double kLogMaxExponent = 0.25;
inline constexpr double kFlatRelativeRange = 0.1;
inline constexpr double kSuperCensoredFraction = 0.5;
inline constexpr double kSuperExponentRise = 1.0;

/// Classifies how a statistic grows with n.
///
/// super_polynomial: censored fraction > 0.5 at the two largest n, or the
///   local log-log slopes strictly increase and rise by at least 1 overall.
/// logarithmic: power-law exponent < 0.25 and either R^2 >= 0.9 for the fit
///   against ln n or a range within 10% of the mean (bounded statistics).
/// polynomial: everything else, with the fitted exponent.
///
/// Requires at least 4 points, strictly increasing n and positive statistics.
GrowthClass classify_growth(std::span<const GrowthPoint> points);

std::string to_string(const GrowthClass& growth);

}  // namespace nlsis
