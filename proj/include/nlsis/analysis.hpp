#pragma once

#include <cstddef>
#include <cstdint>

namespace nlsis {

/// Biased +-1 walk started at `start`, stepping up with probability `p`,
/// absorbed at `lower` or `upper`.
struct GamblersRuin {
    double p;
    std::int64_t lower;
    std::int64_t upper;
    std::int64_t start;
};

struct RuinProbabilities {
    double lower;  // probability of absorption at the lower boundary
    double upper;
};

/// Absorption probabilities, evaluated with expm1/log so that the result
/// stays accurate for p near 1/2 and for wide intervals.
RuinProbabilities gamblers_ruin_absorption(const GamblersRuin& walk);

/// Natural logarithms of the same pair; finite where the plain values
/// underflow. A zero probability gives -infinity.
RuinProbabilities gamblers_ruin_log_absorption(const GamblersRuin& walk);

/// Clique equilibrium point (lambda n)^(-1/alpha). Throws for alpha = 0.
double equilibrium_infected(std::size_t n, double lambda, double alpha);

/// Star potential lambda^2 n (lambda n)^alpha.
double beta(std::size_t n, double lambda, double alpha);

/// Probability that a center-healthy star phase drops from x to y infected
/// leaves before the center is reinfected:
/// prod_{i=y+1}^{x} 1 / (1 + lambda i^alpha).
double drop_probability_exact(std::size_t x, std::size_t y, double lambda, double alpha);

/// Exponential upper bound e^{-(x-y) lambda z^alpha / 2} on the drop
/// probability, z = y for alpha > 0 and z = x otherwise. Requires
/// lambda z^alpha <= 1.
double drop_probability_bound(std::size_t x, std::size_t y, double lambda, double alpha);

/// Infected level (lambda n / 2)^(-1/alpha) used by the clique hitting bounds.
double reach_equilibrium_level(std::size_t n, double lambda, double alpha);

struct ProbabilityBounds {
    double lower;
    double upper;
};

/// Bounds on the probability that the clique chain started from one
/// infected vertex reaches reach_equilibrium_level:
/// (lambda n / 2)^level <= p <= 2^(1 - (2 lambda n)^(-1/alpha)), upper capped
/// at 1. Requires alpha > 0 and 1 <= level <= n/2.
ProbabilityBounds reach_equilibrium_prob_bounds(std::size_t n, double lambda, double alpha);

/// Expected maximum of n independent Exp(lambda) variables, H_n / lambda.
double max_exponential_expectation(std::size_t n, double lambda);

enum class GraphKind { clique, star };
enum class ThresholdSide { fast, slow };

/// Threshold boundaries in lambda, natural logarithm throughout.
///
/// clique, alpha < 0: fast 1/n, slow ln(n)^(-alpha) / n
/// clique, alpha = 0: 1/n on both sides
/// clique, alpha > 0: fast n^(-1-alpha), slow n^(-1-alpha) ln(n)^alpha
/// star:              fast n^(-1/2 - alpha/(2(2+alpha))),
///                    slow fast * ln(n)^(4/(2+alpha))
double threshold_lambda(GraphKind kind, std::size_t n, double alpha, ThresholdSide side);

struct RegimeBoundary {
    GraphKind kind;
    double alpha;

    double fast(std::size_t n) const { return threshold_lambda(kind, n, alpha, ThresholdSide::fast); }
    double slow(std::size_t n) const { return threshold_lambda(kind, n, alpha, ThresholdSide::slow); }
};

}  // namespace nlsis
