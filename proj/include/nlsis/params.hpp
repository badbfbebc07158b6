#pragma once

#include <cstddef>
#include <cstdint>

namespace nlsis {

// Desk-scale envelope. Inside it every rate lambda * k^(1+alpha) * (n-k) is
// finite in double precision; inputs outside are rejected.
inline constexpr std::size_t kMaxVertices = 100000;
inline constexpr double kMaxAlpha = 4.0;

/// Infection coefficient and infection exponent of the contact process.
///
/// A susceptible vertex with k infected neighbours is infected at rate
/// lambda * k^(1+alpha); every infected vertex heals at rate 1.
/// lambda = 0 is accepted as the degenerate pure-death process.
class ProcessParams {
public:
    ProcessParams(double lambda, double alpha);

    double lambda() const noexcept { return lambda_; }
    double alpha() const noexcept { return alpha_; }

    friend bool operator==(const ProcessParams&, const ProcessParams&) = default;

private:
    double lambda_;
    double alpha_;
};

/// Rate at which a susceptible vertex with `infected_neighbors` infected
/// neighbours becomes infected. Exactly 0 for k = 0, for every alpha.
double infection_rate(const ProcessParams& params, std::size_t infected_neighbors);

void validate_vertex_count(std::size_t n, const char* what);

}  // namespace nlsis
