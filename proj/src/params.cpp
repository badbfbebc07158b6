#include "nlsis/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace nlsis {

ProcessParams::ProcessParams(double lambda, double alpha) : lambda_(lambda), alpha_(alpha)
{
    if (!std::isfinite(lambda) || lambda < 0.0)
        throw std::invalid_argument("lambda must be a finite value >= 0");
    if (!std::isfinite(alpha) || alpha <= -1.0)
        throw std::invalid_argument("alpha must be > -1 (infection exponent)");
    if (alpha > kMaxAlpha)
        throw std::invalid_argument("alpha must be <= " + std::to_string(kMaxAlpha) +
                                    " (supported numeric envelope)");
}

double infection_rate(const ProcessParams& params, std::size_t infected_neighbors)
{
    if (infected_neighbors == 0)
        return 0.0;
    if (infected_neighbors == 1)
        return params.lambda();
    const double k = static_cast<double>(infected_neighbors);
    return params.lambda() * std::exp((1.0 + params.alpha()) * std::log(k));
}

void validate_vertex_count(std::size_t n, const char* what)
{
    if (n < 1)
        throw std::invalid_argument(std::string(what) + " must be >= 1");
    if (n > kMaxVertices)
        throw std::invalid_argument(std::string(what) + " exceeds the supported maximum of " +
                                    std::to_string(kMaxVertices));
}

}  // namespace nlsis
