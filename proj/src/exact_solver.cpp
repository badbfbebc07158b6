#include "nlsis/exact_solver.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace nlsis {

namespace {

void check_size(std::size_t states)
{
    if (states > kMaxExactStates)
        throw std::invalid_argument("exact solve supports at most " + std::to_string(kMaxExactStates) +
                                    " states, got " + std::to_string(states));
}

bool use_dense(SolveMethod method)
{
    return method == SolveMethod::dense;
}

double finite_or_throw(double value)
{
    if (!std::isfinite(value))
        throw std::overflow_error("expected survival time overflows double precision");
    return value;
}

using DenseMatrix = Eigen::MatrixXd;
using DenseVector = Eigen::VectorXd;

DenseVector dense_solve(const DenseMatrix& a, const DenseVector& rhs)
{
    const Eigen::PartialPivLU<DenseMatrix> lu(a);
    DenseVector x = lu.solve(rhs);
    if (!x.allFinite())
        throw std::logic_error("singular first-step system");
    return x;
}

double clique_dense(std::size_t n, const ProcessParams& params, std::size_t init)
{
    // Unknowns tau(1..n) at indices 0..n-1.
    DenseMatrix a = DenseMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    const DenseVector rhs = DenseVector::Ones(static_cast<Eigen::Index>(n));
    for (std::size_t i = 1; i <= n; ++i) {
        const auto row = static_cast<Eigen::Index>(i - 1);
        const double up = infection_rate(params, i) * static_cast<double>(n - i);
        const double down = static_cast<double>(i);
        a(row, row) = up + down;
        if (i < n)
            a(row, row + 1) = -up;
        if (i > 1)
            a(row, row - 1) = -down;
    }
    return dense_solve(a, rhs)(static_cast<Eigen::Index>(init - 1));
}

double clique_structured(std::size_t n, const ProcessParams& params, std::size_t init)
{
    // m[k]: expected time to first reach k-1 from k. Every term is positive.
    std::vector<double> m(n + 2, 0.0);
    for (std::size_t k = n; k >= 1; --k) {
        const double up = infection_rate(params, k) * static_cast<double>(n - k);
        const double down = static_cast<double>(k);
        m[k] = 1.0 / down + (up / down) * m[k + 1];
    }
    double total = 0.0;
    for (std::size_t k = 1; k <= init; ++k)
        total += m[k];
    return total;
}

double star_dense(std::size_t leaves, const ProcessParams& params, const StarState& init)
{
    // State (I, c) sits at index 2I + c - 1; (0, healthy) is eliminated.
    const std::size_t size = 2 * (leaves + 1) - 1;
    auto index = [](std::size_t i, bool c) { return static_cast<Eigen::Index>(2 * i + (c ? 1 : 0) - 1); };
    DenseMatrix a = DenseMatrix::Zero(static_cast<Eigen::Index>(size), static_cast<Eigen::Index>(size));
    const DenseVector rhs = DenseVector::Ones(static_cast<Eigen::Index>(size));
    const double lambda = params.lambda();
    for (std::size_t i = 0; i <= leaves; ++i) {
        const double heal = static_cast<double>(i);
        {
            const auto row = index(i, true);
            const double leaf_up = lambda * static_cast<double>(leaves - i);
            a(row, row) = leaf_up + heal + 1.0;
            if (i < leaves)
                a(row, index(i + 1, true)) = -leaf_up;
            if (i > 0) {
                a(row, index(i - 1, true)) = -heal;
                a(row, index(i, false)) = -1.0;
            }
        }
        if (i > 0) {
            const auto row = index(i, false);
            const double center_up = infection_rate(params, i);
            a(row, row) = heal + center_up;
            a(row, index(i, true)) = -center_up;
            if (i > 1)
                a(row, index(i - 1, false)) = -heal;
        }
    }
    return dense_solve(a, rhs)(index(init.infected_leaves, init.center_infected));
}

double star_structured(std::size_t leaves, const ProcessParams& params, const StarState& init)
{
    // Level I carries x_I = (tau(I, healthy), tau(I, infected)):
    //   A_I x_{I-1} + B_I x_I + C_I x_{I+1} = (1, 1).
    // Level 0 pins tau(0, healthy) = 0 through its first row.
    using Mat = Eigen::Matrix2d;
    using Vec = Eigen::Vector2d;
    const double lambda = params.lambda();
    std::vector<Mat> c_prime(leaves + 1);
    std::vector<Vec> d_prime(leaves + 1);
    for (std::size_t i = 0; i <= leaves; ++i) {
        const double heal = static_cast<double>(i);
        const double leaf_up = lambda * static_cast<double>(leaves - i);
        const double center_up = infection_rate(params, i);
        Mat b;
        Vec r;
        if (i == 0) {
            b << 1.0, 0.0, -1.0, leaf_up + 1.0;
            r << 0.0, 1.0;
        } else {
            b << heal + center_up, -center_up, -1.0, leaf_up + heal + 1.0;
            r << 1.0, 1.0;
        }
        Mat c = Mat::Zero();
        c(1, 1) = -leaf_up;
        if (i > 0) {
            // A_I = -I * Identity
            b += heal * c_prime[i - 1];
            r += heal * d_prime[i - 1];
        }
        const Mat b_inv = b.inverse();
        c_prime[i] = b_inv * c;
        d_prime[i] = b_inv * r;
    }
    Vec x = d_prime[leaves];
    for (std::size_t i = leaves; i > init.infected_leaves; --i)
        x = d_prime[i - 1] - c_prime[i - 1] * x;
    return init.center_infected ? x(1) : x(0);
}

}  // namespace

double expected_survival_exact_small(const CliqueChain& chain, const ProcessParams& params, const CliqueState& init,
                                     SolveMethod method)
{
    validate_vertex_count(chain.n, "clique size n");
    validate_state(chain, init);
    const std::size_t states = chain.n + 1;
    check_size(states);
    if (init.infected == 0)
        return 0.0;
    return finite_or_throw(use_dense(method) ? clique_dense(chain.n, params, init.infected)
                                                     : clique_structured(chain.n, params, init.infected));
}

double expected_survival_exact_small(const StarChain& chain, const ProcessParams& params, const StarState& init,
                                     SolveMethod method)
{
    validate_vertex_count(chain.leaves, "star leaf count n");
    validate_state(chain, init);
    const std::size_t states = 2 * (chain.leaves + 1);
    check_size(states);
    if (init.infected_leaves == 0 && !init.center_infected)
        return 0.0;
    return finite_or_throw(use_dense(method) ? star_dense(chain.leaves, params, init)
                                                     : star_structured(chain.leaves, params, init));
}

}  // namespace nlsis
