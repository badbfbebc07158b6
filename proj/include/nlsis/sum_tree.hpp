#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace nlsis {

/// Complete binary tree of partial sums over nonnegative weights.
/// Point update and categorical sampling are O(log n). Internal nodes are
/// recomputed from their children on every update, so no rounding drift
/// accumulates over long runs.
class SumTree {
public:
    explicit SumTree(std::size_t size) : leaves_(1)
    {
        while (leaves_ < size)
            leaves_ <<= 1;
        nodes_.assign(2 * leaves_, 0.0);
        size_ = size;
    }

    std::size_t size() const noexcept { return size_; }
    double total() const noexcept { return nodes_[1]; }
    double weight(std::size_t i) const { return nodes_[leaves_ + i]; }

    void set(std::size_t i, double w)
    {
        std::size_t k = leaves_ + i;
        nodes_[k] = w;
        for (k >>= 1; k >= 1; k >>= 1)
            nodes_[k] = nodes_[2 * k] + nodes_[2 * k + 1];
    }

    /// Index i with prefix(i) <= target < prefix(i) + weight(i), for
    /// target in [0, total()). Always lands on a positive weight.
    std::size_t find(double target) const
    {
        if (!(nodes_[1] > 0.0))
            throw std::logic_error("SumTree::find on an all-zero tree");
        std::size_t k = 1;
        while (k < leaves_) {
            const double left = nodes_[2 * k];
            const double right = nodes_[2 * k + 1];
            if (left > 0.0 && (target < left || !(right > 0.0))) {
                k = 2 * k;
            } else {
                target -= left;
                k = 2 * k + 1;
            }
        }
        return k - leaves_;
    }

private:
    std::size_t leaves_;
    std::size_t size_ = 0;
    std::vector<double> nodes_;
};

}  // namespace nlsis
