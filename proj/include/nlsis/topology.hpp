#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace nlsis {

struct CliqueShape {
    std::size_t n;
};

/// Star with `leaves` leaves. Leaves are vertices 0..leaves-1, the center is
/// vertex `leaves`.
struct StarShape {
    std::size_t leaves;
};

struct GeneralShape {
    std::vector<std::vector<std::size_t>> adjacency;
};

enum class TopologyKind { clique, star, general };

/// Host graph. Immutable after construction, so replicas share it read-only.
class Topology {
public:
    static Topology clique(std::size_t n);
    static Topology star(std::size_t leaves);
    /// Rejects asymmetric lists, self-loops and duplicate entries.
    static Topology general(std::vector<std::vector<std::size_t>> adjacency);

    /// Undirected edge list: whitespace separated "u v" pairs, one per line,
    /// lines starting with '#' ignored. Vertex count is max index + 1.
    static Topology from_edge_list(std::istream& in);
    static Topology load_edge_list(const std::string& path);

    TopologyKind kind() const noexcept;
    std::size_t vertex_count() const noexcept;
    std::size_t degree(std::size_t v) const;
    std::size_t max_degree() const noexcept;

    /// Center vertex index; only meaningful for stars.
    std::size_t center() const;
    bool is_star_center(std::size_t v) const noexcept;

    /// Adjacency materialized as neighbour lists (stars and cliques included).
    Topology to_general() const;

    const std::variant<CliqueShape, StarShape, GeneralShape>& shape() const noexcept { return shape_; }

    template <typename F>
    void for_each_neighbor(std::size_t v, F&& f) const
    {
        if (const auto* c = std::get_if<CliqueShape>(&shape_)) {
            for (std::size_t u = 0; u < c->n; ++u)
                if (u != v)
                    f(u);
        } else if (const auto* s = std::get_if<StarShape>(&shape_)) {
            if (v == s->leaves) {
                for (std::size_t u = 0; u < s->leaves; ++u)
                    f(u);
            } else {
                f(s->leaves);
            }
        } else {
            for (std::size_t u : std::get<GeneralShape>(shape_).adjacency[v])
                f(u);
        }
    }

    /// Full O(V + E) symmetry / self-loop / duplicate check.
    bool is_symmetric() const;

private:
    explicit Topology(std::variant<CliqueShape, StarShape, GeneralShape> shape);

    std::variant<CliqueShape, StarShape, GeneralShape> shape_;
    std::size_t max_degree_ = 0;
};

std::string to_string(TopologyKind kind);

}  // namespace nlsis
