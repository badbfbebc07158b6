#include "nlsis/topology.hpp"

#include "nlsis/params.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace nlsis {

Topology::Topology(std::variant<CliqueShape, StarShape, GeneralShape> shape) : shape_(std::move(shape))
{
    if (const auto* c = std::get_if<CliqueShape>(&shape_)) {
        max_degree_ = c->n - 1;
    } else if (const auto* s = std::get_if<StarShape>(&shape_)) {
        max_degree_ = s->leaves;
    } else {
        for (const auto& nb : std::get<GeneralShape>(shape_).adjacency)
            max_degree_ = std::max(max_degree_, nb.size());
    }
}

Topology Topology::clique(std::size_t n)
{
    validate_vertex_count(n, "clique size n");
    return Topology(CliqueShape{n});
}

Topology Topology::star(std::size_t leaves)
{
    validate_vertex_count(leaves, "star leaf count n");
    validate_vertex_count(leaves + 1, "star vertex count n+1");
    return Topology(StarShape{leaves});
}

Topology Topology::general(std::vector<std::vector<std::size_t>> adjacency)
{
    validate_vertex_count(adjacency.size(), "vertex count");
    const std::size_t n = adjacency.size();
    for (std::size_t v = 0; v < n; ++v) {
        auto sorted = adjacency[v];
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            const std::size_t u = sorted[i];
            if (u >= n)
                throw std::invalid_argument("adjacency of vertex " + std::to_string(v) +
                                            " references out-of-range vertex " + std::to_string(u));
            if (u == v)
                throw std::invalid_argument("self-loop at vertex " + std::to_string(v));
            if (i > 0 && sorted[i - 1] == u)
                throw std::invalid_argument("duplicate neighbour " + std::to_string(u) + " of vertex " +
                                            std::to_string(v));
        }
    }
    Topology t(GeneralShape{std::move(adjacency)});
    if (!t.is_symmetric())
        throw std::invalid_argument("adjacency is not symmetric (u lists v but v does not list u)");
    return t;
}

Topology Topology::from_edge_list(std::istream& in)
{
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    std::size_t max_index = 0;
    bool any = false;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::istringstream ls(line);
        long long u = -1;
        long long v = -1;
        std::string extra;
        if (!(ls >> u >> v) || (ls >> extra))
            throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                        ": expected exactly two integers");
        if (u < 0 || v < 0)
            throw std::invalid_argument("edge list line " + std::to_string(line_no) + ": negative vertex index");
        if (u == v)
            throw std::invalid_argument("edge list line " + std::to_string(line_no) + ": self-loop");
        const auto a = static_cast<std::size_t>(std::min(u, v));
        const auto b = static_cast<std::size_t>(std::max(u, v));
        if (!seen.emplace(a, b).second)
            throw std::invalid_argument("edge list line " + std::to_string(line_no) + ": duplicate edge " +
                                        std::to_string(a) + " " + std::to_string(b));
        if (b >= kMaxVertices)
            throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                        ": vertex index exceeds supported maximum");
        edges.emplace_back(a, b);
        max_index = std::max(max_index, b);
        any = true;
    }
    if (!any)
        throw std::invalid_argument("edge list contains no edges");
    std::vector<std::vector<std::size_t>> adjacency(max_index + 1);
    for (const auto& [a, b] : edges) {
        adjacency[a].push_back(b);
        adjacency[b].push_back(a);
    }
    return general(std::move(adjacency));
}

Topology Topology::load_edge_list(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open edge list file '" + path + "'");
    return from_edge_list(in);
}

TopologyKind Topology::kind() const noexcept
{
    if (std::holds_alternative<CliqueShape>(shape_))
        return TopologyKind::clique;
    if (std::holds_alternative<StarShape>(shape_))
        return TopologyKind::star;
    return TopologyKind::general;
}

std::size_t Topology::vertex_count() const noexcept
{
    if (const auto* c = std::get_if<CliqueShape>(&shape_))
        return c->n;
    if (const auto* s = std::get_if<StarShape>(&shape_))
        return s->leaves + 1;
    return std::get<GeneralShape>(shape_).adjacency.size();
}

std::size_t Topology::degree(std::size_t v) const
{
    if (v >= vertex_count())
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    if (const auto* c = std::get_if<CliqueShape>(&shape_))
        return c->n - 1;
    if (const auto* s = std::get_if<StarShape>(&shape_))
        return v == s->leaves ? s->leaves : 1;
    return std::get<GeneralShape>(shape_).adjacency[v].size();
}

std::size_t Topology::max_degree() const noexcept { return max_degree_; }

std::size_t Topology::center() const
{
    if (const auto* s = std::get_if<StarShape>(&shape_))
        return s->leaves;
    throw std::logic_error("center() is only defined for star topologies");
}

bool Topology::is_star_center(std::size_t v) const noexcept
{
    const auto* s = std::get_if<StarShape>(&shape_);
    return s != nullptr && v == s->leaves;
}

Topology Topology::to_general() const
{
    std::vector<std::vector<std::size_t>> adjacency(vertex_count());
    for (std::size_t v = 0; v < adjacency.size(); ++v)
        for_each_neighbor(v, [&](std::size_t u) { adjacency[v].push_back(u); });
    return Topology(GeneralShape{std::move(adjacency)});
}

bool Topology::is_symmetric() const
{
    const std::size_t n = vertex_count();
    std::vector<std::vector<std::size_t>> sorted(n);
    for (std::size_t v = 0; v < n; ++v) {
        for_each_neighbor(v, [&](std::size_t u) { sorted[v].push_back(u); });
        std::sort(sorted[v].begin(), sorted[v].end());
        if (std::adjacent_find(sorted[v].begin(), sorted[v].end()) != sorted[v].end())
            return false;
    }
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t u : sorted[v])
            if (u >= n || u == v || !std::binary_search(sorted[u].begin(), sorted[u].end(), v))
                return false;
    return true;
}

std::string to_string(TopologyKind kind)
{
    switch (kind) {
    case TopologyKind::clique: return "clique";
    case TopologyKind::star: return "star";
    case TopologyKind::general: return "general";
    }
    return "unknown";
}

}  // namespace nlsis
