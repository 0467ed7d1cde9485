#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace specjoin {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph on vertices 0..order-1.
///
/// Immutable once built. Edges are kept both as a sorted list of pairs
/// (u < v) and as sorted per-vertex neighbor lists.
class Graph {
public:
    Graph() = default;

    /// Validating constructor: rejects out-of-range endpoints, self-loops and
    /// duplicate edges (in either orientation).
    static Graph from_edge_list(std::size_t order, std::span<const Edge> edges);

    /// Builds from per-vertex neighbor lists that are already known to be
    /// simple and symmetric. Only symmetry is checked, in debug builds.
    static Graph from_adjacency(std::vector<std::vector<Vertex>> adjacency);

    std::size_t order() const noexcept { return adjacency_.size(); }
    std::size_t size() const noexcept { return edges_.size(); }

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
    std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
    bool has_edge(Vertex u, Vertex v) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.edges_ == b.edges_ && a.order() == b.order(); }

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<Edge> edges_;
};

Graph make_complete(std::size_t m);
Graph make_empty(std::size_t m);
Graph make_cycle(std::size_t m);
/// K_{1,m-1}; vertex 0 is the center.
Graph make_star(std::size_t m);
Graph make_path(std::size_t m);

/// Joined union outer[parts_0, ..., parts_{n-1}].
///
/// Block i occupies the consecutive vertex range starting at
/// sum_{k<i} parts[k].order(). Within-block edges are copied; blocks i and j
/// are completely joined iff i ~ j in `outer`.
Graph joined_union(const Graph& outer, std::span<const Graph> parts);

/// Usual join g1 ▽ g2, i.e. joined_union(K_2, {g1, g2}).
Graph join(const Graph& g1, const Graph& g2);

std::vector<std::size_t> degrees(const Graph& g);
/// Common degree when every vertex has the same degree.
std::optional<std::size_t> is_regular(const Graph& g);
std::size_t components(const Graph& g);
bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);
/// Vertex count of each connected component, together with whether the
/// component is bipartite. Ordered by smallest vertex.
std::vector<std::pair<std::size_t, bool>> component_summary(const Graph& g);

/// Edge-list text format: first token N, then whitespace-separated 0-based
/// pairs "u v". Comments starting with '#' run to end of line.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

/// Random r-regular graph on m vertices by the configuration model with
/// restarts. Requires r < m and r*m even.
template <class Rng>
Graph make_random_regular(std::size_t m, std::size_t r, Rng& rng);

}  // namespace specjoin

#include "specjoin/detail/random_regular.ipp"
