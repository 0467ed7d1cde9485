#include "specjoin/graph.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <queue>
#include <sstream>

#include "specjoin/errors.hpp"

namespace specjoin {

Graph Graph::from_edge_list(std::size_t order, std::span<const Edge> edges) {
    if (order > std::numeric_limits<Vertex>::max()) throw InvalidArgument("graph order too large");
    Graph g;
    g.adjacency_.resize(order);
    g.edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u >= order || v >= order)
            throw InvalidArgument("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for order " +
                                  std::to_string(order));
        if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
        g.edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    if (auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end()); dup != g.edges_.end())
        throw InvalidArgument("duplicate edge (" + std::to_string(dup->first) + "," + std::to_string(dup->second) + ")");
    for (auto [u, v] : g.edges_) {
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    for (auto& nb : g.adjacency_) std::sort(nb.begin(), nb.end());
    return g;
}

Graph Graph::from_adjacency(std::vector<std::vector<Vertex>> adjacency) {
    Graph g;
    g.adjacency_ = std::move(adjacency);
    std::size_t half = 0;
    for (auto& nb : g.adjacency_) {
        std::sort(nb.begin(), nb.end());
        half += nb.size();
    }
    g.edges_.reserve(half / 2);
    for (Vertex u = 0; u < g.adjacency_.size(); ++u)
        for (Vertex v : g.adjacency_[u])
            if (u < v) g.edges_.emplace_back(u, v);
    assert(2 * g.edges_.size() == half);
    return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    const auto& nb = adjacency_.at(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

Graph make_complete(std::size_t m) {
    if (m < 1) throw InvalidArgument("make_complete: m must be >= 1");
    std::vector<std::vector<Vertex>> adj(m);
    for (Vertex u = 0; u < m; ++u)
        for (Vertex v = 0; v < m; ++v)
            if (u != v) adj[u].push_back(v);
    return Graph::from_adjacency(std::move(adj));
}

Graph make_empty(std::size_t m) {
    if (m < 1) throw InvalidArgument("make_empty: m must be >= 1");
    return Graph::from_adjacency(std::vector<std::vector<Vertex>>(m));
}

Graph make_cycle(std::size_t m) {
    if (m < 3) throw InvalidArgument("make_cycle: m must be >= 3");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < m; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % m));
    return Graph::from_edge_list(m, edges);
}

Graph make_star(std::size_t m) {
    if (m < 1) throw InvalidArgument("make_star: m must be >= 1");
    std::vector<Edge> edges;
    for (Vertex v = 1; v < m; ++v) edges.emplace_back(0, v);
    return Graph::from_edge_list(m, edges);
}

Graph make_path(std::size_t m) {
    if (m < 1) throw InvalidArgument("make_path: m must be >= 1");
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < m; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edge_list(m, edges);
}

Graph joined_union(const Graph& outer, std::span<const Graph> parts) {
    const std::size_t n = outer.order();
    if (parts.size() != n)
        throw InvalidArgument("joined_union: expected " + std::to_string(n) + " parts, got " +
                              std::to_string(parts.size()));
    std::vector<std::size_t> offset(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (parts[i].order() < 1) throw InvalidArgument("joined_union: part order must be >= 1");
        offset[i + 1] = offset[i] + parts[i].order();
    }
    const std::size_t total = offset[n];
    if (total > std::numeric_limits<Vertex>::max()) throw InvalidArgument("joined_union: order too large");

    std::vector<std::vector<Vertex>> adj(total);
    for (std::size_t i = 0; i < n; ++i) {
        const auto base = static_cast<Vertex>(offset[i]);
        for (Vertex local = 0; local < parts[i].order(); ++local) {
            auto& row = adj[base + local];
            for (Vertex nb : parts[i].neighbors(local)) row.push_back(base + nb);
            for (Vertex j : outer.neighbors(static_cast<Vertex>(i)))
                for (std::size_t w = offset[j]; w < offset[j + 1]; ++w) row.push_back(static_cast<Vertex>(w));
        }
    }
    return Graph::from_adjacency(std::move(adj));
}

Graph join(const Graph& g1, const Graph& g2) {
    const Graph parts[] = {g1, g2};
    return joined_union(make_complete(2), parts);
}

std::vector<std::size_t> degrees(const Graph& g) {
    std::vector<std::size_t> out(g.order());
    for (Vertex v = 0; v < g.order(); ++v) out[v] = g.degree(v);
    return out;
}

std::optional<std::size_t> is_regular(const Graph& g) {
    if (g.order() == 0) return std::nullopt;
    const std::size_t r = g.degree(0);
    for (Vertex v = 1; v < g.order(); ++v)
        if (g.degree(v) != r) return std::nullopt;
    return r;
}

std::vector<std::pair<std::size_t, bool>> component_summary(const Graph& g) {
    std::vector<int> color(g.order(), -1);
    std::vector<std::pair<std::size_t, bool>> out;
    std::queue<Vertex> frontier;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (color[s] != -1) continue;
        std::size_t count = 0;
        bool bipartite = true;
        color[s] = 0;
        frontier.push(s);
        while (!frontier.empty()) {
            const Vertex u = frontier.front();
            frontier.pop();
            ++count;
            for (Vertex w : g.neighbors(u)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[u];
                    frontier.push(w);
                } else if (color[w] == color[u]) {
                    bipartite = false;
                }
            }
        }
        out.emplace_back(count, bipartite);
    }
    return out;
}

std::size_t components(const Graph& g) { return component_summary(g).size(); }

bool is_connected(const Graph& g) { return components(g) == 1; }

bool is_bipartite(const Graph& g) {
    const auto summary = component_summary(g);
    return std::all_of(summary.begin(), summary.end(), [](const auto& c) { return c.second; });
}

Graph read_edge_list(std::istream& in) {
    std::stringstream cleaned;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        cleaned << line << '\n';
    }
    long long order = -1;
    if (!(cleaned >> order) || order < 0) throw ParseError("edge list: missing or invalid vertex count");
    std::vector<Edge> edges;
    long long u = 0, v = 0;
    while (cleaned >> u) {
        if (!(cleaned >> v)) throw ParseError("edge list: dangling vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= order || v >= order)
            throw ParseError("edge list: vertex out of range in pair " + std::to_string(u) + " " + std::to_string(v));
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (!cleaned.eof()) throw ParseError("edge list: non-numeric token");
    try {
        return Graph::from_edge_list(static_cast<std::size_t>(order), edges);
    } catch (const InvalidArgument& e) {
        throw ParseError(std::string("edge list: ") + e.what());
    }
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open edge list '" + path + "'");
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.order() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace specjoin
