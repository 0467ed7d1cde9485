#pragma once

#include <algorithm>
#include <random>

#include "specjoin/errors.hpp"

namespace specjoin {

namespace detail {

template <class Rng>
std::vector<Edge> random_regular_edges(std::size_t m, std::size_t r, Rng& rng) {
    std::vector<Vertex> stubs;
    stubs.reserve(m * r);
    for (std::size_t v = 0; v < m; ++v)
        for (std::size_t k = 0; k < r; ++k) stubs.push_back(static_cast<Vertex>(v));

    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::shuffle(stubs.begin(), stubs.end(), rng);
        std::vector<Edge> edges;
        edges.reserve(stubs.size() / 2);
        bool ok = true;
        for (std::size_t i = 0; ok && i < stubs.size(); i += 2) {
            auto u = stubs[i], v = stubs[i + 1];
            if (u == v) ok = false;
            edges.emplace_back(std::min(u, v), std::max(u, v));
        }
        if (!ok) continue;
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
        return edges;
    }
    throw Error("make_random_regular: configuration model did not produce a simple graph");
}

}  // namespace detail

template <class Rng>
Graph make_random_regular(std::size_t m, std::size_t r, Rng& rng) {
    if (m == 0 || r >= m || (r * m) % 2 != 0)
        throw InvalidArgument("make_random_regular: need r < m and r*m even");
    // Dense degrees pair poorly; take the complement of a sparse one instead.
    if (2 * r > m - 1) {
        const std::size_t rc = m - 1 - r;
        auto sparse = detail::random_regular_edges(m, rc, rng);
        std::vector<Edge> edges;
        for (Vertex u = 0; u < m; ++u)
            for (Vertex v = u + 1; v < m; ++v)
                if (!std::binary_search(sparse.begin(), sparse.end(), Edge{u, v})) edges.emplace_back(u, v);
        return Graph::from_edge_list(m, edges);
    }
    auto edges = detail::random_regular_edges(m, r, rng);
    return Graph::from_edge_list(m, edges);
}

}  // namespace specjoin
