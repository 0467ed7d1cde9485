#include "specjoin/random_specs.hpp"

#include <vector>

#include "specjoin/errors.hpp"

namespace specjoin {

namespace {

std::size_t uniform(SpecRng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

Component random_component(SpecRng& rng, std::size_t max_order) {
    if (max_order < 1) throw InvalidArgument("random_component: max_order must be >= 1");
    for (;;) {
        const std::size_t m = uniform(rng, 1, max_order);
        switch (uniform(rng, 0, 3)) {
            case 0: return Component::complete(m);
            case 1: return Component::empty(m);
            case 2:
                if (m < 3) continue;
                return Component::cycle(m);
            default: {
                std::vector<std::size_t> degrees;
                for (std::size_t r = 0; r < m; ++r)
                    if ((r * m) % 2 == 0) degrees.push_back(r);
                const auto r = degrees[uniform(rng, 0, degrees.size() - 1)];
                return Component::from_graph(make_random_regular(m, r, rng));
            }
        }
    }
}

JoinedUnionSpec random_joined_union(SpecRng& rng, std::size_t max_outer, std::size_t max_order) {
    if (max_outer < 1) throw InvalidArgument("random_joined_union: max_outer must be >= 1");
    for (;;) {
        const std::size_t k = uniform(rng, 1, max_outer);
        std::vector<Edge> edges;
        for (Vertex u = 0; u < k; ++u)
            for (Vertex v = u + 1; v < k; ++v)
                if (uniform(rng, 0, 1) == 1) edges.emplace_back(u, v);
        JoinedUnionSpec spec{Graph::from_edge_list(k, edges), {}};
        for (std::size_t i = 0; i < k; ++i) spec.components.push_back(random_component(rng, max_order));
        try {
            spec.validate();
            return spec;
        } catch (const IsolatedVertex&) {
        }
    }
}

JoinedUnionSpec random_join(SpecRng& rng, std::size_t max_order) {
    auto g1 = random_component(rng, max_order);
    auto g2 = random_component(rng, max_order);
    return {make_complete(2), {std::move(g1), std::move(g2)}};
}

}  // namespace specjoin
