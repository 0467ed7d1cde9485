#pragma once

#include <cstddef>
#include <random>

#include "specjoin/joined_union.hpp"

namespace specjoin {

using SpecRng = std::mt19937_64;

/// Complete, empty, cycle or random regular component of order 1..max_order.
Component random_component(SpecRng& rng, std::size_t max_order = 6);

/// Outer graph of order 1..max_outer with edge probability 1/2; redrawn until
/// the joined union has no isolated vertex.
JoinedUnionSpec random_joined_union(SpecRng& rng, std::size_t max_outer = 8, std::size_t max_order = 6);

/// G1 ▽ G2 with both components drawn by random_component.
JoinedUnionSpec random_join(SpecRng& rng, std::size_t max_order = 6);

}  // namespace specjoin
