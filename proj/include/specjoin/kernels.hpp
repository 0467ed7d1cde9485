#pragma once

// Data-parallel kernels. Every kernel has a serial reference next to the
// OpenMP version; both must produce identical results (tests/test_kernels.cpp)
// and tools/specjoin_bench.cpp times one against the other.

#include <cstdint>
#include <vector>

#include "specjoin/graph.hpp"
#include "specjoin/spectra.hpp"

namespace specjoin::kernels {

SymMatrix normalized_laplacian_serial(const Graph& g);
SymMatrix normalized_laplacian_parallel(const Graph& g);

/// Power graph of Z_n via subgroup containment of gcds.
Graph power_graph_serial(std::uint64_t n);
Graph power_graph_parallel(std::uint64_t n);

/// Applies `fn(i)` for i in [0, count) and stores results in order.
/// `threads` <= 0 uses the OpenMP default.
template <class Result, class Fn>
std::vector<Result> map_indexed(std::size_t count, Fn&& fn, int threads = 0);

template <class Result, class Fn>
std::vector<Result> map_indexed_serial(std::size_t count, Fn&& fn) {
    std::vector<Result> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(fn(i));
    return out;
}

/// Number of threads OpenMP would use by default (1 without OpenMP).
int default_threads();

}  // namespace specjoin::kernels

#include "specjoin/detail/map_indexed.ipp"
