#include "specjoin/kernels.hpp"

#include <cmath>
#include <limits>
#include <numeric>

#include "specjoin/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace specjoin::kernels {

namespace {

std::vector<double> inverse_sqrt_degrees(const Graph& g) {
    std::vector<double> out(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        const auto d = g.degree(v);
        if (d == 0) throw IsolatedVertex(v);
        out[v] = 1.0 / std::sqrt(static_cast<double>(d));
    }
    return out;
}

void fill_laplacian_row(const Graph& g, const std::vector<double>& inv_sqrt, std::size_t u, double* row) {
    row[u] = 1.0;
    for (Vertex v : g.neighbors(static_cast<Vertex>(u))) row[v] = -inv_sqrt[u] * inv_sqrt[v];
}

std::vector<std::uint64_t> gcd_table(std::uint64_t n) {
    std::vector<std::uint64_t> g(n);
    for (std::uint64_t x = 0; x < n; ++x) g[x] = std::gcd(x, n);  // gcd(0, n) = n
    return g;
}

// x ~ y iff <x> contains <y> or vice versa; in Z_n, <x> contains <y> iff
// gcd(x, n) divides gcd(y, n).
void fill_power_row(const std::vector<std::uint64_t>& g, std::uint64_t x, std::vector<Vertex>& row) {
    const auto n = g.size();
    for (std::uint64_t y = 0; y < n; ++y) {
        if (y == x) continue;
        if (g[y] % g[x] == 0 || g[x] % g[y] == 0) row.push_back(static_cast<Vertex>(y));
    }
}

void check_power_order(std::uint64_t n) {
    if (n < 2) throw InvalidArgument("power graph needs n >= 2");
    if (n > std::numeric_limits<Vertex>::max()) throw InvalidArgument("power graph order too large");
}

}  // namespace

SymMatrix normalized_laplacian_serial(const Graph& g) {
    const std::size_t n = g.order();
    const auto inv_sqrt = inverse_sqrt_degrees(g);
    std::vector<double> m(n * n, 0.0);
    for (std::size_t u = 0; u < n; ++u) fill_laplacian_row(g, inv_sqrt, u, &m[u * n]);
    return SymMatrix(n, std::move(m));
}

SymMatrix normalized_laplacian_parallel(const Graph& g) {
    const std::size_t n = g.order();
    const auto inv_sqrt = inverse_sqrt_degrees(g);
    std::vector<double> m(n * n, 0.0);
    const auto rows = static_cast<long long>(n);
#pragma omp parallel for schedule(static) if (n >= 256)
    for (long long u = 0; u < rows; ++u) fill_laplacian_row(g, inv_sqrt, static_cast<std::size_t>(u), &m[u * n]);
    return SymMatrix(n, std::move(m));
}

Graph power_graph_serial(std::uint64_t n) {
    check_power_order(n);
    const auto g = gcd_table(n);
    std::vector<std::vector<Vertex>> adj(n);
    for (std::uint64_t x = 0; x < n; ++x) fill_power_row(g, x, adj[x]);
    return Graph::from_adjacency(std::move(adj));
}

Graph power_graph_parallel(std::uint64_t n) {
    check_power_order(n);
    const auto g = gcd_table(n);
    std::vector<std::vector<Vertex>> adj(n);
    const auto rows = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 64) if (n >= 512)
    for (long long x = 0; x < rows; ++x) fill_power_row(g, static_cast<std::uint64_t>(x), adj[x]);
    return Graph::from_adjacency(std::move(adj));
}

int default_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace specjoin::kernels
