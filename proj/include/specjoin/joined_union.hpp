#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "specjoin/graph.hpp"
#include "specjoin/spectra.hpp"

namespace specjoin {

/// Adjacency eigenvalues supplied directly; the component cannot be
/// materialized, so such specs only support the structural path.
struct ExplicitSpectrum {
    std::vector<double> adjacency_eigenvalues;
};

using AdjacencySource = std::variant<ClosedForm, Graph, ExplicitSpectrum>;

/// One regular component G_i of a joined union.
struct Component {
    std::size_t order;
    std::size_t regularity;
    AdjacencySource source;

    static Component complete(std::size_t m);
    static Component empty(std::size_t m);
    static Component cycle(std::size_t m);
    /// Throws NonRegularComponent when `g` is not regular.
    static Component from_graph(Graph g);
    /// `eigenvalues` must contain `regularity` as its largest value.
    static Component from_spectrum(std::size_t regularity, std::vector<double> eigenvalues);

    /// Short label such as "K5", "E3", "C6", "G(7,2)" or "S(4,1)".
    std::string label() const;
    /// Adjacency spectrum: closed form for K/E/C, Jacobi for explicit graphs.
    Spectrum adjacency_spectrum() const;
    Graph materialize() const;
};

/// Outer graph G of order n plus one regular component per outer vertex.
struct JoinedUnionSpec {
    Graph outer;
    std::vector<Component> components;

    std::size_t order() const;
    /// Checks the component count, declared regularities, r_i <= n_i - 1 and
    /// that no vertex of the realized graph is isolated.
    void validate() const;
};

/// alpha_i = sum of n_j over outer neighbors v_j of v_i.
std::vector<std::size_t> alphas(const JoinedUnionSpec& spec);

/// Equitable quotient matrix of the normalized Laplacian of the joined union.
/// Generally nonsymmetric; `block_sizes` symmetrize it by diagonal similarity.
struct QuotientMatrix {
    std::size_t order = 0;
    std::vector<double> entries;  // row-major
    std::vector<std::size_t> block_sizes;

    double operator()(std::size_t i, std::size_t j) const { return entries[i * order + j]; }
    /// D^{1/2} M D^{-1/2} with D = diag(block_sizes).
    SymMatrix symmetrized() const;
};

QuotientMatrix quotient_matrix(const JoinedUnionSpec& spec);
std::vector<double> quotient_eigenvalues(const QuotientMatrix& q);

/// Block eigenvalues 1 - lambda_ik / (r_i + alpha_i) for every non-Perron
/// adjacency eigenvalue of every component, followed by the quotient
/// eigenvalues. Total equals the order of the joined union.
Spectrum structural_spectrum(const JoinedUnionSpec& spec);

/// Only the block part (tagged structural) or only the quotient part.
Spectrum block_spectrum(const JoinedUnionSpec& spec);

/// Explicit joined union graph for the oracle path.
Graph materialize(const JoinedUnionSpec& spec);

/// Regular graph g viewed as the trivial joined union K_1[g].
JoinedUnionSpec single_component_spec(const Graph& g);

}  // namespace specjoin
