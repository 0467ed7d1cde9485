#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "specjoin/graph.hpp"

namespace specjoin {

inline constexpr double kGroupTolerance = 1e-7;
inline constexpr double kCompareTolerance = 1e-8;
inline constexpr double kSymmetryTolerance = 1e-12;

/// Dense real symmetric matrix, row-major. Symmetry is checked on construction.
class SymMatrix {
public:
    SymMatrix() = default;
    SymMatrix(std::size_t order, std::vector<double> entries);

    static SymMatrix zeros(std::size_t order) { return SymMatrix(order, std::vector<double>(order * order, 0.0)); }

    std::size_t order() const noexcept { return order_; }
    double operator()(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }
    std::span<const double> data() const noexcept { return entries_; }
    double trace() const;

private:
    std::size_t order_ = 0;
    std::vector<double> entries_;
};

enum class Source { structural, quotient, closed_form, oracle, mixed };

std::string_view to_string(Source s);
Source source_from_string(std::string_view name);

struct Eigenvalue {
    double value;
    Source source;
};

/// One row of the grouped presentation of a spectrum.
struct SpectrumPair {
    double value;
    std::size_t multiplicity;
    Source source;
    bool operator==(const SpectrumPair&) const = default;
};

/// Multiset of real eigenvalues, kept flat and sorted.
///
/// Grouping into (value, multiplicity) pairs is a presentation step and never
/// feeds comparisons, which always run on the flat list.
class Spectrum {
public:
    Spectrum() = default;
    explicit Spectrum(std::vector<Eigenvalue> values);
    Spectrum(std::span<const double> values, Source source);

    std::size_t total() const noexcept { return values_.size(); }
    const std::vector<Eigenvalue>& entries() const noexcept { return values_; }
    std::vector<double> values() const;
    double min() const;
    double max() const;
    double sum() const;

    /// Number of entries within `tol` of `x`.
    std::size_t count_near(double x, double tol = kGroupTolerance) const;

    std::vector<SpectrumPair> grouped(double tol = kGroupTolerance) const;

    /// Same values, every entry retagged.
    Spectrum retagged(Source source) const;
    Spectrum merged(const Spectrum& other) const;

private:
    std::vector<Eigenvalue> values_;
};

struct SpectrumComparison {
    double deviation;
    bool pass;
};

/// Dense normalized Laplacian: 1 on the diagonal, -1/sqrt(d_i d_j) on edges.
/// Throws IsolatedVertex for a degree-0 vertex.
SymMatrix normalized_laplacian(const Graph& g);
SymMatrix adjacency_matrix(const Graph& g);

struct JacobiResult {
    std::vector<double> eigenvalues;  // ascending
    int sweeps;
    double off_norm;
};

inline constexpr int kJacobiMaxSweeps = 100;

/// Cyclic Jacobi. Stops once the off-diagonal Frobenius norm falls below
/// 1e-12 * (diagonal norm + 1); throws NoConvergence after kJacobiMaxSweeps.
JacobiResult jacobi_eigenvalues(const SymMatrix& m, int max_sweeps = kJacobiMaxSweeps);
std::vector<double> eigenvalues_symmetric(const SymMatrix& m);

enum class ClosedFormKind { complete, empty, cycle };

std::string_view to_string(ClosedFormKind k);

struct ClosedForm {
    ClosedFormKind kind;
    std::size_t order;

    std::size_t regularity() const;
    Graph graph() const;
};

Spectrum adjacency_spectrum_closed(const ClosedForm& form);

/// Greedy clustering of an ascending list: a value joins the current cluster
/// when it lies within `tol` of the running cluster mean.
std::vector<SpectrumPair> group_multiplicities(std::span<const double> sorted, double tol = kGroupTolerance,
                                               Source source = Source::oracle);

/// Max elementwise deviation of the flattened sorted lists.
/// Throws TotalMismatch when the totals differ.
SpectrumComparison compare_spectra(const Spectrum& a, const Spectrum& b, double tol = kCompareTolerance);

/// Brute-force path: materialized graph, dense normalized Laplacian, Jacobi.
Spectrum oracle_spectrum(const Graph& g);

}  // namespace specjoin
