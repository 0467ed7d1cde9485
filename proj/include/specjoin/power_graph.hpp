#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "specjoin/graph.hpp"
#include "specjoin/joined_union.hpp"
#include "specjoin/spectra.hpp"

namespace specjoin::power {

using u64 = std::uint64_t;

inline constexpr u64 kDefaultOracleMax = 2000;
inline constexpr u64 kDefaultReportMax = 5000;

/// P(Z_n) on vertices 0..n-1: x ~ y iff gcd(x,n) | gcd(y,n) or the reverse.
Graph power_graph_direct(u64 n);

/// Proper divisors (1 < d < n) with edges by divisibility.
Graph divisor_graph(u64 n);

/// P(Z_n) = H[K_{phi(n)+1}, K_{phi(d_1)}, ..., K_{phi(d_t)}] with H = K_1 ▽ G_n.
///
/// Block 0 holds the identity and the generators; blocks 1..t follow the
/// proper divisors in ascending order and hold the elements of that order.
struct PowerGraphDecomposition {
    u64 n = 0;
    std::vector<u64> proper_divisors;
    Graph divisor_graph;
    Graph outer;
    std::vector<std::size_t> block_orders;
    std::vector<std::size_t> block_regularities;

    std::size_t t() const noexcept { return proper_divisors.size(); }
    /// Index of the block holding elements of order d (0 for d in {1, n}).
    std::size_t block_of_order(u64 d) const;
};

PowerGraphDecomposition decompose(u64 n);
JoinedUnionSpec realize(const PowerGraphDecomposition& dec);

/// Builds the element-to-block bijection and checks it maps the edges of
/// power_graph_direct(n) exactly onto those of the materialized joined union.
bool isomorphism_check(u64 n);

/// Structural spectrum of P(Z_n); never materializes the graph.
Spectrum power_spectrum(u64 n);

struct MultiplicityFloor {
    std::size_t multiplicity;  // of n/(n-1), counted at 1e-7
    u64 phi;
    bool floor_holds;
    bool equality;
};

MultiplicityFloor multiplicity_floor_check(u64 n);

/// Coefficients of the cubic x (x^2 - b x + c) whose roots are the quotient
/// eigenvalues of P(Z_pq), evaluated from the printed expressions.
struct PqPolynomial {
    double b;
    double c;

    double operator()(double x) const { return x * (x * x - b * x + c); }
    /// Roots of the quadratic factor, ascending.
    std::pair<double, double> quadratic_roots() const;
};

PqPolynomial pq_polynomial(u64 p, u64 q);
/// Closed-form spectrum of P(Z_pq) for distinct primes p, q.
Spectrum spectrum_pq_closed(u64 p, u64 q);

enum class Family { prime_power, pq, pqr, even_pq };

std::string to_string(Family f);
Family family_from_string(const std::string& name);
/// Members n >= 3 of the family up to `bound`, ascending.
std::vector<u64> family_members(Family f, u64 bound);

struct FamilyCase {
    u64 n = 0;
    std::size_t order = 0;
    bool oracle_run = false;
    double deviation = 0.0;  // structural vs oracle (or closed form when no oracle)
    bool pass = true;
};

/// A printed per-family quantity that disagrees with its recomputation.
struct PrintedMismatch {
    u64 n = 0;
    std::string quantity;
    double printed = 0.0;
    double recomputed = 0.0;
};

struct FamilyReport {
    Family family;
    u64 bound = 0;
    std::vector<FamilyCase> cases;
    std::vector<PrintedMismatch> mismatches;
    std::size_t printed_checks = 0;  // number of printed quantities compared

    bool all_pass() const;
};

struct ReportOptions {
    u64 oracle_max = kDefaultOracleMax;
    u64 report_max = kDefaultReportMax;
    double tol = kCompareTolerance;
    int threads = 0;
};

FamilyReport family_report(Family family, u64 bound, const ReportOptions& options = {});

/// Printed-versus-recomputed checks for one n (empty when all agree).
/// Exposed for tests; family_report calls these per member.
std::vector<PrintedMismatch> printed_checks_pqr(u64 n, std::size_t* checked = nullptr);
std::vector<PrintedMismatch> printed_checks_even_pq(u64 n, std::size_t* checked = nullptr);
/// Block eigenvalues as displayed in the general statement, with the
/// denominator d + alpha - 1, against the engine's 1 + 1/(r + alpha).
std::vector<PrintedMismatch> printed_checks_block_statement(u64 n, std::size_t* checked = nullptr);

}  // namespace specjoin::power
