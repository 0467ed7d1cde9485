#include "specjoin/power_graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "specjoin/errors.hpp"
#include "specjoin/kernels.hpp"
#include "specjoin/numtheory.hpp"

namespace specjoin::power {

using numtheory::FactoredInteger;
using numtheory::totient;

Graph power_graph_direct(u64 n) { return kernels::power_graph_parallel(n); }

Graph divisor_graph(u64 n) {
    if (n < 2) throw InvalidArgument("divisor_graph: n must be >= 2");
    const auto d = numtheory::proper_divisors(n);
    std::vector<Edge> edges;
    for (Vertex i = 0; i < d.size(); ++i)
        for (Vertex j = i + 1; j < d.size(); ++j)
            if (d[j] % d[i] == 0) edges.emplace_back(i, j);
    return Graph::from_edge_list(d.size(), edges);
}

std::size_t PowerGraphDecomposition::block_of_order(u64 d) const {
    if (d == 1 || d == n) return 0;
    const auto it = std::lower_bound(proper_divisors.begin(), proper_divisors.end(), d);
    if (it == proper_divisors.end() || *it != d)
        throw InvalidArgument(std::to_string(d) + " is not a divisor of " + std::to_string(n));
    return static_cast<std::size_t>(it - proper_divisors.begin()) + 1;
}

PowerGraphDecomposition decompose(u64 n) {
    if (n < 3) throw InvalidArgument("decompose: n must be >= 3");
    PowerGraphDecomposition dec;
    dec.n = n;
    dec.proper_divisors = numtheory::proper_divisors(n);
    dec.divisor_graph = divisor_graph(n);

    const std::size_t t = dec.t();
    std::vector<Edge> edges;
    for (Vertex i = 1; i <= t; ++i) edges.emplace_back(0, i);
    for (auto [u, v] : dec.divisor_graph.edges()) edges.emplace_back(u + 1, v + 1);
    dec.outer = Graph::from_edge_list(t + 1, edges);

    const u64 phi_n = totient(n);
    dec.block_orders.push_back(phi_n + 1);
    dec.block_regularities.push_back(phi_n);
    for (u64 d : dec.proper_divisors) {
        const u64 phi_d = totient(d);
        dec.block_orders.push_back(phi_d);
        dec.block_regularities.push_back(phi_d - 1);
    }
    return dec;
}

JoinedUnionSpec realize(const PowerGraphDecomposition& dec) {
    JoinedUnionSpec spec{dec.outer, {}};
    spec.components.reserve(dec.block_orders.size());
    for (auto m : dec.block_orders) spec.components.push_back(Component::complete(m));
    return spec;
}

bool isomorphism_check(u64 n) {
    const auto dec = decompose(n);
    const auto direct = power_graph_direct(n);
    const auto assembled = materialize(realize(dec));
    if (direct.order() != assembled.order() || direct.size() != assembled.size()) return false;

    std::vector<std::size_t> offset(dec.block_orders.size() + 1, 0);
    for (std::size_t b = 0; b < dec.block_orders.size(); ++b) offset[b + 1] = offset[b] + dec.block_orders[b];
    std::vector<std::size_t> filled(dec.block_orders.size(), 0);
    std::vector<Vertex> image(n);
    for (u64 x = 0; x < n; ++x) {
        const u64 order = n / std::gcd(x, n);
        const auto b = dec.block_of_order(order);
        if (filled[b] == dec.block_orders[b]) return false;
        image[x] = static_cast<Vertex>(offset[b] + filled[b]++);
    }
    for (auto [u, v] : direct.edges())
        if (!assembled.has_edge(image[u], image[v])) return false;
    // Equal edge counts plus an injective edge map make the map onto.
    return true;
}

Spectrum power_spectrum(u64 n) {
    if (n < 2) throw InvalidArgument("power_spectrum: n must be >= 2");
    if (n == 2) return structural_spectrum({make_complete(1), {Component::complete(2)}});
    return structural_spectrum(realize(decompose(n)));
}

MultiplicityFloor multiplicity_floor_check(u64 n) {
    if (n < 3) throw InvalidArgument("multiplicity_floor_check: n must be >= 3");
    const auto spectrum = power_spectrum(n);
    const double target = static_cast<double>(n) / static_cast<double>(n - 1);
    MultiplicityFloor out{spectrum.count_near(target, kGroupTolerance), totient(n), false, false};
    out.floor_holds = out.multiplicity >= out.phi;
    out.equality = out.multiplicity == out.phi;
    return out;
}

std::pair<double, double> PqPolynomial::quadratic_roots() const {
    const double disc = std::max(0.0, b * b - 4.0 * c);
    const double big = 0.5 * (b + std::sqrt(disc));
    const double small = big != 0.0 ? c / big : 0.0;
    return {std::min(small, big), std::max(small, big)};
}

namespace {

void require_distinct_primes(u64 p, u64 q) {
    if (p == q || !numtheory::is_prime(p) || !numtheory::is_prime(q))
        throw InvalidArgument("expected two distinct primes, got " + std::to_string(p) + " and " + std::to_string(q));
}

}  // namespace

PqPolynomial pq_polynomial(u64 p, u64 q) {
    require_distinct_primes(p, q);
    if (p > q) std::swap(p, q);
    const double n = static_cast<double>(p * q);
    const double fp = static_cast<double>(p - 1), fq = static_cast<double>(q - 1);
    const double fn = fp * fq;
    const double P = static_cast<double>(p), Q = static_cast<double>(q);
    const double mid = Q * fp + fq;
    PqPolynomial poly{};
    poly.b = (fn + 1.0) / (Q * fp) + (fp + fq) / mid + (fn + 1.0) / (P * fq);
    poly.c = (fn + 1.0) * fp / (P * fq * mid) + (fn + 1.0) * (fn + 1.0) / (n * fn) + (fn + 1.0) * fq / (Q * fp * mid);
    return poly;
}

Spectrum spectrum_pq_closed(u64 p, u64 q) {
    require_distinct_primes(p, q);
    if (p > q) std::swap(p, q);
    const u64 n = p * q;
    const u64 fp = p - 1, fq = q - 1, fn = fp * fq;
    std::vector<double> values;
    values.reserve(n);
    values.push_back(0.0);
    values.insert(values.end(), fn, static_cast<double>(n) / static_cast<double>(n - 1));
    values.insert(values.end(), fp - 1, 1.0 + 1.0 / static_cast<double>(q * fp));
    values.insert(values.end(), fq - 1, 1.0 + 1.0 / static_cast<double>(p * fq));
    const auto [lo, hi] = pq_polynomial(p, q).quadratic_roots();
    values.push_back(lo);
    values.push_back(hi);
    return Spectrum(values, Source::closed_form);
}

std::string to_string(Family f) {
    switch (f) {
        case Family::prime_power: return "p^z";
        case Family::pq: return "pq";
        case Family::pqr: return "pqr";
        case Family::even_pq: return "p^2m1q^2m2";
    }
    return "unknown";
}

Family family_from_string(const std::string& name) {
    if (name == "p^z" || name == "prime_power") return Family::prime_power;
    if (name == "pq") return Family::pq;
    if (name == "pqr") return Family::pqr;
    if (name == "p^2m1q^2m2" || name == "even_pq" || name == "p^{2m1}q^{2m2}") return Family::even_pq;
    throw InvalidArgument("unknown power-graph family '" + name + "'");
}

std::vector<u64> family_members(Family f, u64 bound) {
    std::vector<u64> out;
    for (u64 n = 3; n <= bound; ++n) {
        const FactoredInteger fi(n);
        const auto& fs = fi.factors();
        bool member = false;
        switch (f) {
            case Family::prime_power: member = fi.is_prime_power(); break;
            case Family::pq: member = fi.is_semiprime_squarefree(); break;
            case Family::pqr:
                member = fs.size() == 3 && std::all_of(fs.begin(), fs.end(), [](auto& pp) { return pp.exponent == 1; });
                break;
            case Family::even_pq:
                member = fs.size() == 2 && fs[0].exponent % 2 == 0 && fs[1].exponent % 2 == 0;
                break;
        }
        if (member) out.push_back(n);
    }
    return out;
}

bool FamilyReport::all_pass() const {
    return std::all_of(cases.begin(), cases.end(), [](const FamilyCase& c) { return c.pass; });
}

namespace {

using i64 = long long;

i64 ipow(i64 b, i64 e) {
    i64 r = 1;
    while (e-- > 0) r *= b;
    return r;
}

i64 phi(i64 x) { return static_cast<i64>(totient(static_cast<u64>(x))); }

struct BlockFacts {
    std::vector<std::size_t> alpha;
    PowerGraphDecomposition dec;
    QuotientMatrix quotient;

    i64 a(u64 d) const { return static_cast<i64>(alpha[dec.block_of_order(d)]); }
    i64 degree(u64 d) const {
        const auto b = dec.block_of_order(d);
        return static_cast<i64>(alpha[b] + dec.block_regularities[b]);
    }
};

BlockFacts facts_for(u64 n) {
    BlockFacts f;
    f.dec = decompose(n);
    const auto spec = realize(f.dec);
    f.alpha = alphas(spec);
    f.quotient = quotient_matrix(spec);
    return f;
}

void check_int(std::vector<PrintedMismatch>& out, std::size_t* checked, u64 n, const std::string& what, i64 printed,
               i64 recomputed) {
    if (checked) ++*checked;
    if (printed != recomputed)
        out.push_back({n, what, static_cast<double>(printed), static_cast<double>(recomputed)});
}

void check_real(std::vector<PrintedMismatch>& out, std::size_t* checked, u64 n, const std::string& what,
                double printed, double recomputed) {
    if (checked) ++*checked;
    if (std::abs(printed - recomputed) > 1e-12 * std::max(1.0, std::abs(recomputed)))
        out.push_back({n, what, printed, recomputed});
}

}  // namespace

std::vector<PrintedMismatch> printed_checks_pqr(u64 n, std::size_t* checked) {
    const FactoredInteger fi(n);
    const auto& fs = fi.factors();
    if (fs.size() != 3 || fs[0].exponent != 1 || fs[1].exponent != 1 || fs[2].exponent != 1)
        throw InvalidArgument(std::to_string(n) + " is not a product of three distinct primes");
    const i64 p = static_cast<i64>(fs[0].prime), q = static_cast<i64>(fs[1].prime), r = static_cast<i64>(fs[2].prime);
    const i64 N = static_cast<i64>(n), fn = phi(N);
    const i64 fp = phi(p), fq = phi(q), fr = phi(r), fpq = phi(p * q), fpr = phi(p * r), fqr = phi(q * r);

    const auto facts = facts_for(n);
    std::vector<PrintedMismatch> out;

    // Printed block order: identity block, p, q, r, pq, pr, qr.
    const u64 divisor[7] = {1, static_cast<u64>(p), static_cast<u64>(q), static_cast<u64>(r),
                            static_cast<u64>(p * q), static_cast<u64>(p * r), static_cast<u64>(q * r)};
    const char* name[7] = {"1", "p", "q", "r", "pq", "pr", "qr"};
    const i64 alpha_printed[7] = {N - fn - 1,          fn + 1 + fpq + fpr, fn + 1 + fpq + fqr, fn + 1 + fpr + fqr,
                                  fn + 1 + fp + fq,    fn + 1 + fp + fr,   fn + 1 + fq + fr};
    const i64 degree_printed[7] = {N - 1,
                                   fn + fp + fpq + fpr,
                                   fn + fq + fpq + fqr,
                                   fn + fr + fpr + fqr,
                                   fn + fpq + fp + fq,
                                   fn + fpr + fp + fr,
                                   fn + fqr + fq + fr};
    // Denominators of the listed block eigenvalues 1 + 1/(...); the pq entry is listed with phi(q) twice.
    const i64 eigen_denominator[7] = {0,
                                      fn + fp + fpq + fpr,
                                      fn + fq + fpq + fqr,
                                      fn + fr + fpr + fqr,
                                      fn + fpq + fq + fq,
                                      fn + fpr + fp + fr,
                                      fn + fqr + fq + fr};

    std::size_t idx[7];
    for (int i = 0; i < 7; ++i) idx[i] = facts.dec.block_of_order(divisor[i]);
    for (int i = 0; i < 7; ++i) {
        const std::string tag = std::string("[") + name[i] + "]";
        const i64 alpha = facts.a(divisor[i]);
        const i64 degree = facts.degree(divisor[i]);
        check_int(out, checked, n, "alpha" + tag, alpha_printed[i], alpha);
        check_int(out, checked, n, "r+alpha" + tag, degree_printed[i], degree);
        check_real(out, checked, n, "z" + tag, static_cast<double>(alpha_printed[i]) / static_cast<double>(degree_printed[i]),
                   facts.quotient(idx[i], idx[i]));
        if (i > 0 && facts.dec.block_orders[idx[i]] > 1)
            check_real(out, checked, n, "block eigenvalue" + tag, 1.0 + 1.0 / static_cast<double>(eigen_denominator[i]),
                       1.0 + 1.0 / static_cast<double>(degree));
    }

    // The displayed 7x7 matrix, entry by entry, with c_ij = 1/sqrt(r'_i r'_j).
    auto c = [&](int i, int j) {
        return 1.0 / std::sqrt(static_cast<double>(facts.degree(divisor[i - 1])) *
                               static_cast<double>(facts.degree(divisor[j - 1])));
    };
    const double sz[7] = {static_cast<double>(fn + 1), static_cast<double>(fp),  static_cast<double>(fq),
                          static_cast<double>(fr),     static_cast<double>(fpq), static_cast<double>(fpr),
                          static_cast<double>(fqr)};
    double printed[7][7] = {};
    for (int j = 2; j <= 7; ++j) printed[0][j - 1] = -sz[j - 1] * c(1, j);
    for (int i = 2; i <= 7; ++i) printed[i - 1][0] = sz[0] * c(i, 1);  // printed without the minus sign
    printed[1][4] = -sz[4] * c(2, 5);
    printed[1][5] = -sz[5] * c(2, 6);
    printed[2][4] = -sz[4] * c(3, 5);
    printed[2][6] = -sz[6] * c(3, 7);
    printed[3][5] = -sz[5] * c(4, 6);
    printed[3][6] = -sz[6] * c(4, 7);
    printed[4][1] = -sz[1] * c(2, 5);
    printed[4][2] = -sz[2] * c(3, 5);
    printed[5][1] = -sz[1] * c(2, 6);
    printed[5][3] = -sz[3] * c(6, 4);
    printed[6][2] = -sz[2] * c(7, 5);  // printed as c_75
    printed[6][3] = -sz[3] * c(7, 4);
    for (int i = 0; i < 7; ++i) printed[i][i] = static_cast<double>(alpha_printed[i]) / static_cast<double>(degree_printed[i]);
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
            check_real(out, checked, n, "M[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]", printed[i][j],
                       facts.quotient(idx[i], idx[j]));
    return out;
}

std::vector<PrintedMismatch> printed_checks_even_pq(u64 n, std::size_t* checked) {
    const FactoredInteger fi(n);
    const auto& fs = fi.factors();
    if (fs.size() != 2 || fs[0].exponent % 2 != 0 || fs[1].exponent % 2 != 0)
        throw InvalidArgument(std::to_string(n) + " is not p^(2m1) q^(2m2)");
    const i64 p = static_cast<i64>(fs[0].prime), q = static_cast<i64>(fs[1].prime);
    const i64 n1 = fs[0].exponent, n2 = fs[1].exponent, m1 = n1 / 2, m2 = n2 / 2;
    std::vector<PrintedMismatch> out;
    // The displayed formulas assume n1 <= n2.
    if (n1 > n2) return out;

    const i64 N = static_cast<i64>(n), fn = phi(N);
    const auto P = [&](i64 e) { return ipow(p, e); };
    const auto Q = [&](i64 e) { return ipow(q, e); };
    const auto facts = facts_for(n);

    struct Row {
        std::string label;
        i64 d;
        std::optional<i64> alpha;
        std::optional<i64> degree;
    };
    // Divisor shapes whose displayed alpha / r' formulas are well formed. The
    // p^m1 q and p^m1 q^m2 rows use symbols that do not resolve and are skipped.
    const std::vector<Row> rows = {
        {"p", p, N - phi(p) - Q(n2) + 1, N - Q(n2)},
        {"p^2", P(2), Q(n2) * (P(n1) - p) + p - phi(P(2)), std::nullopt},
        {"p^m1", P(m1), P(m1 - 1) + Q(n2) * (P(n1) - P(m1 - 1)) - phi(P(m1)),
         P(m1 - 1) + Q(n2) * (P(n1) - P(m1 - 1)) - 1},
        {"p^n1", P(n1), P(n1 - 1) + phi(P(n1)) * (Q(n2 - 1) - 1), P(n1 - 1) + phi(P(n1)) * Q(n2) - 1},
        {"q", q, N - phi(q) - P(n1) + 1, N - P(n1)},
        {"q^m2", Q(m2), Q(m2 - 1) + P(n1) * (Q(n2) - Q(m2 - 1)) - phi(Q(m2)),
         Q(m2 - 1) + P(n1) * (Q(n2) - Q(m2 - 1)) - 1},
        {"q^n2", Q(n2), Q(n2 - 1) + phi(Q(n2)) * (P(n1) - 1), Q(n2 - 1) + phi(Q(n2)) * P(n1) - 1},
        {"pq", p * q, phi(p) + phi(q) + 1 - phi(p * q) + (Q(n2) - 1) * (P(n1) - 1),
         phi(p) + phi(q) + (Q(n2) - 1) * (P(n1) - 1)},
        {"pq^m2", p * Q(m2), Q(n2) * (P(n1) - 1) + Q(m2) - Q(m2 - 1) * (P(n1) - p) - phi(p * Q(m2)),
         Q(n2) * (P(n1) - 1) + Q(m2) - Q(m2 - 1) * (P(n1) - p) - 1},
        {"pq^n2", p * Q(n2), p * Q(n2) - phi(p * Q(n2)) + phi(P(n1)) * (Q(n2) - q),
         p * Q(n2) + phi(P(n1)) * (Q(n2) - q) - 1},
        {"p^m1q^n2", P(m1) * Q(n2), P(m1) * Q(n2) - phi(P(m1) * Q(n2)) + phi(Q(n2)) * (P(n1) - P(m1)),
         P(m1) * Q(n2) + phi(Q(n2)) * (P(n1) - P(m1)) - 1},
        {"p^n1q", P(n1) * q, P(n1) * q + phi(P(n1)) * (Q(n2) - q) - phi(P(n1) * q),
         P(n1) * q + phi(P(n1)) * (Q(n2) - q) - 1},
        {"p^n1q^m2", P(n1) * Q(m2), P(n1) * Q(m2) + phi(P(n1)) * (Q(n2) - Q(m2)) - phi(P(n1) * Q(m2)),
         P(n1) * Q(m2) + phi(P(n1)) * (Q(n2) - Q(m2)) - 1},
        {"p^n1q^(n2-1)", P(n1) * Q(n2 - 1), P(n1) * Q(n2 - 1) + fn - phi(P(n1) * Q(n2 - 1)),
         P(n1) * Q(n2 - 1) + fn - 1},
    };

    check_int(out, checked, n, "alpha[1]", N - 1 - fn, facts.a(1));
    check_int(out, checked, n, "r'[1]", N - 1, facts.degree(1));
    for (const auto& row : rows) {
        const auto d = static_cast<u64>(row.d);
        if (row.alpha) check_int(out, checked, n, "alpha[" + row.label + "]", *row.alpha, facts.a(d));
        if (row.degree) check_int(out, checked, n, "r'[" + row.label + "]", *row.degree, facts.degree(d));
    }
    return out;
}

std::vector<PrintedMismatch> printed_checks_block_statement(u64 n, std::size_t* checked) {
    const auto facts = facts_for(n);
    std::vector<PrintedMismatch> out;
    std::size_t affected = 0;
    PrintedMismatch first{};
    for (std::size_t b = 1; b < facts.dec.block_orders.size(); ++b) {
        if (facts.dec.block_orders[b] < 2) continue;  // multiplicity phi(d) - 1 = 0
        const double d = static_cast<double>(facts.dec.proper_divisors[b - 1]);
        const double phi_d = static_cast<double>(facts.dec.block_orders[b]);
        const double alpha = static_cast<double>(facts.alpha[b]);
        const double printed = (phi_d + alpha) / (d + alpha - 1.0);
        const double recomputed = (phi_d + alpha) / (phi_d + alpha - 1.0);
        if (checked) ++*checked;
        if (std::abs(printed - recomputed) > 1e-12) {
            if (affected++ == 0) first = {n, "", printed, recomputed};
        }
    }
    if (affected > 0) {
        first.quantity = "block eigenvalue with denominator d+alpha-1 (" + std::to_string(affected) + " block(s))";
        out.push_back(first);
    }
    return out;
}

FamilyReport family_report(Family family, u64 bound, const ReportOptions& options) {
    if (bound > options.report_max)
        throw InvalidArgument("family_report: bound " + std::to_string(bound) + " exceeds the configured maximum " +
                              std::to_string(options.report_max));
    FamilyReport report{family, bound, {}, {}, 0};
    const auto members = family_members(family, bound);

    struct PerN {
        FamilyCase c;
        std::vector<PrintedMismatch> mismatches;
        std::size_t checked = 0;
    };

    auto run = [&](std::size_t i) {
        PerN out;
        const u64 n = members[i];
        const auto structural = power_spectrum(n);
        out.c.n = n;
        out.c.order = structural.total();

        std::optional<Spectrum> reference;
        if (n <= options.oracle_max) {
            reference = oracle_spectrum(power_graph_direct(n));
            out.c.oracle_run = true;
        }

        switch (family) {
            case Family::prime_power: {
                std::vector<double> closed(n - 1, static_cast<double>(n) / static_cast<double>(n - 1));
                closed.insert(closed.begin(), 0.0);
                const Spectrum literal(closed, Source::closed_form);
                const auto cmp = compare_spectra(structural, literal, 1e-10);
                ++out.checked;
                if (!cmp.pass) out.mismatches.push_back({n, "{0, (n/(n-1))^[n-1]}", 0.0, cmp.deviation});
                if (!reference) reference = literal;
                break;
            }
            case Family::pq: {
                const FactoredInteger fi(n);
                const auto& fs = fi.factors();
                const u64 p = fs[0].prime, q = fs[1].prime;
                const auto closed = spectrum_pq_closed(p, q);
                const auto cmp = compare_spectra(structural, closed, options.tol);
                ++out.checked;
                if (!cmp.pass) out.mismatches.push_back({n, "pq closed form", 0.0, cmp.deviation});
                // The printed form gives the prime-block eigenvalues as 1/(q phi(p)).
                const double listed = 1.0 / static_cast<double>(q * (p - 1));
                if (p - 1 > 1) {
                    ++out.checked;
                    out.mismatches.push_back({n, "block eigenvalue listed as 1/(q*phi(p)) [p]", listed, 1.0 + listed});
                }
                if (q - 1 > 1) {
                    ++out.checked;
                    out.mismatches.push_back({n, "block eigenvalue listed as 1/(q*phi(p)) [q]", listed,
                                              1.0 + 1.0 / static_cast<double>(p * (q - 1))});
                }
                auto s = printed_checks_block_statement(n, &out.checked);
                out.mismatches.insert(out.mismatches.end(), s.begin(), s.end());
                if (!reference) reference = closed;
                break;
            }
            case Family::pqr: {
                auto m = printed_checks_pqr(n, &out.checked);
                out.mismatches.insert(out.mismatches.end(), m.begin(), m.end());
                auto s = printed_checks_block_statement(n, &out.checked);
                out.mismatches.insert(out.mismatches.end(), s.begin(), s.end());
                break;
            }
            case Family::even_pq: {
                auto m = printed_checks_even_pq(n, &out.checked);
                out.mismatches.insert(out.mismatches.end(), m.begin(), m.end());
                auto s = printed_checks_block_statement(n, &out.checked);
                out.mismatches.insert(out.mismatches.end(), s.begin(), s.end());
                break;
            }
        }

        if (reference) {
            const auto cmp = compare_spectra(structural, *reference, options.tol);
            out.c.deviation = cmp.deviation;
            out.c.pass = cmp.pass;
        }
        return out;
    };

    auto results = kernels::map_indexed<PerN>(members.size(), run, options.threads);
    for (auto& r : results) {
        report.cases.push_back(r.c);
        report.printed_checks += r.checked;
        report.mismatches.insert(report.mismatches.end(), r.mismatches.begin(), r.mismatches.end());
    }
    return report;
}

}  // namespace specjoin::power
