#include "specjoin/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "specjoin/errors.hpp"
#include "specjoin/families.hpp"
#include "specjoin/kernels.hpp"
#include "specjoin/numtheory.hpp"
#include "specjoin/random_specs.hpp"

namespace specjoin::verify {

namespace {

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string describe(const JoinedUnionSpec& spec) {
    std::string labels;
    for (const auto& c : spec.components) {
        if (!labels.empty()) labels += ",";
        labels += c.label();
    }
    return "outer=" + std::to_string(spec.outer.order()) + "/" + std::to_string(spec.outer.size()) +
           " components=" + labels;
}

}  // namespace

std::string_view to_string(Status s) {
    switch (s) {
        case Status::pass: return "PASS";
        case Status::fail: return "FAIL";
        case Status::warn: return "WARN";
    }
    return "?";
}

std::string format(const CaseResult& r) {
    std::string line = std::string(to_string(r.status)) + " " + r.suite + " " + r.name;
    for (const auto& [k, v] : r.fields) line += " " + k + "=" + v;
    return line;
}

bool any_fail(const std::vector<CaseResult>& results) {
    return std::any_of(results.begin(), results.end(), [](const CaseResult& r) { return r.status == Status::fail; });
}

JoinExtremes join_extremes(const JoinedUnionSpec& join, const Spectrum& full) {
    const auto quotient = quotient_eigenvalues(quotient_matrix(join));
    auto gap = [&](double x) {
        double best = std::numeric_limits<double>::infinity();
        for (double q : quotient) best = std::min(best, std::abs(q - x));
        return best;
    };
    return {full.min(), full.max(), gap(full.min()), gap(full.max())};
}

std::vector<CaseResult> joined_union_suite(const SuiteOptions& options) {
    SpecRng rng(options.seed);
    std::vector<JoinedUnionSpec> specs;
    for (std::size_t i = 0; i < options.random_cases; ++i) specs.push_back(random_joined_union(rng));
    std::vector<JoinedUnionSpec> joins;
    for (std::size_t i = 0; i < options.join_cases; ++i) joins.push_back(random_join(rng));

    auto results = kernels::map_indexed<CaseResult>(
        specs.size(),
        [&](std::size_t i) {
            const auto& spec = specs[i];
            const auto structural = structural_spectrum(spec);
            const auto oracle = oracle_spectrum(materialize(spec));
            const auto cmp = compare_spectra(structural, oracle, options.tol);
            const double n = static_cast<double>(spec.order());
            const double trace_error = std::abs(structural.sum() - n);
            const bool trace_ok = trace_error <= 1e-9 * n;
            const bool range_ok = structural.min() >= -1e-9 && structural.max() <= 2.0 + 1e-9;
            CaseResult r{"joined-union", "random#" + std::to_string(i),
                         cmp.pass && trace_ok && range_ok ? Status::pass : Status::fail,
                         {{"deviation", sci(cmp.deviation)},
                          {"trace_error", sci(trace_error)},
                          {"range", range_ok ? "ok" : "violated"},
                          {"spec", describe(spec)}}};
            return r;
        },
        options.jobs);

    auto join_results = kernels::map_indexed<std::vector<CaseResult>>(
        joins.size(),
        [&](std::size_t i) {
            const auto& spec = joins[i];
            const auto structural = structural_spectrum(spec);
            const auto oracle = oracle_spectrum(materialize(spec));
            const auto cmp = compare_spectra(structural, oracle, options.tol);
            const auto ext = join_extremes(spec, oracle);
            const std::string name = "join#" + std::to_string(i);
            std::vector<CaseResult> out;
            out.push_back({"joined-union", name, cmp.pass ? Status::pass : Status::fail,
                           {{"deviation", sci(cmp.deviation)}, {"spec", describe(spec)}}});
            const bool extremes_ok = ext.min_gap <= 1e-8 && ext.max_gap <= 1e-8;
            out.push_back({"joined-union", name + ".extremes", extremes_ok ? Status::pass : Status::warn,
                           {{"min", num(ext.min_value)},
                            {"min_gap", sci(ext.min_gap)},
                            {"max", num(ext.max_value)},
                            {"max_gap", sci(ext.max_gap)}}});
            return out;
        },
        options.jobs);
    for (auto& v : join_results) results.insert(results.end(), v.begin(), v.end());
    return results;
}

std::vector<CaseResult> power_suite(const SuiteOptions& options) {
    std::vector<power::u64> ns;
    for (power::u64 n = 2; n <= options.max_n; ++n) ns.push_back(n);

    auto results = kernels::map_indexed<CaseResult>(
        ns.size(),
        [&](std::size_t i) {
            const auto n = ns[i];
            CaseResult r{"power", "n=" + std::to_string(n), Status::pass, {}};
            const auto structural = power::power_spectrum(n);
            r.fields.emplace_back("order", std::to_string(structural.total()));
            if (n <= options.oracle_max) {
                const auto cmp = compare_spectra(structural, oracle_spectrum(power::power_graph_direct(n)), options.tol);
                const bool iso = n < 3 || power::isomorphism_check(n);
                r.fields.emplace_back("deviation", sci(cmp.deviation));
                r.fields.emplace_back("isomorphic", iso ? "yes" : "no");
                if (!cmp.pass || !iso) r.status = Status::fail;
            } else {
                r.fields.emplace_back("oracle", "skipped");
            }
            if (n >= 3) {
                const auto floor = power::multiplicity_floor_check(n);
                r.fields.emplace_back("mult_n_over_n-1", std::to_string(floor.multiplicity));
                r.fields.emplace_back("phi", std::to_string(floor.phi));
                if (!floor.floor_holds) r.status = Status::fail;
            }
            return r;
        },
        options.jobs);

    power::ReportOptions report_options;
    report_options.oracle_max = 0;  // the oracle already ran above
    report_options.report_max = std::max<power::u64>(options.max_n, power::kDefaultReportMax);
    report_options.tol = options.tol;
    report_options.threads = options.jobs;
    for (auto family : {power::Family::prime_power, power::Family::pq, power::Family::pqr, power::Family::even_pq}) {
        const auto report = power::family_report(family, options.max_n, report_options);
        results.push_back({"power", "family=" + power::to_string(family), Status::pass,
                           {{"members", std::to_string(report.cases.size())},
                            {"printed_checks", std::to_string(report.printed_checks)},
                            {"printed_mismatches", std::to_string(report.mismatches.size())}}});
        for (const auto& m : report.mismatches)
            results.push_back({"power", "n=" + std::to_string(m.n) + ".printed", Status::warn,
                               {{"family", power::to_string(family)},
                                {"quantity", "\"" + m.quantity + "\""},
                                {"printed", num(m.printed)},
                                {"recomputed", num(m.recomputed)}}});
    }
    return results;
}

std::vector<std::string> family_grid() {
    std::vector<std::string> grid;
    auto add = [&](const std::string& name, std::initializer_list<std::size_t> params) {
        std::string d = name + ":";
        bool first = true;
        for (auto p : params) {
            d += (first ? "" : ",") + std::to_string(p);
            first = false;
        }
        grid.push_back(d);
    };
    for (std::size_t a = 1; a <= 5; ++a)
        for (std::size_t b = a; b <= 5; ++b) add("complete_bipartite", {a, b});
    for (std::size_t p = 2; p <= 5; ++p)
        for (std::size_t t = 1; t <= 4; ++t) add("equal_multipartite", {p, t});
    for (std::size_t n = 3; n <= 8; ++n)
        for (std::size_t w = 1; w < n; ++w) add("complete_split", {w, n});
    for (std::size_t a = 3; a <= 7; ++a)
        for (std::size_t b = 1; b <= 4; ++b) add("cone", {a, b});
    for (std::size_t n = 4; n <= 23; ++n) add("wheel", {n});
    for (std::size_t n = 1; n <= 10; ++n) add("friendship", {n});
    for (std::size_t n = 2; n <= 7; ++n)
        for (std::size_t p = 1; p < n; ++p) add("firefly", {p, n});
    for (std::size_t a = 1; a <= 4; ++a)
        for (std::size_t b = 3; b <= 7; ++b) add("multistep_wheel", {a, b});
    grid.push_back("multipartite:1,2,3");
    grid.push_back("multipartite:2,2,5,1");
    for (const char* j : {"join:K3,C5", "join:E2,C4", "join:C3,C6", "join:K1,E4", "join:E3,E3"}) grid.push_back(j);
    return grid;
}

std::vector<CaseResult> families_suite(const SuiteOptions& options) {
    const auto grid = family_grid();
    auto per_case = kernels::map_indexed<std::vector<CaseResult>>(
        grid.size(),
        [&](std::size_t i) {
            const auto d = families::FamilyDescriptor::parse(grid[i]);
            const auto spec = families::family_spec(d);
            const auto engine = structural_spectrum(spec);
            const auto oracle = oracle_spectrum(materialize(spec));
            const auto cmp = compare_spectra(engine, oracle, options.tol);
            std::vector<CaseResult> out;
            out.push_back({"families", grid[i], cmp.pass ? Status::pass : Status::fail,
                           {{"engine_vs_oracle", sci(cmp.deviation)}, {"order", std::to_string(engine.total())}}});
            if (families::family_has_printed(d.name)) {
                const auto printed = families::family_printed(d);
                const auto disc = families::compare_printed(printed, oracle);
                out.push_back({"families", grid[i] + ".printed", disc.agrees() ? Status::pass : Status::warn,
                               {{"formula", "\"" + printed.formula + "\""},
                                {"value_deviation", sci(disc.value_deviation)},
                                {"unmatched_oracle", std::to_string(disc.unmatched)},
                                {"unmatched_printed", std::to_string(disc.unmatched_printed)},
                                {"printed_total", std::to_string(disc.printed_total)},
                                {"order", std::to_string(disc.reference_total)},
                                {"engine_vs_oracle", sci(cmp.deviation)}}});
            }
            return out;
        },
        options.jobs);
    std::vector<CaseResult> results;
    for (auto& v : per_case) results.insert(results.end(), v.begin(), v.end());
    return results;
}

}  // namespace specjoin::verify
