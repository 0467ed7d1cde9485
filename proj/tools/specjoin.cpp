#include <chrono>
#include <cstdlib>
#include <ctime>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "specjoin/document.hpp"
#include "specjoin/errors.hpp"
#include "specjoin/families.hpp"
#include "specjoin/joined_union.hpp"
#include "specjoin/power_graph.hpp"
#include "specjoin/verify.hpp"

namespace {

using namespace specjoin;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDeviation = 2;

struct SpectrumArgs {
    std::optional<std::uint64_t> power_n;
    std::optional<std::string> family;
    std::optional<std::string> edges;
    std::string method = "both";
    std::string format = "table";
    double tol = kCompareTolerance;
    bool timestamp = false;
};

struct VerifyArgs {
    std::string suite = "all";
    std::uint64_t max_n = 300;
    double tol = kCompareTolerance;
    int jobs = 0;
};

std::uint64_t oracle_cutoff() {
    const char* env = std::getenv("SPECJOIN_ORACLE_MAX");
    if (!env || !*env) return power::kDefaultOracleMax;
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (*end != '\0') throw InvalidArgument("SPECJOIN_ORACLE_MAX must be a non-negative integer, got '" +
                                            std::string(env) + "'");
    return v;
}

std::string utc_now() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void require_oracle_size(std::size_t order, std::uint64_t cutoff) {
    if (order > cutoff)
        throw InvalidArgument("graph order " + std::to_string(order) + " exceeds the dense-oracle cutoff " +
                              std::to_string(cutoff) + " (set SPECJOIN_ORACLE_MAX to raise it)");
}

int run_spectrum(const SpectrumArgs& args) {
    const auto method = doc::method_from_string(args.method);
    const bool want_structural = method != doc::Method::oracle;
    const bool want_oracle = method != doc::Method::structural;
    const auto cutoff = oracle_cutoff();

    doc::GraphDescriptor descriptor;
    std::optional<Spectrum> structural, oracle;
    if (args.power_n) {
        const auto n = *args.power_n;
        if (n < 2) throw InvalidArgument("--power-n must be >= 2");
        descriptor = {"power", std::to_string(n)};
        if (want_structural) structural = power::power_spectrum(n);
        if (want_oracle) {
            require_oracle_size(n, cutoff);
            oracle = oracle_spectrum(power::power_graph_direct(n));
        }
    } else if (args.family) {
        const auto d = families::FamilyDescriptor::parse(*args.family);
        descriptor = {"family", d.to_string()};
        const auto spec = families::family_spec(d);
        if (want_structural) structural = structural_spectrum(spec);
        if (want_oracle) {
            require_oracle_size(spec.order(), cutoff);
            oracle = oracle_spectrum(materialize(spec));
        }
    } else {
        descriptor = {"edges", *args.edges};
        const auto g = read_edge_list_file(*args.edges);
        if (want_structural) structural = structural_spectrum(single_component_spec(g));
        if (want_oracle) {
            require_oracle_size(g.order(), cutoff);
            oracle = oracle_spectrum(g);
        }
    }

    std::optional<double> deviation;
    if (structural && oracle) deviation = compare_spectra(*structural, *oracle, args.tol).deviation;
    auto document = doc::make_document(descriptor, method, structural ? *structural : *oracle, deviation, args.tol);
    if (args.timestamp) document.timestamp = utc_now();

    if (args.format == "json")
        std::cout << doc::to_json(document);
    else if (args.format == "csv")
        std::cout << doc::to_csv(document);
    else
        std::cout << doc::to_table(document);
    std::cout.flush();
    return deviation && *deviation > args.tol ? kExitDeviation : kExitOk;
}

int run_verify(const VerifyArgs& args) {
    verify::SuiteOptions options;
    options.max_n = args.max_n;
    options.tol = args.tol;
    options.jobs = args.jobs;
    options.oracle_max = oracle_cutoff();

    std::vector<verify::CaseResult> results;
    auto append = [&](std::vector<verify::CaseResult> more) { results.insert(results.end(), more.begin(), more.end()); };
    const bool all = args.suite == "all";
    if (all || args.suite == "joined-union") append(verify::joined_union_suite(options));
    if (all || args.suite == "power") append(verify::power_suite(options));
    if (all || args.suite == "families") append(verify::families_suite(options));

    std::size_t pass = 0, fail = 0, warn = 0;
    for (const auto& r : results) {
        std::cout << verify::format(r) << "\n";
        switch (r.status) {
            case verify::Status::pass: ++pass; break;
            case verify::Status::fail: ++fail; break;
            case verify::Status::warn: ++warn; break;
        }
    }
    std::cout << "SUMMARY pass=" << pass << " fail=" << fail << " warn=" << warn << "\n";
    std::cout.flush();
    return fail > 0 ? kExitDeviation : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Normalized Laplacian spectra of joined unions and power graphs of Z_n"};
    app.set_version_flag("--version", std::string(doc::tool_version()));
    app.require_subcommand(1);

    SpectrumArgs sargs;
    auto* spectrum = app.add_subcommand("spectrum", "Compute the spectrum of one graph");
    auto* power_opt = spectrum->add_option("--power-n", sargs.power_n, "Power graph P(Z_n)");
    auto* family_opt = spectrum->add_option("--family", sargs.family, "Family descriptor, see below");
    auto* edges_opt = spectrum->add_option("--edges", sargs.edges, "Edge-list file")->check(CLI::ExistingFile);
    power_opt->excludes(family_opt)->excludes(edges_opt);
    family_opt->excludes(edges_opt);
    spectrum->add_option("--method", sargs.method, "structural, oracle or both")
        ->check(CLI::IsMember({"structural", "oracle", "both"}))
        ->capture_default_str();
    spectrum->add_option("--format", sargs.format, "table, json or csv")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    spectrum->add_option("--tol", sargs.tol, "Structural vs oracle tolerance")->capture_default_str();
    spectrum->add_flag("--timestamp", sargs.timestamp, "Add a UTC timestamp to the output");
    spectrum->footer(families::family_grammar_help() +
                     "Edge lists: first token is the vertex count, then 0-based pairs; '#' starts a comment.\n"
                     "SPECJOIN_ORACLE_MAX caps the order of graphs sent to the dense oracle.");

    VerifyArgs vargs;
    auto* verify_cmd = app.add_subcommand("verify", "Run the verification suites");
    verify_cmd->add_option("--suite", vargs.suite, "joined-union, power, families or all")
        ->check(CLI::IsMember({"joined-union", "power", "families", "all"}))
        ->capture_default_str();
    verify_cmd->add_option("--max-n", vargs.max_n, "Largest n for the power suite")
        ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 32))
        ->capture_default_str();
    verify_cmd->add_option("--tol", vargs.tol, "Structural vs oracle tolerance")->capture_default_str();
    verify_cmd->add_option("--jobs", vargs.jobs, "Worker threads (0 = all cores)")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (spectrum->parsed()) {
            if (!sargs.power_n && !sargs.family && !sargs.edges) {
                std::cerr << "spectrum: one of --power-n, --family, --edges is required\n";
                return kExitUsage;
            }
            if (!(sargs.tol > 0.0)) throw InvalidArgument("--tol must be positive");
            return run_spectrum(sargs);
        }
        if (!(vargs.tol > 0.0)) throw InvalidArgument("--tol must be positive");
        return run_verify(vargs);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
