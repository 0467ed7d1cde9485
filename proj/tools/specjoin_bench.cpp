#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "specjoin/kernels.hpp"
#include "specjoin/power_graph.hpp"

namespace {

using namespace specjoin;
using Clock = std::chrono::steady_clock;

template <class Fn>
double best_of(int reps, Fn&& fn) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const auto t0 = Clock::now();
        fn();
        best = std::min(best, std::chrono::duration<double>(Clock::now() - t0).count());
    }
    return best;
}

void row(const std::string& name, double serial, double parallel, bool same) {
    std::printf("%-34s %10.4f %10.4f %8.2fx  %s\n", name.c_str(), serial, parallel, serial / parallel,
                same ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    const std::uint64_t n = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 4000;
    const int reps = 3;
    std::printf("threads: %d\n", kernels::default_threads());
    std::printf("%-34s %10s %10s %9s\n", "kernel", "serial s", "parallel s", "speedup");

    Graph gs, gp;
    const double t_gs = best_of(reps, [&] { gs = kernels::power_graph_serial(n); });
    const double t_gp = best_of(reps, [&] { gp = kernels::power_graph_parallel(n); });
    row("power_graph n=" + std::to_string(n), t_gs, t_gp, gs == gp);

    SymMatrix ls, lp;
    const double t_ls = best_of(reps, [&] { ls = kernels::normalized_laplacian_serial(gs); });
    const double t_lp = best_of(reps, [&] { lp = kernels::normalized_laplacian_parallel(gs); });
    row("normalized_laplacian n=" + std::to_string(n), t_ls, t_lp,
        std::equal(ls.data().begin(), ls.data().end(), lp.data().begin(), lp.data().end()));

    power::ReportOptions serial_opts, parallel_opts;
    serial_opts.threads = 1;
    serial_opts.oracle_max = parallel_opts.oracle_max = 150;
    power::FamilyReport rs, rp;
    const double t_rs = best_of(1, [&] { rs = power::family_report(power::Family::pq, 400, serial_opts); });
    const double t_rp = best_of(1, [&] { rp = power::family_report(power::Family::pq, 400, parallel_opts); });
    bool same = rs.cases.size() == rp.cases.size();
    for (std::size_t i = 0; same && i < rs.cases.size(); ++i) same = rs.cases[i].deviation == rp.cases[i].deviation;
    row("family_report pq bound=400", t_rs, t_rp, same);
    return 0;
}
