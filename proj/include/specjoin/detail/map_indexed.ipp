#pragma once

#include <exception>
#include <optional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace specjoin::kernels {

template <class Result, class Fn>
std::vector<Result> map_indexed(std::size_t count, Fn&& fn, int threads) {
    std::vector<std::optional<Result>> slots(count);
    std::vector<std::exception_ptr> errors(count);
    const auto n = static_cast<long long>(count);
#ifdef _OPENMP
    const int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(team)
#endif
    for (long long i = 0; i < n; ++i) {
        try {
            slots[i].emplace(fn(static_cast<std::size_t>(i)));
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    (void)threads;
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    std::vector<Result> out;
    out.reserve(count);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

}  // namespace specjoin::kernels
