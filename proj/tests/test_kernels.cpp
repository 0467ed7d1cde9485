#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "specjoin/kernels.hpp"
#include "specjoin/power_graph.hpp"

using namespace specjoin;

TEST_CASE("parallel power graph equals the serial reference") {
    for (std::uint64_t n : {2, 3, 7, 64, 511, 512, 513, 1000, 2310})
        CHECK(kernels::power_graph_parallel(n) == kernels::power_graph_serial(n));
}

TEST_CASE("parallel Laplacian equals the serial reference bitwise") {
    for (std::uint64_t n : {12, 255, 256, 300, 1024}) {
        const auto g = kernels::power_graph_serial(n);
        const auto a = kernels::normalized_laplacian_serial(g);
        const auto b = kernels::normalized_laplacian_parallel(g);
        CHECK(std::equal(a.data().begin(), a.data().end(), b.data().begin(), b.data().end()));
    }
}

TEST_CASE("map_indexed keeps order and matches the serial map") {
    auto square = [](std::size_t i) { return static_cast<long>(i * i); };
    const auto par = kernels::map_indexed<long>(1000, square, 4);
    const auto ser = kernels::map_indexed_serial<long>(1000, square);
    CHECK(par == ser);
    CHECK(kernels::map_indexed<long>(0, square).empty());
    CHECK(kernels::default_threads() >= 1);
}

TEST_CASE("map_indexed rethrows the first failing index") {
    auto fn = [](std::size_t i) -> int {
        if (i == 17 || i == 40) throw std::runtime_error("bad " + std::to_string(i));
        return 0;
    };
    try {
        kernels::map_indexed<int>(64, fn, 4);
        FAIL("expected an exception");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()) == "bad 17");
    }
}

TEST_CASE("family report does not depend on the thread count") {
    power::ReportOptions one, many;
    one.threads = 1;
    many.threads = 4;
    const auto a = power::family_report(power::Family::pqr, 200, one);
    const auto b = power::family_report(power::Family::pqr, 200, many);
    REQUIRE(a.cases.size() == b.cases.size());
    for (std::size_t i = 0; i < a.cases.size(); ++i) {
        CHECK(a.cases[i].n == b.cases[i].n);
        CHECK(a.cases[i].deviation == b.cases[i].deviation);
    }
    CHECK(a.mismatches.size() == b.mismatches.size());
    CHECK(a.printed_checks == b.printed_checks);
}
