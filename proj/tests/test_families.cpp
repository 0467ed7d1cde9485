#include <doctest.h>

#include <cmath>
#include <numbers>

#include "specjoin/errors.hpp"
#include "specjoin/families.hpp"

using namespace specjoin;
using namespace specjoin::families;

namespace {

Spectrum literal(std::initializer_list<std::pair<double, std::size_t>> rows) {
    std::vector<double> v;
    for (auto [value, mult] : rows) v.insert(v.end(), mult, value);
    return Spectrum(v, Source::closed_form);
}

double dev(const Spectrum& a, const Spectrum& b) { return compare_spectra(a, b).deviation; }

Spectrum oracle_of(const JoinedUnionSpec& spec) { return oracle_spectrum(materialize(spec)); }

}  // namespace

TEST_CASE("complete bipartite and multipartite") {
    for (std::size_t a = 1; a <= 6; ++a)
        for (std::size_t b = 1; b <= 6; ++b) {
            CAPTURE(a);
            CAPTURE(b);
            CHECK(dev(complete_bipartite(a, b), literal({{0.0, 1}, {1.0, a + b - 2}, {2.0, 1}})) < 1e-12);
        }
    // K_{t,...,t}: 0, 1^(p(t-1)), (p/(p-1))^(p-1).
    for (std::size_t p = 2; p <= 6; ++p)
        for (std::size_t t = 1; t <= 5; ++t) {
            const double top = static_cast<double>(p) / static_cast<double>(p - 1);
            CHECK(dev(equal_multipartite_spectrum(p, t), literal({{0.0, 1}, {1.0, p * (t - 1)}, {top, p - 1}})) < 1e-12);
        }
    const std::vector<std::size_t> parts{1, 2, 4};
    CHECK(dev(multipartite_spectrum(parts), oracle_of(multipartite_spec(parts))) < 1e-12);
}

TEST_CASE("complete split: engine agrees with the oracle, printed constant does not") {
    for (std::size_t n = 3; n <= 9; ++n)
        for (std::size_t w = 1; w < n; ++w) {
            const double nn = static_cast<double>(n);
            // 0, (n/(n-1))^(w-1), 1^(n-w-1), trace remainder (2n-w-1)/(n-1).
            const auto expected =
                literal({{0.0, 1}, {nn / (nn - 1), w - 1}, {1.0, n - w - 1}, {(2 * nn - w - 1) / (nn - 1), 1}});
            CHECK(dev(complete_split(w, n), expected) < 1e-12);
            CHECK(dev(complete_split(w, n), oracle_of(complete_split_spec(w, n))) < 1e-12);
            const auto disc = compare_printed(printed_complete_split(w, n), expected);
            CHECK_FALSE(disc.agrees());
            CHECK(disc.value_deviation == doctest::Approx(2.0 / (nn - 1)));
        }
    CHECK_THROWS_AS(complete_split(0, 4), InvalidArgument);
    CHECK_THROWS_AS(complete_split(4, 4), InvalidArgument);
}

TEST_CASE("cone and wheel") {
    for (std::size_t a = 3; a <= 8; ++a)
        for (std::size_t b = 1; b <= 4; ++b) {
            // Independent list: 0, 1^(b-1), 1 - 2cos(2 pi k/a)/(2+b) for k=1..a-1, and (2b+2)/(b+2).
            std::vector<double> v{0.0, (2.0 * b + 2.0) / (b + 2.0)};
            v.insert(v.end(), b - 1, 1.0);
            for (std::size_t k = 1; k < a; ++k)
                v.push_back(1.0 - 2.0 * std::cos(2.0 * std::numbers::pi * k / a) / (2.0 + b));
            CHECK(dev(cone(a, b), Spectrum(v, Source::closed_form)) < 1e-12);
            const auto disc = compare_printed(printed_cone(a, b), cone(a, b));
            CHECK(disc.value_deviation < 1e-12);
            CHECK(disc.unmatched == b);
        }
    for (std::size_t n = 4; n <= 15; ++n) {
        CHECK(dev(wheel(n), oracle_of(wheel_spec(n))) < 1e-12);
        CHECK_FALSE(compare_printed(printed_wheel(n), wheel(n)).agrees());
    }
    CHECK_THROWS_AS(wheel(3), InvalidArgument);
}

TEST_CASE("friendship and firefly") {
    for (std::size_t n = 1; n <= 20; ++n) {
        CHECK(dev(friendship(n), literal({{0.0, 1}, {0.5, n - 1}, {1.5, n + 1}})) < 1e-12);
        CHECK(compare_printed(printed_friendship(n), friendship(n)).agrees());
    }
    for (std::size_t n = 2; n <= 9; ++n)
        for (std::size_t p = 1; p < n; ++p) {
            CAPTURE(n);
            CAPTURE(p);
            const auto oracle = oracle_of(firefly_spec(p, n));
            CHECK(dev(firefly(p, n), oracle) < 1e-12);
            CHECK(compare_printed(printed_firefly(p, n), oracle).agrees());
        }
}

TEST_CASE("multistep wheel") {
    for (std::size_t a = 1; a <= 4; ++a)
        for (std::size_t b = 3; b <= 8; ++b) {
            const auto oracle = oracle_of(multistep_wheel_spec(a, b));
            CHECK(dev(multistep_wheel(a, b), oracle) < 1e-12);
            // Each block value is listed once although it occurs a times.
            const auto printed = printed_multistep_wheel(a, b);
            CHECK(printed.printed_total() == b + a);
            CHECK_FALSE(compare_printed(printed, oracle).agrees());
        }
}

TEST_CASE("join of two regular graphs from spectra only") {
    // C_5 join K_3 from adjacency eigenvalues alone.
    std::vector<double> c5;
    for (int k = 0; k < 5; ++k) c5.push_back(2.0 * std::cos(2.0 * std::numbers::pi * k / 5));
    const auto s = join_two_regular(5, 2, c5, 3, 2, {2.0, -1.0, -1.0});
    CHECK(dev(s, oracle_of(join_spec(Component::cycle(5), Component::complete(3)))) < 1e-12);
}

TEST_CASE("compare_printed bookkeeping") {
    const PrintedForm form{"t", "{0, 1^2}", {{0.0, 1}, {1.0, 2}}, 3};
    const auto ok = compare_printed(form, literal({{0.0, 1}, {1.0, 2}}));
    CHECK(ok.agrees());
    const auto missing = compare_printed(form, literal({{0.0, 1}, {1.0, 2}, {2.0, 1}}));
    CHECK(missing.unmatched == 1);
    CHECK(missing.value_deviation < 1e-15);
    const auto wrong = compare_printed(form, literal({{0.0, 1}, {1.0, 1}, {1.5, 1}}));
    CHECK(wrong.unmatched == 1);
    CHECK(wrong.unmatched_printed == 1);
}

TEST_CASE("family descriptors") {
    const auto d = FamilyDescriptor::parse("firefly:2,7");
    CHECK(d.name == "firefly");
    CHECK(d.params == std::vector<std::size_t>{2, 7});
    CHECK(d.to_string() == "firefly:2,7");
    const auto j = FamilyDescriptor::parse("join:K3,C5");
    CHECK(j.components == std::vector<std::string>{"K3", "C5"});
    CHECK(family_spec(j).order() == 8);
    CHECK(family_spec(FamilyDescriptor::parse("multistep_wheel:3,5")).order() == 16);
    CHECK_THROWS_AS(FamilyDescriptor::parse(":1"), InvalidArgument);
    CHECK_THROWS_AS(FamilyDescriptor::parse("wheel:x"), InvalidArgument);
    CHECK_THROWS_AS(FamilyDescriptor::parse("wheel:99999999999999999999999"), InvalidArgument);
    CHECK_THROWS_AS(family_spec(FamilyDescriptor::parse("wheel:4,5")), InvalidArgument);
    CHECK_THROWS_AS(family_spec(FamilyDescriptor::parse("nosuch:3")), InvalidArgument);
    CHECK_THROWS_AS(family_spec(FamilyDescriptor::parse("join:K3,Q5")), InvalidArgument);
    CHECK_THROWS_AS(family_printed(FamilyDescriptor::parse("join:K3,C5")), InvalidArgument);
    CHECK(family_grammar_help().find("firefly:p,n") != std::string::npos);
}
