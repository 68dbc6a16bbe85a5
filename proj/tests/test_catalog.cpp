#include <catch2/catch_amalgamated.hpp>

#include "broken_fixtures.hpp"
#include "qzeta/arith.hpp"
#include "qzeta/catalog.hpp"

using namespace qzeta;

namespace {

PowerSeries from_ints(std::vector<long long> v) {
    PowerSeries s(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) s[i] = v[i];
    return s;
}

// q -> q^m substitution: coefficient of q^i moves to q^(m*i).
PowerSeries stretch(const PowerSeries& s, std::size_t m, std::size_t N) {
    PowerSeries r(N);
    for (std::size_t i = 0; i < s.order() && m * i < N; ++i) r[m * i] = s[i];
    return r;
}

}  // namespace

TEST_CASE("floor_div rounds toward minus infinity") {
    CHECK(floor_div(-3, 2) == -2);
    CHECK(floor_div(3, 2) == 1);
    CHECK(floor_div(-4, 2) == -2);
    CHECK(floor_div(4, -3) == -2);
}

TEST_CASE("eq13 sides at small orders") {
    auto [lhs, rhs] = build_eq13(5);
    CHECK(lhs == from_ints({1, 4, 6, 8, 13}));
    CHECK(rhs == from_ints({1, 4, 6, 8, 13}));
    auto [l1, r1] = build_eq13(1);
    CHECK(l1 == PowerSeries::one(1));
    CHECK(r1 == PowerSeries::one(1));
}

TEST_CASE("eq13 sum side carries the odd divisor sums") {
    const PowerSeries lhs = eq13_lhs(1000);
    CHECK_FALSE(equal_up_to(lhs, sigma_series(1000), 1000).has_value());
}

TEST_CASE("eq14 exponent sequence") {
    const std::size_t expected[] = {0, 3, 3, 8, 6, 13};
    for (std::size_t k = 0; k < 6; ++k) CHECK(eq14_exponent(k) == expected[k]);
}

TEST_CASE("eq14 sides at small orders") {
    auto [lhs, rhs] = build_eq14(3);
    CHECK(lhs == from_ints({1, 2, 3}));
    CHECK(rhs == from_ints({1, 2, 3}));
    auto [l1, r1] = build_eq14(1);
    CHECK(l1 == r1);
    CHECK(l1 == PowerSeries::one(1));
}

TEST_CASE("eq14 product side counts weighted triangular representations") {
    const PowerSeries rhs = eq14_rhs(500);
    for (std::uint64_t n = 0; n < 500; ++n) CHECK(rhs[n] == williams_formula(n));
}

TEST_CASE("eq18 sides at small orders") {
    auto [lhs, rhs] = build_eq18(3);
    CHECK(lhs == from_ints({1, 8, 28}));
    CHECK(rhs == from_ints({1, 8, 28}));
    auto [l1, r1] = build_eq18(1);
    CHECK(l1 == PowerSeries::one(1));
    CHECK(r1 == PowerSeries::one(1));
}

TEST_CASE("eq18 sides carry t_8") {
    const PowerSeries lhs = eq18_lhs(300);
    const PowerSeries rhs = eq18_rhs(300);
    for (std::uint64_t n = 0; n < 300; ++n) {
        CHECK(lhs[n] == t8_formula(n));
        CHECK(rhs[n] == t8_formula(n));
    }
}

TEST_CASE("gauss psi sides") {
    auto [lhs, rhs] = build_gauss_psi(11);
    CHECK(lhs == from_ints({1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1}));
    CHECK(rhs == lhs);
    auto [l1, r1] = build_gauss_psi(1);
    CHECK(l1 == PowerSeries::one(1));
    CHECK(r1 == PowerSeries::one(1));
}

TEST_CASE("psi^4 equals the four-triangular-number counts") {
    const PowerSeries psi4 = eq13_rhs(500);
    const auto counts = rep_count_table({1, 1, 1, 1}, 499);
    for (std::size_t n = 0; n < 500; ++n) CHECK(psi4[n] == counts[n]);
}

TEST_CASE("ramanujan sides at small orders") {
    auto [lhs, rhs] = build_ramanujan(5);
    CHECK(lhs == from_ints({1, 0, 2, 0, 1}));
    CHECK(rhs == from_ints({1, 0, 2, 0, 1}));
    auto [l1, r1] = build_ramanujan(1);
    CHECK(l1 == PowerSeries::one(1));
    CHECK(r1 == PowerSeries::one(1));
}

TEST_CASE("ramanujan product side is psi(q^2)^2") {
    const std::size_t N = 400;
    const PowerSeries psi_q2 = stretch(gauss_psi_rhs((N + 1) / 2 + 1), 2, N);
    CHECK(ramanujan_rhs(N) == psi_q2 * psi_q2);
}

TEST_CASE("q-integers and the Gaussian central binomial") {
    CHECK(q_int(3, 5) == from_ints({1, 1, 1, 0, 0}));
    CHECK(q_central_binomial(1, 3) == from_ints({1, 1, 0}));
    CHECK(q_central_binomial(2, 5) == from_ints({1, 1, 2, 1, 1}));
    CHECK_THROWS_AS(q_int(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(q_central_binomial(0, 3), std::invalid_argument);
}

TEST_CASE("central binomial evaluated at q=1 is the ordinary binomial") {
    // [2n over n]_q has C(2n, n) as its coefficient sum.
    const PowerSeries g = q_central_binomial(5, 26);  // degree n^2 = 25
    Coeff sum = 0;
    for (std::size_t i = 0; i < g.order(); ++i) sum += g[i];
    CHECK(sum == 252);
}

TEST_CASE("hessami-pilehrood sides at small orders") {
    auto [lhs2, rhs2] = build_hessami_pilehrood(2);
    CHECK(lhs2 == from_ints({0, 1}));
    CHECK(rhs2 == from_ints({0, 1}));
    auto [lhs4, rhs4] = build_hessami_pilehrood(4);
    CHECK(lhs4 == from_ints({0, 1, 1, -1}));
    CHECK(rhs4 == from_ints({0, 1, 1, -1}));
}

TEST_CASE("catalog shape") {
    const auto& entries = catalog();
    REQUIRE(entries.size() == 7);
    const char* ids[] = {"eq13",      "eq14",              "eq18",          "gauss-psi",
                         "ramanujan", "hessami-pilehrood", "sigma-lambert"};
    for (std::size_t i = 0; i < entries.size(); ++i) CHECK(entries[i].id == ids[i]);
    CHECK(find_identity("eq13") != nullptr);
    CHECK(find_identity("nope") == nullptr);
    CHECK_THROWS_AS(require_identity("nope"), UnknownIdentity);
    CHECK(require_identity("eq13").source.find("Theorem 1.1, Eq. (1.3)") != std::string::npos);
    CHECK_FALSE(find_identity("gauss-psi")->limit.has_value());
    CHECK(find_identity("eq14")->limit->scaling == 2);
}

TEST_CASE("every catalog identity verifies at order 500") {
    for (const auto& entry : catalog()) {
        const VerificationReport r = verify(entry, 500);
        INFO(entry.id);
        CHECK(r.equal());
        CHECK(r.order == 500);
        CHECK(r.identity == entry.id);
    }
}

TEST_CASE("verify at order 1 is trivially equal") {
    const VerificationReport r = verify(require_identity("gauss-psi"), 1);
    CHECK(r.equal());
}

TEST_CASE("broken fixtures are detected at the right coefficient") {
    for (const auto& fixture : qzeta::testing::broken_fixtures()) {
        INFO(fixture.id);
        const PowerSeries lhs = fixture.lhs(64);
        const PowerSeries rhs = fixture.rhs(64);
        const auto mm = equal_up_to(lhs, rhs, 64);
        REQUIRE(mm.has_value());
        CHECK(mm->index == fixture.expect_index);
        CHECK(mm->lhs == fixture.expect_lhs);
        CHECK(mm->rhs == fixture.expect_rhs);
    }
}
