#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "qzeta/arith.hpp"

using namespace qzeta;

TEST_CASE("triangular numbers") {
    CHECK(triangular(0) == 0);
    CHECK(triangular(3) == 6);
    CHECK(triangular(10) == 55);
}

TEST_CASE("sigma by trial division") {
    CHECK(sigma(1) == 1);
    CHECK(sigma(9) == 13);   // 1 + 3 + 9
    CHECK(sigma(15) == 24);  // 1 + 3 + 5 + 15
    CHECK_THROWS_AS(sigma(0), std::invalid_argument);
}

TEST_CASE("sigma is multiplicative on coprime arguments") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<std::uint64_t> pick(1, 2000);
    int checked = 0;
    while (checked < 100) {
        const std::uint64_t a = pick(rng), b = pick(rng);
        if (std::gcd(a, b) != 1) continue;
        CHECK(sigma(a * b) == sigma(a) * sigma(b));
        ++checked;
    }
}

TEST_CASE("sigma_odd_table sieve path matches trial division") {
    const auto table = sigma_odd_table(12000);  // > 10^4 forces the sieve
    REQUIRE(table.size() == 12000);
    std::mt19937 rng(5);
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = rng() % table.size();
        CHECK(table[n] == sigma(2 * static_cast<std::uint64_t>(n) + 1));
    }
    CHECK(table[0] == 1);
    CHECK(table[11999] == sigma(23999));
}

TEST_CASE("rep_count examples") {
    CHECK(rep_count({{1, 1, 1, 1}, 0}) == 1);
    CHECK(rep_count({{1, 1, 1, 1}, 4}) == 13);
    CHECK(rep_count({{1, 1, 2, 2}, 2}) == 3);
    CHECK_THROWS_AS(rep_count({{}, 3}), std::invalid_argument);
}

TEST_CASE("closed-form examples") {
    CHECK(t4_formula(4) == 13);
    CHECK(t8_formula(2) == 28);
    CHECK(williams_formula(0) == 1);
    CHECK(r4_formula(1) == 8);
    CHECK(r4_formula(2) == 24);
    CHECK(r4_formula(4) == 24);  // the divisor 4 is excluded
    CHECK(r4_bruteforce(1) == 8);
    CHECK(r4_bruteforce(2) == 24);
}

TEST_CASE("t4: four triangular numbers vs sigma(2n+1)") {
    const auto counts = rep_count_table({1, 1, 1, 1}, 1000);
    for (std::uint64_t n = 0; n <= 1000; ++n) CHECK(counts[n] == t4_formula(n));
}

TEST_CASE("t8: eight triangular numbers vs the cube divisor sum") {
    const auto counts = rep_count_table({1, 1, 1, 1, 1, 1, 1, 1}, 300);
    for (std::uint64_t n = 0; n <= 300; ++n) CHECK(counts[n] == t8_formula(n));
}

TEST_CASE("weighted count 1,1,2,2 vs the quarter divisor sum") {
    const auto counts = rep_count_table({1, 1, 2, 2}, 500);
    for (std::uint64_t n = 0; n <= 500; ++n) CHECK(counts[n] == williams_formula(n));
}

TEST_CASE("r4 brute force vs 8 * non-multiples-of-4 divisor sum") {
    for (std::uint64_t n = 1; n <= 500; ++n) CHECK(r4_bruteforce(n) == r4_formula(n));
}

TEST_CASE("Bernoulli numbers") {
    const auto B = bernoulli(40);
    CHECK(B[0] == 1);
    CHECK(B[1] == Rational(-1, 2));
    CHECK(B[2] == Rational(1, 6));
    CHECK(B[3] == 0);
    CHECK(B[4] == Rational(-1, 30));

    // Residuals of the defining recurrence vanish exactly.
    for (std::size_t n = 1; n <= 40; ++n) {
        Rational acc = 0;
        Coeff c = 1;  // C(n+1, k), k ascending
        for (std::size_t k = 0; k <= n; ++k) {
            acc += Rational(c) * B[k];
            c *= Coeff(n + 1 - k);
            c /= Coeff(k + 1);
        }
        CHECK(acc == 0);
    }
}

TEST_CASE("sigma_series") {
    PowerSeries expected(5);
    expected[0] = 1;
    expected[1] = 4;
    expected[2] = 6;
    expected[3] = 8;
    expected[4] = 13;
    CHECK(sigma_series(5) == expected);
    CHECK(sigma_series(1) == PowerSeries::one(1));
    CHECK(sigma_series(6)[5] == 12);  // sigma(11)
}
