#pragma once

// Exact scalar number theory: divisor sums, triangular-number representation
// counts, the classical closed forms they must match, and Bernoulli numbers.
// Everything here is deliberately independent of the series engine so the two
// can cross-check each other.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qzeta/errors.hpp"
#include "qzeta/power_series.hpp"

namespace qzeta {

using Rational = boost::multiprecision::cpp_rational;

/// T_n = n(n+1)/2.
inline std::uint64_t triangular(std::uint64_t n) { return n % 2 == 0 ? (n / 2) * (n + 1) : n * ((n + 1) / 2); }

/// Sum of the positive divisors of m, by trial division up to sqrt(m).
inline std::uint64_t sigma(std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("sigma: argument must be >= 1");
    std::uint64_t s = 0;
    for (std::uint64_t d = 1; d * d <= m; ++d) {
        if (m % d != 0) continue;
        s += d;
        if (d != m / d) s += m / d;
    }
    return s;
}

/// Table of sigma(2n+1) for n < count. Small tables use trial division; past
/// 10^4 entries a smallest-prime-factor sieve tabulates the odd range so the
/// whole table costs O(M log M) instead of O(M sqrt M).
inline std::vector<std::uint64_t> sigma_odd_table(std::size_t count) {
    std::vector<std::uint64_t> table(count);
    if (count <= 10000) {
        for (std::size_t n = 0; n < count; ++n) table[n] = sigma(2 * static_cast<std::uint64_t>(n) + 1);
        return table;
    }
    const std::uint64_t limit = 2 * static_cast<std::uint64_t>(count) - 1;  // largest odd argument
    std::vector<std::uint32_t> spf(limit + 1, 0);                           // smallest prime factor, odd numbers only used
    for (std::uint64_t i = 3; i * i <= limit; i += 2) {
        if (spf[i] != 0) continue;
        for (std::uint64_t j = i * i; j <= limit; j += 2 * i)
            if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
    }
    for (std::size_t n = 0; n < count; ++n) {
        std::uint64_t m = 2 * static_cast<std::uint64_t>(n) + 1;
        std::uint64_t s = 1;
        while (m > 1) {
            const std::uint64_t p = spf[m] ? spf[m] : m;  // spf==0 past the sieve loop means m is prime
            std::uint64_t pk = 1, geom = 1;
            while (m % p == 0) {
                m /= p;
                pk *= p;
                geom += pk;
            }
            s *= geom;
        }
        table[n] = s;
    }
    return table;
}

/// How many tuples (x_1..x_k) of non-negative integers satisfy
/// sum_i w_i * T_{x_i} = n.
struct RepCountQuery {
    std::vector<std::uint64_t> weights;
    std::uint64_t target = 0;
};

/// Counts for all targets 0..n_max at once: one DP layer per weight, each a
/// convolution with the indicator of {w * T_t : t >= 0}. No closed form is
/// consulted, so this is a genuine oracle for the divisor-sum identities.
inline std::vector<Coeff> rep_count_table(const std::vector<std::uint64_t>& weights,
                                          std::uint64_t n_max) {
    if (weights.empty()) throw std::invalid_argument("rep_count: weights must be non-empty");
    const std::size_t size = static_cast<std::size_t>(n_max) + 1;
    std::vector<Coeff> dp(size);
    dp[0] = 1;
    std::vector<Coeff> next(size);
    for (std::uint64_t w : weights) {
        if (w == 0) throw std::invalid_argument("rep_count: weights must be positive");
        std::fill(next.begin(), next.end(), Coeff(0));
        for (std::uint64_t t = 0; w * triangular(t) <= n_max; ++t) {
            const std::size_t shift = static_cast<std::size_t>(w * triangular(t));
            for (std::size_t j = shift; j < size; ++j) next[j] += dp[j - shift];
        }
        dp.swap(next);
    }
    return dp;
}

inline Coeff rep_count(const RepCountQuery& query) {
    return rep_count_table(query.weights, query.target)[static_cast<std::size_t>(query.target)];
}

/// t_4(n) = sigma(2n+1).
inline Coeff t4_formula(std::uint64_t n) { return Coeff(sigma(2 * n + 1)); }

/// t_8(n) = sum over odd divisors d of n+1 of (n+1)^3 / d^3.
inline Coeff t8_formula(std::uint64_t n) {
    const std::uint64_t m = n + 1;
    Coeff s = 0;
    const Coeff cube = Coeff(m) * m * m;
    for (std::uint64_t d = 1; d * d <= m; ++d) {
        if (m % d != 0) continue;
        if (d % 2 == 1) s += cube / (Coeff(d) * d * d);
        const std::uint64_t e = m / d;
        if (e != d && e % 2 == 1) s += cube / (Coeff(e) * e * e);
    }
    return s;
}

/// Number of (u,v,x,y) with T_u + T_v + 2T_x + 2T_y = n, in closed form:
/// sum over divisors d of 4n+3 of (d - (-1)^((d-1)/2)) / 4. The sum is formed
/// first and divided once; divisibility by 4 is asserted rather than rounded.
inline Coeff williams_formula(std::uint64_t n) {
    const std::uint64_t m = 4 * n + 3;
    Coeff s = 0;
    auto add_term = [&](std::uint64_t d) {
        // d is odd; the sign is +1 for d = 1 (mod 4) and -1 for d = 3 (mod 4).
        s += Coeff(d) - (d % 4 == 1 ? 1 : -1);
    };
    for (std::uint64_t d = 1; d * d <= m; ++d) {
        if (m % d != 0) continue;
        add_term(d);
        if (d != m / d) add_term(m / d);
    }
    if (s % 4 != 0)
        throw NonIntegralResult("williams_formula: divisor sum " + s.str() +
                                " not divisible by 4 at n=" + std::to_string(n));
    return s / 4;
}

/// r_4(n) = 8 * sum of divisors of n not divisible by 4.
inline Coeff r4_formula(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("r4_formula: argument must be >= 1");
    Coeff s = 0;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        if (d % 4 != 0) s += d;
        const std::uint64_t e = n / d;
        if (e != d && e % 4 != 0) s += e;
    }
    return 8 * s;
}

namespace detail {
inline bool is_square(std::uint64_t v, std::uint64_t& root) {
    std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    root = r;
    return r * r == v;
}
}  // namespace detail

/// Count of signed ordered 4-tuples (w,x,y,z) in Z^4 with w^2+x^2+y^2+z^2 = n,
/// by direct enumeration of the first three coordinates.
inline Coeff r4_bruteforce(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("r4_bruteforce: argument must be >= 1");
    const std::int64_t s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n))) + 1;
    Coeff count = 0;
    for (std::int64_t w = -s; w <= s; ++w) {
        if (w * w > static_cast<std::int64_t>(n)) continue;
        for (std::int64_t x = -s; x <= s; ++x) {
            const std::int64_t rem2 = static_cast<std::int64_t>(n) - w * w - x * x;
            if (rem2 < 0) continue;
            for (std::int64_t y = -s; y <= s; ++y) {
                const std::int64_t rem = rem2 - y * y;
                if (rem < 0) continue;
                std::uint64_t z;
                if (detail::is_square(static_cast<std::uint64_t>(rem), z))
                    count += (z == 0) ? 1 : 2;
            }
        }
    }
    return count;
}

/// Bernoulli numbers B_0..B_M as exact rationals, from B_0 = 1 and
/// sum_{k=0}^{n} C(n+1,k) B_k = 0 for n >= 1.
inline std::vector<Rational> bernoulli(std::size_t M) {
    std::vector<Rational> B(M + 1);
    B[0] = 1;
    std::vector<Coeff> row = {1, 1};  // binomials C(1, *)
    for (std::size_t n = 1; n <= M; ++n) {
        // row currently holds C(n, 0..n); extend to C(n+1, 0..n+1).
        std::vector<Coeff> next(n + 2);
        next[0] = 1;
        next[n + 1] = 1;
        for (std::size_t k = 1; k <= n; ++k) next[k] = row[k - 1] + row[k];
        row.swap(next);
        Rational acc = 0;
        for (std::size_t k = 0; k < n; ++k) acc += Rational(row[k]) * B[k];
        B[n] = -acc / Rational(row[n]);  // C(n+1, n) = n+1
    }
    return B;
}

/// Series with coefficient sigma(2n+1) at q^n, for n < N.
inline PowerSeries sigma_series(std::size_t N) {
    const auto table = sigma_odd_table(N);
    PowerSeries s(N);
    for (std::size_t n = 0; n < N; ++n) s[n] = table[n];
    return s;
}

}  // namespace qzeta
