#pragma once

// The identity catalog. Each entry describes one verified identity between
// two q-series: a Lambert-type sum against an infinite product (or another
// sum), with builders that compile both sides to truncated series at any
// order, the bibliographic source, the shipped DSL texts, and the q->1 limit
// the identity is an analogue of. Sources refer to Z.-W. Sun, "Two
// q-analogues of Euler's formula zeta(2) = pi^2/6", Colloq. Math. 158 (2019),
// and the classical results cited there.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qzeta/arith.hpp"
#include "qzeta/errors.hpp"
#include "qzeta/power_series.hpp"

namespace qzeta {

/// Floor division toward minus infinity (the mathematical floor, so
/// floor_div(-3, 2) == -2, unlike C++ integer division).
inline long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

/// Gauss's theta sum psi(q) = sum_{n>=0} q^(T_n), truncated to N.
inline PowerSeries psi_sum(std::size_t N) {
    PowerSeries s(N);
    for (std::uint64_t n = 0; triangular(n) < N; ++n) s[static_cast<std::size_t>(triangular(n))] = 1;
    return s;
}

/// [n]_q = (1 - q^n)/(1 - q) = 1 + q + ... + q^(n-1), truncated to N.
inline PowerSeries q_int(std::size_t n, std::size_t N) {
    if (n == 0) throw std::invalid_argument("q_int: n must be >= 1");
    PowerSeries s(N);
    for (std::size_t i = 0; i < n && i < N; ++i) s[i] = 1;
    return s;
}

/// Gaussian central binomial coefficient [2n over n]_q as a truncated
/// polynomial, by the q-Pascal recurrence
///   [i over j]_q = [i-1 over j-1]_q + q^j [i-1 over j]_q,
/// which is exact and division-free.
inline PowerSeries q_central_binomial(std::size_t n, std::size_t N) {
    if (n == 0) throw std::invalid_argument("q_central_binomial: n must be >= 1");
    using Poly = std::vector<Coeff>;
    std::vector<Poly> prev{{Coeff(1)}};  // row i = 0
    for (std::size_t i = 1; i <= 2 * n; ++i) {
        const std::size_t jmax = std::min(i, n);
        std::vector<Poly> cur(jmax + 1);
        cur[0] = {Coeff(1)};
        for (std::size_t j = 1; j <= jmax; ++j) {
            Poly p = prev[j - 1];
            if (j < prev.size()) {  // the [i-1 over j] summand exists
                const Poly& up = prev[j];
                if (p.size() < up.size() + j) p.resize(up.size() + j);
                for (std::size_t t = 0; t < up.size(); ++t) p[t + j] += up[t];
            }
            cur[j] = std::move(p);
        }
        prev = std::move(cur);
    }
    const Poly& result = prev[n];
    PowerSeries s(N);
    for (std::size_t t = 0; t < result.size() && t < N; ++t) s[t] = result[t];
    return s;
}

// ---------------------------------------------------------------------------
// Per-identity builders. Sums are truncated at the first index whose term can
// no longer reach q^(N-1); every term's minimal degree is stated inline.
// ---------------------------------------------------------------------------

/// sum_{k>=0} q^k (1 + q^(2k+1)) / (1 - q^(2k+1))^2. Term k starts at q^k.
inline PowerSeries eq13_lhs(std::size_t N) {
    PowerSeries acc(N);
    for (std::size_t k = 0; k < N; ++k) {
        PowerSeries numer = monomial(1, 0, N) + monomial(1, 2 * k + 1, N);
        acc += lambert_term(k, numer, 2 * k + 1, 2, N);
    }
    return acc;
}

/// prod_{n>=1} (1-q^(2n))^4 / (1-q^(2n-1))^4.
inline PowerSeries eq13_rhs(std::size_t N) {
    return expand_product({{{2, 1, -4}, {2, 0, 4}}}, N);
}

/// Exponent 2k - floor((-1)^k k/2) of the k-th term of eq14; equals 3k/2 for
/// even k and (5k+1)/2 for odd k, so it is bounded below by ceil(3k/2).
inline std::size_t eq14_exponent(std::size_t k) {
    const long long kk = static_cast<long long>(k);
    const long long parity = (k % 2 == 0) ? 1 : -1;
    return static_cast<std::size_t>(2 * kk - floor_div(parity * kk, 2));
}

/// sum_{k>=0} q^(2k - floor((-1)^k k/2)) / (1 - q^(2k+1))^2. The exponent
/// sequence is not monotone (0,3,3,8,6,...), so the loop runs over every k
/// with ceil(3k/2) < N and skips the terms that start at or beyond q^N.
inline PowerSeries eq14_lhs(std::size_t N) {
    PowerSeries acc(N);
    const PowerSeries one = PowerSeries::one(N);
    for (std::size_t k = 0; 3 * k < 2 * N; ++k) {
        const std::size_t p = eq14_exponent(k);
        if (p < N) acc += lambert_term(p, one, 2 * k + 1, 2, N);
    }
    return acc;
}

/// prod_{n>=1} (1-q^(2n))^2 (1-q^(4n))^2 / ((1-q^(2n-1))^2 (1-q^(4n-2))^2).
inline PowerSeries eq14_rhs(std::size_t N) {
    return expand_product({{{2, 1, -2}, {4, 2, -2}, {2, 0, 2}, {4, 0, 2}}}, N);
}

/// sum_{k>=0} q^(2k) (1 + 4q^(2k+1) + q^(4k+2)) / (1 - q^(2k+1))^4.
inline PowerSeries eq18_lhs(std::size_t N) {
    PowerSeries acc(N);
    for (std::size_t k = 0; 2 * k < N; ++k) {
        PowerSeries numer = monomial(1, 0, N) + monomial(4, 2 * k + 1, N) + monomial(1, 4 * k + 2, N);
        acc += lambert_term(2 * k, numer, 2 * k + 1, 4, N);
    }
    return acc;
}

/// prod_{n>=1} (1-q^(2n))^8 / (1-q^(2n-1))^8.
inline PowerSeries eq18_rhs(std::size_t N) {
    return expand_product({{{2, 1, -8}, {2, 0, 8}}}, N);
}

inline PowerSeries gauss_psi_lhs(std::size_t N) { return psi_sum(N); }

/// prod_{n>=1} (1-q^(2n)) / (1-q^(2n-1)).
inline PowerSeries gauss_psi_rhs(std::size_t N) {
    return expand_product({{{2, 1, -1}, {2, 0, 1}}}, N);
}

/// sum_{k>=0} (-q)^k / (1 - q^(2k+1)). Term k starts at q^k.
inline PowerSeries ramanujan_lhs(std::size_t N) {
    PowerSeries acc(N);
    const PowerSeries one = PowerSeries::one(N);
    for (std::size_t k = 0; k < N; ++k) {
        PowerSeries term = lambert_term(k, one, 2 * k + 1, 1, N);
        if (k % 2 == 1) term = -term;
        acc += term;
    }
    return acc;
}

/// prod_{n>=1} (1-q^(4n))^2 / (1-q^(4n-2))^2.
inline PowerSeries ramanujan_rhs(std::size_t N) {
    return expand_product({{{4, 2, -2}, {4, 0, 2}}}, N);
}

/// sum_{n>=1} q^(n^2) (1 + 2q^n) / ([n]_q^2 [2n over n]_q). Term n starts at
/// q^(n^2); every inverted series has constant term 1, so the expansion stays
/// integral throughout.
inline PowerSeries hessami_pilehrood_lhs(std::size_t N) {
    PowerSeries acc(N);
    for (std::size_t n = 1; n * n < N; ++n) {
        PowerSeries numer = monomial(1, 0, N) + monomial(2, n, N);
        PowerSeries qn = q_int(n, N);
        PowerSeries denom = qn * qn * q_central_binomial(n, N);
        acc += monomial(1, n * n, N) * numer * invert(denom);
    }
    return acc;
}

/// sum_{n>=1} q^n / [n]_q^2 = sum_{n>=1} q^n (1-q)^2 / (1-q^n)^2.
inline PowerSeries hessami_pilehrood_rhs(std::size_t N) {
    PowerSeries acc(N);
    const PowerSeries one_minus_q_sq = [&] {
        PowerSeries p = monomial(1, 0, N) - monomial(1, 1, N);
        return p * p;
    }();
    for (std::size_t n = 1; n < N; ++n)
        acc += monomial(1, n, N) * one_minus_q_sq * geometric_pow(n, 2, N);
    return acc;
}

inline std::pair<PowerSeries, PowerSeries> build_eq13(std::size_t N) { return {eq13_lhs(N), eq13_rhs(N)}; }
inline std::pair<PowerSeries, PowerSeries> build_eq14(std::size_t N) { return {eq14_lhs(N), eq14_rhs(N)}; }
inline std::pair<PowerSeries, PowerSeries> build_eq18(std::size_t N) { return {eq18_lhs(N), eq18_rhs(N)}; }
inline std::pair<PowerSeries, PowerSeries> build_gauss_psi(std::size_t N) { return {gauss_psi_lhs(N), gauss_psi_rhs(N)}; }
inline std::pair<PowerSeries, PowerSeries> build_ramanujan(std::size_t N) { return {ramanujan_lhs(N), ramanujan_rhs(N)}; }
inline std::pair<PowerSeries, PowerSeries> build_hessami_pilehrood(std::size_t N) {
    return {hessami_pilehrood_lhs(N), hessami_pilehrood_rhs(N)};
}

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

/// Named constants that the scaled identities converge to as q -> 1.
enum class LimitConstant {
    pi,            // Gamma(1/2)^2
    pi_over_4,     // Leibniz
    pi_sq_over_4,  // 4 * zeta(2) - 4 * zeta(2)/... scaled eq13 / sigma series
    pi_sq_over_6,  // zeta(2)
    pi_sq_over_8,  // sum 1/(2k+1)^2
    pi_4_over_16,  // 6 * sum 1/(2k+1)^4
};

inline std::string_view limit_constant_name(LimitConstant c) {
    switch (c) {
        case LimitConstant::pi: return "pi";
        case LimitConstant::pi_over_4: return "pi/4";
        case LimitConstant::pi_sq_over_4: return "pi^2/4";
        case LimitConstant::pi_sq_over_6: return "pi^2/6";
        case LimitConstant::pi_sq_over_8: return "pi^2/8";
        case LimitConstant::pi_4_over_16: return "pi^4/16";
    }
    return "?";
}

/// (1-q)^scaling times the identity's value tends to the constant as q -> 1.
struct LimitTarget {
    LimitConstant constant;
    int scaling = 0;
};

struct IdentityEntry {
    std::string id;
    std::string description;
    std::string source;  // bibliographic reference
    std::function<PowerSeries(std::size_t)> lhs;
    std::function<PowerSeries(std::size_t)> rhs;
    std::optional<LimitTarget> limit;
    std::string dsl_lhs;
    std::string dsl_rhs;
};

/// Outcome of one coefficientwise comparison.
struct VerificationReport {
    std::string identity;
    std::size_t order = 0;
    std::optional<Mismatch> first_mismatch;  // empty <=> sides equal through q^(order-1)
    double elapsed_ms = 0.0;

    bool equal() const { return !first_mismatch.has_value(); }
};

/// The seven shipped identities, in the fixed order used by `verify all`.
inline const std::vector<IdentityEntry>& catalog() {
    static const std::vector<IdentityEntry> entries = [] {
        std::vector<IdentityEntry> v;
        v.push_back({"eq13",
                     "sum q^k(1+q^(2k+1))/(1-q^(2k+1))^2 = prod ((1-q^(2n))/(1-q^(2n-1)))^4",
                     "Sun 2019, Theorem 1.1, Eq. (1.3)",
                     eq13_lhs, eq13_rhs,
                     LimitTarget{LimitConstant::pi_sq_over_4, 2},
                     "sum(k=0..inf, q^k*(1+q^(2*k+1))/(1-q^(2*k+1))^2)",
                     "prod(n=1..inf, (1-q^(2*n))^4/(1-q^(2*n-1))^4)"});
        v.push_back({"eq14",
                     "sum q^(2k-floor((-1)^k k/2))/(1-q^(2k+1))^2 = "
                     "prod ((1-q^(2n))(1-q^(4n))/((1-q^(2n-1))(1-q^(4n-2))))^2",
                     "Sun 2019, Theorem 1.1, Eq. (1.4)",
                     eq14_lhs, eq14_rhs,
                     LimitTarget{LimitConstant::pi_sq_over_8, 2},
                     "sum(k=0..inf, q^(2*k-floor((-1)^k*k/2))/(1-q^(2*k+1))^2)",
                     "prod(n=1..inf, (1-q^(2*n))^2*(1-q^(4*n))^2/((1-q^(2*n-1))^2*(1-q^(4*n-2))^2))"});
        v.push_back({"eq18",
                     "sum q^(2k)(1+4q^(2k+1)+q^(4k+2))/(1-q^(2k+1))^4 = "
                     "prod ((1-q^(2n))/(1-q^(2n-1)))^8",
                     "Sun 2019, Theorem 1.2, Eq. (1.8)",
                     eq18_lhs, eq18_rhs,
                     LimitTarget{LimitConstant::pi_4_over_16, 4},
                     "sum(k=0..inf, q^(2*k)*(1+4*q^(2*k+1)+q^(4*k+2))/(1-q^(2*k+1))^4)",
                     "prod(n=1..inf, (1-q^(2*n))^8/(1-q^(2*n-1))^8)"});
        v.push_back({"gauss-psi",
                     "sum q^(T_n) = prod (1-q^(2n))/(1-q^(2n-1))",
                     "Gauss; Sun 2019, Lemma 2.1, Eq. (2.2)",
                     gauss_psi_lhs, gauss_psi_rhs,
                     std::nullopt,
                     "sum(n=0..inf, q^(floor(n*(n+1)/2)))",
                     "prod(n=1..inf, (1-q^(2*n))/(1-q^(2*n-1)))"});
        v.push_back({"ramanujan",
                     "sum (-q)^k/(1-q^(2k+1)) = prod ((1-q^(4n))/(1-q^(4n-2)))^2",
                     "Ramanujan (Berndt, Example (iv)); Sun 2019, Section 1",
                     ramanujan_lhs, ramanujan_rhs,
                     LimitTarget{LimitConstant::pi_over_4, 1},
                     "sum(k=0..inf, (-1)^k*q^k/(1-q^(2*k+1)))",
                     "prod(n=1..inf, (1-q^(4*n))^2/(1-q^(4*n-2))^2)"});
        v.push_back({"hessami-pilehrood",
                     "sum q^(n^2)(1+2q^n)/([n]_q^2 [2n over n]_q) = sum q^n/[n]_q^2",
                     "Hessami Pilehrood & Hessami Pilehrood 2011; Sun 2019, Section 1",
                     hessami_pilehrood_lhs, hessami_pilehrood_rhs,
                     LimitTarget{LimitConstant::pi_sq_over_6, 0},
                     "sum(n=1..inf, q^(n*n)*(1+2*q^n)*prod(j=1..n, ((1-q^j)/(1-q^1))^2)"
                     "/(((1-q^n)/(1-q^1))^2*prod(k=1..2*n, (1-q^k)/(1-q^1))))",
                     "sum(n=1..inf, q^n/((1-q^n)/(1-q^1))^2)"});
        // The divisor coefficients sigma(2n+1) have no direct DSL form; the
        // shipped rhs text is the equivalent Gauss product psi(q)^4.
        v.push_back({"sigma-lambert",
                     "sum q^k(1+q^(2k+1))/(1-q^(2k+1))^2 = sum sigma(2n+1) q^n",
                     "Sun 2019, Lemma 2.3, Eq. (2.4)",
                     eq13_lhs, [](std::size_t N) { return sigma_series(N); },
                     LimitTarget{LimitConstant::pi_sq_over_4, 2},
                     "sum(k=0..inf, q^k*(1+q^(2*k+1))/(1-q^(2*k+1))^2)",
                     "prod(n=1..inf, (1-q^(2*n))^4/(1-q^(2*n-1))^4)"});
        return v;
    }();
    return entries;
}

inline const IdentityEntry* find_identity(std::string_view id) {
    for (const auto& e : catalog())
        if (e.id == id) return &e;
    return nullptr;
}

inline const IdentityEntry& require_identity(std::string_view id) {
    const IdentityEntry* e = find_identity(id);
    if (!e) throw UnknownIdentity("unknown identity id: " + std::string(id));
    return *e;
}

/// Build both sides at order N and compare coefficientwise.
inline VerificationReport verify(const IdentityEntry& entry, std::size_t N) {
    const auto t0 = std::chrono::steady_clock::now();
    const PowerSeries lhs = entry.lhs(N);
    const PowerSeries rhs = entry.rhs(N);
    VerificationReport report;
    report.identity = entry.id;
    report.order = N;
    report.first_mismatch = equal_up_to(lhs, rhs, N);
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

}  // namespace qzeta
