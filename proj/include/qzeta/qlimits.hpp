#pragma once

// High-precision numeric evaluation of the catalog identities at real
// 0 < q < 1, used to watch the q -> 1 limits the identities are analogues of:
// scaled by (1-q)^s, eq13 tends to pi^2/4, eq14 to pi^2/8, eq18 to pi^4/16,
// ramanujan to pi/4, and Jackson's q-Gamma gives Gamma_{q^2}(1/2)^2 -> pi.
// Both sides of every identity are evaluated by their own term/factor
// formulas in real arithmetic (never through truncated coefficients, whose
// tails decay too slowly near q = 1).
//
// Precision is a per-call parameter (EvalOptions::digits); each entry point
// installs it for the duration of the call through a save/restore scope, so
// nothing leaks between calls.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "qzeta/arith.hpp"
#include "qzeta/catalog.hpp"
#include "qzeta/errors.hpp"

namespace qzeta::limits {

using Real = boost::multiprecision::mpfr_float;

/// Installs a working precision (decimal digits) and restores the previous
/// one on exit. Locals constructed inside the scope pick it up.
class PrecisionScope {
public:
    explicit PrecisionScope(unsigned digits10) : saved_(Real::default_precision()) {
        Real::default_precision(digits10);
    }
    ~PrecisionScope() { Real::default_precision(saved_); }
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_;
};

struct EvalOptions {
    unsigned digits = 50;                       // working decimal precision P
    unsigned long long max_terms = 1'000'000;   // term/factor ceiling

    /// Relative stopping tolerance: 10^-(P-5).
    Real epsilon() const {
        return boost::multiprecision::pow(Real(10), -static_cast<int>(digits) + 5);
    }
};

/// pi at the current working precision (mpfr's own constant).
inline Real pi_value() {
    Real p;
    mpfr_const_pi(p.backend().data(), MPFR_RNDN);
    return p;
}

/// Copy of x carrying the current working precision. Copies and assignments
/// of mpfr values inherit the source's precision, so caller-supplied numbers
/// must be rebased once a PrecisionScope is installed or they would cap every
/// operation they touch. mpfr_prec_round preserves the value exactly when the
/// precision grows.
inline Real at_working_precision(const Real& x) {
    Real y;  // fresh variable at the scoped default precision
    const mpfr_prec_t target = mpfr_get_prec(y.backend().data());
    y = x;
    mpfr_prec_round(y.backend().data(), target, MPFR_RNDN);
    return y;
}

inline Real to_real(const Coeff& x) { return Real(x.str()); }
inline Real to_real(const Rational& x) {
    return Real(boost::multiprecision::numerator(x).str()) /
           Real(boost::multiprecision::denominator(x).str());
}

inline Real limit_constant_value(LimitConstant c) {
    const Real pi = pi_value();
    switch (c) {
        case LimitConstant::pi: return pi;
        case LimitConstant::pi_over_4: return pi / 4;
        case LimitConstant::pi_sq_over_4: return pi * pi / 4;
        case LimitConstant::pi_sq_over_6: return pi * pi / 6;
        case LimitConstant::pi_sq_over_8: return pi * pi / 8;
        case LimitConstant::pi_4_over_16: return pi * pi * pi * pi / 16;
    }
    throw std::invalid_argument("unknown limit constant");
}

namespace detail {

[[noreturn]] inline void no_convergence(const std::string& what, unsigned long long ceiling) {
    throw NoConvergence(what + ": ceiling of " + std::to_string(ceiling) + " terms exceeded");
}

/// Generic term summation with the relative stopping rule |term| < eps*|sum|.
template <typename TermFn>
Real sum_terms(TermFn next_term, const Real& eps, unsigned long long ceiling,
               const std::string& label) {
    Real sum = 0;
    for (unsigned long long k = 0; k < ceiling; ++k) {
        const Real term = next_term(k);
        sum += term;
        if (abs(term) < eps * abs(sum)) return sum;
    }
    no_convergence(label, ceiling);
}

/// Generic product accumulation, stopping once a factor is within eps of 1.
template <typename FactorFn>
Real multiply_factors(FactorFn next_factor, const Real& eps, unsigned long long ceiling,
                      const std::string& label) {
    Real prod = 1;
    for (unsigned long long n = 1; n < ceiling; ++n) {
        const Real f = next_factor(n);
        prod *= f;
        if (abs(f - 1) < eps) return prod;
    }
    no_convergence(label, ceiling);
}

}  // namespace detail

/// Direct real-arithmetic evaluation of the identity's sum (lhs) side.
inline Real eval_lambert_side(std::string_view id, const Real& q0, const EvalOptions& opts = {}) {
    if (!(q0 > 0 && q0 < 1)) throw std::invalid_argument("eval_lambert_side: need 0 < q < 1");
    PrecisionScope scope(opts.digits);
    const Real q = at_working_precision(q0);
    const Real eps = opts.epsilon();
    const std::string label = "eval_lambert_side(" + std::string(id) + ")";

    if (id == "eq13" || id == "sigma-lambert") {
        Real qk = 1, q2k1 = q;  // q^k, q^(2k+1)
        return detail::sum_terms(
            [&](unsigned long long) {
                const Real d = 1 - q2k1;
                const Real term = qk * (1 + q2k1) / (d * d);
                qk *= q;
                q2k1 *= q * q;
                return term;
            },
            eps, opts.max_terms, label);
    }
    if (id == "eq14") {
        // Terms paired as k = 2j and k = 2j+1: exponents 3j and 5j+3 over
        // (1-q^(4j+1))^2 and (1-q^(4j+3))^2 respectively.
        Real q3j = 1, q5j3 = q * q * q, q4j1 = q, q4j3 = q * q * q;
        return detail::sum_terms(
            [&](unsigned long long) {
                const Real d_even = 1 - q4j1, d_odd = 1 - q4j3;
                const Real term = q3j / (d_even * d_even) + q5j3 / (d_odd * d_odd);
                const Real q2 = q * q, q4 = q2 * q2;
                q3j *= q2 * q;
                q5j3 *= q4 * q;
                q4j1 *= q4;
                q4j3 *= q4;
                return term;
            },
            eps, opts.max_terms, label);
    }
    if (id == "eq18") {
        Real q2k = 1, u = q;  // q^(2k), q^(2k+1)
        return detail::sum_terms(
            [&](unsigned long long) {
                const Real d = 1 - u;
                const Real d2 = d * d;
                const Real term = q2k * (1 + 4 * u + u * u) / (d2 * d2);
                q2k *= q * q;
                u *= q * q;
                return term;
            },
            eps, opts.max_terms, label);
    }
    if (id == "gauss-psi") {
        Real qT = 1, qn = 1;  // q^(T_n), q^n
        return detail::sum_terms(
            [&](unsigned long long) {
                const Real term = qT;
                qn *= q;
                qT *= qn;  // T_(n+1) = T_n + (n+1)
                return term;
            },
            eps, opts.max_terms, label);
    }
    if (id == "ramanujan") {
        Real qk = 1, q2k1 = q;
        return detail::sum_terms(
            [&](unsigned long long k) {
                Real term = qk / (1 - q2k1);
                if (k % 2 == 1) term = -term;
                qk *= q;
                q2k1 *= q * q;
                return term;
            },
            eps, opts.max_terms, label);
    }
    if (id == "hessami-pilehrood") {
        // q^(n^2) (1 + 2q^n) / ([n]^2 binom), with the central q-binomial
        // updated incrementally: binom_n = binom_(n-1) [2n-1][2n]/[n]^2.
        const Real one_minus_q = 1 - q;
        Real qnsq = q, qn = q, q2n = q * q, binom = (1 - q2n) / one_minus_q;  // n = 1
        return detail::sum_terms(
            [&](unsigned long long k) {
                const Real qint_n = (1 - qn) / one_minus_q;
                const Real term = qnsq * (1 + 2 * qn) / (qint_n * qint_n * binom);
                // advance n -> n+1
                const Real qn1 = qn * q;                         // q^(n+1)
                qnsq *= qn * qn1;                                // q^((n+1)^2)
                const Real q2n1 = q2n * q, q2n2 = q2n * q * q;   // q^(2n+1), q^(2n+2)
                const Real qint_2n1 = (1 - q2n1) / one_minus_q;
                const Real qint_2n2 = (1 - q2n2) / one_minus_q;
                const Real qint_n1 = (1 - qn1) / one_minus_q;
                binom *= qint_2n1 * qint_2n2 / (qint_n1 * qint_n1);
                qn = qn1;
                q2n = q2n2;
                (void)k;
                return term;
            },
            eps, opts.max_terms, label);
    }
    throw UnknownIdentity("eval_lambert_side: no sum-side formula for '" + std::string(id) + "'");
}

/// Direct real-arithmetic evaluation of the identity's product (rhs) side;
/// for entries whose rhs is itself a series, the series is summed instead.
inline Real eval_product_side(std::string_view id, const Real& q0, const EvalOptions& opts = {}) {
    if (!(q0 >= 0 && q0 < 1)) throw std::invalid_argument("eval_product_side: need 0 <= q < 1");
    PrecisionScope scope(opts.digits);
    const Real q = at_working_precision(q0);
    if (q == 0) return Real(1);  // empty-product limit
    const Real eps = opts.epsilon();
    const std::string label = "eval_product_side(" + std::string(id) + ")";

    auto even_odd_quotient = [&](int power) {
        // prod ((1-q^(2n))/(1-q^(2n-1)))^power
        Real q2n = q * q, q2n1 = q;
        return detail::multiply_factors(
            [&](unsigned long long) {
                const Real r = (1 - q2n) / (1 - q2n1);
                Real f = 1;
                for (int i = 0; i < power; ++i) f *= r;
                q2n *= q * q;
                q2n1 *= q * q;
                return f;
            },
            eps, opts.max_terms, label);
    };

    if (id == "eq13") return even_odd_quotient(4);
    if (id == "eq18") return even_odd_quotient(8);
    if (id == "gauss-psi") return even_odd_quotient(1);
    if (id == "eq14") {
        Real q2n = q * q, q2n1 = q, q4n = q2n * q2n, q4n2 = q * q;
        return detail::multiply_factors(
            [&](unsigned long long) {
                const Real r = (1 - q2n) * (1 - q4n) / ((1 - q2n1) * (1 - q4n2));
                const Real f = r * r;
                const Real q2 = q * q, q4 = q2 * q2;
                q2n *= q2;
                q2n1 *= q2;
                q4n *= q4;
                q4n2 *= q4;
                return f;
            },
            eps, opts.max_terms, label);
    }
    if (id == "ramanujan") {
        Real q4n = q * q * q * q, q4n2 = q * q;
        return detail::multiply_factors(
            [&](unsigned long long) {
                const Real r = (1 - q4n) / (1 - q4n2);
                const Real f = r * r;
                const Real q4 = q * q * q * q;
                q4n *= q4;
                q4n2 *= q4;
                return f;
            },
            eps, opts.max_terms, label);
    }
    if (id == "hessami-pilehrood") {
        const Real c = (1 - q) * (1 - q);
        Real qn = q;  // q^n
        return detail::sum_terms(
            [&](unsigned long long k) {
                const Real d = 1 - qn;
                const Real term = qn * c / (d * d);
                qn *= q;
                (void)k;
                return term;
            },
            eps, opts.max_terms, label);
    }
    if (id == "sigma-lambert") {
        Real qn = 1;
        return detail::sum_terms(
            [&](unsigned long long n) {
                const Real term = Real(sigma(2 * n + 1)) * qn;
                qn *= q;
                return term;
            },
            eps, opts.max_terms, label);
    }
    throw UnknownIdentity("eval_product_side: no product-side formula for '" + std::string(id) +
                          "'");
}

/// Jackson's q-Gamma function Gamma_q(x) = (1-q)^(1-x) prod (1-q^n)/(1-q^(n+x-1)).
inline Real q_gamma(const Real& x, const Real& q0, const EvalOptions& opts = {}) {
    if (!(q0 > 0 && q0 < 1)) throw std::invalid_argument("q_gamma: need 0 < q < 1");
    if (!(x > 0)) throw std::invalid_argument("q_gamma: need x > 0");
    PrecisionScope scope(opts.digits);
    const Real q = at_working_precision(q0);
    const Real ex = at_working_precision(x);
    const Real eps = opts.epsilon();
    Real qn = q;                                              // q^n
    Real qnx = boost::multiprecision::pow(q, ex);             // q^(n+x-1), n = 1
    const Real prod = detail::multiply_factors(
        [&](unsigned long long) {
            const Real f = (1 - qn) / (1 - qnx);
            qn *= q;
            qnx *= q;
            return f;
        },
        eps, opts.max_terms, "q_gamma");
    return boost::multiprecision::pow(1 - q, 1 - ex) * prod;
}

// ---------------------------------------------------------------------------
// Limit experiments along q_j = 1 - 2^(-j)
// ---------------------------------------------------------------------------

struct LimitPoint {
    int j = 0;
    Real q;
    Real lhs_scaled;                 // (1-q)^s * sum side
    std::optional<Real> rhs_scaled;  // (1-q)^s * product side, when available
    Real abs_error;                  // |lhs_scaled - target|
};

struct LimitExperiment {
    std::string name;      // identity id or "gamma-half"
    int scaling = 0;
    std::string target_name;
    Real target;
    std::vector<LimitPoint> points;

    /// |error| strictly decreases from the second point on.
    bool errors_decreasing_from_second() const {
        for (std::size_t i = 1; i + 1 < points.size(); ++i)
            if (!(points[i + 1].abs_error < points[i].abs_error)) return false;
        return true;
    }

    Real final_relative_error() const {
        return points.empty() ? Real(0) : Real(points.back().abs_error / abs(target));
    }
};

/// Evaluation points q_j = 1 - 2^(-j), j = j_min..j_max, each side scaled by
/// (1-q)^s. The name is a catalog id with a limit target, or "gamma-half" for
/// the Gamma_{q^2}(1/2)^2 -> pi experiment.
inline LimitExperiment run_limit_experiment(std::string_view name, int j_min, int j_max,
                                            const EvalOptions& opts = {},
                                            std::optional<int> scaling_override = std::nullopt) {
    if (j_min < 1 || j_min > j_max || j_max > 20)
        throw std::invalid_argument("run_limit_experiment: need 1 <= j_min <= j_max <= 20");
    PrecisionScope scope(opts.digits);

    LimitExperiment ex;
    ex.name = std::string(name);
    const bool gamma_half = (name == "gamma-half");
    if (gamma_half) {
        ex.scaling = scaling_override.value_or(0);
        ex.target_name = "pi";
        ex.target = pi_value();
    } else {
        const IdentityEntry& entry = require_identity(name);
        if (!entry.limit.has_value())
            throw std::invalid_argument("identity '" + std::string(name) +
                                        "' has no limit target");
        ex.scaling = scaling_override.value_or(entry.limit->scaling);
        ex.target_name = std::string(limit_constant_name(entry.limit->constant));
        ex.target = limit_constant_value(entry.limit->constant);
    }

    for (int j = j_min; j <= j_max; ++j) {
        LimitPoint pt;
        pt.j = j;
        pt.q = 1 - boost::multiprecision::ldexp(Real(1), -j);
        const Real scale = boost::multiprecision::pow(1 - pt.q, ex.scaling);
        if (gamma_half) {
            const Real g = q_gamma(Real(1) / 2, pt.q * pt.q, opts);
            pt.lhs_scaled = scale * g * g;
            // Independent route: Gamma_{q^2}(1/2)^2 = (1-q^2) psi_prod(q)^2.
            const Real psi = eval_product_side("gauss-psi", pt.q, opts);
            pt.rhs_scaled = scale * (1 - pt.q * pt.q) * psi * psi;
        } else {
            pt.lhs_scaled = scale * eval_lambert_side(ex.name, pt.q, opts);
            pt.rhs_scaled = scale * eval_product_side(ex.name, pt.q, opts);
        }
        pt.abs_error = abs(pt.lhs_scaled - ex.target);
        ex.points.push_back(std::move(pt));
    }
    return ex;
}

// ---------------------------------------------------------------------------
// Exact constants and classical partial sums/products
// ---------------------------------------------------------------------------

/// zeta(2m) = (-1)^(m-1) 2^(2m-1) pi^(2m) B_(2m) / (2m)!.
inline Real zeta_even(unsigned m, const EvalOptions& opts = {}) {
    if (m == 0) throw std::invalid_argument("zeta_even: need m >= 1");
    PrecisionScope scope(opts.digits);
    const auto B = bernoulli(2 * m);
    Coeff factorial = 1;
    for (unsigned i = 2; i <= 2 * m; ++i) factorial *= i;
    const Real pi = pi_value();
    Real value = boost::multiprecision::pow(pi, 2 * m) *
                 boost::multiprecision::pow(Real(2), 2 * static_cast<int>(m) - 1) *
                 to_real(B[2 * m]) / to_real(factorial);
    if (m % 2 == 0) value = -value;  // (-1)^(m-1)
    return value;
}

/// Partial sum of zeta(2) with the 1/M tail correction: sum_{n<=M} 1/n^2 + 1/M.
/// The remaining defect is about 1/(2M^2).
inline Real zeta2_partial_sum(unsigned long long M, const EvalOptions& opts = {}) {
    if (M == 0) throw std::invalid_argument("zeta2_partial_sum: need M >= 1");
    PrecisionScope scope(opts.digits);
    Real sum = 0;
    for (unsigned long long n = M; n >= 1; --n) sum += Real(1) / (Real(n) * Real(n));
    return sum + Real(1) / Real(M);
}

/// n-factor Wallis partial product prod_{i<=n} 4i^2/(4i^2-1)  ->  pi/2.
inline Real wallis_partial(unsigned long long n, const EvalOptions& opts = {}) {
    if (n == 0) throw std::invalid_argument("wallis_partial: need n >= 1");
    PrecisionScope scope(opts.digits);
    Real prod = 1;
    for (unsigned long long i = 1; i <= n; ++i) {
        const Real sq = Real(4) * Real(i) * Real(i);
        prod *= sq / (sq - 1);
    }
    return prod;
}

/// n-term Leibniz partial sum sum_{k<n} (-1)^k/(2k+1)  ->  pi/4.
inline Real leibniz_partial(unsigned long long n, const EvalOptions& opts = {}) {
    if (n == 0) throw std::invalid_argument("leibniz_partial: need n >= 1");
    PrecisionScope scope(opts.digits);
    Real sum = 0;
    for (unsigned long long k = n; k-- > 0;) {
        const Real term = Real(1) / Real(2 * k + 1);
        sum += (k % 2 == 0) ? term : -term;
    }
    return sum;
}

/// Truncated-coefficient evaluation sum_{n<N} c_n q0^n of a series, used to
/// watch convergence of the formal expansion toward the direct evaluation.
inline Real eval_coefficients(const PowerSeries& s, const Real& q0, const EvalOptions& opts = {}) {
    PrecisionScope scope(opts.digits);
    const Real q = at_working_precision(q0);
    Real acc = 0;
    for (std::size_t i = s.order(); i-- > 0;) acc = acc * q + to_real(s[i]);  // Horner
    return acc;
}

}  // namespace qzeta::limits
