#pragma once

// Truncated formal power series in one variable q over arbitrary-precision
// integers. A series of order N stores the coefficients of q^0..q^(N-1);
// q^N and above are discarded. Every operation is a pure function of its
// inputs and mixing two orders truncates to the smaller one, so a value
// computed at high order agrees with the same computation at any lower
// order after truncation.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qzeta/errors.hpp"

namespace qzeta {

using Coeff = boost::multiprecision::cpp_int;

class PowerSeries {
public:
    /// Zero series of the given order. Order must be >= 1.
    explicit PowerSeries(std::size_t order) : coeffs_(check_order(order)) {}

    PowerSeries(std::size_t order, std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
        check_order(order);
        if (coeffs_.size() != order)
            throw std::invalid_argument("PowerSeries: coefficient count must equal order");
    }

    static PowerSeries zero(std::size_t order) { return PowerSeries(order); }

    static PowerSeries one(std::size_t order) {
        PowerSeries s(order);
        s.coeffs_[0] = 1;
        return s;
    }

    std::size_t order() const { return coeffs_.size(); }

    const Coeff& operator[](std::size_t i) const { return coeffs_[i]; }
    Coeff& operator[](std::size_t i) { return coeffs_[i]; }

    const std::vector<Coeff>& coeffs() const { return coeffs_; }

    /// Copy truncated to order m <= order().
    PowerSeries truncated(std::size_t m) const {
        check_order(m);
        if (m > order()) throw std::invalid_argument("truncated: cannot extend a series");
        return PowerSeries(m, std::vector<Coeff>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(m)));
    }

    /// Index of the first nonzero coefficient, if any.
    std::optional<std::size_t> min_degree() const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return i;
        return std::nullopt;
    }

    bool is_zero() const { return !min_degree().has_value(); }

    bool operator==(const PowerSeries& o) const = default;

    std::string str() const {
        std::ostringstream os;
        os << '[';
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (i) os << ',';
            os << coeffs_[i];
        }
        os << ']';
        return os.str();
    }

private:
    static std::size_t check_order(std::size_t order) {
        if (order == 0) throw std::invalid_argument("PowerSeries: order must be positive");
        return order;
    }

    std::vector<Coeff> coeffs_;
};

/// Series with coefficient c at q^e and 0 elsewhere (c dropped when e >= N).
inline PowerSeries monomial(Coeff c, std::size_t e, std::size_t N) {
    PowerSeries s(N);
    if (e < N) s[e] = std::move(c);
    return s;
}

inline PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    PowerSeries r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = a[i] + b[i];
    return r;
}

inline PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    PowerSeries r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = a[i] - b[i];
    return r;
}

inline PowerSeries operator-(const PowerSeries& a) {
    PowerSeries r(a.order());
    for (std::size_t i = 0; i < a.order(); ++i) r[i] = -a[i];
    return r;
}

namespace detail {
inline std::size_t nonzero_count(const PowerSeries& s, std::size_t upto) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < upto; ++i)
        if (s[i] != 0) ++c;
    return c;
}
}  // namespace detail

/// Truncated Cauchy product. Zero coefficients are skipped, so multiplying
/// by a sparse series costs O(N * nonzeros) rather than O(N^2).
inline PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    const PowerSeries* outer = &a;
    const PowerSeries* inner = &b;
    if (detail::nonzero_count(a, n) > detail::nonzero_count(b, n)) std::swap(outer, inner);
    PowerSeries r(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Coeff& oi = (*outer)[i];
        if (oi == 0) continue;
        for (std::size_t j = 0; j + i < n; ++j) {
            const Coeff& ij = (*inner)[j];
            if (ij == 0) continue;
            r[i + j] += oi * ij;
        }
    }
    return r;
}

inline PowerSeries& operator+=(PowerSeries& a, const PowerSeries& b) {
    if (b.order() < a.order()) a = a.truncated(b.order());
    for (std::size_t i = 0; i < a.order(); ++i) a[i] += b[i];
    return a;
}

inline PowerSeries& operator-=(PowerSeries& a, const PowerSeries& b) {
    if (b.order() < a.order()) a = a.truncated(b.order());
    for (std::size_t i = 0; i < a.order(); ++i) a[i] -= b[i];
    return a;
}

inline PowerSeries& operator*=(PowerSeries& a, const PowerSeries& b) {
    a = a * b;
    return a;
}

/// Multiplicative inverse up to the series order. The constant term must be
/// +1 or -1: those are the only units of the integer coefficient ring, and
/// the recurrence b_n = -(1/a_0) * sum_{k>=1} a_k b_{n-k} then stays integral.
inline PowerSeries invert(const PowerSeries& a) {
    const std::size_t n = a.order();
    const Coeff& a0 = a[0];
    if (a0 != 1 && a0 != -1)
        throw NonUnitConstantTerm("invert: constant term " + a0.str() + " is not a unit");
    std::vector<std::size_t> support;  // nonzero indices k >= 1
    for (std::size_t k = 1; k < n; ++k)
        if (a[k] != 0) support.push_back(k);
    PowerSeries b(n);
    b[0] = a0;  // 1/(+-1) == +-1
    Coeff acc;
    for (std::size_t i = 1; i < n; ++i) {
        acc = 0;
        for (std::size_t k : support) {
            if (k > i) break;
            acc += a[k] * b[i - k];
        }
        if (acc != 0) b[i] = -a0 * acc;
    }
    return b;
}

/// Expansion of (1 - q^m)^(-e) by the binomial series: the coefficient at
/// q^(m*j) is C(j+e-1, e-1); all other coefficients vanish.
inline PowerSeries geometric_pow(std::size_t m, std::size_t e, std::size_t N) {
    if (m == 0 || e == 0) throw std::invalid_argument("geometric_pow: m and e must be >= 1");
    PowerSeries r(N);
    Coeff c = 1;  // C(e-1, e-1)
    for (std::size_t j = 0; m * j < N; ++j) {
        if (j > 0) {
            c *= Coeff(j + e - 1);
            c /= Coeff(j);  // exact: c stays a binomial coefficient
        }
        r[m * j] = c;
    }
    return r;
}

/// q^p * numer / (1 - q^m)^e truncated to N: the building block of all the
/// Lambert-type sums handled here.
inline PowerSeries lambert_term(std::size_t p, const PowerSeries& numer, std::size_t m,
                                std::size_t e, std::size_t N) {
    if (p >= N) return PowerSeries(N);
    return monomial(1, p, N) * numer * geometric_pow(m, e, N);
}

/// One family of factors prod_{n>=1} (1 - q^(a*n - b))^e.
struct ProductFactor {
    std::size_t stride = 1;   // a >= 1
    std::size_t offset = 0;   // b, with b < a so the body exponent stays >= 1
    long long exponent = 1;   // e != 0

    bool operator==(const ProductFactor&) const = default;
};

/// Symbolic product of factor families, compiled to a series by expand_product.
struct ProductSpec {
    std::vector<ProductFactor> factors;

    void validate() const {
        for (const auto& f : factors) {
            if (f.stride == 0) throw std::invalid_argument("ProductSpec: stride must be >= 1");
            if (f.offset >= f.stride)
                throw std::invalid_argument("ProductSpec: offset must be smaller than stride");
            if (f.exponent == 0) throw std::invalid_argument("ProductSpec: exponent must be nonzero");
        }
    }
};

namespace detail {
/// (1 - q^d)^e as a (sparse) polynomial series of order N, e >= 1.
inline PowerSeries binomial_body_pow(std::size_t d, std::size_t e, std::size_t N) {
    PowerSeries p(N);
    Coeff c = 1;
    for (std::size_t j = 0; j <= e && d * j < N; ++j) {
        if (j > 0) {
            c *= Coeff(e - j + 1);
            c /= Coeff(j);
        }
        p[d * j] = (j % 2 == 0) ? c : -c;
    }
    return p;
}
}  // namespace detail

/// Truncated expansion of the product described by spec. Factors whose body
/// exponent a*n-b reaches N are congruent to 1 mod q^N and are skipped;
/// the remaining ones are multiplied in increasing body exponent. Negative
/// exponents go through invert of the positive power, which keeps every
/// intermediate integral (the constant term is always 1).
inline PowerSeries expand_product(const ProductSpec& spec, std::size_t N) {
    spec.validate();
    std::vector<std::pair<std::size_t, long long>> units;  // (body exponent d, e)
    for (const auto& f : spec.factors)
        for (std::size_t n = 1; f.stride * n - f.offset < N; ++n)
            units.emplace_back(f.stride * n - f.offset, f.exponent);
    std::stable_sort(units.begin(), units.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });
    PowerSeries acc = PowerSeries::one(N);
    for (const auto& [d, e] : units) {
        const std::size_t mag = static_cast<std::size_t>(e < 0 ? -e : e);
        PowerSeries body = detail::binomial_body_pow(d, mag, N);
        acc *= (e < 0) ? invert(body) : body;
    }
    return acc;
}

/// First coefficient where two series disagree, with both values.
struct Mismatch {
    std::size_t index = 0;
    Coeff lhs;
    Coeff rhs;

    bool operator==(const Mismatch&) const = default;
};

/// Compare through q^(N-1). Returns nullopt when equal, otherwise the first
/// mismatch. Both operands must have order >= N.
inline std::optional<Mismatch> equal_up_to(const PowerSeries& a, const PowerSeries& b,
                                           std::size_t N) {
    if (a.order() < N || b.order() < N)
        throw OrderTooSmall("equal_up_to: operand order below comparison order " +
                            std::to_string(N));
    for (std::size_t i = 0; i < N; ++i)
        if (a[i] != b[i]) return Mismatch{i, a[i], b[i]};
    return std::nullopt;
}

}  // namespace qzeta
