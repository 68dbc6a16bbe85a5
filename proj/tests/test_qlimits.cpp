#include <catch2/catch_amalgamated.hpp>

#include "qzeta/catalog.hpp"
#include "qzeta/qlimits.hpp"

using namespace qzeta;
using namespace qzeta::limits;

namespace {

Real rel_diff(const Real& a, const Real& b) { return abs(a - b) / abs(b); }

Real tol(int digits10) { return boost::multiprecision::pow(Real(10), digits10); }

}  // namespace

TEST_CASE("pi and the named limit constants") {
    PrecisionScope scope(50);
    const Real pi = pi_value();
    CHECK(rel_diff(pi, Real("3.14159265358979323846264338327950288419716939937510")) < tol(-48));
    CHECK(limit_constant_value(LimitConstant::pi_sq_over_6) ==
          pi * pi / 6);  // same arithmetic route
}

TEST_CASE("q_gamma telescopes at integer arguments") {
    EvalOptions opts;
    for (double q0 : {0.3, 0.5, 0.9}) {
        CHECK(q_gamma(Real(1), Real(q0), opts) == 1);  // every factor is exactly 1
        CHECK(abs(q_gamma(Real(2), Real(q0), opts) - 1) < tol(-40));
    }
    CHECK_THROWS_AS(q_gamma(Real(0.5), Real(1.5), opts), std::invalid_argument);
    CHECK_THROWS_AS(q_gamma(Real(-1), Real(0.5), opts), std::invalid_argument);
}

TEST_CASE("gamma-half experiment approaches pi") {
    const auto ex = run_limit_experiment("gamma-half", 1, 6);
    REQUIRE(ex.points.size() == 6);
    CHECK(ex.errors_decreasing_from_second());
    CHECK(ex.final_relative_error() < 0.02);
}

TEST_CASE("eq13 sum side at coarse points") {
    EvalOptions opts;
    const Real target = limit_constant_value(LimitConstant::pi_sq_over_4);

    // Far from the limit: q = 1/2 lands within 40% of pi^2/4 after scaling.
    const Real v = eval_lambert_side("eq13", Real(0.5), opts);
    CHECK(abs(Real(0.25) * v - target) / target < 0.40);

    // q -> 0: the sum tends to the constant coefficient 1.
    CHECK(abs(eval_lambert_side("eq13", Real("1e-30"), opts) - 1) < tol(-25));

    // q = 0 is the empty-product limit on the product side.
    CHECK(eval_product_side("eq13", Real(0), opts) == 1);
}

TEST_CASE("sum side and product side agree numerically for every identity") {
    EvalOptions opts;  // P = 50: the two routes must agree to 10^-(P-10)
    const Real bound = tol(-40);
    for (const auto& entry : catalog()) {
        for (int j : {1, 4, 7, 10}) {  // q_j = 1 - 2^-j
            INFO(entry.id << " at j=" << j);
            const Real q0 = Real(1) - boost::multiprecision::ldexp(Real(1), -j);
            const Real s = eval_lambert_side(entry.id, q0, opts);
            const Real p = eval_product_side(entry.id, q0, opts);
            CHECK(rel_diff(s, p) < bound);
        }
    }
}

TEST_CASE("limit experiments: monotone decay toward the named constants") {
    for (const char* id : {"eq13", "eq14", "eq18", "ramanujan"}) {
        const auto ex = run_limit_experiment(id, 1, 8);
        INFO(id);
        CHECK(ex.errors_decreasing_from_second());
        CHECK(ex.final_relative_error() < 0.02);
    }
    CHECK_THROWS_AS(run_limit_experiment("gauss-psi", 1, 4), std::invalid_argument);
    CHECK_THROWS_AS(run_limit_experiment("eq13", 0, 4), std::invalid_argument);
    CHECK_THROWS_AS(run_limit_experiment("nope", 1, 4), UnknownIdentity);
}

TEST_CASE("truncated coefficients converge to the direct evaluation") {
    // The tail of the coefficient sum decays like q0^N, so the observable gap
    // saturates at the 50-digit arithmetic floor once q0^N drops below it;
    // the N triples are chosen to stay above that floor for each q0.
    EvalOptions opts;
    const std::vector<std::pair<double, std::vector<std::size_t>>> cases = {
        {0.5, {64, 128, 256}},
        {0.25, {16, 32, 64}},
    };
    for (const auto& [q, orders] : cases) {
        const Real q0 = Real(q);
        const Real direct = eval_lambert_side("eq13", q0, opts);
        Real prev_gap;
        bool first = true;
        for (std::size_t N : orders) {
            const Real gap = abs(eval_coefficients(eq13_lhs(N), q0, opts) - direct);
            INFO("q0=" << q << " N=" << N);
            if (!first) CHECK(gap < prev_gap);
            prev_gap = gap;
            first = false;
        }
    }
}

TEST_CASE("zeta_even reproduces the classical constants") {
    EvalOptions opts;
    PrecisionScope scope(opts.digits);
    const Real pi = pi_value();
    CHECK(rel_diff(zeta_even(1, opts), pi * pi / 6) < tol(-45));
    CHECK(rel_diff(zeta_even(2, opts), pi * pi * pi * pi / 90) < tol(-45));
    CHECK_THROWS_AS(zeta_even(0, opts), std::invalid_argument);
}

TEST_CASE("zeta(2) partial sum with tail correction") {
    EvalOptions opts;
    // 10^5 terms + 1/M correction leaves a defect of ~1/(2M^2) = 5e-11.
    const Real partial = zeta2_partial_sum(100000, opts);
    PrecisionScope scope(opts.digits);
    CHECK(rel_diff(partial, zeta_even(1, opts)) < tol(-8));
    CHECK(rel_diff(partial, zeta_even(1, opts)) > tol(-14));  // the defect is real
}

TEST_CASE("classical partials") {
    EvalOptions opts;
    PrecisionScope scope(opts.digits);
    CHECK(wallis_partial(1, opts) == Real(4) / 3);
    CHECK(leibniz_partial(2, opts) == Real(1) - Real(1) / 3);
    const Real pi = pi_value();
    CHECK(abs(wallis_partial(100000, opts) - pi / 2) < 1e-4);
    CHECK(abs(leibniz_partial(100000, opts) - pi / 4) < 1e-4);
}

TEST_CASE("NoConvergence fires when the ceiling is too low") {
    EvalOptions opts;
    opts.max_terms = 10;
    CHECK_THROWS_AS(eval_lambert_side("eq13", Real(0.99), opts), NoConvergence);
    CHECK_THROWS_AS(eval_product_side("eq13", Real(0.99), opts), NoConvergence);
    CHECK_THROWS_AS(q_gamma(Real(0.5), Real(0.99), opts), NoConvergence);
}

TEST_CASE("precision is configurable per call") {
    EvalOptions lo;
    lo.digits = 25;
    EvalOptions hi;
    hi.digits = 80;
    const Real a = zeta_even(1, lo);
    const Real b = zeta_even(1, hi);
    PrecisionScope scope(100);
    const Real pi = pi_value();
    CHECK(rel_diff(a, pi * pi / 6) < tol(-20));
    CHECK(rel_diff(a, pi * pi / 6) > tol(-35));  // low precision is really low
    CHECK(rel_diff(b, pi * pi / 6) < tol(-70));
}
