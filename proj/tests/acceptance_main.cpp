// Acceptance suite. Runs every shipped claim end to end at full scale and
// prints one PASS/FAIL line per criterion:
//
//   1. coefficientwise identity suite through the CLI (exit codes + report
//      schema), at orders 2000/2000/2000/2000/500/1000/300
//   2. combinatorial oracles vs closed forms, exact equality
//   3. three-way cross-check psi^4 = brute-force t4 = sigma(2n+1), n < 500
//   4. q->1 limit experiments at precision 50: errors strictly decreasing
//      from the second point, final relative error under the bound
//   5. exact constants: Bernoulli residuals, zeta(2), zeta(4), partial sums
//   6. mutation detection: every broken fixture flagged at the right index
//   7. DSL round-trip: shipped texts reproduce the builders at order 200
//
// Usage: acceptance <path-to-qzeta-cli>

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "broken_fixtures.hpp"
#include "qzeta/arith.hpp"
#include "qzeta/catalog.hpp"
#include "qzeta/dsl.hpp"
#include "qzeta/qlimits.hpp"

using namespace qzeta;
using limits::Real;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& cli, const std::string& args) {
    const std::string cmd = cli + " " + args + " 2>&1";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) r.output.append(buf, n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

int failures = 0;

void criterion(int number, bool pass, const std::string& label) {
    std::printf("[%d/7] %s  %s\n", number, pass ? "PASS" : "FAIL", label.c_str());
    if (!pass) ++failures;
}

// --- 1: identity suite via the CLI ----------------------------------------

bool identity_suite(const std::string& cli, std::string& label) {
    const std::vector<std::pair<std::string, std::size_t>> runs = {
        {"eq13", 2000},      {"eq14", 2000},          {"eq18", 2000},     {"gauss-psi", 2000},
        {"ramanujan", 500},  {"sigma-lambert", 1000}, {"hessami-pilehrood", 300},
    };
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (const auto& [id, order] : runs) {
        const RunResult r =
            run_cli(cli, "verify " + id + " --order " + std::to_string(order));
        if (r.exit_code != 0) {
            ok = false;
            std::printf("      verify %s --order %zu exited %d\n", id.c_str(), order, r.exit_code);
        }
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (seconds >= 60.0) ok = false;

    // Report surface: the JSON document must follow the documented schema and
    // carry the same content as CSV; a bad id must exit 2.
    const RunResult js = run_cli(cli, "verify all --order 50 --format json");
    try {
        const auto doc = nlohmann::json::parse(js.output);
        ok &= doc.at("overall") == "pass";
        ok &= doc.at("items").size() == catalog().size();
        for (const auto& item : doc.at("items")) {
            ok &= item.contains("identity") && item.contains("order") && item.contains("status") &&
                  item.contains("first_mismatch") && item.contains("elapsed_ms");
            ok &= item.at("status") == "equal" && item.at("first_mismatch").is_null();
        }
    } catch (const std::exception&) {
        ok = false;
    }
    ok &= run_cli(cli, "verify nope --order 10").exit_code == 2;
    ok &= run_cli(cli, "oracle t4 --max 60").exit_code == 0;

    // Determinism: two runs of `verify all` agree once timing is stripped.
    try {
        auto strip = [](std::string text) {
            auto doc = nlohmann::json::parse(text);
            for (auto& item : doc.at("items")) item.erase("elapsed_ms");
            return doc;
        };
        ok &= strip(run_cli(cli, "verify all --order 40 --format json").output) ==
              strip(run_cli(cli, "verify all --order 40 --format json").output);
    } catch (const std::exception&) {
        ok = false;
    }

    // CSV and JSON carry identical numeric content.
    try {
        const auto arr =
            nlohmann::json::parse(run_cli(cli, "expand eq13 --order 6 --format json").output);
        std::istringstream csv(run_cli(cli, "expand eq13 --order 6 --format csv").output);
        std::string line;
        std::getline(csv, line);  // header
        std::size_t idx = 0;
        while (std::getline(csv, line) && !line.empty()) {
            const auto comma = line.find(',');
            ok &= line.substr(0, comma) == std::to_string(idx);
            ok &= arr.at(idx).get<std::string>() == line.substr(comma + 1);
            ++idx;
        }
        ok &= idx == 6;
    } catch (const std::exception&) {
        ok = false;
    }

    std::ostringstream os;
    os << "identity suite via CLI: 7 verifications at full order, " << std::fixed
       << std::setprecision(1) << seconds << " s (budget 60 s), JSON schema + exit codes";
    label = os.str();
    return ok;
}

// --- 2: oracles -------------------------------------------------------------

bool oracle_suite(std::string& label) {
    bool ok = true;
    {
        const auto counts = rep_count_table({1, 1, 1, 1}, 1000);
        for (std::uint64_t n = 0; n <= 1000; ++n) ok &= counts[n] == t4_formula(n);
    }
    {
        const auto counts = rep_count_table({1, 1, 1, 1, 1, 1, 1, 1}, 300);
        for (std::uint64_t n = 0; n <= 300; ++n) ok &= counts[n] == t8_formula(n);
    }
    {
        const auto counts = rep_count_table({1, 1, 2, 2}, 500);
        for (std::uint64_t n = 0; n <= 500; ++n) ok &= counts[n] == williams_formula(n);
    }
    for (std::uint64_t n = 1; n <= 500; ++n) ok &= r4_bruteforce(n) == r4_formula(n);
    label = "oracles: t4<=1000, t8<=300, williams<=500, r4<=500, exact equality";
    return ok;
}

// --- 3: cross-layer ---------------------------------------------------------

bool cross_layer(std::string& label) {
    const PowerSeries psi4 = eq13_rhs(500);
    const auto counts = rep_count_table({1, 1, 1, 1}, 499);
    bool ok = true;
    for (std::size_t n = 0; n < 500; ++n) {
        const Coeff sig = Coeff(sigma(2 * static_cast<std::uint64_t>(n) + 1));
        ok &= psi4[n] == counts[n];
        ok &= counts[n] == sig;
        ok &= psi4[n] == sig;
    }
    label = "cross-layer: psi^4 product = t4 brute force = sigma(2n+1), n < 500";
    return ok;
}

// --- 4: limits --------------------------------------------------------------

bool limit_suite(std::string& label) {
    // Observed final relative errors at j=10, precision 50: eq13 4.9e-4,
    // eq14 2.5e-4, eq18 9.8e-4, gamma-half 7.4e-4. Bound tightened from the
    // provisional 0.02 to 0.005 accordingly.
    const double bound = 0.005;
    limits::EvalOptions opts;  // 50 digits
    bool ok = true;
    std::ostringstream detail;
    for (const char* name : {"eq13", "eq14", "eq18", "gamma-half"}) {
        const auto ex = limits::run_limit_experiment(name, 1, 10, opts);
        limits::PrecisionScope scope(opts.digits);
        const bool monotone = ex.errors_decreasing_from_second();
        const Real rel = ex.final_relative_error();
        const bool below = rel < bound;
        if (!monotone || !below) {
            ok = false;
            detail << "  " << name << ": monotone=" << monotone << " final_rel=" << rel << "\n";
        }
    }
    if (!detail.str().empty()) std::printf("%s", detail.str().c_str());
    label = "limits (P=50, j=1..10): errors strictly decreasing from j=2, final rel err < 0.005";
    return ok;
}

// --- 5: exact constants -----------------------------------------------------

bool constants_suite(std::string& label) {
    bool ok = true;

    const auto B = bernoulli(40);
    for (std::size_t n = 1; n <= 40; ++n) {
        Rational acc = 0;
        Coeff c = 1;
        for (std::size_t k = 0; k <= n; ++k) {
            acc += Rational(c) * B[k];
            c *= Coeff(n + 1 - k);
            c /= Coeff(k + 1);
        }
        ok &= acc == 0;
    }

    limits::EvalOptions opts;  // 50 digits
    limits::PrecisionScope scope(opts.digits);
    const Real pi = limits::pi_value();
    const Real tol40 = boost::multiprecision::pow(Real(10), -40);
    ok &= abs(limits::zeta_even(1, opts) - pi * pi / 6) / (pi * pi / 6) < tol40;
    ok &= abs(limits::zeta_even(2, opts) - pi * pi * pi * pi / 90) / (pi * pi * pi * pi / 90) <
          tol40;

    const Real partial = limits::zeta2_partial_sum(1000000, opts);
    ok &= abs(partial - limits::zeta_even(1, opts)) / limits::zeta_even(1, opts) <
          boost::multiprecision::pow(Real(10), -10);

    label = "constants: Bernoulli residuals exactly 0 (n<=40); zeta(2), zeta(4) to 40 digits; "
            "10^6-term partial sum to 10 digits";
    return ok;
}

// --- 6: mutation detection --------------------------------------------------

bool mutation_suite(std::string& label) {
    bool ok = true;
    for (const auto& fixture : qzeta::testing::broken_fixtures()) {
        const auto mm = equal_up_to(fixture.lhs(64), fixture.rhs(64), 64);
        const bool detected = mm && mm->index == fixture.expect_index &&
                              mm->lhs == fixture.expect_lhs && mm->rhs == fixture.expect_rhs;
        if (!detected) {
            ok = false;
            std::printf("      mutant %s not detected correctly\n", fixture.id.c_str());
        }
    }
    label = "mutation detection: every broken fixture reported at its first differing index";
    return ok;
}

// --- 7: DSL round trip -------------------------------------------------------

bool dsl_round_trip(std::string& label) {
    const std::size_t N = 200;
    const dsl::EvalContext ctx{N, 64};
    bool ok = true;
    for (const auto& entry : catalog()) {
        try {
            ok &= dsl::eval(dsl::parse(entry.dsl_lhs), ctx) == entry.lhs(N);
            ok &= dsl::eval(dsl::parse(entry.dsl_rhs), ctx) == entry.rhs(N);
        } catch (const std::exception& e) {
            ok = false;
            std::printf("      %s: %s\n", entry.id.c_str(), e.what());
        }
    }
    label = "DSL round-trip: shipped texts equal the builders at order 200 (7 identities)";
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: acceptance <path-to-qzeta-cli>\n");
        return 2;
    }
    const std::string cli = argv[1];

    std::string label;
    bool pass;

    pass = identity_suite(cli, label);
    criterion(1, pass, label);
    pass = oracle_suite(label);
    criterion(2, pass, label);
    pass = cross_layer(label);
    criterion(3, pass, label);
    pass = limit_suite(label);
    criterion(4, pass, label);
    pass = constants_suite(label);
    criterion(5, pass, label);
    pass = mutation_suite(label);
    criterion(6, pass, label);
    pass = dsl_round_trip(label);
    criterion(7, pass, label);

    if (failures == 0) std::printf("acceptance: all 7 criteria passed\n");
    else std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
