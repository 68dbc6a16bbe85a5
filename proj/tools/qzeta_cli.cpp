// Command-line frontend for the qzeta library: catalog listing, exact
// identity verification, combinatorial oracle cross-checks, q -> 1 limit
// experiments, DSL evaluation, Bernoulli numbers and zeta constants.
//
// Exit codes: 0 all checks passed; 1 mathematical mismatch or convergence
// failure (including a divergent DSL iteration); 2 usage, parse or
// expression errors. The tool never aborts on malformed input.

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qzeta/arith.hpp"
#include "qzeta/catalog.hpp"
#include "qzeta/dsl.hpp"
#include "qzeta/errors.hpp"
#include "qzeta/qlimits.hpp"
#include "qzeta/report.hpp"
#include "qzeta/version.hpp"

namespace {

using namespace qzeta;
using limits::Real;
using report::json;
using report::ReportDocument;

constexpr int kExitOk = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitUsage = 2;

std::string joined_args(int argc, char** argv) {
    std::string s;
    for (int i = 1; i < argc; ++i) {
        if (i > 1) s += ' ';
        s += argv[i];
    }
    return s;
}

std::vector<std::string> resolve_ids(const std::vector<std::string>& ids) {
    std::vector<std::string> out;
    for (const auto& id : ids) {
        if (id == "all") {
            for (const auto& e : catalog()) out.push_back(e.id);
        } else {
            require_identity(id);  // throws UnknownIdentity
            out.push_back(id);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// list
// ---------------------------------------------------------------------------

int cmd_list(const std::string& format, const ReportDocument& base) {
    if (format == "json") {
        ReportDocument doc = base;
        for (const auto& e : catalog()) {
            json item{{"id", e.id}, {"description", e.description}, {"source", e.source}};
            if (e.limit)
                item["limit"] = {{"target", std::string(limit_constant_name(e.limit->constant))},
                                 {"scaling", e.limit->scaling}};
            else
                item["limit"] = nullptr;
            doc.items.push_back(std::move(item));
        }
        std::cout << doc.to_json().dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "id,target,scaling,source\n";
        for (const auto& e : catalog())
            std::cout << e.id << ','
                      << (e.limit ? std::string(limit_constant_name(e.limit->constant)) : "") << ','
                      << (e.limit ? std::to_string(e.limit->scaling) : "") << ",\"" << e.source
                      << "\"\n";
    } else {
        for (const auto& e : catalog()) {
            std::cout << std::left << std::setw(19) << e.id << e.description << "\n"
                      << std::setw(19) << "" << e.source;
            if (e.limit)
                std::cout << "; (1-q)^" << e.limit->scaling << " x value -> "
                          << limit_constant_name(e.limit->constant);
            std::cout << "\n";
        }
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

int cmd_verify(const std::vector<std::string>& raw_ids, std::size_t order,
               const std::string& format, ReportDocument doc) {
    const auto ids = resolve_ids(raw_ids);
    std::vector<VerificationReport> reports;
    for (const auto& id : ids) reports.push_back(verify(require_identity(id), order));

    bool all_equal = true;
    for (const auto& r : reports) all_equal &= r.equal();
    doc.ok = all_equal;

    if (format == "json") {
        for (const auto& r : reports) doc.items.push_back(report::to_json(r));
        std::cout << doc.to_json().dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << report::csv_header(reports.front()) << "\n";
        for (const auto& r : reports) std::cout << report::csv_row(r) << "\n";
    } else {
        for (const auto& r : reports) {
            std::cout << std::left << std::setw(19) << r.identity << "order " << std::setw(6)
                      << r.order;
            if (r.equal())
                std::cout << "equal     ";
            else
                std::cout << "MISMATCH at q^" << r.first_mismatch->index << ": lhs "
                          << r.first_mismatch->lhs.str() << " vs rhs "
                          << r.first_mismatch->rhs.str() << "  ";
            std::cout << std::fixed << std::setprecision(1) << r.elapsed_ms << " ms\n";
            std::cout.unsetf(std::ios_base::floatfield);
        }
        std::cout << (all_equal ? "all equal" : "MISMATCH DETECTED") << "\n";
    }
    return all_equal ? kExitOk : kExitMathFailure;
}

// ---------------------------------------------------------------------------
// expand
// ---------------------------------------------------------------------------

int cmd_expand(const std::string& id, const std::string& side, const std::string& expr,
               std::size_t order, unsigned guard, const std::string& format) {
    PowerSeries series = [&] {
        if (!expr.empty()) return dsl::eval_text(expr, dsl::EvalContext{order, guard});
        const IdentityEntry& entry = require_identity(id);
        return side == "rhs" ? entry.rhs(order) : entry.lhs(order);
    }();

    if (format == "json") {
        json arr = json::array();
        for (std::size_t i = 0; i < series.order(); ++i) arr.push_back(series[i].str());
        std::cout << arr.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "index,value\n";
        for (std::size_t i = 0; i < series.order(); ++i)
            std::cout << i << ',' << series[i].str() << "\n";
    } else {
        for (std::size_t i = 0; i < series.order(); ++i) {
            if (i) std::cout << ',';
            std::cout << series[i].str();
        }
        std::cout << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// check (two-sided DSL comparison)
// ---------------------------------------------------------------------------

int cmd_check(const std::string& lhs, const std::string& rhs, std::size_t order, unsigned guard,
              const std::string& format, ReportDocument doc) {
    const VerificationReport r = dsl::check(lhs, rhs, order, guard);
    doc.ok = r.equal();
    if (format == "json") {
        doc.items.push_back(report::to_json(r));
        std::cout << doc.to_json().dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << report::csv_header(r) << "\n" << report::csv_row(r) << "\n";
    } else if (r.equal()) {
        std::cout << "equal through q^" << order - 1 << " (" << std::fixed << std::setprecision(1)
                  << r.elapsed_ms << " ms)\n";
    } else {
        std::cout << "MISMATCH at q^" << r.first_mismatch->index << ": lhs "
                  << r.first_mismatch->lhs.str() << " vs rhs " << r.first_mismatch->rhs.str()
                  << "\n";
    }
    return r.equal() ? kExitOk : kExitMathFailure;
}

// ---------------------------------------------------------------------------
// oracle
// ---------------------------------------------------------------------------

int cmd_oracle(const std::string& lemma, std::uint64_t n_max, const std::string& format,
               ReportDocument doc) {
    struct Row {
        std::uint64_t n;
        Coeff brute, formula;
    };
    std::vector<Row> rows;

    if (lemma == "t4") {
        const auto counts = rep_count_table({1, 1, 1, 1}, n_max);
        for (std::uint64_t n = 0; n <= n_max; ++n) rows.push_back({n, counts[n], t4_formula(n)});
    } else if (lemma == "t8") {
        const auto counts = rep_count_table({1, 1, 1, 1, 1, 1, 1, 1}, n_max);
        for (std::uint64_t n = 0; n <= n_max; ++n) rows.push_back({n, counts[n], t8_formula(n)});
    } else if (lemma == "williams") {
        const auto counts = rep_count_table({1, 1, 2, 2}, n_max);
        for (std::uint64_t n = 0; n <= n_max; ++n)
            rows.push_back({n, counts[n], williams_formula(n)});
    } else {  // r4, defined for n >= 1
        for (std::uint64_t n = 1; n <= n_max; ++n)
            rows.push_back({n, r4_bruteforce(n), r4_formula(n)});
    }

    std::uint64_t disagreements = 0;
    for (const auto& r : rows)
        if (r.brute != r.formula) ++disagreements;
    doc.ok = disagreements == 0;

    if (format == "json") {
        for (const auto& r : rows)
            doc.items.push_back(json{{"n", r.n},
                                     {"bruteforce", r.brute.str()},
                                     {"formula", r.formula.str()},
                                     {"match", r.brute == r.formula}});
        std::cout << doc.to_json().dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "n,bruteforce,formula,match\n";
        for (const auto& r : rows)
            std::cout << r.n << ',' << r.brute.str() << ',' << r.formula.str() << ','
                      << (r.brute == r.formula ? "true" : "false") << "\n";
    } else {
        for (const auto& r : rows)
            if (r.brute != r.formula)
                std::cout << "DISAGREE at n=" << r.n << ": brute " << r.brute.str() << " vs formula "
                          << r.formula.str() << "\n";
        std::cout << lemma << ": " << rows.size() << " values checked, "
                  << (disagreements == 0 ? "all agree" : std::to_string(disagreements) + " DISAGREE")
                  << "\n";
    }
    return disagreements == 0 ? kExitOk : kExitMathFailure;
}

// ---------------------------------------------------------------------------
// limit
// ---------------------------------------------------------------------------

int cmd_limit(const std::string& name, std::optional<int> scaling, const std::string& j_range,
              unsigned precision, double bound, const std::string& format, ReportDocument doc) {
    int j_min = 1, j_max = 10;
    const auto dots = j_range.find("..");
    if (dots == std::string::npos)
        throw std::invalid_argument("--j expects a range like 1..10");
    j_min = std::stoi(j_range.substr(0, dots));
    j_max = std::stoi(j_range.substr(dots + 2));

    limits::EvalOptions opts;
    opts.digits = precision;
    const auto ex = limits::run_limit_experiment(name, j_min, j_max, opts, scaling);

    limits::PrecisionScope scope(precision);
    const bool monotone = ex.errors_decreasing_from_second();
    const Real final_rel = ex.final_relative_error();
    const bool pass = monotone && final_rel < bound;
    doc.ok = pass;

    if (format == "json") {
        json item = report::to_json(ex, precision);
        item["bound"] = bound;
        item["pass"] = pass;
        doc.items.push_back(std::move(item));
        std::cout << doc.to_json().dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << report::csv_header(ex) << "\n";
        for (const auto& row : report::csv_rows(ex, precision)) std::cout << row << "\n";
    } else {
        std::cout << ex.name << ": (1-q)^" << ex.scaling << " x value vs " << ex.target_name
                  << " = " << report::real_str(ex.target, 12) << "\n";
        std::cout << std::left << std::setw(5) << "j" << std::setw(24) << "q" << std::setw(24)
                  << "scaled lhs" << std::setw(24) << "scaled rhs" << "abs error\n";
        for (const auto& pt : ex.points) {
            std::cout << std::left << std::setw(5) << pt.j << std::setw(24)
                      << report::real_str(pt.q, 15) << std::setw(24)
                      << report::real_str(pt.lhs_scaled, 15) << std::setw(24)
                      << (pt.rhs_scaled ? report::real_str(*pt.rhs_scaled, 15) : "-")
                      << report::real_str(pt.abs_error, 6) << "\n";
        }
        std::cout << "errors decreasing from second point: " << (monotone ? "yes" : "NO")
                  << "; final relative error " << report::real_str(final_rel, 6) << " (bound "
                  << bound << ")\n";
    }
    return pass ? kExitOk : kExitMathFailure;
}

// ---------------------------------------------------------------------------
// bernoulli / zeta
// ---------------------------------------------------------------------------

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

int cmd_bernoulli(std::size_t M, const std::string& format, ReportDocument doc) {
    const auto B = bernoulli(M);
    if (format == "json") {
        for (std::size_t k = 0; k < B.size(); ++k)
            doc.items.push_back(json{{"k", k}, {"value", rational_str(B[k])}});
        std::cout << doc.to_json().dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "k,value\n";
        for (std::size_t k = 0; k < B.size(); ++k) std::cout << k << ',' << rational_str(B[k]) << "\n";
    } else {
        for (std::size_t k = 0; k < B.size(); ++k) {
            if (k) std::cout << ", ";
            std::cout << rational_str(B[k]);
        }
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_zeta(unsigned m, unsigned precision, const std::string& format, ReportDocument doc) {
    limits::EvalOptions opts;
    opts.digits = precision;
    const Real value = limits::zeta_even(m, opts);
    const std::string digits = report::real_str(value, precision);
    if (format == "json") {
        doc.items.push_back(json{{"m", m}, {"precision", precision}, {"zeta_2m", digits}});
        std::cout << doc.to_json().dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "m,precision,zeta_2m\n" << m << ',' << precision << ',' << digits << "\n";
    } else {
        std::cout << "zeta(" << 2 * m << ") = " << digits << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string(kToolName) +
                 " - exact, coefficientwise verification of q-series identities "
                 "with q->1 limit experiments"};
    app.set_version_flag("--version", std::string(kToolName) + " " + kVersion);
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    std::size_t order = 200;
    unsigned precision = 50;
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--order", order, "Truncation order N (coefficients of q^0..q^(N-1))")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--precision", precision, "Decimal working precision for numeric commands")
        ->check(CLI::Range(10u, 10000u))
        ->capture_default_str();

    // list
    app.add_subcommand("list", "List the identity catalog");

    // verify
    auto* sub_verify = app.add_subcommand("verify", "Verify catalog identities coefficientwise");
    std::vector<std::string> verify_ids;
    sub_verify->add_option("ids", verify_ids, "Identity ids, or 'all'")->required();

    // expand
    auto* sub_expand = app.add_subcommand("expand", "Print series coefficients");
    std::string expand_id, expand_side = "lhs", expand_expr;
    auto* expand_id_opt = sub_expand->add_option("id", expand_id, "Catalog identity id");
    sub_expand->add_option("--side", expand_side, "Which side of the identity")
        ->check(CLI::IsMember({"lhs", "rhs"}))
        ->capture_default_str();
    sub_expand->add_option("--expr", expand_expr, "DSL expression instead of a catalog id")
        ->excludes(expand_id_opt);

    // check
    auto* sub_check = app.add_subcommand("check", "Compare two DSL expressions coefficientwise");
    std::string check_lhs, check_rhs;
    unsigned guard = 64;
    sub_check->add_option("lhs", check_lhs, "Left-hand DSL text")->required();
    sub_check->add_option("rhs", check_rhs, "Right-hand DSL text")->required();
    sub_check->add_option("--guard", guard, "Divergence guard for infinite sums/products")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    // oracle
    auto* sub_oracle =
        app.add_subcommand("oracle", "Cross-check brute-force counts against closed forms");
    std::string lemma;
    std::uint64_t n_max = 200;
    sub_oracle->add_option("lemma", lemma, "Which comparison to run")
        ->check(CLI::IsMember({"t4", "t8", "williams", "r4"}))
        ->required();
    sub_oracle->add_option("--max", n_max, "Largest n to check")->capture_default_str();

    // limit
    auto* sub_limit = app.add_subcommand("limit", "Run a q->1 limit experiment");
    std::string limit_name, j_range = "1..10";
    int limit_scaling = 0;
    double bound = 0.02;
    sub_limit
        ->add_option("name", limit_name, "Catalog id with a limit target, or 'gamma-half'")
        ->required();
    auto* s_opt = sub_limit->add_option("--s", limit_scaling,
                                        "Override the scaling exponent in (1-q)^s");
    sub_limit->add_option("--j", j_range, "Range of evaluation points q_j = 1-2^(-j)")
        ->capture_default_str();
    sub_limit->add_option("--bound", bound, "Final relative error bound for exit code 0")
        ->capture_default_str();

    // bernoulli / zeta
    auto* sub_bernoulli = app.add_subcommand("bernoulli", "Exact Bernoulli numbers B_0..B_M");
    std::size_t bernoulli_m = 0;
    sub_bernoulli->add_option("M", bernoulli_m, "Largest index")->required();

    auto* sub_zeta = app.add_subcommand("zeta", "zeta(2m) by the Bernoulli closed form");
    unsigned zeta_m = 1;
    sub_zeta->add_option("m", zeta_m, "Half the even argument (m >= 1)")
        ->check(CLI::PositiveNumber)
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    ReportDocument doc;
    doc.command = joined_args(argc, argv);

    try {
        if (app.got_subcommand("list")) return cmd_list(format, doc);
        if (app.got_subcommand("verify")) return cmd_verify(verify_ids, order, format, doc);
        if (app.got_subcommand("expand")) {
            if (expand_id.empty() && expand_expr.empty())
                throw std::invalid_argument("expand needs a catalog id or --expr");
            return cmd_expand(expand_id, expand_side, expand_expr, order, guard, format);
        }
        if (app.got_subcommand("check"))
            return cmd_check(check_lhs, check_rhs, order, guard, format, doc);
        if (app.got_subcommand("oracle")) return cmd_oracle(lemma, n_max, format, doc);
        if (app.got_subcommand("limit"))
            return cmd_limit(limit_name, *s_opt ? std::optional<int>(limit_scaling) : std::nullopt,
                             j_range, precision, bound, format, doc);
        if (app.got_subcommand("bernoulli")) return cmd_bernoulli(bernoulli_m, format, doc);
        if (app.got_subcommand("zeta")) return cmd_zeta(zeta_m, precision, format, doc);
        return kExitUsage;
    } catch (const dsl::DivergenceGuard& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMathFailure;
    } catch (const NoConvergence& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMathFailure;
    } catch (const dsl::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {  // NonUnitConstantTerm, NegativeQExponent, UnknownIdentity, ...
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
