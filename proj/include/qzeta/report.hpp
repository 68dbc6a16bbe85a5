#pragma once

// Machine-readable reports for the CLI. JSON and CSV rows are generated from
// the same string conversions, so the two formats always carry identical
// numeric content; coefficients travel as decimal strings because they
// overflow 64-bit consumers long before the interesting orders.

#include <string>
#include <vector>

#include <json.hpp>

#include "qzeta/catalog.hpp"
#include "qzeta/qlimits.hpp"
#include "qzeta/version.hpp"

namespace qzeta::report {

using json = nlohmann::json;

/// Significant digits used when rendering a high-precision real.
inline std::string real_str(const limits::Real& x, unsigned digits) {
    return x.str(digits);
}

inline json to_json(const VerificationReport& r) {
    json j;
    j["identity"] = r.identity;
    j["order"] = r.order;
    j["status"] = r.equal() ? "equal" : "mismatch";
    if (r.first_mismatch) {
        j["first_mismatch"] = {{"index", r.first_mismatch->index},
                               {"lhs", r.first_mismatch->lhs.str()},
                               {"rhs", r.first_mismatch->rhs.str()}};
    } else {
        j["first_mismatch"] = nullptr;
    }
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

inline std::string csv_header(const VerificationReport&) {
    return "identity,order,status,mismatch_index,mismatch_lhs,mismatch_rhs,elapsed_ms";
}

inline std::string csv_row(const VerificationReport& r) {
    std::string row = r.identity + "," + std::to_string(r.order) + "," +
                      (r.equal() ? "equal" : "mismatch") + ",";
    if (r.first_mismatch)
        row += std::to_string(r.first_mismatch->index) + "," + r.first_mismatch->lhs.str() + "," +
               r.first_mismatch->rhs.str();
    else
        row += ",,";
    row += "," + std::to_string(r.elapsed_ms);
    return row;
}

inline json to_json(const limits::LimitExperiment& ex, unsigned digits) {
    json points = json::array();
    for (const auto& pt : ex.points) {
        json p;
        p["j"] = pt.j;
        p["q"] = real_str(pt.q, digits);
        p["lhs_scaled"] = real_str(pt.lhs_scaled, digits);
        p["rhs_scaled"] = pt.rhs_scaled ? json(real_str(*pt.rhs_scaled, digits)) : json(nullptr);
        p["abs_error"] = real_str(pt.abs_error, digits);
        points.push_back(std::move(p));
    }
    return json{{"name", ex.name},
                {"scaling", ex.scaling},
                {"target", ex.target_name},
                {"target_value", real_str(ex.target, digits)},
                {"points", std::move(points)},
                {"errors_decreasing_from_second", ex.errors_decreasing_from_second()},
                {"final_relative_error", real_str(ex.final_relative_error(), digits)}};
}

inline std::string csv_header(const limits::LimitExperiment&) {
    return "name,j,q,lhs_scaled,rhs_scaled,abs_error";
}

inline std::vector<std::string> csv_rows(const limits::LimitExperiment& ex, unsigned digits) {
    std::vector<std::string> rows;
    for (const auto& pt : ex.points)
        rows.push_back(ex.name + "," + std::to_string(pt.j) + "," + real_str(pt.q, digits) + "," +
                       real_str(pt.lhs_scaled, digits) + "," +
                       (pt.rhs_scaled ? real_str(*pt.rhs_scaled, digits) : "") + "," +
                       real_str(pt.abs_error, digits));
    return rows;
}

/// Envelope for a whole CLI invocation.
struct ReportDocument {
    std::string command;
    json items = json::array();
    bool ok = true;

    json to_json() const {
        return json{{"tool", kToolName},
                    {"version", kVersion},
                    {"command", command},
                    {"items", items},
                    {"overall", ok ? "pass" : "fail"}};
    }
};

}  // namespace qzeta::report
