#ifndef SIEGEL_REPORT_HPP
#define SIEGEL_REPORT_HPP

// CSV / JSON emission.  Output is byte-deterministic: numbers are printed
// with 17 significant digits, '.' decimal separator, '\n' line endings;
// missing values are the literal NA.

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "siegel/gl3.hpp"
#include "siegel/sweep.hpp"

namespace siegel::report {

inline std::string fmt17(double v) {
    if (std::isnan(v)) return "NA";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Extra per-table context for the GL(3) sweeps.
struct Gl3Columns {
    gl3::WeylElt wmax = gl3::WeylElt::SAlpha;
    gl3::WeylElt wms = gl3::WeylElt::Identity;
};

inline const char* sweep_header() {
    return "y,beta,predicted,ratio,bracket_lo,bracket_hi,residual,iterations,flags";
}

inline void write_sweep_csv(std::ostream& os, const zerofind::SweepTable& table,
                            const Gl3Columns* gl3cols = nullptr) {
    os << sweep_header();
    if (gl3cols) os << ",w_max,w_ms,sign_agrees";
    os << "\n";
    for (const auto& r : table.rows) {
        os << fmt17(r.y) << ',' << fmt17(r.beta) << ',' << fmt17(r.predicted) << ','
           << fmt17(r.ratio) << ',' << fmt17(r.bracket_lo) << ',' << fmt17(r.bracket_hi) << ','
           << fmt17(r.residual) << ',' << r.iterations << ',' << r.flags;
        if (gl3cols) {
            os << ',' << gl3::weyl_name(gl3cols->wmax) << ',' << gl3::weyl_name(gl3cols->wms)
               << ',' << (r.sign_agrees ? "true" : "false");
        }
        os << "\n";
    }
}

inline nlohmann::ordered_json sweep_json(const zerofind::SweepTable& table,
                                         const Gl3Columns* gl3cols = nullptr) {
    nlohmann::ordered_json j;
    j["schema_version"] = "1";
    j["kind"] = "sweep";
    j["metadata"] = {{"description", table.description},
                     {"epsilon", table.epsilon},
                     {"tol", table.tol}};
    nlohmann::ordered_json cols = nlohmann::ordered_json::array(
        {"y", "beta", "predicted", "ratio", "bracket_lo", "bracket_hi", "residual", "iterations",
         "flags"});
    if (gl3cols) {
        cols.push_back("w_max");
        cols.push_back("w_ms");
        cols.push_back("sign_agrees");
    }
    j["columns"] = cols;
    auto cell = [](double v) -> nlohmann::ordered_json {
        if (std::isnan(v)) return nullptr;
        return v;
    };
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& r : table.rows) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array(
            {cell(r.y), cell(r.beta), cell(r.predicted), cell(r.ratio), cell(r.bracket_lo),
             cell(r.bracket_hi), cell(r.residual), r.iterations, r.flags});
        if (gl3cols) {
            row.push_back(gl3::weyl_name(gl3cols->wmax));
            row.push_back(gl3::weyl_name(gl3cols->wms));
            row.push_back(r.sign_agrees);
        }
        rows.push_back(row);
    }
    j["rows"] = rows;
    return j;
}

inline void write_scan_csv(std::ostream& os, const std::vector<gl3::WmaxRow>& rows) {
    os << "lambda1,argmax,matches\n";
    int mismatches = 0, excluded = 0;
    for (const auto& r : rows) {
        const char* m = r.matches == 1 ? "true" : (r.matches == 0 ? "false" : "excluded");
        if (r.matches == 0) ++mismatches;
        if (r.matches == -1) ++excluded;
        os << fmt17(r.lambda1) << ',' << gl3::weyl_name(r.argmax) << ',' << m << "\n";
    }
    os << "# summary: mismatches=" << mismatches << " excluded=" << excluded << "\n";
}

inline nlohmann::ordered_json scan_json(const std::vector<gl3::WmaxRow>& rows) {
    nlohmann::ordered_json j;
    j["schema_version"] = "1";
    j["kind"] = "wmax_scan";
    j["columns"] = nlohmann::ordered_json::array({"lambda1", "argmax", "matches"});
    int mismatches = 0, excluded = 0;
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        const char* m = r.matches == 1 ? "true" : (r.matches == 0 ? "false" : "excluded");
        if (r.matches == 0) ++mismatches;
        if (r.matches == -1) ++excluded;
        out.push_back(nlohmann::ordered_json::array({r.lambda1, gl3::weyl_name(r.argmax), m}));
    }
    j["rows"] = out;
    j["summary"] = {{"mismatches", mismatches}, {"excluded", excluded}};
    return j;
}

} // namespace siegel::report

#endif
