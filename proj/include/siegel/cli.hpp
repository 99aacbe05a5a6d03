#ifndef SIEGEL_CLI_HPP
#define SIEGEL_CLI_HPP

// Command implementations behind the siegel_lab tool.  Kept as a library so
// the acceptance suite can drive the same code paths the executable does.
// Exit codes: 0 success, 2 usage/domain, 3 strict-row failure, 4 precondition.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "siegel/errors.hpp"
#include "siegel/gl2.hpp"
#include "siegel/gl3.hpp"
#include "siegel/report.hpp"
#include "siegel/specfun.hpp"
#include "siegel/sweep.hpp"

namespace siegel::cli {

enum ExitCode { kOk = 0, kUsage = 2, kStrictRow = 3, kPrecondition = 4 };

// Grid syntax: comma-separated values, or lo:hi:count geometric shorthand.
inline std::vector<double> parse_grid(const std::string& text) {
    std::vector<double> grid;
    const auto colons = std::count(text.begin(), text.end(), ':');
    if (colons == 2) {
        double lo, hi;
        int count;
        if (std::sscanf(text.c_str(), "%lf:%lf:%d", &lo, &hi, &count) != 3 || count < 1 ||
            !(lo > 0.0) || !(hi > lo))
            throw domain_error("grid: expected lo:hi:count with 0 < lo < hi, count >= 1");
        if (count == 1) return {lo};
        const double step = std::pow(hi / lo, 1.0 / (count - 1));
        double v = lo;
        for (int i = 0; i < count; ++i) {
            grid.push_back(i == count - 1 ? hi : v);
            v *= step;
        }
        return grid;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        grid.push_back(specfun::RealArg(std::stod(item)).value);
    }
    if (grid.empty()) throw domain_error("grid: no values parsed");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1])) throw domain_error("grid: values must be strictly increasing");
    return grid;
}

inline void write_file(const std::string& path, const std::string& contents) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw domain_error("cannot open output path: " + path);
    os << contents;
}

// specfun --fn NAME --arg X [--nu NU]; prints the value with 15 digits after
// the decimal point.
inline int cmd_specfun(const std::string& fn, double arg, double nu, std::string& out) {
    using namespace specfun;
    double v;
    if (fn == "zeta") v = riemann_zeta(arg);
    else if (fn == "zeta_star") v = zeta_star(arg);
    else if (fn == "log_gamma") v = log_gamma(arg);
    else if (fn == "bessel_k") v = bessel_k(nu, arg);
    else throw domain_error("specfun: unknown --fn (use zeta|zeta_star|bessel_k|log_gamma)");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15f", v);
    out = buf;
    return kOk;
}

struct SweepOutputs {
    zerofind::SweepTable table;
    std::string csv;
    std::string json;
    bool any_row_failed = false;
};

namespace detail {

inline SweepOutputs render(const zerofind::SweepTable& table,
                           const report::Gl3Columns* gl3cols = nullptr) {
    SweepOutputs out;
    out.table = table;
    std::ostringstream csv;
    report::write_sweep_csv(csv, table, gl3cols);
    out.csv = csv.str();
    out.json = report::sweep_json(table, gl3cols).dump(2) + "\n";
    for (const auto& r : table.rows)
        if (!r.bracketed()) out.any_row_failed = true;
    return out;
}

} // namespace detail

inline SweepOutputs run_gl2_siegel(double x, double Y, const std::vector<double>& y_grid,
                                   double epsilon, double tol) {
    if (y_grid.empty() || !(Y * y_grid.front() >= 1.0))
        throw precondition_error("gl2-siegel: requires Y * min(grid) >= 1");
    const auto spec = gl2::gl2_mold(gl2::UpperHalfPoint(x, Y), std::min(tol, 1e-12));
    return detail::render(zerofind::run_sweep(spec, y_grid, epsilon, tol));
}

inline SweepOutputs run_gl3_siegel(const std::string& regime_request,
                                   const gl3::SpectralParam& lam0,
                                   const gl3::SpectralParam& lam1, const gl3::Gl3Point& g,
                                   const std::vector<double>& y_grid, double epsilon,
                                   double tol) {
    const gl3::Regime regime = gl3::classify_regime(lam0);
    if (regime == gl3::Regime::Boundary)
        throw precondition_error("gl3-siegel: lam0 is non-generic (regime boundary)");
    if (gl3::regime_name(regime) != regime_request)
        throw precondition_error("gl3-siegel: lam0 lies in " +
                                 std::string(gl3::regime_name(regime)) + ", not " +
                                 regime_request);
    const gl3::LambdaPath path(lam0, lam1);
    const auto spec = gl3::gl3_mold(g, path, std::min(tol, 1e-12));
    report::Gl3Columns cols;
    cols.wmax = gl3::WeylElt::SAlpha;
    cols.wms = (regime == gl3::Regime::Omega1) ? gl3::WeylElt::Identity : gl3::WeylElt::Long;
    return detail::render(zerofind::run_sweep(spec, y_grid, epsilon, tol), &cols);
}

inline std::pair<std::string, std::string> run_wmax_scan(int resolution) {
    const auto rows = gl3::wmax_region_scan(resolution);
    std::ostringstream csv;
    report::write_scan_csv(csv, rows);
    return {csv.str(), report::scan_json(rows).dump(2) + "\n"};
}

// Synthetic lemma instances for the demo command.
inline mold::MoldSpec mold_preset(const std::string& name) {
    mold::MoldSpec spec;
    spec.description = "preset " + name;
    spec.sigma_window = 10.0; // synthetic evaluators are entire in sigma
    spec.A = [](double) { return 1.0; };
    spec.B = [](double, double) { return 0.0; };
    if (name == "trivial") {
        // F = y + 1/sigma: zero at sigma = -1/y exactly.
        spec.a = 0.0; spec.b = 1.0; spec.c = 0.0; spec.d = 0.0;
        spec.C = [](double) { return 1.0; };
        spec.D = [](double, double) { return 0.0; };
    } else if (name == "decaying_bd") {
        // Dominant terms as in the gl2 instance, D = y^{-1/2} perturbation.
        spec.a = 1.0; spec.b = 1.0; spec.c = -1.0; spec.d = 0.0;
        spec.C = [](double) { return 1.0; };
        spec.D = [](double y, double) { return std::pow(y, -0.5); };
    } else if (name == "remark1") {
        // b < d: the singular side dominates, no zero appears near 0.
        spec.a = 0.0; spec.b = 0.0; spec.c = 0.0; spec.d = 1.0;
        spec.regime = mold::MoldRegime::Remark1;
        spec.C = [](double) { return 1.0; };
        spec.D = [](double, double) { return 0.0; };
    } else if (name == "remark2") {
        // C(0) = 0: the zero survives on D, the asymptotic prediction dies.
        spec.a = 0.0; spec.b = 1.0; spec.c = 0.0; spec.d = 0.0;
        spec.regime = mold::MoldRegime::Remark2;
        spec.C = [](double sigma) { return sigma; };
        spec.D = [](double y, double) { return -std::pow(y, -0.25); };
    } else {
        throw domain_error("mold-demo: unknown preset (use trivial|decaying_bd|remark1|remark2)");
    }
    return spec;
}

inline SweepOutputs run_mold_demo(const std::string& preset, const std::vector<double>& y_grid,
                                  double epsilon, double tol) {
    return detail::render(zerofind::run_sweep(mold_preset(preset), y_grid, epsilon, tol));
}

} // namespace siegel::cli

#endif
