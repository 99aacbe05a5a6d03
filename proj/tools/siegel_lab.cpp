// siegel_lab: evaluates the special functions, runs GL(2)/GL(3) Siegel-zero
// sweeps and the Weyl-region scan, and writes CSV/JSON sweep tables.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "siegel/cli.hpp"

namespace {

using siegel::cli::ExitCode;

int emit_sweep(const siegel::cli::SweepOutputs& out, const std::string& path,
               const std::string& format, bool strict) {
    const std::string& payload = (format == "json") ? out.json : out.csv;
    if (path.empty() || path == "-")
        std::cout << payload;
    else
        siegel::cli::write_file(path, payload);
    if (strict && out.any_row_failed) {
        std::cerr << "strict: at least one sweep row failed to bracket\n";
        return ExitCode::kStrictRow;
    }
    return ExitCode::kOk;
}

std::vector<double> triple(const std::string& text, const char* what) {
    double a, b, c;
    if (std::sscanf(text.c_str(), "%lf,%lf,%lf", &a, &b, &c) != 3)
        throw siegel::domain_error(std::string(what) + ": expected three comma-separated reals");
    return {a, b, c};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Siegel zeros of real-analytic Eisenstein series"};
    app.require_subcommand(1);

    // specfun
    std::string fn;
    double arg = 0.0, nu = 0.0;
    auto* sc_fun = app.add_subcommand("specfun", "evaluate a special function");
    sc_fun->add_option("--fn", fn, "zeta|zeta_star|bessel_k|log_gamma")->required();
    sc_fun->add_option("--arg", arg, "argument")->required();
    sc_fun->add_option("--nu", nu, "order for bessel_k");

    // common sweep options
    std::string grid_text, out_path, format = "csv";
    double eps = 2.0, tol = 1e-10;
    bool strict = false;
    auto add_sweep_opts = [&](CLI::App* sc) {
        sc->add_option("--grid", grid_text, "comma list or lo:hi:count (geometric)")->required();
        sc->add_option("--eps", eps, "epsilon of the sigma window (default 2)");
        sc->add_option("--tol", tol, "relative bracket tolerance (default 1e-10)");
        sc->add_option("--out", out_path, "output path ('-' for stdout)");
        sc->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
        sc->add_flag("--strict", strict, "exit 3 if any row fails to bracket");
    };

    // gl2-siegel
    double x = 0.0, Y = 1.0;
    auto* sc_gl2 = app.add_subcommand("gl2-siegel", "GL(2) Siegel-zero sweep");
    sc_gl2->add_option("--x", x, "real part of tau (default 0)");
    sc_gl2->add_option("--Y", Y, "base height; series sampled at x + i*Y*y (default 1)");
    add_sweep_opts(sc_gl2);

    // gl3-siegel
    std::string regime = "omega1";
    std::string lam0_text = "0,0.5,-0.5", lam1_text = "0,0,0", point_text = "0,1.2,1";
    auto* sc_gl3 = app.add_subcommand("gl3-siegel", "GL(3) Siegel-zero sweep");
    sc_gl3->add_option("--regime", regime, "omega1|omega2")
        ->check(CLI::IsMember({"omega1", "omega2"}));
    sc_gl3->add_option("--lambda0", lam0_text, "l1,l2,l3 on the hyperplane l2-l3=1");
    sc_gl3->add_option("--lambda1", lam1_text, "l1,l2,l3 with l2-l3=0");
    sc_gl3->add_option("--point", point_text, "x1,y1,y2 of the base point");
    add_sweep_opts(sc_gl3);

    // wmax-scan
    int resolution = 400;
    auto* sc_scan = app.add_subcommand("wmax-scan", "argmax region scan over H_R");
    sc_scan->add_option("--resolution", resolution, "grid points over lambda1 in [-2,2]");
    sc_scan->add_option("--out", out_path, "output path ('-' for stdout)");
    sc_scan->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

    // mold-demo
    std::string preset = "trivial";
    auto* sc_demo = app.add_subcommand("mold-demo", "synthetic lemma presets");
    sc_demo->add_option("--preset", preset, "trivial|decaying_bd|remark1|remark2");
    add_sweep_opts(sc_demo);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : ExitCode::kUsage;
    }

    try {
        if (sc_fun->parsed()) {
            std::string line;
            siegel::cli::cmd_specfun(fn, arg, nu, line);
            std::cout << line << "\n";
            return ExitCode::kOk;
        }
        if (sc_gl2->parsed()) {
            const auto grid = siegel::cli::parse_grid(grid_text);
            return emit_sweep(siegel::cli::run_gl2_siegel(x, Y, grid, eps, tol), out_path, format,
                              strict);
        }
        if (sc_gl3->parsed()) {
            const auto grid = siegel::cli::parse_grid(grid_text);
            const auto l0 = triple(lam0_text, "--lambda0");
            const auto l1 = triple(lam1_text, "--lambda1");
            const auto p = triple(point_text, "--point");
            const siegel::gl3::SpectralParam lam0(l0[0], l0[1], l0[2]);
            const siegel::gl3::SpectralParam lam1(l1[0], l1[1], l1[2]);
            const siegel::gl3::Gl3Point g(p[0], 0.0, 0.0, p[1], p[2]);
            return emit_sweep(siegel::cli::run_gl3_siegel(regime, lam0, lam1, g, grid, eps, tol),
                              out_path, format, strict);
        }
        if (sc_scan->parsed()) {
            auto [csv, json] = siegel::cli::run_wmax_scan(resolution);
            const std::string& payload = (format == "json") ? json : csv;
            if (out_path.empty() || out_path == "-")
                std::cout << payload;
            else
                siegel::cli::write_file(out_path, payload);
            return ExitCode::kOk;
        }
        if (sc_demo->parsed()) {
            const auto grid = siegel::cli::parse_grid(grid_text);
            return emit_sweep(siegel::cli::run_mold_demo(preset, grid, eps, tol), out_path, format,
                              strict);
        }
    } catch (const siegel::precondition_error& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return ExitCode::kPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return ExitCode::kUsage;
    }
    return ExitCode::kUsage;
}
