#ifndef SIEGEL_SWEEP_HPP
#define SIEGEL_SWEEP_HPP

// Sweep harness: one find_siegel_zero per grid height, rows computed in
// parallel (capped by SIEGEL_LAB_THREADS) and assembled in grid order.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <string>
#include <thread>
#include <vector>

#include "siegel/errors.hpp"
#include "siegel/mold.hpp"

namespace siegel::zerofind {

struct SweepTable {
    std::vector<mold::SiegelZeroReport> rows;
    std::string description;
    double epsilon = 0.0;
    double tol = 0.0;
    std::string timestamp; // capture time; not written to output files
};

namespace detail {

inline unsigned thread_cap() {
    unsigned cap = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("SIEGEL_LAB_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) cap = static_cast<unsigned>(v);
    }
    return cap;
}

inline std::string utc_now() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace detail

inline SweepTable run_sweep(const mold::MoldSpec& spec, const std::vector<double>& y_grid,
                            double epsilon, double tol) {
    for (std::size_t i = 1; i < y_grid.size(); ++i)
        if (!(y_grid[i] > y_grid[i - 1]))
            throw domain_error("run_sweep: y grid must be strictly increasing");

    SweepTable table;
    table.description = spec.description;
    table.epsilon = epsilon;
    table.tol = tol;
    table.timestamp = detail::utc_now();
    table.rows.resize(y_grid.size());

    auto row_job = [&](std::size_t i) {
        try {
            table.rows[i] = mold::find_siegel_zero(spec, y_grid[i], epsilon, tol);
        } catch (const std::exception& ex) {
            mold::SiegelZeroReport rep;
            rep.y = y_grid[i];
            rep.epsilon = epsilon;
            rep.flags = std::string("eval-error:") + ex.what();
            table.rows[i] = rep;
        }
    };

    const unsigned workers =
        std::min<unsigned>(detail::thread_cap(), static_cast<unsigned>(y_grid.size()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < y_grid.size(); ++i) row_job(i);
        return table;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < y_grid.size(); i = next.fetch_add(1))
                row_job(i);
        });
    }
    for (auto& th : pool) th.join();
    return table;
}

} // namespace siegel::zerofind

namespace siegel::mold {

inline std::vector<SiegelZeroReport> asymptotic_ratio_sweep(const MoldSpec& spec,
                                                            const std::vector<double>& y_grid,
                                                            double epsilon, double tol) {
    if (y_grid.size() < 3)
        throw domain_error("asymptotic_ratio_sweep: need at least 3 grid points");
    return zerofind::run_sweep(spec, y_grid, epsilon, tol).rows;
}

} // namespace siegel::mold

#endif
