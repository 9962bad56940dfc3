#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <thread>
#include <utility>
#include <vector>

#include "json.hpp"

#include "eis/errors.hpp"
#include "eis/measures.hpp"

namespace eis::measures {

namespace {

struct Cell {
    int region;
    double t;
};

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

}  // namespace

SweepResult sweep(const SigmaSchedule& schedule, const std::vector<double>& t_list,
                  const std::vector<JordanRegion>& regions, SweepMode mode,
                  const QuadratureSpec& spec, const TruncationPolicy& policy, int threads) {
    if (t_list.empty())
        throw DomainError("sweep: empty t list");
    if (regions.empty())
        throw DomainError("sweep: no regions");
    for (size_t i = 1; i < t_list.size(); ++i)
        if (!(t_list[i] > t_list[i - 1]))
            throw DomainError("sweep: t values must be strictly increasing");
    if ((mode == SweepMode::mu || mode == SweepMode::nu) &&
        schedule.kind != SigmaSchedule::Kind::constant)
        throw DomainError("sweep: mu/nu compare against a fixed sigma, use a const schedule");
    if (mode == SweepMode::luo_sarnak && schedule.kind == SigmaSchedule::Kind::constant)
        throw DomainError("sweep: luo_sarnak needs a critical or approach schedule");

    std::vector<Cell> cells;
    for (int r = 0; r < static_cast<int>(regions.size()); ++r)
        for (double t : t_list) cells.push_back({r, t});

    SweepResult out;
    out.rows.resize(cells.size());

    auto run_cell = [&](size_t i) {
        const Cell& cell = cells[i];
        const JordanRegion& A = regions[cell.region];
        SweepRow row;
        row.mode = to_string(mode);
        row.t = cell.t;
        row.region = cell.region;
        auto t0 = std::chrono::steady_clock::now();
        try {
            switch (mode) {
                case SweepMode::mu: {
                    row.sigma = schedule.sigma_at(cell.t);
                    MeasureResult m =
                        quantum_measure(A, SpectralPoint(row.sigma, cell.t), spec, policy);
                    row.value = m.value;
                    row.err_est = m.err_est;
                    row.target = limit_target(A, row.sigma, spec, policy);
                    break;
                }
                case SweepMode::nu: {
                    row.sigma = schedule.sigma_at(cell.t);
                    MeasureResult m = nu_measure(A, SpectralPoint(row.sigma, cell.t),
                                                 schedule.sigma0, spec, policy);
                    row.value = m.value;
                    row.err_est = m.err_est;
                    row.target = domain::mu_measure(A);
                    break;
                }
                case SweepMode::luo_sarnak: {
                    row.sigma = schedule.sigma_at(cell.t);
                    MeasureResult m =
                        quantum_measure(A, SpectralPoint(row.sigma, cell.t), spec, policy);
                    row.value = m.value;
                    row.err_est = m.err_est;
                    row.target =
                        domain::mu_measure(A) * (6.0 / M_PI) * std::log(cell.t);
                    break;
                }
                case SweepMode::scattering: {
                    // cell.t is the zero ordinate tau_n; the state lives at
                    // 1 - rho_n = 3/4 - i tau_n/2.
                    row.sigma = 0.75;
                    MeasureResult m =
                        quantum_measure(A, SpectralPoint(0.75, -cell.t / 2.0), spec, policy);
                    row.value = m.value;
                    row.err_est = m.err_est;
                    row.target = limit_target(A, 0.75, spec, policy);
                    break;
                }
            }
            row.ratio = row.value / row.target;
        } catch (const Error& e) {
            row.value = row.err_est = row.target = row.ratio = kNaN;
            row.error = e.what();
        }
        row.wall_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        out.rows[i] = std::move(row);
    };

    int n_threads = std::max(1, threads);
    if (n_threads == 1 || cells.size() < 2) {
        for (size_t i = 0; i < cells.size(); ++i) run_cell(i);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        int spawn = std::min<int>(n_threads, static_cast<int>(cells.size()));
        pool.reserve(spawn);
        for (int k = 0; k < spawn; ++k)
            pool.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1))
                    run_cell(i);
            });
        for (auto& th : pool) th.join();
    }
    return out;
}

std::string SweepResult::to_csv(bool stable_output) const {
    std::string out = "mode,t,sigma,region,value,err_est,target,ratio,wall_ms\n";
    char buf[512];
    for (const SweepRow& r : rows) {
        std::snprintf(buf, sizeof buf, "%s,%.17g,%.17g,%d,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                      r.mode.c_str(), r.t, r.sigma, r.region, r.value, r.err_est, r.target,
                      r.ratio, stable_output ? 0.0 : r.wall_ms);
        out += buf;
    }
    return out;
}

std::string SweepResult::to_json(bool stable_output) const {
    nlohmann::json arr = nlohmann::json::array();
    for (const SweepRow& r : rows) {
        nlohmann::json o;
        o["mode"] = r.mode;
        o["t"] = r.t;
        o["sigma"] = r.sigma;
        o["region"] = r.region;
        o["value"] = r.value;
        o["err_est"] = r.err_est;
        o["target"] = r.target;
        o["ratio"] = r.ratio;
        o["wall_ms"] = stable_output ? 0.0 : r.wall_ms;
        if (!r.error.empty()) o["error"] = r.error;
        arr.push_back(std::move(o));
    }
    return arr.dump(2) + "\n";
}

std::string SweepResult::to_text() const {
    std::string out =
        "  mode          t       sigma  reg        value      err_est       target      ratio\n";
    char buf[512];
    for (const SweepRow& r : rows) {
        std::snprintf(buf, sizeof buf, "  %-10s %8.4g  %9.6g  %3d  %11.6g  %11.3g  %11.6g  %9.5g\n",
                      r.mode.c_str(), r.t, r.sigma, r.region, r.value, r.err_est, r.target,
                      r.ratio);
        out += buf;
        if (!r.error.empty()) {
            std::snprintf(buf, sizeof buf, "    cell failed: %s\n", r.error.c_str());
            out += buf;
        }
    }
    return out;
}

}  // namespace eis::measures
