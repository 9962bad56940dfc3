#include "eis/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "eis/eisenstein.hpp"
#include "eis/errors.hpp"
#include "eis/measures.hpp"
#include "eis/verify.hpp"
#include "eis/zeros.hpp"

namespace eis::cli {

namespace {

using domain::HalfPlanePoint;
using domain::JordanRegion;
using eisenstein::EisensteinEvaluator;
using eisenstein::TruncationPolicy;
using measures::SigmaSchedule;
using measures::SweepMode;
using measures::SweepResult;

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string::size_type pos = 0;
    while (true) {
        auto next = text.find(sep, pos);
        out.push_back(text.substr(pos, next - pos));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return out;
}

double parse_double(const std::string& text, const char* what) {
    const char* p = text.c_str();
    char* end = nullptr;
    double v = std::strtod(p, &end);
    if (end == p || *end != '\0' || !std::isfinite(v))
        throw ParseError(std::string("bad ") + what + " '" + text + "'");
    return v;
}

void write_output(const std::string& path, const std::string& data) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot open --out path '" + path + "'");
    f << data;
    if (!f) throw ParseError("failed writing --out path '" + path + "'");
}

void emit(const std::string& data, const std::string& out_path) {
    if (out_path.empty())
        std::fputs(data.c_str(), stdout);
    else
        write_output(out_path, data);
}

HalfPlanePoint parse_point_flag(const std::string& text) {
    Complex z = parse_pair(text);
    if (!(z.imag() > 0))
        throw ParseError("--z must satisfy Im z > 0 (upper half-plane), got '" + text + "'");
    return {z.real(), z.imag()};
}

TruncationPolicy policy_from(double digits) {
    if (!(digits >= 1.0 && digits <= 14.0))
        throw ParseError("--digits must lie in [1, 14]");
    TruncationPolicy policy;
    policy.digits = digits;
    return policy;
}

// ---------------------------------------------------------------- eval

struct EvalRow {
    std::string method;
    Complex value;
    double err_est;
    long n;
};

int cmd_eval(const std::string& z_text, const std::string& s_text, const std::string& method,
             double digits, long c_max, const std::string& format, const std::string& out) {
    HalfPlanePoint z = parse_point_flag(z_text);
    Complex s = parse_pair(s_text);
    TruncationPolicy policy = policy_from(digits);
    if (c_max < 0) throw ParseError("--c-max must be >= 0 (0 = automatic)");

    HalfPlanePoint zr = domain::reduce_to_fundamental(z).first;
    std::vector<EvalRow> rows;
    if (method == "fourier" || method == "both") {
        EisensteinEvaluator ev(s, policy);
        Complex v = ev.eval_raw(zr.x, zr.y);
        rows.push_back({"fourier", v, ev.err_estimate_at(zr.y), ev.truncation_at(zr.y)});
    }
    if (method == "lattice" || method == "both") {
        Complex v = eisenstein::eisenstein_lattice(z, s, c_max);
        long c_eff = c_max > 0 ? c_max
                               : std::max<long>(10, static_cast<long>(std::ceil(8.0 / zr.y)));
        rows.push_back({"lattice", v, 1e-12 * std::abs(v), c_eff});
    }
    double disc = -1;
    if (rows.size() == 2)
        disc = std::abs(rows[0].value - rows[1].value) / std::abs(rows[1].value);

    std::string data;
    char buf[320];
    if (format == "json") {
        nlohmann::json j;
        j["z"] = {z.x, z.y};
        j["s"] = {s.real(), s.imag()};
        j["results"] = nlohmann::json::array();
        for (const EvalRow& r : rows)
            j["results"].push_back({{"method", r.method},
                                    {"value", {r.value.real(), r.value.imag()}},
                                    {"abs", std::abs(r.value)},
                                    {"err_est", r.err_est},
                                    {"n", r.n}});
        if (disc >= 0) j["discrepancy"] = disc;
        data = j.dump(2) + "\n";
    } else if (format == "csv") {
        data = "method,re,im,abs,err_est,n,discrepancy\n";
        for (const EvalRow& r : rows) {
            std::snprintf(buf, sizeof buf, "%s,%.17g,%.17g,%.17g,%.17g,%ld,", r.method.c_str(),
                          r.value.real(), r.value.imag(), std::abs(r.value), r.err_est, r.n);
            data += buf;
            if (disc >= 0) {
                std::snprintf(buf, sizeof buf, "%.17g", disc);
                data += buf;
            }
            data += "\n";
        }
    } else {
        std::snprintf(buf, sizeof buf, "E(z, s) at z = %.17g + %.17gi, s = %.17g + %.17gi\n",
                      z.x, z.y, s.real(), s.imag());
        data = buf;
        for (const EvalRow& r : rows) {
            std::snprintf(buf, sizeof buf,
                          "  %-8s value = %.15g + %.15gi  |value| = %.8g  err_est = %.3g  N = %ld\n",
                          r.method.c_str(), r.value.real(), r.value.imag(), std::abs(r.value),
                          r.err_est, r.n);
            data += buf;
        }
        if (disc >= 0) {
            std::snprintf(buf, sizeof buf, "  relative discrepancy = %.5g\n", disc);
            data += buf;
        }
    }
    emit(data, out);
    return 0;
}

// ---------------------------------------------------------------- phi

int cmd_phi(const std::string& s_text, double t, bool t_set, const std::string& format,
            const std::string& out) {
    Complex s = t_set ? Complex(0.5, t) : parse_pair(s_text);
    LogComplex p = eisenstein::phi(s);
    Complex v = p.to_complex();
    double mag = std::exp(p.log_mag());

    std::string data;
    char buf[320];
    if (format == "json") {
        nlohmann::json j;
        j["s"] = {s.real(), s.imag()};
        j["value"] = {v.real(), v.imag()};
        j["abs"] = mag;
        j["arg"] = p.phase();
        j["log_abs"] = p.log_mag();
        if (s.real() == 0.5) j["unitarity_gap"] = std::fabs(mag - 1.0);
        data = j.dump(2) + "\n";
    } else if (format == "csv") {
        data = "re,im,abs,arg,log_abs\n";
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n", v.real(), v.imag(),
                      mag, p.phase(), p.log_mag());
        data += buf;
    } else {
        std::snprintf(buf, sizeof buf,
                      "phi(%.17g + %.17gi) = %.15g + %.15gi\n  |phi| = %.15g  arg = %.15g  "
                      "log|phi| = %.6g\n",
                      s.real(), s.imag(), v.real(), v.imag(), mag, p.phase(), p.log_mag());
        data = buf;
        if (s.real() == 0.5) {
            std::snprintf(buf, sizeof buf, "  unitarity gap | |phi| - 1 | = %.3g\n",
                          std::fabs(mag - 1.0));
            data += buf;
        }
    }
    emit(data, out);
    return 0;
}

// ---------------------------------------------------------------- measure

int cmd_measure(const std::string& region_text, const std::string& s_text,
                const std::string& mode, double sigma_inf, double rel_tol, double abs_tol,
                double digits, const std::string& format, const std::string& out) {
    JordanRegion A = parse_region(region_text);
    Complex s = parse_pair(s_text);
    TruncationPolicy policy = policy_from(digits);
    QuadratureSpec spec;
    spec.rel_tol = rel_tol;
    spec.abs_tol = abs_tol;

    double value = 0, err = 0, target = 0, ratio = 0;
    std::string target_name;
    if (mode == "mu") {
        measures::MeasureResult m = measures::quantum_measure(A, s, spec, policy);
        value = m.value;
        err = m.err_est;
        target = domain::mu_measure(A);
        target_name = "mu(A)";
    } else if (mode == "nu") {
        if (!(sigma_inf > 0.5)) throw ParseError("--sigma-inf must exceed 1/2");
        measures::MeasureResult m = measures::nu_measure(A, s, sigma_inf, spec, policy);
        value = m.value;
        err = m.err_est;
        target = domain::mu_measure(A);
        target_name = "mu(A)";
    } else {  // luo_sarnak
        double t = s.imag();
        double denom = domain::mu_measure(A) * (6.0 / M_PI) * std::log(t);
        ratio = measures::luo_sarnak_ratio(A, t, s.real(), spec, policy);
        value = ratio * denom;
        target = denom;
        target_name = "mu(A)(6/pi)log t";
    }
    if (ratio == 0 && target > 0) ratio = value / target;

    std::string data;
    char buf[320];
    if (format == "json") {
        nlohmann::json j;
        j["mode"] = mode;
        j["s"] = {s.real(), s.imag()};
        j["value"] = value;
        j["err_est"] = err;
        j["target"] = target;
        j["ratio"] = ratio;
        data = j.dump(2) + "\n";
    } else if (format == "csv") {
        data = "mode,sigma,t,value,err_est,target,ratio\n";
        std::snprintf(buf, sizeof buf, "%s,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", mode.c_str(),
                      s.real(), s.imag(), value, err, target, ratio);
        data += buf;
    } else {
        std::snprintf(buf, sizeof buf,
                      "%s measure at s = %.17g + %.17gi\n  value = %.10g  err_est = %.3g\n  "
                      "%s = %.10g  ratio = %.6g\n",
                      mode.c_str(), s.real(), s.imag(), value, err, target_name.c_str(), target,
                      ratio);
        data = buf;
    }
    emit(data, out);
    return 0;
}

// ---------------------------------------------------------------- sweep

std::string summarize_sweep(const SweepResult& res) {
    std::string out = "sweep summary (largest t per region):\n";
    char buf[320];
    // rows are ordered (region, t); the last row of each region block is the
    // largest t.
    for (size_t i = 0; i < res.rows.size(); ++i) {
        bool last_of_region =
            i + 1 == res.rows.size() || res.rows[i + 1].region != res.rows[i].region;
        if (!last_of_region) continue;
        const measures::SweepRow& r = res.rows[i];
        if (!r.error.empty()) {
            std::snprintf(buf, sizeof buf, "  region %d: failed at t = %g: %s\n", r.region, r.t,
                          r.error.c_str());
        } else {
            std::snprintf(buf, sizeof buf,
                          "  region %d: value %.8g  target %.8g  ratio %.5g  at t = %g\n",
                          r.region, r.value, r.target, r.ratio, r.t);
        }
        out += buf;
    }
    return out;
}

int cmd_sweep(const std::string& mode_text, const std::string& schedule_text,
              const std::string& t_text, const std::vector<std::string>& region_texts,
              const std::string& zeros_path, long count, double rel_tol, double abs_tol,
              double digits, int threads, bool stable, const std::string& format,
              const std::string& out) {
    SweepMode mode = measures::parse_sweep_mode(mode_text);
    std::vector<JordanRegion> regions;
    for (const std::string& rt : region_texts) regions.push_back(parse_region(rt));
    if (regions.empty()) throw ParseError("at least one --region is required");
    TruncationPolicy policy = policy_from(digits);
    QuadratureSpec spec;
    spec.rel_tol = rel_tol;
    spec.abs_tol = abs_tol;

    SigmaSchedule sched;
    std::vector<double> t_list;
    if (mode == SweepMode::scattering) {
        zeros::ZeroTable table =
            zeros_path.empty() ? zeros::seed_table() : zeros::load_zeros(zeros_path);
        if (count < 1 || count > static_cast<long>(table.size()))
            throw ParseError("--count out of range for the zero table");
        zeros::refine_entries(table, count);
        t_list.assign(table.taus.begin(), table.taus.begin() + count);
    } else {
        if (t_text.empty()) throw ParseError("--t is required for mode " + mode_text);
        if (schedule_text.empty()) throw ParseError("--schedule is required for mode " + mode_text);
        t_list = parse_list(t_text);
        for (size_t i = 1; i < t_list.size(); ++i)
            if (!(t_list[i] > t_list[i - 1]))
                throw ParseError("--t values must be strictly increasing");
        sched = SigmaSchedule::parse(schedule_text);
        if ((mode == SweepMode::mu || mode == SweepMode::nu) &&
            sched.kind != SigmaSchedule::Kind::constant)
            throw ParseError("mode " + mode_text + " needs a const:<sigma0> schedule");
        if (mode == SweepMode::luo_sarnak && sched.kind == SigmaSchedule::Kind::constant)
            throw ParseError("mode luo_sarnak needs the critical or approach:<c>,<p> schedule");
    }

    SweepResult res = measures::sweep(sched, t_list, regions, mode, spec, policy, threads);

    std::string data = format == "json"  ? res.to_json(stable)
                       : format == "text" ? res.to_text()
                                          : res.to_csv(stable);
    std::string summary = summarize_sweep(res);
    if (!out.empty()) {
        write_output(out, data);
        std::fputs(summary.c_str(), stdout);
    } else {
        std::fputs(data.c_str(), stdout);
        std::fputs(summary.c_str(), stderr);
    }

    bool all_failed = !res.rows.empty();
    for (const measures::SweepRow& r : res.rows)
        if (r.error.empty()) all_failed = false;
    return all_failed ? 3 : 0;
}

// ---------------------------------------------------------------- scatter

int cmd_scatter(const std::string& region_text, long count, const std::string& zeros_path,
                const std::string& z_text, double radius, int nodes, double rel_tol,
                double abs_tol, double digits, const std::string& format, const std::string& out) {
    JordanRegion A = parse_region(region_text);
    HalfPlanePoint z = parse_point_flag(z_text);
    TruncationPolicy policy = policy_from(digits);
    QuadratureSpec spec;
    spec.rel_tol = rel_tol;
    spec.abs_tol = abs_tol;

    zeros::ZeroTable table =
        zeros_path.empty() ? zeros::seed_table() : zeros::load_zeros(zeros_path);
    if (count < 1 || count > static_cast<long>(table.size()))
        throw ParseError("--count out of range for the zero table");
    zeros::refine_entries(table, count);
    std::vector<Complex> poles = zeros::scattering_poles(table, count);

    struct Row {
        double tau;
        Complex rho;
        double gap;
        double value, err, target, ratio;
    };
    std::vector<Row> rows;
    double target = measures::limit_target(A, 0.75, spec, policy);
    for (long n = 0; n < count; ++n) {
        Row r;
        r.tau = table.taus[static_cast<size_t>(n)];
        r.rho = poles[static_cast<size_t>(n)];
        Complex fast = eisenstein::scattering_state(z, r.rho);
        Complex slow = eisenstein::scattering_state_contour(z, r.rho, radius, nodes);
        r.gap = std::abs(slow - fast) / std::abs(fast);
        measures::MeasureResult m =
            measures::quantum_measure(A, Complex(0.75, -r.tau / 2.0), spec, policy);
        r.value = m.value;
        r.err = m.err_est;
        r.target = target;
        r.ratio = m.value / target;
        rows.push_back(r);
    }

    std::string data;
    char buf[360];
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const Row& r : rows)
            arr.push_back({{"tau", r.tau},
                           {"rho", {r.rho.real(), r.rho.imag()}},
                           {"residue_gap", r.gap},
                           {"value", r.value},
                           {"err_est", r.err},
                           {"target", r.target},
                           {"ratio", r.ratio}});
        data = arr.dump(2) + "\n";
    } else if (format == "csv") {
        data = "tau,rho_re,rho_im,residue_gap,value,err_est,target,ratio\n";
        for (const Row& r : rows) {
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                          r.tau, r.rho.real(), r.rho.imag(), r.gap, r.value, r.err, r.target,
                          r.ratio);
            data += buf;
        }
    } else {
        for (const Row& r : rows) {
            std::snprintf(buf, sizeof buf,
                          "zero at tau = %.12g  (pole rho = %.12g + %.12gi)\n"
                          "  residue identity gap at z = %g + %gi: %.3g\n"
                          "  measure over A = %.8g  E(.,3/2) target = %.8g  ratio = %.5g\n",
                          r.tau, r.rho.real(), r.rho.imag(), z.x, z.y, r.gap, r.value, r.target,
                          r.ratio);
            data += buf;
        }
    }
    emit(data, out);
    return 0;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const std::string& suite, std::uint64_t seed, const std::string& format,
               const std::string& out) {
    bool full = suite == "full";
    std::vector<verify::CheckResult> results = verify::run_suite(full, seed);
    std::string data;
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const verify::CheckResult& r : results)
            arr.push_back({{"name", r.name},
                           {"pass", r.pass},
                           {"residual", r.residual},
                           {"tolerance", r.tolerance},
                           {"seconds", r.seconds},
                           {"detail", r.detail}});
        data = arr.dump(2) + "\n";
    } else {
        data = verify::render_text(results);
    }
    emit(data, out);
    return verify::all_pass(results) ? 0 : 1;
}

}  // namespace

Complex parse_pair(const std::string& text) {
    std::vector<std::string> parts = split(text, ',');
    if (parts.size() == 1) return {parse_double(parts[0], "number"), 0.0};
    if (parts.size() == 2)
        return {parse_double(parts[0], "real part"), parse_double(parts[1], "imaginary part")};
    throw ParseError("expected 're' or 're,im', got '" + text + "'");
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<std::string> parts = split(text, ',');
    std::vector<double> out;
    for (const std::string& p : parts) out.push_back(parse_double(p, "list entry"));
    if (out.empty()) throw ParseError("empty list");
    return out;
}

JordanRegion parse_region(const std::string& text) {
    std::vector<JordanRegion::Rect> rects;
    for (const std::string& block : split(text, ';')) {
        std::vector<std::string> parts = split(block, ',');
        if (parts.size() != 4)
            throw ParseError("region rectangle wants x0,x1,y0,y1, got '" + block + "'");
        rects.push_back({parse_double(parts[0], "x0"), parse_double(parts[1], "x1"),
                         parse_double(parts[2], "y0"), parse_double(parts[3], "y1")});
    }
    try {
        return JordanRegion(std::move(rects));
    } catch (const DomainError& e) {
        // Geometry problems in a flag are usage errors.
        throw ParseError(e.what());
    }
}

int run(int argc, const char* const* argv) {
    CLI::App app{"Eisenstein series evaluation and spectral-measure experiments for PSL(2,Z)"};
    app.require_subcommand(1);
    app.option_defaults()->always_capture_default();

    std::string z_text, s_text, method = "fourier", format, out, mode, schedule_text, t_text;
    std::string zeros_path, suite = "fast";
    std::vector<std::string> region_texts;
    std::string region_text;
    double digits = 10.0, rel_tol = 1e-6, abs_tol = 1e-9, t_flag = 0, sigma_inf = 0.75;
    double radius = 1e-3;
    long c_max = 0, count = 3;
    int threads = 1, nodes = 128;
    std::uint64_t seed = 20260822ULL;
    bool stable = false;

    CLI::App* eval = app.add_subcommand("eval", "Evaluate E(z, s)");
    eval->add_option("--z", z_text, "Evaluation point re,im with Im > 0")->required();
    eval->add_option("--s", s_text, "Spectral parameter re,im")->required();
    eval->add_option("--method", method, "fourier | lattice | both")
        ->check(CLI::IsMember({"fourier", "lattice", "both"}));
    eval->add_option("--digits", digits, "Target truncation digits (1-14)");
    eval->add_option("--c-max", c_max, "Lattice shell cutoff, 0 = automatic");
    eval->add_option("--format", format, "text | csv | json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    eval->add_option("--out", out, "Write output to file instead of stdout");

    CLI::App* phic = app.add_subcommand("phi", "Evaluate the scattering matrix phi(s)");
    CLI::Option* phi_s = phic->add_option("--s", s_text, "Spectral parameter re,im");
    CLI::Option* phi_t =
        phic->add_option("--t", t_flag, "Shorthand for s = 1/2 + it")->excludes(phi_s);
    phic->add_option("--format", format, "text | csv | json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    phic->add_option("--out", out, "Write output to file instead of stdout");

    CLI::App* meas = app.add_subcommand("measure", "Integrate |E|^2 style measures over a region");
    meas->add_option("--region", region_text, "x0,x1,y0,y1[;more rectangles]")->required();
    meas->add_option("--s", s_text, "Spectral parameter re,im")->required();
    meas->add_option("--mode", mode, "mu | nu | luo_sarnak")
        ->check(CLI::IsMember({"mu", "nu", "luo_sarnak"}))
        ->default_val("mu");
    meas->add_option("--sigma-inf", sigma_inf, "Denominator exponent for nu mode");
    meas->add_option("--rel-tol", rel_tol, "Quadrature relative tolerance");
    meas->add_option("--abs-tol", abs_tol, "Quadrature absolute tolerance");
    meas->add_option("--digits", digits, "Fourier truncation digits");
    meas->add_option("--format", format, "text | csv | json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    meas->add_option("--out", out, "Write output to file instead of stdout");

    CLI::App* sweep = app.add_subcommand("sweep", "Measure grids over t for trend experiments");
    sweep->add_option("--mode", mode, "mu | nu | luo_sarnak | scattering")->required();
    sweep->add_option("--schedule", schedule_text,
                      "sigma_t family: const:<sigma0> | critical | approach:<c>,<p>");
    sweep->add_option("--t", t_text, "Comma list of t values, strictly increasing");
    sweep->add_option("--region", region_texts,
                      "Region x0,x1,y0,y1[;...]; repeat the flag for several regions");
    sweep->add_option("--zeros", zeros_path, "Zero ordinate file for scattering mode");
    sweep->add_option("--count", count, "Number of zeros in scattering mode");
    sweep->add_option("--rel-tol", rel_tol, "Quadrature relative tolerance");
    sweep->add_option("--abs-tol", abs_tol, "Quadrature absolute tolerance");
    sweep->add_option("--digits", digits, "Fourier truncation digits");
    sweep->add_option("--threads", threads, "Parallel sweep cells")->check(CLI::Range(1, 256));
    sweep->add_flag("--stable-output", stable,
                    "Zero the wall_ms column so reruns are byte-identical");
    sweep->add_option("--format", format, "csv | json | text")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    sweep->add_option("--out", out, "Write data to file; summary then goes to stdout");

    CLI::App* scat = app.add_subcommand("scatter", "Residue states at zeta zeros vs their limit");
    scat->add_option("--region", region_text, "x0,x1,y0,y1[;more rectangles]")->required();
    scat->add_option("--count", count, "Number of zeros");
    scat->add_option("--zeros", zeros_path, "Zero ordinate file (default: built-in seeds)");
    scat->add_option("--z", z_text, "Cross-check point re,im for the contour residue")
        ->default_val("0.2,1.3");
    scat->add_option("--radius", radius, "Contour radius")->check(CLI::Range(1e-6, 0.05));
    scat->add_option("--nodes", nodes, "Contour trapezoid nodes")->check(CLI::Range(64, 16384));
    scat->add_option("--rel-tol", rel_tol, "Quadrature relative tolerance");
    scat->add_option("--abs-tol", abs_tol, "Quadrature absolute tolerance");
    scat->add_option("--digits", digits, "Fourier truncation digits");
    scat->add_option("--format", format, "text | csv | json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    scat->add_option("--out", out, "Write output to file instead of stdout");

    CLI::App* ver = app.add_subcommand("verify", "Run the identity/oracle suite");
    ver->add_option("--suite", suite, "fast | full")->check(CLI::IsMember({"fast", "full"}));
    ver->add_option("--seed", seed, "Sampling seed (suite is deterministic per seed)");
    ver->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
    ver->add_option("--out", out, "Write report to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (eval->parsed())
            return cmd_eval(z_text, s_text, method, digits, c_max, format, out);
        if (phic->parsed()) {
            if (!*phi_s && !*phi_t) throw ParseError("phi needs --s or --t");
            return cmd_phi(s_text, t_flag, static_cast<bool>(*phi_t), format, out);
        }
        if (meas->parsed())
            return cmd_measure(region_text, s_text, mode, sigma_inf, rel_tol, abs_tol, digits,
                               format, out);
        if (sweep->parsed())
            return cmd_sweep(mode, schedule_text, t_text, region_texts, zeros_path, count,
                             rel_tol, abs_tol, digits, threads, stable,
                             format.empty() ? "csv" : format, out);
        if (scat->parsed())
            return cmd_scatter(region_text, count, zeros_path, z_text, radius, nodes, rel_tol,
                               abs_tol, digits, format, out);
        if (ver->parsed())
            return cmd_verify(suite, seed, format, out);
        throw ParseError("no command given");
    } catch (const ParseError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
}

}  // namespace eis::cli
