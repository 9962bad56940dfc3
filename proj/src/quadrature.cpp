#include "eis/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <queue>

#include "eis/errors.hpp"

namespace eis::numerics {

namespace {

std::mutex g_rule_mutex;
std::map<int, std::vector<std::pair<double, double>>> g_rules;

std::vector<std::pair<double, double>> build_rule(int n) {
    // Newton on P_n; initial guesses from the Chebyshev-like asymptotic.
    std::vector<std::pair<double, double>> rule(n);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1);
            double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule[i] = {x, 2.0 / ((1 - x * x) * pp * pp)};
    }
    std::sort(rule.begin(), rule.end());
    return rule;
}

Complex gl_panel(const std::function<Complex(double)>& f, double a, double b, int n) {
    const auto& rule = gauss_legendre_rule(n);
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    Complex acc = 0;
    for (const auto& [x, w] : rule) acc += w * f(c + h * x);
    return h * acc;
}

struct Seg {
    double a, b;
    Complex fine;
    double err;
    int depth;
    long id;
};

struct SegWorse {
    bool operator()(const Seg& p, const Seg& q) const {
        if (p.err != q.err) return p.err < q.err;
        return p.id > q.id;
    }
};

Seg make_seg(const std::function<Complex(double)>& f, double a, double b, int depth, long id,
             int n) {
    Complex coarse = gl_panel(f, a, b, n);
    double m = 0.5 * (a + b);
    Complex fine = gl_panel(f, a, m, n) + gl_panel(f, m, b, n);
    return Seg{a, b, fine, std::abs(fine - coarse), depth, id};
}

QuadResult integrate_finite(const std::function<Complex(double)>& f, double lo, double hi,
                            const QuadratureSpec& spec) {
    const int n = spec.base_rule;
    const long seg_cap = 8192;
    long next_id = 0;
    std::priority_queue<Seg, std::vector<Seg>, SegWorse> open;
    open.push(make_seg(f, lo, hi, 0, next_id++, n));
    Complex total = open.top().fine;
    double err = open.top().err;
    std::vector<Seg> done;

    auto tol = [&](double mag) { return std::max(spec.abs_tol, spec.rel_tol * mag); };

    while (err > tol(std::abs(total)) && !open.empty() && next_id < seg_cap) {
        Seg s = open.top();
        open.pop();
        if (s.depth >= spec.max_depth) {
            done.push_back(s);
            continue;
        }
        double m = 0.5 * (s.a + s.b);
        Seg l = make_seg(f, s.a, m, s.depth + 1, next_id++, n);
        Seg r = make_seg(f, m, s.b, s.depth + 1, next_id++, n);
        total += l.fine + r.fine - s.fine;
        err += l.err + r.err - s.err;
        open.push(l);
        open.push(r);
    }
    if (err > tol(std::abs(total)))
        throw ToleranceError("integrate_1d: tolerance not met after refinement budget");
    return {total, err};
}

// Semi-infinite [lo, inf): y = lo + exp((pi/2) sinh t) on the trapezoid grid,
// halving the step until two successive levels agree.
QuadResult integrate_exp_sinh(const std::function<Complex(double)>& f, double lo,
                              const QuadratureSpec& spec) {
    auto term = [&](double t) -> Complex {
        double sh = std::sinh(t);
        double e = 0.5 * M_PI * sh;
        if (e > 690.0) return 0.0;
        double u = std::exp(e);
        Complex v = f(lo + u);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return 0.0;
        return v * (u * 0.5 * M_PI * std::cosh(t));
    };
    auto level_sum = [&](double h) -> Complex {
        Complex acc = term(0.0);
        for (int sgn : {+1, -1}) {
            int small = 0;
            for (long k = 1; k * h < 7.0; ++k) {
                Complex v = term(sgn * k * h);
                acc += v;
                double mag = std::abs(v);
                if (mag < 1e-18 * (1.0 + std::abs(acc)))
                    ++small;
                else
                    small = 0;
                if (small >= 4) break;
            }
        }
        return h * acc;
    };

    double h = 1.0;
    Complex prev = level_sum(h);
    for (int lev = 0; lev < 12; ++lev) {
        h *= 0.5;
        Complex cur = level_sum(h);
        double err = std::abs(cur - prev);
        if (err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(cur))) return {cur, err};
        prev = cur;
    }
    throw ToleranceError("integrate_1d: exp-sinh levels exhausted");
}

struct Panel {
    double x0, x1, y0, y1;
    Complex fine;
    double err;
    int depth;
    long id;
};

struct PanelWorse {
    bool operator()(const Panel& p, const Panel& q) const {
        if (p.err != q.err) return p.err < q.err;
        return p.id > q.id;
    }
};

Complex tensor_panel(const std::function<Complex(double, double)>& f, double x0, double x1,
                     double y0, double y1, Weight weight, int n) {
    const auto& rule = gauss_legendre_rule(n);
    double cx = 0.5 * (x0 + x1), hx = 0.5 * (x1 - x0);
    double cy = 0.5 * (y0 + y1), hy = 0.5 * (y1 - y0);
    Complex acc = 0;
    for (const auto& [ty, wy] : rule) {
        double y = cy + hy * ty;
        double wrow = wy * (weight == Weight::hyperbolic ? 1.0 / (y * y) : 1.0);
        Complex row = 0;
        for (const auto& [tx, wx] : rule) row += wx * f(cx + hx * tx, y);
        acc += wrow * row;
    }
    return hx * hy * acc;
}

Panel make_panel(const std::function<Complex(double, double)>& f, double x0, double x1, double y0,
                 double y1, Weight weight, int depth, long id, int n) {
    Complex coarse = tensor_panel(f, x0, x1, y0, y1, weight, n);
    double mx = 0.5 * (x0 + x1), my = 0.5 * (y0 + y1);
    Complex fine = tensor_panel(f, x0, mx, y0, my, weight, n) +
                   tensor_panel(f, mx, x1, y0, my, weight, n) +
                   tensor_panel(f, x0, mx, my, y1, weight, n) +
                   tensor_panel(f, mx, x1, my, y1, weight, n);
    return Panel{x0, x1, y0, y1, fine, std::abs(fine - coarse), depth, id};
}

}  // namespace

const std::vector<std::pair<double, double>>& gauss_legendre_rule(int n) {
    if (n < 2 || n > 200) throw DomainError("gauss_legendre_rule: n out of range");
    std::lock_guard<std::mutex> lock(g_rule_mutex);
    auto it = g_rules.find(n);
    if (it == g_rules.end()) it = g_rules.emplace(n, build_rule(n)).first;
    return it->second;
}

QuadResult integrate_1d(const std::function<Complex(double)>& f, double lo, double hi,
                        const QuadratureSpec& spec) {
    if (!std::isfinite(lo)) throw DomainError("integrate_1d: lower limit must be finite");
    if (std::isinf(hi)) return integrate_exp_sinh(f, lo, spec);
    if (!(lo < hi)) throw DomainError("integrate_1d: requires lo < hi");
    return integrate_finite(f, lo, hi, spec);
}

QuadResult integrate_2d(const std::function<Complex(double, double)>& f,
                        const domain::JordanRegion& region, Weight weight,
                        const QuadratureSpec& spec) {
    if (region.empty()) return {0.0, 0.0};
    const int n = spec.base_rule;
    const long panel_cap = 20000;
    long next_id = 0;
    std::priority_queue<Panel, std::vector<Panel>, PanelWorse> open;
    Complex total = 0;
    double err = 0;

    // Base tiling: split each box in x until the rule resolves the declared
    // oscillation (>= 6 nodes per period of the top mode).
    for (const auto& r : region.rects) {
        double span = r.x1 - r.x0;
        int nx = std::max(1L, std::lround(std::ceil(span * 6.0 * region.max_fourier_mode_hint /
                                                    double(n))));
        for (int i = 0; i < nx; ++i) {
            double a = r.x0 + span * i / nx, b = r.x0 + span * (i + 1) / nx;
            Panel p = make_panel(f, a, b, r.y0, r.y1, weight, 0, next_id++, n);
            total += p.fine;
            err += p.err;
            open.push(p);
        }
    }

    auto tol = [&](double mag) { return std::max(spec.abs_tol, spec.rel_tol * mag); };
    while (err > tol(std::abs(total)) && !open.empty() && next_id < panel_cap) {
        Panel p = open.top();
        open.pop();
        if (p.depth >= spec.max_depth) continue;
        double mx = 0.5 * (p.x0 + p.x1), my = 0.5 * (p.y0 + p.y1);
        total -= p.fine;
        err -= p.err;
        for (auto [a, b, c, d] : {std::array<double, 4>{p.x0, mx, p.y0, my},
                                  std::array<double, 4>{mx, p.x1, p.y0, my},
                                  std::array<double, 4>{p.x0, mx, my, p.y1},
                                  std::array<double, 4>{mx, p.x1, my, p.y1}}) {
            Panel q = make_panel(f, a, b, c, d, weight, p.depth + 1, next_id++, n);
            total += q.fine;
            err += q.err;
            open.push(q);
        }
    }
    if (err > tol(std::abs(total)))
        throw ToleranceError("integrate_2d: tolerance not met after refinement budget");
    return {total, err};
}

}  // namespace eis::numerics
