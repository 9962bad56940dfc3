#include "eis/domain.hpp"

#include <cmath>
#include <numeric>

#include "eis/errors.hpp"

namespace eis::domain {

HalfPlanePoint::HalfPlanePoint(double x_, double y_) : x(x_), y(y_) {
    if (!(y > 0) || !std::isfinite(x) || !std::isfinite(y))
        throw DomainError("HalfPlanePoint: requires finite z with y > 0");
}

MoebiusElement::MoebiusElement(long long a_, long long b_, long long c_, long long d_)
    : a(a_), b(b_), c(c_), d(d_) {
    if (a * d - b * c != 1) throw DomainError("MoebiusElement: det must be 1");
    // Projective normalization: fix the sign so (c, d) lexicographically
    // prefers c > 0, then d > 0.
    if (c < 0 || (c == 0 && d < 0)) {
        a = -a;
        b = -b;
        c = -c;
        d = -d;
    }
}

MoebiusElement MoebiusElement::compose(const MoebiusElement& o) const {
    return MoebiusElement(a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c,
                          c * o.b + d * o.d);
}

HalfPlanePoint apply_moebius(const MoebiusElement& g, const HalfPlanePoint& z) {
    Complex w = (double(g.a) * z.to_complex() + double(g.b)) /
                (double(g.c) * z.to_complex() + double(g.d));
    return HalfPlanePoint(w.real(), w.imag());
}

double im_moebius(const MoebiusElement& g, const HalfPlanePoint& z) {
    double re = double(g.c) * z.x + double(g.d);
    double im = double(g.c) * z.y;
    return z.y / (re * re + im * im);
}

std::pair<HalfPlanePoint, MoebiusElement> reduce_to_fundamental(const HalfPlanePoint& z0) {
    double x = z0.x, y = z0.y;
    MoebiusElement g;
    for (int it = 0; it < 10000; ++it) {
        // Translate into x in [-1/2, 1/2).
        double k = std::floor(x + 0.5);
        if (k != 0) {
            x -= k;
            g = MoebiusElement(1, -(long long)k, 0, 1).compose(g);
        }
        double n2 = x * x + y * y;
        if (n2 >= 1.0) return {HalfPlanePoint(x, y), g};
        // Invert: z -> -1/z.
        x = -x / n2;
        y = y / n2;
        g = MoebiusElement(0, -1, 1, 0).compose(g);
    }
    throw DomainError("reduce_to_fundamental: iteration cap hit");
}

std::vector<std::pair<long long, long long>> coset_representatives(long long c_max,
                                                                  long long d_bound) {
    if (c_max < 1) throw DomainError("coset_representatives: c_max >= 1");
    std::vector<std::pair<long long, long long>> out;
    out.emplace_back(0, 1);
    for (long long c = 1; c <= c_max; ++c)
        for (long long d = -d_bound; d <= d_bound; ++d)
            if (std::gcd(c, std::llabs(d)) == 1) out.emplace_back(c, d);
    return out;
}

JordanRegion::JordanRegion(std::vector<Rect> rs, int hint)
    : rects(std::move(rs)), max_fourier_mode_hint(hint) {
    for (const auto& r : rects) {
        if (!(r.x0 < r.x1) || !(0 < r.y0) || !(r.y0 < r.y1))
            throw DomainError("JordanRegion: rectangle must satisfy x0<x1, 0<y0<y1");
    }
    // Quadratic check, so only affordable for hand-sized unions; the strip
    // coverings below are disjoint by construction.
    if (rects.size() <= 256)
        for (size_t i = 0; i < rects.size(); ++i)
            for (size_t j = i + 1; j < rects.size(); ++j) {
                const auto &p = rects[i], &q = rects[j];
                bool overlap = p.x0 < q.x1 && q.x0 < p.x1 && p.y0 < q.y1 && q.y0 < p.y1;
                if (overlap)
                    throw DomainError("JordanRegion: rectangles must have disjoint interiors");
            }
    if (max_fourier_mode_hint < 1) max_fourier_mode_hint = 1;
}

double JordanRegion::y_min() const {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& r : rects) m = std::min(m, r.y0);
    return m;
}

double mu_measure(const JordanRegion& A, const QuadratureSpec&) {
    double acc = 0;
    for (const auto& r : A.rects) acc += (r.x1 - r.x0) * (1.0 / r.y0 - 1.0 / r.y1);
    return acc;
}

JordanRegion fundamental_domain_boxes(int n_strips, double y_top, bool outer) {
    if (n_strips < 1 || !(y_top > 1.2)) throw DomainError("fundamental_domain_boxes: bad inputs");
    std::vector<JordanRegion::Rect> rs;
    rs.reserve(2 * size_t(n_strips));
    double w = 0.5 / n_strips;
    for (int i = 0; i < n_strips; ++i) {
        double a = i * w, b = (i + 1) * w;
        // floor(x) = sqrt(1 - x^2) decreases in |x|; the inner covering uses
        // the strip's max floor, the outer its min.
        double y_in = std::sqrt(1.0 - a * a);
        double y_out = std::sqrt(1.0 - b * b);
        double y_lo = outer ? y_out : y_in;
        rs.push_back({a, b, y_lo, y_top});
        rs.push_back({-b, -a, y_lo, y_top});
    }
    return JordanRegion(std::move(rs), 1);
}

}  // namespace eis::domain
