#pragma once

#include <utility>
#include <vector>

#include "eis/types.hpp"

namespace eis::domain {

// Point z = x + iy in the upper half-plane.
struct HalfPlanePoint {
    double x = 0;
    double y = 1;

    HalfPlanePoint() = default;
    HalfPlanePoint(double x_, double y_);

    Complex to_complex() const { return {x, y}; }
};

// Element of PSL(2,Z), identified with its negation; det must be 1.
struct MoebiusElement {
    long long a = 1, b = 0, c = 0, d = 1;

    MoebiusElement() = default;
    MoebiusElement(long long a_, long long b_, long long c_, long long d_);

    static MoebiusElement identity() { return {}; }
    bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }
    MoebiusElement compose(const MoebiusElement& o) const;  // this * o
};

HalfPlanePoint apply_moebius(const MoebiusElement& g, const HalfPlanePoint& z);

// Im(gz) = y / |cz + d|^2, without forming the full image.
double im_moebius(const MoebiusElement& g, const HalfPlanePoint& z);

// Gauss reduction to |Re z| <= 1/2, |z| >= 1; returns (reduced point, g) with
// g z = reduced.
std::pair<HalfPlanePoint, MoebiusElement> reduce_to_fundamental(const HalfPlanePoint& z);

// Coset representatives of Gamma_infty \ Gamma as (c, d) rows: (0, 1) plus
// all coprime pairs with 1 <= c <= c_max, |d| <= d_bound.
std::vector<std::pair<long long, long long>> coset_representatives(long long c_max,
                                                                   long long d_bound);

// Finite union of axis-aligned rectangles, y bounded away from 0.
struct JordanRegion {
    struct Rect {
        double x0, x1, y0, y1;
    };
    std::vector<Rect> rects;
    // Largest Fourier mode the integrand is expected to carry in x; quadrature
    // uses it to budget nodes per oscillation period.
    int max_fourier_mode_hint = 1;

    JordanRegion() = default;
    explicit JordanRegion(std::vector<Rect> rs, int hint = 1);

    double y_min() const;
    bool empty() const { return rects.empty(); }
};

// Hyperbolic area int_A dx dy / y^2; exact per rectangle.
double mu_measure(const JordanRegion& A, const QuadratureSpec& spec = {});

// Inner and outer rectangle coverings of the fundamental domain
// (|x| <= 1/2, |z| >= 1) truncated at height y_top, n_strips vertical strips
// per half.  mu of both converge to pi/3 - 1/y_top from below/above.
JordanRegion fundamental_domain_boxes(int n_strips, double y_top, bool outer);

}  // namespace eis::domain
