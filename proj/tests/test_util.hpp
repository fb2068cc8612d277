#ifndef LTM_TEST_UTIL_HPP
#define LTM_TEST_UTIL_HPP

#include <cmath>
#include <random>

#include "ltm/annulus.hpp"
#include "ltm/bipolar.hpp"
#include "ltm/twist.hpp"
#include "ltm/types.hpp"

namespace ltm::test {

inline PlanePoint random_point_in_A(std::mt19937_64& gen, const AnnulusPair& ann,
                                    double seam_margin = 0.0) {
    std::uniform_real_distribution<double> coord(-1.0 - ann.r1, 1.0 + ann.r1);
    for (;;) {
        const PlanePoint p(coord(gen), coord(gen));
        if (!in_A(p, ann)) continue;
        if (seam_margin > 0.0) {
            const double dp = dist_plus(p), dm = dist_minus(p);
            if (std::min({std::abs(dp - ann.r0), std::abs(dp - ann.r1),
                          std::abs(dm - ann.r0), std::abs(dm - ann.r1)}) < seam_margin)
                continue;
        }
        return p;
    }
}

// Sample with a seam margin at p and at the intermediate point Phi(p), so a
// finite-difference stencil around p never straddles a branch seam of
// Theta = Gamma o Phi.
inline PlanePoint random_chain_safe_point(std::mt19937_64& gen,
                                          const AnnulusPair& ann, double margin) {
    for (;;) {
        const PlanePoint p = random_point_in_A(gen, ann, margin);
        const PlanePoint q = phi(p, ann);
        const double dm = dist_minus(q);
        if (std::abs(dm - ann.r0) < margin || std::abs(dm - ann.r1) < margin) continue;
        return p;
    }
}

// Fourth-order central difference (Richardson form), the determinant oracle:
// truncation O(h^4) lets h sit well above the round-off floor.
template <typename F>
double central_diff4(F f, double t, double h) {
    return (8.0 * (f(t + h) - f(t - h)) - (f(t + 2.0 * h) - f(t - 2.0 * h))) /
           (12.0 * h);
}

inline Mat2 fd4_theta_jacobian(const PlanePoint& p, const AnnulusPair& ann,
                               double h = 1e-5) {
    Mat2 j;
    j(0, 0) = central_diff4(
        [&](double u) { return theta_map(PlanePoint(u, p.v), ann).u; }, p.u, h);
    j(1, 0) = central_diff4(
        [&](double u) { return theta_map(PlanePoint(u, p.v), ann).v; }, p.u, h);
    j(0, 1) = central_diff4(
        [&](double v) { return theta_map(PlanePoint(p.u, v), ann).u; }, p.v, h);
    j(1, 1) = central_diff4(
        [&](double v) { return theta_map(PlanePoint(p.u, v), ann).v; }, p.v, h);
    return j;
}

// Wrap-aware central difference of a torus map, step h, for one coordinate
// pair; the displacement is unwrapped around the base image.
template <typename M>
Mat2 fd_torus_jacobian(M map, const TorusPoint& z, double h = 1e-7) {
    const auto col = [&](bool vary_x) {
        const TorusPoint zp = vary_x ? TorusPoint(z.x + h, z.y) : TorusPoint(z.x, z.y + h);
        const TorusPoint zm = vary_x ? TorusPoint(z.x - h, z.y) : TorusPoint(z.x, z.y - h);
        const TorusPoint fp = map(zp);
        const TorusPoint fm = map(zm);
        return Vec2(circle_delta(fm.x, fp.x) / (2.0 * h),
                    circle_delta(fm.y, fp.y) / (2.0 * h));
    };
    Mat2 j;
    j.col(0) = col(true);
    j.col(1) = col(false);
    return j;
}

}  // namespace ltm::test

#endif
