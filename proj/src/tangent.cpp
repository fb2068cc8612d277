#include "ltm/tangent.hpp"

#include <cmath>

#include "ltm/errors.hpp"
#include "ltm/torus_map.hpp"

namespace ltm {

namespace {

// The Omega branch regions have their own derivative seams: DH jumps across
// the boundary of I x (-I) (forward switch) and of I x I (inverse switch).
bool near_rect_boundary(double x, double y, double xlo, double xhi, double ylo,
                        double yhi, double tol) {
    const bool near_x = std::abs(x - xlo) <= tol || std::abs(x - xhi) <= tol;
    const bool near_y = std::abs(y - ylo) <= tol || std::abs(y - yhi) <= tol;
    const bool in_x = x >= xlo - tol && x <= xhi + tol;
    const bool in_y = y >= ylo - tol && y <= yhi + tol;
    return (near_x && in_y) || (near_y && in_x);
}

}  // namespace

Mat2 iota_rotation(bool inverse) {
    Mat2 m;
    if (inverse)
        m << 0.0, 1.0, -1.0, 0.0;
    else
        m << 0.0, -1.0, 1.0, 0.0;
    return m;
}

Mat2 df_jacobian(const TorusPoint& z, const AnnulusPair& ann, bool inverse,
                 double seam_tol) {
    if (std::abs(z.x - ann.r0) <= seam_tol || std::abs(z.x - ann.r1) <= seam_tol)
        throw SeamDerivative("df_jacobian: x on an annulus edge");
    if (z.x < ann.r0 || z.x > ann.r1) return Mat2::Identity();

    const double c = ann.c();
    const double d1_inv = d1_psi_inv(z.x, z.y, ann.r0, ann.r1, seam_tol);
    const double d2_inv = d2_psi_inv(z.x, z.y, ann.r0, ann.r1, seam_tol);
    const double turn = c * (z.x - ann.r0);
    const double pushed =
        wrap_pi(psi_inv(z.x, z.y, ann) + (inverse ? -turn : turn));
    const double d1 = d1_psi(z.x, pushed, ann.r0, ann.r1, seam_tol);
    const double d2 = d2_psi(z.x, pushed, ann.r0, ann.r1, seam_tol);

    Mat2 m;
    m(0, 0) = 1.0;
    m(0, 1) = 0.0;
    m(1, 0) = d1 + d2 * (d1_inv + (inverse ? -c : c));
    m(1, 1) = d2 * d2_inv;
    return m;
}

Mat2 dh_jacobian(const TorusPoint& z, const AnnulusPair& ann, double seam_tol) {
    Mat2 j1;
    try {
        j1 = df_jacobian(z, ann, false, seam_tol);
    } catch (const SeamDerivative& e) {
        throw SeamDerivative(std::string("dh_jacobian stage 1 (DF): ") + e.what());
    }
    const TorusPoint z1 = detail::f_raw(z, ann, false);

    if (near_rect_boundary(z1.x, z1.y, ann.r0, ann.r1, -ann.r1, -ann.r0, seam_tol))
        throw SeamDerivative("dh_jacobian stage 2 (Omega): branch boundary");
    const bool omega_iota = in_I(z1.x, ann) && in_neg_I(z1.y, ann);
    const Mat2 r2 = iota_rotation(!omega_iota);
    const TorusPoint z2 = omega(z1, ann);

    Mat2 j3;
    try {
        j3 = df_jacobian(z2, ann, true, seam_tol);
    } catch (const SeamDerivative& e) {
        throw SeamDerivative(std::string("dh_jacobian stage 3 (DF^-1): ") + e.what());
    }
    const TorusPoint z3 = detail::f_raw(z2, ann, true);

    if (near_rect_boundary(z3.x, z3.y, ann.r0, ann.r1, ann.r0, ann.r1, seam_tol))
        throw SeamDerivative("dh_jacobian stage 4 (Omega^-1): branch boundary");
    const bool omega_inv_iota_inv = in_I(z3.x, ann) && in_I(z3.y, ann);
    const Mat2 r4 = iota_rotation(omega_inv_iota_inv);

    return r4 * j3 * r2 * j1;
}

bool in_cone(const Vec2& w, ConeId cone, double boundary_tol) {
    const double p = w[0] * w[1];
    return cone == ConeId::C ? p >= -boundary_tol : p <= boundary_tol;
}

}  // namespace ltm
