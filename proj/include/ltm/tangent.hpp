#ifndef LTM_TANGENT_HPP
#define LTM_TANGENT_HPP

#include "ltm/annulus.hpp"
#include "ltm/psi.hpp"
#include "ltm/types.hpp"

// Jacobians of the torus maps and the invariant cone pair
//   C = {b1 b2 >= 0},  CTilde = {b1 b2 <= 0}.
// DF^{+-1} is lower triangular with unit (1,1) entry,
//   D1f_± = D1psi(x, ytilde_±) + D2psi(x, ytilde_±) [D1psi^{-1}(x,y) ± c],
//   D2f_± = D2psi(x, ytilde_±) D2psi^{-1}(x,y),
// where ytilde_± = psi^{-1}(x,y) ± c (x - r0), and DH chains four factors
// through the orbit segment z -> F z -> Omega F z -> F^{-1} Omega F z.

namespace ltm {

// Derivative of the quarter rotation (a constant matrix).
Mat2 iota_rotation(bool inverse = false);

// Jacobian of F^{+-1} at z.  Identity off I x S^1.  Throws SeamDerivative
// within seam_tol of any seam: x on an annulus edge, |y| on a psi^{-1} seam,
// or the pushed angle on a psi seam.
Mat2 df_jacobian(const TorusPoint& z, const AnnulusPair& ann,
                 bool inverse = false, double seam_tol = kSeamEps);

// Jacobian of H at z, the ordered product of the four stage Jacobians.
// Throws SeamDerivative naming the stage that sits on a seam.
Mat2 dh_jacobian(const TorusPoint& z, const AnnulusPair& ann,
                 double seam_tol = kSeamEps);

// Sign test b1 b2 >= 0 (C) or <= 0 (CTilde); vectors within boundary_tol of
// the axes belong to both cones.
bool in_cone(const Vec2& w, ConeId cone, double boundary_tol = 0.0);

}  // namespace ltm

#endif
