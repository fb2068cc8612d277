#ifndef LTM_BIPOLAR_HPP
#define LTM_BIPOLAR_HPP

#include "ltm/annulus.hpp"
#include "ltm/psi.hpp"
#include "ltm/types.hpp"

// Conversion between the plane manifold A and its torus picture.  A point of
// A+ maps to (r, psi(r, theta)) through the M+ chart; a point of A- \ Sigma-
// maps through M- followed by the quarter rotation iota; on Sigma- the extra
// sign flip puts the image in I x (-I).  The union of images is the set R,
// on which the torus dynamics lives.

namespace ltm {

// Quarter rotation iota(x,y) = (-y, x) and its inverse.
inline TorusPoint iota(const TorusPoint& z) { return TorusPoint(-z.y, z.x); }
inline TorusPoint iota_inv(const TorusPoint& z) { return TorusPoint(z.y, -z.x); }

inline bool in_I(double t, const AnnulusPair& ann, double tol = 0.0) {
    return t >= ann.r0 - tol && t <= ann.r1 + tol;
}

inline bool in_neg_I(double t, const AnnulusPair& ann, double tol = 0.0) {
    return in_I(-t, ann, tol);
}

// Strict interior of -I shrunk by tol; used to carve the excluded arm of R.
inline bool strictly_in_neg_I(double t, const AnnulusPair& ann, double tol = 0.0) {
    return t > -ann.r1 + tol && t < -ann.r0 - tol;
}

// R = (I x S^1) u ((S^1 \ int(-I)) x I): the torus image of A where Sigma-
// is represented in I x (-I).
inline bool in_R(const TorusPoint& z, const AnnulusPair& ann, double tol = 0.0) {
    return in_I(z.x, ann, tol) ||
           (in_I(z.y, ann, tol) && !strictly_in_neg_I(z.x, ann, tol));
}

// R' = (I x (S^1 \ int(-I))) u (S^1 x I): Sigma- represented in (-I) x I.
inline bool in_R_prime(const TorusPoint& z, const AnnulusPair& ann, double tol = 0.0) {
    return in_I(z.y, ann, tol) ||
           (in_I(z.x, ann, tol) && !strictly_in_neg_I(z.y, ann, tol));
}

// S = (I x I) u (I x -I), the torus image of the intersection region Sigma.
inline bool in_S(const TorusPoint& z, const AnnulusPair& ann, double tol = 0.0) {
    return in_I(z.x, ann, tol) && (in_I(z.y, ann, tol) || in_neg_I(z.y, ann, tol));
}

// Switch maps Omega^{+-1}: iota^{+-1} on I x (-+I), iota^{-+1} otherwise
// (transcribed literally; the pair composes to the identity along the orbits
// of H even though not on all of the torus).
TorusPoint omega(const TorusPoint& z, const AnnulusPair& ann, bool inverse = false);

// Plane -> torus through the appropriate chart; throws DomainError off A.
TorusPoint to_torus(const PlanePoint& p, const AnnulusPair& ann);

// Torus -> plane; picks the A+ chart when x lies in I, the A- chart
// otherwise.  Throws DomainError off R.
PlanePoint from_torus(const TorusPoint& z, const AnnulusPair& ann);

}  // namespace ltm

#endif
