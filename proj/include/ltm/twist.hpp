#ifndef LTM_TWIST_HPP
#define LTM_TWIST_HPP

#include <vector>

#include "ltm/annulus.hpp"
#include "ltm/types.hpp"

namespace ltm {

// Twist on the reference annulus L: (r, theta) -> (r, theta +- c (r - r0)).
// The radius is never touched.  Throws DomainError for r outside [r0, r1].
PolarPoint twist_lambda(const PolarPoint& p, const AnnulusPair& ann,
                        bool inverse = false);

// Planar twists Phi (on A+) and Gamma (on A-, conjugating the inverse
// twist), identity on the rest of A.  Throws DomainError off A.
PlanePoint phi(const PlanePoint& p, const AnnulusPair& ann, bool inverse = false);
PlanePoint gamma(const PlanePoint& p, const AnnulusPair& ann, bool inverse = false);

// The linked-twist map Theta = Gamma o Phi (inverse: Phi^-1 o Gamma^-1).
PlanePoint theta_map(const PlanePoint& p, const AnnulusPair& ann,
                     bool inverse = false);

// Dispatch for the planar maps.  Lambda tags are rejected: the twist acts on
// polar coordinates, not plane points.
PlanePoint apply_map(MapId map, const PlanePoint& p, const AnnulusPair& ann);

// Orbit segment [p, f(p), ..., f^n(p)] of length n+1.
std::vector<PlanePoint> iterate(const PlanePoint& p, const AnnulusPair& ann,
                                long n, MapId map);

}  // namespace ltm

#endif
