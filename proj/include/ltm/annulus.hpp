#ifndef LTM_ANNULUS_HPP
#define LTM_ANNULUS_HPP

#include <cmath>
#include <string>

#include "ltm/angles.hpp"
#include "ltm/errors.hpp"
#include "ltm/types.hpp"

namespace ltm {

// The two annuli A+/A- share radii [r0,r1] and are centred at (-1,0) and
// (1,0).  Admissibility means they intersect in two disjoint lens-shaped
// regions: 1 < r0 < r1 < min(pi, r0 + 2).
struct AnnulusPair {
    double r0;
    double r1;

    AnnulusPair() : r0(2.0), r1(std::sqrt(7.0)) {}

    AnnulusPair(double r0_, double r1_) : r0(r0_), r1(r1_) {
        if (!admissible(r0, r1))
            throw DomainError("annulus pair (" + std::to_string(r0) + ", " +
                              std::to_string(r1) +
                              ") does not overlap in two disjoint regions");
    }

    // Twist slope, always recomputed from the radii.
    double c() const { return kTwoPi / (r1 - r0); }

    double width() const { return r1 - r0; }

    static bool admissible(double r0, double r1) {
        return std::isfinite(r0) && std::isfinite(r1) && r0 > 1.0 && r0 < r1 &&
               r1 < kPi && r1 < r0 + 2.0;
    }
};

// Charts M±(r,theta) = ±(r cos(theta) - 1, r sin(theta)).
inline PlanePoint m_plus(const PolarPoint& p) {
    return PlanePoint(p.r * std::cos(p.theta) - 1.0, p.r * std::sin(p.theta));
}

inline PlanePoint m_minus(const PolarPoint& p) {
    return PlanePoint(1.0 - p.r * std::cos(p.theta), -p.r * std::sin(p.theta));
}

// Distances to the two centres; x(u,v) and |y(u,v)| of the two-centre
// bipolar coordinates.
inline double dist_plus(const PlanePoint& p) {
    return std::hypot(p.u + 1.0, p.v);
}

inline double dist_minus(const PlanePoint& p) {
    return std::hypot(p.u - 1.0, p.v);
}

inline PolarPoint m_plus_inv(const PlanePoint& p) {
    const double r = dist_plus(p);
    if (r == 0.0) throw CentreSingularity("m_plus_inv at centre (-1,0)");
    return PolarPoint(r, std::atan2(p.v, p.u + 1.0));
}

inline PolarPoint m_minus_inv(const PlanePoint& p) {
    const double r = dist_minus(p);
    if (r == 0.0) throw CentreSingularity("m_minus_inv at centre (1,0)");
    return PolarPoint(r, std::atan2(-p.v, 1.0 - p.u));
}

inline bool in_radial_band(double d, const AnnulusPair& ann, double tol = 0.0) {
    return d >= ann.r0 - tol && d <= ann.r1 + tol;
}

// Membership in A = A+ u A-.
inline bool in_A(const PlanePoint& p, const AnnulusPair& ann, double tol = 0.0) {
    return in_radial_band(dist_plus(p), ann, tol) ||
           in_radial_band(dist_minus(p), ann, tol);
}

// Classify a plane point against the partition induced by the two annuli.
// The overlap Sigma is taken closed, so the circles d- in {r0,r1} restricted
// to A+ classify into Sigma (the psi branches agree there).
inline Region classify(const PlanePoint& p, const AnnulusPair& ann) {
    const bool plus = in_radial_band(dist_plus(p), ann);
    const bool minus = in_radial_band(dist_minus(p), ann);
    if (plus && minus) return p.v > 0.0 ? Region::SigmaPlus : Region::SigmaMinus;
    if (plus) return dist_minus(p) < ann.r0 ? Region::APlusInner : Region::APlusOuter;
    if (minus) return Region::AMinusOnly;
    return Region::Outside;
}

// Angular boundaries of the three regions of A+ on the circle of radius r
// about (-1,0): law of cosines with centre distance 2.
//   theta_i(r) = acos((r^2 + 4 - r0^2) / (4r)),
//   theta_o(r) = acos((r^2 + 4 - r1^2) / (4r)).
// For the default pair these reduce to acos(r/4) and acos((r^2-3)/(4r)).
template <typename Scalar>
Scalar theta_inner(Scalar r, Scalar r0, Scalar r1) {
    using std::acos;
    const Scalar q = (r * r + Scalar(4) - r0 * r0) / (Scalar(4) * r);
    if (!(q >= Scalar(-1) && q <= Scalar(1)))
        throw DomainError("theta_inner: acos argument outside [-1,1]");
    (void)r1;
    return acos(q);
}

template <typename Scalar>
Scalar theta_outer(Scalar r, Scalar r0, Scalar r1) {
    using std::acos;
    const Scalar q = (r * r + Scalar(4) - r1 * r1) / (Scalar(4) * r);
    if (!(q >= Scalar(-1) && q <= Scalar(1)))
        throw DomainError("theta_outer: acos argument outside [-1,1]");
    (void)r0;
    return acos(q);
}

struct RegionBoundaries {
    double theta_i;
    double theta_o;
};

inline RegionBoundaries region_boundaries(double r, const AnnulusPair& ann) {
    return {theta_inner(r, ann.r0, ann.r1), theta_outer(r, ann.r0, ann.r1)};
}

}  // namespace ltm

#endif
