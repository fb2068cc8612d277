#include "ltm/twist.hpp"

#include <cmath>

#include "ltm/errors.hpp"

namespace ltm {

namespace {

// Membership tolerance for the "is the input even in A" error check.  Orbits
// of boundary-adjacent points may drift by round-off; branch selection below
// still uses exact closed comparisons because both branch formulas agree on
// the boundary circles (zero twist at r0, a full turn at r1).
constexpr double kMembershipTol = 1e-9;

}  // namespace

PolarPoint twist_lambda(const PolarPoint& p, const AnnulusPair& ann, bool inverse) {
    if (!(p.r >= ann.r0 && p.r <= ann.r1))
        throw DomainError("twist_lambda: radius outside [r0, r1]");
    const double turn = ann.c() * (p.r - ann.r0);
    return PolarPoint(p.r, p.theta + (inverse ? -turn : turn));
}

PlanePoint phi(const PlanePoint& p, const AnnulusPair& ann, bool inverse) {
    const double d = dist_plus(p);
    if (d >= ann.r0 && d <= ann.r1) {
        const double theta = std::atan2(p.v, p.u + 1.0);
        const double turn = ann.c() * (d - ann.r0);
        const double t = wrap_pi(theta + (inverse ? -turn : turn));
        return PlanePoint(d * std::cos(t) - 1.0, d * std::sin(t));
    }
    if (!in_A(p, ann, kMembershipTol)) throw DomainError("phi: point outside A");
    return p;
}

PlanePoint gamma(const PlanePoint& p, const AnnulusPair& ann, bool inverse) {
    const double d = dist_minus(p);
    if (d >= ann.r0 && d <= ann.r1) {
        const double theta = std::atan2(-p.v, 1.0 - p.u);
        // Gamma conjugates the inverse twist.
        const double turn = ann.c() * (d - ann.r0);
        const double t = wrap_pi(theta + (inverse ? turn : -turn));
        return PlanePoint(1.0 - d * std::cos(t), -d * std::sin(t));
    }
    if (!in_A(p, ann, kMembershipTol)) throw DomainError("gamma: point outside A");
    return p;
}

PlanePoint theta_map(const PlanePoint& p, const AnnulusPair& ann, bool inverse) {
    if (inverse) return phi(gamma(p, ann, true), ann, true);
    return gamma(phi(p, ann), ann);
}

PlanePoint apply_map(MapId map, const PlanePoint& p, const AnnulusPair& ann) {
    switch (map) {
        case MapId::Phi: return phi(p, ann);
        case MapId::PhiInv: return phi(p, ann, true);
        case MapId::Gamma: return gamma(p, ann);
        case MapId::GammaInv: return gamma(p, ann, true);
        case MapId::Theta: return theta_map(p, ann);
        case MapId::ThetaInv: return theta_map(p, ann, true);
        case MapId::Lambda:
        case MapId::LambdaInv:
            throw DomainError("apply_map: Lambda acts on polar, not plane points");
    }
    throw DomainError("apply_map: unknown map id");
}

std::vector<PlanePoint> iterate(const PlanePoint& p, const AnnulusPair& ann,
                                long n, MapId map) {
    if (n < 0) throw DomainError("iterate: negative iteration count");
    std::vector<PlanePoint> orbit;
    orbit.reserve(static_cast<size_t>(n) + 1);
    orbit.push_back(p);
    for (long i = 0; i < n; ++i) orbit.push_back(apply_map(map, orbit.back(), ann));
    return orbit;
}

}  // namespace ltm
