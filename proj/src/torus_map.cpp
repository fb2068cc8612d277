#include "ltm/torus_map.hpp"

#include <cmath>
#include <string>

#include "ltm/errors.hpp"
#include "ltm/psi.hpp"

namespace ltm {

namespace {

constexpr double kMembershipTol = 1e-9;

}  // namespace

namespace detail {

TorusPoint f_raw(const TorusPoint& z, const AnnulusPair& ann, bool inverse) {
    if (!(z.x >= ann.r0 && z.x <= ann.r1)) return z;
    const double turn = ann.c() * (z.x - ann.r0);
    const double angle = wrap_pi(psi_inv(z.x, z.y, ann) + (inverse ? -turn : turn));
    return TorusPoint(z.x, psi(z.x, angle, ann));
}

}  // namespace detail

TorusPoint f_map(const TorusPoint& z, const AnnulusPair& ann, bool inverse) {
    if (!in_R(z, ann, kMembershipTol)) throw DomainError("f_map: point outside R");
    return detail::f_raw(z, ann, inverse);
}

TorusPoint g_map(const TorusPoint& z, const AnnulusPair& ann) {
    if (!in_R_prime(z, ann, kMembershipTol))
        throw DomainError("g_map: point outside R'");
    if (!in_I(z.y, ann)) return z;
    return iota(detail::f_raw(iota_inv(z), ann, /*inverse=*/true));
}

TorusPoint h_map(const TorusPoint& z, const AnnulusPair& ann, bool inverse) {
    if (!in_R(z, ann, kMembershipTol)) throw DomainError("h_map: point outside R");
    if (inverse) {
        // H^{-1} = F^{-1} o Omega^{-1} o F o Omega
        const TorusPoint z1 = omega(z, ann);
        const TorusPoint z2 = detail::f_raw(z1, ann, false);
        const TorusPoint z3 = omega(z2, ann, /*inverse=*/true);
        return detail::f_raw(z3, ann, true);
    }
    // H = Omega^{-1} o F^{-1} o Omega o F
    const TorusPoint z1 = detail::f_raw(z, ann, false);
    const TorusPoint z2 = omega(z1, ann);
    const TorusPoint z3 = detail::f_raw(z2, ann, true);
    return omega(z3, ann, /*inverse=*/true);
}

ReturnResult return_map_S(const TorusPoint& z, const AnnulusPair& ann,
                          long max_iters, bool inverse) {
    if (!in_S(z, ann, kMembershipTol))
        throw DomainError("return_map_S: point outside S");
    TorusPoint w = z;
    for (long k = 1; k <= max_iters; ++k) {
        w = h_map(w, ann, inverse);
        if (in_S(w, ann)) return {w, k};
    }
    throw NoReturnWithinBudget("return_map_S: no return within " +
                               std::to_string(max_iters) + " iterations");
}

namespace {

// Fiber representative of t (under z -> +-z + 2 pi k) nearest to L.
struct Candidate {
    LatticePoint point;
    double dist;
};

Candidate nearest_rep(double tx, double ty, const LatticePoint& L) {
    const double du = circle_delta(wrap_pi(L.U), tx);
    const double dv = circle_delta(wrap_pi(L.V), ty);
    Candidate c;
    c.point = {L.U + du, L.V + dv};
    c.dist = std::max(std::abs(du), std::abs(dv));
    return c;
}

}  // namespace

std::vector<LatticePoint> lift_curve(std::span<const TorusPoint> points,
                                     const LatticePoint& base, double max_step) {
    std::vector<LatticePoint> lift;
    lift.reserve(points.size());
    LatticePoint prev = base;
    for (size_t i = 0; i < points.size(); ++i) {
        const Candidate plus = nearest_rep(points[i].x, points[i].y, prev);
        const Candidate minus =
            nearest_rep(wrap_pi(-points[i].x), wrap_pi(-points[i].y), prev);
        const Candidate& best = plus.dist <= minus.dist ? plus : minus;
        if (best.dist >= max_step)
            throw LiftAmbiguity("lift_curve: step exceeds threshold at index " +
                                std::to_string(i));
        if (plus.dist == minus.dist)
            throw LiftAmbiguity("lift_curve: equidistant fiber sheets at index " +
                                std::to_string(i));
        prev = best.point;
        lift.push_back(prev);
    }
    return lift;
}

TorusPoint project_lattice(const LatticePoint& L, const AnnulusPair& ann) {
    const TorusPoint t(L.U, L.V);  // constructor wraps
    if (in_R(t, ann, kMembershipTol)) return t;
    const TorusPoint folded(-t.x, -t.y);
    if (in_R(folded, ann, kMembershipTol)) return folded;
    throw DomainError("project_lattice: point projects outside R1");
}

}  // namespace ltm
