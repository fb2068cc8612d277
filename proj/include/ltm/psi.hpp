#ifndef LTM_PSI_HPP
#define LTM_PSI_HPP

#include <cmath>

#include "ltm/angles.hpp"
#include "ltm/annulus.hpp"
#include "ltm/errors.hpp"

// The fibrewise coordinate change psi(r,.) : S^1 -> S^1 that straightens the
// second bipolar coordinate on the overlap of the two annuli.  On [0,pi] it
// has three branches, split at theta_inner(r) and theta_outer(r):
//
//   inner   r0 * theta / theta_i(r)
//   sigma   sqrt(r^2 - 4 r cos(theta) + 4)        (distance to the far centre)
//   outer   r1 + (pi - r1)(theta - theta_o(r)) / (pi - theta_o(r))
//
// and it is extended to negative theta as an odd function.  The branch values
// agree on the seams (r0 and r1 respectively) so psi is a homeomorphism of
// the circle; it is smooth only branchwise, which is why every derivative
// below carries a seam guard.

namespace ltm {

inline constexpr double kSeamEps = 1e-12;

enum class PsiBranch { Inner, Sigma, Outer };

template <typename Scalar>
PsiBranch psi_branch(Scalar r, Scalar theta, Scalar r0, Scalar r1) {
    using std::abs;
    const Scalar a = abs(theta);
    if (a <= theta_inner(r, r0, r1)) return PsiBranch::Inner;
    if (a <= theta_outer(r, r0, r1)) return PsiBranch::Sigma;
    return PsiBranch::Outer;
}

template <typename Scalar>
PsiBranch psi_inv_branch(Scalar x, Scalar y, Scalar r0, Scalar r1) {
    using std::abs;
    (void)x;
    const Scalar a = abs(y);
    if (a <= r0) return PsiBranch::Inner;
    if (a <= r1) return PsiBranch::Sigma;
    return PsiBranch::Outer;
}

namespace detail {

template <typename Scalar>
void require_radius(Scalar r, Scalar r0, Scalar r1, const char* who) {
    if (!(r >= r0 && r <= r1))
        throw DomainError(std::string(who) + ": first argument outside [r0,r1]");
}

// Bipolar distance to the far centre, the sigma-branch value of psi.
template <typename Scalar>
Scalar sigma_distance(Scalar r, Scalar theta) {
    using std::cos;
    using std::sqrt;
    return sqrt(r * r - Scalar(4) * r * cos(theta) + Scalar(4));
}

// d/dr of theta_inner / theta_outer (both negative on the admissible band).
template <typename Scalar>
Scalar theta_inner_deriv(Scalar r, Scalar r0, Scalar r1) {
    using std::sin;
    const Scalar h_prime = (r * r + r0 * r0 - Scalar(4)) / (Scalar(4) * r * r);
    return -h_prime / sin(theta_inner(r, r0, r1));
}

template <typename Scalar>
Scalar theta_outer_deriv(Scalar r, Scalar r0, Scalar r1) {
    using std::sin;
    const Scalar h_prime = (r * r + r1 * r1 - Scalar(4)) / (Scalar(4) * r * r);
    return -h_prime / sin(theta_outer(r, r0, r1));
}

template <typename Scalar>
void psi_seam_guard(Scalar r, Scalar theta, Scalar r0, Scalar r1, Scalar tol) {
    using std::abs;
    const Scalar a = abs(theta);
    if (abs(a - theta_inner(r, r0, r1)) <= tol ||
        abs(a - theta_outer(r, r0, r1)) <= tol)
        throw SeamDerivative("psi derivative requested on a branch seam");
}

template <typename Scalar>
void psi_inv_seam_guard(Scalar y, Scalar r0, Scalar r1, Scalar tol) {
    using std::abs;
    const Scalar a = abs(y);
    if (abs(a - r0) <= tol || abs(a - r1) <= tol)
        throw SeamDerivative("psi_inv derivative requested on a branch seam");
}

}  // namespace detail

template <typename Scalar>
Scalar psi(Scalar r, Scalar theta, Scalar r0, Scalar r1) {
    using std::abs;
    detail::require_radius(r, r0, r1, "psi");
    const Scalar a = abs(theta);
    const Scalar sign = theta < Scalar(0) ? Scalar(-1) : Scalar(1);
    const Scalar ti = theta_inner(r, r0, r1);
    if (a <= ti) return sign * r0 * a / ti;
    const Scalar to = theta_outer(r, r0, r1);
    if (a <= to) return sign * detail::sigma_distance(r, a);
    return sign * (r1 + (Scalar(kPi) - r1) * (a - to) / (Scalar(kPi) - to));
}

template <typename Scalar>
Scalar psi_inv(Scalar x, Scalar y, Scalar r0, Scalar r1) {
    using std::abs;
    using std::acos;
    using std::max;
    using std::min;
    detail::require_radius(x, r0, r1, "psi_inv");
    const Scalar a = abs(y);
    const Scalar sign = y < Scalar(0) ? Scalar(-1) : Scalar(1);
    if (a <= r0) return sign * (a / r0) * theta_inner(x, r0, r1);
    if (a <= r1) {
        // cos(theta) = (x^2 + 4 - y^2) / (4x); strictly interior, clamp only
        // to absorb round-off.
        Scalar q = (x * x + Scalar(4) - a * a) / (Scalar(4) * x);
        q = min(Scalar(1), max(Scalar(-1), q));
        return sign * acos(q);
    }
    const Scalar to = theta_outer(x, r0, r1);
    return sign * (to + (a - r1) * (Scalar(kPi) - to) / (Scalar(kPi) - r1));
}

// d(psi)/dr.  Odd in theta.  Throws SeamDerivative within seam_tol of a
// branch seam: psi is only piecewise smooth there.
template <typename Scalar>
Scalar d1_psi(Scalar r, Scalar theta, Scalar r0, Scalar r1,
              Scalar seam_tol = Scalar(kSeamEps)) {
    using std::abs;
    detail::require_radius(r, r0, r1, "d1_psi");
    detail::psi_seam_guard(r, theta, r0, r1, seam_tol);
    const Scalar a = abs(theta);
    const Scalar sign = theta < Scalar(0) ? Scalar(-1) : Scalar(1);
    const Scalar ti = theta_inner(r, r0, r1);
    if (a < ti) {
        const Scalar dti = detail::theta_inner_deriv(r, r0, r1);
        return sign * (-r0 * a * dti / (ti * ti));
    }
    const Scalar to = theta_outer(r, r0, r1);
    if (a < to) {
        using std::cos;
        return sign * (r - Scalar(2) * cos(a)) / detail::sigma_distance(r, a);
    }
    const Scalar dto = detail::theta_outer_deriv(r, r0, r1);
    const Scalar pmto = Scalar(kPi) - to;
    return sign * (Scalar(kPi) - r1) * (Scalar(kPi) - a) * (-dto) / (pmto * pmto);
}

// d(psi)/dtheta.  Even in theta, strictly positive.
template <typename Scalar>
Scalar d2_psi(Scalar r, Scalar theta, Scalar r0, Scalar r1,
              Scalar seam_tol = Scalar(kSeamEps)) {
    using std::abs;
    detail::require_radius(r, r0, r1, "d2_psi");
    detail::psi_seam_guard(r, theta, r0, r1, seam_tol);
    const Scalar a = abs(theta);
    const Scalar ti = theta_inner(r, r0, r1);
    if (a < ti) return r0 / ti;
    const Scalar to = theta_outer(r, r0, r1);
    if (a < to) {
        using std::sin;
        return Scalar(2) * r * sin(a) / detail::sigma_distance(r, a);
    }
    return (Scalar(kPi) - r1) / (Scalar(kPi) - to);
}

// Partials of psi^{-1}, closed forms obtained by inverting each branch.
// They satisfy d1_psi_inv = -d1_psi/d2_psi and d2_psi_inv = 1/d2_psi at the
// pulled-back angle.
template <typename Scalar>
Scalar d1_psi_inv(Scalar x, Scalar y, Scalar r0, Scalar r1,
                  Scalar seam_tol = Scalar(kSeamEps)) {
    using std::abs;
    using std::sqrt;
    detail::require_radius(x, r0, r1, "d1_psi_inv");
    detail::psi_inv_seam_guard(y, r0, r1, seam_tol);
    const Scalar a = abs(y);
    const Scalar sign = y < Scalar(0) ? Scalar(-1) : Scalar(1);
    if (a < r0) return sign * (a / r0) * detail::theta_inner_deriv(x, r0, r1);
    if (a < r1) {
        const Scalar q = (x * x + Scalar(4) - a * a) / (Scalar(4) * x);
        const Scalar s = sqrt(Scalar(1) - q * q);
        return sign * (-(x * x + a * a - Scalar(4)) / (Scalar(4) * x * x * s));
    }
    return sign * detail::theta_outer_deriv(x, r0, r1) * (Scalar(kPi) - a) /
           (Scalar(kPi) - r1);
}

template <typename Scalar>
Scalar d2_psi_inv(Scalar x, Scalar y, Scalar r0, Scalar r1,
                  Scalar seam_tol = Scalar(kSeamEps)) {
    using std::abs;
    using std::sqrt;
    detail::require_radius(x, r0, r1, "d2_psi_inv");
    detail::psi_inv_seam_guard(y, r0, r1, seam_tol);
    const Scalar a = abs(y);
    if (a < r0) return theta_inner(x, r0, r1) / r0;
    if (a < r1) {
        const Scalar q = (x * x + Scalar(4) - a * a) / (Scalar(4) * x);
        const Scalar s = sqrt(Scalar(1) - q * q);
        return a / (Scalar(2) * x * s);
    }
    return (Scalar(kPi) - theta_outer(x, r0, r1)) / (Scalar(kPi) - r1);
}

// AnnulusPair conveniences.

inline double psi(double r, double theta, const AnnulusPair& ann) {
    return psi(r, theta, ann.r0, ann.r1);
}

inline double psi_inv(double x, double y, const AnnulusPair& ann) {
    return psi_inv(x, y, ann.r0, ann.r1);
}

struct DPair {
    double d1;
    double d2;
};

inline DPair d_psi(double r, double theta, const AnnulusPair& ann,
                   double seam_tol = kSeamEps) {
    return {d1_psi(r, theta, ann.r0, ann.r1, seam_tol),
            d2_psi(r, theta, ann.r0, ann.r1, seam_tol)};
}

inline DPair d_psi_inv(double x, double y, const AnnulusPair& ann,
                       double seam_tol = kSeamEps) {
    return {d1_psi_inv(x, y, ann.r0, ann.r1, seam_tol),
            d2_psi_inv(x, y, ann.r0, ann.r1, seam_tol)};
}

}  // namespace ltm

#endif
