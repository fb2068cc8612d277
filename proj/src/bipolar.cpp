#include "ltm/bipolar.hpp"

#include <algorithm>
#include <cmath>

#include "ltm/errors.hpp"

namespace ltm {

namespace {

constexpr double kChartTol = 1e-9;

double clamp_to_band(double d, const AnnulusPair& ann) {
    return std::min(ann.r1, std::max(ann.r0, d));
}

}  // namespace

TorusPoint omega(const TorusPoint& z, const AnnulusPair& ann, bool inverse) {
    if (inverse) {
        if (in_I(z.x, ann) && in_I(z.y, ann)) return iota_inv(z);
        return iota(z);
    }
    if (in_I(z.x, ann) && in_neg_I(z.y, ann)) return iota(z);
    return iota_inv(z);
}

TorusPoint to_torus(const PlanePoint& p, const AnnulusPair& ann) {
    const double dp = dist_plus(p);
    if (in_radial_band(dp, ann, kChartTol)) {
        const double r = clamp_to_band(dp, ann);
        const double theta = std::atan2(p.v, p.u + 1.0);
        return TorusPoint(r, psi(r, theta, ann));
    }
    const double dm = dist_minus(p);
    if (in_radial_band(dm, ann, kChartTol)) {
        const double r = clamp_to_band(dm, ann);
        const double theta = std::atan2(-p.v, 1.0 - p.u);
        // iota o Psi o M-^{-1}
        return TorusPoint(-psi(r, theta, ann), r);
    }
    throw DomainError("to_torus: point outside A");
}

PlanePoint from_torus(const TorusPoint& z, const AnnulusPair& ann) {
    if (!in_R(z, ann, kChartTol)) throw DomainError("from_torus: point outside R");
    if (in_I(z.x, ann, kChartTol)) {
        const double r = clamp_to_band(z.x, ann);
        return m_plus(PolarPoint(r, psi_inv(r, z.y, ann)));
    }
    const double r = clamp_to_band(z.y, ann);
    return m_minus(PolarPoint(r, psi_inv(r, wrap_pi(-z.x), ann)));
}

}  // namespace ltm
