#ifndef LTM_TYPES_HPP
#define LTM_TYPES_HPP

#include <Eigen/Dense>

#include "ltm/angles.hpp"

namespace ltm {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;

// Cartesian point (u,v) in the plane.
struct PlanePoint {
    double u = 0.0;
    double v = 0.0;

    PlanePoint() = default;
    PlanePoint(double u_, double v_) : u(u_), v(v_) {}

    Vec2 vec() const { return Vec2(u, v); }
};

// Polar point (r,theta); theta is stored wrapped to (-pi, pi].
struct PolarPoint {
    double r = 0.0;
    double theta = 0.0;

    PolarPoint() = default;
    PolarPoint(double r_, double theta_) : r(r_), theta(wrap_pi(theta_)) {}
};

// Point of the torus S^1 x S^1; both coordinates stored wrapped to (-pi, pi].
struct TorusPoint {
    double x = 0.0;
    double y = 0.0;

    TorusPoint() = default;
    TorusPoint(double x_, double y_) : x(wrap_pi(x_)), y(wrap_pi(y_)) {}

    Vec2 vec() const { return Vec2(x, y); }
};

// Wrap-aware L-infinity distance between two torus points.
inline double torus_dist(const TorusPoint& a, const TorusPoint& b) {
    return std::max(circle_dist(a.x, b.x), circle_dist(a.y, b.y));
}

// Partition of the plane induced by the two annuli.
enum class Region {
    APlusInner,  // in A+ only, inside the hole of A-
    SigmaPlus,   // overlap component with v > 0
    SigmaMinus,  // overlap component with v < 0
    APlusOuter,  // in A+ only, outside A-
    AMinusOnly,  // in A- only
    Outside,
};

enum class MapId {
    Lambda,
    LambdaInv,
    Phi,
    PhiInv,
    Gamma,
    GammaInv,
    Theta,
    ThetaInv,
};

inline MapId inverse_of(MapId m) {
    switch (m) {
        case MapId::Lambda: return MapId::LambdaInv;
        case MapId::LambdaInv: return MapId::Lambda;
        case MapId::Phi: return MapId::PhiInv;
        case MapId::PhiInv: return MapId::Phi;
        case MapId::Gamma: return MapId::GammaInv;
        case MapId::GammaInv: return MapId::Gamma;
        case MapId::Theta: return MapId::ThetaInv;
        case MapId::ThetaInv: return MapId::Theta;
    }
    return m;
}

// Tangent cones: C = {b1*b2 >= 0}, CTilde = {b1*b2 <= 0}.
enum class ConeId { C, CTilde };

}  // namespace ltm

#endif
