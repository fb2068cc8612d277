#ifndef LTM_ANGLES_HPP
#define LTM_ANGLES_HPP

#include <cmath>
#include <numbers>

namespace ltm {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Wrap onto the circle (-pi, pi].  The identified endpoint is always emitted
// as +pi, never -pi.
template <typename Scalar>
Scalar wrap_pi(Scalar t) {
    using std::remainder;
    Scalar w = remainder(t, Scalar(kTwoPi));  // in [-pi, pi]
    if (w <= Scalar(-kPi)) w = Scalar(kPi);
    return w;
}

// Shortest signed displacement from a to b on the circle.
template <typename Scalar>
Scalar circle_delta(Scalar a, Scalar b) {
    return wrap_pi(b - a);
}

// Distance on the circle.
template <typename Scalar>
Scalar circle_dist(Scalar a, Scalar b) {
    using std::abs;
    return abs(circle_delta(a, b));
}

}  // namespace ltm

#endif
