#ifndef LTM_TORUS_MAP_HPP
#define LTM_TORUS_MAP_HPP

#include <span>
#include <vector>

#include "ltm/bipolar.hpp"
#include "ltm/types.hpp"

// The torus representations of the planar dynamics:
//   F = Psi o Lambda o Psi^{-1} on I x S^1, identity elsewhere;
//   G = iota o F^{-1} o iota^{-1} on S^1 x I, identity elsewhere;
//   H = Omega^{-1} o F^{-1} o Omega o F,
// together with the first-return map to S and lifts to the covering lattice.

namespace ltm {

namespace detail {

// F without the R-membership check; the raw branch formula on all of T^2.
// h_map composes it through intermediate points that leave R.
TorusPoint f_raw(const TorusPoint& z, const AnnulusPair& ann, bool inverse);

}  // namespace detail

TorusPoint f_map(const TorusPoint& z, const AnnulusPair& ann, bool inverse = false);
TorusPoint g_map(const TorusPoint& z, const AnnulusPair& ann);
TorusPoint h_map(const TorusPoint& z, const AnnulusPair& ann, bool inverse = false);

struct ReturnResult {
    TorusPoint point;
    long time;  // first-return time, >= 1
};

// First return of H to S.  Throws NoReturnWithinBudget after max_iters.
ReturnResult return_map_S(const TorusPoint& z, const AnnulusPair& ann,
                          long max_iters = 1'000'000, bool inverse = false);

// Unwrapped point of the covering lattice R2 c R^2.
struct LatticePoint {
    double U = 0.0;
    double V = 0.0;
};

// Continuous lift of a torus polyline through p = p' o p'': consecutive
// candidates are the fiber representatives +-z + 2 pi k nearest the previous
// lifted point.  Steps must stay below max_step or LiftAmbiguity is thrown.
std::vector<LatticePoint> lift_curve(std::span<const TorusPoint> points,
                                     const LatticePoint& base,
                                     double max_step = kPi / 2.0);

// Covering projection p: wrap both coordinates, then fold by -id if the
// wrapped point lies in -R rather than R.
TorusPoint project_lattice(const LatticePoint& L, const AnnulusPair& ann);

}  // namespace ltm

#endif
