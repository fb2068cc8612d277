#ifndef LTM_CERTIFY_HPP
#define LTM_CERTIFY_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ltm/annulus.hpp"
#include "ltm/types.hpp"

// Numerical certification of the derivative-range claims behind the
// DH-invariance of the cone C, of the overlap-angle condition (W), and the
// (r0, r1) parameter sweep.  Certification is sampling plus one level of
// local refinement, not interval arithmetic; reports carry the observed
// slack against each claim.

namespace ltm {

enum class BoundQuantity {
    D1Psi,
    D2Psi,
    D1PsiInv,
    D2PsiInv,
    D1FPlus,
    D1FMinusNeg,  // -D1f_-, claimed nonnegative
    D2F,          // both D2f_+ and D2f_-, claimed nonnegative
};

const char* bound_quantity_name(BoundQuantity q);

struct RegionRange {
    std::string region;
    double claimed_lo;
    double claimed_hi;
    bool strict_hi;
    double observed_lo;
    double observed_hi;
    bool within;
};

struct BoundReport {
    std::string quantity;
    double claimed_lo;
    double claimed_hi;  // +infinity for one-sided claims
    bool strict_hi;
    double observed_lo;
    double observed_hi;
    TorusPoint argmin;
    TorusPoint argmax;
    int grid_n;
    bool refined;
    bool within_claim;
    std::optional<TorusPoint> witness;       // violating point, if any
    std::vector<RegionRange> region_ranges;  // populated for D1Psi
};

// Evaluate the quantity on a grid_n x grid_n grid of its natural domain
// (domain edges avoided by half-cell offsets), refine one level at 4x
// density in cells within 1% of the observed extrema, and compare against
// the claim pinned for the default pair.  grid_n must be >= 16.
BoundReport certify_bound(BoundQuantity q, const AnnulusPair& ann, int grid_n);

std::vector<BoundReport> certify_all_bounds(const AnnulusPair& ann, int grid_n);

// cot of the angle at a Sigma point opposite the segment joining the two
// centres: cos(alpha) = (x^2 + y^2 - 4) / (2 x y) with the bipolar radii.
double cot_alpha(const TorusPoint& z_sigma, const AnnulusPair& ann);

enum class WThresholdMode {
    FixedPaper,  // pi / (sqrt(7) - 2)
    HalfSlope,   // c / 2 = pi / (r1 - r0)
};

struct ConditionWReport {
    double sup_cot;
    double threshold;
    bool holds;
    TorusPoint argmax;
    double alpha_min;
    double alpha_max;
    int grid_n;
};

// Maximise cot(alpha) over an endpoint-inclusive grid on I x I.  The result
// must sit at the corner (r1, r1); see the sweep for the monotonicity check.
ConditionWReport check_condition_w(const AnnulusPair& ann, int grid_n,
                                   WThresholdMode mode = WThresholdMode::FixedPaper);

struct SweepCell {
    double r0;
    double r1;
    bool admissible;
    double min_d1f_plus;
    double max_d1f_minus;
    double sup_cot_alpha;
    bool w_condition_holds;
    bool cone_condition_holds;
};

// Scan cell centres of the square [2, sqrt(7)]^2; cells with r1 <= r0 are
// marked inadmissible and skipped.  Per admissible cell: condition (W) and
// the cone sign conditions min D1f_+ >= 0, max D1f_- <= 0 over a grid_n^2
// sample of [r0,r1] x [0,pi].
std::vector<SweepCell> parameter_sweep(int cells, int grid_n, int threads = 1,
                                       WThresholdMode mode = WThresholdMode::FixedPaper);

}  // namespace ltm

#endif
