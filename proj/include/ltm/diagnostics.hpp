#ifndef LTM_DIAGNOSTICS_HPP
#define LTM_DIAGNOSTICS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ltm/annulus.hpp"
#include "ltm/types.hpp"

// Desk-scale numerical evidence for the ergodic claims: Lyapunov exponents
// from QR-renormalised Jacobian products, cone alignment of transported
// tangent vectors, material-line stretching, manifold intersection on the
// covering lattice, and a coarse-grained mixing-decay measure.

namespace ltm {

enum class Frame { Plane, Torus };

struct LyapunovEstimate {
    double lambda1;
    double lambda2;
    long steps;
    long burn_in;
    std::uint64_t seed;
};

// QR-renormalised product of Jacobians along one orbit: finite-difference
// D(Theta) in the plane frame, analytic DH in the torus frame.  The starting
// point is drawn uniformly in A from the seed, rejecting seam-adjacent
// starts.  Throws SeamEncounter / NonFiniteAccumulation.
LyapunovEstimate lyapunov(std::uint64_t seed, long steps, long burn_in,
                          const AnnulusPair& ann, Frame frame);

struct AlignmentOptions {
    ConeId cone = ConeId::C;      // C with forward transport, CTilde backward
    bool backward = false;        // transport by DH^{-1} along the backward orbit
    bool start_in_cone = false;   // draw the initial vector inside the cone
    double boundary_tol = 1e-14;  // |b1 b2| below this counts as boundary
};

// Fraction of post-burn-in iterates whose transported vector lies in the
// cone; the alignment claim is fraction == 1.
double alignment_check(std::uint64_t seed, long steps, long burn_in,
                       const AnnulusPair& ann, const AlignmentOptions& opts = {});

struct CurveRecord {
    Frame frame = Frame::Torus;
    std::vector<Vec2> points;                 // ordered polyline
    std::vector<double> lengths_per_iterate;  // [0] is the seed length
    double refinement_tol = 1e-3;
};

// Straight segment densified to the given tolerance.  Torus segments are
// interpolated toward the nearer fiber representative and folded back into
// the fundamental representation of R.
CurveRecord make_segment(Frame frame, const Vec2& a, const Vec2& b,
                         double refinement_tol, const AnnulusPair& ann);

// Push a polyline by Theta (plane frame) or H (torus frame) for the given
// number of iterates, bisecting preimage segments whenever consecutive
// images separate beyond refinement_tol.  Throws PointBudgetExceeded.
CurveRecord stretch_curve(const CurveRecord& initial, int iters,
                          const AnnulusPair& ann, bool inverse = false,
                          long point_budget = 10'000'000);

struct IntersectionResult {
    bool intersects;
    std::optional<TorusPoint> witness;
    int m;
    int n;
    bool u_tangents_in_cone;  // grown u-curve tangents in C
    bool s_tangents_in_cone;  // grown s-curve tangents in CTilde
    std::size_t u_points;
    std::size_t s_points;
};

struct IntersectionOptions {
    double segment_half_length = 1e-4;
    double refinement_tol = 1e-3;
    long point_budget = 10'000'000;
    int direction_burn_in = 40;
};

// Grow short segments along the numerically estimated unstable / stable
// directions at two seeded points, push by H^m and H^{-n}, and test the two
// polylines for intersection (the torus test is the quotient of the lifted
// R2 test over all deck transformations).
IntersectionResult intersection_experiment(std::uint64_t seed_u,
                                           std::uint64_t seed_s, int m, int n,
                                           const AnnulusPair& ann,
                                           const IntersectionOptions& opts = {});

// Variance of cell-averaged +-1 half-plane indicators transported by Theta,
// reported after each iterate (index 0 is the initial field).  With
// identity_control the transport is switched off.
std::vector<double> mixing_decay(int cells, int iters, long samples,
                                 std::uint64_t seed, const AnnulusPair& ann,
                                 bool identity_control = false);

// Uniform sample of A by rejection, optionally keeping a margin from the
// four boundary circles (the derivative seams).
PlanePoint sample_plane_point(class CounterRng& rng, const AnnulusPair& ann,
                              double seam_margin = 0.0);

}  // namespace ltm

#endif
