#include "ltm/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ltm/bipolar.hpp"
#include "ltm/errors.hpp"
#include "ltm/parallel.hpp"
#include "ltm/psi.hpp"

namespace ltm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

const double kSqrt7 = std::sqrt(7.0);

struct Claim {
    double lo;
    double hi;
    bool strict_hi;
};

Claim claim_for(BoundQuantity q) {
    switch (q) {
        case BoundQuantity::D1Psi: return {0.0, 7.0 / 6.0, true};
        case BoundQuantity::D2Psi: return {0.25, kSqrt7, false};
        case BoundQuantity::D1PsiInv: return {-9.0 / 11.0, 0.0, false};
        case BoundQuantity::D2PsiInv: return {kSqrt7 / 7.0, 4.0, false};
        case BoundQuantity::D1FPlus: return {0.0, kInf, false};
        case BoundQuantity::D1FMinusNeg: return {0.0, kInf, false};
        case BoundQuantity::D2F: return {0.0, kInf, false};
    }
    throw std::invalid_argument("claim_for: unknown quantity");
}

// Per-region claims of the D1psi calculation, stated for theta >= 0.
struct RegionClaim {
    const char* name;
    double lo;
    double hi;
    bool strict_hi;
};

const std::array<RegionClaim, 3>& d1psi_region_claims() {
    static const std::array<RegionClaim, 3> claims = {{
        {"inner", 0.0, 72.0 * kPi / (150.0 * std::sqrt(2.0)), true},
        {"sigma", kSqrt7 / 7.0, 5.0 * kSqrt7 / 14.0, false},
        {"outer", 0.0, 5.0 * std::sqrt(3.0) / 9.0, true},
    }};
    return claims;
}

// D1f_+-, D2f_+- at one point of I x S^1, sharing the psi^{-1} pullback.
struct DfParts {
    double d1f_plus;
    double d1f_minus;
    double d2f_plus;
    double d2f_minus;
};

DfParts df_parts(double x, double y, const AnnulusPair& ann, double seam_tol) {
    const double c = ann.c();
    const double d1i = d1_psi_inv(x, y, ann.r0, ann.r1, seam_tol);
    const double d2i = d2_psi_inv(x, y, ann.r0, ann.r1, seam_tol);
    const double base = psi_inv(x, y, ann);
    const double turn = c * (x - ann.r0);
    DfParts out;
    const double yp = wrap_pi(base + turn);
    const double ym = wrap_pi(base - turn);
    const double d1p = d1_psi(x, yp, ann.r0, ann.r1, seam_tol);
    const double d2p = d2_psi(x, yp, ann.r0, ann.r1, seam_tol);
    const double d1m = d1_psi(x, ym, ann.r0, ann.r1, seam_tol);
    const double d2m = d2_psi(x, ym, ann.r0, ann.r1, seam_tol);
    out.d1f_plus = d1p + d2p * (d1i + c);
    out.d1f_minus = d1m + d2m * (d1i - c);
    out.d2f_plus = d2p * d2i;
    out.d2f_minus = d2m * d2i;
    return out;
}

// Evaluate a bound quantity at (a, b) of its natural domain; one or two
// values (D2F covers both signs).
int quantity_values(BoundQuantity q, double a, double b, const AnnulusPair& ann,
                    double out[2]) {
    switch (q) {
        case BoundQuantity::D1Psi:
            out[0] = d1_psi(a, b, ann.r0, ann.r1);
            return 1;
        case BoundQuantity::D2Psi:
            out[0] = d2_psi(a, b, ann.r0, ann.r1);
            return 1;
        case BoundQuantity::D1PsiInv:
            out[0] = d1_psi_inv(a, b, ann.r0, ann.r1);
            return 1;
        case BoundQuantity::D2PsiInv:
            out[0] = d2_psi_inv(a, b, ann.r0, ann.r1);
            return 1;
        case BoundQuantity::D1FPlus:
            out[0] = df_parts(a, b, ann, kSeamEps).d1f_plus;
            return 1;
        case BoundQuantity::D1FMinusNeg:
            out[0] = -df_parts(a, b, ann, kSeamEps).d1f_minus;
            return 1;
        case BoundQuantity::D2F: {
            const DfParts p = df_parts(a, b, ann, kSeamEps);
            out[0] = p.d2f_plus;
            out[1] = p.d2f_minus;
            return 2;
        }
    }
    throw std::invalid_argument("quantity_values: unknown quantity");
}

// The composite quantities pull psi back through curves of seam preimages
// that a rectangular grid cannot dodge by construction; nudge the second
// coordinate off the seam when the guard fires.
int quantity_values_nudged(BoundQuantity q, double a, double b,
                           const AnnulusPair& ann, double out[2]) {
    static constexpr double kNudge[4] = {0.0, 4e-12, -4e-12, 2e-11};
    for (double db : kNudge) {
        try {
            return quantity_values(q, a, b + db, ann, out);
        } catch (const SeamDerivative&) {
        }
    }
    return quantity_values(q, a + 5e-12, b, ann, out);
}

struct RangeAccum {
    double lo = kInf;
    double hi = -kInf;
    TorusPoint argmin;
    TorusPoint argmax;

    void update(double v, double a, double b) {
        if (v < lo) {
            lo = v;
            argmin = TorusPoint(a, b);
        }
        if (v > hi) {
            hi = v;
            argmax = TorusPoint(a, b);
        }
    }
};

bool range_within(const RangeAccum& r, double lo, double hi, bool strict_hi) {
    return r.lo >= lo && (strict_hi ? r.hi < hi : r.hi <= hi);
}

}  // namespace

const char* bound_quantity_name(BoundQuantity q) {
    switch (q) {
        case BoundQuantity::D1Psi: return "D1psi";
        case BoundQuantity::D2Psi: return "D2psi";
        case BoundQuantity::D1PsiInv: return "D1psi_inv";
        case BoundQuantity::D2PsiInv: return "D2psi_inv";
        case BoundQuantity::D1FPlus: return "D1f_plus";
        case BoundQuantity::D1FMinusNeg: return "D1f_minus_neg";
        case BoundQuantity::D2F: return "D2f";
    }
    return "unknown";
}

BoundReport certify_bound(BoundQuantity q, const AnnulusPair& ann, int grid_n) {
    if (grid_n < 16) throw std::invalid_argument("certify_bound: grid_n must be >= 16");

    const bool track_regions = q == BoundQuantity::D1Psi;
    const double a_lo = ann.r0, a_hi = ann.r1;
    const double b_lo = 0.0, b_hi = kPi;
    const double da = (a_hi - a_lo) / grid_n;
    const double db = (b_hi - b_lo) / grid_n;

    RangeAccum total;
    std::array<RangeAccum, 3> regions;
    std::vector<float> cell_lo(static_cast<size_t>(grid_n) * grid_n);
    std::vector<float> cell_hi(cell_lo.size());

    auto sample = [&](double a, double b, size_t cell) {
        double vals[2];
        const int count = quantity_values_nudged(q, a, b, ann, vals);
        for (int k = 0; k < count; ++k) {
            total.update(vals[k], a, b);
            if (cell != size_t(-1)) {
                cell_lo[cell] = std::min(cell_lo[cell], static_cast<float>(vals[k]));
                cell_hi[cell] = std::max(cell_hi[cell], static_cast<float>(vals[k]));
            }
        }
        if (track_regions) {
            const auto branch = psi_branch(a, b, ann.r0, ann.r1);
            regions[static_cast<int>(branch)].update(vals[0], a, b);
        }
    };

    std::fill(cell_lo.begin(), cell_lo.end(), std::numeric_limits<float>::infinity());
    std::fill(cell_hi.begin(), cell_hi.end(), -std::numeric_limits<float>::infinity());
    for (int i = 0; i < grid_n; ++i) {
        const double a = a_lo + (i + 0.5) * da;
        for (int j = 0; j < grid_n; ++j)
            sample(a, b_lo + (j + 0.5) * db, static_cast<size_t>(i) * grid_n + j);
    }

    // One refinement level: 4x density in every cell within 1% of an extreme.
    bool refined = false;
    const double span = total.hi - total.lo;
    if (span > 0.0) {
        const double hi_band = total.hi - 0.01 * span;
        const double lo_band = total.lo + 0.01 * span;
        for (int i = 0; i < grid_n; ++i) {
            for (int j = 0; j < grid_n; ++j) {
                const size_t cell = static_cast<size_t>(i) * grid_n + j;
                if (cell_hi[cell] < hi_band && cell_lo[cell] > lo_band) continue;
                refined = true;
                for (int ki = 0; ki < 4; ++ki) {
                    const double a = a_lo + (i + (ki + 0.5) / 4.0) * da;
                    for (int kj = 0; kj < 4; ++kj)
                        sample(a, b_lo + (j + (kj + 0.5) / 4.0) * db, size_t(-1));
                }
            }
        }
    }

    const Claim claim = claim_for(q);
    BoundReport report;
    report.quantity = bound_quantity_name(q);
    report.claimed_lo = claim.lo;
    report.claimed_hi = claim.hi;
    report.strict_hi = claim.strict_hi;
    report.observed_lo = total.lo;
    report.observed_hi = total.hi;
    report.argmin = total.argmin;
    report.argmax = total.argmax;
    report.grid_n = grid_n;
    report.refined = refined;
    report.within_claim = range_within(total, claim.lo, claim.hi, claim.strict_hi);
    if (!report.within_claim)
        report.witness = total.lo < claim.lo ? total.argmin : total.argmax;

    if (track_regions) {
        for (int r = 0; r < 3; ++r) {
            const RegionClaim& rc = d1psi_region_claims()[r];
            RegionRange rr;
            rr.region = rc.name;
            rr.claimed_lo = rc.lo;
            rr.claimed_hi = rc.hi;
            rr.strict_hi = rc.strict_hi;
            rr.observed_lo = regions[r].lo;
            rr.observed_hi = regions[r].hi;
            rr.within = range_within(regions[r], rc.lo, rc.hi, rc.strict_hi);
            if (!rr.within && report.within_claim) {
                report.within_claim = false;
                report.witness =
                    regions[r].lo < rc.lo ? regions[r].argmin : regions[r].argmax;
            }
            report.region_ranges.push_back(std::move(rr));
        }
    }
    return report;
}

std::vector<BoundReport> certify_all_bounds(const AnnulusPair& ann, int grid_n) {
    std::vector<BoundReport> out;
    for (BoundQuantity q :
         {BoundQuantity::D1Psi, BoundQuantity::D2Psi, BoundQuantity::D1PsiInv,
          BoundQuantity::D2PsiInv, BoundQuantity::D1FPlus,
          BoundQuantity::D1FMinusNeg, BoundQuantity::D2F})
        out.push_back(certify_bound(q, ann, grid_n));
    return out;
}

double cot_alpha(const TorusPoint& z_sigma, const AnnulusPair& ann) {
    const double x = z_sigma.x;
    const double y = std::abs(z_sigma.y);
    if (!(in_I(x, ann) && in_I(y, ann)))
        throw DomainError("cot_alpha: point outside the Sigma image I x (+-I)");
    const double ca = (x * x + y * y - 4.0) / (2.0 * x * y);
    if (!(std::abs(ca) < 1.0))
        throw DegenerateTriangle("cot_alpha: |cos(alpha)| >= 1");
    return ca / std::sqrt(1.0 - ca * ca);
}

ConditionWReport check_condition_w(const AnnulusPair& ann, int grid_n,
                                   WThresholdMode mode) {
    if (grid_n < 2) throw std::invalid_argument("check_condition_w: grid_n must be >= 2");
    ConditionWReport rep;
    rep.grid_n = grid_n;
    rep.sup_cot = -kInf;
    rep.alpha_min = kInf;
    rep.alpha_max = -kInf;
    // Endpoint-inclusive grid: the monotonicity argument puts the sup at the
    // corner (r1, r1), and the grid must contain that corner exactly.
    auto node = [&](int i) {
        return i == grid_n - 1 ? ann.r1
                               : ann.r0 + i * (ann.r1 - ann.r0) / (grid_n - 1);
    };
    for (int i = 0; i < grid_n; ++i) {
        const double x = node(i);
        for (int j = 0; j < grid_n; ++j) {
            const TorusPoint z(x, node(j));
            const double ct = cot_alpha(z, ann);
            if (ct > rep.sup_cot) {
                rep.sup_cot = ct;
                rep.argmax = z;
            }
            const double alpha = std::atan2(1.0, ct);  // alpha in (0, pi/2]
            rep.alpha_min = std::min(rep.alpha_min, alpha);
            rep.alpha_max = std::max(rep.alpha_max, alpha);
        }
    }
    rep.threshold = mode == WThresholdMode::FixedPaper ? kPi / (kSqrt7 - 2.0)
                                                       : 0.5 * ann.c();
    rep.holds = rep.sup_cot < rep.threshold;
    return rep;
}

std::vector<SweepCell> parameter_sweep(int cells, int grid_n, int threads,
                                       WThresholdMode mode) {
    if (cells < 4) throw std::invalid_argument("parameter_sweep: cells must be >= 4");
    const double lo = 2.0, hi = kSqrt7;
    const double w = (hi - lo) / cells;
    std::vector<SweepCell> out(static_cast<size_t>(cells) * cells);

    parallel_for(out.size(), threads, [&](size_t idx) {
        const int i = static_cast<int>(idx) % cells;  // r0 axis
        const int j = static_cast<int>(idx) / cells;  // r1 axis
        SweepCell& cell = out[idx];
        cell.r0 = lo + (i + 0.5) * w;
        cell.r1 = lo + (j + 0.5) * w;
        cell.admissible = cell.r0 < cell.r1 && AnnulusPair::admissible(cell.r0, cell.r1);
        cell.min_d1f_plus = std::numeric_limits<double>::quiet_NaN();
        cell.max_d1f_minus = std::numeric_limits<double>::quiet_NaN();
        cell.sup_cot_alpha = std::numeric_limits<double>::quiet_NaN();
        cell.w_condition_holds = false;
        cell.cone_condition_holds = false;
        if (!cell.admissible) return;

        const AnnulusPair ann(cell.r0, cell.r1);
        const ConditionWReport wrep = check_condition_w(ann, grid_n, mode);
        cell.sup_cot_alpha = wrep.sup_cot;
        cell.w_condition_holds = wrep.holds;

        double min_plus = kInf, max_minus = -kInf;
        const double dx = (ann.r1 - ann.r0) / grid_n;
        const double dy = kPi / grid_n;
        for (int a = 0; a < grid_n; ++a) {
            const double x = ann.r0 + (a + 0.5) * dx;
            for (int b = 0; b < grid_n; ++b) {
                const double y = (b + 0.5) * dy;
                DfParts parts;
                try {
                    parts = df_parts(x, y, ann, kSeamEps);
                } catch (const SeamDerivative&) {
                    parts = df_parts(x, y + 4e-12, ann, kSeamEps);
                }
                min_plus = std::min(min_plus, parts.d1f_plus);
                max_minus = std::max(max_minus, parts.d1f_minus);
            }
        }
        cell.min_d1f_plus = min_plus;
        cell.max_d1f_minus = max_minus;
        cell.cone_condition_holds = min_plus >= 0.0 && max_minus <= 0.0;
    });
    return out;
}

}  // namespace ltm
