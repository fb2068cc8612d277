#include "ltm/diagnostics.hpp"

#include <cmath>
#include <string>
#include <unordered_map>

#include "ltm/bipolar.hpp"
#include "ltm/errors.hpp"
#include "ltm/rng.hpp"
#include "ltm/tangent.hpp"
#include "ltm/torus_map.hpp"
#include "ltm/twist.hpp"

namespace ltm {

namespace {

constexpr double kOrbitSeamEps = 1e-12;

double seam_distance(const PlanePoint& p, const AnnulusPair& ann) {
    const double dp = dist_plus(p);
    const double dm = dist_minus(p);
    return std::min(std::min(std::abs(dp - ann.r0), std::abs(dp - ann.r1)),
                    std::min(std::abs(dm - ann.r0), std::abs(dm - ann.r1)));
}

// Central-difference Jacobian of Theta, step 1e-7.
Mat2 fd_theta_jacobian(const PlanePoint& p, const AnnulusPair& ann) {
    const double h = 1e-7;
    const PlanePoint pu0 = theta_map(PlanePoint(p.u - h, p.v), ann);
    const PlanePoint pu1 = theta_map(PlanePoint(p.u + h, p.v), ann);
    const PlanePoint pv0 = theta_map(PlanePoint(p.u, p.v - h), ann);
    const PlanePoint pv1 = theta_map(PlanePoint(p.u, p.v + h), ann);
    Mat2 j;
    j(0, 0) = (pu1.u - pu0.u) / (2.0 * h);
    j(1, 0) = (pu1.v - pu0.v) / (2.0 * h);
    j(0, 1) = (pv1.u - pv0.u) / (2.0 * h);
    j(1, 1) = (pv1.v - pv0.v) / (2.0 * h);
    return j;
}

// One QR step: push the orthonormal frame, log the two stretch factors.
struct QrFrame {
    Vec2 q1, q2;
    double log1 = 0.0, log2 = 0.0;

    void init(double angle) {
        q1 = Vec2(std::cos(angle), std::sin(angle));
        q2 = Vec2(-std::sin(angle), std::cos(angle));
    }

    void step(const Mat2& j) {
        Vec2 v1 = j * q1;
        const double r11 = v1.norm();
        Vec2 v2 = j * q2;
        if (!(r11 > 0.0) || !std::isfinite(r11))
            throw NonFiniteAccumulation("QR renormalisation collapsed");
        q1 = v1 / r11;
        Vec2 w = v2 - q1.dot(v2) * q1;
        const double r22 = w.norm();
        if (!(r22 > 0.0) || !std::isfinite(r22))
            throw NonFiniteAccumulation("QR renormalisation collapsed");
        q2 = w / r22;
        log1 = std::log(r11);
        log2 = std::log(r22);
    }
};

// Polyline points live in the fundamental representation R, but the curves
// they sample are continuous only in the double cover R1 = R u -R: crossing
// a Sigma- representation seam swaps the sheet.  Steps are therefore taken
// toward whichever fiber representative (b or -b) is nearer, and midpoints
// are folded back into R.
struct R1Step {
    Vec2 delta;  // displacement in the chart of the first point
    double dist;
};

R1Step r1_step(const Vec2& a, const Vec2& b) {
    const Vec2 dp(circle_delta(a[0], b[0]), circle_delta(a[1], b[1]));
    const Vec2 dm(circle_delta(a[0], wrap_pi(-b[0])),
                  circle_delta(a[1], wrap_pi(-b[1])));
    if (dp.norm() <= dm.norm()) return {dp, dp.norm()};
    return {dm, dm.norm()};
}

double step_dist(Frame frame, const Vec2& a, const Vec2& b) {
    if (frame == Frame::Plane) return (b - a).norm();
    return r1_step(a, b).dist;
}

Vec2 canonical_rep(const Vec2& p, const AnnulusPair& ann) {
    const TorusPoint t(p[0], p[1]);
    if (in_R(t, ann, 1e-9)) return Vec2(t.x, t.y);
    const TorusPoint folded(-t.x, -t.y);
    if (in_R(folded, ann, 1e-9)) return Vec2(folded.x, folded.y);
    return Vec2(t.x, t.y);
}

Vec2 point_between(Frame frame, const Vec2& a, const Vec2& b, double t,
                   const AnnulusPair& ann) {
    if (frame == Frame::Plane) return a + t * (b - a);
    const R1Step s = r1_step(a, b);
    const Vec2 raw(wrap_pi(a[0] + t * s.delta[0]), wrap_pi(a[1] + t * s.delta[1]));
    return canonical_rep(raw, ann);
}

Vec2 apply_curve_map(Frame frame, const Vec2& p, const AnnulusPair& ann,
                     bool inverse) {
    if (frame == Frame::Plane) {
        const PlanePoint q = theta_map(PlanePoint(p[0], p[1]), ann, inverse);
        return Vec2(q.u, q.v);
    }
    const TorusPoint q = h_map(TorusPoint(p[0], p[1]), ann, inverse);
    return Vec2(q.x, q.y);
}

double polyline_length(Frame frame, const std::vector<Vec2>& pts) {
    double len = 0.0;
    for (size_t i = 0; i + 1 < pts.size(); ++i)
        len += step_dist(frame, pts[i], pts[i + 1]);
    return len;
}

}  // namespace

PlanePoint sample_plane_point(CounterRng& rng, const AnnulusPair& ann,
                              double seam_margin) {
    const double span = 1.0 + ann.r1;
    for (int tries = 0; tries < 100000; ++tries) {
        const PlanePoint p(rng.uniform(-span, span), rng.uniform(-span, span));
        if (!in_A(p, ann)) continue;
        if (seam_margin > 0.0 && seam_distance(p, ann) < seam_margin) continue;
        return p;
    }
    throw DomainError("sample_plane_point: rejection sampling failed");
}

LyapunovEstimate lyapunov(std::uint64_t seed, long steps, long burn_in,
                          const AnnulusPair& ann, Frame frame) {
    if (steps <= burn_in || burn_in < 0)
        throw std::invalid_argument("lyapunov: need steps > burn_in >= 0");
    CounterRng rng(seed);
    const PlanePoint start = sample_plane_point(rng, ann, 1e-6);

    QrFrame qr;
    qr.init(rng.uniform(0.0, kTwoPi));
    double s1 = 0.0, s2 = 0.0;
    long counted = 0;

    if (frame == Frame::Plane) {
        PlanePoint p = start;
        for (long k = 0; k < steps; ++k) {
            if (seam_distance(p, ann) < kOrbitSeamEps)
                throw SeamEncounter("lyapunov: orbit hit a boundary circle");
            qr.step(fd_theta_jacobian(p, ann));
            if (k >= burn_in) {
                s1 += qr.log1;
                s2 += qr.log2;
                ++counted;
            }
            p = theta_map(p, ann);
        }
    } else {
        TorusPoint z = to_torus(start, ann);
        for (long k = 0; k < steps; ++k) {
            Mat2 j;
            try {
                j = dh_jacobian(z, ann);
            } catch (const SeamDerivative& e) {
                throw SeamEncounter(std::string("lyapunov: ") + e.what());
            }
            qr.step(j);
            if (k >= burn_in) {
                s1 += qr.log1;
                s2 += qr.log2;
                ++counted;
            }
            z = h_map(z, ann);
        }
    }
    if (!std::isfinite(s1) || !std::isfinite(s2))
        throw NonFiniteAccumulation("lyapunov: non-finite log sum");
    return {s1 / counted, s2 / counted, steps, burn_in, seed};
}

double alignment_check(std::uint64_t seed, long steps, long burn_in,
                       const AnnulusPair& ann, const AlignmentOptions& opts) {
    if (steps <= burn_in || burn_in < 0)
        throw std::invalid_argument("alignment_check: need steps > burn_in >= 0");
    CounterRng rng(seed);
    const PlanePoint start = sample_plane_point(rng, ann, 1e-6);
    TorusPoint z = to_torus(start, ann);

    double angle = rng.uniform(0.0, kTwoPi);
    if (opts.start_in_cone) {
        // Strict interior of the requested cone.
        angle = opts.cone == ConeId::C ? rng.uniform(0.05, kPi / 2.0 - 0.05)
                                       : rng.uniform(kPi / 2.0 + 0.05, kPi - 0.05);
    }
    Vec2 w(std::cos(angle), std::sin(angle));

    long counted = 0, inside = 0;
    for (long k = 0; k < steps; ++k) {
        try {
            if (opts.backward) {
                const TorusPoint prev = h_map(z, ann, /*inverse=*/true);
                w = dh_jacobian(prev, ann).inverse() * w;
                z = prev;
            } else {
                w = dh_jacobian(z, ann) * w;
                z = h_map(z, ann);
            }
        } catch (const SeamDerivative& e) {
            throw SeamEncounter(std::string("alignment_check: ") + e.what());
        }
        const double norm = w.norm();
        if (!(norm > 0.0) || !std::isfinite(norm))
            throw NonFiniteAccumulation("alignment_check: vector collapsed");
        w /= norm;
        if (k >= burn_in) {
            ++counted;
            if (in_cone(w, opts.cone, opts.boundary_tol)) ++inside;
        }
    }
    return static_cast<double>(inside) / counted;
}

CurveRecord make_segment(Frame frame, const Vec2& a, const Vec2& b,
                         double refinement_tol, const AnnulusPair& ann) {
    CurveRecord rec;
    rec.frame = frame;
    rec.refinement_tol = refinement_tol;
    const double len = step_dist(frame, a, b);
    const int pieces = std::max(1, static_cast<int>(std::ceil(len / refinement_tol)));
    rec.points.reserve(pieces + 1);
    for (int i = 0; i <= pieces; ++i)
        rec.points.push_back(
            point_between(frame, a, b, static_cast<double>(i) / pieces, ann));
    rec.lengths_per_iterate.assign(1, polyline_length(frame, rec.points));
    return rec;
}

CurveRecord stretch_curve(const CurveRecord& initial, int iters,
                          const AnnulusPair& ann, bool inverse, long point_budget) {
    if (initial.points.size() < 2)
        throw std::invalid_argument("stretch_curve: polyline needs >= 2 points");
    CurveRecord rec = initial;
    if (rec.lengths_per_iterate.empty())
        rec.lengths_per_iterate.push_back(polyline_length(rec.frame, rec.points));
    const double tol = rec.refinement_tol;

    for (int it = 0; it < iters; ++it) {
        const std::vector<Vec2> cur = std::move(rec.points);
        std::vector<Vec2> out;
        out.reserve(cur.size());
        out.push_back(apply_curve_map(rec.frame, cur.front(), ann, inverse));
        for (size_t i = 0; i + 1 < cur.size(); ++i) {
            // Depth-first subdivision of the preimage segment until every
            // image gap closes below the tolerance.
            struct Piece {
                Vec2 pre;
                Vec2 img;
            };
            std::vector<Piece> stack;
            stack.push_back(
                {cur[i + 1], apply_curve_map(rec.frame, cur[i + 1], ann, inverse)});
            Vec2 left_pre = cur[i];
            Vec2 left_img = out.back();
            while (!stack.empty()) {
                const Piece right = stack.back();
                if (step_dist(rec.frame, left_img, right.img) <= tol) {
                    out.push_back(right.img);
                    left_pre = right.pre;
                    left_img = right.img;
                    stack.pop_back();
                    continue;
                }
                if (static_cast<long>(out.size() + stack.size()) >= point_budget)
                    throw PointBudgetExceeded("stretch_curve: refinement budget of " +
                                              std::to_string(point_budget) + " points");
                if (step_dist(rec.frame, left_pre, right.pre) < 1e-13)
                    throw PointBudgetExceeded(
                        "stretch_curve: image gap cannot close above round-off");
                const Vec2 mid = point_between(rec.frame, left_pre, right.pre, 0.5, ann);
                stack.push_back({mid, apply_curve_map(rec.frame, mid, ann, inverse)});
            }
        }
        rec.points = std::move(out);
        rec.lengths_per_iterate.push_back(polyline_length(rec.frame, rec.points));
    }
    return rec;
}

namespace {

// Estimate the (un)stable direction at a random point by pushing a generic
// vector along the orbit.
struct DirectedPoint {
    TorusPoint z;
    Vec2 dir;
};

DirectedPoint grow_direction(CounterRng& rng, const AnnulusPair& ann,
                             bool stable, int burn_in) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        try {
            TorusPoint z = to_torus(sample_plane_point(rng, ann, 1e-6), ann);
            const double a = rng.uniform(0.0, kTwoPi);
            Vec2 w(std::cos(a), std::sin(a));
            for (int k = 0; k < burn_in; ++k) {
                if (stable) {
                    const TorusPoint prev = h_map(z, ann, true);
                    w = dh_jacobian(prev, ann).inverse() * w;
                    z = prev;
                } else {
                    w = dh_jacobian(z, ann) * w;
                    z = h_map(z, ann);
                }
                w.normalize();
            }
            return {z, w};
        } catch (const SeamDerivative&) {
            // reseed and try again
        }
    }
    throw SeamEncounter("grow_direction: all reseeds hit seams");
}

// Wrap-aware segment intersection for short segments: slide b's endpoints
// into a's chart and run the planar test.
bool segments_intersect_torus(const Vec2& a0, const Vec2& a1, const Vec2& b0,
                              const Vec2& b1, Vec2* hit) {
    const Vec2 da(circle_delta(a0[0], a1[0]), circle_delta(a0[1], a1[1]));
    const Vec2 off(circle_delta(a0[0], b0[0]), circle_delta(a0[1], b0[1]));
    const Vec2 db(circle_delta(b0[0], b1[0]), circle_delta(b0[1], b1[1]));
    // Solve t*da = off + s*db for t, s in [0,1].
    const double det = -da[0] * db[1] + db[0] * da[1];
    if (std::abs(det) < 1e-30) return false;
    const double t = (-off[0] * db[1] + db[0] * off[1]) / det;
    const double s = (da[0] * off[1] - da[1] * off[0]) / det;
    if (t < 0.0 || t > 1.0 || s < 0.0 || s > 1.0) return false;
    if (hit) *hit = Vec2(wrap_pi(a0[0] + t * da[0]), wrap_pi(a0[1] + t * da[1]));
    return true;
}

bool curve_tangents_in_cone(const std::vector<LatticePoint>& lift, ConeId cone) {
    for (size_t i = 0; i + 1 < lift.size(); ++i) {
        const Vec2 d(lift[i + 1].U - lift[i].U, lift[i + 1].V - lift[i].V);
        if (!in_cone(d, cone, 1e-14 * d.squaredNorm())) return false;
    }
    return true;
}

}  // namespace

IntersectionResult intersection_experiment(std::uint64_t seed_u,
                                           std::uint64_t seed_s, int m, int n,
                                           const AnnulusPair& ann,
                                           const IntersectionOptions& opts) {
    if (m < 0 || n < 0)
        throw std::invalid_argument("intersection_experiment: m, n must be >= 0");
    CounterRng rng_u(seed_u, 1);
    CounterRng rng_s(seed_s, 2);

    const DirectedPoint u0 =
        grow_direction(rng_u, ann, /*stable=*/false, opts.direction_burn_in);
    const DirectedPoint s0 =
        grow_direction(rng_s, ann, /*stable=*/true, opts.direction_burn_in);

    auto seeded_segment = [&](const DirectedPoint& dp) {
        const Vec2 c(dp.z.x, dp.z.y);
        const Vec2 h = opts.segment_half_length * dp.dir;
        CurveRecord seg =
            make_segment(Frame::Torus, c - h, c + h,
                         std::min(opts.refinement_tol, opts.segment_half_length / 4.0), ann);
        seg.refinement_tol = opts.refinement_tol;
        return seg;
    };

    const CurveRecord ucurve =
        stretch_curve(seeded_segment(u0), m, ann, /*inverse=*/false, opts.point_budget);
    const CurveRecord scurve =
        stretch_curve(seeded_segment(s0), n, ann, /*inverse=*/true, opts.point_budget);

    IntersectionResult res;
    res.m = m;
    res.n = n;
    res.u_points = ucurve.points.size();
    res.s_points = scurve.points.size();
    res.intersects = false;

    // Tangent orientation, measured on the lifted polylines (the lift walks
    // onto the -R sheet where the representation folds).
    const auto lift_of = [](const CurveRecord& c) {
        std::vector<TorusPoint> tp;
        tp.reserve(c.points.size());
        for (const Vec2& p : c.points) tp.emplace_back(p[0], p[1]);
        return lift_curve(tp, LatticePoint{tp.front().x, tp.front().y});
    };
    res.u_tangents_in_cone = curve_tangents_in_cone(lift_of(ucurve), ConeId::C);
    res.s_tangents_in_cone = curve_tangents_in_cone(lift_of(scurve), ConeId::CTilde);

    // Intersection on the torus is the quotient of the lifted R2 test over
    // all deck transformations.  Segments that jump a representation seam
    // (fold to the other sheet) are skipped; their true length is below the
    // refinement tolerance.
    const double seam_skip = std::min(0.5, 8.0 * opts.refinement_tol);
    const double cell = std::max(kTwoPi / 128.0, 4.0 * opts.refinement_tol);
    const int ncell = std::max(1, static_cast<int>(std::floor(kTwoPi / cell)));
    const auto cell_of = [&](double t) {
        int i = static_cast<int>(std::floor((t + kPi) / cell));
        i %= ncell;
        if (i < 0) i += ncell;
        return i;
    };
    std::unordered_map<long long, std::vector<int>> buckets;
    const auto key = [](int ix, int iy) {
        return (static_cast<long long>(ix) << 32) ^ static_cast<unsigned>(iy);
    };
    for (int i = 0; i + 1 < static_cast<int>(ucurve.points.size()); ++i) {
        if (torus_dist(TorusPoint(ucurve.points[i][0], ucurve.points[i][1]),
                       TorusPoint(ucurve.points[i + 1][0], ucurve.points[i + 1][1])) >
            seam_skip)
            continue;
        buckets[key(cell_of(ucurve.points[i][0]), cell_of(ucurve.points[i][1]))]
            .push_back(i);
    }
    Vec2 hit;
    for (size_t j = 0; j + 1 < scurve.points.size() && !res.intersects; ++j) {
        const Vec2& b0 = scurve.points[j];
        const Vec2& b1 = scurve.points[j + 1];
        if (torus_dist(TorusPoint(b0[0], b0[1]), TorusPoint(b1[0], b1[1])) > seam_skip)
            continue;
        const int ix = cell_of(b0[0]);
        const int iy = cell_of(b0[1]);
        for (int dx = -1; dx <= 1 && !res.intersects; ++dx) {
            for (int dy = -1; dy <= 1 && !res.intersects; ++dy) {
                const auto bucket =
                    buckets.find(key((ix + dx + ncell) % ncell, (iy + dy + ncell) % ncell));
                if (bucket == buckets.end()) continue;
                for (int i : bucket->second) {
                    if (segments_intersect_torus(ucurve.points[i], ucurve.points[i + 1],
                                                 b0, b1, &hit)) {
                        res.intersects = true;
                        res.witness = TorusPoint(hit[0], hit[1]);
                        break;
                    }
                }
            }
        }
    }
    return res;
}

std::vector<double> mixing_decay(int cells, int iters, long samples,
                                 std::uint64_t seed, const AnnulusPair& ann,
                                 bool identity_control) {
    if (cells < 16) throw std::invalid_argument("mixing_decay: cells must be >= 16");
    if (samples < 100000)
        throw std::invalid_argument("mixing_decay: samples must be >= 1e5");

    const double span = 1.0 + ann.r1;
    const double cell_w = 2.0 * span / cells;
    CounterRng rng(seed);

    std::vector<PlanePoint> pts;
    std::vector<signed char> value;
    pts.reserve(samples);
    value.reserve(samples);
    double mean = 0.0;
    for (long i = 0; i < samples; ++i) {
        const PlanePoint p = sample_plane_point(rng, ann);
        pts.push_back(p);
        value.push_back(p.u < 0.0 ? 1 : -1);
        mean += value.back();
    }
    mean /= samples;

    std::vector<double> sums(static_cast<size_t>(cells) * cells);
    std::vector<long> counts(sums.size());
    auto variance_now = [&]() {
        std::fill(sums.begin(), sums.end(), 0.0);
        std::fill(counts.begin(), counts.end(), 0L);
        for (long i = 0; i < samples; ++i) {
            int ix = static_cast<int>((pts[i].u + span) / cell_w);
            int iy = static_cast<int>((pts[i].v + span) / cell_w);
            ix = std::clamp(ix, 0, cells - 1);
            iy = std::clamp(iy, 0, cells - 1);
            const size_t c = static_cast<size_t>(ix) * cells + iy;
            sums[c] += value[i];
            counts[c] += 1;
        }
        double var = 0.0;
        for (size_t c = 0; c < sums.size(); ++c) {
            if (counts[c] == 0) continue;
            const double cell_mean = sums[c] / counts[c];
            var += counts[c] * (cell_mean - mean) * (cell_mean - mean);
        }
        return var / samples;
    };

    std::vector<double> out;
    out.reserve(iters + 1);
    out.push_back(variance_now());
    for (int it = 0; it < iters; ++it) {
        if (!identity_control)
            for (auto& p : pts) p = theta_map(p, ann);
        out.push_back(variance_now());
    }
    return out;
}

}  // namespace ltm
