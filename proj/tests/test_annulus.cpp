#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "ltm/annulus.hpp"
#include "ltm/errors.hpp"

using namespace ltm;

namespace {
const AnnulusPair kDefault;
const double kSqrt7 = std::sqrt(7.0);
}  // namespace

TEST_CASE("annulus pair invariants") {
    CHECK(kDefault.r0 == 2.0);
    CHECK(kDefault.r1 == doctest::Approx(kSqrt7).epsilon(1e-15));
    CHECK(kDefault.c() == doctest::Approx(2.0 * kPi / (kSqrt7 - 2.0)).epsilon(1e-15));

    CHECK(AnnulusPair::admissible(2.0, kSqrt7));
    CHECK(AnnulusPair::admissible(1.5, 3.0));
    CHECK_FALSE(AnnulusPair::admissible(0.8, 1.5));   // r0 <= 1: overlap touches the axis
    CHECK_FALSE(AnnulusPair::admissible(1.1, 3.11));  // r1 >= r0 + 2
    CHECK_FALSE(AnnulusPair::admissible(2.0, 3.2));   // r1 >= pi
    CHECK_FALSE(AnnulusPair::admissible(2.5, 2.0));
    CHECK_THROWS_AS(AnnulusPair(0.5, 1.0), DomainError);
}

TEST_CASE("charts at pinned points") {
    const PlanePoint a = m_plus(PolarPoint(2.0, 0.0));
    CHECK(a.u == doctest::Approx(1.0));
    CHECK(a.v == doctest::Approx(0.0));

    const PlanePoint b = m_plus(PolarPoint(2.0, kPi / 2.0));
    CHECK(b.u == doctest::Approx(-1.0));
    CHECK(b.v == doctest::Approx(2.0));

    const PlanePoint c = m_minus(PolarPoint(2.0, 0.0));
    CHECK(c.u == doctest::Approx(-1.0));
    CHECK(c.v == doctest::Approx(0.0));

    const PolarPoint d = m_plus_inv(PlanePoint(0.0, std::sqrt(3.0)));
    CHECK(d.r == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(d.theta == doctest::Approx(kPi / 3.0).epsilon(1e-15));

    const PolarPoint e = m_minus_inv(PlanePoint(-1.0, 0.0));
    CHECK(e.r == doctest::Approx(2.0));
    CHECK(e.theta == doctest::Approx(0.0));

    CHECK_THROWS_AS(m_plus_inv(PlanePoint(-1.0, 0.0)), CentreSingularity);
    CHECK_THROWS_AS(m_minus_inv(PlanePoint(1.0, 0.0)), CentreSingularity);
}

TEST_CASE("chart round-trips to 1e-12") {
    std::mt19937_64 gen(42);
    std::uniform_real_distribution<double> rad(1e-3, kPi - 1e-3);
    std::uniform_real_distribution<double> ang(-kPi, kPi);
    for (int i = 0; i < 1000; ++i) {
        const PolarPoint p(rad(gen), wrap_pi(ang(gen)));
        const PolarPoint qp = m_plus_inv(m_plus(p));
        CHECK(std::abs(qp.r - p.r) < 1e-12);
        CHECK(circle_dist(qp.theta, p.theta) < 1e-12);
        const PolarPoint qm = m_minus_inv(m_minus(p));
        CHECK(std::abs(qm.r - p.r) < 1e-12);
        CHECK(circle_dist(qm.theta, p.theta) < 1e-12);
    }
}

TEST_CASE("classification examples") {
    CHECK(classify(PlanePoint(0.0, std::sqrt(3.0)), kDefault) == Region::SigmaPlus);
    CHECK(classify(PlanePoint(-1.0, 0.0), kDefault) == Region::AMinusOnly);
    CHECK(classify(PlanePoint(10.0, 10.0), kDefault) == Region::Outside);
    CHECK(classify(PlanePoint(0.0, -std::sqrt(3.0)), kDefault) == Region::SigmaMinus);
    // Interior of the A- hole along the M+ chart: distance to (1,0) under r0.
    CHECK(classify(m_plus(PolarPoint(2.2, 0.1)), kDefault) == Region::APlusInner);
    CHECK(classify(m_plus(PolarPoint(2.2, kPi - 0.1)), kDefault) == Region::APlusOuter);
}

TEST_CASE("classification is a partition consistent with distances") {
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> coord(-4.0, 4.0);
    int seen[6] = {0, 0, 0, 0, 0, 0};
    for (int i = 0; i < 1000000; ++i) {
        const PlanePoint p(coord(gen), coord(gen));
        const Region r = classify(p, kDefault);
        seen[static_cast<int>(r)]++;
        // Oracle: recompute the two distances directly.
        const double dp = std::hypot(p.u + 1.0, p.v);
        const double dm = std::hypot(p.u - 1.0, p.v);
        const bool in_plus = dp >= 2.0 && dp <= kSqrt7;
        const bool in_minus = dm >= 2.0 && dm <= kSqrt7;
        switch (r) {
            case Region::SigmaPlus:
                CHECK((in_plus && in_minus && p.v > 0.0));
                break;
            case Region::SigmaMinus:
                CHECK((in_plus && in_minus && p.v < 0.0));
                break;
            case Region::APlusInner:
                CHECK((in_plus && dm < 2.0));
                break;
            case Region::APlusOuter:
                CHECK((in_plus && dm > kSqrt7));
                break;
            case Region::AMinusOnly:
                CHECK((!in_plus && in_minus));
                break;
            case Region::Outside:
                CHECK((!in_plus && !in_minus));
                break;
        }
    }
    for (int k = 0; k < 6; ++k) CHECK(seen[k] > 0);
}

TEST_CASE("sigma boundary circles classify into the closed overlap") {
    // d- == r0 exactly, v > 0, d+ in band.
    const PlanePoint p = m_minus(PolarPoint(2.0, -1.2));
    REQUIRE(dist_minus(p) == doctest::Approx(2.0).epsilon(1e-15));
    if (dist_plus(p) >= 2.0 && dist_plus(p) <= kSqrt7 && p.v > 0.0)
        CHECK(classify(p, kDefault) == Region::SigmaPlus);
}

TEST_CASE("region boundaries against the pinned closed forms") {
    const RegionBoundaries at2 = region_boundaries(2.0, kDefault);
    CHECK(at2.theta_i == doctest::Approx(kPi / 3.0).epsilon(1e-15));
    CHECK(at2.theta_o == doctest::Approx(std::acos(1.0 / 8.0)).epsilon(1e-15));

    const RegionBoundaries at7 = region_boundaries(kSqrt7, kDefault);
    CHECK(at7.theta_i == doctest::Approx(std::acos(kSqrt7 / 4.0)).epsilon(1e-15));
    CHECK(at7.theta_o == doctest::Approx(std::acos(kSqrt7 / 7.0)).epsilon(1e-15));

    // General-annuli form reduces to the default-pair specialisation.
    std::mt19937_64 gen(3);
    std::uniform_real_distribution<double> rad(2.0, kSqrt7);
    for (int i = 0; i < 100; ++i) {
        const double r = rad(gen);
        const RegionBoundaries b = region_boundaries(r, kDefault);
        CHECK(b.theta_i == doctest::Approx(std::acos(r / 4.0)).epsilon(1e-14));
        CHECK(b.theta_o == doctest::Approx(std::acos((r * r - 3.0) / (4.0 * r))).epsilon(1e-14));
        CHECK(b.theta_i > 0.0);
        CHECK(b.theta_i < b.theta_o);
        CHECK(b.theta_o < kPi);
    }
}

TEST_CASE("boundary ordering by the monotone bipolar distance") {
    // Oracle: d-(r,theta) = sqrt(r^2 - 4 r cos(theta) + 4) increases in theta,
    // so theta_i (where it crosses r0) must precede theta_o (crossing r1).
    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> rad(2.0, kSqrt7);
    for (int i = 0; i < 100; ++i) {
        const double r = rad(gen);
        const RegionBoundaries b = region_boundaries(r, kDefault);
        auto dminus = [&](double theta) {
            return std::sqrt(r * r - 4.0 * r * std::cos(theta) + 4.0);
        };
        CHECK(dminus(b.theta_i) == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(dminus(b.theta_o) == doctest::Approx(kSqrt7).epsilon(1e-12));
        double prev = dminus(0.0);
        for (int k = 1; k <= 64; ++k) {
            const double cur = dminus(k * kPi / 64.0);
            CHECK(cur >= prev);
            prev = cur;
        }
    }
}

TEST_CASE("region boundaries reject non-overlapping geometry") {
    CHECK_THROWS_AS(theta_inner(6.0, 2.0, 2.5), DomainError);
}
