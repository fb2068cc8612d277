#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "ltm/bipolar.hpp"
#include "ltm/errors.hpp"

using namespace ltm;

namespace {

const AnnulusPair kDefault;
const double kSqrt7 = std::sqrt(7.0);

PlanePoint random_point_in_A(std::mt19937_64& gen, const AnnulusPair& ann) {
    std::uniform_real_distribution<double> coord(-1.0 - ann.r1, 1.0 + ann.r1);
    for (;;) {
        const PlanePoint p(coord(gen), coord(gen));
        if (in_A(p, ann)) return p;
    }
}

}  // namespace

TEST_CASE("iota is a quarter rotation") {
    const TorusPoint z(0.4, -1.1);
    const TorusPoint i1 = iota(z);
    CHECK(i1.x == doctest::Approx(1.1));
    CHECK(i1.y == doctest::Approx(0.4));
    const TorusPoint back = iota_inv(i1);
    CHECK(back.x == doctest::Approx(z.x));
    CHECK(back.y == doctest::Approx(z.y));

    std::mt19937_64 gen(31);
    std::uniform_real_distribution<double> ang(-kPi, kPi);
    for (int i = 0; i < 100; ++i) {
        const TorusPoint w(ang(gen), ang(gen));
        const TorusPoint four = iota(iota(iota(iota(w))));
        CHECK(circle_dist(four.x, w.x) < 1e-15);
        CHECK(circle_dist(four.y, w.y) < 1e-15);
    }
}

TEST_CASE("omega branch selection") {
    const TorusPoint a = omega(TorusPoint(2.1, -2.1), kDefault);
    CHECK(a.x == doctest::Approx(2.1));
    CHECK(a.y == doctest::Approx(2.1));

    const TorusPoint b = omega(TorusPoint(0.0, 0.0), kDefault);
    CHECK(b.x == 0.0);
    CHECK(b.y == 0.0);

    // Omega^{-1} applies iota^{-1} exactly on I x I.
    const TorusPoint c = omega(TorusPoint(2.1, 2.1), kDefault, true);
    CHECK(c.x == doctest::Approx(2.1));
    CHECK(c.y == doctest::Approx(-2.1));
    const TorusPoint d = omega(TorusPoint(0.5, 2.1), kDefault, true);
    CHECK(d.x == doctest::Approx(-2.1));
    CHECK(d.y == doctest::Approx(0.5));
}

TEST_CASE("to_torus pinned values and Sigma bipolar distances") {
    const TorusPoint z = to_torus(PlanePoint(0.0, std::sqrt(3.0)), kDefault);
    CHECK(z.x == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(z.y == doctest::Approx(2.0).epsilon(1e-14));

    std::mt19937_64 gen(32);
    int sigma_minus_seen = 0;
    for (int i = 0; i < 20000; ++i) {
        const PlanePoint p = random_point_in_A(gen, kDefault);
        if (classify(p, kDefault) != Region::SigmaMinus) continue;
        ++sigma_minus_seen;
        const TorusPoint t = to_torus(p, kDefault);
        CHECK(in_I(t.x, kDefault, 1e-12));
        CHECK(in_neg_I(t.y, kDefault, 1e-12));
        CHECK(t.x == doctest::Approx(dist_plus(p)).epsilon(1e-12));
        CHECK(std::abs(t.y) == doctest::Approx(dist_minus(p)).epsilon(1e-12));
    }
    CHECK(sigma_minus_seen > 100);
    CHECK_THROWS_AS(to_torus(PlanePoint(0.0, 0.0), kDefault), DomainError);
}

TEST_CASE("from_torus inverts to_torus on A") {
    std::mt19937_64 gen(33);
    double max_err = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const PlanePoint p = random_point_in_A(gen, kDefault);
        const PlanePoint q = from_torus(to_torus(p, kDefault), kDefault);
        max_err = std::max(max_err, std::hypot(q.u - p.u, q.v - p.v));
    }
    CHECK(max_err < 1e-10);
    CHECK_THROWS_AS(from_torus(TorusPoint(0.0, 0.0), kDefault), DomainError);
    // The excluded arm (-I) x I of the torus is not part of R.
    CHECK_THROWS_AS(from_torus(TorusPoint(-2.3, 2.3), kDefault), DomainError);
}

TEST_CASE("torus round-trip from R") {
    // from_torus then to_torus is the identity on R (both charts).
    std::mt19937_64 gen(34);
    std::uniform_real_distribution<double> xi(2.0 + 1e-9, kSqrt7 - 1e-9);
    std::uniform_real_distribution<double> ang(-kPi, kPi);
    for (int i = 0; i < 5000; ++i) {
        const TorusPoint z(xi(gen), ang(gen));  // vertical strip of R
        const TorusPoint w = to_torus(from_torus(z, kDefault), kDefault);
        CHECK(torus_dist(z, w) < 1e-10);
    }
    for (int i = 0; i < 5000; ++i) {
        double x = ang(gen);
        if (strictly_in_neg_I(x, kDefault, -1e-6)) continue;  // skip excluded arm
        const TorusPoint z(x, xi(gen));  // horizontal arm of R
        const TorusPoint w = to_torus(from_torus(z, kDefault), kDefault);
        CHECK(torus_dist(z, w) < 1e-10);
    }
}

TEST_CASE("images of the chart pieces land in the right strips") {
    std::mt19937_64 gen(35);
    for (int i = 0; i < 20000; ++i) {
        const PlanePoint p = random_point_in_A(gen, kDefault);
        const Region reg = classify(p, kDefault);
        const TorusPoint z = to_torus(p, kDefault);
        CHECK(in_R(z, kDefault, 1e-12));
        const bool in_plus = reg != Region::AMinusOnly;
        if (in_plus) {
            CHECK(in_I(z.x, kDefault, 1e-12));
        } else {
            // iota(I x S^1) = S^1 x I
            CHECK(in_I(z.y, kDefault, 1e-12));
        }
        // S is hit exactly by the overlap Sigma.
        const bool sigma = reg == Region::SigmaPlus || reg == Region::SigmaMinus;
        CHECK(in_S(z, kDefault, 1e-12) == sigma);
    }
}

TEST_CASE("membership predicates carve R, R', S as specified") {
    CHECK(in_R(TorusPoint(2.2, -3.0), kDefault));
    CHECK(in_R(TorusPoint(3.0, 2.2), kDefault));
    CHECK(in_R(TorusPoint(0.0, 2.2), kDefault));
    CHECK_FALSE(in_R(TorusPoint(-2.2, 2.4), kDefault));   // Sigma- arm belongs to R'
    CHECK(in_R_prime(TorusPoint(-2.2, 2.4), kDefault));
    CHECK_FALSE(in_R_prime(TorusPoint(2.2, -2.4), kDefault));
    CHECK(in_R_prime(TorusPoint(2.2, 3.0), kDefault));
    CHECK(in_S(TorusPoint(2.2, 2.4), kDefault));
    CHECK(in_S(TorusPoint(2.2, -2.4), kDefault));
    CHECK_FALSE(in_S(TorusPoint(2.2, 0.0), kDefault));
    // Boundary of the excluded arm still counts as R (the seam glues there).
    CHECK(in_R(TorusPoint(-2.0, 2.4), kDefault));
}
