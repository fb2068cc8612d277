#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "ltm/errors.hpp"
#include "ltm/tangent.hpp"
#include "ltm/torus_map.hpp"
#include "test_util.hpp"

using namespace ltm;
using ltm::test::fd_torus_jacobian;
using ltm::test::random_point_in_A;

namespace {

const AnnulusPair kDefault;

TorusPoint random_point_in_R(std::mt19937_64& gen, const AnnulusPair& ann) {
    return to_torus(random_point_in_A(gen, ann), ann);
}

// Resample until the full derivative chain stays a margin away from seams.
template <typename Make>
TorusPoint seam_safe(std::mt19937_64& gen, Make make, const AnnulusPair& ann,
                     bool full_chain, double margin) {
    for (;;) {
        const TorusPoint z = make(gen);
        try {
            if (full_chain)
                dh_jacobian(z, ann, margin);
            else
                df_jacobian(z, ann, false, margin);
            return z;
        } catch (const SeamDerivative&) {
        }
    }
}

}  // namespace

TEST_CASE("df_jacobian shape and identity branch") {
    std::mt19937_64 gen(61);
    for (int i = 0; i < 1000; ++i) {
        const TorusPoint z =
            seam_safe(gen, [&](auto& g) { return random_point_in_R(g, kDefault); },
                      kDefault, false, 1e-9);
        const Mat2 j = df_jacobian(z, kDefault);
        CHECK(j(0, 0) == 1.0);
        CHECK(j(0, 1) == 0.0);
    }
    const Mat2 off = df_jacobian(TorusPoint(0.3, 2.2), kDefault);
    CHECK(off == Mat2::Identity());
}

TEST_CASE("df_jacobian matches finite differences of f_map") {
    std::mt19937_64 gen(62);
    std::uniform_real_distribution<double> xi(2.0, std::sqrt(7.0));
    std::uniform_real_distribution<double> ang(-kPi, kPi);
    const auto make = [&](std::mt19937_64& g) { return TorusPoint(xi(g), ang(g)); };
    for (int i = 0; i < 10000; ++i) {
        for (bool inverse : {false, true}) {
            const TorusPoint z = seam_safe(
                gen, make, kDefault, false, 1e-5);
            const Mat2 a = df_jacobian(z, kDefault, inverse);
            const Mat2 fd = fd_torus_jacobian(
                [&](const TorusPoint& w) { return detail::f_raw(w, kDefault, inverse); }, z);
            CHECK((a - fd).norm() / a.norm() < 1e-6);
        }
    }
}

TEST_CASE("df sign conditions: +-D1f_+- >= 0 and D2f_+- > 0") {
    std::mt19937_64 gen(63);
    std::uniform_real_distribution<double> xi(2.0, std::sqrt(7.0));
    std::uniform_real_distribution<double> ang(-kPi, kPi);
    for (int i = 0; i < 100000; ++i) {
        const TorusPoint z = seam_safe(
            gen, [&](auto& g) { return TorusPoint(xi(g), ang(g)); }, kDefault,
            false, 1e-9);
        const Mat2 fwd = df_jacobian(z, kDefault, false);
        const Mat2 inv = df_jacobian(z, kDefault, true);
        CHECK(fwd(1, 0) >= 0.0);
        CHECK(inv(1, 0) <= 0.0);
        CHECK(fwd(1, 1) > 0.0);
        CHECK(inv(1, 1) > 0.0);
    }
}

TEST_CASE("dh_jacobian matches finite differences of h_map") {
    std::mt19937_64 gen(64);
    const auto make = [&](std::mt19937_64& g) { return random_point_in_R(g, kDefault); };
    for (int i = 0; i < 10000; ++i) {
        const TorusPoint z = seam_safe(gen, make, kDefault, true, 1e-5);
        const Mat2 a = dh_jacobian(z, kDefault);
        const Mat2 fd = fd_torus_jacobian(
            [&](const TorusPoint& w) { return h_map(w, kDefault); }, z);
        CHECK((a - fd).norm() / a.norm() < 1e-5);
    }
}

TEST_CASE("dh determinant equals the product of the stage determinants") {
    std::mt19937_64 gen(65);
    const auto make = [&](std::mt19937_64& g) { return random_point_in_R(g, kDefault); };
    for (int i = 0; i < 10000; ++i) {
        const TorusPoint z = seam_safe(gen, make, kDefault, true, 1e-9);
        const Mat2 j = dh_jacobian(z, kDefault);
        // Oracle: the rotations have unit determinant, the two triangular
        // factors contribute their diagonal products.
        const Mat2 j1 = df_jacobian(z, kDefault, false);
        const TorusPoint z2 = omega(detail::f_raw(z, kDefault, false), kDefault);
        const Mat2 j3 = df_jacobian(z2, kDefault, true);
        const double want = j1(1, 1) * j3(1, 1);
        CHECK(j.determinant() == doctest::Approx(want).epsilon(1e-12));
        CHECK(j.determinant() > 0.0);
    }
}

TEST_CASE("cone membership and the quarter rotation") {
    CHECK(in_cone(Vec2(1.0, 1.0), ConeId::C));
    CHECK_FALSE(in_cone(Vec2(1.0, -1.0), ConeId::C));
    CHECK(in_cone(Vec2(1.0, -1.0), ConeId::CTilde));
    // Axis vectors belong to both cones.
    CHECK(in_cone(Vec2(1.0, 0.0), ConeId::C));
    CHECK(in_cone(Vec2(1.0, 0.0), ConeId::CTilde));
    CHECK(in_cone(Vec2(0.0, 1.0), ConeId::C));
    CHECK(in_cone(Vec2(0.0, 1.0), ConeId::CTilde));

    // D(iota) carries C onto CTilde and back.
    std::mt19937_64 gen(66);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 10000; ++i) {
        const double s = u(gen) < 0.5 ? 1.0 : -1.0;
        const Vec2 w = s * Vec2(u(gen), u(gen));  // b1 b2 >= 0
        REQUIRE(in_cone(w, ConeId::C));
        CHECK(in_cone(iota_rotation(false) * w, ConeId::CTilde));
        CHECK(in_cone(iota_rotation(true) * w, ConeId::CTilde));
    }
}

TEST_CASE("DH transports the cone C into itself") {
    std::mt19937_64 gen(67);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const auto make = [&](std::mt19937_64& g) { return random_point_in_R(g, kDefault); };
    for (int i = 0; i < 100000; ++i) {
        const TorusPoint z = seam_safe(gen, make, kDefault, true, 1e-12);
        const double s = u(gen) < 0.5 ? 1.0 : -1.0;
        Vec2 w = s * Vec2(u(gen), u(gen));
        if (w.norm() == 0.0) continue;
        const Vec2 out = dh_jacobian(z, kDefault) * w;
        CHECK(in_cone(out, ConeId::C, 1e-14 * out.squaredNorm()));
        // ... and DF preserves C while DF^{-1} preserves CTilde.
        const Vec2 out_f = df_jacobian(z, kDefault) * w;
        CHECK(in_cone(out_f, ConeId::C, 1e-14 * out_f.squaredNorm()));
        const Vec2 wt(w[0], -w[1]);
        const Vec2 out_b = df_jacobian(z, kDefault, true) * wt;
        CHECK(in_cone(out_b, ConeId::CTilde, 1e-14 * out_b.squaredNorm()));
    }
}

TEST_CASE("seam guards identify the failing stage") {
    CHECK_THROWS_AS(df_jacobian(TorusPoint(2.0, 1.0), kDefault), SeamDerivative);
    CHECK_THROWS_AS(df_jacobian(TorusPoint(2.3, 2.0), kDefault), SeamDerivative);
    try {
        dh_jacobian(TorusPoint(2.0, 1.0), kDefault);
        FAIL("expected SeamDerivative");
    } catch (const SeamDerivative& e) {
        CHECK(std::string(e.what()).find("stage 1") != std::string::npos);
    }
}
