#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "ministokes/element.hpp"
#include "ministokes/mesh.hpp"
#include "ministokes/quadrature.hpp"

using namespace ministokes;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

const TetPoints kRef = {Vec3{0, 0, 0}, Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}};

TetPoints random_tet(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    while (true) {
        TetPoints t;
        for (auto& v : t) v = {u(rng), u(rng), u(rng)};
        const double edge = tet_max_edge(t);
        if (std::abs(signed_tet_volume(t)) > 1e-2 * edge * edge * edge) return t;
    }
}

// independent gradient oracle: grad(phi_i) points from the opposite face
// toward vertex i with magnitude face_area / (3 V)
Vec3 gradient_via_face_normal(const TetPoints& t, int i) {
    const auto& lf = kTetFaces[i];
    const Vec3 a = t[lf[0]], b = t[lf[1]], c = t[lf[2]];
    Vec3 n = cross(b - a, c - a);                 // |n| = 2 * area
    if (dot(n, t[i] - a) < 0.0) n = -1.0 * n;     // toward vertex i
    const double vol = std::abs(signed_tet_volume(t));
    return n / (6.0 * vol);                        // area/(3V) * unit normal
}

// barycentric value via sub-volume ratio, independent of the gradients
double barycentric_via_volumes(const TetPoints& t, int i, Vec3 x) {
    TetPoints sub = t;
    sub[i] = x;
    return signed_tet_volume(sub) / signed_tet_volume(t);
}

}  // namespace

TEST_CASE("barycentric gradients on the reference tet") {
    const auto grad = barycentric_gradients(kRef);
    CHECK_THAT(grad[0].x, WithinAbs(-1.0, 1e-15));
    CHECK_THAT(grad[0].y, WithinAbs(-1.0, 1e-15));
    CHECK_THAT(grad[0].z, WithinAbs(-1.0, 1e-15));
    CHECK_THAT(grad[1].x, WithinAbs(1.0, 1e-15));
    CHECK_THAT(grad[1].y, WithinAbs(0.0, 1e-15));
    CHECK_THAT(grad[1].z, WithinAbs(0.0, 1e-15));
    CHECK_THAT(grad[2].y, WithinAbs(1.0, 1e-15));
    CHECK_THAT(grad[3].z, WithinAbs(1.0, 1e-15));
}

TEST_CASE("barycentric gradients on random tets") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        const TetPoints t = random_tet(rng);
        const auto grad = barycentric_gradients(t);

        Vec3 sum{0, 0, 0};
        for (const auto& gr : grad) sum += gr;
        CHECK(norm(sum) < 1e-13 * norm(grad[0]));

        for (int i = 0; i < 4; ++i) {
            const Vec3 oracle = gradient_via_face_normal(t, i);
            CHECK(norm(grad[i] - oracle) < 1e-12 * norm(oracle));
        }

        // delta property and sub-volume agreement at a random point
        const auto phi_at = [&](Vec3 x) { return barycentric_values(t, grad, x); };
        for (int i = 0; i < 4; ++i) {
            const auto phi = phi_at(t[i]);
            for (int j = 0; j < 4; ++j) CHECK_THAT(phi[j], WithinAbs(i == j ? 1.0 : 0.0, 1e-12));
        }
        Vec3 x{u(rng), u(rng), u(rng)};
        const auto phi = phi_at(x);
        for (int i = 0; i < 4; ++i)
            CHECK_THAT(phi[i], WithinAbs(barycentric_via_volumes(t, i, x), 1e-10));
    }
    const TetPoints flat = {Vec3{0, 0, 0}, Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0.5, 0.5, 0}};
    CHECK_THROWS_AS(barycentric_gradients(flat), std::domain_error);
}

TEST_CASE("bubble evaluation") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        const TetPoints t = random_tet(rng);
        const Vec3 centroid = 0.25 * (t[0] + t[1] + t[2] + t[3]);
        const auto at_centroid = bubble_eval(t, centroid);
        CHECK_THAT(at_centroid.value, WithinRel(1.0 / 256.0, 1e-12));

        for (int i = 0; i < 4; ++i) {
            const auto at_vertex = bubble_eval(t, t[i]);
            CHECK_THAT(at_vertex.value, WithinAbs(0.0, 1e-14));
            CHECK(norm(at_vertex.gradient) < 1e-12);
        }

        // vanishes on faces: random point on face opposite vertex 0
        std::uniform_real_distribution<double> u(0.05, 0.45);
        const double a = u(rng), b = u(rng);
        const Vec3 face_pt = t[1] + a * (t[2] - t[1]) + b * (t[3] - t[1]);
        CHECK_THAT(bubble_eval(t, face_pt).value, WithinAbs(0.0, 1e-15));
    }

    const auto ref_pt = bubble_eval(kRef, Vec3{0.5, 0.25, 0.125});
    CHECK_THAT(ref_pt.value, WithinRel(1.0 / 512.0, 1e-13));
}

TEST_CASE("local stiffness on the reference tet") {
    const auto k = local_stiffness(kRef, 1.0, rule_for_degree(6));
    CHECK_THAT(k[0][0], WithinRel(0.5, 1e-13));        // V * |grad phi_1|^2 = (1/6)*3
    CHECK_THAT(k[0][1], WithinRel(-1.0 / 6.0, 1e-13)); // (1/6) * (-1,-1,-1).(1,0,0)
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) CHECK(k[i][j] == k[j][i]);
    CHECK_THROWS_AS(local_stiffness(kRef, 1.0, rule_for_degree(5)), std::invalid_argument);
}

TEST_CASE("local stiffness properties on random tets") {
    std::mt19937 rng(37);
    const auto& rule6 = rule_for_degree(6);
    const auto& rule10 = rule_for_degree(10);
    for (int trial = 0; trial < 100; ++trial) {
        const TetPoints t = random_tet(rng);
        const double mu = 0.5 + trial * 0.01;
        const auto k = local_stiffness(t, mu, rule6);

        double knorm = 0.0;
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) knorm = std::max(knorm, std::abs(k[i][j]));

        // kernel: constants have zero gradient
        for (int i = 0; i < 5; ++i) {
            const double row_sum = k[i][0] + k[i][1] + k[i][2] + k[i][3];
            CHECK_THAT(row_sum, WithinAbs(0.0, 1e-13 * knorm));
        }
        // linear-bubble decoupling is exact
        for (int i = 0; i < 4; ++i) {
            CHECK(k[i][4] == 0.0);
            CHECK(k[4][i] == 0.0);
        }
        CHECK(k[4][4] > 0.0);

        // linear block equals the independent closed form
        const double vol = std::abs(signed_tet_volume(t));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                const double oracle =
                    mu * vol * dot(gradient_via_face_normal(t, i), gradient_via_face_normal(t, j));
                CHECK_THAT(k[i][j], WithinAbs(oracle, 1e-11 * std::abs(oracle) + 1e-15));
            }

        // minimal-degree rule agrees with the degree-10 rule
        const auto k10 = local_stiffness(t, mu, rule10);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j)
                CHECK_THAT(k[i][j], WithinAbs(k10[i][j], 1e-12 * knorm));
    }
}

TEST_CASE("stiffness and divergence scaling laws") {
    std::mt19937 rng(41);
    const TetPoints t = random_tet(rng);
    const double s = 3.7;
    TetPoints scaled;
    for (int i = 0; i < 4; ++i) scaled[i] = s * t[i];

    const auto k1 = local_stiffness(t, 1.0, rule_for_degree(6));
    const auto k2 = local_stiffness(scaled, 1.0, rule_for_degree(6));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            if (k1[i][j] != 0.0) CHECK_THAT(k2[i][j], WithinRel(s * k1[i][j], 1e-11));

    const auto b1 = local_divergence(t, rule_for_degree(4));
    const auto b2 = local_divergence(scaled, rule_for_degree(4));
    for (int c = 0; c < 3; ++c)
        for (int kk = 0; kk < 4; ++kk)
            for (int i = 0; i < 5; ++i)
                if (b1[c][kk][i] != 0.0)
                    CHECK_THAT(b2[c][kk][i], WithinRel(s * s * b1[c][kk][i], 1e-11));
}

TEST_CASE("local divergence blocks") {
    const auto b = local_divergence(kRef, rule_for_degree(4));
    // psi_2 = x on the reference tet: every pressure row sees -V/4
    for (int k = 0; k < 4; ++k) CHECK_THAT(b[0][k][1], WithinRel(-1.0 / 24.0, 1e-13));

    CHECK_THROWS_AS(local_divergence(kRef, rule_for_degree(3)), std::invalid_argument);

    std::mt19937 rng(43);
    const auto& rule4 = rule_for_degree(4);
    for (int trial = 0; trial < 100; ++trial) {
        const TetPoints t = random_tet(rng);
        const auto blocks = local_divergence(t, rule4);
        const auto grad = barycentric_gradients(t);
        const double vol = std::abs(signed_tet_volume(t));

        double bnorm = 0.0;
        for (int c = 0; c < 3; ++c)
            for (int k = 0; k < 4; ++k)
                for (int i = 0; i < 5; ++i) bnorm = std::max(bnorm, std::abs(blocks[c][k][i]));

        for (int c = 0; c < 3; ++c)
            for (int k = 0; k < 4; ++k) {
                // linear columns: -(V/4) grad(psi_i)_c
                for (int i = 0; i < 4; ++i)
                    CHECK_THAT(blocks[c][k][i],
                               WithinAbs(-0.25 * vol * grad[i][c], 1e-13 * bnorm));
                // bubble column closed form: int phi_k d(b)/dc = -(grad phi_k)_c V/840
                CHECK_THAT(blocks[c][k][4], WithinAbs(grad[k][c] * vol / 840.0, 1e-13 * bnorm));
            }

        for (int c = 0; c < 3; ++c) {
            // bubble column sums vanish (divergence theorem, b = 0 on faces)
            double bubble_sum = 0.0;
            // constant pressure against rigid translations gives zero
            double rigid = 0.0;
            for (int k = 0; k < 4; ++k) {
                bubble_sum += blocks[c][k][4];
                for (int i = 0; i < 4; ++i) rigid += blocks[c][k][i];
            }
            CHECK_THAT(bubble_sum, WithinAbs(0.0, 1e-14 * bnorm));
            CHECK_THAT(rigid, WithinAbs(0.0, 1e-12 * bnorm));
        }
    }
}

TEST_CASE("local load vectors") {
    SECTION("constant forcing on the reference tet") {
        const auto load = local_load(
            kRef, [](Vec3) { return 1.0; }, 1.0, rule_for_degree(4));
        for (int i = 0; i < 4; ++i) CHECK_THAT(load[i], WithinRel(1.0 / 24.0, 1e-13));
        CHECK_THAT(load[4], WithinRel(1.0 / 5040.0, 1e-12));
    }
    SECTION("zero forcing") {
        const auto load = local_load(
            kRef, [](Vec3) { return 0.0; }, 1.0, rule_for_degree(10));
        for (double v : load) CHECK(v == 0.0);
    }
    SECTION("bubble entry is V/840 for unit forcing on random tets") {
        std::mt19937 rng(47);
        for (int trial = 0; trial < 100; ++trial) {
            const TetPoints t = random_tet(rng);
            const auto load = local_load(
                t, [](Vec3) { return 1.0; }, 1.0, rule_for_degree(4));
            CHECK_THAT(load[4], WithinRel(std::abs(signed_tet_volume(t)) / 840.0, 1e-12));
        }
    }
    SECTION("f = x: closed form via moments, and two-rule agreement") {
        // int x phi_i over the reference tet from the factorial moments
        const double ix = exact_tet_monomial_integral(1, 0, 0);
        const double ixx = exact_tet_monomial_integral(2, 0, 0);
        const double ixy = exact_tet_monomial_integral(1, 1, 0);
        const std::array<double, 4> oracle = {ix - ixx - 2 * ixy, ixx, ixy, ixy};
        const auto lo = local_load(
            kRef, [](Vec3 p) { return p.x; }, 1.0, rule_for_degree(5));
        const auto hi = local_load(
            kRef, [](Vec3 p) { return p.x; }, 1.0, rule_for_degree(10));
        for (int i = 0; i < 4; ++i) {
            CHECK_THAT(lo[i], WithinRel(oracle[i], 1e-12));
            CHECK_THAT(lo[i], WithinRel(hi[i], 1e-12));
        }
        CHECK_THAT(lo[4], WithinRel(hi[4], 1e-12));
    }
    SECTION("rho scales the load") {
        const auto load = local_load(
            kRef, [](Vec3) { return 1.0; }, 2.5, rule_for_degree(4));
        CHECK_THAT(load[0], WithinRel(2.5 / 24.0, 1e-13));
    }
}
