#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "ministokes/quadrature.hpp"

using namespace ministokes;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

// barycentric 4-tuple of a reference-tet point
std::array<double, 4> bary(Vec3 p) { return {1.0 - p.x - p.y - p.z, p.x, p.y, p.z}; }

TetPoints random_tet(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    while (true) {
        TetPoints t;
        for (auto& v : t) v = {u(rng), u(rng), u(rng)};
        const double edge = tet_max_edge(t);
        if (std::abs(signed_tet_volume(t)) > 1e-3 * edge * edge * edge) return t;
    }
}

}  // namespace

TEST_CASE("factorial moment oracle") {
    CHECK_THAT(exact_tet_monomial_integral(0, 0, 0), WithinRel(1.0 / 6.0, 1e-15));
    CHECK_THAT(exact_tet_monomial_integral(1, 0, 0), WithinRel(1.0 / 24.0, 1e-15));
    CHECK_THAT(exact_tet_monomial_integral(1, 1, 1), WithinRel(1.0 / 720.0, 1e-15));
}

TEST_CASE("every rule is positive, interior, normalized and exact") {
    for (int d = 1; d <= 10; ++d) {
        const QuadratureRule& rule = rule_for_degree(d);
        INFO("degree " << d << ", " << rule.num_points() << " points");
        REQUIRE(rule.degree >= d);

        double wsum = 0.0;
        for (int i = 0; i < rule.num_points(); ++i) {
            REQUIRE(rule.weights[i] > 0.0);
            wsum += rule.weights[i];
            for (double lam : bary(rule.points[i])) REQUIRE(lam > 1e-6);
        }
        CHECK_THAT(wsum, WithinAbs(1.0 / 6.0, 1e-14));

        CHECK(validate_rule(rule).empty());
    }
}

TEST_CASE("rules are symmetric under barycentric permutations") {
    for (int d = 1; d <= 10; ++d) {
        const QuadratureRule& rule = rule_for_degree(d);
        std::array<int, 4> perm = {0, 1, 2, 3};
        do {
            for (int i = 0; i < rule.num_points(); ++i) {
                const auto lam = bary(rule.points[i]);
                const std::array<double, 4> plam = {lam[perm[0]], lam[perm[1]],
                                                    lam[perm[2]], lam[perm[3]]};
                // permuted point must be in the rule with the same weight
                double best = 1e30;
                double wmatch = 0.0;
                for (int j = 0; j < rule.num_points(); ++j) {
                    const auto lj = bary(rule.points[j]);
                    double dist = 0.0;
                    for (int k = 0; k < 4; ++k) dist = std::max(dist, std::abs(lj[k] - plam[k]));
                    if (dist < best) {
                        best = dist;
                        wmatch = rule.weights[j];
                    }
                }
                REQUIRE(best < 1e-12);
                REQUIRE_THAT(wmatch, WithinRel(rule.weights[i], 1e-12));
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

TEST_CASE("degree selection policy") {
    // degree 1 is the single-point centroid rule
    const QuadratureRule& r1 = rule_for_degree(1);
    REQUIRE(r1.num_points() == 1);
    CHECK_THAT(r1.points[0].x, WithinAbs(0.25, 1e-15));
    CHECK_THAT(r1.points[0].y, WithinAbs(0.25, 1e-15));
    CHECK_THAT(r1.points[0].z, WithinAbs(0.25, 1e-15));
    CHECK_THAT(r1.weights[0], WithinAbs(1.0 / 6.0, 1e-15));

    // requests above 10 clamp to the degree-10 rule
    CHECK(&rule_for_degree(14) == &rule_for_degree(10));
    CHECK(rule_for_degree(14).degree == 10);
    // degree 0 clamps up to 1
    CHECK(&rule_for_degree(0) == &rule_for_degree(1));
}

TEST_CASE("integration on physical tets") {
    const TetPoints ref = {Vec3{0, 0, 0}, Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}};

    SECTION("constants integrate to the volume on any tet") {
        std::mt19937 rng(5);
        for (int trial = 0; trial < 30; ++trial) {
            const TetPoints t = random_tet(rng);
            const double vol = std::abs(signed_tet_volume(t));
            for (int d : {1, 4, 7, 10})
                CHECK_THAT(integrate_on_tet([](Vec3) { return 1.0; }, t, rule_for_degree(d)),
                           WithinRel(vol, 1e-13));
        }
    }
    SECTION("bubble integral on the reference tet") {
        const double val = integrate_on_tet(
            [](Vec3 p) {
                const double l1 = 1.0 - p.x - p.y - p.z;
                return l1 * p.x * p.y * p.z;
            },
            ref, rule_for_degree(4));
        CHECK_THAT(val, WithinRel(1.0 / 5040.0, 1e-12));
    }
    SECTION("linear monomial") {
        CHECK_THAT(integrate_on_tet([](Vec3 p) { return p.x; }, ref, rule_for_degree(2)),
                   WithinRel(1.0 / 24.0, 1e-13));
    }
    SECTION("degenerate tet is an error") {
        const TetPoints flat = {Vec3{0, 0, 0}, Vec3{1, 0, 0}, Vec3{0, 1, 0},
                                Vec3{0.5, 0.5, 0.0}};
        CHECK_THROWS_AS(integrate_on_tet([](Vec3) { return 1.0; }, flat, rule_for_degree(2)),
                        std::domain_error);
    }
}

TEST_CASE("rule JSON dump") {
    std::ostringstream os;
    write_rule_json(rule_for_degree(1), os);
    const std::string s = os.str();
    CHECK(s.find("\"degree\": 1") != std::string::npos);
    CHECK(s.find("\"points\"") != std::string::npos);
    CHECK(s.find("\"weights\"") != std::string::npos);
}
