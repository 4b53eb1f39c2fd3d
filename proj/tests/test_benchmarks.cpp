#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "ministokes/benchmarks.hpp"
#include "ministokes/mesh.hpp"
#include "ministokes/quadrature.hpp"

using namespace ministokes;
using Catch::Matchers::WithinAbs;

namespace {

Vec3 axis_offset(int axis, double h) {
    Vec3 d{0, 0, 0};
    d[axis] = h;
    return d;
}

// second-order central differences
Vec3 fd_laplacian(const std::function<Vec3(Vec3)>& f, Vec3 x, double h) {
    Vec3 lap{0, 0, 0};
    const Vec3 fx = f(x);
    for (int a = 0; a < 3; ++a) {
        const Vec3 d = axis_offset(a, h);
        lap += (f(x + d) - 2.0 * fx + f(x - d)) / (h * h);
    }
    return lap;
}

Vec3 fd_gradient(const std::function<double(Vec3)>& f, Vec3 x, double h) {
    Vec3 g;
    for (int a = 0; a < 3; ++a) {
        const Vec3 d = axis_offset(a, h);
        g[a] = (f(x + d) - f(x - d)) / (2 * h);
    }
    return g;
}

double fd_divergence(const std::function<Vec3(Vec3)>& f, Vec3 x, double h) {
    double div = 0.0;
    for (int a = 0; a < 3; ++a) {
        const Vec3 d = axis_offset(a, h);
        div += (f(x + d)[a] - f(x - d)[a]) / (2 * h);
    }
    return div;
}

Mat3 fd_velocity_gradient(const std::function<Vec3(Vec3)>& f, Vec3 x, double h) {
    Mat3 g;
    for (int c = 0; c < 3; ++c) {
        const Vec3 d = axis_offset(c, h);
        const Vec3 col = (f(x + d) - f(x - d)) / (2 * h);
        for (int r = 0; r < 3; ++r) g[r][c] = col[r];
    }
    return g;
}

std::vector<Vec3> interior_points(int count, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(0.02, 0.98);
    std::vector<Vec3> pts(count);
    for (auto& p : pts) p = {u(rng), u(rng), u(rng)};
    return pts;
}

std::vector<Vec3> face_points(int face, int count, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const int axis = face / 2;
    const double plane = (face % 2 == 0) ? 0.0 : 1.0;
    std::vector<Vec3> pts(count);
    for (auto& p : pts) {
        p[axis] = plane;
        p[(axis + 1) % 3] = u(rng);
        p[(axis + 2) % 3] = u(rng);
    }
    return pts;
}

}  // namespace

TEST_CASE("benchmark fields satisfy the Stokes equations") {
    for (int id = 1; id <= 5; ++id) {
        DYNAMIC_SECTION("problem " << id) {
            const TestProblem p = problem(id);

            for (const Vec3 x : interior_points(220, 100 + id)) {
                // momentum: -mu lap(u) + grad(P) = rho f
                const Vec3 lap = fd_laplacian(p.exact_velocity, x, 1e-4);
                const Vec3 gp = fd_gradient(p.exact_pressure, x, 1e-4);
                const Vec3 f = p.force(x);
                const Vec3 residual = -1.0 * lap + gp - f;
                CHECK(norm(residual) < 1e-5);

                // incompressibility
                CHECK(std::abs(fd_divergence(p.exact_velocity, x, 1e-5)) < 1e-6);

                // shipped gradient vs finite differences
                const Mat3 g = p.exact_velocity_gradient(x);
                const Mat3 gfd = fd_velocity_gradient(p.exact_velocity, x, 1e-5);
                for (int r = 0; r < 3; ++r) CHECK(norm(g[r] - gfd[r]) < 1e-6);
            }
        }
    }
}

TEST_CASE("momentum balance holds for non-unit viscosity") {
    for (int id = 1; id <= 5; ++id) {
        const TestProblem p = problem(id, 2.0);
        for (const Vec3 x : interior_points(40, 200 + id)) {
            const Vec3 lap = fd_laplacian(p.exact_velocity, x, 1e-4);
            const Vec3 gp = fd_gradient(p.exact_pressure, x, 1e-4);
            const Vec3 residual = -2.0 * lap + gp - p.force(x);
            CHECK(norm(residual) < 2e-5);
        }
    }
}

TEST_CASE("boundary data agrees with the exact velocity on all six faces") {
    for (int id = 1; id <= 5; ++id) {
        const TestProblem p = problem(id);
        for (int face = 0; face < 6; ++face)
            for (const Vec3 x : face_points(face, 60, 300 + 10 * id + face)) {
                const Vec3 gd = p.boundary_velocity(x);
                const Vec3 ue = p.exact_velocity(x);
                CHECK(norm(gd - ue) < 1e-12);
            }
    }
}

TEST_CASE("problems 4 and 5 drive the flow tangentially") {
    for (int id : {4, 5}) {
        const TestProblem p = problem(id);
        for (int face = 0; face < 6; ++face) {
            const int axis = face / 2;
            for (const Vec3 x : face_points(face, 60, 400 + 10 * id + face))
                CHECK(std::abs(p.boundary_velocity(x)[axis]) < 1e-12);
        }
    }
}

TEST_CASE("exact pressures have zero mean over the cube") {
    const TetMesh mesh = generate_structured_cube_mesh(6);
    const QuadratureRule& rule = rule_for_degree(10);
    for (int id = 1; id <= 5; ++id) {
        const TestProblem p = problem(id);
        double integral = 0.0;
        for (int t = 0; t < mesh.num_tets(); ++t)
            integral += integrate_on_tet([&](Vec3 x) { return p.exact_pressure(x); },
                                         mesh.tet_points(t), rule);
        CHECK_THAT(integral, WithinAbs(0.0, 1e-8));
    }
}

TEST_CASE("spot values") {
    SECTION("problem 2 at the quarter point") {
        const TestProblem p = problem(2);
        const Vec3 u = p.exact_velocity({0.25, 0.25, 0.25});
        CHECK_THAT(u.x, WithinAbs(1.0, 1e-12));
        CHECK_THAT(u.y, WithinAbs(1.0, 1e-12));
        CHECK_THAT(u.z, WithinAbs(-2.0, 1e-12));
        CHECK_THAT(p.exact_pressure({0.25, 0.25, 0.25}), WithinAbs(0.0, 1e-12));
    }
    SECTION("problem 1 vanishes on the boundary") {
        const TestProblem p = problem(1);
        for (int face = 0; face < 6; ++face)
            for (const Vec3 x : face_points(face, 20, 500 + face))
                CHECK_THAT(norm(p.exact_velocity(x)), WithinAbs(0.0, 1e-15));
    }
    SECTION("problem 5 pressure at the center") {
        CHECK_THAT(problem(5).exact_pressure({0.5, 0.5, 0.5}), WithinAbs(0.0, 1e-12));
    }
    SECTION("problem 4 lid velocity at the face center is zero") {
        const Vec3 gd = problem(4).boundary_velocity({0.5, 0.5, 1.0});
        CHECK_THAT(gd.x, WithinAbs(0.0, 1e-15));
        CHECK_THAT(gd.y, WithinAbs(0.0, 1e-15));
        CHECK_THAT(gd.z, WithinAbs(0.0, 1e-15));
    }
    SECTION("problem 4 bottom face is at rest") {
        const TestProblem p = problem(4);
        for (const Vec3 x : face_points(4, 20, 600))  // z = 0 face
            CHECK_THAT(norm(p.boundary_velocity(x)), WithinAbs(0.0, 1e-15));
    }
}

TEST_CASE("invalid problem id") {
    CHECK_THROWS_AS(problem(0), std::invalid_argument);
    CHECK_THROWS_AS(problem(7), std::invalid_argument);
}

TEST_CASE("boundary field sampling") {
    const TestProblem p = problem(5);
    const auto samples = sample_boundary_field(p, CubeFace::zmax, 10);
    REQUIRE(samples.size() == 11 * 11);
    for (const auto& s : samples) {
        CHECK(s.position.z == 1.0);
        CHECK(std::abs(s.normal_component) < 1e-12);
        const Vec3 expected = p.boundary_velocity(s.position);
        CHECK(norm(s.velocity - expected) < 1e-15);
    }

    const auto bottom = sample_boundary_field(problem(4), CubeFace::zmin, 4);
    for (const auto& s : bottom) CHECK(norm(s.velocity) == 0.0);

    std::ostringstream os;
    write_boundary_field_csv(samples, os);
    CHECK(os.str().rfind("x,y,z,vx,vy,vz\n", 0) == 0);

    CHECK(parse_cube_face("top") == CubeFace::zmax);
    CHECK(parse_cube_face("x0") == CubeFace::xmin);
    CHECK_THROWS_AS(parse_cube_face("north"), std::invalid_argument);
}
