#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <sstream>

#include <json.hpp>

#include "ministokes/analysis.hpp"
#include "ministokes/study.hpp"

using namespace ministokes;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

StokesSolution random_solution(const TetMesh& mesh, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    StokesSolution s;
    s.mesh = &mesh;
    s.vertex_velocity.resize(mesh.num_vertices());
    s.bubble_velocity.resize(mesh.num_tets());
    s.vertex_pressure.resize(mesh.num_vertices());
    for (auto& v : s.vertex_velocity) v = {u(rng), u(rng), u(rng)};
    for (auto& v : s.bubble_velocity) v = {u(rng), u(rng), u(rng)};
    for (auto& p : s.vertex_pressure) p = u(rng);
    return s;
}

VectorField constant_field(Vec3 value) {
    return {[value](int, Vec3) { return value; },
            [](int, Vec3) -> Mat3 { return {Vec3{0, 0, 0}, Vec3{0, 0, 0}, Vec3{0, 0, 0}}; }};
}

}  // namespace

TEST_CASE("nodal interpolant reproduces linear fields") {
    const TetMesh mesh = generate_structured_cube_mesh(2);
    const auto linear = [](Vec3 v) -> Vec3 {
        return {1.0 + 2.0 * v.x - v.y, 0.5 * v.z + v.x, -v.x + 3.0 * v.y - 2.0 * v.z};
    };
    const VectorField interp = nodal_interpolant(linear, mesh);

    std::mt19937 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        // pick a random tet and a random point inside it
        const int t = static_cast<int>(u(rng) * mesh.num_tets()) % mesh.num_tets();
        double a = u(rng), b = u(rng), c = u(rng);
        const double s = a + b + c + 1.0;
        a /= s; b /= s; c /= s;
        const auto pts = mesh.tet_points(t);
        const Vec3 x = pts[0] + a * (pts[1] - pts[0]) + b * (pts[2] - pts[0]) +
                       c * (pts[3] - pts[0]);
        CHECK(norm(interp.value(t, x) - linear(x)) < 1e-13);
    }
}

TEST_CASE("scalar interpolant is exact for the linear benchmark pressure") {
    const TetMesh mesh = generate_structured_cube_mesh(2);
    const TestProblem p = problem(1);  // globally linear pressure
    const ScalarField jh = nodal_interpolant_scalar(p.exact_pressure, mesh);
    const ScalarField exact = exact_pressure_field(p);
    CHECK(l2_norm_error(jh, exact, mesh) < 1e-10);
}

TEST_CASE("interpolation error is positive for non-linear fields") {
    const TetMesh mesh = generate_structured_cube_mesh(2);
    const TestProblem p = problem(2);
    const VectorField ih = nodal_interpolant(p.exact_velocity, mesh);
    const VectorField exact = exact_field(p);
    CHECK(l2_norm_error(ih, exact, mesh) > 1e-2);
}

TEST_CASE("norm reference values on the unit cube") {
    const TetMesh mesh = generate_structured_cube_mesh(2);
    const VectorField zero = constant_field({0, 0, 0});

    SECTION("constant one") {
        const VectorField one = constant_field({1, 0, 0});
        CHECK_THAT(l2_norm_error(one, zero, mesh), WithinRel(1.0, 1e-13));
        CHECK_THAT(h1_norm_error(one, zero, mesh), WithinRel(1.0, 1e-13));
    }
    SECTION("the coordinate function x") {
        const VectorField fx = {[](int, Vec3 v) -> Vec3 { return {v.x, 0, 0}; },
                                [](int, Vec3) -> Mat3 {
                                    return {Vec3{1, 0, 0}, Vec3{0, 0, 0}, Vec3{0, 0, 0}};
                                }};
        CHECK_THAT(l2_norm_error(fx, zero, mesh), WithinRel(1.0 / std::sqrt(3.0), 1e-13));
        // full H1 norm: sqrt(1/3 + 1)
        CHECK_THAT(h1_norm_error(fx, zero, mesh), WithinRel(std::sqrt(4.0 / 3.0), 1e-13));
    }
    SECTION("identical fields have zero distance") {
        const TestProblem p = problem(3);
        const VectorField a = exact_field(p), b = exact_field(p);
        CHECK(l2_norm_error(a, b, mesh) == 0.0);
        CHECK(h1_norm_error(a, b, mesh) == 0.0);
    }
}

TEST_CASE("norm axioms on FE fields") {
    const TetMesh mesh = generate_structured_cube_mesh(2);
    const StokesSolution s1 = random_solution(mesh, 11);
    const StokesSolution s2 = random_solution(mesh, 12);
    const StokesSolution s3 = random_solution(mesh, 13);
    const VectorField a = full_velocity_field(s1);
    const VectorField b = full_velocity_field(s2);
    const VectorField c = full_velocity_field(s3);
    const VectorField zero = constant_field({0, 0, 0});

    // triangle inequality
    CHECK(l2_norm_error(a, c, mesh) <=
          l2_norm_error(a, b, mesh) + l2_norm_error(b, c, mesh) + 1e-12);
    CHECK(h1_norm_error(a, c, mesh) <=
          h1_norm_error(a, b, mesh) + h1_norm_error(b, c, mesh) + 1e-12);

    // homogeneity: scale the coefficients
    StokesSolution scaled = s1;
    for (auto& v : scaled.vertex_velocity) v = 2.5 * v;
    for (auto& v : scaled.bubble_velocity) v = 2.5 * v;
    CHECK_THAT(l2_norm_error(full_velocity_field(scaled), zero, mesh),
               WithinRel(2.5 * l2_norm_error(a, zero, mesh), 1e-12));
}

TEST_CASE("velocity split") {
    const TetMesh mesh = generate_structured_cube_mesh(2);
    const StokesSolution sol = random_solution(mesh, 21);
    const auto [u_hl, u_hb] = split_velocity(sol);
    const VectorField u_h = full_velocity_field(sol);

    SECTION("parts sum to the whole at quadrature points") {
        const auto& rule = rule_for_degree(4);
        for (int t = 0; t < mesh.num_tets(); ++t) {
            const auto pts = mesh.tet_points(t);
            for (int q = 0; q < rule.num_points(); ++q) {
                const Vec3 p = rule.points[q];
                const Vec3 x = pts[0] + p.x * (pts[1] - pts[0]) + p.y * (pts[2] - pts[0]) +
                               p.z * (pts[3] - pts[0]);
                CHECK(norm(u_h.value(t, x) - (u_hl.value(t, x) + u_hb.value(t, x))) < 1e-14);
            }
        }
    }
    SECTION("bubbles vanish at vertices") {
        for (int t = 0; t < std::min(mesh.num_tets(), 8); ++t)
            for (int k = 0; k < 4; ++k) {
                const Vec3 x = mesh.vertices[mesh.tets[t][k]];
                CHECK(norm(u_hb.value(t, x)) < 1e-13);
                CHECK(norm(u_h.value(t, x) - u_hl.value(t, x)) < 1e-13);
                // the linear part at a vertex is its coefficient
                CHECK(norm(u_hl.value(t, x) - sol.vertex_velocity[mesh.tets[t][k]]) < 1e-12);
            }
    }
    SECTION("bubble value at the centroid is coefficient / 256") {
        const auto pts = mesh.tet_points(0);
        const Vec3 centroid = 0.25 * (pts[0] + pts[1] + pts[2] + pts[3]);
        CHECK(norm(u_hb.value(0, centroid) - (1.0 / 256.0) * sol.bubble_velocity[0]) < 1e-14);
    }
    SECTION("zero bubble coefficients make u_h linear") {
        StokesSolution nolift = sol;
        for (auto& v : nolift.bubble_velocity) v = {0, 0, 0};
        const VectorField whole = full_velocity_field(nolift);
        const VectorField lin = linear_velocity_field(nolift);
        CHECK(l2_norm_error(whole, lin, mesh, rule_for_degree(4)) < 1e-13);
    }
}

TEST_CASE("divergence of FE fields") {
    const TetMesh mesh = generate_structured_cube_mesh(2);

    SECTION("constant field") {
        StokesSolution s;
        s.mesh = &mesh;
        s.vertex_velocity.assign(mesh.num_vertices(), Vec3{3, -1, 2});
        s.bubble_velocity.assign(mesh.num_tets(), Vec3{0, 0, 0});
        s.vertex_pressure.assign(mesh.num_vertices(), 0.0);
        CHECK(divergence_l2(linear_velocity_field(s), mesh) < 1e-13);
    }
    SECTION("divergence-free linear field (x, -y, 0)") {
        const VectorField ih = nodal_interpolant(
            [](Vec3 v) -> Vec3 { return {v.x, -v.y, 0.0}; }, mesh);
        CHECK(divergence_l2(ih, mesh) < 1e-13);
    }
    SECTION("unit-divergence field (x, 0, 0)") {
        const VectorField ih = nodal_interpolant(
            [](Vec3 v) -> Vec3 { return {v.x, 0.0, 0.0}; }, mesh);
        CHECK_THAT(divergence_l2(ih, mesh), WithinRel(1.0, 1e-12));
    }
}

TEST_CASE("convergence rate fitting") {
    CHECK_THAT(convergence_rate({0.4, 0.2, 0.1}, {0.16, 0.04, 0.01}), WithinAbs(2.0, 1e-12));
    CHECK_THAT(convergence_rate({0.4, 0.2, 0.1}, {0.3, 0.3, 0.3}), WithinAbs(0.0, 1e-12));
    CHECK_THAT(convergence_rate({0.4, 0.2}, {0.08, 0.02 * std::sqrt(2.0)}),
               WithinAbs(1.5, 1e-12));
    CHECK_THROWS_AS(convergence_rate({0.4}, {0.1}), std::invalid_argument);
    CHECK_THROWS_AS(convergence_rate({0.4, -0.2}, {0.1, 0.2}), std::invalid_argument);
    CHECK_THROWS_AS(convergence_rate({0.4, 0.2}, {0.1, 0.0}), std::invalid_argument);
}

TEST_CASE("study cell norms agree with the generic operations") {
    const TetMesh mesh = generate_structured_cube_mesh(2);
    const TestProblem p = problem(1);
    const SolverParams params;
    auto [sol, cell] = solve_cell(mesh, p, 1.0, params);
    REQUIRE(cell.converged);

    const VectorField u_ex = exact_field(p);
    const VectorField u_h = full_velocity_field(sol);
    const VectorField u_hl = linear_velocity_field(sol);
    const VectorField ih = nodal_interpolant(p.exact_velocity, mesh);
    const ScalarField p_ex = exact_pressure_field(p);
    const ScalarField p_h = pressure_field(sol);

    CHECK_THAT(cell.err_u_l2, WithinRel(l2_norm_error(u_ex, u_h, mesh), 1e-11));
    CHECK_THAT(cell.err_u_h1, WithinRel(h1_norm_error(u_ex, u_h, mesh), 1e-11));
    CHECK_THAT(cell.err_p_l2, WithinRel(l2_norm_error(p_ex, p_h, mesh), 1e-11));
    CHECK_THAT(cell.err_ihu_uhl_l2, WithinRel(l2_norm_error(ih, u_hl, mesh), 1e-11));
    CHECK_THAT(cell.err_ihu_uhl_h1, WithinRel(h1_norm_error(ih, u_hl, mesh), 1e-11));
    CHECK_THAT(cell.err_u_uhl_l2, WithinRel(l2_norm_error(u_ex, u_hl, mesh), 1e-11));
    CHECK_THAT(cell.err_u_uhl_h1, WithinRel(h1_norm_error(u_ex, u_hl, mesh), 1e-11));
    CHECK_THAT(cell.div_uh_l2, WithinRel(divergence_l2(u_h, mesh), 1e-11));
    CHECK_THAT(cell.div_uhl_l2, WithinRel(divergence_l2(u_hl, mesh), 1e-11));
}

TEST_CASE("pressure error chain obeys the triangle inequality numerically") {
    const TetMesh mesh = generate_structured_cube_mesh(2);
    const TestProblem p = problem(2);
    auto [sol, cell] = solve_cell(mesh, p, 1.0, SolverParams{});
    REQUIRE(cell.converged);
    const ScalarField p_ex = exact_pressure_field(p);
    const ScalarField p_h = pressure_field(sol);
    const ScalarField jh = nodal_interpolant_scalar(p.exact_pressure, mesh);
    const double lhs = l2_norm_error(p_ex, p_h, mesh);
    const double mid = l2_norm_error(p_h, jh, mesh);
    const double rhs = l2_norm_error(jh, p_ex, mesh);
    CHECK(lhs <= mid + rhs + 1e-10);
}

TEST_CASE("small end-to-end study") {
    const TetMesh m2 = generate_structured_cube_mesh(2);
    const TetMesh m3 = generate_structured_cube_mesh(3);
    const std::vector<const TetMesh*> meshes = {&m2, &m3};
    const ConvergenceReport report = run_study({1, 4}, meshes, 1.0, SolverParams{}, 1);

    REQUIRE(report.cells.size() == 4);
    REQUIRE(report.rates.size() == 2);
    for (const auto& c : report.cells) {
        CHECK(c.converged);
        CHECK(c.residual <= 1e-9);
        CHECK(c.err_u_l2 > 0.0);
        CHECK(c.ratio_div > 0.0);
        CHECK(c.pressure_mean_abs <= 1e-9 * std::max(c.pressure_norm, 1e-30));
    }
    // cells are problem-major, mesh order within
    CHECK(report.cells[0].problem_id == 1);
    CHECK(report.cells[0].mesh_index == 0);
    CHECK(report.cells[1].mesh_index == 1);
    CHECK(report.cells[2].problem_id == 4);
    for (const auto& r : report.rates) {
        CHECK(r.complete);
        for (double v : r.rates) CHECK(std::isfinite(v));
    }

    SECTION("rate fitting matches a direct computation") {
        const auto& c0 = report.cells[0];
        const auto& c1 = report.cells[1];
        const double direct =
            convergence_rate({c0.h, c1.h}, {c0.err_u_l2, c1.err_u_l2});
        CHECK_THAT(report.rates[0].rates[0], WithinAbs(direct, 1e-12));
    }

    SECTION("serialization round trips") {
        std::ostringstream csv;
        write_report_csv(report, "{\"test\": true}", csv);
        int data_rows = 0, rate_rows = 0;
        std::istringstream lines(csv.str());
        std::string line;
        while (std::getline(lines, line)) {
            if (line.rfind("rates,", 0) == 0 && line.find("problem") == std::string::npos)
                ++rate_rows;
            else if (!line.empty() && std::isdigit(static_cast<unsigned char>(line[0])))
                ++data_rows;
        }
        CHECK(data_rows == 4);
        CHECK(rate_rows == 2);

        std::ostringstream js;
        write_report_json(report, "{\"test\": true}", js);
        const auto parsed = nlohmann::json::parse(js.str());
        CHECK(parsed["cells"].size() == 4);
        CHECK(parsed["rates"].size() == 2);
        CHECK(parsed["config"]["test"] == true);
        CHECK(parsed["cells"][0]["problem"] == 1);
        CHECK(parsed["cells"][0]["err_u_l2"].is_number());
    }

    SECTION("parallel study gives identical results") {
        const ConvergenceReport par = run_study({1, 4}, meshes, 1.0, SolverParams{}, 2);
        REQUIRE(par.cells.size() == report.cells.size());
        for (std::size_t i = 0; i < par.cells.size(); ++i) {
            CHECK(par.cells[i].err_u_l2 == report.cells[i].err_u_l2);
            CHECK(par.cells[i].residual == report.cells[i].residual);
            CHECK(par.cells[i].iterations == report.cells[i].iterations);
        }
    }

    CHECK_THROWS_AS(run_study({1}, {&m2}, 1.0, SolverParams{}, 1), std::invalid_argument);
}
