#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <map>

#include "ministokes/analysis.hpp"
#include "ministokes/assembly.hpp"
#include "ministokes/benchmarks.hpp"
#include "ministokes/study.hpp"

using namespace ministokes;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

double max_asymmetry(const SparseMatrix& m) {
    std::map<std::pair<int, int>, double> entries;
    for (int i = 0; i < m.n; ++i)
        for (int k = m.row_ptr[i]; k < m.row_ptr[i + 1]; ++k)
            entries[{i, m.col[k]}] = m.val[k];
    double worst = 0.0;
    for (const auto& [ij, v] : entries) {
        const auto it = entries.find({ij.second, ij.first});
        const double vt = it == entries.end() ? 0.0 : it->second;
        worst = std::max(worst, std::abs(v - vt));
    }
    return worst;
}

double max_abs(const SparseMatrix& m) {
    double worst = 0.0;
    for (double v : m.val) worst = std::max(worst, std::abs(v));
    return worst;
}

TestProblem zero_problem() {
    TestProblem p;
    p.id = 0;
    p.force = [](Vec3) -> Vec3 { return {0, 0, 0}; };
    p.boundary_velocity = [](Vec3) -> Vec3 { return {0, 0, 0}; };
    p.exact_velocity = p.boundary_velocity;
    p.exact_velocity_gradient = [](Vec3) -> Mat3 {
        return {Vec3{0, 0, 0}, Vec3{0, 0, 0}, Vec3{0, 0, 0}};
    };
    p.exact_pressure = [](Vec3) { return 0.0; };
    return p;
}

// pressure-gradient forcing with zero velocity: the exact solution
// (u, P) = (0, 0.01(x+y+z-1.5)) lies in the MINI space on any mesh
TestProblem linear_pressure_patch_problem() {
    TestProblem p = zero_problem();
    p.force = [](Vec3) -> Vec3 { return {0.01, 0.01, 0.01}; };
    p.exact_pressure = [](Vec3 v) { return 0.01 * (v.x + v.y + v.z - 1.5); };
    return p;
}

}  // namespace

TEST_CASE("dof map dimensions and layout") {
    const TetMesh single = make_mesh(
        {Vec3{0, 0, 0}, Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}}, {{{0, 1, 2, 3}}});
    CHECK(build_dof_map(single).dim() == 20);  // 12 + 3 + 4 + 1

    const DofMap dm1 = build_dof_map(generate_structured_cube_mesh(1));
    CHECK(dm1.dim() == 4 * 8 + 3 * 6 + 1);  // 51

    const DofMap dm2 = build_dof_map(generate_structured_cube_mesh(2));
    CHECK(dm2.dim() == 4 * 27 + 3 * 48 + 1);  // 253

    // bijection onto 0..dim-1: velocities, then bubbles, then pressures,
    // then the multiplier
    std::vector<char> seen(dm1.dim(), 0);
    for (int v = 0; v < 8; ++v)
        for (int c = 0; c < 3; ++c) seen[dm1.velocity_dof(v, c)] = 1;
    for (int t = 0; t < 6; ++t)
        for (int c = 0; c < 3; ++c) seen[dm1.bubble_dof(t, c)] = 1;
    for (int v = 0; v < 8; ++v) seen[dm1.pressure_dof(v)] = 1;
    seen[dm1.multiplier_dof()] = 1;
    for (char s : seen) CHECK(s == 1);
    CHECK(dm1.multiplier_dof() == dm1.dim() - 1);
}

TEST_CASE("assembled system structure") {
    const TetMesh mesh = generate_structured_cube_mesh(2);
    SaddleSystem sys = assemble(mesh, problem(1), 1.0);
    const DofMap& dm = sys.dof_map;

    SECTION("matrix is symmetric") {
        CHECK(max_asymmetry(sys.matrix) <= 1e-13 * max_abs(sys.matrix));
    }
    SECTION("pressure-pressure block is empty") {
        for (int v = 0; v < mesh.num_vertices(); ++v) {
            const int row = dm.pressure_dof(v);
            for (int k = sys.matrix.row_ptr[row]; k < sys.matrix.row_ptr[row + 1]; ++k) {
                const int col = sys.matrix.col[k];
                const bool is_pressure = col >= dm.pressure_dof(0) && col < dm.multiplier_dof();
                CHECK_FALSE(is_pressure);
            }
        }
    }
    SECTION("multiplier row holds the pressure volume weights") {
        const int row = dm.multiplier_dof();
        double sum = 0.0;
        for (int k = sys.matrix.row_ptr[row]; k < sys.matrix.row_ptr[row + 1]; ++k) {
            CHECK(sys.matrix.col[k] >= dm.pressure_dof(0));
            sum += sys.matrix.val[k];
        }
        CHECK_THAT(sum, WithinAbs(1.0, 1e-13));  // partition of unity over unit volume
        CHECK(sys.rhs[row] == 0.0);
    }
    SECTION("pressure and multiplier rows of the rhs are zero") {
        for (int v = 0; v < mesh.num_vertices(); ++v) CHECK(sys.rhs[dm.pressure_dof(v)] == 0.0);
    }
}

TEST_CASE("dirichlet elimination") {
    const TetMesh mesh = generate_structured_cube_mesh(2);
    const TestProblem p = problem(5);
    SaddleSystem sys = assemble(mesh, p, 1.0);
    apply_dirichlet(sys, mesh, p.boundary_velocity);
    const DofMap& dm = sys.dof_map;

    SECTION("matrix stays symmetric") {
        CHECK(max_asymmetry(sys.matrix) <= 1e-13 * max_abs(sys.matrix));
    }
    SECTION("constrained rows become identity rows with the data in the rhs") {
        for (int v : mesh.boundary_vertices) {
            const Vec3 g = p.boundary_velocity(mesh.vertices[v]);
            for (int c = 0; c < 3; ++c) {
                const int dof = dm.velocity_dof(v, c);
                REQUIRE(sys.matrix.row_ptr[dof + 1] - sys.matrix.row_ptr[dof] == 1);
                CHECK(sys.matrix.col[sys.matrix.row_ptr[dof]] == dof);
                CHECK(sys.matrix.val[sys.matrix.row_ptr[dof]] == 1.0);
                CHECK(sys.rhs[dof] == g[c]);
            }
        }
    }
    SECTION("solved boundary values equal the data exactly") {
        const IluFactors f = ilu_factorize(sys.matrix, 1e-4);
        auto [x, stats] = gmres(sys.matrix, sys.rhs, &f, 1e-9, 300);
        REQUIRE(stats.converged);
        int checked = 0;
        for (int v : mesh.boundary_vertices) {
            const Vec3 g = p.boundary_velocity(mesh.vertices[v]);
            for (int c = 0; c < 3; ++c) {
                CHECK_THAT(x[dm.velocity_dof(v, c)], WithinAbs(g[c], 1e-12));
                ++checked;
            }
        }
        CHECK(checked == 3 * 26);
    }
}

TEST_CASE("zero data produces the zero solution") {
    const TetMesh mesh = generate_structured_cube_mesh(2);
    const TestProblem p = zero_problem();
    SaddleSystem sys = assemble(mesh, p, 1.0);
    apply_dirichlet(sys, mesh, p.boundary_velocity);
    const IluFactors f = ilu_factorize(sys.matrix, 1e-4);
    auto [x, stats] = gmres(sys.matrix, sys.rhs, &f, 1e-9, 100);
    CHECK(stats.converged);
    for (double v : x) CHECK_THAT(v, WithinAbs(0.0, 1e-12));
}

TEST_CASE("solved system satisfies the discrete constraints") {
    const TetMesh mesh = generate_structured_cube_mesh(2);
    const TestProblem p = problem(1);
    SaddleSystem sys = assemble(mesh, p, 1.0);
    apply_dirichlet(sys, mesh, p.boundary_velocity);
    const IluFactors f = ilu_factorize(sys.matrix, 1e-4);
    auto [x, stats] = gmres(sys.matrix, sys.rhs, &f, 1e-9, 300);
    REQUIRE(stats.converged);
    const DofMap& dm = sys.dof_map;
    const StokesSolution sol = extract_solution(mesh, dm, x);

    SECTION("discrete zero pressure mean") {
        double msum = 0.0, pnorm = 0.0;
        for (int t = 0; t < mesh.num_tets(); ++t) {
            const double vol = std::abs(signed_tet_volume(mesh.tet_points(t)));
            for (int k = 0; k < 4; ++k)
                msum += vol / 4.0 * sol.vertex_pressure[mesh.tets[t][k]];
        }
        for (double pv : sol.vertex_pressure) pnorm += pv * pv;
        pnorm = std::sqrt(pnorm);
        CHECK(std::abs(msum) <= 1e-9 * pnorm);
    }

    SECTION("discrete divergence orthogonality") {
        // b(u_h, q_k) recomputed from the local blocks, per pressure vertex
        std::vector<double> residual(mesh.num_vertices(), 0.0);
        const auto& rule = rule_for_degree(4);
        for (int t = 0; t < mesh.num_tets(); ++t) {
            const auto blocks = local_divergence(mesh.tet_points(t), rule);
            const auto& tet = mesh.tets[t];
            for (int k = 0; k < 4; ++k)
                for (int c = 0; c < 3; ++c) {
                    for (int i = 0; i < 4; ++i)
                        residual[tet[k]] +=
                            blocks[c][k][i] * sol.vertex_velocity[tet[i]][c];
                    residual[tet[k]] += blocks[c][k][4] * sol.bubble_velocity[t][c];
                }
        }
        double unorm = 0.0;
        for (const Vec3& v : sol.vertex_velocity) unorm += norm2(v);
        for (const Vec3& v : sol.bubble_velocity) unorm += norm2(v);
        unorm = std::sqrt(unorm);
        for (int v = 0; v < mesh.num_vertices(); ++v)
            CHECK(std::abs(residual[v]) <= 1e-8 * std::max(unorm, 1.0));
    }
}

TEST_CASE("pressure patch test: linear pressure is reproduced") {
    const TestProblem p = linear_pressure_patch_problem();
    for (int n : {2, 3}) {
        const TetMesh mesh = generate_structured_cube_mesh(n);
        SaddleSystem sys = assemble(mesh, p, 1.0);
        apply_dirichlet(sys, mesh, p.boundary_velocity);
        const IluFactors f = ilu_factorize(sys.matrix, 1e-4);
        auto [x, stats] = gmres(sys.matrix, sys.rhs, &f, 1e-11, 400);
        REQUIRE(stats.converged);
        const StokesSolution sol = extract_solution(mesh, sys.dof_map, x);

        const ScalarField ph = pressure_field(sol);
        const ScalarField pe = {[&](int, Vec3 v) { return p.exact_pressure(v); }, nullptr};
        CHECK(l2_norm_error(ph, pe, mesh) < 1e-8);

        // and the velocity stays numerically zero
        double umax = 0.0;
        for (const Vec3& v : sol.vertex_velocity) umax = std::max(umax, norm(v));
        for (const Vec3& v : sol.bubble_velocity) umax = std::max(umax, norm(v));
        CHECK(umax < 1e-8);
    }
}

TEST_CASE("matrix export in coordinate format") {
    const TetMesh mesh = generate_structured_cube_mesh(1);
    SaddleSystem sys = assemble(mesh, problem(1), 1.0);
    std::stringstream ss;
    write_coordinate(sys.matrix, ss);
    const SparseMatrix back = read_coordinate(ss);
    REQUIRE(back.n == sys.matrix.n);
    REQUIRE(back.nnz() == sys.matrix.nnz());
    for (std::size_t k = 0; k < back.nnz(); ++k) CHECK(back.val[k] == sys.matrix.val[k]);
}
