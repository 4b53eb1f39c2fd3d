#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "ministokes/benchmarks.hpp"
#include "ministokes/element.hpp"
#include "ministokes/krylov.hpp"
#include "ministokes/mesh.hpp"

namespace ministokes {

/// Global DOF layout: vertex velocities (x,y,z per vertex), then bubble
/// velocities (x,y,z per tet), then vertex pressures, then the single
/// Lagrange multiplier enforcing zero pressure mean.
struct DofMap {
    int num_vertices = 0;
    int num_tets = 0;

    int dim() const { return 4 * num_vertices + 3 * num_tets + 1; }
    int velocity_dof(int vertex, int comp) const { return 3 * vertex + comp; }
    int bubble_dof(int tet, int comp) const { return 3 * num_vertices + 3 * tet + comp; }
    int pressure_dof(int vertex) const {
        return 3 * num_vertices + 3 * num_tets + vertex;
    }
    int multiplier_dof() const { return dim() - 1; }
};

inline DofMap build_dof_map(const TetMesh& mesh) {
    return {mesh.num_vertices(), mesh.num_tets()};
}

/// Symmetric indefinite saddle-point system
///   [ A   B^T  0 ] [u]   [F]
///   [ B   0    m ] [P] = [0]
///   [ 0   m^T  0 ] [l]   [0]
/// with A the component-wise vector Laplacian over the MINI space, B the
/// pressure-velocity coupling and m_j = int phi_j the zero-mean constraint.
struct SaddleSystem {
    SparseMatrix matrix;
    std::vector<double> rhs;
    DofMap dof_map;
    std::vector<char> constrained;       // per dof, set by apply_dirichlet
    std::vector<double> dirichlet_value; // valid where constrained
};

namespace detail {

inline constexpr int kStiffnessDegree = 6;   // grad(b).grad(b) is degree 6
inline constexpr int kDivergenceDegree = 4;  // phi_k * d(b) is degree 4

inline SparseMatrix assemble_matrix(const TetMesh& mesh, const DofMap& dm, double mu) {
    const auto& rule_k = rule_for_degree(kStiffnessDegree);
    const auto& rule_b = rule_for_degree(kDivergenceDegree);
    std::vector<Triplet> trip;
    trip.reserve(static_cast<std::size_t>(mesh.num_tets()) * 180);

    for (int t = 0; t < mesh.num_tets(); ++t) {
        const auto pts = mesh.tet_points(t);
        const auto& tet = mesh.tets[t];
        const auto k_loc = local_stiffness(pts, mu, rule_k);
        const auto b_loc = local_divergence(pts, rule_b);
        const double vol = signed_tet_volume(pts);

        int vdof[3][5];
        for (int c = 0; c < 3; ++c) {
            for (int i = 0; i < 4; ++i) vdof[c][i] = dm.velocity_dof(tet[i], c);
            vdof[c][4] = dm.bubble_dof(t, c);
        }

        for (int c = 0; c < 3; ++c) {
            for (int i = 0; i < 5; ++i)
                for (int j = 0; j < 5; ++j)
                    if (k_loc[i][j] != 0.0)
                        trip.push_back({vdof[c][i], vdof[c][j], k_loc[i][j]});
            for (int k = 0; k < 4; ++k) {
                const int pdof = dm.pressure_dof(tet[k]);
                for (int i = 0; i < 5; ++i) {
                    const double v = b_loc[c][k][i];
                    trip.push_back({pdof, vdof[c][i], v});
                    trip.push_back({vdof[c][i], pdof, v});
                }
            }
        }
        const int mdof = dm.multiplier_dof();
        for (int k = 0; k < 4; ++k) {
            const int pdof = dm.pressure_dof(tet[k]);
            trip.push_back({mdof, pdof, vol / 4.0});
            trip.push_back({pdof, mdof, vol / 4.0});
        }
    }
    return csr_from_triplets(dm.dim(), std::move(trip));
}

inline std::vector<double> assemble_rhs(const TetMesh& mesh, const DofMap& dm,
                                        const TestProblem& problem, double rho,
                                        int load_degree) {
    const auto& rule = rule_for_degree(load_degree);
    std::vector<double> rhs(dm.dim(), 0.0);
    for (int t = 0; t < mesh.num_tets(); ++t) {
        const auto pts = mesh.tet_points(t);
        const auto& tet = mesh.tets[t];
        for (int c = 0; c < 3; ++c) {
            const auto load = local_load(
                pts, [&](Vec3 x) { return problem.force(x)[c]; }, rho, rule);
            for (int i = 0; i < 4; ++i) rhs[dm.velocity_dof(tet[i], c)] += load[i];
            rhs[dm.bubble_dof(t, c)] += load[4];
        }
    }
    return rhs;
}

}  // namespace detail

/// Global system before boundary conditions. Loads use the degree-10 rule
/// (the benchmark forcings are not polynomial).
inline SaddleSystem assemble(const TetMesh& mesh, const TestProblem& problem, double mu,
                             double rho = 1.0, int load_degree = 10) {
    SaddleSystem sys;
    sys.dof_map = build_dof_map(mesh);
    sys.matrix = detail::assemble_matrix(mesh, sys.dof_map, mu);
    sys.rhs = detail::assemble_rhs(mesh, sys.dof_map, problem, rho, load_degree);
    return sys;
}

/// Symmetric elimination of the velocity DOFs at boundary vertices: for each
/// constrained DOF k with value g, rhs -= column_k * g, row k and column k
/// are zeroed, the diagonal is set to 1 and rhs_k = g. Bubble DOFs vanish on
/// element boundaries and stay unconstrained. Stored zeros created by the
/// elimination are compressed away.
inline void apply_dirichlet(SaddleSystem& sys, const TetMesh& mesh,
                            const std::function<Vec3(Vec3)>& boundary_velocity) {
    const DofMap& dm = sys.dof_map;
    sys.constrained.assign(dm.dim(), 0);
    sys.dirichlet_value.assign(dm.dim(), 0.0);
    for (int v : mesh.boundary_vertices) {
        const Vec3 g = boundary_velocity(mesh.vertices[v]);
        for (int c = 0; c < 3; ++c) {
            const int dof = dm.velocity_dof(v, c);
            sys.constrained[dof] = 1;
            sys.dirichlet_value[dof] = g[c];
        }
    }

    SparseMatrix& m = sys.matrix;
    SparseMatrix out;
    out.n = m.n;
    out.row_ptr.assign(1, 0);
    out.col.reserve(m.nnz());
    out.val.reserve(m.nnz());
    for (int i = 0; i < m.n; ++i) {
        if (sys.constrained[i]) {
            out.col.push_back(i);
            out.val.push_back(1.0);
            sys.rhs[i] = sys.dirichlet_value[i];
        } else {
            for (int k = m.row_ptr[i]; k < m.row_ptr[i + 1]; ++k) {
                const int j = m.col[k];
                if (sys.constrained[j]) {
                    sys.rhs[i] -= m.val[k] * sys.dirichlet_value[j];
                } else {
                    out.col.push_back(j);
                    out.val.push_back(m.val[k]);
                }
            }
        }
        out.row_ptr.push_back(static_cast<int>(out.col.size()));
    }
    sys.matrix = std::move(out);
}

}  // namespace ministokes
