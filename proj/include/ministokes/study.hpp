#pragma once

#include <array>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "ministokes/analysis.hpp"
#include "ministokes/assembly.hpp"
#include "ministokes/benchmarks.hpp"
#include "ministokes/krylov.hpp"
#include "ministokes/mesh.hpp"

namespace ministokes {

struct SolverParams {
    double drop_tol = 1e-4;
    double rtol = 1e-9;
    int max_iter = 500;
};

/// One (problem, mesh) cell of the study: solver diagnostics, the nine error
/// norms and the three bubble-vs-linear ratios.
struct StudyCell {
    int problem_id = 0;
    int mesh_index = 0;
    double h = 0.0;
    int num_vertices = 0;
    int num_tets = 0;
    int dim = 0;
    int iterations = 0;
    double residual = 0.0;
    bool converged = false;
    double err_u_l2 = 0.0, err_u_h1 = 0.0, err_p_l2 = 0.0;
    double err_ihu_uhl_l2 = 0.0, err_ihu_uhl_h1 = 0.0;
    double err_u_uhl_l2 = 0.0, err_u_uhl_h1 = 0.0;
    double div_uh_l2 = 0.0, div_uhl_l2 = 0.0;
    double ratio_h1 = 0.0, ratio_l2 = 0.0, ratio_div = 0.0;
    double pressure_mean_abs = 0.0;  // |m^T P_h|
    double pressure_norm = 0.0;      // Euclidean norm of the pressure DOFs
};

/// Fitted rates per problem, in the fixed order: u L2, u H1, P L2,
/// (i_h u - u_hl) L2, (i_h u - u_hl) H1, (u - u_hl) L2, (u - u_hl) H1.
struct RateRow {
    int problem_id = 0;
    bool complete = false;  // every cell of the problem converged
    std::array<double, 7> rates{};
};

inline constexpr std::array<const char*, 7> kRateNames = {
    "rate_u_l2",       "rate_u_h1",       "rate_p_l2",   "rate_ihu_uhl_l2",
    "rate_ihu_uhl_h1", "rate_u_uhl_l2",   "rate_u_uhl_h1"};

struct ConvergenceReport {
    std::vector<StudyCell> cells;  // problem-major, then mesh order
    std::vector<RateRow> rates;
};

namespace detail {

/// All nine norms in a single quadrature sweep; gradients of the linear
/// fields are constant per tet and hoisted out of the point loop.
inline void accumulate_norms(const TetMesh& mesh, const StokesSolution& sol,
                             const TestProblem& problem, const QuadratureRule& rule,
                             StudyCell& cell) {
    double e_uh = 0, s_uh = 0, e_p = 0, e_ihl = 0, s_ihl = 0, e_ul = 0, s_ul = 0;
    double d_uh = 0, d_ul = 0;

    const int nq = rule.num_points();
    for (int t = 0; t < mesh.num_tets(); ++t) {
        const auto pts = mesh.tet_points(t);
        const auto& tet = mesh.tets[t];
        const auto grad = barycentric_gradients(pts);
        const double vol = std::abs(signed_tet_volume(pts));
        const double scale = 6.0 * vol;

        Vec3 ul_coeff[4], ih_coeff[4];
        double p_coeff[4];
        for (int i = 0; i < 4; ++i) {
            ul_coeff[i] = sol.vertex_velocity[tet[i]];
            ih_coeff[i] = problem.exact_velocity(mesh.vertices[tet[i]]);
            p_coeff[i] = sol.vertex_pressure[tet[i]];
        }
        const Vec3 bub = sol.bubble_velocity[t];

        Mat3 grad_ul{Vec3{0, 0, 0}, Vec3{0, 0, 0}, Vec3{0, 0, 0}};
        Mat3 grad_ih{Vec3{0, 0, 0}, Vec3{0, 0, 0}, Vec3{0, 0, 0}};
        for (int i = 0; i < 4; ++i)
            for (int r = 0; r < 3; ++r) {
                grad_ul[r] += ul_coeff[i][r] * grad[i];
                grad_ih[r] += ih_coeff[i][r] * grad[i];
            }
        const double div_ul = grad_ul[0].x + grad_ul[1].y + grad_ul[2].z;

        for (int q = 0; q < nq; ++q) {
            const Vec3 p = rule.points[q];
            const double w = rule.weights[q] * scale;
            const double phi[4] = {1.0 - p.x - p.y - p.z, p.x, p.y, p.z};
            const Vec3 x = pts[0] + p.x * (pts[1] - pts[0]) + p.y * (pts[2] - pts[0]) +
                           p.z * (pts[3] - pts[0]);

            const double bval = phi[0] * phi[1] * phi[2] * phi[3];
            Vec3 bgrad{0, 0, 0};
            for (int k = 0; k < 4; ++k) {
                double prod = 1.0;
                for (int j = 0; j < 4; ++j)
                    if (j != k) prod *= phi[j];
                bgrad += prod * grad[k];
            }

            Vec3 u_l{0, 0, 0}, u_i{0, 0, 0};
            double p_h = 0.0;
            for (int i = 0; i < 4; ++i) {
                u_l += phi[i] * ul_coeff[i];
                u_i += phi[i] * ih_coeff[i];
                p_h += phi[i] * p_coeff[i];
            }
            const Vec3 u_full = u_l + bval * bub;

            const Vec3 u_ex = problem.exact_velocity(x);
            const Mat3 g_ex = problem.exact_velocity_gradient(x);
            const double p_ex = problem.exact_pressure(x);

            e_uh += w * norm2(u_ex - u_full);
            e_ul += w * norm2(u_ex - u_l);
            e_ihl += w * norm2(u_i - u_l);
            const double dp = p_ex - p_h;
            e_p += w * dp * dp;

            double s1 = 0, s2 = 0, s3 = 0;
            for (int r = 0; r < 3; ++r) {
                const Vec3 g_uh = grad_ul[r] + bub[r] * bgrad;
                s1 += norm2(g_ex[r] - g_uh);
                s2 += norm2(g_ex[r] - grad_ul[r]);
                s3 += norm2(grad_ih[r] - grad_ul[r]);
            }
            s_uh += w * s1;
            s_ul += w * s2;
            s_ihl += w * s3;

            const double div_uh = div_ul + dot(bub, bgrad);
            d_uh += w * div_uh * div_uh;
            d_ul += w * div_ul * div_ul;
        }
    }

    cell.err_u_l2 = std::sqrt(e_uh);
    cell.err_u_h1 = std::sqrt(e_uh + s_uh);
    cell.err_p_l2 = std::sqrt(e_p);
    cell.err_ihu_uhl_l2 = std::sqrt(e_ihl);
    cell.err_ihu_uhl_h1 = std::sqrt(e_ihl + s_ihl);
    cell.err_u_uhl_l2 = std::sqrt(e_ul);
    cell.err_u_uhl_h1 = std::sqrt(e_ul + s_ul);
    cell.div_uh_l2 = std::sqrt(d_uh);
    cell.div_uhl_l2 = std::sqrt(d_ul);
    cell.ratio_h1 = cell.err_u_h1 / cell.err_u_uhl_h1;
    cell.ratio_l2 = cell.err_u_l2 / cell.err_u_uhl_l2;
    cell.ratio_div = cell.div_uh_l2 / cell.div_uhl_l2;
}

}  // namespace detail

/// Solves one problem on one mesh and fills a StudyCell. When `factors` is
/// null the ILU factorization is computed here; study runs share one
/// factorization per mesh since the eliminated matrix does not depend on the
/// problem.
inline std::pair<StokesSolution, StudyCell> solve_cell(const TetMesh& mesh,
                                                       const TestProblem& problem, double mu,
                                                       const SolverParams& params,
                                                       const SparseMatrix* matrix = nullptr,
                                                       const IluFactors* factors = nullptr) {
    StudyCell cell;
    cell.problem_id = problem.id;
    cell.h = mesh_spacing(mesh);
    cell.num_vertices = mesh.num_vertices();
    cell.num_tets = mesh.num_tets();

    const DofMap dm = build_dof_map(mesh);
    cell.dim = dm.dim();

    SaddleSystem sys;
    sys.dof_map = dm;
    if (matrix) {
        sys.matrix = *matrix;  // pre-assembled, not yet constrained
    } else {
        sys.matrix = detail::assemble_matrix(mesh, dm, mu);
    }
    sys.rhs = detail::assemble_rhs(mesh, dm, problem, 1.0, 10);
    apply_dirichlet(sys, mesh, problem.boundary_velocity);

    IluFactors local_factors;
    if (!factors) {
        local_factors = ilu_factorize(sys.matrix, params.drop_tol);
        factors = &local_factors;
    }
    auto [x, stats] = gmres(sys.matrix, sys.rhs, factors, params.rtol, params.max_iter);
    cell.iterations = stats.iterations;
    cell.residual = stats.relative_residual;
    cell.converged = stats.converged;

    StokesSolution sol = extract_solution(mesh, dm, x);

    double msum = 0.0, pnorm2 = 0.0;
    for (int t = 0; t < mesh.num_tets(); ++t) {
        const double vol = std::abs(signed_tet_volume(mesh.tet_points(t)));
        for (int k = 0; k < 4; ++k) msum += vol / 4.0 * sol.vertex_pressure[mesh.tets[t][k]];
    }
    for (double p : sol.vertex_pressure) pnorm2 += p * p;
    cell.pressure_mean_abs = std::abs(msum);
    cell.pressure_norm = std::sqrt(pnorm2);

    detail::accumulate_norms(mesh, sol, problem, rule_for_degree(10), cell);
    return {std::move(sol), cell};
}

/// Full study: every problem on every mesh, then least-squares rates over
/// the mesh sequence. Meshes may be processed concurrently (`threads` 0 =
/// hardware limit); each mesh assembles and factorizes once and reuses the
/// factors for all problems. The merged report is deterministic.
inline ConvergenceReport run_study(const std::vector<int>& problem_ids,
                                   const std::vector<const TetMesh*>& meshes, double mu,
                                   const SolverParams& params, int threads = 1) {
    if (meshes.size() < 2)
        throw std::invalid_argument("run_study needs at least 2 meshes for rate fitting");
    const int n_mesh = static_cast<int>(meshes.size());
    const int n_prob = static_cast<int>(problem_ids.size());
    std::vector<StudyCell> grid(static_cast<std::size_t>(n_mesh) * n_prob);

    auto process_mesh = [&](int mi) {
        const TetMesh& mesh = *meshes[mi];
        const DofMap dm = build_dof_map(mesh);
        SparseMatrix matrix = detail::assemble_matrix(mesh, dm, mu);

        // the constrained matrix is identical for every problem: constrain
        // once with zero data to build the shared ILU factors
        SaddleSystem probe;
        probe.dof_map = dm;
        probe.matrix = matrix;
        probe.rhs.assign(dm.dim(), 0.0);
        apply_dirichlet(probe, mesh, [](Vec3) { return Vec3{0, 0, 0}; });
        const IluFactors factors = ilu_factorize(probe.matrix, params.drop_tol);

        for (int pi = 0; pi < n_prob; ++pi) {
            const TestProblem prob = problem(problem_ids[pi], mu);
            auto [sol, cell] = solve_cell(mesh, prob, mu, params, &matrix, &factors);
            cell.mesh_index = mi;
            grid[static_cast<std::size_t>(pi) * n_mesh + mi] = cell;
        }
    };

    int nthreads = threads;
    if (nthreads <= 0) nthreads = static_cast<int>(std::thread::hardware_concurrency());
    nthreads = std::max(1, std::min(nthreads, n_mesh));
    if (nthreads == 1) {
        for (int mi = 0; mi < n_mesh; ++mi) process_mesh(mi);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        for (int k = 0; k < nthreads; ++k)
            pool.emplace_back([&] {
                for (int mi = next.fetch_add(1); mi < n_mesh; mi = next.fetch_add(1))
                    process_mesh(mi);
            });
        for (auto& th : pool) th.join();
    }

    ConvergenceReport report;
    report.cells = std::move(grid);

    for (int pi = 0; pi < n_prob; ++pi) {
        RateRow row;
        row.problem_id = problem_ids[pi];
        std::vector<double> h;
        std::array<std::vector<double>, 7> err;
        row.complete = true;
        for (int mi = 0; mi < n_mesh; ++mi) {
            const StudyCell& c = report.cells[static_cast<std::size_t>(pi) * n_mesh + mi];
            if (!c.converged) {
                row.complete = false;
                continue;
            }
            h.push_back(c.h);
            err[0].push_back(c.err_u_l2);
            err[1].push_back(c.err_u_h1);
            err[2].push_back(c.err_p_l2);
            err[3].push_back(c.err_ihu_uhl_l2);
            err[4].push_back(c.err_ihu_uhl_h1);
            err[5].push_back(c.err_u_uhl_l2);
            err[6].push_back(c.err_u_uhl_h1);
        }
        for (int k = 0; k < 7; ++k)
            row.rates[k] = h.size() >= 2 ? convergence_rate(h, err[k])
                                         : std::numeric_limits<double>::quiet_NaN();
        report.rates.push_back(row);
    }
    return report;
}

inline void write_report_csv(const ConvergenceReport& report, const std::string& config_echo,
                             std::ostream& os) {
    os << "# ministokes convergence study\n";
    os << "# config: " << config_echo << '\n';
    os << "problem,mesh_index,h,num_vertices,num_tets,dim,iterations,residual,converged,"
          "err_u_l2,err_u_h1,err_p_l2,err_ihu_uhl_l2,err_ihu_uhl_h1,err_u_uhl_l2,"
          "err_u_uhl_h1,div_uh_l2,div_uhl_l2,ratio_h1,ratio_l2,ratio_div,"
          "pressure_mean_abs\n";
    char buf[1024];
    for (const auto& c : report.cells) {
        std::snprintf(buf, sizeof(buf),
                      "%d,%d,%.16e,%d,%d,%d,%d,%.16e,%d,%.16e,%.16e,%.16e,%.16e,%.16e,"
                      "%.16e,%.16e,%.16e,%.16e,%.16e,%.16e,%.16e,%.16e\n",
                      c.problem_id, c.mesh_index, c.h, c.num_vertices, c.num_tets, c.dim,
                      c.iterations, c.residual, c.converged ? 1 : 0, c.err_u_l2, c.err_u_h1,
                      c.err_p_l2, c.err_ihu_uhl_l2, c.err_ihu_uhl_h1, c.err_u_uhl_l2,
                      c.err_u_uhl_h1, c.div_uh_l2, c.div_uhl_l2, c.ratio_h1, c.ratio_l2,
                      c.ratio_div, c.pressure_mean_abs);
        os << buf;
    }
    os << "rates,problem,complete";
    for (const char* name : kRateNames) os << ',' << name;
    os << '\n';
    for (const auto& r : report.rates) {
        os << "rates," << r.problem_id << ',' << (r.complete ? 1 : 0);
        for (double v : r.rates) {
            std::snprintf(buf, sizeof(buf), ",%.16e", v);
            os << buf;
        }
        os << '\n';
    }
}

inline void write_report_json(const ConvergenceReport& report, const std::string& config_echo,
                              std::ostream& os) {
    char buf[1024];
    os << "{\n  \"config\": " << config_echo << ",\n  \"cells\": [\n";
    for (std::size_t i = 0; i < report.cells.size(); ++i) {
        const auto& c = report.cells[i];
        std::snprintf(
            buf, sizeof(buf),
            "    {\"problem\": %d, \"mesh_index\": %d, \"h\": %.16e, "
            "\"num_vertices\": %d, \"num_tets\": %d, \"dim\": %d, \"iterations\": %d, "
            "\"residual\": %.16e, \"converged\": %s, \"err_u_l2\": %.16e, "
            "\"err_u_h1\": %.16e, \"err_p_l2\": %.16e, \"err_ihu_uhl_l2\": %.16e, "
            "\"err_ihu_uhl_h1\": %.16e, \"err_u_uhl_l2\": %.16e, \"err_u_uhl_h1\": %.16e, "
            "\"div_uh_l2\": %.16e, \"div_uhl_l2\": %.16e, \"ratio_h1\": %.16e, "
            "\"ratio_l2\": %.16e, \"ratio_div\": %.16e, \"pressure_mean_abs\": %.16e}%s\n",
            c.problem_id, c.mesh_index, c.h, c.num_vertices, c.num_tets, c.dim, c.iterations,
            c.residual, c.converged ? "true" : "false", c.err_u_l2, c.err_u_h1, c.err_p_l2,
            c.err_ihu_uhl_l2, c.err_ihu_uhl_h1, c.err_u_uhl_l2, c.err_u_uhl_h1, c.div_uh_l2,
            c.div_uhl_l2, c.ratio_h1, c.ratio_l2, c.ratio_div, c.pressure_mean_abs,
            i + 1 < report.cells.size() ? "," : "");
        os << buf;
    }
    os << "  ],\n  \"rates\": [\n";
    for (std::size_t i = 0; i < report.rates.size(); ++i) {
        const auto& r = report.rates[i];
        os << "    {\"problem\": " << r.problem_id
           << ", \"complete\": " << (r.complete ? "true" : "false");
        for (int k = 0; k < 7; ++k) {
            if (std::isfinite(r.rates[k]))
                std::snprintf(buf, sizeof(buf), ", \"%s\": %.16e", kRateNames[k], r.rates[k]);
            else
                std::snprintf(buf, sizeof(buf), ", \"%s\": null", kRateNames[k]);
            os << buf;
        }
        os << '}' << (i + 1 < report.rates.size() ? "," : "") << '\n';
    }
    os << "  ]\n}\n";
}

}  // namespace ministokes
