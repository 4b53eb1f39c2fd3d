#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ministokes/analysis.hpp"
#include "ministokes/assembly.hpp"
#include "ministokes/benchmarks.hpp"
#include "ministokes/krylov.hpp"
#include "ministokes/mesh.hpp"
#include "ministokes/mesh_io.hpp"
#include "ministokes/mesh_quality.hpp"
#include "ministokes/study.hpp"

namespace {

using namespace ministokes;

int env_threads() {
    const char* v = std::getenv("MINISTOKES_THREADS");
    if (!v) return 1;
    const int t = std::atoi(v);
    return t < 0 ? 1 : t;  // 0 = auto (hardware limit)
}

// write-then-rename so partial output never lands under the final name
void write_file_atomic(const std::string& path, const std::string& contents) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + tmp);
        out << contents;
    }
    std::filesystem::rename(tmp, path);
}

std::string solver_config_echo(int problem_id, const std::string& mesh_desc, double mu,
                               const SolverParams& sp) {
    char buf[512];
    std::snprintf(buf, sizeof(buf),
                  "{\"problem\": %d, \"mesh\": \"%s\", \"mu\": %.16e, "
                  "\"drop_tol\": %.16e, \"rtol\": %.16e, \"max_iter\": %d}",
                  problem_id, mesh_desc.c_str(), mu, sp.drop_tol, sp.rtol, sp.max_iter);
    return buf;
}

void write_solution_text(const StokesSolution& sol, std::ostream& os) {
    const int nv = static_cast<int>(sol.vertex_velocity.size());
    const int nt = static_cast<int>(sol.bubble_velocity.size());
    os << nv << ' ' << nt << '\n';
    char buf[160];
    for (const auto& v : sol.vertex_velocity) {
        std::snprintf(buf, sizeof(buf), "%.16e %.16e %.16e\n", v.x, v.y, v.z);
        os << buf;
    }
    for (const auto& v : sol.bubble_velocity) {
        std::snprintf(buf, sizeof(buf), "%.16e %.16e %.16e\n", v.x, v.y, v.z);
        os << buf;
    }
    for (double p : sol.vertex_pressure) {
        std::snprintf(buf, sizeof(buf), "%.16e\n", p);
        os << buf;
    }
    std::snprintf(buf, sizeof(buf), "%.16e\n", sol.multiplier);
    os << buf;
}

std::string metrics_json(const StudyCell& c, const std::string& config_echo) {
    char buf[2048];
    std::snprintf(
        buf, sizeof(buf),
        "{\n"
        "  \"config\": %s,\n"
        "  \"h\": %.16e,\n"
        "  \"num_vertices\": %d,\n"
        "  \"num_tets\": %d,\n"
        "  \"dim\": %d,\n"
        "  \"iterations\": %d,\n"
        "  \"residual\": %.16e,\n"
        "  \"converged\": %s,\n"
        "  \"err_u_l2\": %.16e,\n"
        "  \"err_u_h1\": %.16e,\n"
        "  \"err_p_l2\": %.16e,\n"
        "  \"err_ihu_uhl_l2\": %.16e,\n"
        "  \"err_ihu_uhl_h1\": %.16e,\n"
        "  \"err_u_uhl_l2\": %.16e,\n"
        "  \"err_u_uhl_h1\": %.16e,\n"
        "  \"div_uh_l2\": %.16e,\n"
        "  \"div_uhl_l2\": %.16e,\n"
        "  \"ratio_h1\": %.16e,\n"
        "  \"ratio_l2\": %.16e,\n"
        "  \"ratio_div\": %.16e,\n"
        "  \"pressure_mean_abs\": %.16e\n"
        "}\n",
        config_echo.c_str(), c.h, c.num_vertices, c.num_tets, c.dim, c.iterations,
        c.residual, c.converged ? "true" : "false", c.err_u_l2, c.err_u_h1, c.err_p_l2,
        c.err_ihu_uhl_l2, c.err_ihu_uhl_h1, c.err_u_uhl_l2, c.err_u_uhl_h1, c.div_uh_l2,
        c.div_uhl_l2, c.ratio_h1, c.ratio_l2, c.ratio_div, c.pressure_mean_abs);
    return buf;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"MINI mixed finite element Stokes solver on tetrahedral meshes"};
    app.require_subcommand(1);

    // ---- mesh gen|quality|convert ----
    auto* mesh_cmd = app.add_subcommand("mesh", "mesh generation, quality and conversion");
    mesh_cmd->require_subcommand(1);

    int gen_n = 0;
    std::string gen_out;
    auto* gen = mesh_cmd->add_subcommand("gen", "structured unit-cube mesh");
    gen->add_option("--n", gen_n, "subdivisions per axis")->required();
    gen->add_option("--out", gen_out, "output mesh file")->required();

    std::string quality_in, quality_out;
    auto* quality = mesh_cmd->add_subcommand("quality", "mesh quality report (JSON)");
    quality->add_option("--in", quality_in, "input mesh file")->required();
    quality->add_option("--out", quality_out, "write report here instead of stdout");

    std::string convert_in, convert_out;
    auto* convert = mesh_cmd->add_subcommand("convert", "re-read and re-emit a mesh file");
    convert->add_option("--in", convert_in, "input mesh file")->required();
    convert->add_option("--out", convert_out, "output mesh file")->required();

    // ---- solve ----
    int solve_problem = 0, solve_n = 0;
    std::string solve_mesh, solve_prefix = "solution", solve_dump_matrix;
    double solve_mu = 1.0;
    SolverParams solve_params;
    auto* solve = app.add_subcommand("solve", "solve one benchmark on one mesh");
    solve->add_option("--problem", solve_problem, "benchmark id 1..5")->required();
    solve->add_option("--n", solve_n, "structured mesh subdivisions");
    solve->add_option("--mesh", solve_mesh, "mesh file (alternative to --n)");
    solve->add_option("--mu", solve_mu, "viscosity (default 1)");
    solve->add_option("--drop-tol", solve_params.drop_tol, "ILU drop tolerance");
    solve->add_option("--rtol", solve_params.rtol, "GMRES relative residual target");
    solve->add_option("--max-iter", solve_params.max_iter, "GMRES iteration cap");
    solve->add_option("--out-prefix", solve_prefix, "output prefix");
    solve->add_option("--dump-matrix", solve_dump_matrix,
                      "write the constrained matrix in coordinate format");

    // ---- study ----
    std::vector<int> study_problems = {1, 2, 3, 4, 5};
    std::vector<int> study_ns;
    std::vector<std::string> study_meshes;
    std::string study_prefix = "study", study_format = "csv";
    double study_mu = 1.0;
    SolverParams study_params;
    auto* study = app.add_subcommand("study", "convergence study over a mesh sequence");
    study->add_option("--problems", study_problems, "benchmark ids (default all five)");
    study->add_option("--n", study_ns, "structured mesh subdivisions, e.g. --n 4 8 16");
    study->add_option("--mesh", study_meshes, "mesh files (appended after --n meshes)");
    study->add_option("--mu", study_mu, "viscosity (default 1)");
    study->add_option("--drop-tol", study_params.drop_tol, "ILU drop tolerance");
    study->add_option("--rtol", study_params.rtol, "GMRES relative residual target");
    study->add_option("--max-iter", study_params.max_iter, "GMRES iteration cap");
    study->add_option("--out-prefix", study_prefix, "output prefix");
    study->add_option("--format", study_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    // ---- field ----
    int field_problem = 0, field_res = 20;
    std::string field_face = "top", field_out;
    auto* field = app.add_subcommand("field", "boundary velocity field samples (CSV)");
    field->add_option("--problem", field_problem, "benchmark id 1..5")->required();
    field->add_option("--face", field_face, "x0|x1|y0|y1|z0|z1|bottom|top");
    field->add_option("--res", field_res, "grid resolution per edge");
    field->add_option("--out", field_out, "write CSV here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            const TetMesh mesh = generate_structured_cube_mesh(gen_n);
            std::ostringstream ss;
            save_mesh(mesh, ss);
            write_file_atomic(gen_out, ss.str());
            return 0;
        }
        if (quality->parsed()) {
            const TetMesh mesh = load_mesh_file(quality_in);
            const MeshQualityReport rep = quality_report(mesh);
            std::ostringstream ss;
            write_quality_report_json(rep, ss);
            if (quality_out.empty()) std::cout << ss.str();
            else write_file_atomic(quality_out, ss.str());
            return 0;
        }
        if (convert->parsed()) {
            const TetMesh mesh = load_mesh_file(convert_in);
            std::ostringstream ss;
            save_mesh(mesh, ss);
            write_file_atomic(convert_out, ss.str());
            return 0;
        }
        if (solve->parsed()) {
            if ((solve_n > 0) == !solve_mesh.empty()) {
                std::cerr << "solve: give exactly one of --n or --mesh\n";
                return 1;
            }
            const TetMesh mesh = solve_n > 0 ? generate_structured_cube_mesh(solve_n)
                                             : load_mesh_file(solve_mesh);
            const TestProblem prob = problem(solve_problem, solve_mu);
            auto [sol, cell] = solve_cell(mesh, prob, solve_mu, solve_params);
            if (!solve_dump_matrix.empty()) {
                SaddleSystem sys = assemble(mesh, prob, solve_mu);
                apply_dirichlet(sys, mesh, prob.boundary_velocity);
                std::ostringstream ss;
                write_coordinate(sys.matrix, ss);
                write_file_atomic(solve_dump_matrix, ss.str());
            }
            const std::string mesh_desc =
                solve_n > 0 ? "structured n=" + std::to_string(solve_n) : solve_mesh;
            std::ostringstream ss;
            write_solution_text(sol, ss);
            write_file_atomic(solve_prefix + ".solution.txt", ss.str());
            write_file_atomic(solve_prefix + ".metrics.json",
                              metrics_json(cell, solver_config_echo(solve_problem, mesh_desc,
                                                                    solve_mu, solve_params)));
            if (!cell.converged) {
                std::cerr << "solve: GMRES did not reach the target residual ("
                          << cell.residual << " after " << cell.iterations
                          << " iterations)\n";
                return 2;
            }
            return 0;
        }
        if (study->parsed()) {
            std::vector<TetMesh> meshes;
            std::string mesh_desc;
            for (int n : study_ns) {
                meshes.push_back(generate_structured_cube_mesh(n));
                mesh_desc += (mesh_desc.empty() ? "" : ", ") +
                             ("\"structured n=" + std::to_string(n) + "\"");
            }
            for (const auto& path : study_meshes) {
                meshes.push_back(load_mesh_file(path));
                mesh_desc += (mesh_desc.empty() ? "" : ", ") + ("\"" + path + "\"");
            }
            if (meshes.size() < 2) {
                std::cerr << "study: need at least 2 meshes (via --n and/or --mesh)\n";
                return 1;
            }
            std::vector<const TetMesh*> mesh_ptrs;
            for (const auto& m : meshes) mesh_ptrs.push_back(&m);

            std::string problems_desc;
            for (std::size_t i = 0; i < study_problems.size(); ++i)
                problems_desc += (i ? ", " : "") + std::to_string(study_problems[i]);
            char cfg[1024];
            std::snprintf(cfg, sizeof(cfg),
                          "{\"problems\": [%s], \"meshes\": [%s], \"mu\": %.16e, "
                          "\"drop_tol\": %.16e, \"rtol\": %.16e, \"max_iter\": %d, "
                          "\"format\": \"%s\"}",
                          problems_desc.c_str(), mesh_desc.c_str(), study_mu,
                          study_params.drop_tol, study_params.rtol, study_params.max_iter,
                          study_format.c_str());

            const ConvergenceReport report =
                run_study(study_problems, mesh_ptrs, study_mu, study_params, env_threads());

            std::ostringstream ss;
            if (study_format == "csv") {
                write_report_csv(report, cfg, ss);
                write_file_atomic(study_prefix + ".csv", ss.str());
            } else {
                write_report_json(report, cfg, ss);
                write_file_atomic(study_prefix + ".json", ss.str());
            }
            bool all_converged = true;
            for (const auto& c : report.cells) all_converged &= c.converged;
            if (!all_converged) {
                std::cerr << "study: some cells did not converge (see report)\n";
                return 2;
            }
            return 0;
        }
        if (field->parsed()) {
            const TestProblem prob = problem(field_problem);
            const auto samples =
                sample_boundary_field(prob, parse_cube_face(field_face), field_res);
            std::ostringstream ss;
            write_boundary_field_csv(samples, ss);
            if (field_out.empty()) std::cout << ss.str();
            else write_file_atomic(field_out, ss.str());
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
