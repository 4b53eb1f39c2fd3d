#pragma once

#include <cmath>
#include <functional>
#include <memory>
#include <stdexcept>
#include <vector>

#include "ministokes/assembly.hpp"
#include "ministokes/benchmarks.hpp"
#include "ministokes/element.hpp"
#include "ministokes/mesh.hpp"
#include "ministokes/quadrature.hpp"

namespace ministokes {

/// Computed MINI solution: vertex velocities are the piecewise-linear part
/// u_hl, bubble coefficients the element part u_hb, u_h = u_hl + u_hb.
struct StokesSolution {
    const TetMesh* mesh = nullptr;
    std::vector<Vec3> vertex_velocity;
    std::vector<Vec3> bubble_velocity;
    std::vector<double> vertex_pressure;
    double multiplier = 0.0;
};

inline StokesSolution extract_solution(const TetMesh& mesh, const DofMap& dm,
                                       const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != dm.dim())
        throw std::invalid_argument("solution vector size mismatch");
    StokesSolution s;
    s.mesh = &mesh;
    s.vertex_velocity.resize(mesh.num_vertices());
    s.bubble_velocity.resize(mesh.num_tets());
    s.vertex_pressure.resize(mesh.num_vertices());
    for (int v = 0; v < mesh.num_vertices(); ++v)
        for (int c = 0; c < 3; ++c) s.vertex_velocity[v][c] = x[dm.velocity_dof(v, c)];
    for (int t = 0; t < mesh.num_tets(); ++t)
        for (int c = 0; c < 3; ++c) s.bubble_velocity[t][c] = x[dm.bubble_dof(t, c)];
    for (int v = 0; v < mesh.num_vertices(); ++v)
        s.vertex_pressure[v] = x[dm.pressure_dof(v)];
    s.multiplier = x[dm.multiplier_dof()];
    return s;
}

/// Field evaluable element-wise; FE fields use the tet index, closed-form
/// fields ignore it. A missing gradient disables H1 norms for the field.
struct VectorField {
    std::function<Vec3(int tet, Vec3 x)> value;
    std::function<Mat3(int tet, Vec3 x)> gradient;
};

struct ScalarField {
    std::function<double(int tet, Vec3 x)> value;
    std::function<Vec3(int tet, Vec3 x)> gradient;
};

inline VectorField exact_field(const TestProblem& p) {
    return {[&p](int, Vec3 x) { return p.exact_velocity(x); },
            [&p](int, Vec3 x) { return p.exact_velocity_gradient(x); }};
}

inline ScalarField exact_pressure_field(const TestProblem& p) {
    return {[&p](int, Vec3 x) { return p.exact_pressure(x); }, nullptr};
}

namespace detail {

struct LinearVectorCoeffs {
    const TetMesh* mesh;
    std::vector<Vec3> vertex_values;
};

inline VectorField linear_vector_field(std::shared_ptr<LinearVectorCoeffs> data) {
    VectorField f;
    f.value = [data](int t, Vec3 x) -> Vec3 {
        const auto pts = data->mesh->tet_points(t);
        const auto grad = barycentric_gradients(pts);
        const auto phi = barycentric_values(pts, grad, x);
        Vec3 v{0, 0, 0};
        for (int i = 0; i < 4; ++i) v += phi[i] * data->vertex_values[data->mesh->tets[t][i]];
        return v;
    };
    f.gradient = [data](int t, Vec3) -> Mat3 {
        const auto pts = data->mesh->tet_points(t);
        const auto grad = barycentric_gradients(pts);
        Mat3 g{Vec3{0, 0, 0}, Vec3{0, 0, 0}, Vec3{0, 0, 0}};
        for (int i = 0; i < 4; ++i) {
            const Vec3 coeff = data->vertex_values[data->mesh->tets[t][i]];
            for (int r = 0; r < 3; ++r) g[r] += coeff[r] * grad[i];
        }
        return g;
    };
    return f;
}

}  // namespace detail

/// Piecewise-linear part of the computed velocity (vertex coefficients).
inline VectorField linear_velocity_field(const StokesSolution& s) {
    auto data = std::make_shared<detail::LinearVectorCoeffs>(
        detail::LinearVectorCoeffs{s.mesh, s.vertex_velocity});
    return detail::linear_vector_field(std::move(data));
}

/// Element bubble part of the computed velocity.
inline VectorField bubble_velocity_field(const StokesSolution& s) {
    const TetMesh* mesh = s.mesh;
    auto coeffs = std::make_shared<std::vector<Vec3>>(s.bubble_velocity);
    VectorField f;
    f.value = [mesh, coeffs](int t, Vec3 x) -> Vec3 {
        const auto b = bubble_eval(mesh->tet_points(t), x);
        return b.value * (*coeffs)[t];
    };
    f.gradient = [mesh, coeffs](int t, Vec3 x) -> Mat3 {
        const auto b = bubble_eval(mesh->tet_points(t), x);
        const Vec3 c = (*coeffs)[t];
        return {c.x * b.gradient, c.y * b.gradient, c.z * b.gradient};
    };
    return f;
}

/// Complete computed velocity u_h = u_hl + u_hb.
inline VectorField full_velocity_field(const StokesSolution& s) {
    VectorField lin = linear_velocity_field(s);
    VectorField bub = bubble_velocity_field(s);
    VectorField f;
    f.value = [lin, bub](int t, Vec3 x) { return lin.value(t, x) + bub.value(t, x); };
    f.gradient = [lin, bub](int t, Vec3 x) -> Mat3 {
        const Mat3 a = lin.gradient(t, x), b = bub.gradient(t, x);
        return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
    };
    return f;
}

inline std::pair<VectorField, VectorField> split_velocity(const StokesSolution& s) {
    return {linear_velocity_field(s), bubble_velocity_field(s)};
}

inline ScalarField pressure_field(const StokesSolution& s) {
    const TetMesh* mesh = s.mesh;
    auto coeffs = std::make_shared<std::vector<double>>(s.vertex_pressure);
    ScalarField f;
    f.value = [mesh, coeffs](int t, Vec3 x) -> double {
        const auto pts = mesh->tet_points(t);
        const auto grad = barycentric_gradients(pts);
        const auto phi = barycentric_values(pts, grad, x);
        double v = 0.0;
        for (int i = 0; i < 4; ++i) v += phi[i] * (*coeffs)[mesh->tets[t][i]];
        return v;
    };
    f.gradient = [mesh, coeffs](int t, Vec3) -> Vec3 {
        const auto pts = mesh->tet_points(t);
        const auto grad = barycentric_gradients(pts);
        Vec3 g{0, 0, 0};
        for (int i = 0; i < 4; ++i) g += (*coeffs)[mesh->tets[t][i]] * grad[i];
        return g;
    };
    return f;
}

/// Vertex-based piecewise-linear interpolant of a closed-form vector field.
inline VectorField nodal_interpolant(const std::function<Vec3(Vec3)>& exact,
                                     const TetMesh& mesh) {
    auto data = std::make_shared<detail::LinearVectorCoeffs>();
    data->mesh = &mesh;
    data->vertex_values.resize(mesh.num_vertices());
    for (int v = 0; v < mesh.num_vertices(); ++v)
        data->vertex_values[v] = exact(mesh.vertices[v]);
    return detail::linear_vector_field(std::move(data));
}

/// Scalar counterpart (j_h P).
inline ScalarField nodal_interpolant_scalar(const std::function<double(Vec3)>& exact,
                                            const TetMesh& mesh) {
    StokesSolution tmp;  // reuse the linear pressure evaluator
    tmp.mesh = &mesh;
    tmp.vertex_pressure.resize(mesh.num_vertices());
    for (int v = 0; v < mesh.num_vertices(); ++v)
        tmp.vertex_pressure[v] = exact(mesh.vertices[v]);
    return pressure_field(tmp);
}

inline double l2_norm_error(const VectorField& a, const VectorField& b, const TetMesh& mesh,
                            const QuadratureRule& rule = rule_for_degree(10)) {
    double acc = 0.0;
    for (int t = 0; t < mesh.num_tets(); ++t)
        acc += integrate_on_tet(
            [&](Vec3 x) { return norm2(a.value(t, x) - b.value(t, x)); }, mesh.tet_points(t),
            rule);
    return std::sqrt(acc);
}

inline double l2_norm_error(const ScalarField& a, const ScalarField& b, const TetMesh& mesh,
                            const QuadratureRule& rule = rule_for_degree(10)) {
    double acc = 0.0;
    for (int t = 0; t < mesh.num_tets(); ++t)
        acc += integrate_on_tet(
            [&](Vec3 x) {
                const double d = a.value(t, x) - b.value(t, x);
                return d * d;
            },
            mesh.tet_points(t), rule);
    return std::sqrt(acc);
}

/// Full H1 norm of the difference: sqrt(L2^2 + |.|_H1^2).
inline double h1_norm_error(const VectorField& a, const VectorField& b, const TetMesh& mesh,
                            const QuadratureRule& rule = rule_for_degree(10)) {
    if (!a.gradient || !b.gradient)
        throw std::invalid_argument("h1_norm_error: field lacks a gradient");
    double acc = 0.0;
    for (int t = 0; t < mesh.num_tets(); ++t)
        acc += integrate_on_tet(
            [&](Vec3 x) {
                const Vec3 dv = a.value(t, x) - b.value(t, x);
                const Mat3 ga = a.gradient(t, x), gb = b.gradient(t, x);
                double s = norm2(dv);
                for (int r = 0; r < 3; ++r) s += norm2(ga[r] - gb[r]);
                return s;
            },
            mesh.tet_points(t), rule);
    return std::sqrt(acc);
}

/// L2 norm of the divergence of an FE velocity field.
inline double divergence_l2(const VectorField& field, const TetMesh& mesh,
                            const QuadratureRule& rule = rule_for_degree(10)) {
    if (!field.gradient) throw std::invalid_argument("divergence_l2: field lacks a gradient");
    double acc = 0.0;
    for (int t = 0; t < mesh.num_tets(); ++t)
        acc += integrate_on_tet(
            [&](Vec3 x) {
                const Mat3 g = field.gradient(t, x);
                const double div = g[0].x + g[1].y + g[2].z;
                return div * div;
            },
            mesh.tet_points(t), rule);
    return std::sqrt(acc);
}

/// Least-squares slope of log(error) against log(h).
inline double convergence_rate(const std::vector<double>& h_values,
                               const std::vector<double>& errors) {
    if (h_values.size() != errors.size() || h_values.size() < 2)
        throw std::invalid_argument("convergence_rate needs >= 2 (h, error) pairs");
    const std::size_t n = h_values.size();
    double mh = 0.0, me = 0.0;
    std::vector<double> lh(n), le(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (h_values[i] <= 0.0 || errors[i] <= 0.0)
            throw std::invalid_argument("convergence_rate needs positive inputs");
        lh[i] = std::log(h_values[i]);
        le[i] = std::log(errors[i]);
        mh += lh[i];
        me += le[i];
    }
    mh /= n;
    me /= n;
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        num += (lh[i] - mh) * (le[i] - me);
        den += (lh[i] - mh) * (lh[i] - mh);
    }
    return num / den;
}

}  // namespace ministokes
