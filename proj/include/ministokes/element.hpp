#pragma once

#include <array>
#include <stdexcept>

#include "ministokes/geometry.hpp"
#include "ministokes/quadrature.hpp"

namespace ministokes {

/// Local velocity DOF ordering is (phi_1..phi_4, bubble) per scalar
/// component; assembly and the velocity split both rely on it.
inline constexpr int kLocalVelocityDofs = 5;

using LocalStiffness = std::array<std::array<double, 5>, 5>;
/// Indexed [component][pressure row k][velocity column i].
using LocalDivergence = std::array<std::array<std::array<double, 5>, 4>, 3>;
using LocalLoad = std::array<double, 5>;

namespace detail {

inline void require_non_degenerate(const TetPoints& tet) {
    const double vol = signed_tet_volume(tet);
    const double max_edge = tet_max_edge(tet);
    if (std::abs(vol) < 1e-14 * max_edge * max_edge * max_edge)
        throw std::domain_error("degenerate tetrahedron");
}

}  // namespace detail

/// Constant gradients of the four barycentric coordinates; they sum to zero.
inline std::array<Vec3, 4> barycentric_gradients(const TetPoints& tet) {
    detail::require_non_degenerate(tet);
    const Vec3 e1 = tet[1] - tet[0], e2 = tet[2] - tet[0], e3 = tet[3] - tet[0];
    const double det = dot(e1, cross(e2, e3));  // 6 * signed volume
    std::array<Vec3, 4> grad;
    grad[1] = cross(e2, e3) / det;
    grad[2] = cross(e3, e1) / det;
    grad[3] = cross(e1, e2) / det;
    grad[0] = -1.0 * (grad[1] + grad[2] + grad[3]);
    return grad;
}

/// phi_i(x) = 1 + grad_i . (x - v_i); exact for any point, not just interior.
inline std::array<double, 4> barycentric_values(const TetPoints& tet,
                                                const std::array<Vec3, 4>& grad, Vec3 x) {
    std::array<double, 4> phi;
    for (int i = 0; i < 4; ++i) phi[i] = 1.0 + dot(grad[i], x - tet[i]);
    return phi;
}

struct BubbleEval {
    double value;
    Vec3 gradient;
};

/// Quartic bubble b = phi_1 phi_2 phi_3 phi_4 and its gradient by the
/// product rule. Vanishes on all four faces; 1/256 at the centroid.
inline BubbleEval bubble_eval(const TetPoints& tet, Vec3 x) {
    const auto grad = barycentric_gradients(tet);
    const auto phi = barycentric_values(tet, grad, x);
    BubbleEval out;
    out.value = phi[0] * phi[1] * phi[2] * phi[3];
    out.gradient = {0.0, 0.0, 0.0};
    for (int k = 0; k < 4; ++k) {
        double prod = 1.0;
        for (int j = 0; j < 4; ++j)
            if (j != k) prod *= phi[j];
        out.gradient += prod * grad[k];
    }
    return out;
}

namespace detail {

/// Per-tet quadrature context: barycentric values, bubble value/gradient and
/// physical location at every node of the rule.
struct TetQuadContext {
    double volume;                         // positive
    std::array<Vec3, 4> grad;              // barycentric gradients
    std::vector<Vec3> phys;                // physical node positions
    std::vector<std::array<double, 4>> phi;
    std::vector<double> bubble;
    std::vector<Vec3> bubble_grad;
    std::vector<double> weight;            // physical weights, sum = volume

    TetQuadContext(const TetPoints& tet, const QuadratureRule& rule) {
        require_non_degenerate(tet);
        volume = std::abs(signed_tet_volume(tet));
        grad = barycentric_gradients(tet);
        const int n = rule.num_points();
        phys.resize(n);
        phi.resize(n);
        bubble.resize(n);
        bubble_grad.resize(n);
        weight.resize(n);
        const double scale = 6.0 * volume;
        for (int q = 0; q < n; ++q) {
            const Vec3 p = rule.points[q];
            // reference barycentrics are (1-x-y-z, x, y, z)
            phi[q] = {1.0 - p.x - p.y - p.z, p.x, p.y, p.z};
            phys[q] = tet[0] + p.x * (tet[1] - tet[0]) + p.y * (tet[2] - tet[0]) +
                      p.z * (tet[3] - tet[0]);
            bubble[q] = phi[q][0] * phi[q][1] * phi[q][2] * phi[q][3];
            Vec3 g{0.0, 0.0, 0.0};
            for (int k = 0; k < 4; ++k) {
                double prod = 1.0;
                for (int j = 0; j < 4; ++j)
                    if (j != k) prod *= phi[q][j];
                g += prod * grad[k];
            }
            bubble_grad[q] = g;
            weight[q] = rule.weights[q] * scale;
        }
    }
};

}  // namespace detail

/// 5x5 scalar stiffness mu * int grad(psi_i) . grad(psi_j). The linear block
/// uses the constant-gradient closed form; the linear-bubble coupling is
/// identically zero (phi_i linear, b vanishing on the element boundary) and
/// stored as exact zeros; the bubble diagonal needs a degree-6 rule.
inline LocalStiffness local_stiffness(const TetPoints& tet, double mu,
                                      const QuadratureRule& rule) {
    if (rule.degree < 6)
        throw std::invalid_argument("local_stiffness requires a rule of degree >= 6");
    detail::TetQuadContext ctx(tet, rule);
    LocalStiffness k{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            k[i][j] = mu * ctx.volume * dot(ctx.grad[i], ctx.grad[j]);
    double bb = 0.0;
    for (std::size_t q = 0; q < ctx.weight.size(); ++q)
        bb += ctx.weight[q] * norm2(ctx.bubble_grad[q]);
    k[4][4] = mu * bb;
    return k;
}

/// Blocks B_c[k][i] = -int phi_k d(psi_i)/d(x_c). Linear columns are exact
/// (-V/4 times the gradient component); the bubble column is a degree-4
/// integrand.
inline LocalDivergence local_divergence(const TetPoints& tet, const QuadratureRule& rule) {
    if (rule.degree < 4)
        throw std::invalid_argument("local_divergence requires a rule of degree >= 4");
    detail::TetQuadContext ctx(tet, rule);
    LocalDivergence b{};
    for (int c = 0; c < 3; ++c)
        for (int k = 0; k < 4; ++k) {
            for (int i = 0; i < 4; ++i) b[c][k][i] = -0.25 * ctx.volume * ctx.grad[i][c];
            double acc = 0.0;
            for (std::size_t q = 0; q < ctx.weight.size(); ++q)
                acc += ctx.weight[q] * ctx.phi[q][k] * ctx.bubble_grad[q][c];
            b[c][k][4] = -acc;
        }
    return b;
}

/// Load vector rho * int f psi_i for one scalar component of the forcing.
template <typename F>
LocalLoad local_load(const TetPoints& tet, F&& f_component, double rho,
                     const QuadratureRule& rule) {
    detail::TetQuadContext ctx(tet, rule);
    LocalLoad load{};
    for (std::size_t q = 0; q < ctx.weight.size(); ++q) {
        const double fw = ctx.weight[q] * f_component(ctx.phys[q]);
        for (int i = 0; i < 4; ++i) load[i] += fw * ctx.phi[q][i];
        load[4] += fw * ctx.bubble[q];
    }
    for (double& v : load) v *= rho;
    return load;
}

}  // namespace ministokes
