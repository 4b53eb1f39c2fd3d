#pragma once

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ministokes/geometry.hpp"

namespace ministokes {

/// Row r holds the gradient of velocity component r.
using Mat3 = std::array<Vec3, 3>;

/// Manufactured Stokes benchmark on the unit cube: forcing rho*f, Dirichlet
/// velocity data, exact velocity/pressure and the exact velocity gradient.
/// The viscosity enters the forcing only; the exact fields do not depend on
/// it.
struct TestProblem {
    int id = 0;
    double mu = 1.0;
    std::function<Vec3(Vec3)> force;
    std::function<Vec3(Vec3)> boundary_velocity;
    std::function<Vec3(Vec3)> exact_velocity;
    std::function<Mat3(Vec3)> exact_velocity_gradient;
    std::function<double(Vec3)> exact_pressure;
};

namespace detail {

// t^2 (1-t)^2 and derivatives
inline double g0(double t) { return t * t - 2 * t * t * t + t * t * t * t; }
inline double g1(double t) { return 2 * t - 6 * t * t + 4 * t * t * t; }
inline double g2(double t) { return 2 - 12 * t + 12 * t * t; }
inline double g3(double t) { return -12 + 24 * t; }
// cubic pressure factor of problem #4
inline double p1(double t) { return t - 3 * t * t + 2 * t * t * t; }
inline double dp1(double t) { return 1 - 6 * t + 6 * t * t; }

inline constexpr double kPi = std::numbers::pi;

inline TestProblem make_problem_1(double mu) {
    TestProblem p;
    p.id = 1;
    p.mu = mu;
    p.exact_velocity = [](Vec3 v) -> Vec3 {
        return {g0(v.x) * g1(v.y) * g1(v.z), g1(v.x) * g0(v.y) * g1(v.z),
                -2 * g1(v.x) * g1(v.y) * g0(v.z)};
    };
    p.exact_velocity_gradient = [](Vec3 v) -> Mat3 {
        const double x = v.x, y = v.y, z = v.z;
        return {Vec3{g1(x) * g1(y) * g1(z), g0(x) * g2(y) * g1(z), g0(x) * g1(y) * g2(z)},
                Vec3{g2(x) * g0(y) * g1(z), g1(x) * g1(y) * g1(z), g1(x) * g0(y) * g2(z)},
                Vec3{-2 * g2(x) * g1(y) * g0(z), -2 * g1(x) * g2(y) * g0(z),
                     -2 * g1(x) * g1(y) * g1(z)}};
    };
    p.exact_pressure = [](Vec3 v) { return 0.01 * (v.x + v.y + v.z - 1.5); };
    p.force = [mu](Vec3 v) -> Vec3 {
        const double x = v.x, y = v.y, z = v.z;
        return {-mu * (g2(x) * g1(y) * g1(z) + g0(x) * g3(y) * g1(z) +
                       g0(x) * g1(y) * g3(z)) +
                    0.01,
                -mu * (g3(x) * g0(y) * g1(z) + g1(x) * g2(y) * g1(z) +
                       g1(x) * g0(y) * g3(z)) +
                    0.01,
                2 * mu * (g3(x) * g1(y) * g0(z) + g1(x) * g3(y) * g0(z) +
                          g1(x) * g1(y) * g2(z)) -
                    0.01};
    };
    p.boundary_velocity = [](Vec3) -> Vec3 { return {0, 0, 0}; };
    return p;
}

inline TestProblem make_problem_2(double mu) {
    TestProblem p;
    p.id = 2;
    p.mu = mu;
    const double w = 2 * kPi;
    auto s = [w](double t) { return std::sin(w * t); };
    auto c = [w](double t) { return std::cos(w * t); };
    p.exact_velocity = [=](Vec3 v) -> Vec3 {
        return {(1 - c(v.x)) * s(v.y) * s(v.z), s(v.x) * (1 - c(v.y)) * s(v.z),
                -2 * s(v.x) * s(v.y) * (1 - c(v.z))};
    };
    p.exact_velocity_gradient = [=](Vec3 v) -> Mat3 {
        const double x = v.x, y = v.y, z = v.z;
        return {Vec3{w * s(x) * s(y) * s(z), w * (1 - c(x)) * c(y) * s(z),
                     w * (1 - c(x)) * s(y) * c(z)},
                Vec3{w * c(x) * (1 - c(y)) * s(z), w * s(x) * s(y) * s(z),
                     w * s(x) * (1 - c(y)) * c(z)},
                Vec3{-2 * w * c(x) * s(y) * (1 - c(z)), -2 * w * s(x) * c(y) * (1 - c(z)),
                     -2 * w * s(x) * s(y) * s(z)}};
    };
    p.exact_pressure = [=](Vec3 v) { return c(v.x) + c(v.y) + c(v.z); };
    p.force = [=](Vec3 v) -> Vec3 {
        const double x = v.x, y = v.y, z = v.z;
        const double k = 4 * kPi * kPi * mu;
        return {-k * (3 * c(x) - 2) * s(y) * s(z) - 2 * kPi * s(x),
                -k * s(x) * (3 * c(y) - 2) * s(z) - 2 * kPi * s(y),
                2 * k * s(x) * s(y) * (3 * c(z) - 2) - 2 * kPi * s(z)};
    };
    p.boundary_velocity = [](Vec3) -> Vec3 { return {0, 0, 0}; };
    return p;
}

inline TestProblem make_problem_3(double mu) {
    TestProblem p;
    p.id = 3;
    p.mu = mu;
    // second x-derivative factors of e^x g0 and e^x g1
    auto a3 = [](double t) { return 2 - 8 * t + t * t + 6 * t * t * t + t * t * t * t; };
    auto b3 = [](double t) { return -8 + 2 * t + 18 * t * t + 4 * t * t * t; };
    p.exact_velocity = [](Vec3 v) -> Vec3 {
        const double e = std::exp(v.x);
        return {e * g0(v.x) * g1(v.y) * g1(v.z), -e * g1(v.x) * g0(v.y) * g1(v.z),
                -e * g0(v.x) * g1(v.y) * g0(v.z)};
    };
    p.exact_velocity_gradient = [](Vec3 v) -> Mat3 {
        const double x = v.x, y = v.y, z = v.z, e = std::exp(x);
        return {Vec3{e * (g0(x) + g1(x)) * g1(y) * g1(z), e * g0(x) * g2(y) * g1(z),
                     e * g0(x) * g1(y) * g2(z)},
                Vec3{-e * (g1(x) + g2(x)) * g0(y) * g1(z), -e * g1(x) * g1(y) * g1(z),
                     -e * g1(x) * g0(y) * g2(z)},
                Vec3{-e * (g0(x) + g1(x)) * g1(y) * g0(z), -e * g0(x) * g2(y) * g0(z),
                     -e * g0(x) * g1(y) * g1(z)}};
    };
    p.exact_pressure = [](Vec3 v) { return 0.01 * (v.x * v.y * v.z - 0.125); };
    p.force = [=](Vec3 v) -> Vec3 {
        const double x = v.x, y = v.y, z = v.z, e = std::exp(x);
        return {-mu * e *
                        (a3(x) * g1(y) * g1(z) + g0(x) * g3(y) * g1(z) +
                         g0(x) * g1(y) * g3(z)) +
                    0.01 * y * z,
                mu * e *
                        (b3(x) * g0(y) * g1(z) + g1(x) * g2(y) * g1(z) +
                         g1(x) * g0(y) * g3(z)) +
                    0.01 * x * z,
                mu * e *
                        (a3(x) * g1(y) * g0(z) + g0(x) * g3(y) * g0(z) +
                         g0(x) * g1(y) * g2(z)) +
                    0.01 * x * y};
    };
    p.boundary_velocity = [](Vec3) -> Vec3 { return {0, 0, 0}; };
    return p;
}

inline TestProblem make_problem_4(double mu) {
    TestProblem p;
    p.id = 4;
    p.mu = mu;
    auto q = [](double z) { return -z + 2 * z * z * z; };    // dQ/dz = 2q
    auto bigq = [](double z) { return -z * z + z * z * z * z; };
    p.exact_velocity = [=](Vec3 v) -> Vec3 {
        return {g0(v.x) * g1(v.y) * q(v.z), g1(v.x) * g0(v.y) * q(v.z),
                -g1(v.x) * g1(v.y) * bigq(v.z)};
    };
    p.exact_velocity_gradient = [=](Vec3 v) -> Mat3 {
        const double x = v.x, y = v.y, z = v.z;
        const double dq = -1 + 6 * z * z;
        const double dbigq = -2 * z + 4 * z * z * z;
        return {Vec3{g1(x) * g1(y) * q(z), g0(x) * g2(y) * q(z), g0(x) * g1(y) * dq},
                Vec3{g2(x) * g0(y) * q(z), g1(x) * g1(y) * q(z), g1(x) * g0(y) * dq},
                Vec3{-g2(x) * g1(y) * bigq(z), -g1(x) * g2(y) * bigq(z),
                     -g1(x) * g1(y) * dbigq}};
    };
    p.exact_pressure = [](Vec3 v) { return p1(v.x) * p1(v.y) * p1(v.z); };
    p.force = [=](Vec3 v) -> Vec3 {
        const double x = v.x, y = v.y, z = v.z;
        return {-mu * (g2(x) * g1(y) * q(z) + g0(x) * g3(y) * q(z) +
                       g0(x) * g1(y) * 12 * z) +
                    dp1(x) * p1(y) * p1(z),
                -mu * (g3(x) * g0(y) * q(z) + g1(x) * g2(y) * q(z) +
                       g1(x) * g0(y) * 12 * z) +
                    p1(x) * dp1(y) * p1(z),
                mu * (g3(x) * g1(y) * bigq(z) + g1(x) * g3(y) * bigq(z) +
                      g1(x) * g1(y) * (-2 + 12 * z * z)) +
                    p1(x) * p1(y) * dp1(z)};
    };
    // moving top lid, all other faces at rest
    p.boundary_velocity = [](Vec3 v) -> Vec3 {
        if (std::abs(v.z - 1.0) < 1e-12)
            return {g0(v.x) * g1(v.y), g1(v.x) * g0(v.y), 0.0};
        return {0, 0, 0};
    };
    return p;
}

inline TestProblem make_problem_5(double mu) {
    TestProblem p;
    p.id = 5;
    p.mu = mu;
    auto s = [](double t) { return std::sin(kPi * t); };
    auto c = [](double t) { return std::cos(kPi * t); };
    p.exact_velocity = [=](Vec3 v) -> Vec3 {
        return {s(v.x) * c(v.y) * c(v.z), c(v.x) * s(v.y) * c(v.z),
                -2 * c(v.x) * c(v.y) * s(v.z)};
    };
    p.exact_velocity_gradient = [=](Vec3 v) -> Mat3 {
        const double x = v.x, y = v.y, z = v.z;
        return {Vec3{kPi * c(x) * c(y) * c(z), -kPi * s(x) * s(y) * c(z),
                     -kPi * s(x) * c(y) * s(z)},
                Vec3{-kPi * s(x) * s(y) * c(z), kPi * c(x) * c(y) * c(z),
                     -kPi * c(x) * s(y) * s(z)},
                Vec3{2 * kPi * s(x) * c(y) * s(z), 2 * kPi * c(x) * s(y) * s(z),
                     -2 * kPi * c(x) * c(y) * c(z)}};
    };
    p.exact_pressure = [=](Vec3 v) { return c(v.x) * c(v.y) * c(v.z); };
    p.force = [=](Vec3 v) -> Vec3 {
        const double a = 3 * mu * kPi * kPi - kPi;
        const double b = 6 * mu * kPi * kPi + kPi;
        return {a * s(v.x) * c(v.y) * c(v.z), a * c(v.x) * s(v.y) * c(v.z),
                -b * c(v.x) * c(v.y) * s(v.z)};
    };
    // tangential shear on every face, written out per face
    p.boundary_velocity = [=](Vec3 v) -> Vec3 {
        const double x = v.x, y = v.y, z = v.z;
        const double eps = 1e-12;
        if (std::abs(z) < eps) return {s(x) * c(y), c(x) * s(y), 0.0};
        if (std::abs(z - 1) < eps) return {-s(x) * c(y), -c(x) * s(y), 0.0};
        if (std::abs(y) < eps) return {s(x) * c(z), 0.0, -2 * c(x) * s(z)};
        if (std::abs(y - 1) < eps) return {-s(x) * c(z), 0.0, 2 * c(x) * s(z)};
        if (std::abs(x) < eps) return {0.0, s(y) * c(z), -2 * c(y) * s(z)};
        if (std::abs(x - 1) < eps) return {0.0, -s(y) * c(z), 2 * c(y) * s(z)};
        throw std::invalid_argument("boundary velocity queried off the cube boundary");
    };
    return p;
}

}  // namespace detail

/// The five benchmark problems; viscosity scales the viscous part of the
/// forcing only.
inline TestProblem problem(int id, double mu = 1.0) {
    switch (id) {
        case 1: return detail::make_problem_1(mu);
        case 2: return detail::make_problem_2(mu);
        case 3: return detail::make_problem_3(mu);
        case 4: return detail::make_problem_4(mu);
        case 5: return detail::make_problem_5(mu);
        default: throw std::invalid_argument("problem id must be 1..5");
    }
}

enum class CubeFace { xmin, xmax, ymin, ymax, zmin, zmax };

inline CubeFace parse_cube_face(const std::string& name) {
    if (name == "x0" || name == "xmin") return CubeFace::xmin;
    if (name == "x1" || name == "xmax") return CubeFace::xmax;
    if (name == "y0" || name == "ymin") return CubeFace::ymin;
    if (name == "y1" || name == "ymax") return CubeFace::ymax;
    if (name == "z0" || name == "zmin" || name == "bottom") return CubeFace::zmin;
    if (name == "z1" || name == "zmax" || name == "top") return CubeFace::zmax;
    throw std::invalid_argument("unknown cube face: " + name);
}

struct BoundarySample {
    Vec3 position;
    Vec3 velocity;          // boundary data g_D
    double normal_component;
};

/// g_D sampled on an (n+1)x(n+1) grid of the given face; the normal
/// component is reported alongside for the no-inflow check.
inline std::vector<BoundarySample> sample_boundary_field(const TestProblem& problem,
                                                         CubeFace face, int n) {
    if (n < 1) throw std::invalid_argument("grid resolution must be >= 1");
    const int axis = static_cast<int>(face) / 2;
    const double plane = (static_cast<int>(face) % 2 == 0) ? 0.0 : 1.0;
    std::vector<BoundarySample> out;
    out.reserve(static_cast<std::size_t>(n + 1) * (n + 1));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            const double a = double(i) / n, b = double(j) / n;
            Vec3 pos;
            pos[axis] = plane;
            pos[(axis + 1) % 3] = a;
            pos[(axis + 2) % 3] = b;
            const Vec3 vel = problem.boundary_velocity(pos);
            out.push_back({pos, vel, vel[axis]});
        }
    return out;
}

/// CSV columns x,y,z,vx,vy,vz in full double precision.
inline void write_boundary_field_csv(const std::vector<BoundarySample>& samples,
                                     std::ostream& os) {
    os << "x,y,z,vx,vy,vz\n";
    char buf[256];
    for (const auto& s : samples) {
        std::snprintf(buf, sizeof(buf), "%.16e,%.16e,%.16e,%.16e,%.16e,%.16e\n",
                      s.position.x, s.position.y, s.position.z, s.velocity.x, s.velocity.y,
                      s.velocity.z);
        os << buf;
    }
}

}  // namespace ministokes
