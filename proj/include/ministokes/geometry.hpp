#pragma once

#include <array>
#include <cmath>

namespace ministokes {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
    constexpr double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

constexpr Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
constexpr Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
constexpr Vec3 operator*(double s, Vec3 v) { return {s * v.x, s * v.y, s * v.z}; }
constexpr Vec3 operator*(Vec3 v, double s) { return s * v; }
constexpr Vec3 operator/(Vec3 v, double s) { return {v.x / s, v.y / s, v.z / s}; }
constexpr Vec3& operator+=(Vec3& a, Vec3 b) { a = a + b; return a; }
constexpr Vec3& operator-=(Vec3& a, Vec3 b) { a = a - b; return a; }

constexpr double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Vec3 cross(Vec3 a, Vec3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Vec3 v) { return std::sqrt(dot(v, v)); }
constexpr double norm2(Vec3 v) { return dot(v, v); }

/// Four vertex positions of a tetrahedron.
using TetPoints = std::array<Vec3, 4>;

/// Signed volume under the stored vertex ordering; positive for a
/// right-handed tet.
inline double signed_tet_volume(const TetPoints& t) {
    return dot(t[1] - t[0], cross(t[2] - t[0], t[3] - t[0])) / 6.0;
}

/// Vertex index pairs of the six tet edges, in a fixed order.
inline constexpr std::array<std::array<int, 2>, 6> kTetEdges = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

inline std::array<double, 6> tet_edge_lengths(const TetPoints& t) {
    std::array<double, 6> len{};
    for (int e = 0; e < 6; ++e)
        len[e] = norm(t[kTetEdges[e][1]] - t[kTetEdges[e][0]]);
    return len;
}

inline double tet_max_edge(const TetPoints& t) {
    double m = 0.0;
    for (double l : tet_edge_lengths(t)) m = std::max(m, l);
    return m;
}

inline double triangle_area(Vec3 a, Vec3 b, Vec3 c) {
    return 0.5 * norm(cross(b - a, c - a));
}

}  // namespace ministokes
