#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "ministokes/geometry.hpp"
#include "ministokes/mesh.hpp"

namespace ministokes {

/// Radius ratio 3r/R: 1 for the regular tetrahedron, 0 for a degenerate one.
/// Inradius from volume over total face area, circumradius from the products
/// of opposite edge lengths. Invariant under rigid motion and uniform scaling.
inline double shape_ratio(const TetPoints& t) {
    const double vol = std::abs(signed_tet_volume(t));
    const double max_edge = tet_max_edge(t);
    if (vol < 1e-14 * max_edge * max_edge * max_edge) return 0.0;

    const double area = triangle_area(t[1], t[2], t[3]) + triangle_area(t[0], t[2], t[3]) +
                        triangle_area(t[0], t[1], t[3]) + triangle_area(t[0], t[1], t[2]);
    const double r = 3.0 * vol / area;

    const auto len = tet_edge_lengths(t);
    const double a = len[0] * len[5];  // |01|*|23|
    const double b = len[1] * len[4];  // |02|*|13|
    const double c = len[2] * len[3];  // |03|*|12|
    const double prod = std::max(0.0, (a + b + c) * (a + b - c) * (a - b + c) * (-a + b + c));
    const double big_r = std::sqrt(prod) / (24.0 * vol);

    return std::clamp(3.0 * r / big_r, 0.0, 1.0);
}

/// Interior dihedral angles in degrees, one per edge in kTetEdges order.
/// Regular tet: all six equal arccos(1/3) = 70.5288...
inline std::array<double, 6> dihedral_angles(const TetPoints& t) {
    const double vol = std::abs(signed_tet_volume(t));
    const double max_edge = tet_max_edge(t);
    if (vol < 1e-14 * max_edge * max_edge * max_edge)
        throw std::domain_error("degenerate tetrahedron: face normals undefined");

    std::array<Vec3, 4> normal;
    for (int f = 0; f < 4; ++f) {
        const auto& lf = kTetFaces[f];
        Vec3 n = cross(t[lf[1]] - t[lf[0]], t[lf[2]] - t[lf[0]]);
        if (dot(n, t[f] - t[lf[0]]) > 0.0) n = -1.0 * n;  // outward: away from opposite vertex
        normal[f] = n / norm(n);
    }

    std::array<double, 6> angles{};
    for (int e = 0; e < 6; ++e) {
        // faces adjoining edge (i,j) are the two faces opposite the other vertices
        const int i = kTetEdges[e][0], j = kTetEdges[e][1];
        int other[2], m = 0;
        for (int v = 0; v < 4; ++v)
            if (v != i && v != j) other[m++] = v;
        const double c = std::clamp(-dot(normal[other[0]], normal[other[1]]), -1.0, 1.0);
        angles[e] = std::acos(c) * 180.0 / std::numbers::pi;
    }
    return angles;
}

struct MinMeanMax {
    double min = 0.0;
    double mean = 0.0;
    double max = 0.0;
};

struct MeshQualityReport {
    double h = 0.0;
    int num_vertices = 0;
    int num_tets = 0;
    MinMeanMax shape_ratio;
    MinMeanMax dihedral_deg;
};

/// Shape ratio per tet, dihedral angles pooled over all tets x six edges.
inline MeshQualityReport quality_report(const TetMesh& mesh) {
    if (mesh.num_tets() == 0) throw std::invalid_argument("empty mesh");
    MeshQualityReport rep;
    rep.num_vertices = mesh.num_vertices();
    rep.num_tets = mesh.num_tets();
    rep.h = mesh_spacing(mesh);

    double sr_min = 1.0, sr_max = 0.0, sr_sum = 0.0;
    double da_min = 180.0, da_max = 0.0, da_sum = 0.0;
    for (int t = 0; t < mesh.num_tets(); ++t) {
        const auto pts = mesh.tet_points(t);
        const double sr = shape_ratio(pts);
        sr_min = std::min(sr_min, sr);
        sr_max = std::max(sr_max, sr);
        sr_sum += sr;
        for (double a : dihedral_angles(pts)) {
            da_min = std::min(da_min, a);
            da_max = std::max(da_max, a);
            da_sum += a;
        }
    }
    rep.shape_ratio = {sr_min, sr_sum / mesh.num_tets(), sr_max};
    rep.dihedral_deg = {da_min, da_sum / (6.0 * mesh.num_tets()), da_max};
    return rep;
}

/// JSON with full double precision.
inline void write_quality_report_json(const MeshQualityReport& rep, std::ostream& os) {
    char buf[512];
    std::snprintf(buf, sizeof(buf),
                  "{\n"
                  "  \"h\": %.16e,\n"
                  "  \"num_vertices\": %d,\n"
                  "  \"num_tets\": %d,\n"
                  "  \"shape_ratio\": {\"min\": %.16e, \"mean\": %.16e, \"max\": %.16e},\n"
                  "  \"dihedral_deg\": {\"min\": %.16e, \"mean\": %.16e, \"max\": %.16e}\n"
                  "}\n",
                  rep.h, rep.num_vertices, rep.num_tets, rep.shape_ratio.min,
                  rep.shape_ratio.mean, rep.shape_ratio.max, rep.dihedral_deg.min,
                  rep.dihedral_deg.mean, rep.dihedral_deg.max);
    os << buf;
}

}  // namespace ministokes
