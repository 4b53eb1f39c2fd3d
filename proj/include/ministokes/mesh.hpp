#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "ministokes/geometry.hpp"

namespace ministokes {

/// Conforming tetrahedral mesh. Tets are stored with positive signed volume;
/// boundary vertices are the vertices of faces shared by exactly one tet.
/// Immutable after construction.
struct TetMesh {
    std::vector<Vec3> vertices;
    std::vector<std::array<int, 4>> tets;
    std::vector<int> boundary_vertices;      // sorted, unique
    std::vector<std::uint8_t> is_boundary;   // per-vertex flag

    int num_vertices() const { return static_cast<int>(vertices.size()); }
    int num_tets() const { return static_cast<int>(tets.size()); }

    TetPoints tet_points(int t) const {
        const auto& k = tets[t];
        return {vertices[k[0]], vertices[k[1]], vertices[k[2]], vertices[k[3]]};
    }

    double total_volume() const {
        double v = 0.0;
        for (int t = 0; t < num_tets(); ++t) v += signed_tet_volume(tet_points(t));
        return v;
    }
};

struct BoundaryFace {
    int tet;
    int local_face;              // face f is opposite vertex f
    std::array<int, 3> verts;    // in the tet's stored vertex order
};

/// Local face f lists the three tet vertices other than f.
inline constexpr std::array<std::array<int, 3>, 4> kTetFaces = {
    {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}};

namespace detail {

inline std::uint64_t face_key(int a, int b, int c) {
    int v[3] = {a, b, c};
    std::sort(v, v + 3);
    return (static_cast<std::uint64_t>(v[0]) << 42) |
           (static_cast<std::uint64_t>(v[1]) << 21) | static_cast<std::uint64_t>(v[2]);
}

inline std::unordered_map<std::uint64_t, int> face_multiplicity(const TetMesh& mesh) {
    std::unordered_map<std::uint64_t, int> mult;
    mult.reserve(mesh.tets.size() * 4);
    for (const auto& tet : mesh.tets)
        for (const auto& f : kTetFaces)
            ++mult[face_key(tet[f[0]], tet[f[1]], tet[f[2]])];
    return mult;
}

}  // namespace detail

/// Faces with multiplicity one, in (tet, local face) iteration order.
inline std::vector<BoundaryFace> boundary_faces(const TetMesh& mesh) {
    const auto mult = detail::face_multiplicity(mesh);
    std::vector<BoundaryFace> out;
    for (int t = 0; t < mesh.num_tets(); ++t) {
        const auto& tet = mesh.tets[t];
        for (int f = 0; f < 4; ++f) {
            const auto& lf = kTetFaces[f];
            std::array<int, 3> verts = {tet[lf[0]], tet[lf[1]], tet[lf[2]]};
            if (mult.at(detail::face_key(verts[0], verts[1], verts[2])) == 1)
                out.push_back({t, f, verts});
        }
    }
    return out;
}

/// Builds a TetMesh from raw arrays: canonicalizes every tet to positive
/// volume by one index swap, rejects (near-)degenerate tets, verifies index
/// ranges and face conformity, and classifies boundary vertices.
inline TetMesh make_mesh(std::vector<Vec3> vertices, std::vector<std::array<int, 4>> tets) {
    TetMesh mesh;
    mesh.vertices = std::move(vertices);
    mesh.tets = std::move(tets);

    const int nv = mesh.num_vertices();
    for (int t = 0; t < mesh.num_tets(); ++t) {
        auto& tet = mesh.tets[t];
        for (int k = 0; k < 4; ++k)
            if (tet[k] < 0 || tet[k] >= nv)
                throw std::invalid_argument("tet " + std::to_string(t) +
                                            ": vertex index out of range");
        double vol = signed_tet_volume(mesh.tet_points(t));
        if (vol < 0.0) {
            std::swap(tet[2], tet[3]);
            vol = -vol;
        }
        if (vol < 1e-14)
            throw std::invalid_argument("tet " + std::to_string(t) + ": zero volume");
    }

    const auto mult = detail::face_multiplicity(mesh);
    for (const auto& [key, count] : mult) {
        (void)key;
        if (count > 2) throw std::invalid_argument("non-conforming mesh: face shared by " +
                                                   std::to_string(count) + " tets");
    }

    mesh.is_boundary.assign(nv, 0);
    for (const auto& face : boundary_faces(mesh))
        for (int v : face.verts) mesh.is_boundary[v] = 1;
    for (int v = 0; v < nv; ++v)
        if (mesh.is_boundary[v]) mesh.boundary_vertices.push_back(v);
    return mesh;
}

/// Uniform (n+1)^3 grid on the unit cube, each cell split into the six
/// tetrahedra sharing the cell's main diagonal. Conforming by construction;
/// deterministic for fixed n.
inline TetMesh generate_structured_cube_mesh(int n) {
    if (n < 1) throw std::invalid_argument("subdivision count must be >= 1");
    const int m = n + 1;
    std::vector<Vec3> verts(static_cast<std::size_t>(m) * m * m);
    auto vid = [m](int i, int j, int k) { return (k * m + j) * m + i; };
    for (int k = 0; k < m; ++k)
        for (int j = 0; j < m; ++j)
            for (int i = 0; i < m; ++i)
                verts[vid(i, j, k)] = {double(i) / n, double(j) / n, double(k) / n};

    // Six vertex paths from cell corner (0,0,0) to (1,1,1), one per axis
    // permutation; odd permutations are listed with the last two vertices
    // swapped so every tet comes out positively oriented.
    static constexpr int kPerms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                         {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    static constexpr bool kOdd[6] = {false, true, true, false, false, true};

    std::vector<std::array<int, 4>> tets;
    tets.reserve(static_cast<std::size_t>(6) * n * n * n);
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i)
                for (int p = 0; p < 6; ++p) {
                    int d[3] = {0, 0, 0};
                    std::array<int, 4> tet{};
                    tet[0] = vid(i, j, k);
                    for (int s = 0; s < 3; ++s) {
                        d[kPerms[p][s]] = 1;
                        tet[s + 1] = vid(i + d[0], j + d[1], k + d[2]);
                    }
                    if (kOdd[p]) std::swap(tet[2], tet[3]);
                    tets.push_back(tet);
                }
    return make_mesh(std::move(verts), std::move(tets));
}

/// Length of the longest edge over all tets.
inline double mesh_spacing(const TetMesh& mesh) {
    if (mesh.num_tets() == 0) throw std::invalid_argument("empty mesh");
    double h = 0.0;
    for (int t = 0; t < mesh.num_tets(); ++t)
        h = std::max(h, tet_max_edge(mesh.tet_points(t)));
    return h;
}

}  // namespace ministokes
