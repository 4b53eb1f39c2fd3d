#pragma once

#include <array>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ministokes/mesh.hpp"

namespace ministokes {

class MeshIoError : public std::runtime_error {
public:
    MeshIoError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

namespace detail {

// Next non-comment, non-blank line; returns false at end of stream.
inline bool next_data_line(std::istream& in, std::string& line, int& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        const auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        return true;
    }
    return false;
}

}  // namespace detail

/// Text format: `NV NT`, then NV vertex lines `x y z`, then NT tet lines
/// `i0 i1 i2 i3` (0-based). `#` starts a comment line. Negative-volume tets
/// are reoriented on load; all TetMesh invariants are verified.
inline TetMesh load_mesh(std::istream& in) {
    std::string line;
    int lineno = 0;

    if (!detail::next_data_line(in, line, lineno)) throw MeshIoError(lineno, "empty stream");
    long long nv = 0, nt = 0;
    {
        std::istringstream ls(line);
        std::string extra;
        if (!(ls >> nv >> nt) || (ls >> extra))
            throw MeshIoError(lineno, "expected header 'NV NT', got '" + line + "'");
        if (nv < 4 || nt < 1) throw MeshIoError(lineno, "invalid mesh sizes");
    }

    std::vector<Vec3> vertices(static_cast<std::size_t>(nv));
    for (long long v = 0; v < nv; ++v) {
        if (!detail::next_data_line(in, line, lineno))
            throw MeshIoError(lineno, "unexpected end of stream in vertex block");
        std::istringstream ls(line);
        std::string extra;
        if (!(ls >> vertices[v].x >> vertices[v].y >> vertices[v].z) || (ls >> extra))
            throw MeshIoError(lineno, "expected 3 vertex coordinates");
    }

    std::vector<std::array<int, 4>> tets(static_cast<std::size_t>(nt));
    for (long long t = 0; t < nt; ++t) {
        if (!detail::next_data_line(in, line, lineno))
            throw MeshIoError(lineno, "unexpected end of stream in tet block");
        std::istringstream ls(line);
        std::string extra;
        auto& tet = tets[t];
        if (!(ls >> tet[0] >> tet[1] >> tet[2] >> tet[3]) || (ls >> extra))
            throw MeshIoError(lineno, "expected 4 vertex indices");
    }

    try {
        return make_mesh(std::move(vertices), std::move(tets));
    } catch (const std::invalid_argument& e) {
        throw MeshIoError(lineno, e.what());
    }
}

inline void save_mesh(const TetMesh& mesh, std::ostream& out) {
    out << mesh.num_vertices() << ' ' << mesh.num_tets() << '\n';
    char buf[128];
    for (const auto& v : mesh.vertices) {
        std::snprintf(buf, sizeof(buf), "%.17g %.17g %.17g\n", v.x, v.y, v.z);
        out << buf;
    }
    for (const auto& t : mesh.tets)
        out << t[0] << ' ' << t[1] << ' ' << t[2] << ' ' << t[3] << '\n';
}

inline TetMesh load_mesh_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open mesh file: " + path);
    return load_mesh(in);
}

inline void save_mesh_file(const TetMesh& mesh, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write mesh file: " + path);
    save_mesh(mesh, out);
}

}  // namespace ministokes
