#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "ministokes/mesh.hpp"
#include "ministokes/mesh_io.hpp"
#include "ministokes/mesh_quality.hpp"

using namespace ministokes;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

const TetPoints kRegularTet = {Vec3{1, 1, 1}, Vec3{1, -1, -1}, Vec3{-1, 1, -1},
                               Vec3{-1, -1, 1}};
const TetPoints kTrirectangularTet = {Vec3{0, 0, 0}, Vec3{1, 0, 0}, Vec3{0, 1, 0},
                                      Vec3{0, 0, 1}};

TetPoints random_tet(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    while (true) {
        TetPoints t;
        for (auto& v : t) v = {u(rng), u(rng), u(rng)};
        const double edge = tet_max_edge(t);
        if (std::abs(signed_tet_volume(t)) > 1e-3 * edge * edge * edge) return t;
    }
}

}  // namespace

TEST_CASE("structured cube mesh counts and volume") {
    for (int n : {1, 2, 3, 4}) {
        const TetMesh mesh = generate_structured_cube_mesh(n);
        CHECK(mesh.num_vertices() == (n + 1) * (n + 1) * (n + 1));
        CHECK(mesh.num_tets() == 6 * n * n * n);
        CHECK(static_cast<int>(boundary_faces(mesh).size()) == 12 * n * n);
        CHECK_THAT(mesh.total_volume(), WithinAbs(1.0, 1e-12));
        for (int t = 0; t < mesh.num_tets(); ++t)
            REQUIRE(signed_tet_volume(mesh.tet_points(t)) > 0.0);
    }
    CHECK_THROWS_AS(generate_structured_cube_mesh(0), std::invalid_argument);
}

TEST_CASE("structured mesh spacing is the cell diagonal") {
    CHECK_THAT(mesh_spacing(generate_structured_cube_mesh(1)),
               WithinRel(std::sqrt(3.0), 1e-15));
    CHECK_THAT(mesh_spacing(generate_structured_cube_mesh(4)),
               WithinRel(std::sqrt(3.0) / 4.0, 1e-15));
    for (int n : {2, 3, 5, 6})
        CHECK_THAT(mesh_spacing(generate_structured_cube_mesh(n)),
                   WithinRel(std::sqrt(3.0) / n, 1e-14));
}

TEST_CASE("boundary classification is combinatorial") {
    const TetMesh mesh = generate_structured_cube_mesh(2);
    // only the cube center is interior on the n=2 grid
    CHECK(mesh.boundary_vertices.size() == 26);
    int interior = 0;
    for (int v = 0; v < mesh.num_vertices(); ++v)
        if (!mesh.is_boundary[v]) ++interior;
    CHECK(interior == 1);

    // single tet: all four faces on the boundary
    TetMesh single = make_mesh(
        {Vec3{0, 0, 0}, Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}}, {{{0, 1, 2, 3}}});
    CHECK(boundary_faces(single).size() == 4);
    CHECK(single.boundary_vertices.size() == 4);
}

TEST_CASE("mesh round-trips through the text format") {
    const TetMesh mesh = generate_structured_cube_mesh(2);
    std::stringstream ss;
    save_mesh(mesh, ss);
    const TetMesh back = load_mesh(ss);
    REQUIRE(back.num_vertices() == mesh.num_vertices());
    REQUIRE(back.num_tets() == mesh.num_tets());
    for (int v = 0; v < mesh.num_vertices(); ++v) {
        CHECK(back.vertices[v].x == mesh.vertices[v].x);
        CHECK(back.vertices[v].y == mesh.vertices[v].y);
        CHECK(back.vertices[v].z == mesh.vertices[v].z);
    }
    for (int t = 0; t < mesh.num_tets(); ++t) CHECK(back.tets[t] == mesh.tets[t]);
}

TEST_CASE("mesh loader reports malformed input with line numbers") {
    SECTION("five indices on a tet line") {
        std::istringstream in("4 1\n0 0 0\n1 0 0\n0 1 0\n0 0 1\n0 1 2 3 3\n");
        try {
            load_mesh(in);
            FAIL("expected MeshIoError");
        } catch (const MeshIoError& e) {
            CHECK(e.line() == 6);
            CHECK(std::string(e.what()).find("line 6") != std::string::npos);
        }
    }
    SECTION("bad header") {
        std::istringstream in("banana\n");
        CHECK_THROWS_AS(load_mesh(in), MeshIoError);
    }
    SECTION("truncated vertex block") {
        std::istringstream in("4 1\n0 0 0\n1 0 0\n");
        CHECK_THROWS_AS(load_mesh(in), MeshIoError);
    }
    SECTION("comments and blank lines are ignored") {
        std::istringstream in(
            "# a comment\n4 1\n\n0 0 0\n1 0 0\n# another\n0 1 0\n0 0 1\n0 1 2 3\n");
        const TetMesh mesh = load_mesh(in);
        CHECK(mesh.num_tets() == 1);
    }
    SECTION("zero-volume tet is rejected") {
        std::istringstream in("4 1\n0 0 0\n1 0 0\n0 1 0\n0.5 0.5 0\n0 1 2 3\n");
        CHECK_THROWS_AS(load_mesh(in), MeshIoError);
    }
    SECTION("out-of-range index is rejected") {
        std::istringstream in("4 1\n0 0 0\n1 0 0\n0 1 0\n0 0 1\n0 1 2 7\n");
        CHECK_THROWS_AS(load_mesh(in), MeshIoError);
    }
}

TEST_CASE("negatively oriented tets are reoriented on load") {
    // 0 1 3 2 swaps two vertices of the reference tet: negative volume
    std::istringstream in("4 1\n0 0 0\n1 0 0\n0 1 0\n0 0 1\n0 1 3 2\n");
    const TetMesh mesh = load_mesh(in);
    CHECK(signed_tet_volume(mesh.tet_points(0)) > 0.0);
}

TEST_CASE("non-conforming meshes are rejected") {
    // the same tet listed twice: its faces get multiplicity > 2 after the
    // third copy shares them
    std::vector<Vec3> verts = {Vec3{0, 0, 0}, Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1},
                               Vec3{1, 1, 1}};
    std::vector<std::array<int, 4>> tets = {{0, 1, 2, 3}, {1, 2, 3, 4}, {1, 2, 3, 0}};
    CHECK_THROWS_AS(make_mesh(verts, tets), std::invalid_argument);
}

TEST_CASE("shape ratio reference values") {
    CHECK_THAT(shape_ratio(kRegularTet), WithinAbs(1.0, 1e-12));
    CHECK_THAT(shape_ratio(kTrirectangularTet), WithinAbs(std::sqrt(3.0) - 1.0, 1e-12));

    const TetPoints flat = {Vec3{0, 0, 0}, Vec3{1, 0, 0}, Vec3{0, 1, 0},
                            Vec3{0.5, 0.5, 0.0}};
    CHECK(shape_ratio(flat) == 0.0);
}

TEST_CASE("shape ratio invariances") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> scale(0.1, 10.0);
    for (int trial = 0; trial < 50; ++trial) {
        const TetPoints t = random_tet(rng);
        const double rho = shape_ratio(t);
        REQUIRE(rho >= 0.0);
        REQUIRE(rho <= 1.0);

        // vertex permutation
        TetPoints perm = {t[2], t[0], t[3], t[1]};
        CHECK_THAT(shape_ratio(perm), WithinAbs(rho, 1e-12));

        // uniform scaling
        const double s = scale(rng);
        TetPoints scaled;
        for (int i = 0; i < 4; ++i) scaled[i] = s * t[i];
        CHECK_THAT(shape_ratio(scaled), WithinAbs(rho, 1e-12));

        // translation
        TetPoints shifted;
        for (int i = 0; i < 4; ++i) shifted[i] = t[i] + Vec3{3.5, -2.0, 7.0};
        CHECK_THAT(shape_ratio(shifted), WithinAbs(rho, 1e-11));
    }
}

TEST_CASE("dihedral angle reference values") {
    const double regular = std::acos(1.0 / 3.0) * 180.0 / std::numbers::pi;  // 70.5288...
    for (double a : dihedral_angles(kRegularTet)) CHECK_THAT(a, WithinAbs(regular, 1e-9));

    // trirectangular: the three edges meeting at the right corner have 90
    // degree dihedrals (coordinate-plane faces are orthogonal)
    const auto angles = dihedral_angles(kTrirectangularTet);
    // edges (0,1), (0,2), (0,3) are the first three in kTetEdges order
    for (int e = 0; e < 3; ++e) CHECK_THAT(angles[e], WithinAbs(90.0, 1e-9));

    // all angles of any tet lie in (0, 180)
    std::mt19937 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        const TetPoints t = random_tet(rng);
        auto as = dihedral_angles(t);
        for (double a : as) {
            CHECK(a > 0.0);
            CHECK(a < 180.0);
        }
        // permutation invariance as a multiset
        TetPoints perm = {t[3], t[1], t[0], t[2]};
        auto bs = dihedral_angles(perm);
        std::sort(as.begin(), as.end());
        std::sort(bs.begin(), bs.end());
        for (int e = 0; e < 6; ++e) CHECK_THAT(bs[e], WithinAbs(as[e], 1e-9));
    }
}

TEST_CASE("near-flat sliver has extreme dihedral angles") {
    const TetPoints sliver = {Vec3{0, 0, 0}, Vec3{1, 0, 0}, Vec3{0, 1, 0},
                              Vec3{1, 1, 1e-3}};
    const auto angles = dihedral_angles(sliver);
    const double lo = *std::min_element(angles.begin(), angles.end());
    const double hi = *std::max_element(angles.begin(), angles.end());
    CHECK((lo < 1.0 || hi > 179.0));
    CHECK(shape_ratio(sliver) < 0.02);
}

TEST_CASE("dihedral angles of a degenerate tet are an error") {
    const TetPoints flat = {Vec3{0, 0, 0}, Vec3{1, 0, 0}, Vec3{0, 1, 0},
                            Vec3{0.25, 0.25, 0.0}};
    CHECK_THROWS_AS(dihedral_angles(flat), std::domain_error);
}

TEST_CASE("quality report on structured meshes") {
    const TetMesh mesh = generate_structured_cube_mesh(3);
    const MeshQualityReport rep = quality_report(mesh);
    CHECK(rep.num_vertices == 64);
    CHECK(rep.num_tets == 162);
    CHECK_THAT(rep.h, WithinRel(std::sqrt(3.0) / 3.0, 1e-14));

    // Kuhn tets are congruent up to reflection: constant shape ratio
    CHECK_THAT(rep.shape_ratio.max - rep.shape_ratio.min, WithinAbs(0.0, 1e-12));
    CHECK_THAT(rep.shape_ratio.mean, WithinAbs(rep.shape_ratio.min, 1e-12));
    CHECK(rep.shape_ratio.min > 0.0);
    CHECK(rep.shape_ratio.max <= 1.0);
    CHECK(rep.dihedral_deg.min <= rep.dihedral_deg.mean);
    CHECK(rep.dihedral_deg.mean <= rep.dihedral_deg.max);
    CHECK(rep.dihedral_deg.min > 0.0);
    CHECK(rep.dihedral_deg.max < 180.0);
}

TEST_CASE("quality report of a single regular tet") {
    TetMesh mesh = make_mesh({kRegularTet[0], kRegularTet[1], kRegularTet[2], kRegularTet[3]},
                             {{{0, 1, 2, 3}}});
    const MeshQualityReport rep = quality_report(mesh);
    const double regular = std::acos(1.0 / 3.0) * 180.0 / std::numbers::pi;
    CHECK_THAT(rep.shape_ratio.min, WithinAbs(1.0, 1e-12));
    CHECK_THAT(rep.shape_ratio.max, WithinAbs(1.0, 1e-12));
    CHECK_THAT(rep.dihedral_deg.min, WithinAbs(regular, 1e-9));
    CHECK_THAT(rep.dihedral_deg.max, WithinAbs(regular, 1e-9));
    CHECK_THAT(rep.h, WithinRel(2.0 * std::sqrt(2.0), 1e-14));
}

TEST_CASE("quality report on a jittered (unstructured-style) mesh") {
    // jitter the interior vertices of a structured mesh; topology unchanged,
    // so the mesh stays conforming while element quality spreads out, like
    // the ingested unstructured meshes this path exists for
    TetMesh mesh = generate_structured_cube_mesh(4);
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> jitter(-0.08, 0.08);
    std::vector<Vec3> verts = mesh.vertices;
    for (int v = 0; v < mesh.num_vertices(); ++v)
        if (!mesh.is_boundary[v]) verts[v] += Vec3{jitter(rng), jitter(rng), jitter(rng)};
    std::stringstream ss;  // exercise the ingestion path
    save_mesh(make_mesh(verts, mesh.tets), ss);
    const TetMesh jittered = load_mesh(ss);

    const MeshQualityReport rep = quality_report(jittered);
    CHECK_THAT(jittered.total_volume(), WithinAbs(1.0, 1e-12));
    CHECK(rep.shape_ratio.min > 0.0);
    CHECK(rep.shape_ratio.min <= rep.shape_ratio.mean);
    CHECK(rep.shape_ratio.mean <= rep.shape_ratio.max);
    CHECK(rep.shape_ratio.max <= 1.0);
    CHECK(rep.shape_ratio.mean < 0.95);  // jitter spreads the distribution
    std::ostringstream json;
    write_quality_report_json(rep, json);
    CHECK(json.str().find("\"shape_ratio\"") != std::string::npos);
    CHECK(json.str().find("\"dihedral_deg\"") != std::string::npos);
}

TEST_CASE("empty mesh operations are errors") {
    TetMesh empty;
    CHECK_THROWS_AS(mesh_spacing(empty), std::invalid_argument);
    CHECK_THROWS_AS(quality_report(empty), std::invalid_argument);
}
