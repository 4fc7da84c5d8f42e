#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <foldship/mesh.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <utility>

using namespace foldship;
using doctest::Approx;

namespace {

const KreslingParams kRef{7, 4, 0.9, 360.0, 80.0};

// Axis-aligned cube with 1 m (1000 mm) sides, outward-oriented.
TriMesh unit_cube(double shift_x = 0.0, double shift_y = 0.0, double shift_z = 0.0) {
    TriMesh mesh;
    for (const auto& [x, y, z] : {std::array<double, 3>{0, 0, 0}, {1, 0, 0}, {1, 1, 0},
                                  {0, 1, 0}, {0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}})
        mesh.vertices.push_back({x * 1000.0 + shift_x, y * 1000.0 + shift_y,
                                 z * 1000.0 + shift_z});
    mesh.faces = {{0, 2, 1}, {0, 3, 2}, {4, 5, 6}, {4, 6, 7}, {0, 1, 5}, {0, 5, 4},
                  {1, 2, 6}, {1, 6, 5}, {2, 3, 7}, {2, 7, 6}, {3, 0, 4}, {3, 4, 7}};
    return mesh;
}

std::size_t undirected_edge_count(const TriMesh& mesh) {
    std::set<std::pair<int, int>> edges;
    for (const auto& f : mesh.faces)
        for (int e = 0; e < 3; ++e) {
            int a = f[e], b = f[(e + 1) % 3];
            edges.insert({std::min(a, b), std::max(a, b)});
        }
    return edges.size();
}

double dist(const Vec3& a, const Vec3& b) {
    const double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

} // namespace

TEST_CASE("reference mesh has the counted vertices, edges and faces") {
    const SegmentGeometry g = derive_segment(kRef);
    const TriMesh mesh = build_mesh(kRef, g.alpha_deployed);
    // 7 * 5 ring vertices plus two cap centers; 14 cap + 56 wall triangles.
    CHECK(mesh.vertices.size() == 37);
    CHECK(mesh.faces.size() == 70);
    const std::size_t E = undirected_edge_count(mesh);
    CHECK(E == 105);
    // Euler characteristic of a closed genus-0 surface.
    CHECK(static_cast<long>(mesh.vertices.size()) - static_cast<long>(E) +
              static_cast<long>(mesh.faces.size()) ==
          2);
    CHECK_NOTHROW(check_watertight(mesh));
}

TEST_CASE("meshes stay watertight across fold angles and sizes") {
    for (const KreslingParams p :
         {KreslingParams{3, 2, 0.6, 120.0, 30.0}, KreslingParams{5, 7, 0.75, 250.0, 55.0},
          KreslingParams{10, 3, 0.88, 400.0, 90.0}}) {
        const SegmentGeometry g = derive_segment(p);
        for (double f : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            const double a = g.alpha_deployed + (g.alpha_folded - g.alpha_deployed) * f;
            const TriMesh mesh = build_mesh(p, a);
            CHECK(mesh.vertices.size() == static_cast<std::size_t>(p.n) * (p.m + 1) + 2);
            CHECK(mesh.faces.size() == static_cast<std::size_t>(2 * p.n) * (p.m + 1));
            CHECK_NOTHROW(check_watertight(mesh));
            CHECK(enclosed_volume(mesh) > 0.0);
        }
    }
}

TEST_CASE("tampered meshes are rejected") {
    const SegmentGeometry g = derive_segment(kRef);
    const TriMesh good = build_mesh(kRef, g.alpha_deployed);

    TriMesh flipped = good;
    std::swap(flipped.faces[20][1], flipped.faces[20][2]);
    CHECK_THROWS_AS(check_watertight(flipped), topology_error);

    TriMesh holed = good;
    holed.faces.erase(holed.faces.begin() + 33);
    CHECK_THROWS_WITH_AS(check_watertight(holed), doctest::Contains("watertight"),
                         topology_error);

    TriMesh doubled = good;
    doubled.faces.push_back(doubled.faces[10]);
    CHECK_THROWS_AS(check_watertight(doubled), topology_error);

    TriMesh out_of_range = good;
    out_of_range.faces[5][2] = 999;
    CHECK_THROWS_WITH_AS(check_watertight(out_of_range), doctest::Contains("out of range"),
                         topology_error);

    TriMesh degenerate = good;
    degenerate.faces[5] = {4, 4, 9};
    CHECK_THROWS_WITH_AS(check_watertight(degenerate), doctest::Contains("degenerate"),
                         topology_error);

    CHECK_THROWS_AS(enclosed_volume(holed), topology_error);
}

TEST_CASE("enclosed volumes match the frozen deployed and folded values") {
    const SegmentGeometry g = derive_segment(kRef);
    const double v_dep = enclosed_volume(build_mesh(kRef, g.alpha_deployed));
    const double v_fold = enclosed_volume(build_mesh(kRef, g.alpha_folded));
    CHECK(v_dep == Approx(0.8265814893591442).epsilon(1e-9));
    CHECK(v_fold == Approx(0.042830244059417995).epsilon(1e-9));
    CHECK(v_dep / v_fold == Approx(19.29901422491162).epsilon(1e-9));

    // Nominal published bands.
    CHECK(std::abs(v_dep - 0.825) / 0.825 < 0.03);
    CHECK(std::abs(v_fold - 0.0417) / 0.0417 < 0.05);
    CHECK(std::abs(v_dep / v_fold - 19.78) / 19.78 < 0.05);
}

TEST_CASE("unit cube volume is exact") {
    CHECK(enclosed_volume(unit_cube()) == 1.0);
    // The divergence-theorem volume is translation invariant.
    CHECK(enclosed_volume(unit_cube(123.25, -77.5, 9.125)) == Approx(1.0).epsilon(1e-12));
}

TEST_CASE("untwisted mesh reduces to an analytic prism") {
    const KreslingParams p{6, 2, 1.0, 100.0, 50.0};
    const SegmentGeometry g = derive_segment(p);
    CHECK(g.untwisted);
    const TriMesh mesh = build_mesh(p, g.alpha_deployed);
    const double h = height_at(g, p, g.alpha_deployed);
    CHECK(h == Approx(180.27756377319946).epsilon(1e-12));
    const double analytic =
        p.n * p.R * p.R * std::sin(2.0 * std::numbers::pi / p.n) / 2.0 * p.m * h * 1e-9;
    CHECK(enclosed_volume(mesh) == Approx(analytic).epsilon(1e-12));
    CHECK(enclosed_volume(mesh) == Approx(0.009367496997597593).epsilon(1e-12));
}

TEST_CASE("segment volumes are additive in the segment count") {
    KreslingParams p1 = kRef;
    p1.m = 1;
    KreslingParams p3 = kRef;
    p3.m = 3;
    const SegmentGeometry g = derive_segment(kRef);
    const double a = g.alpha_deployed + (g.alpha_folded - g.alpha_deployed) * 0.4;
    const double v1 = enclosed_volume(build_mesh(p1, a));
    const double v3 = enclosed_volume(build_mesh(p3, a));
    const double v4 = enclosed_volume(build_mesh(kRef, a));
    CHECK(v3 == Approx(3.0 * v1).epsilon(1e-12));
    CHECK(v4 == Approx(4.0 * v1).epsilon(1e-12));
}

TEST_CASE("wall triangle edges are the s, b, d panel edges") {
    const SegmentGeometry g = derive_segment(kRef);
    const double a = g.alpha_deployed + (g.alpha_folded - g.alpha_deployed) * 0.37;
    const FoldState st = fold_state(g, kRef, a);
    CHECK(st.b == Approx(547.2416402716289).epsilon(1e-12));
    const TriMesh mesh = build_mesh(kRef, a);

    std::array<double, 3> want{g.s, st.b, g.d_g};
    std::sort(want.begin(), want.end());
    for (std::size_t fi = static_cast<std::size_t>(2 * kRef.n); fi < mesh.faces.size();
         ++fi) {
        const auto& f = mesh.faces[fi];
        std::array<double, 3> got{dist(mesh.vertices[f[0]], mesh.vertices[f[1]]),
                                  dist(mesh.vertices[f[1]], mesh.vertices[f[2]]),
                                  dist(mesh.vertices[f[2]], mesh.vertices[f[0]])};
        std::sort(got.begin(), got.end());
        for (int e = 0; e < 3; ++e) {
            CAPTURE(fi);
            CHECK(got[e] == Approx(want[e]).epsilon(1e-9));
        }
    }
    // The diagonal d_g stays constant along the fold; only b varies.
    const TriMesh dep = build_mesh(kRef, g.alpha_deployed);
    const auto& f0 = dep.faces[2 * kRef.n];
    std::array<double, 3> edges{dist(dep.vertices[f0[0]], dep.vertices[f0[1]]),
                                dist(dep.vertices[f0[1]], dep.vertices[f0[2]]),
                                dist(dep.vertices[f0[2]], dep.vertices[f0[0]])};
    std::sort(edges.begin(), edges.end());
    CHECK(edges[2] == Approx(g.d_g).epsilon(1e-9));
    CHECK(edges[1] == Approx(g.b_g).epsilon(1e-9));
}

TEST_CASE("OBJ export carries counts, comments and 1-based faces") {
    const SegmentGeometry g = derive_segment(kRef);
    const TriMesh mesh = build_mesh(kRef, g.alpha_deployed);
    std::ostringstream os;
    write_obj(os, mesh, {"hello", "world"});
    const std::string text = os.str();
    CHECK(text.rfind("# hello\n# world\n", 0) == 0);
    CHECK(text.find("# 37 vertices, 70 faces, units mm") != std::string::npos);

    std::istringstream is(text);
    std::string line;
    int v = 0, f = 0;
    int min_idx = 1 << 30, max_idx = 0;
    while (std::getline(is, line)) {
        if (line.rfind("v ", 0) == 0) ++v;
        if (line.rfind("f ", 0) == 0) {
            ++f;
            std::istringstream fs(line.substr(2));
            int a, b, c;
            fs >> a >> b >> c;
            min_idx = std::min({min_idx, a, b, c});
            max_idx = std::max({max_idx, a, b, c});
        }
    }
    CHECK(v == 37);
    CHECK(f == 70);
    CHECK(min_idx == 1);
    CHECK(max_idx == 37);
}
