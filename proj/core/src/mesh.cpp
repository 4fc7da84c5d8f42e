#include <foldship/mesh.hpp>
#include <foldship/textio.hpp>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <ostream>
#include <unordered_map>

namespace foldship {

TriMesh build_mesh(const KreslingParams& p, double alpha) {
    const SegmentGeometry g = derive_segment(p);
    const double h = height_at(g, p, alpha);
    const int n = p.n, m = p.m;

    TriMesh mesh;
    mesh.vertices.reserve(static_cast<std::size_t>(n) * (m + 1) + 2);
    mesh.faces.reserve(static_cast<std::size_t>(2 * n) * (m + 1));

    // rings; odd rings rotated by alpha so consecutive segments mirror and
    // every bi-segment stacks by pure translation
    std::vector<std::vector<int>> rings(m + 1);
    for (int k = 0; k <= m; ++k) {
        const double rot = (k % 2 == 1) ? alpha : 0.0;
        const double z = k * h;
        rings[k].resize(n);
        for (int i = 0; i < n; ++i) {
            const double a = 2.0 * std::numbers::pi * i / n + rot;
            rings[k][i] = static_cast<int>(mesh.vertices.size());
            mesh.vertices.push_back({p.R * std::cos(a), p.R * std::sin(a), z});
        }
    }
    const int c_bot = static_cast<int>(mesh.vertices.size());
    mesh.vertices.push_back({0.0, 0.0, 0.0});
    const int c_top = static_cast<int>(mesh.vertices.size());
    mesh.vertices.push_back({0.0, 0.0, m * h});

    // caps: fans from the centroid; bottom wound to face -z, top to face +z
    for (int i = 0; i < n; ++i)
        mesh.faces.push_back({c_bot, rings[0][(i + 1) % n], rings[0][i]});
    for (int i = 0; i < n; ++i)
        mesh.faces.push_back({c_top, rings[m][i], rings[m][(i + 1) % n]});

    for (int k = 0; k < m; ++k) {
        const auto& A = rings[k];
        const auto& B = rings[k + 1];
        for (int i = 0; i < n; ++i) {
            const int j = (i + 1) % n;
            if (k % 2 == 0) {
                mesh.faces.push_back({A[i], A[j], B[j]});
                mesh.faces.push_back({A[i], B[j], B[i]});
            } else {
                mesh.faces.push_back({A[i], A[j], B[i]});
                mesh.faces.push_back({A[j], B[j], B[i]});
            }
        }
    }
    return mesh;
}

void check_watertight(const TriMesh& mesh) {
    // every directed edge must occur exactly once, and its reverse once
    std::unordered_map<std::uint64_t, int> directed;
    directed.reserve(mesh.faces.size() * 3);
    const auto key = [](int a, int b) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
               static_cast<std::uint32_t>(b);
    };
    const int nv = static_cast<int>(mesh.vertices.size());
    for (const auto& f : mesh.faces) {
        for (int e = 0; e < 3; ++e) {
            const int a = f[e], b = f[(e + 1) % 3];
            if (a < 0 || b < 0 || a >= nv || b >= nv)
                throw topology_error("face references vertex out of range");
            if (a == b)
                throw topology_error("degenerate face edge (repeated vertex)");
            if (++directed[key(a, b)] > 1)
                throw topology_error("directed edge used twice; mesh is not consistently oriented");
        }
    }
    for (const auto& [k, c] : directed) {
        const int a = static_cast<int>(k >> 32);
        const int b = static_cast<int>(k & 0xffffffffu);
        auto rev = directed.find(key(b, a));
        if (rev == directed.end())
            throw topology_error("boundary edge found; mesh is not watertight");
    }
}

double enclosed_volume(const TriMesh& mesh) {
    check_watertight(mesh);
    double six_v = 0.0;
    for (const auto& f : mesh.faces) {
        const Vec3& a = mesh.vertices[f[0]];
        const Vec3& b = mesh.vertices[f[1]];
        const Vec3& c = mesh.vertices[f[2]];
        six_v += a.x * (b.y * c.z - b.z * c.y) -
                 a.y * (b.x * c.z - b.z * c.x) +
                 a.z * (b.x * c.y - b.y * c.x);
    }
    return six_v / 6.0 * 1e-9; // mm^3 -> m^3
}

void write_obj(std::ostream& os, const TriMesh& mesh,
               const std::vector<std::string>& comments) {
    write_comments(os, "# ", comments);
    os << "# " << mesh.vertices.size() << " vertices, " << mesh.faces.size()
       << " faces, units mm\n";
    for (const auto& v : mesh.vertices)
        os << "v " << num(v.x, "%.6f") << " " << num(v.y, "%.6f") << " "
           << num(v.z, "%.6f") << "\n";
    for (const auto& f : mesh.faces)
        os << "f " << f[0] + 1 << " " << f[1] + 1 << " " << f[2] + 1 << "\n";
}

}
