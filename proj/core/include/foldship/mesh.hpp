#pragma once

#include <foldship/geometry.hpp>

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

namespace foldship {

struct Vec3 {
    double x = 0, y = 0, z = 0;
};

// Watertight oriented triangle mesh in millimetres, faces counter-clockwise
// seen from outside.
struct TriMesh {
    std::vector<Vec3> vertices;
    std::vector<std::array<int, 3>> faces;
};

// 3D realization of the folded body at fold angle alpha: m+1 polygon rings
// (odd rings carry the twist so each bi-segment translates without net
// rotation), two fan-triangulated caps, 2n wall triangles per segment.
TriMesh build_mesh(const KreslingParams& p, double alpha);

// Throws topology_error unless every edge is shared by exactly two faces
// with opposite orientation.
void check_watertight(const TriMesh& mesh);

// Signed volume via the divergence theorem. Mesh coordinates are mm, the
// result is m^3; positive for outward-oriented surfaces. Validates
// watertightness first.
double enclosed_volume(const TriMesh& mesh);

// OBJ text export (vertices in mm, 1-based triangular faces).
void write_obj(std::ostream& os, const TriMesh& mesh,
               const std::vector<std::string>& comments);

}
