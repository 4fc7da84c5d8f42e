#pragma once

#include <foldship/errors.hpp>

namespace foldship {

// One Kresling body: an n-sided polygon extruded into m twist-folded
// segments. lambda is the angle ratio that controls the diagonal creases
// (bistable for lambda > 0.5), R the circumradius and h0 the minimum bent
// (fully folded) height of a single segment.
//
// Units: millimetres and radians throughout the geometry layer.
struct KreslingParams {
    int n = 7;
    int m = 4;
    double lambda = 0.9;
    double R = 360.0;
    double h0 = 80.0;
};

// Derived per-segment quantities. The _c values are the classical
// (zero-thickness) panel edges; the _g values are the generalized ones,
// lifted out of plane by h0 to make room for panel thickness.
struct SegmentGeometry {
    double phi = 0;    // half opening angle, pi/n
    double gamma = 0;  // pi/2 - phi
    double s = 0;      // polygon side length
    double b_c = 0;
    double d_c = 0;
    double b_g = 0;
    double d_g = 0;
    double theta_g = 0;        // angle between base edge and diagonal
    double alpha_folded = 0;   // stable fold angle, 2*lambda*gamma
    double alpha_deployed = 0; // stable fold angle, 2*(1-lambda)*gamma
    bool untwisted = false;    // lambda == 1 degenerates to a straight extrusion
};

// Kinematic state at fold angle alpha in [alpha_deployed, alpha_folded].
struct FoldState {
    double alpha = 0;
    double h = 0;                 // segment height
    double b = 0;                 // instantaneous side length of the panel
    double strain = 0;            // b/b_g - 1
    double normalized_energy = 0; // strain^2 / 2
};

// Throws geometry_error when the parameter set is invalid.
void validate(const KreslingParams& p);

// Closed-form segment geometry. With require_bistable the monostable range
// lambda <= 0.5 is rejected (no distinct deployed state exists there).
SegmentGeometry derive_segment(const KreslingParams& p, bool require_bistable = false);

// Height and side length along the fold; alpha outside the reachable range
// raises geometry_error (the height radicand goes negative past the
// deployed stop).
double height_at(const SegmentGeometry& g, const KreslingParams& p, double alpha);
double side_at(const SegmentGeometry& g, const KreslingParams& p, double alpha);

FoldState fold_state(const SegmentGeometry& g, const KreslingParams& p, double alpha);

}
