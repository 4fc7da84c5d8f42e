#pragma once

#include <foldship/geometry.hpp>

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

namespace foldship {

struct Point2 {
    double x = 0, y = 0;
};

enum class CreaseKind { mountain, valley, boundary };

struct Crease {
    Point2 a, b;
    CreaseKind kind = CreaseKind::boundary;
};

// One wall triangle of the flat pattern, true size in mm.
struct Panel {
    std::array<Point2, 3> pts;
};

// Axis-aligned sheath strip rectangle.
struct Strip {
    Point2 origin;
    double w = 0, h = 0;
};

// Flat manufacturing pattern: m rows of n parallelograms (each split by its
// diagonal crease), two separate cap outlines and the sheath strips.
// Translation-normalized: the bounding box min corner is (0, 0).
struct CreasePattern {
    std::vector<Panel> panels;
    std::vector<Crease> creases;
    std::vector<std::vector<Point2>> caps;
    std::vector<Strip> strips;
    double width = 0, height = 0;
};

// r_pct / t_sheath control the sheath strips; pass 0 to omit them.
CreasePattern unfold(const KreslingParams& p, double r_pct = 0, double t_sheath = 0);

struct SvgStyle {
    double stroke_mm = 0.8;
    double boundary_stroke_mm = 1.2;
    std::string mountain_color = "#1f5fbf";
    std::string valley_color = "#2e8b57";
    std::string boundary_color = "#101010";
    std::string panel_fill = "#f6f1e6";
};

// SVG 1.1 with millimetre units; one path element per panel, crease, cap
// outline and strip; stable ordering so identical patterns re-export
// byte-identically.
void export_svg(std::ostream& os, const CreasePattern& pattern, const SvgStyle& style,
                const std::vector<std::string>& comments);

}
