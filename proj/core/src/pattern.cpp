#include <foldship/pattern.hpp>
#include <foldship/mass_model.hpp>
#include <foldship/textio.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

namespace foldship {

namespace {

constexpr double kPieceGap = 60.0;   // spacing between cut pieces, mm
constexpr double kStripGap = 20.0;   // spacing between sheath strips, mm
constexpr double kStripMax = 1200.0; // longest single sheath strip, mm

}

CreasePattern unfold(const KreslingParams& p, double r_pct, double t_sheath) {
    const SegmentGeometry g = derive_segment(p);
    CreasePattern pat;

    const double shift = g.d_g * std::cos(g.theta_g) - g.s;
    const double row_h = g.d_g * std::sin(g.theta_g);
    const int n = p.n, m = p.m;

    // wall parallelograms; odd rows mirrored so shared fold lines coincide
    for (int r = 0; r < m; ++r) {
        const bool even = (r % 2 == 0);
        const double x0 = even ? 0.0 : shift;
        const double y0 = r * row_h;
        const double ux = even ? shift : -shift;
        for (int j = 0; j < n; ++j) {
            const Point2 P0{x0 + j * g.s, y0};
            const Point2 P1{x0 + (j + 1) * g.s, y0};
            const Point2 P2{P1.x + ux, y0 + row_h};
            const Point2 P3{P0.x + ux, y0 + row_h};
            if (even) {
                pat.panels.push_back({{P0, P1, P2}});
                pat.panels.push_back({{P0, P2, P3}});
                pat.creases.push_back({P0, P2, CreaseKind::valley});
            } else {
                pat.panels.push_back({{P0, P1, P3}});
                pat.panels.push_back({{P1, P2, P3}});
                pat.creases.push_back({P1, P3, CreaseKind::valley});
            }
        }
    }
    // ring fold lines (horizontal levels); outermost ones are cut edges
    for (int t = 0; t <= m; ++t) {
        const double x0 = (t % 2 == 0) ? 0.0 : shift;
        const double y = t * row_h;
        const CreaseKind kind =
            (t == 0 || t == m) ? CreaseKind::boundary : CreaseKind::mountain;
        for (int j = 0; j < n; ++j)
            pat.creases.push_back({{x0 + j * g.s, y}, {x0 + (j + 1) * g.s, y}, kind});
    }
    // side (b_g) fold lines; the two seam edges of each row are cut edges
    for (int r = 0; r < m; ++r) {
        const bool even = (r % 2 == 0);
        const double x0 = even ? 0.0 : shift;
        const double y0 = r * row_h;
        const double ux = even ? shift : -shift;
        for (int j = 0; j <= n; ++j) {
            const CreaseKind kind =
                (j == 0 || j == n) ? CreaseKind::boundary : CreaseKind::mountain;
            pat.creases.push_back(
                {{x0 + j * g.s, y0}, {x0 + j * g.s + ux, y0 + row_h}, kind});
        }
    }

    const double grid_w = n * g.s + std::abs(shift);
    const double grid_h = m * row_h;

    // two separate cap pieces, flat edge down
    const double cap_x0 = grid_w + kPieceGap;
    const double angle0 = -std::numbers::pi / 2.0 - g.phi;
    for (int c = 0; c < 2; ++c) {
        const double cx = cap_x0 + p.R;
        const double cy = p.R + c * (2.0 * p.R + kPieceGap);
        std::vector<Point2> outline;
        outline.reserve(n);
        for (int i = 0; i < n; ++i) {
            const double a = angle0 + 2.0 * std::numbers::pi * i / n;
            outline.push_back({cx + p.R * std::cos(a), cy + p.R * std::sin(a)});
        }
        pat.caps.push_back(std::move(outline));
    }

    // sheath strips, chopped to a manageable length
    double strips_w = 0;
    double strips_h = 0;
    if (r_pct > 0 && t_sheath > 0) {
        const double L = tube_length_mm(g, n, m);
        double remaining = (L - g.d_g * n * m) * r_pct / 100.0;
        const double strip_x0 = cap_x0 + 2.0 * p.R + kPieceGap;
        int k = 0;
        while (remaining > 1e-9) {
            const double len = std::min(remaining, kStripMax);
            pat.strips.push_back({{strip_x0 + k * (t_sheath + kStripGap), 0.0},
                                  t_sheath, len});
            strips_h = std::max(strips_h, len);
            strips_w = strip_x0 + k * (t_sheath + kStripGap) + t_sheath - 0.0;
            remaining -= len;
            ++k;
        }
    }

    pat.width = std::max({grid_w, cap_x0 + 2.0 * p.R, strips_w});
    pat.height = std::max({grid_h, 4.0 * p.R + kPieceGap, strips_h});
    return pat;
}

namespace {

std::string pt(double x, double y, double height) {
    // SVG y axis points down; flip so the pattern reads upright
    return num(x, "%.3f") + " " + num(height - y, "%.3f");
}

const char* kind_class(CreaseKind k) {
    switch (k) {
        case CreaseKind::mountain: return "mountain";
        case CreaseKind::valley: return "valley";
        default: return "boundary";
    }
}

}

void export_svg(std::ostream& os, const CreasePattern& pattern, const SvgStyle& style,
                const std::vector<std::string>& comments) {
    const double W = pattern.width, H = pattern.height;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    for (const auto& c : comments) os << "<!-- " << c << " -->\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(W, "%.3f")
       << "mm\" height=\"" << num(H, "%.3f") << "mm\" viewBox=\"0 0 "
       << num(W, "%.3f") << " " << num(H, "%.3f") << "\">\n";
    os << "<style>\n"
       << ".panel{fill:" << style.panel_fill << ";stroke:none}\n"
       << ".mountain{fill:none;stroke:" << style.mountain_color << ";stroke-width:"
       << num(style.stroke_mm, "%.3f") << "}\n"
       << ".valley{fill:none;stroke:" << style.valley_color << ";stroke-width:"
       << num(style.stroke_mm, "%.3f") << ";stroke-dasharray:6 4}\n"
       << ".boundary{fill:none;stroke:" << style.boundary_color << ";stroke-width:"
       << num(style.boundary_stroke_mm, "%.3f") << "}\n"
       << "</style>\n";
    for (const auto& panel : pattern.panels) {
        os << "<path class=\"panel\" d=\"M " << pt(panel.pts[0].x, panel.pts[0].y, H)
           << " L " << pt(panel.pts[1].x, panel.pts[1].y, H) << " L "
           << pt(panel.pts[2].x, panel.pts[2].y, H) << " Z\"/>\n";
    }
    for (const auto& cap : pattern.caps) {
        os << "<path class=\"boundary\" d=\"M ";
        for (std::size_t i = 0; i < cap.size(); ++i) {
            if (i) os << " L ";
            os << pt(cap[i].x, cap[i].y, H);
        }
        os << " Z\"/>\n";
    }
    for (const auto& strip : pattern.strips) {
        os << "<path class=\"boundary\" d=\"M " << pt(strip.origin.x, strip.origin.y, H)
           << " L " << pt(strip.origin.x + strip.w, strip.origin.y, H) << " L "
           << pt(strip.origin.x + strip.w, strip.origin.y + strip.h, H) << " L "
           << pt(strip.origin.x, strip.origin.y + strip.h, H) << " Z\"/>\n";
    }
    for (const auto& crease : pattern.creases) {
        os << "<path class=\"" << kind_class(crease.kind) << "\" d=\"M "
           << pt(crease.a.x, crease.a.y, H) << " L " << pt(crease.b.x, crease.b.y, H)
           << "\"/>\n";
    }
    os << "</svg>\n";
}

}
