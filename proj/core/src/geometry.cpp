#include <foldship/geometry.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace foldship {

namespace {

constexpr double pi = std::numbers::pi;

double clamp_unit(double v) {
    return std::clamp(v, -1.0, 1.0);
}

}

void validate(const KreslingParams& p) {
    if (p.n < 3)
        throw geometry_error("polygon side count must be at least 3, got " + std::to_string(p.n));
    if (p.m < 1)
        throw geometry_error("segment count must be at least 1, got " + std::to_string(p.m));
    if (!(p.lambda > 0.0) || p.lambda > 1.0)
        throw geometry_error("angle ratio must be in (0, 1], got " + std::to_string(p.lambda));
    if (!(p.R > 0.0))
        throw geometry_error("radius must be positive, got " + std::to_string(p.R));
    if (p.h0 < 0.0)
        throw geometry_error("folded segment height must be non-negative, got " + std::to_string(p.h0));
}

SegmentGeometry derive_segment(const KreslingParams& p, bool require_bistable) {
    validate(p);
    if (require_bistable && p.lambda <= 0.5)
        throw geometry_error("monostable configuration: angle ratio " + std::to_string(p.lambda) +
                             " has no distinct deployed state (needs lambda > 0.5)");

    SegmentGeometry g;
    g.phi = pi / p.n;
    g.gamma = pi / 2.0 - g.phi;
    g.s = 2.0 * p.R * std::sin(g.phi);
    g.d_c = 2.0 * p.R * std::cos(g.gamma - p.lambda * g.gamma);
    g.b_c = std::sqrt(g.s * g.s + g.d_c * g.d_c -
                      2.0 * g.s * g.d_c * std::cos(p.lambda * g.gamma));
    g.b_g = std::sqrt(g.b_c * g.b_c + p.h0 * p.h0);
    g.d_g = std::sqrt(g.d_c * g.d_c + p.h0 * p.h0);
    g.theta_g = std::acos(clamp_unit((g.s * g.s + g.d_g * g.d_g - g.b_g * g.b_g) /
                                     (2.0 * g.s * g.d_g)));
    g.alpha_folded = 2.0 * p.lambda * g.gamma;
    g.alpha_deployed = 2.0 * (1.0 - p.lambda) * g.gamma;
    g.untwisted = (p.lambda == 1.0);
    return g;
}

double height_at(const SegmentGeometry& g, const KreslingParams& p, double alpha) {
    const double lo = std::min(g.alpha_deployed, g.alpha_folded);
    const double hi = std::max(g.alpha_deployed, g.alpha_folded);
    const double span = hi - lo;
    const double tol = 1e-9 * std::max(1.0, span);
    if (alpha < lo - tol || alpha > hi + tol)
        throw geometry_error("fold angle " + std::to_string(alpha) +
                             " outside the reachable range [" + std::to_string(lo) +
                             ", " + std::to_string(hi) + "]");
    const double two_phi = 2.0 * g.phi;
    const double radicand = p.h0 * p.h0 +
        2.0 * p.R * p.R * (std::cos(alpha + two_phi) - std::cos(g.alpha_folded + two_phi));
    if (radicand < -1e-6 * p.R * p.R)
        throw geometry_error("fold angle " + std::to_string(alpha) +
                             " is past the deployed stop (height undefined)");
    return std::sqrt(std::max(radicand, 0.0));
}

double side_at(const SegmentGeometry& g, const KreslingParams& p, double alpha) {
    const double h = height_at(g, p, alpha);
    return std::sqrt(2.0 * p.R * p.R * (1.0 - std::cos(alpha)) + h * h);
}

FoldState fold_state(const SegmentGeometry& g, const KreslingParams& p, double alpha) {
    FoldState st;
    st.alpha = alpha;
    st.h = height_at(g, p, alpha);
    st.b = std::sqrt(2.0 * p.R * p.R * (1.0 - std::cos(alpha)) + st.h * st.h);
    st.strain = st.b / g.b_g - 1.0;
    st.normalized_energy = 0.5 * st.strain * st.strain;
    return st;
}

}
