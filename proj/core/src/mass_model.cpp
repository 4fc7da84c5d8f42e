#include <foldship/mass_model.hpp>
#include <foldship/mesh.hpp>
#include <foldship/textio.hpp>

#include <algorithm>
#include <cmath>
#include <ostream>

namespace foldship {

namespace {

constexpr double fit_eps = 1e-9; // relative slack on geometric fit checks

void require(bool ok, const std::string& msg) {
    if (!ok) throw config_error(msg);
}

}

void validate_inputs(const DesignInputs& in) {
    KreslingParams kp{in.n, in.m, in.lambda, in.D / 2.0, in.H0 / in.m};
    validate(kp);
    require(in.D > 0 && in.H0 > 0 && in.H1 > 0, "site dimensions D, H0, H1 must be positive");
    require(in.rho_air > 0 && in.rho_He >= 0, "gas densities must be positive");
    require(in.rho_He <= in.rho_air, "lifting gas must not be denser than air");
    require(in.m_CT >= 0 && in.m_mecatrn >= 0 && in.m_motors >= 0 &&
                in.m_propellers >= 0 && in.m_battery >= 0 &&
                in.m_simpleTPUjct >= 0 && in.m_latticeTPUjct >= 0 &&
                in.m_valve >= 0 && in.m_kevlar >= 0,
            "component masses must be non-negative");
    require(in.N_motors >= 0 && in.N_battery >= 0 && in.N_patchs >= 0 &&
                in.N_seal >= 0 && in.N_valve >= 0 && in.N_exo >= 0 && in.N_body >= 1,
            "component counts must be non-negative (at least one body)");
    require(in.d_env >= 0 && in.d_glue >= 0, "areal densities must be non-negative");
    require(in.t_ovlp >= 0 && in.t_sheath >= 0, "overlap and sheath widths must be non-negative");
    require(in.r_pct >= 0 && in.r_pct <= 100, "sheath ratio must be within [0, 100] %");
    require(in.kevlar_length_m >= 0 && in.Dist_body >= 0, "lengths must be non-negative");
    require(in.L_tubes > 0, "stock tube length must be positive");
    // N_patchs may exceed n*(m+1) for small grids; the rollup caps lattice
    // junctions at the vertex count and books the rest as plain ones.
}

double tube_length_mm(const SegmentGeometry& g, int n, int m) {
    return m * n * (g.d_g + g.b_g + g.s) + n * g.s;
}

double heron_area(double a, double b, double c) {
    const double p = 0.5 * (a + b + c);
    const double r = p * (p - a) * (p - b) * (p - c);
    if (!(r >= 0.0))
        throw geometry_error("triangle inequality violated for sides " + num(a) + ", " +
                             num(b) + ", " + num(c));
    return std::sqrt(r);
}

double envelope_surface_m2(const SegmentGeometry& g, int n, int m,
                           double r_pct, double t_sheath, double* sheath_m2) {
    const double caps = 2.0 * n * g.s * g.s / (4.0 * std::tan(g.phi));
    const double walls = m * 2.0 * n * heron_area(g.s, g.b_g, g.d_g);
    const double L = tube_length_mm(g, n, m);
    const double L_sheath = (L - g.d_g * n * m) * r_pct / 100.0;
    const double S_sheath = L_sheath * t_sheath * 1e-6;
    if (sheath_m2) *sheath_m2 = S_sheath;
    return (caps + walls) * 1e-6 + S_sheath;
}

DesignEvaluation evaluate_design(const DesignInputs& in, int n, int m, double lambda) {
    if (in.N_body != 1)
        throw unsupported_error("multi-body evaluation (N_body = " +
                                std::to_string(in.N_body) + ") is not supported");

    DesignEvaluation ev;
    ev.params = KreslingParams{n, m, lambda, in.D / 2.0, in.H0 / m};
    ev.geom = derive_segment(ev.params, /*require_bistable=*/true);
    const SegmentGeometry& g = ev.geom;

    ev.L_skeleton_mm = tube_length_mm(g, n, m);
    ev.S_envelope_m2 = envelope_surface_m2(g, n, m, in.r_pct, in.t_sheath, &ev.S_sheath_m2);

    const TriMesh mesh = build_mesh(ev.params, g.alpha_deployed);
    ev.volume_deployed_m3 = enclosed_volume(mesh);
    ev.deployed_height_mm = m * height_at(g, ev.params, g.alpha_deployed);

    // junctions sit on every ring vertex; lattice patches cannot outnumber them
    const int junction_count = n * (m + 1);
    const int lattice = std::min(in.N_patchs, junction_count);

    MassBreakdown& mb = ev.mass;
    mb.exoskeleton_tubes_g = ev.L_skeleton_mm * 1e-3 * in.m_CT +
                             in.kevlar_length_m * in.m_kevlar;
    mb.junctions_g = lattice * in.m_latticeTPUjct +
                     (junction_count - lattice) * in.m_simpleTPUjct;
    mb.envelope_g = (ev.S_envelope_m2 - ev.S_sheath_m2) * (in.d_env + in.d_glue);
    mb.sheath_g = ev.S_sheath_m2 * (in.d_env + in.d_glue);
    mb.seal_overlap_g = in.N_seal * (n * g.s * 1e-3) * (in.t_ovlp * 1e-3) * in.d_env;
    mb.mechatronics_g = in.m_mecatrn + in.N_motors * (in.m_motors + in.m_propellers);
    mb.battery_g = in.N_battery * in.m_battery;
    mb.valves_g = in.N_valve * in.m_valve;
    mb.total_g = mb.envelope_g + mb.sheath_g + mb.exoskeleton_tubes_g + mb.junctions_g +
                 mb.mechatronics_g + mb.battery_g + mb.valves_g + mb.seal_overlap_g;

    ev.lift_g = ev.volume_deployed_m3 * (in.rho_air - in.rho_He) * 1000.0;
    ev.extra_payload_g = ev.lift_g - mb.total_g;

    ev.fits_height = ev.deployed_height_mm <= in.H1 * (1.0 + fit_eps);
    ev.fits_folded = (m * ev.params.h0 <= in.H0 * (1.0 + fit_eps)) &&
                     (2.0 * ev.params.R <= in.D * (1.0 + fit_eps));
    ev.feasible = ev.extra_payload_g > 0.0 && ev.fits_height && ev.fits_folded;
    return ev;
}

DesignEvaluation evaluate_design(const DesignInputs& in) {
    return evaluate_design(in, in.n, in.m, in.lambda);
}

std::vector<TubeEdge> tube_edges(const SegmentGeometry& g, int n, int m) {
    std::vector<TubeEdge> edges;
    edges.reserve(static_cast<std::size_t>(3 * n) * m + n);
    for (int k = 0; k < m; ++k) {
        for (int i = 0; i < n; ++i) edges.push_back({"d_g", g.d_g});
        for (int i = 0; i < n; ++i) edges.push_back({"b_g", g.b_g});
        for (int i = 0; i < n; ++i) edges.push_back({"s", g.s});
    }
    for (int i = 0; i < n; ++i) edges.push_back({"s", g.s}); // closing ring
    return edges;
}

CutPlan cut_plan(std::vector<TubeEdge> edges, double stock_mm) {
    if (!(stock_mm > 0))
        throw error("cut plan: stock length must be positive");
    for (const auto& e : edges)
        if (e.length_mm > stock_mm * (1.0 + fit_eps))
            throw error("cut plan: edge class " + e.kind + " (" + num(e.length_mm, "%.1f") +
                        " mm) exceeds the stock length " + num(stock_mm, "%.1f") + " mm");

    std::stable_sort(edges.begin(), edges.end(),
                     [](const TubeEdge& a, const TubeEdge& b) {
                         return a.length_mm > b.length_mm;
                     });

    CutPlan plan;
    plan.stock_mm = stock_mm;
    for (const auto& e : edges) {
        bool placed = false;
        for (auto& bar : plan.bars) {
            if (bar.used_mm + e.length_mm <= stock_mm * (1.0 + fit_eps)) {
                bar.pieces.push_back(e);
                bar.used_mm += e.length_mm;
                placed = true;
                break;
            }
        }
        if (!placed)
            plan.bars.push_back({{e}, e.length_mm, 0.0});
    }
    plan.total_waste_mm = 0.0;
    for (auto& bar : plan.bars) {
        bar.waste_mm = stock_mm - bar.used_mm;
        plan.total_waste_mm += bar.waste_mm;
    }
    return plan;
}

void write_cut_plan(std::ostream& os, const CutPlan& plan,
                    const std::vector<std::string>& comments) {
    write_comments(os, "# ", comments);
    os << "stock length " << num(plan.stock_mm, "%.1f") << " mm, "
       << plan.bars.size() << " bars, total waste "
       << num(plan.total_waste_mm, "%.1f") << " mm\n";
    for (std::size_t i = 0; i < plan.bars.size(); ++i) {
        const CutBar& bar = plan.bars[i];
        os << "bar " << i + 1 << " (used " << num(bar.used_mm, "%.1f")
           << " mm, waste " << num(bar.waste_mm, "%.1f") << " mm):";
        for (const auto& e : bar.pieces)
            os << " " << e.kind << "=" << num(e.length_mm, "%.1f");
        os << "\n";
    }
}

void write_bom_csv(std::ostream& os, const DesignInputs& in,
                   const DesignEvaluation& ev,
                   const std::vector<std::string>& comments) {
    write_comments(os, "# ", comments);
    os << "component,quantity,unit,unit_mass_g,subtotal_g\n";
    const auto row = [&os](const char* name, double qty, const char* unit,
                           double unit_mass, double subtotal) {
        os << name << "," << num(qty, "%.6g") << "," << unit << ","
           << num(unit_mass, "%.6g") << "," << num(subtotal, "%.6g") << "\n";
    };
    const int junction_count = ev.params.n * (ev.params.m + 1);
    const int lattice = std::min(in.N_patchs, junction_count);
    const double tube_m = ev.L_skeleton_mm * 1e-3;
    row("carbon tube", tube_m, "m", in.m_CT, tube_m * in.m_CT);
    if (in.kevlar_length_m > 0)
        row("kevlar wire", in.kevlar_length_m, "m", in.m_kevlar,
            in.kevlar_length_m * in.m_kevlar);
    row("junction (lattice patch)", lattice, "piece", in.m_latticeTPUjct,
        lattice * in.m_latticeTPUjct);
    row("junction (plain)", junction_count - lattice, "piece", in.m_simpleTPUjct,
        (junction_count - lattice) * in.m_simpleTPUjct);
    row("envelope film", ev.S_envelope_m2 - ev.S_sheath_m2, "m2", in.d_env + in.d_glue,
        ev.mass.envelope_g);
    row("sheath strips", ev.S_sheath_m2, "m2", in.d_env + in.d_glue, ev.mass.sheath_g);
    const double seal_area = in.N_seal * (ev.params.n * ev.geom.s * 1e-3) * (in.t_ovlp * 1e-3);
    row("seal overlap", seal_area, "m2", in.d_env, ev.mass.seal_overlap_g);
    row("mechatronics core", 1, "piece", in.m_mecatrn, in.m_mecatrn);
    row("motor", in.N_motors, "piece", in.m_motors, in.N_motors * in.m_motors);
    row("propeller", in.N_motors, "piece", in.m_propellers, in.N_motors * in.m_propellers);
    row("battery", in.N_battery, "piece", in.m_battery, in.N_battery * in.m_battery);
    row("valve", in.N_valve, "piece", in.m_valve, in.N_valve * in.m_valve);
    os << "total,,,," << num(ev.mass.total_g, "%.6g") << "\n";
}

}
