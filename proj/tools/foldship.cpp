// foldship: design-to-mission toolkit for folding rigid airships.
// One config file drives every subcommand; outputs land in the configured
// output directory with a provenance comment naming the config hash.

#include <foldship/config.hpp>
#include <foldship/mesh.hpp>
#include <foldship/pattern.hpp>
#include <foldship/textio.hpp>
#include <foldship/version.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <string>

namespace fs = std::filesystem;
using namespace foldship;

namespace {

const char* kConfigReference = R"(Config file reference (all keys optional; defaults describe the reference
craft). The file starts with `version = 1`, then [section] blocks.

[design] fold parameters, site bounds and unit masses:
  n (sides), m (segments), lambda (crease angle ratio, bistable > 0.5)
  diameter_mm (720), folded_height_mm (320), deployed_height_mm (2440)
  rho_air_kg_m3 (1.231), rho_helium_kg_m3 (0.1692)
  tube_linear_density_g_m (3.76)     carbon tube, g/m
  mechatronics_g (30)                flight electronics with wiring, g
  motor_g (9.1), propeller_g (0.46), motor_count (4)
  battery_g (80), battery_count (1)
  junction_simple_g (0.75), junction_lattice_g (3.4)  printed joints, g
  lattice_patch_count (17)           joints carrying impact patches
  envelope_density_g_m2 (64.7912)    effective film density, g/m^2 (bare film: 70)
  glue_density_g_m2 (0), seal_overlap_mm (10), seal_line_count (2)
  sheath_width_mm (35), sheath_share_pct (10)
  valve_g (7), valve_count (1)
  exo_count (0), body_count (1), body_spacing_mm (0)
  kevlar_linear_density_g_m (0.28), kevlar_length_m (0)
  stock_tube_mm (1000)               stock bar length for the cut plan

[sweep] n_min/n_max (3/10), m_min/m_max (2/10),
  lambda_min/lambda_max/lambda_step (0.51/0.90/0.01)

[plant] base_mass_kg*, net_weight_N (0.196133), added_mass_{x,y,z,psi}_kg,
  C_D_{x,y,z,psi}, A_{x,y,z,psi}_m2*  (*derived from the design when omitted;
  y/psi mirror x when omitted)

[gains.x|y|z|psi] F_max (N; N*m for psi), v_max (m/s; rad/s), tol (m; rad)

[controller] sma_window_s (0), damping (true)
[sim] phys_hz (500), ctrl_hz (40)
[scenario] duration_s (100); repeatable `waypoint = t=<s> x=<m> z=<m> ...`
[power] motor_a/b/c (3.347/25.857/1.69, thrust N -> W), electronics_W (4.515),
  hover_thrust_N (mirrors net_weight_N), battery_Wh (14.8),
  mission_distance_m (300), mode (combined|split), C_D/rho_air_kg_m3/A_m2
  (mirror the x-axis plant)
[output] dir (out)

Exit codes: 0 success, 1 usage or config error, 2 infeasible design with
--require-feasible, 3 numeric failure.)";

struct Cli {
    std::string config_path;
    std::string out_dir;
    int n = -1;
    int m = -1;
    double lambda = -1;
    int exit_code = 0;

    ProjectConfig load() const {
        ProjectConfig cfg = config_path.empty() ? default_config()
                                                : load_config_file(config_path);
        if (n >= 0 || m >= 0 || lambda >= 0) apply_design_override(cfg, n, m, lambda);
        if (!out_dir.empty()) cfg.output_dir = out_dir;
        return cfg;
    }
};

void write_file(const ProjectConfig& cfg, const std::string& name,
                const std::function<void(std::ostream&)>& emit) {
    const fs::path path = fs::path(cfg.output_dir) / name;
    fs::create_directories(path.parent_path());
    std::ofstream os(path, std::ios::binary);
    if (!os) throw io_error("cannot open for writing: " + path.string());
    emit(os);
    os.flush();
    if (!os) throw io_error("write failed: " + path.string());
    std::cout << "wrote " << path.string() << "\n";
}

nlohmann::ordered_json evaluation_json(const ProjectConfig& cfg,
                                       const DesignEvaluation& ev) {
    nlohmann::ordered_json j;
    j["meta"]["tool"] = std::string(kToolName) + " " + kVersion;
    j["meta"]["config"] = cfg.fingerprint;
    j["params"] = {{"n", ev.params.n},
                   {"m", ev.params.m},
                   {"lambda", ev.params.lambda},
                   {"R_mm", ev.params.R},
                   {"h0_mm", ev.params.h0}};
    j["geometry"] = {{"s_mm", ev.geom.s},
                     {"b_g_mm", ev.geom.b_g},
                     {"d_g_mm", ev.geom.d_g},
                     {"theta_g_rad", ev.geom.theta_g},
                     {"alpha_folded_rad", ev.geom.alpha_folded},
                     {"alpha_deployed_rad", ev.geom.alpha_deployed},
                     {"deployed_height_mm", ev.deployed_height_mm}};
    j["surfaces"] = {{"tube_length_mm", ev.L_skeleton_mm},
                     {"envelope_m2", ev.S_envelope_m2},
                     {"sheath_m2", ev.S_sheath_m2}};
    j["volume_deployed_m3"] = ev.volume_deployed_m3;
    j["lift_g"] = ev.lift_g;
    j["mass_g"] = {{"envelope", ev.mass.envelope_g},
                   {"sheath", ev.mass.sheath_g},
                   {"exoskeleton_tubes", ev.mass.exoskeleton_tubes_g},
                   {"junctions", ev.mass.junctions_g},
                   {"mechatronics", ev.mass.mechatronics_g},
                   {"battery", ev.mass.battery_g},
                   {"valves", ev.mass.valves_g},
                   {"seal_overlap", ev.mass.seal_overlap_g},
                   {"total", ev.mass.total_g}};
    j["extra_payload_g"] = ev.extra_payload_g;
    j["fits_height"] = ev.fits_height;
    j["fits_folded"] = ev.fits_folded;
    j["feasible"] = ev.feasible;
    return j;
}

void cmd_eval(Cli& cli, bool require_feasible) {
    const ProjectConfig cfg = cli.load();
    const DesignEvaluation ev = evaluate_design(cfg.design);
    write_file(cfg, "eval.json",
               [&](std::ostream& os) { os << evaluation_json(cfg, ev).dump(2) << "\n"; });
    std::cout << "design n=" << ev.params.n << " m=" << ev.params.m
              << " lambda=" << num(ev.params.lambda, "%.4g") << "\n"
              << "  deployed height " << num(ev.deployed_height_mm, "%.1f")
              << " mm, volume " << num(ev.volume_deployed_m3, "%.4f") << " m^3\n"
              << "  lift " << num(ev.lift_g, "%.1f") << " g, mass "
              << num(ev.mass.total_g, "%.1f") << " g, extra payload "
              << num(ev.extra_payload_g, "%.1f") << " g\n"
              << "  " << (ev.feasible ? "feasible" : "infeasible") << "\n";
    if (require_feasible && !ev.feasible) {
        std::cerr << "error: design is infeasible and --require-feasible is set\n";
        cli.exit_code = 2;
    }
}

void cmd_sweep(Cli& cli, unsigned workers) {
    const ProjectConfig cfg = cli.load();
    const SweepResult result = run_sweep(cfg.design, cfg.grid, workers);
    write_file(cfg, "sweep.csv", [&](std::ostream& os) {
        write_sweep_csv(os, result, provenance_lines(cfg.fingerprint));
    });
    write_file(cfg, "sweep_summary.json",
               [&](std::ostream& os) { write_sweep_json(os, result, cfg.fingerprint); });
    std::cout << "evaluated " << result.evaluations.size() << " configurations, "
              << result.feasible.size() << " feasible\n";
    if (result.has_best) {
        std::cout << "best pair n=" << result.best_n << " m=" << result.best_m
                  << " with lambda in [" << num(result.best_lambda_min, "%.2f") << ", "
                  << num(result.best_lambda_max, "%.2f") << "]\n";
    } else {
        std::cout << "no feasible configuration in the grid\n";
    }
}

void cmd_pattern(Cli& cli, double alpha_deg, bool alpha_set) {
    const ProjectConfig cfg = cli.load();
    const KreslingParams p{cfg.design.n, cfg.design.m, cfg.design.lambda,
                           cfg.design.D / 2.0, cfg.design.H0 / cfg.design.m};
    const SegmentGeometry g = derive_segment(p);
    const auto comments = provenance_lines(cfg.fingerprint);

    const CreasePattern pattern = unfold(p, cfg.design.r_pct, cfg.design.t_sheath);
    write_file(cfg, "pattern.svg", [&](std::ostream& os) {
        export_svg(os, pattern, SvgStyle{}, comments);
    });

    const TriMesh deployed = build_mesh(p, g.alpha_deployed);
    const TriMesh folded = build_mesh(p, g.alpha_folded);
    write_file(cfg, "mesh_deployed.obj",
               [&](std::ostream& os) { write_obj(os, deployed, comments); });
    write_file(cfg, "mesh_folded.obj",
               [&](std::ostream& os) { write_obj(os, folded, comments); });
    const double vd = enclosed_volume(deployed);
    const double vf = enclosed_volume(folded);
    std::cout << "pattern: " << pattern.panels.size() << " panels, "
              << pattern.creases.size() << " fold lines\n"
              << "volume deployed " << num(vd, "%.4f") << " m^3, folded "
              << num(vf, "%.4f") << " m^3, expansion ratio " << num(vd / vf, "%.2f")
              << "\n";
    if (alpha_set) {
        const double alpha = alpha_deg * std::numbers::pi / 180.0;
        const TriMesh custom = build_mesh(p, alpha);
        write_file(cfg, "mesh_custom.obj",
                   [&](std::ostream& os) { write_obj(os, custom, comments); });
        std::cout << "volume at " << num(alpha_deg, "%.4g") << " deg "
                  << num(enclosed_volume(custom), "%.4f") << " m^3\n";
    }
}

void cmd_bom(Cli& cli) {
    const ProjectConfig cfg = cli.load();
    const DesignEvaluation ev = evaluate_design(cfg.design);
    const auto comments = provenance_lines(cfg.fingerprint);
    write_file(cfg, "bom.csv",
               [&](std::ostream& os) { write_bom_csv(os, cfg.design, ev, comments); });
    const CutPlan plan = cut_plan(tube_edges(ev.geom, ev.params.n, ev.params.m),
                                  cfg.design.L_tubes);
    write_file(cfg, "cut_plan.txt",
               [&](std::ostream& os) { write_cut_plan(os, plan, comments); });
    std::cout << "total tube length " << num(ev.L_skeleton_mm / 1000.0, "%.2f") << " m in "
              << plan.bars.size() << " stock bars of "
              << num(plan.stock_mm, "%.4g") << " mm (waste "
              << num(plan.total_waste_mm / 1000.0, "%.2f") << " m)\n";
}

void cmd_energy(Cli& cli) {
    const ProjectConfig cfg = cli.load();
    std::vector<double> grid;
    for (int i = 1; i <= 100; ++i) grid.push_back(0.005 * i);
    const auto rows = energy_curve(cfg.power, grid);
    write_file(cfg, "energy_curve.csv", [&](std::ostream& os) {
        write_energy_csv(os, rows, provenance_lines(cfg.fingerprint));
    });
    write_file(cfg, "energy_summary.json", [&](std::ostream& os) {
        write_energy_summary_json(os, cfg.power, cfg.fingerprint);
    });
    const auto vmin = min_feasible_speed(cfg.power);
    if (vmin) {
        const MissionEnergy at = mission_energy(cfg.power, *vmin);
        std::cout << "minimum feasible cruise speed " << num(*vmin, "%.4f")
                  << " m/s, mission duration " << num(at.duration_min, "%.1f")
                  << " min, energy " << num(at.energy_Wh, "%.2f") << " Wh\n";
    } else {
        std::cout << "no feasible cruise speed: the battery cannot cover the mission\n";
    }
}

void cmd_simulate(Cli& cli, double sma_window_s, bool sma_set) {
    const ProjectConfig cfg = cli.load();
    SimOptions opt;
    opt.phys_hz = cfg.phys_hz;
    opt.ctrl_hz = cfg.ctrl_hz;
    opt.sma_window_s = sma_set ? sma_window_s : cfg.sma_window_s;
    opt.damping = cfg.damping;
    const SimRun run = run_scenario(cfg.scenario, cfg.plant, cfg.gains, cfg.power, opt);
    const auto comments = provenance_lines(cfg.fingerprint);
    write_file(cfg, "trajectory.csv",
               [&](std::ostream& os) { write_trajectory_csv(os, run.trajectory, comments); });
    write_file(cfg, "forces.csv",
               [&](std::ostream& os) { write_forces_csv(os, run.forces, comments); });
    write_file(cfg, "sim_summary.json", [&](std::ostream& os) {
        write_sim_summary_json(os, run, opt, cfg.fingerprint);
    });
    const SimSummary& s = run.summary;
    std::cout << "simulated " << num(cfg.scenario.duration_s, "%.4g") << " s at "
              << opt.phys_hz << " Hz (control " << opt.ctrl_hz << " Hz, SMA window "
              << num(opt.sma_window_s, "%.4g") << " s)\n"
              << "  z settled at " << num(s.settling_time_z_s, "%.2f")
              << " s, steady z error " << num(s.steady_z_error_m * 1000.0, "%.2f")
              << " mm\n"
              << "  final x " << num(s.final_x_m, "%.3f") << " m, cruise speed "
              << num(s.cruise_vx_mps, "%.4f") << " m/s\n"
              << "  electrical energy " << num(s.energy_Wh, "%.3f") << " Wh\n";
}

void cmd_init(const std::string& path, bool force) {
    if (!force && fs::exists(path))
        throw io_error("refusing to overwrite existing file (use --force): " + path);
    std::ofstream os(path, std::ios::binary);
    if (!os) throw io_error("cannot open for writing: " + path);
    write_config(os, default_config());
    std::cout << "wrote " << path << "\n";
}

}

int main(int argc, char** argv) {
    Cli cli;
    CLI::App app{std::string("foldship ") + kVersion +
                 " - design-to-mission toolkit for folding rigid airships"};
    app.fallthrough();
    app.footer(kConfigReference);
    app.require_subcommand(1);
    app.add_option("-c,--config", cli.config_path,
                   "Config file (omit to use built-in defaults)");
    app.add_option("-o,--out", cli.out_dir, "Output directory (overrides [output] dir)");
    app.add_option("-n", cli.n, "Override design n (polygon sides)")
        ->check(CLI::PositiveNumber);
    app.add_option("-m", cli.m, "Override design m (segment count)")
        ->check(CLI::PositiveNumber);
    app.add_option("-l,--lambda", cli.lambda,
                   "Override design lambda (crease angle ratio)")
        ->check(CLI::Range(0.0, 1.0));

    auto* eval = app.add_subcommand(
        "eval", "Evaluate one design: geometry, lift, mass rollup, feasibility");
    bool require_feasible = false;
    eval->add_flag("--require-feasible", require_feasible,
                   "Exit with code 2 when the design is infeasible");
    eval->callback([&] { cmd_eval(cli, require_feasible); });

    auto* sweep = app.add_subcommand(
        "sweep", "Evaluate the whole (n, m, lambda) grid and rank the designs");
    unsigned workers = 0;
    sweep->add_option("-w,--workers", workers,
                      "Worker threads for the sweep (0 = hardware concurrency)");
    sweep->callback([&] { cmd_sweep(cli, workers); });

    auto* pattern = app.add_subcommand(
        "pattern", "Export the flat crease pattern (SVG) and fold meshes (OBJ)");
    double alpha_deg = 0;
    auto* alpha_opt = pattern->add_option(
        "--alpha-deg", alpha_deg,
        "Also export the mesh at this fold angle (degrees, between the stable states)");
    pattern->callback([&] { cmd_pattern(cli, alpha_deg, !alpha_opt->empty()); });

    auto* bom = app.add_subcommand(
        "bom", "Export the bill of materials and the tube cut plan");
    bom->callback([&] { cmd_bom(cli); });

    auto* energy = app.add_subcommand(
        "energy", "Mission energy curve and minimum feasible cruise speed");
    energy->callback([&] { cmd_energy(cli); });

    auto* simulate = app.add_subcommand(
        "simulate", "Run the closed-loop flight scenario and log the trajectory");
    double sma_window_s = 0;
    auto* sma_opt = simulate->add_option(
        "--sma-window", sma_window_s,
        "SMA window in seconds (overrides [controller] sma_window_s)");
    simulate->callback([&] { cmd_simulate(cli, sma_window_s, !sma_opt->empty()); });

    auto* init = app.add_subcommand("init", "Write a commented default config file");
    std::string init_path = "foldship.cfg";
    bool init_force = false;
    init->add_option("path", init_path, "Destination path");
    init->add_flag("--force", init_force, "Overwrite an existing file");
    init->callback([&] { cmd_init(init_path, init_force); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const io_error& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 1;
    } catch (const unsupported_error& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return 1;
    } catch (const error& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 3;
    }
    return cli.exit_code;
}
