#include <foldship/config.hpp>
#include <foldship/textio.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace foldship {

namespace {

void derive_plant_defaults(ProjectConfig& cfg) {
    if (!cfg.plant_base_mass_auto && !cfg.plant_A_z_auto) return;
    try {
        const DesignEvaluation ev = evaluate_design(cfg.design);
        if (cfg.plant_base_mass_auto)
            cfg.plant.base_mass_kg = cfg.design.rho_air * ev.volume_deployed_m3 +
                                     cfg.plant.net_weight_N / 9.80665;
        if (cfg.plant_A_z_auto)
            cfg.plant.A_m2[2] = ev.geom.s * ev.geom.s * cfg.design.n /
                                (4.0 * std::tan(ev.geom.phi)) * 1e-6;
    } catch (const error& e) {
        throw config_error(
            std::string("cannot derive plant defaults from the design: ") + e.what());
    }
}

struct Ctx {
    const std::string& name;
    int line = 0;

    std::string where() const { return name + " line " + std::to_string(line) + ": "; }
};

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double parse_double(const Ctx& ctx, const std::string& key, const std::string& v) {
    try {
        std::size_t used = 0;
        const double d = std::stod(v, &used);
        if (used != v.size()) throw std::invalid_argument("trailing characters");
        if (!std::isfinite(d)) throw std::invalid_argument("not finite");
        return d;
    } catch (const std::exception&) {
        throw config_error(ctx.where() + "value of '" + key + "' is not a number: " + v);
    }
}

int parse_int(const Ctx& ctx, const std::string& key, const std::string& v) {
    try {
        std::size_t used = 0;
        const long n = std::stol(v, &used);
        if (used != v.size()) throw std::invalid_argument("trailing characters");
        if (n < -1000000000L || n > 1000000000L) throw std::out_of_range("range");
        return static_cast<int>(n);
    } catch (const std::exception&) {
        throw config_error(ctx.where() + "value of '" + key + "' is not an integer: " + v);
    }
}

bool parse_bool(const Ctx& ctx, const std::string& key, const std::string& v) {
    if (v == "true") return true;
    if (v == "false") return false;
    throw config_error(ctx.where() + "value of '" + key + "' must be true or false: " + v);
}

int axis_index(const std::string& token) {
    if (token == "x") return 0;
    if (token == "y") return 1;
    if (token == "z") return 2;
    if (token == "psi") return 3;
    return -1;
}

Waypoint parse_waypoint(const Ctx& ctx, const std::string& value) {
    Waypoint wp;
    bool has_t = false;
    std::istringstream is(value);
    std::string tok;
    while (is >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 >= tok.size())
            throw config_error(ctx.where() + "waypoint token must be key=value: " + tok);
        const std::string k = tok.substr(0, eq);
        const double v = parse_double(ctx, "waypoint " + k, tok.substr(eq + 1));
        if (k == "t") {
            if (has_t) throw config_error(ctx.where() + "waypoint repeats t");
            wp.t_s = v;
            has_t = true;
        } else {
            const int ax = axis_index(k);
            if (ax < 0)
                throw config_error(ctx.where() + "waypoint names unknown axis '" + k +
                                   "' (use x, y, z or psi)");
            if (wp.target[ax])
                throw config_error(ctx.where() + "waypoint repeats axis " + k);
            wp.target[ax] = v;
        }
    }
    if (!has_t) throw config_error(ctx.where() + "waypoint needs a t=<seconds> token");
    bool any = false;
    for (const auto& t : wp.target) any = any || t.has_value();
    if (!any) throw config_error(ctx.where() + "waypoint sets no axis target");
    return wp;
}

using Setter = std::function<void(ProjectConfig&, const Ctx&, const std::string&,
                                  const std::string&)>;

struct Binder {
    std::map<std::string, Setter> set;

    void d(const std::string& key, std::function<double&(ProjectConfig&)> ref) {
        set[key] = [ref](ProjectConfig& c, const Ctx& ctx, const std::string& k,
                         const std::string& v) { ref(c) = parse_double(ctx, k, v); };
    }
    void i(const std::string& key, std::function<int&(ProjectConfig&)> ref) {
        set[key] = [ref](ProjectConfig& c, const Ctx& ctx, const std::string& k,
                         const std::string& v) { ref(c) = parse_int(ctx, k, v); };
    }
    void b(const std::string& key, std::function<bool&(ProjectConfig&)> ref) {
        set[key] = [ref](ProjectConfig& c, const Ctx& ctx, const std::string& k,
                         const std::string& v) { ref(c) = parse_bool(ctx, k, v); };
    }
    void s(const std::string& key, std::function<std::string&(ProjectConfig&)> ref) {
        set[key] = [ref](ProjectConfig& c, const Ctx&, const std::string&,
                         const std::string& v) { ref(c) = v; };
    }
};

const char* kAxisKeys[kAxes] = {"x", "y", "z", "psi"};

Binder make_binder() {
    Binder b;
    // [design] -- the full editable parameter panel
    b.i("design/n", [](ProjectConfig& c) -> int& { return c.design.n; });
    b.i("design/m", [](ProjectConfig& c) -> int& { return c.design.m; });
    b.d("design/lambda", [](ProjectConfig& c) -> double& { return c.design.lambda; });
    b.d("design/diameter_mm", [](ProjectConfig& c) -> double& { return c.design.D; });
    b.d("design/folded_height_mm", [](ProjectConfig& c) -> double& { return c.design.H0; });
    b.d("design/deployed_height_mm", [](ProjectConfig& c) -> double& { return c.design.H1; });
    b.d("design/rho_air_kg_m3", [](ProjectConfig& c) -> double& { return c.design.rho_air; });
    b.d("design/rho_helium_kg_m3", [](ProjectConfig& c) -> double& { return c.design.rho_He; });
    b.d("design/tube_linear_density_g_m", [](ProjectConfig& c) -> double& { return c.design.m_CT; });
    b.d("design/mechatronics_g", [](ProjectConfig& c) -> double& { return c.design.m_mecatrn; });
    b.d("design/motor_g", [](ProjectConfig& c) -> double& { return c.design.m_motors; });
    b.d("design/propeller_g", [](ProjectConfig& c) -> double& { return c.design.m_propellers; });
    b.i("design/motor_count", [](ProjectConfig& c) -> int& { return c.design.N_motors; });
    b.d("design/battery_g", [](ProjectConfig& c) -> double& { return c.design.m_battery; });
    b.i("design/battery_count", [](ProjectConfig& c) -> int& { return c.design.N_battery; });
    b.d("design/junction_simple_g", [](ProjectConfig& c) -> double& { return c.design.m_simpleTPUjct; });
    b.d("design/junction_lattice_g", [](ProjectConfig& c) -> double& { return c.design.m_latticeTPUjct; });
    b.i("design/lattice_patch_count", [](ProjectConfig& c) -> int& { return c.design.N_patchs; });
    b.d("design/envelope_density_g_m2", [](ProjectConfig& c) -> double& { return c.design.d_env; });
    b.d("design/glue_density_g_m2", [](ProjectConfig& c) -> double& { return c.design.d_glue; });
    b.d("design/seal_overlap_mm", [](ProjectConfig& c) -> double& { return c.design.t_ovlp; });
    b.i("design/seal_line_count", [](ProjectConfig& c) -> int& { return c.design.N_seal; });
    b.d("design/sheath_width_mm", [](ProjectConfig& c) -> double& { return c.design.t_sheath; });
    b.d("design/sheath_share_pct", [](ProjectConfig& c) -> double& { return c.design.r_pct; });
    b.d("design/valve_g", [](ProjectConfig& c) -> double& { return c.design.m_valve; });
    b.i("design/valve_count", [](ProjectConfig& c) -> int& { return c.design.N_valve; });
    b.i("design/exo_count", [](ProjectConfig& c) -> int& { return c.design.N_exo; });
    b.i("design/body_count", [](ProjectConfig& c) -> int& { return c.design.N_body; });
    b.d("design/kevlar_linear_density_g_m", [](ProjectConfig& c) -> double& { return c.design.m_kevlar; });
    b.d("design/kevlar_length_m", [](ProjectConfig& c) -> double& { return c.design.kevlar_length_m; });
    b.d("design/body_spacing_mm", [](ProjectConfig& c) -> double& { return c.design.Dist_body; });
    b.d("design/stock_tube_mm", [](ProjectConfig& c) -> double& { return c.design.L_tubes; });

    // [sweep]
    b.i("sweep/n_min", [](ProjectConfig& c) -> int& { return c.grid.n_min; });
    b.i("sweep/n_max", [](ProjectConfig& c) -> int& { return c.grid.n_max; });
    b.i("sweep/m_min", [](ProjectConfig& c) -> int& { return c.grid.m_min; });
    b.i("sweep/m_max", [](ProjectConfig& c) -> int& { return c.grid.m_max; });
    b.d("sweep/lambda_min", [](ProjectConfig& c) -> double& { return c.grid.lambda_min; });
    b.d("sweep/lambda_max", [](ProjectConfig& c) -> double& { return c.grid.lambda_max; });
    b.d("sweep/lambda_step", [](ProjectConfig& c) -> double& { return c.grid.lambda_step; });

    // [plant]
    b.d("plant/base_mass_kg", [](ProjectConfig& c) -> double& { return c.plant.base_mass_kg; });
    b.d("plant/net_weight_N", [](ProjectConfig& c) -> double& { return c.plant.net_weight_N; });
    for (int i = 0; i < kAxes; ++i) {
        const std::string ax = kAxisKeys[i];
        b.d("plant/added_mass_" + ax + "_kg",
            [i](ProjectConfig& c) -> double& { return c.plant.added_mass_kg[i]; });
        b.d("plant/C_D_" + ax, [i](ProjectConfig& c) -> double& { return c.plant.C_D[i]; });
        b.d("plant/A_" + ax + "_m2",
            [i](ProjectConfig& c) -> double& { return c.plant.A_m2[i]; });
    }

    // [gains.*]
    for (int i = 0; i < kAxes; ++i) {
        const std::string sec = std::string("gains.") + kAxisKeys[i];
        b.d(sec + "/F_max", [i](ProjectConfig& c) -> double& { return c.gains[i].F_max; });
        b.d(sec + "/v_max", [i](ProjectConfig& c) -> double& { return c.gains[i].v_max; });
        b.d(sec + "/tol", [i](ProjectConfig& c) -> double& { return c.gains[i].tol; });
    }

    // [controller]
    b.d("controller/sma_window_s", [](ProjectConfig& c) -> double& { return c.sma_window_s; });
    b.b("controller/damping", [](ProjectConfig& c) -> bool& { return c.damping; });

    // [sim]
    b.i("sim/phys_hz", [](ProjectConfig& c) -> int& { return c.phys_hz; });
    b.i("sim/ctrl_hz", [](ProjectConfig& c) -> int& { return c.ctrl_hz; });

    // [scenario]  (plus the repeatable `waypoint` key, handled separately)
    b.d("scenario/duration_s", [](ProjectConfig& c) -> double& { return c.scenario.duration_s; });

    // [power]
    b.d("power/motor_a", [](ProjectConfig& c) -> double& { return c.power.motor_a; });
    b.d("power/motor_b", [](ProjectConfig& c) -> double& { return c.power.motor_b; });
    b.d("power/motor_c", [](ProjectConfig& c) -> double& { return c.power.motor_c; });
    b.d("power/electronics_W", [](ProjectConfig& c) -> double& { return c.power.electronics_W; });
    b.d("power/hover_thrust_N", [](ProjectConfig& c) -> double& { return c.power.hover_thrust_N; });
    b.d("power/battery_Wh", [](ProjectConfig& c) -> double& { return c.power.battery_Wh; });
    b.d("power/mission_distance_m", [](ProjectConfig& c) -> double& { return c.power.mission_distance_m; });
    b.set["power/mode"] = [](ProjectConfig& c, const Ctx& ctx, const std::string&,
                             const std::string& v) {
        if (v == "combined") c.power.mode = ForwardPower::combined;
        else if (v == "split") c.power.mode = ForwardPower::split;
        else throw config_error(ctx.where() + "mode must be combined or split: " + v);
    };
    b.d("power/C_D", [](ProjectConfig& c) -> double& { return c.power.C_D; });
    b.d("power/rho_air_kg_m3", [](ProjectConfig& c) -> double& { return c.power.rho_air; });
    b.d("power/A_m2", [](ProjectConfig& c) -> double& { return c.power.A_m2; });

    // [output]
    b.s("output/dir", [](ProjectConfig& c) -> std::string& { return c.output_dir; });
    return b;
}

const std::set<std::string>& known_sections() {
    static const std::set<std::string> s{"design", "sweep", "plant", "gains.x",
                                         "gains.y", "gains.z", "gains.psi",
                                         "controller", "sim", "scenario",
                                         "power", "output"};
    return s;
}

// Fill derived and mirrored values for keys the file left out, then check
// every invariant. `seen` holds "section/key" strings.
void resolve_and_validate(ProjectConfig& cfg, const std::set<std::string>& seen) {
    const auto missing = [&seen](const std::string& key) { return !seen.count(key); };

    // y and yaw mirror the x axis unless set explicitly
    for (int i : {1, 3}) {
        const std::string ax = kAxisKeys[i];
        if (missing("plant/added_mass_" + ax + "_kg"))
            cfg.plant.added_mass_kg[i] = cfg.plant.added_mass_kg[0];
        if (missing("plant/C_D_" + ax)) cfg.plant.C_D[i] = cfg.plant.C_D[0];
        if (missing("plant/A_" + ax + "_m2")) cfg.plant.A_m2[i] = cfg.plant.A_m2[0];
        const std::string sec = std::string("gains.") + ax;
        if (missing(sec + "/F_max")) cfg.gains[i].F_max = cfg.gains[0].F_max;
        if (missing(sec + "/v_max")) cfg.gains[i].v_max = cfg.gains[0].v_max;
        if (missing(sec + "/tol")) cfg.gains[i].tol = cfg.gains[0].tol;
    }

    cfg.plant.rho_air = cfg.design.rho_air;
    if (missing("power/hover_thrust_N")) cfg.power.hover_thrust_N = cfg.plant.net_weight_N;
    if (missing("power/C_D")) cfg.power.C_D = cfg.plant.C_D[0];
    if (missing("power/A_m2")) cfg.power.A_m2 = cfg.plant.A_m2[0];
    if (missing("power/rho_air_kg_m3")) cfg.power.rho_air = cfg.design.rho_air;

    validate_inputs(cfg.design);

    // the remaining plant defaults come from the design itself
    cfg.plant_base_mass_auto = missing("plant/base_mass_kg");
    cfg.plant_A_z_auto = missing("plant/A_z_m2");
    derive_plant_defaults(cfg);

    if (cfg.grid.n_min < 3 || cfg.grid.n_min > cfg.grid.n_max)
        throw config_error("sweep polygon range must satisfy 3 <= n_min <= n_max");
    if (cfg.grid.m_min < 1 || cfg.grid.m_min > cfg.grid.m_max)
        throw config_error("sweep segment range must satisfy 1 <= m_min <= m_max");
    if (!(cfg.grid.lambda_min > 0.5) || !(cfg.grid.lambda_max <= 1.0) ||
        !(cfg.grid.lambda_min <= cfg.grid.lambda_max))
        throw config_error("sweep lambda range must lie in (0.5, 1]");
    if (!(cfg.grid.lambda_step > 0))
        throw config_error("sweep lambda_step must be positive");

    validate(cfg.plant);
    for (const auto& g : cfg.gains) validate(g);
    if (!(cfg.sma_window_s >= 0)) throw config_error("sma_window_s must be non-negative");
    if (cfg.phys_hz <= 0 || cfg.ctrl_hz <= 0 || cfg.ctrl_hz > cfg.phys_hz)
        throw config_error("need phys_hz >= ctrl_hz > 0");
    validate(cfg.scenario);
    validate(cfg.power);
    if (cfg.output_dir.empty()) throw config_error("output dir must not be empty");

    refresh_fingerprint(cfg);
}

}

ProjectConfig default_config() {
    ProjectConfig cfg;
    resolve_and_validate(cfg, {});
    return cfg;
}

ProjectConfig load_config(std::istream& is, const std::string& name) {
    static const Binder binder = make_binder();
    ProjectConfig cfg;
    std::set<std::string> seen;
    std::string section;
    std::string line;
    Ctx ctx{name, 0};
    bool version_seen = false;
    bool waypoints_replaced = false;

    while (std::getline(is, line)) {
        ++ctx.line;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        if (t.front() == '[') {
            if (t.back() != ']')
                throw config_error(ctx.where() + "malformed section header: " + t);
            section = trim(t.substr(1, t.size() - 2));
            if (!known_sections().count(section))
                throw config_error(ctx.where() + "unknown section [" + section + "]");
            if (!version_seen)
                throw config_error(ctx.where() + "the file must start with version = 1");
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw config_error(ctx.where() + "expected key = value: " + t);
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        if (key.empty()) throw config_error(ctx.where() + "empty key");

        if (!version_seen) {
            if (key != "version")
                throw config_error(ctx.where() + "the file must start with version = 1");
            if (value != "1")
                throw config_error(ctx.where() + "unsupported config version: " + value);
            version_seen = true;
            continue;
        }
        if (key == "version")
            throw config_error(ctx.where() + "duplicate version key");
        if (section.empty())
            throw config_error(ctx.where() + "key outside any [section]: " + key);

        if (section == "scenario" && key == "waypoint") {
            if (!waypoints_replaced) {
                cfg.scenario.waypoints.clear();
                waypoints_replaced = true;
            }
            cfg.scenario.waypoints.push_back(parse_waypoint(ctx, value));
            continue;
        }

        const std::string full = section + "/" + key;
        const auto it = binder.set.find(full);
        if (it == binder.set.end())
            throw config_error(ctx.where() + "unknown key '" + key + "' in [" + section +
                               "]");
        if (!seen.insert(full).second)
            throw config_error(ctx.where() + "duplicate key '" + key + "' in [" + section +
                               "]");
        it->second(cfg, ctx, key, value);
    }
    if (!version_seen)
        throw config_error(name + ": missing required version = 1 line");

    resolve_and_validate(cfg, seen);
    return cfg;
}

ProjectConfig load_config_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw io_error("cannot open config file: " + path);
    return load_config(is, path);
}

std::string canonical_config(const ProjectConfig& cfg) {
    std::ostringstream os;
    os << "version=1\n";
    const auto d = [&os](const char* k, double v) {
        os << k << "=" << num_exact(v) << "\n";
    };
    const auto i = [&os](const char* k, int v) { os << k << "=" << v << "\n"; };

    i("design.n", cfg.design.n);
    i("design.m", cfg.design.m);
    d("design.lambda", cfg.design.lambda);
    d("design.diameter_mm", cfg.design.D);
    d("design.folded_height_mm", cfg.design.H0);
    d("design.deployed_height_mm", cfg.design.H1);
    d("design.rho_air_kg_m3", cfg.design.rho_air);
    d("design.rho_helium_kg_m3", cfg.design.rho_He);
    d("design.tube_linear_density_g_m", cfg.design.m_CT);
    d("design.mechatronics_g", cfg.design.m_mecatrn);
    d("design.motor_g", cfg.design.m_motors);
    d("design.propeller_g", cfg.design.m_propellers);
    i("design.motor_count", cfg.design.N_motors);
    d("design.battery_g", cfg.design.m_battery);
    i("design.battery_count", cfg.design.N_battery);
    d("design.junction_simple_g", cfg.design.m_simpleTPUjct);
    d("design.junction_lattice_g", cfg.design.m_latticeTPUjct);
    i("design.lattice_patch_count", cfg.design.N_patchs);
    d("design.envelope_density_g_m2", cfg.design.d_env);
    d("design.glue_density_g_m2", cfg.design.d_glue);
    d("design.seal_overlap_mm", cfg.design.t_ovlp);
    i("design.seal_line_count", cfg.design.N_seal);
    d("design.sheath_width_mm", cfg.design.t_sheath);
    d("design.sheath_share_pct", cfg.design.r_pct);
    d("design.valve_g", cfg.design.m_valve);
    i("design.valve_count", cfg.design.N_valve);
    i("design.exo_count", cfg.design.N_exo);
    i("design.body_count", cfg.design.N_body);
    d("design.kevlar_linear_density_g_m", cfg.design.m_kevlar);
    d("design.kevlar_length_m", cfg.design.kevlar_length_m);
    d("design.body_spacing_mm", cfg.design.Dist_body);
    d("design.stock_tube_mm", cfg.design.L_tubes);

    i("sweep.n_min", cfg.grid.n_min);
    i("sweep.n_max", cfg.grid.n_max);
    i("sweep.m_min", cfg.grid.m_min);
    i("sweep.m_max", cfg.grid.m_max);
    d("sweep.lambda_min", cfg.grid.lambda_min);
    d("sweep.lambda_max", cfg.grid.lambda_max);
    d("sweep.lambda_step", cfg.grid.lambda_step);

    d("plant.base_mass_kg", cfg.plant.base_mass_kg);
    d("plant.net_weight_N", cfg.plant.net_weight_N);
    d("plant.rho_air_kg_m3", cfg.plant.rho_air);
    for (int a = 0; a < kAxes; ++a) {
        const std::string ax = kAxisKeys[a];
        os << "plant.added_mass_" << ax << "_kg=" << num_exact(cfg.plant.added_mass_kg[a])
           << "\n";
        os << "plant.C_D_" << ax << "=" << num_exact(cfg.plant.C_D[a]) << "\n";
        os << "plant.A_" << ax << "_m2=" << num_exact(cfg.plant.A_m2[a]) << "\n";
    }
    for (int a = 0; a < kAxes; ++a) {
        const std::string sec = std::string("gains.") + kAxisKeys[a];
        os << sec << ".F_max=" << num_exact(cfg.gains[a].F_max) << "\n";
        os << sec << ".v_max=" << num_exact(cfg.gains[a].v_max) << "\n";
        os << sec << ".tol=" << num_exact(cfg.gains[a].tol) << "\n";
    }
    d("controller.sma_window_s", cfg.sma_window_s);
    os << "controller.damping=" << (cfg.damping ? "true" : "false") << "\n";
    i("sim.phys_hz", cfg.phys_hz);
    i("sim.ctrl_hz", cfg.ctrl_hz);
    d("scenario.duration_s", cfg.scenario.duration_s);
    for (const auto& wp : cfg.scenario.waypoints) {
        os << "scenario.waypoint=t=" << num_exact(wp.t_s);
        for (int a = 0; a < kAxes; ++a)
            if (wp.target[a]) os << " " << kAxisKeys[a] << "=" << num_exact(*wp.target[a]);
        os << "\n";
    }
    d("power.motor_a", cfg.power.motor_a);
    d("power.motor_b", cfg.power.motor_b);
    d("power.motor_c", cfg.power.motor_c);
    d("power.electronics_W", cfg.power.electronics_W);
    d("power.hover_thrust_N", cfg.power.hover_thrust_N);
    d("power.battery_Wh", cfg.power.battery_Wh);
    d("power.mission_distance_m", cfg.power.mission_distance_m);
    os << "power.mode=" << (cfg.power.mode == ForwardPower::combined ? "combined" : "split")
       << "\n";
    d("power.C_D", cfg.power.C_D);
    d("power.rho_air_kg_m3", cfg.power.rho_air);
    d("power.A_m2", cfg.power.A_m2);
    os << "output.dir=" << cfg.output_dir << "\n";
    return os.str();
}

void refresh_fingerprint(ProjectConfig& cfg) {
    cfg.fingerprint = hex16(fnv1a(canonical_config(cfg)));
}

void apply_design_override(ProjectConfig& cfg, int n, int m, double lambda) {
    if (n >= 0) cfg.design.n = n;
    if (m >= 0) cfg.design.m = m;
    if (lambda >= 0) cfg.design.lambda = lambda;
    validate_inputs(cfg.design);
    derive_plant_defaults(cfg);
    validate(cfg.plant);
    refresh_fingerprint(cfg);
}

void write_config(std::ostream& os, const ProjectConfig& cfg) {
    const auto d = [&os](const char* k, double v) {
        os << k << " = " << num_exact(v) << "\n";
    };
    const auto i = [&os](const char* k, int v) { os << k << " = " << v << "\n"; };

    os << "# foldship project configuration\n";
    os << "version = 1\n";
    os << "\n[design]\n";
    os << "# fold parameters and deployment-site bounds\n";
    i("n", cfg.design.n);
    i("m", cfg.design.m);
    d("lambda", cfg.design.lambda);
    d("diameter_mm", cfg.design.D);
    d("folded_height_mm", cfg.design.H0);
    d("deployed_height_mm", cfg.design.H1);
    d("rho_air_kg_m3", cfg.design.rho_air);
    d("rho_helium_kg_m3", cfg.design.rho_He);
    os << "# manufacturing unit masses\n";
    d("tube_linear_density_g_m", cfg.design.m_CT);
    d("mechatronics_g", cfg.design.m_mecatrn);
    d("motor_g", cfg.design.m_motors);
    d("propeller_g", cfg.design.m_propellers);
    i("motor_count", cfg.design.N_motors);
    d("battery_g", cfg.design.m_battery);
    i("battery_count", cfg.design.N_battery);
    d("junction_simple_g", cfg.design.m_simpleTPUjct);
    d("junction_lattice_g", cfg.design.m_latticeTPUjct);
    i("lattice_patch_count", cfg.design.N_patchs);
    os << "# effective film density; 70 is the bare datasheet value, the default\n"
       << "# folds seam and glue bookkeeping into the film figure\n";
    d("envelope_density_g_m2", cfg.design.d_env);
    d("glue_density_g_m2", cfg.design.d_glue);
    d("seal_overlap_mm", cfg.design.t_ovlp);
    i("seal_line_count", cfg.design.N_seal);
    d("sheath_width_mm", cfg.design.t_sheath);
    d("sheath_share_pct", cfg.design.r_pct);
    d("valve_g", cfg.design.m_valve);
    i("valve_count", cfg.design.N_valve);
    i("exo_count", cfg.design.N_exo);
    i("body_count", cfg.design.N_body);
    d("kevlar_linear_density_g_m", cfg.design.m_kevlar);
    d("kevlar_length_m", cfg.design.kevlar_length_m);
    d("body_spacing_mm", cfg.design.Dist_body);
    d("stock_tube_mm", cfg.design.L_tubes);

    os << "\n[sweep]\n";
    i("n_min", cfg.grid.n_min);
    i("n_max", cfg.grid.n_max);
    i("m_min", cfg.grid.m_min);
    i("m_max", cfg.grid.m_max);
    d("lambda_min", cfg.grid.lambda_min);
    d("lambda_max", cfg.grid.lambda_max);
    d("lambda_step", cfg.grid.lambda_step);

    os << "\n[plant]\n";
    os << "# base_mass_kg and A_z_m2 derive from the design when omitted;\n"
       << "# y and psi values mirror x when omitted\n";
    d("base_mass_kg", cfg.plant.base_mass_kg);
    d("net_weight_N", cfg.plant.net_weight_N);
    for (int a = 0; a < kAxes; ++a) {
        const std::string ax = kAxisKeys[a];
        os << "added_mass_" << ax << "_kg = " << num_exact(cfg.plant.added_mass_kg[a])
           << "\n";
        os << "C_D_" << ax << " = " << num_exact(cfg.plant.C_D[a]) << "\n";
        os << "A_" << ax << "_m2 = " << num_exact(cfg.plant.A_m2[a]) << "\n";
    }

    for (int a = 0; a < kAxes; ++a) {
        os << "\n[gains." << kAxisKeys[a] << "]\n";
        if (a == 3) os << "# N*m, rad/s and rad for the yaw axis\n";
        os << "F_max = " << num_exact(cfg.gains[a].F_max) << "\n";
        os << "v_max = " << num_exact(cfg.gains[a].v_max) << "\n";
        os << "tol = " << num_exact(cfg.gains[a].tol) << "\n";
    }

    os << "\n[controller]\n";
    d("sma_window_s", cfg.sma_window_s);
    os << "damping = " << (cfg.damping ? "true" : "false") << "\n";

    os << "\n[sim]\n";
    i("phys_hz", cfg.phys_hz);
    i("ctrl_hz", cfg.ctrl_hz);

    os << "\n[scenario]\n";
    d("duration_s", cfg.scenario.duration_s);
    for (const auto& wp : cfg.scenario.waypoints) {
        os << "waypoint = t=" << num_exact(wp.t_s);
        for (int a = 0; a < kAxes; ++a)
            if (wp.target[a]) os << " " << kAxisKeys[a] << "=" << num_exact(*wp.target[a]);
        os << "\n";
    }

    os << "\n[power]\n";
    d("motor_a", cfg.power.motor_a);
    d("motor_b", cfg.power.motor_b);
    d("motor_c", cfg.power.motor_c);
    d("electronics_W", cfg.power.electronics_W);
    d("hover_thrust_N", cfg.power.hover_thrust_N);
    d("battery_Wh", cfg.power.battery_Wh);
    d("mission_distance_m", cfg.power.mission_distance_m);
    os << "mode = " << (cfg.power.mode == ForwardPower::combined ? "combined" : "split")
       << "\n";
    d("C_D", cfg.power.C_D);
    d("rho_air_kg_m3", cfg.power.rho_air);
    d("A_m2", cfg.power.A_m2);

    os << "\n[output]\n";
    os << "dir = " << cfg.output_dir << "\n";
}

}
