#include <foldship/sim.hpp>
#include <foldship/textio.hpp>
#include <foldship/version.hpp>

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <ostream>

namespace foldship {

const char* axis_name(Axis a) {
    switch (a) {
        case Axis::x: return "x";
        case Axis::y: return "y";
        case Axis::z: return "z";
        default: return "psi";
    }
}

void validate(const PlantParams& p) {
    if (!(p.base_mass_kg > 0)) throw config_error("plant base mass must be positive");
    if (!(p.net_weight_N > 0)) throw config_error("plant net weight must be positive");
    if (!(p.rho_air > 0)) throw config_error("plant air density must be positive");
    for (int i = 0; i < kAxes; ++i) {
        if (!(p.added_mass_kg[i] > 0) || !(p.C_D[i] > 0) || !(p.A_m2[i] > 0))
            throw config_error("plant per-axis parameters must be positive");
    }
}

Scenario reference_scenario() {
    Scenario sc;
    sc.duration_s = 100.0;
    Waypoint start;
    start.t_s = 0.0;
    start.target[static_cast<int>(Axis::x)] = 0.0;
    start.target[static_cast<int>(Axis::z)] = 1.0;
    Waypoint forward;
    forward.t_s = 50.0;
    forward.target[static_cast<int>(Axis::x)] = 2.0;
    sc.waypoints = {start, forward};
    return sc;
}

void validate(const Scenario& sc) {
    if (!(sc.duration_s > 0)) throw config_error("scenario duration must be positive");
    if (sc.waypoints.empty()) throw config_error("scenario needs at least one waypoint");
    double prev = -1;
    for (const auto& wp : sc.waypoints) {
        if (!std::isfinite(wp.t_s) || wp.t_s < 0 || wp.t_s > sc.duration_s)
            throw config_error("waypoint time outside the scenario duration");
        if (wp.t_s < prev) throw config_error("waypoints must be sorted by time");
        prev = wp.t_s;
        bool any = false;
        for (const auto& t : wp.target) {
            if (t) {
                if (!std::isfinite(*t)) throw config_error("waypoint target must be finite");
                any = true;
            }
        }
        if (!any) throw config_error("waypoint sets no axis target");
    }
}

void validate(const SimOptions& opt) {
    if (opt.phys_hz <= 0 || opt.ctrl_hz <= 0)
        throw config_error("simulation rates must be positive");
    if (opt.ctrl_hz > opt.phys_hz)
        throw config_error("control rate cannot exceed the physics rate");
    if (!(opt.sma_window_s >= 0)) throw config_error("SMA window must be non-negative");
}

void step_axis(double& pos, double& vel, double net_force_N, double inertia_kg,
               double dt) {
    const double a = net_force_N / inertia_kg;
    pos += vel * dt + 0.5 * a * dt * dt;
    vel += a * dt;
}

namespace {

double axis_drag(const PlantParams& p, Axis axis, double vel) {
    const int i = static_cast<int>(axis);
    return 0.5 * p.C_D[i] * p.rho_air * vel * std::abs(vel) * p.A_m2[i];
}

// Cruise speed measured away from both the acceleration transient and the
// final deceleration: mean vx while x crosses the middle of the last leg.
double cruise_speed(const std::vector<TrajRow>& rows, const Scenario& sc) {
    const int ix = static_cast<int>(Axis::x);
    double t_leg = -1, x_target = 0;
    for (const auto& wp : sc.waypoints) {
        if (wp.target[ix]) {
            t_leg = wp.t_s;
            x_target = *wp.target[ix];
        }
    }
    if (t_leg < 0) return 0;
    double x_start = 0;
    bool found = false;
    for (const auto& r : rows) {
        if (r.t >= t_leg) {
            x_start = r.x;
            found = true;
            break;
        }
    }
    if (!found) return 0;
    double lo = x_start + 0.5 * (x_target - x_start);
    double hi = x_start + 0.9 * (x_target - x_start);
    if (lo > hi) std::swap(lo, hi);
    double sum = 0;
    int count = 0;
    for (const auto& r : rows) {
        if (r.t >= t_leg && r.x >= lo && r.x <= hi) {
            sum += r.vx;
            ++count;
        }
    }
    return count ? sum / count : 0;
}

}

SimRun run_scenario(const Scenario& sc, const PlantParams& plant,
                    const std::array<AxisGains, kAxes>& gains,
                    const PowerModel& power, const SimOptions& opt) {
    validate(sc);
    validate(plant);
    validate(opt);
    validate(power);
    for (const auto& g : gains) validate(g);

    const double dt = 1.0 / opt.phys_hz;
    const long long steps = std::llround(sc.duration_s * opt.phys_hz);
    const int window = static_cast<int>(std::lround(opt.sma_window_s * opt.ctrl_hz));

    std::array<AxisController, kAxes> ctrl{
        AxisController(gains[0], window, opt.damping),
        AxisController(gains[1], window, opt.damping),
        AxisController(gains[2], window, opt.damping),
        AxisController(gains[3], window, opt.damping)};

    // only axes a waypoint ever names are actively controlled and logged
    std::array<bool, kAxes> active{};
    for (const auto& wp : sc.waypoints)
        for (int i = 0; i < kAxes; ++i)
            if (wp.target[i]) active[i] = true;

    std::array<double, kAxes> pos{}, vel{}, tau{};
    double energy_J = 0;
    std::size_t next_wp = 0;

    SimRun run;
    run.trajectory.reserve(static_cast<std::size_t>(sc.duration_s * opt.ctrl_hz) + 2);

    for (long long k = 0; k <= steps; ++k) {
        const double t = k * dt;
        const bool tick =
            k == 0 || (k * opt.ctrl_hz) / opt.phys_hz > ((k - 1) * opt.ctrl_hz) / opt.phys_hz;
        if (tick) {
            for (int i = 0; i < kAxes; ++i)
                if (!std::isfinite(pos[i]) || !std::isfinite(vel[i]))
                    throw numeric_error("simulation aborted: non-finite state at t = " +
                                        num(t, "%.3f") + " s on axis " +
                                        axis_name(static_cast<Axis>(i)));
            while (next_wp < sc.waypoints.size() &&
                   sc.waypoints[next_wp].t_s <= t + 0.5 * dt) {
                for (int i = 0; i < kAxes; ++i)
                    if (sc.waypoints[next_wp].target[i])
                        ctrl[i].set_target(*sc.waypoints[next_wp].target[i]);
                ++next_wp;
            }
            for (int i = 0; i < kAxes; ++i) {
                if (!active[i]) continue;
                const ControlStep step = ctrl[i].update(pos[i], vel[i]);
                tau[i] = step.tau_star;
                run.forces.push_back({t, static_cast<Axis>(i), step});
            }
            TrajRow row;
            row.t = t;
            row.x = pos[0];
            row.z = pos[2];
            row.vx = vel[0];
            row.vz = vel[2];
            row.tau_x = tau[0];
            row.tau_z = tau[2];
            row.energy_J = energy_J;
            run.trajectory.push_back(row);
        }
        if (k == steps) break;
        for (int i = 0; i < kAxes; ++i) {
            double f = tau[i];
            if (opt.drag_enabled) f -= axis_drag(plant, static_cast<Axis>(i), vel[i]);
            if (opt.weight_enabled && static_cast<Axis>(i) == Axis::z)
                f -= plant.net_weight_N;
            step_axis(pos[i], vel[i], f, plant.inertia(static_cast<Axis>(i)), dt);
        }
        energy_J += dt * (power.electronics_W + motor_power(power, std::abs(tau[0])) +
                          motor_power(power, std::abs(tau[2])));
    }

    // ---- summary ----
    SimSummary& sum = run.summary;
    sum.physics_steps = steps;
    sum.energy_Wh = energy_J / 3600.0;
    const TrajRow& last = run.trajectory.back();
    sum.final_x_m = last.x;
    sum.final_z_m = last.z;

    const double z_target = ctrl[static_cast<int>(Axis::z)].target();
    const double x_target = ctrl[static_cast<int>(Axis::x)].target();
    const double band = 0.02 * std::max(1.0, std::abs(z_target));
    double settle = -1;
    for (auto it = run.trajectory.rbegin(); it != run.trajectory.rend(); ++it) {
        if (std::abs(it->z - z_target) > band) break;
        settle = it->t;
    }
    sum.settling_time_z_s = settle;

    double ze = 0, xe = 0;
    int tail = 0;
    for (const auto& r : run.trajectory) {
        if (r.t >= sc.duration_s - 5.0) {
            ze += r.z - z_target;
            xe += r.x - x_target;
            ++tail;
        }
        sum.peak_vx_mps = std::max(sum.peak_vx_mps, std::abs(r.vx));
        sum.peak_vz_mps = std::max(sum.peak_vz_mps, std::abs(r.vz));
    }
    if (tail) {
        sum.steady_z_error_m = ze / tail;
        sum.steady_x_error_m = xe / tail;
    }
    sum.cruise_vx_mps = cruise_speed(run.trajectory, sc);
    return run;
}

void write_trajectory_csv(std::ostream& os, const std::vector<TrajRow>& rows,
                          const std::vector<std::string>& comments) {
    write_comments(os, "# ", comments);
    os << "t_s,x_m,z_m,vx_mps,vz_mps,tau_x_N,tau_z_N,energy_J\n";
    for (const auto& r : rows) {
        os << num(r.t, "%.6f") << "," << num(r.x, "%.9g") << "," << num(r.z, "%.9g")
           << "," << num(r.vx, "%.9g") << "," << num(r.vz, "%.9g") << ","
           << num(r.tau_x, "%.9g") << "," << num(r.tau_z, "%.9g") << ","
           << num(r.energy_J, "%.9g") << "\n";
    }
}

void write_forces_csv(std::ostream& os, const std::vector<ForceRow>& rows,
                      const std::vector<std::string>& comments) {
    write_comments(os, "# ", comments);
    os << "t_s,axis,s,tau_N,tau_sma_N,tau_star_N\n";
    for (const auto& r : rows) {
        os << num(r.t, "%.6f") << "," << axis_name(r.axis) << "," << num(r.step.s, "%.9g")
           << "," << num(r.step.tau, "%.9g") << "," << num(r.step.tau_sma, "%.9g")
           << "," << num(r.step.tau_star, "%.9g") << "\n";
    }
}

void write_sim_summary_json(std::ostream& os, const SimRun& run,
                            const SimOptions& opt,
                            const std::string& config_fingerprint) {
    const SimSummary& s = run.summary;
    nlohmann::ordered_json j;
    j["meta"]["tool"] = std::string(kToolName) + " " + kVersion;
    j["meta"]["config"] = config_fingerprint;
    j["physics_hz"] = opt.phys_hz;
    j["control_hz"] = opt.ctrl_hz;
    j["sma_window_s"] = opt.sma_window_s;
    j["damping"] = opt.damping;
    j["physics_steps"] = s.physics_steps;
    j["settling_time_z_s"] = s.settling_time_z_s;
    j["steady_z_error_m"] = s.steady_z_error_m;
    j["steady_x_error_m"] = s.steady_x_error_m;
    j["peak_vx_mps"] = s.peak_vx_mps;
    j["peak_vz_mps"] = s.peak_vz_mps;
    j["cruise_vx_mps"] = s.cruise_vx_mps;
    j["final_x_m"] = s.final_x_m;
    j["final_z_m"] = s.final_z_m;
    j["energy_Wh"] = s.energy_Wh;
    os << j.dump(2) << "\n";
}

}
