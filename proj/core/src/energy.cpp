#include <foldship/energy.hpp>
#include <foldship/textio.hpp>
#include <foldship/version.hpp>

#include <json.hpp>

#include <cmath>
#include <ostream>

namespace foldship {

void validate(const PowerModel& model) {
    if (!(model.battery_Wh > 0)) throw config_error("battery capacity must be positive");
    if (!(model.mission_distance_m > 0))
        throw config_error("mission distance must be positive");
    if (!(model.electronics_W >= 0))
        throw config_error("electronics draw must be non-negative");
    if (!(model.hover_thrust_N >= 0))
        throw config_error("hover thrust must be non-negative");
    if (!(model.C_D > 0) || !(model.rho_air > 0) || !(model.A_m2 > 0))
        throw config_error("drag parameters must be positive");
}

double motor_power(const PowerModel& model, double thrust_N) {
    if (!(thrust_N >= 0))
        throw numeric_error("motor thrust must be non-negative");
    return model.motor_a * thrust_N * thrust_N + model.motor_b * thrust_N +
           model.motor_c;
}

double drag_force(double v_mps, double C_D, double rho, double A_m2) {
    if (!(v_mps >= 0)) throw numeric_error("drag speed must be non-negative");
    return 0.5 * C_D * rho * v_mps * v_mps * A_m2;
}

MissionEnergy mission_energy(const PowerModel& model, double v_cruise_mps) {
    if (!(v_cruise_mps > 0))
        throw numeric_error("cruise speed must be positive");
    const double F_D = drag_force(v_cruise_mps, model.C_D, model.rho_air, model.A_m2);
    const double forward_W = model.mode == ForwardPower::combined
                                 ? motor_power(model, F_D)
                                 : 2.0 * motor_power(model, F_D / 2.0);
    MissionEnergy out;
    out.v_mps = v_cruise_mps;
    out.power_W = model.electronics_W + motor_power(model, model.hover_thrust_N) +
                  forward_W;
    const double duration_s = model.mission_distance_m / v_cruise_mps;
    out.duration_min = duration_s / 60.0;
    out.energy_Wh = out.power_W * duration_s / 3600.0;
    out.feasible = out.energy_Wh <= model.battery_Wh;
    return out;
}

std::vector<MissionEnergy> energy_curve(const PowerModel& model,
                                        const std::vector<double>& v_grid) {
    std::vector<MissionEnergy> rows;
    rows.reserve(v_grid.size());
    for (double v : v_grid) rows.push_back(mission_energy(model, v));
    return rows;
}

std::optional<double> min_feasible_speed(const PowerModel& model, double v_limit) {
    validate(model);
    // coarse scan for the first feasible point, then bisect the crossing
    const int kScan = 500;
    double lo = 0.0; // energy diverges as v -> 0, so 0 acts as infeasible
    double hi = -1.0;
    for (int i = 1; i <= kScan; ++i) {
        const double v = v_limit * i / kScan;
        if (mission_energy(model, v).feasible) {
            hi = v;
            break;
        }
        lo = v;
    }
    if (hi < 0) return std::nullopt;
    if (lo == 0.0) return hi; // feasible from the very first sample
    for (int it = 0; it < 80 && hi - lo > 1e-9; ++it) {
        const double mid = 0.5 * (lo + hi);
        (mission_energy(model, mid).feasible ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

void write_energy_csv(std::ostream& os, const std::vector<MissionEnergy>& rows,
                      const std::vector<std::string>& comments) {
    write_comments(os, "# ", comments);
    os << "v_mps,power_W,energy_Wh,duration_min,feasible\n";
    for (const auto& r : rows) {
        os << num(r.v_mps, "%.9g") << "," << num(r.power_W, "%.9g") << ","
           << num(r.energy_Wh, "%.9g") << "," << num(r.duration_min, "%.9g") << ","
           << (r.feasible ? 1 : 0) << "\n";
    }
}

void write_energy_summary_json(std::ostream& os, const PowerModel& model,
                               const std::string& config_fingerprint) {
    nlohmann::ordered_json j;
    j["meta"]["tool"] = std::string(kToolName) + " " + kVersion;
    j["meta"]["config"] = config_fingerprint;
    j["mode"] = model.mode == ForwardPower::combined ? "combined" : "split";
    j["battery_Wh"] = model.battery_Wh;
    j["mission_distance_m"] = model.mission_distance_m;
    j["hover_power_W"] = motor_power(model, model.hover_thrust_N);
    j["electronics_W"] = model.electronics_W;
    const auto vmin = min_feasible_speed(model);
    if (vmin) {
        const MissionEnergy at = mission_energy(model, *vmin);
        j["min_feasible_speed_mps"] = *vmin;
        j["duration_at_min_speed_min"] = at.duration_min;
        j["energy_at_min_speed_Wh"] = at.energy_Wh;
    } else {
        j["min_feasible_speed_mps"] = nullptr;
        j["note"] = "battery cannot cover the mission at any scanned speed";
    }
    os << j.dump(2) << "\n";
}

}
