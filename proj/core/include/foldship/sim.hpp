#pragma once

#include <foldship/controller.hpp>
#include <foldship/energy.hpp>

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace foldship {

// Controlled axes. Yaw gains take N*m / rad units; the translational axes
// use N / m. The y and yaw axes reuse the x-axis plant values by default
// since only x and z were characterized.
enum class Axis { x = 0, y = 1, z = 2, yaw = 3 };
inline constexpr int kAxes = 4;
const char* axis_name(Axis a);

// Point-mass plant: common buoyant body mass plus per-axis hydrodynamic
// added mass, quadratic drag and the net (weight minus lift) force pulling
// down on z. Defaults describe the reference craft; the config loader
// rederives base_mass and A_z from the evaluated design when they are not
// set explicitly.
struct PlantParams {
    double base_mass_kg = 1.0375218129; // rho_air * V_deployed + net weight mass
    double net_weight_N = 0.02 * 9.80665;
    double rho_air = 1.231;
    std::array<double, kAxes> added_mass_kg{1.165, 1.165, 0.29, 1.165};
    std::array<double, kAxes> C_D{1.2, 1.2, 0.9, 1.2};
    std::array<double, kAxes> A_m2{0.41, 0.41, 0.35463876, 0.41};

    double inertia(Axis a) const {
        return base_mass_kg + added_mass_kg[static_cast<int>(a)];
    }
};

// Throws config_error unless every entry is positive.
void validate(const PlantParams& p);

// A timed target change; axes left empty keep their previous target.
struct Waypoint {
    double t_s = 0;
    std::array<std::optional<double>, kAxes> target;
};

struct Scenario {
    double duration_s = 100.0;
    std::vector<Waypoint> waypoints;
};

// Climb to 1 m, hold, then move 2 m forward at cruise speed.
Scenario reference_scenario();

// Throws config_error on unsorted/out-of-range waypoints or an empty list.
void validate(const Scenario& sc);

struct SimOptions {
    int phys_hz = 500;
    int ctrl_hz = 40;
    double sma_window_s = 0.0;
    bool damping = true;
    // test hooks for the drag-free / weight-free closed-loop oracle
    bool drag_enabled = true;
    bool weight_enabled = true;
};

void validate(const SimOptions& opt);

// State sampled at control ticks.
struct TrajRow {
    double t = 0;
    double x = 0, z = 0;
    double vx = 0, vz = 0;
    double tau_x = 0, tau_z = 0; // applied forces held until the next tick
    double energy_J = 0;         // cumulative electrical energy
};

// One controller evaluation, for the force log.
struct ForceRow {
    double t = 0;
    Axis axis = Axis::x;
    ControlStep step;
};

struct SimSummary {
    double settling_time_z_s = -1; // entry into the 2% band, never leaving; -1 if unmet
    double steady_z_error_m = 0;   // mean target error over the last 5 s
    double steady_x_error_m = 0;
    double peak_vx_mps = 0;
    double peak_vz_mps = 0;
    double cruise_vx_mps = 0; // mean vx over the mid part of the final x leg
    double final_x_m = 0;
    double final_z_m = 0;
    double energy_Wh = 0;
    long long physics_steps = 0;
};

struct SimRun {
    std::vector<TrajRow> trajectory;
    std::vector<ForceRow> forces;
    SimSummary summary;
};

// Advances one axis by dt under a constant net force (exact for the
// zero-order-held segments the control loop produces).
void step_axis(double& pos, double& vel, double net_force_N, double inertia_kg,
               double dt);

// Runs the closed loop: physics at phys_hz, controllers and logging at
// ctrl_hz, electrical energy integrated per step from the x/z motor groups
// plus the constant electronics draw. Deterministic; throws numeric_error
// when the state stops being finite.
SimRun run_scenario(const Scenario& sc, const PlantParams& plant,
                    const std::array<AxisGains, kAxes>& gains,
                    const PowerModel& power, const SimOptions& opt);

void write_trajectory_csv(std::ostream& os, const std::vector<TrajRow>& rows,
                          const std::vector<std::string>& comments);
void write_forces_csv(std::ostream& os, const std::vector<ForceRow>& rows,
                      const std::vector<std::string>& comments);
void write_sim_summary_json(std::ostream& os, const SimRun& run,
                            const SimOptions& opt,
                            const std::string& config_fingerprint);

}
