#pragma once

#include <foldship/errors.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace foldship {

// How the forward-thrust electrical power is booked.
enum class ForwardPower {
    combined, // P evaluated once on the total drag thrust
    split,    // two motors at half thrust each, idle draw counted twice
};

// Motor regression, avionics draw and the mission frame. The quadratic maps
// thrust in newtons to electrical watts; its constant term is the idle draw.
struct PowerModel {
    double motor_a = 3.347;
    double motor_b = 25.857;
    double motor_c = 1.69;
    double electronics_W = 4.515;
    double hover_thrust_N = 0.02 * 9.80665; // net weight held by one motor
    double battery_Wh = 14.8;
    double mission_distance_m = 300.0;
    ForwardPower mode = ForwardPower::combined;

    // cruise drag inputs
    double C_D = 1.2;
    double rho_air = 1.231;
    double A_m2 = 0.41;
};

// Throws config_error on a non-positive battery or distance.
void validate(const PowerModel& model);

// Electrical power for one motor at a thrust setpoint; negative thrust is a
// domain error.
double motor_power(const PowerModel& model, double thrust_N);

double drag_force(double v_mps, double C_D, double rho, double A_m2);

struct MissionEnergy {
    double v_mps = 0;
    double power_W = 0; // electronics + hover motor + forward propulsion
    double energy_Wh = 0;
    double duration_min = 0;
    bool feasible = false; // energy fits in the battery
};

MissionEnergy mission_energy(const PowerModel& model, double v_cruise_mps);

std::vector<MissionEnergy> energy_curve(const PowerModel& model,
                                        const std::vector<double>& v_grid);

// Lowest cruise speed whose mission energy fits the battery, bracketed by a
// coarse scan over (0, v_limit] and bisected well below 1e-3 m/s. Empty when
// nothing on the scan is feasible.
std::optional<double> min_feasible_speed(const PowerModel& model,
                                         double v_limit = 0.5);

void write_energy_csv(std::ostream& os, const std::vector<MissionEnergy>& rows,
                      const std::vector<std::string>& comments);
void write_energy_summary_json(std::ostream& os, const PowerModel& model,
                               const std::string& config_fingerprint);

}
