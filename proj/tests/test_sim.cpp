#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <foldship/sim.hpp>

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

using namespace foldship;
using doctest::Approx;

namespace {

std::array<AxisGains, kAxes> reference_gains() {
    std::array<AxisGains, kAxes> g{};             // x, y, yaw: 1.25 / 0.15 / 0.10
    g[static_cast<int>(Axis::z)].v_max = 1.0;     // climb axis allows 1 m/s
    return g;
}

SimRun run_reference(double sma_window_s) {
    SimOptions opt;
    opt.sma_window_s = sma_window_s;
    return run_scenario(reference_scenario(), PlantParams{}, reference_gains(),
                        PowerModel{}, opt);
}

Scenario z_only_scenario(double target, double duration) {
    Scenario sc;
    sc.duration_s = duration;
    Waypoint wp;
    wp.t_s = 0.0;
    wp.target[static_cast<int>(Axis::z)] = target;
    sc.waypoints = {wp};
    return sc;
}

} // namespace

TEST_CASE("step_axis is the exact constant-force map") {
    double pos = 1.0, vel = 2.0;
    step_axis(pos, vel, 3.0, 1.5, 0.1);
    CHECK(pos == Approx(1.0 + 2.0 * 0.1 + 0.5 * 2.0 * 0.01).epsilon(1e-15));
    CHECK(vel == Approx(2.2).epsilon(1e-15));

    // Many small steps accumulate no discretization error, only rounding.
    pos = 0.0;
    vel = 0.0;
    const double F = 0.7, m = 1.3, dt = 0.002;
    for (int k = 0; k < 1000; ++k) step_axis(pos, vel, F, m, dt);
    const double T = 1000 * dt;
    CHECK(pos == Approx(0.5 * (F / m) * T * T).epsilon(1e-12));
    CHECK(vel == Approx((F / m) * T).epsilon(1e-12));

    // Zero net force leaves the state alone.
    pos = 4.0;
    vel = 0.0;
    step_axis(pos, vel, 0.0, 2.0, 0.01);
    CHECK(pos == 4.0);
    CHECK(vel == 0.0);
}

TEST_CASE("reference mission settles, cruises and lands on target") {
    const SimRun run = run_reference(0.0);
    const SimSummary& s = run.summary;

    CHECK(run.trajectory.size() == 4001); // 40 Hz over 100 s, inclusive
    CHECK(run.forces.size() == 2 * 4001); // x and z axes only
    CHECK(s.physics_steps == 50000);
    CHECK(run.trajectory.front().t == 0.0);
    CHECK(run.trajectory.back().t == Approx(100.0).epsilon(1e-12));

    // Altitude: reaches the 2% band quickly and stays.
    CHECK(s.settling_time_z_s > 0.0);
    CHECK(s.settling_time_z_s < 10.0);
    // Without the SMA correction the saturated law parks at the analytic
    // offset err = W * tol / F below the setpoint.
    CHECK(s.steady_z_error_m == Approx(-0.015690640000000002).epsilon(1e-6));
    CHECK(s.final_z_m == Approx(1.0 - 0.01569064).epsilon(1e-4));

    // Forward leg: arrives within 5 cm and cruises near the speed limit.
    CHECK(s.final_x_m == Approx(2.0).epsilon(0.025));
    CHECK(std::abs(s.cruise_vx_mps - 0.15) / 0.15 < 0.05);
    CHECK(s.peak_vx_mps < 0.20);
    CHECK(s.peak_vz_mps < 1.05);

    // Electrical energy stays in the expected band and is consistent.
    CHECK(s.energy_Wh > 0.30);
    CHECK(s.energy_Wh < 0.45);
    CHECK(run.trajectory.back().energy_J == Approx(s.energy_Wh * 3600.0).epsilon(1e-12));
}

TEST_CASE("the SMA correction removes the steady-state offset") {
    const SimRun plain = run_reference(0.0);
    const SimRun sma = run_reference(1.0);

    CHECK(std::abs(sma.summary.steady_z_error_m) < 5e-4);
    CHECK(std::abs(sma.summary.steady_z_error_m) <
          std::abs(plain.summary.steady_z_error_m));
    CHECK(std::abs(sma.summary.cruise_vx_mps - 0.15) <=
          std::abs(plain.summary.cruise_vx_mps - 0.15) + 1e-9);
    CHECK(std::abs(sma.summary.cruise_vx_mps - 0.15) / 0.15 < 0.05);
    CHECK(sma.summary.final_x_m == Approx(2.0).epsilon(0.025));

    // Window 2 s behaves as well.
    const SimRun wide = run_reference(2.0);
    CHECK(std::abs(wide.summary.steady_z_error_m) < 5e-4);
}

TEST_CASE("cruise power agrees with the energy planner") {
    const SimRun run = run_reference(1.0);
    // Mid-cruise window: t in [58, 61], well inside the constant-speed leg.
    const TrajRow* a = nullptr;
    const TrajRow* b = nullptr;
    for (const auto& r : run.trajectory) {
        if (!a && r.t >= 58.0) a = &r;
        if (!b && r.t >= 61.0) b = &r;
    }
    REQUIRE(a);
    REQUIRE(b);
    const double mean_W = (b->energy_J - a->energy_J) / (b->t - a->t);
    const PowerModel power;
    const double planner_W = mission_energy(power, 0.15).power_W;
    CHECK(std::abs(mean_W - planner_W) / planner_W < 0.01);
}

TEST_CASE("simulation runs are bit-identical") {
    const SimRun r1 = run_reference(1.0);
    const SimRun r2 = run_reference(1.0);
    REQUIRE(r1.trajectory.size() == r2.trajectory.size());
    for (std::size_t i = 0; i < r1.trajectory.size(); ++i) {
        CHECK(r1.trajectory[i].x == r2.trajectory[i].x);
        CHECK(r1.trajectory[i].z == r2.trajectory[i].z);
        CHECK(r1.trajectory[i].vx == r2.trajectory[i].vx);
        CHECK(r1.trajectory[i].vz == r2.trajectory[i].vz);
        CHECK(r1.trajectory[i].energy_J == r2.trajectory[i].energy_J);
    }
    CHECK(r1.summary.settling_time_z_s == r2.summary.settling_time_z_s);
    CHECK(r1.summary.energy_Wh == r2.summary.energy_Wh);
}

TEST_CASE("halving the physics step barely moves the endpoint") {
    SimOptions coarse; // 500 Hz
    SimOptions fine;
    fine.phys_hz = 1000;
    const SimRun rc = run_scenario(reference_scenario(), PlantParams{}, reference_gains(),
                                   PowerModel{}, coarse);
    const SimRun rf = run_scenario(reference_scenario(), PlantParams{}, reference_gains(),
                                   PowerModel{}, fine);
    CHECK(std::abs(rc.summary.final_x_m - rf.summary.final_x_m) < 1e-3);
    CHECK(std::abs(rc.summary.final_z_m - rf.summary.final_z_m) < 1e-3);
    CHECK(rf.summary.physics_steps == 100000);
    CHECK(rf.trajectory.size() == 4001); // control rate unchanged
}

TEST_CASE("waypoints switch targets exactly on their tick") {
    const SimRun run = run_reference(0.0);
    // Two control rows per 0.05 s: t = 50 s is row 2000.
    const TrajRow& before = run.trajectory[1999];
    const TrajRow& at = run.trajectory[2000];
    CHECK(at.t == Approx(50.0).epsilon(1e-9));
    CHECK(before.tau_x == 0.0); // x target still 0, never pushed
    CHECK(at.tau_x == 1.25);    // new 2 m target saturates the x motor
    CHECK(before.x == 0.0);
    CHECK(at.x == 0.0); // force applies after the log row
}

TEST_CASE("a drag-free weight-free run matches a long double replay") {
    Scenario sc = z_only_scenario(0.5, 4.0);
    SimOptions opt;
    opt.drag_enabled = false;
    opt.weight_enabled = false;
    const PlantParams plant;
    const auto gains = reference_gains();
    const SimRun run = run_scenario(sc, plant, gains, PowerModel{}, opt);

    const AxisGains gz = gains[static_cast<int>(Axis::z)];
    const long double xi = static_cast<long double>(gz.F_max) / gz.v_max;
    const long double inertia =
        plant.base_mass_kg + plant.added_mass_kg[static_cast<int>(Axis::z)];
    const double dt = 1.0 / opt.phys_hz;

    long double pos = 0, vel = 0, tau = 0;
    std::vector<std::pair<long double, long double>> ticks;
    const long long steps = 2000; // 4 s at 500 Hz
    for (long long k = 0; k <= steps; ++k) {
        const bool tick = k == 0 || (k * opt.ctrl_hz) / opt.phys_hz >
                                        ((k - 1) * opt.ctrl_hz) / opt.phys_hz;
        if (tick) {
            const long double err = 0.5L - pos;
            long double u = (xi * err - vel) / (xi * gz.tol);
            u = std::clamp<long double>(u, -1.0L, 1.0L);
            long double t_ = gz.F_max * u - xi * vel;
            t_ = std::clamp<long double>(t_, -gz.F_max, gz.F_max);
            tau = t_;
            ticks.emplace_back(pos, vel);
        }
        if (k == steps) break;
        const long double a = tau / inertia;
        pos += vel * dt + 0.5L * a * dt * dt;
        vel += a * dt;
    }

    REQUIRE(run.trajectory.size() == ticks.size());
    for (std::size_t i = 0; i < ticks.size(); ++i) {
        CAPTURE(i);
        CHECK(std::abs(run.trajectory[i].z - static_cast<double>(ticks[i].first)) < 1e-6);
        CHECK(std::abs(run.trajectory[i].vz - static_cast<double>(ticks[i].second)) < 1e-6);
    }
    // And the run actually closed the loop on the target.
    CHECK(run.trajectory.back().z == Approx(0.5).epsilon(0.02));
}

TEST_CASE("inactive axes stay untouched and unlogged") {
    const SimRun run = run_scenario(z_only_scenario(1.0, 5.0), PlantParams{},
                                    reference_gains(), PowerModel{}, SimOptions{});
    CHECK(run.trajectory.size() == 201);
    for (const auto& f : run.forces) CHECK(f.axis == Axis::z);
    for (const auto& r : run.trajectory) {
        CHECK(r.x == 0.0);
        CHECK(r.vx == 0.0);
        CHECK(r.tau_x == 0.0);
    }
}

TEST_CASE("an idle hover burns only avionics and idle motor power") {
    // Single x waypoint at the origin: no axis ever produces thrust.
    Scenario sc;
    sc.duration_s = 10.0;
    Waypoint wp;
    wp.t_s = 0.0;
    wp.target[static_cast<int>(Axis::x)] = 0.0;
    sc.waypoints = {wp};
    const SimRun run = run_scenario(sc, PlantParams{}, reference_gains(), PowerModel{},
                                    SimOptions{});
    // electronics 4.515 W + two idle motor groups at 1.69 W each
    const double watts = 4.515 + 2.0 * 1.69;
    CHECK(run.summary.energy_Wh == Approx(watts * 10.0 / 3600.0).epsilon(1e-9));
    double prev = -1.0;
    for (const auto& r : run.trajectory) {
        CHECK(r.energy_J >= prev);
        prev = r.energy_J;
    }
}

TEST_CASE("diverging dynamics abort with a numeric error") {
    PlantParams plant;
    plant.C_D[static_cast<int>(Axis::z)] = 1e300; // absurd drag blows up the state
    CHECK_THROWS_WITH_AS(run_scenario(z_only_scenario(1.0, 2.0), plant, reference_gains(),
                                      PowerModel{}, SimOptions{}),
                         doctest::Contains("non-finite"), numeric_error);
}

TEST_CASE("scenario, options and plant validation") {
    const PlantParams plant;
    const auto gains = reference_gains();

    Scenario unsorted = reference_scenario();
    std::swap(unsorted.waypoints[0], unsorted.waypoints[1]);
    CHECK_THROWS_AS(validate(unsorted), config_error);

    Scenario late = reference_scenario();
    late.waypoints[1].t_s = 200.0;
    CHECK_THROWS_AS(validate(late), config_error);

    Scenario empty;
    empty.waypoints.clear();
    CHECK_THROWS_AS(validate(empty), config_error);

    Scenario no_target = reference_scenario();
    no_target.waypoints[1].target = {};
    CHECK_THROWS_AS(validate(no_target), config_error);

    SimOptions bad_rates;
    bad_rates.ctrl_hz = 600; // faster than physics
    CHECK_THROWS_AS(validate(bad_rates), config_error);
    SimOptions bad_window;
    bad_window.sma_window_s = -1.0;
    CHECK_THROWS_AS(validate(bad_window), config_error);

    PlantParams bad_plant;
    bad_plant.added_mass_kg[0] = 0.0;
    CHECK_THROWS_AS(validate(bad_plant), config_error);
    CHECK_THROWS_AS(run_scenario(reference_scenario(), bad_plant, gains, PowerModel{},
                                 SimOptions{}),
                    config_error);

    auto bad_gains = gains;
    bad_gains[0].F_max = 0.0;
    CHECK_THROWS_AS(run_scenario(reference_scenario(), plant, bad_gains, PowerModel{},
                                 SimOptions{}),
                    config_error);
}

TEST_CASE("trajectory and force CSVs are shaped as documented") {
    const SimRun run = run_scenario(z_only_scenario(1.0, 1.0), PlantParams{},
                                    reference_gains(), PowerModel{}, SimOptions{});
    std::ostringstream ts;
    write_trajectory_csv(ts, run.trajectory, {"traj"});
    const std::string traj = ts.str();
    CHECK(traj.find("# traj\n") == 0);
    CHECK(traj.find("t_s,x_m,z_m,vx_mps,vz_mps,tau_x_N,tau_z_N,energy_J\n") !=
          std::string::npos);
    CHECK(std::count(traj.begin(), traj.end(), '\n') == 1 + 1 + 41);

    std::ostringstream fs;
    write_forces_csv(fs, run.forces, {});
    const std::string forces = fs.str();
    CHECK(forces.find("t_s,axis,s,tau_N,tau_sma_N,tau_star_N\n") == 0);
    CHECK(std::count(forces.begin(), forces.end(), '\n') == 1 + 41);
    CHECK(forces.find(",z,") != std::string::npos);
    CHECK(forces.find(",x,") == std::string::npos);
}

TEST_CASE("simulation summary JSON carries the metrics") {
    const SimRun run = run_reference(1.0);
    SimOptions opt;
    opt.sma_window_s = 1.0;
    std::ostringstream os;
    write_sim_summary_json(os, run, opt, "abcdef0123456789");
    const nlohmann::json j = nlohmann::json::parse(os.str());
    CHECK(j["meta"]["tool"] == "foldship 0.1.0");
    CHECK(j["meta"]["config"] == "abcdef0123456789");
    CHECK(j["physics_hz"] == 500);
    CHECK(j["control_hz"] == 40);
    CHECK(j["sma_window_s"].get<double>() == Approx(1.0).epsilon(1e-12));
    CHECK(j["physics_steps"] == 50000);
    CHECK(j["final_x_m"].get<double>() == Approx(run.summary.final_x_m).epsilon(1e-12));
    CHECK(j["energy_Wh"].get<double>() == Approx(run.summary.energy_Wh).epsilon(1e-12));
    CHECK(j.contains("settling_time_z_s"));
    CHECK(j.contains("cruise_vx_mps"));
}
