#pragma once

#include <foldship/errors.hpp>

#include <cstdint>
#include <vector>

namespace foldship {

// Per-axis saturated sliding-mode gains. xi is not stored: the slope is
// tied to the force and speed limits by construction.
struct AxisGains {
    double F_max = 1.25; // N (N*m for the yaw axis)
    double v_max = 0.15; // m/s (rad/s for yaw)
    double tol = 0.10;   // m (rad); half-width of the linear band

    double xi() const { return F_max / v_max; }
};

// Throws config_error when a gain is not strictly positive.
void validate(const AxisGains& g);

// Clamp to [-1, 1], identity inside (boundary included).
double saturate(double u);

// s = xi*err + err_rate with the convention err = target - pos,
// err_rate = -vel for a fixed target.
double sliding_surface(double err, double err_rate, double xi);

// One control evaluation, kept for logging.
struct ControlStep {
    double s = 0;        // sliding variable
    double tau = 0;      // raw law output
    double tau_sma = 0;  // moving-average correction
    double tau_star = 0; // clamped applied force
};

// Saturated SMC with velocity damping and a sliding moving average of the
// applied forces that cancels steady-state offsets. One instance per axis;
// state lives only in the SMA ring buffer.
class AxisController {
  public:
    // window_steps = 0 disables the SMA correction; damping = false drops
    // the -xi*vel term (the alternative reading of the law).
    AxisController(const AxisGains& gains, int window_steps, bool damping = true);

    void set_target(double target) { target_ = target; }
    double target() const { return target_; }

    // Computes tau* from a position/velocity measurement and pushes the
    // applied value into the SMA window. Throws numeric_error on
    // non-finite measurements.
    ControlStep update(double pos, double vel);

    // Forgets the SMA history; the next update reproduces first-call output.
    void reset();

    int window_steps() const { return window_; }

  private:
    double sma() const;

    AxisGains gains_;
    int window_ = 0;
    bool damping_ = true;
    double target_ = 0;

    std::vector<double> buf_;
    int head_ = 0;   // next slot to overwrite
    int count_ = 0;  // filled slots
    double sum_ = 0; // running sum of the filled slots
    std::uint64_t pushes_ = 0;
};

}
