#include <foldship/controller.hpp>

#include <cmath>

namespace foldship {

void validate(const AxisGains& g) {
    if (!(g.F_max > 0)) throw config_error("axis gain F_max must be positive");
    if (!(g.v_max > 0)) throw config_error("axis gain v_max must be positive");
    if (!(g.tol > 0)) throw config_error("axis gain tol must be positive");
}

double saturate(double u) {
    if (u > 1.0) return 1.0;
    if (u < -1.0) return -1.0;
    return u;
}

double sliding_surface(double err, double err_rate, double xi) {
    return xi * err + err_rate;
}

AxisController::AxisController(const AxisGains& gains, int window_steps, bool damping)
    : gains_(gains), window_(window_steps), damping_(damping) {
    validate(gains_);
    if (window_ < 0) throw config_error("SMA window must be non-negative");
    buf_.assign(static_cast<std::size_t>(window_), 0.0);
}

double AxisController::sma() const {
    return count_ ? sum_ / count_ : 0.0;
}

ControlStep AxisController::update(double pos, double vel) {
    if (!std::isfinite(pos) || !std::isfinite(vel))
        throw numeric_error("controller fed a non-finite measurement");

    const double xi = gains_.xi();
    ControlStep out;
    out.s = sliding_surface(target_ - pos, -vel, xi);
    out.tau = gains_.F_max * saturate(out.s / (xi * gains_.tol));
    if (damping_) out.tau -= xi * vel;
    out.tau_sma = sma();
    out.tau_star = out.tau + out.tau_sma;
    if (out.tau_star > gains_.F_max) out.tau_star = gains_.F_max;
    if (out.tau_star < -gains_.F_max) out.tau_star = -gains_.F_max;

    if (window_ > 0) {
        sum_ += out.tau_star - (count_ == window_ ? buf_[head_] : 0.0);
        buf_[head_] = out.tau_star;
        head_ = (head_ + 1) % window_;
        if (count_ < window_) ++count_;
        // the running sum drifts under FP cancellation; rebuild it periodically
        if (++pushes_ % 10000 == 0) {
            double fresh = 0;
            for (int i = 0; i < count_; ++i) fresh += buf_[i];
            sum_ = fresh;
        }
    }
    return out;
}

void AxisController::reset() {
    buf_.assign(buf_.size(), 0.0);
    head_ = count_ = 0;
    sum_ = 0;
    pushes_ = 0;
}

}
