#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include "dbh/types.hpp"

namespace dbh {

struct OdeOptions {
  double rel_tol = 1e-8;
  double abs_tol = 1e-10;
  double h_max = std::numeric_limits<double>::infinity();
  double h_init = 1e-4;
  long max_steps_per_call = 200'000'000L;
};

/// Continuous extension of one accepted Dormand-Prince step on [t0, t0+h].
struct DenseStep {
  double t0 = 0.0;
  double h = 0.0;
  StateVec r1, r2, r3, r4, r5;

  void eval(double theta, StateVec& out) const {
    const double th1 = 1.0 - theta;
    out = r1 + theta * (r2 + th1 * (r3 + theta * (r4 + th1 * r5)));
  }

  double eval_real_component(Eigen::Index i, double theta) const {
    const double th1 = 1.0 - theta;
    const Complex v =
        r1(i) + theta * (r2(i) + th1 * (r3(i) + theta * (r4(i) + th1 * r5(i))));
    return v.real();
  }
};

/// Explicit Dormand-Prince 5(4) stepper with embedded error estimate, PI-free
/// step control and 4th-order dense output. FSAL: the last stage of an
/// accepted step seeds the next one. The derivative callable has signature
/// f(double t, const StateVec& y, StateVec& dydt).
class Dopri5 {
 public:
  explicit Dopri5(Eigen::Index dim, const OdeOptions& opts = {}) : opts_(opts) { resize(dim); }

  void resize(Eigen::Index dim) {
    for (StateVec* v : {&k1_, &k2_, &k3_, &k4_, &k5_, &k6_, &k7_, &ytmp_, &yerr_}) {
      v->resize(dim);
    }
    fresh_ = true;
  }

  const OdeOptions& options() const { return opts_; }
  double suggested_step() const { return h_; }
  void set_step(double h) { h_ = h; }

  /// Invalidate the FSAL cache (call after any discontinuous state change).
  void reset() { fresh_ = true; }

  /// Advance y from t by one accepted step, not past t_end. Updates t and y,
  /// fills `dense`. Throws NumericError on step-size underflow.
  template <typename F>
  void step(F&& f, double& t, StateVec& y, double t_end, DenseStep& dense) {
    if (fresh_) {
      f(t, y, k1_);
      fresh_ = false;
    }
    long attempts = 0;
    for (;;) {
      if (++attempts > 1000) throw NumericError("ode: step size control failed to converge");
      double h = std::min(h_, opts_.h_max);
      h = std::min(h, t_end - t);
      if (!(h > 0.0)) throw NumericError("ode: nonpositive step requested");
      if (t + h == t) throw NumericError("ode: step size underflow at t = " + std::to_string(t));

      ytmp_ = y + h * (a21 * k1_);
      f(t + c2 * h, ytmp_, k2_);
      ytmp_ = y + h * (a31 * k1_ + a32 * k2_);
      f(t + c3 * h, ytmp_, k3_);
      ytmp_ = y + h * (a41 * k1_ + a42 * k2_ + a43 * k3_);
      f(t + c4 * h, ytmp_, k4_);
      ytmp_ = y + h * (a51 * k1_ + a52 * k2_ + a53 * k3_ + a54 * k4_);
      f(t + c5 * h, ytmp_, k5_);
      ytmp_ = y + h * (a61 * k1_ + a62 * k2_ + a63 * k3_ + a64 * k4_ + a65 * k5_);
      f(t + h, ytmp_, k6_);
      ytmp_ = y + h * (a71 * k1_ + a73 * k3_ + a74 * k4_ + a75 * k5_ + a76 * k6_);
      f(t + h, ytmp_, k7_);  // ytmp_ is the 5th order solution

      yerr_ = h * (e1 * k1_ + e3 * k3_ + e4 * k4_ + e5 * k5_ + e6 * k6_ + e7 * k7_);
      double err_sq = 0.0;
      for (Eigen::Index i = 0; i < y.size(); ++i) {
        const double scale =
            opts_.abs_tol + opts_.rel_tol * std::max(std::abs(y(i)), std::abs(ytmp_(i)));
        const double e = std::abs(yerr_(i)) / scale;
        err_sq += e * e;
      }
      const double err = std::sqrt(err_sq / static_cast<double>(y.size()));

      if (err <= 1.0) {
        dense.t0 = t;
        dense.h = h;
        dense.r1 = y;
        dense.r2 = ytmp_ - y;
        dense.r3 = h * k1_ - dense.r2;
        dense.r4 = dense.r2 - h * k7_ - dense.r3;
        dense.r5 = h * (d1 * k1_ + d3 * k3_ + d4 * k4_ + d5 * k5_ + d6 * k6_ + d7 * k7_);

        t += h;
        y = ytmp_;
        k1_.swap(k7_);  // FSAL
        const double grow = err > 0.0 ? 0.9 * std::pow(err, -0.2) : 5.0;
        h_ = h * std::clamp(grow, 0.2, 5.0);
        return;
      }
      h_ = h * std::clamp(0.9 * std::pow(err, -0.2), 0.2, 1.0);
    }
  }

  /// Integrate to exactly t_end with no event handling.
  template <typename F>
  void integrate_to(F&& f, double& t, StateVec& y, double t_end) {
    DenseStep dense;
    long steps = 0;
    while (t < t_end) {
      step(f, t, y, t_end, dense);
      if (++steps > opts_.max_steps_per_call) {
        throw NumericError("ode: exceeded maximum step count");
      }
    }
  }

 private:
  OdeOptions opts_;
  double h_ = 1e-4;
  bool fresh_ = true;
  StateVec k1_, k2_, k3_, k4_, k5_, k6_, k7_, ytmp_, yerr_;

  // Dormand-Prince RK5(4)7M tableau.
  static constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0, c5 = 8.0 / 9.0;
  static constexpr double a21 = 1.0 / 5.0;
  static constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
  static constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
  static constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0,
                          a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
  static constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                          a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
  static constexpr double a71 = 35.0 / 384.0, a73 = 500.0 / 1113.0, a74 = 125.0 / 192.0,
                          a75 = -2187.0 / 6784.0, a76 = 11.0 / 84.0;
  // b - bhat (5th minus embedded 4th order weights)
  static constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0,
                          e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;
  // dense output weights (Hairer-Norsett-Wanner)
  static constexpr double d1 = -12715105075.0 / 11282082432.0;
  static constexpr double d3 = 87487479700.0 / 32700410799.0;
  static constexpr double d4 = -10690763975.0 / 1880347072.0;
  static constexpr double d5 = 701980252875.0 / 199316789632.0;
  static constexpr double d6 = -1453857185.0 / 822651844.0;
  static constexpr double d7 = 69997945.0 / 29380423.0;
};

}  // namespace dbh
