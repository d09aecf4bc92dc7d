#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <functional>

#include "nodal/dual.hpp"

namespace nodal::detail {

// Dormand-Prince 5(4) pair with PI step-size control, over a fixed-size
// complex state.  Time runs along one straight segment t(s) = t0 + s*dt,
// s in [0,1]; the driver below chains segments.

template <int N>
using State = std::array<C, N>;

template <int N>
double error_norm(const State<N>& e, const State<N>& y0, const State<N>& y1, double atol,
                  double rtol) {
  double acc = 0.0;
  for (int i = 0; i < N; ++i) {
    double scale = atol + rtol * std::max(std::abs(y0[i]), std::abs(y1[i]));
    double r = std::abs(e[i]) / scale;
    acc += r * r;
  }
  return std::sqrt(acc / N);
}

enum class StepAction { Continue, Restart, Stop };

struct RkControl {
  double rel_tol;
  double abs_tol;
  double max_step;   // in t units
  long max_steps;
};

struct RkStatus {
  bool step_limit = false;
  bool stopped = false;
  long steps_taken = 0;
  double error_estimate = 0.0;  // sum of accepted local error estimates (t units)
};

// f(t, y) -> dy/dt.  on_accept(t, y, h_t) runs after each accepted step and
// may modify y in place (chart switches); returning Restart clears the PI
// controller history, Stop ends the integration.
template <int N, class F, class OnAccept>
RkStatus rk_segment(F&& f, C t0, C t1, State<N>& y, const RkControl& ctl, RkStatus st,
                    OnAccept&& on_accept) {
  static constexpr double A[7][6] = {
      {},
      {1.0 / 5},
      {3.0 / 40, 9.0 / 40},
      {44.0 / 45, -56.0 / 15, 32.0 / 9},
      {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
      {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
      {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84}};
  static constexpr double CNODE[7] = {0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
  static constexpr double B5[7] = {35.0 / 384,      0.0,  500.0 / 1113, 125.0 / 192,
                                   -2187.0 / 6784, 11.0 / 84, 0.0};
  static constexpr double B4[7] = {5179.0 / 57600,    0.0,          7571.0 / 16695, 393.0 / 640,
                                   -92097.0 / 339200, 187.0 / 2100, 1.0 / 40};

  const C dt = t1 - t0;
  const double seg_len = std::abs(dt);
  if (seg_len == 0.0) return st;
  double s = 0.0;
  double h = std::min(0.1, ctl.max_step / seg_len);
  double err_prev = 1.0;
  const double order_exp = 1.0 / 5.0;

  while (s < 1.0) {
    if (st.steps_taken >= ctl.max_steps) {
      st.step_limit = true;
      return st;
    }
    ++st.steps_taken;
    h = std::min(h, 1.0 - s);

    State<N> k[7];
    State<N> stage;
    k[0] = f(t0 + s * dt, y);
    for (int i = 1; i < 7; ++i) {
      for (int n = 0; n < N; ++n) {
        C acc(0.0);
        for (int j = 0; j < i; ++j) acc += A[i][j] * k[j][n];
        stage[n] = y[n] + h * dt * acc;
      }
      k[i] = f(t0 + (s + CNODE[i] * h) * dt, stage);
    }
    State<N> y5, err;
    for (int n = 0; n < N; ++n) {
      C acc5(0.0), acc4(0.0);
      for (int j = 0; j < 7; ++j) {
        acc5 += B5[j] * k[j][n];
        acc4 += B4[j] * k[j][n];
      }
      y5[n] = y[n] + h * dt * acc5;
      err[n] = h * dt * (acc5 - acc4);
    }
    double e = error_norm<N>(err, y, y5, ctl.abs_tol, ctl.rel_tol);
    if (e <= 1.0) {
      s += h;
      y = y5;
      double le = 0.0;
      for (int n = 0; n < N; ++n) le = std::max(le, std::abs(err[n]));
      st.error_estimate += le;
      StepAction act = on_accept(t0 + s * dt, y, h * seg_len);
      if (act == StepAction::Stop) {
        st.stopped = true;
        return st;
      }
      double fac = 0.9 * std::pow(std::max(e, 1e-10), -0.7 * order_exp) *
                   std::pow(err_prev, 0.4 * order_exp);
      if (act == StepAction::Restart) {
        err_prev = 1.0;
        fac = std::min(fac, 1.0);
      } else {
        err_prev = std::max(e, 1e-10);
      }
      h = h * std::clamp(fac, 0.2, 5.0);
      h = std::min(h, ctl.max_step / seg_len);
    } else {
      h = h * std::clamp(0.9 * std::pow(e, -order_exp), 0.1, 1.0);
    }
  }
  return st;
}

}  // namespace nodal::detail
