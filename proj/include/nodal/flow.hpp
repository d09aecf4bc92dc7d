#pragma once

#include <vector>

#include "nodal/atlas.hpp"
#include "nodal/riccati_ode.hpp"

namespace nodal::flow {

using C = std::complex<double>;
using atlas::ChartId;
using atlas::ChartPoint;
using atlas::PainleveType;
using atlas::Params;

// Straight complex-time segments through the listed waypoints.
struct PathSpec {
  std::vector<C> waypoints;

  // Validates distinct consecutive waypoints and clearance from punctures.
  static PathSpec make(std::vector<C> pts, const std::vector<C>& punctures,
                       double min_puncture_distance);
  static PathSpec make(std::vector<C> pts) { return make(std::move(pts), {}, 0.0); }
};

struct IntegratorConfig {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  double max_step = 0.25;
  double switch_threshold = 1e3;        // rho
  double min_puncture_distance = 0.05;
  long max_steps = 200000;

  // everything positive, rel_tol at least 10 epsilon
  void validate() const;
};

enum class FlowStatus { Completed, StepLimit, NoChartAvailable };

struct Sample {
  C t;
  ChartId chart;
  C x, y;
};

struct SwitchEvent {
  C t;
  ChartId from, to;
};

struct Trajectory {
  std::vector<Sample> samples;
  std::vector<SwitchEvent> events;
  std::vector<C> pole_flags;  // t values where a linear-route zero of u was crossed
  FlowStatus status = FlowStatus::Completed;
  double error_estimate = 0.0;  // accumulated local error estimates

  const Sample& back() const { return samples.back(); }
};

// Adaptive RK5(4) (Dormand-Prince) along the path, switching charts whenever
// max(|x|,|y|) exceeds the threshold.
Trajectory integrate_atlas(PainleveType pt, const Params& p, const PathSpec& path,
                           ChartPoint init, const IntegratorConfig& cfg);

// Scalar Riccati flow on the two-chart P^1 model: chart 0 carries x with
// x' = a x^2 + b x + c, chart 1 carries u = 1/x with u' = -(a + b u + c u^2).
Trajectory integrate_riccati(const riccati::RiccatiODE& ode, const PathSpec& path, C x0,
                             const IntegratorConfig& cfg);

// Pure chart-selection rule: q itself while max(|x|,|y|) <= rho, otherwise the
// adjacent image minimizing max(|x|,|y|) (ties to the lowest chart index).
// Throws NoChartAvailable when every candidate exceeds rho.
ChartPoint switch_chart(PainleveType pt, const Params& p, C t, ChartPoint q, double rho);

}  // namespace nodal::flow
