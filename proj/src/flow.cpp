#include "nodal/flow.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nodal/detail/rk.hpp"

namespace nodal::flow {

namespace {

double segment_point_distance(C a, C b, C p) {
  const C d = b - a;
  const double len2 = std::norm(d);
  if (len2 == 0.0) return std::abs(p - a);
  double u = ((p - a) * std::conj(d)).real() / len2;
  u = std::clamp(u, 0.0, 1.0);
  return std::abs(p - (a + u * d));
}

double max_norm(C x, C y) { return std::max(std::abs(x), std::abs(y)); }

// switch_chart without the throw, for use inside the integration loop
std::pair<bool, ChartPoint> try_switch(PainleveType pt, const Params& p, C t, ChartPoint q,
                                       double rho) {
  if (max_norm(q.x, q.y) <= rho) return {true, q};
  ChartPoint best = q;
  double best_norm = max_norm(q.x, q.y);
  for (ChartId c : atlas::adjacent_charts(pt, q.chart)) {
    try {
      auto [nx, ny] = atlas::transition(pt, q.chart, c, p, t, {q.x, q.y});
      double n = max_norm(nx, ny);
      if (n < best_norm) {
        best = ChartPoint{c, nx, ny};
        best_norm = n;
      }
    } catch (const OutsideOverlap&) {
      // candidate not defined here
    }
  }
  if (best_norm > rho) return {false, q};
  return {true, best};
}

}  // namespace

void IntegratorConfig::validate() const {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (rel_tol < 10 * eps) throw Error("rel_tol below 10 machine epsilon");
  if (abs_tol <= 0 || max_step <= 0 || switch_threshold <= 0 || min_puncture_distance <= 0 ||
      max_steps <= 0)
    throw Error("integrator configuration values must be positive");
}

PathSpec PathSpec::make(std::vector<C> pts, const std::vector<C>& punctures,
                        double min_puncture_distance) {
  if (pts.empty()) throw Error("path needs at least one waypoint");
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    if (pts[i] == pts[i + 1]) throw Error("consecutive path waypoints coincide");
    for (const C& p : punctures)
      if (segment_point_distance(pts[i], pts[i + 1], p) < min_puncture_distance)
        throw PunctureHit("path segment passes within " + std::to_string(min_puncture_distance) +
                          " of puncture t = " + std::to_string(p.real()));
  }
  if (pts.size() == 1)
    for (const C& p : punctures)
      if (std::abs(pts[0] - p) < min_puncture_distance)
        throw PunctureHit("path starts at a puncture");
  return PathSpec{std::move(pts)};
}

ChartPoint switch_chart(PainleveType pt, const Params& p, C t, ChartPoint q, double rho) {
  auto [ok, res] = try_switch(pt, p, t, q, rho);
  if (!ok)
    throw NoChartAvailable("no chart keeps the point below the switch threshold at t = " +
                           std::to_string(t.real()));
  return res;
}

Trajectory integrate_atlas(PainleveType pt, const Params& p, const PathSpec& path,
                           ChartPoint init, const IntegratorConfig& cfg) {
  cfg.validate();
  if (!std::isfinite(init.x.real()) || !std::isfinite(init.x.imag()) ||
      !std::isfinite(init.y.real()) || !std::isfinite(init.y.imag()))
    throw Error("initial chart point must be finite");
  // re-validate the path against this type's time domain
  PathSpec::make(path.waypoints, atlas::punctures(pt), cfg.min_puncture_distance);

  Trajectory traj;
  ChartId chart = init.chart;
  detail::State<2> y{init.x, init.y};
  traj.samples.push_back({path.waypoints[0], chart, y[0], y[1]});

  detail::RkControl ctl{cfg.rel_tol, cfg.abs_tol, cfg.max_step, cfg.max_steps};
  detail::RkStatus st;

  auto rhs = [&](C t, const detail::State<2>& s) -> detail::State<2> {
    auto [dx, dy] = atlas::vf_any_chart(pt, chart, p, t, s[0], s[1]);
    return {dx, dy};
  };

  bool no_chart = false;
  for (size_t seg = 0; seg + 1 < path.waypoints.size(); ++seg) {
    auto on_accept = [&](C t, detail::State<2>& s, double) -> detail::StepAction {
      traj.samples.push_back({t, chart, s[0], s[1]});
      if (max_norm(s[0], s[1]) > cfg.switch_threshold) {
        auto [ok, moved] = try_switch(pt, p, t, ChartPoint{chart, s[0], s[1]},
                                      cfg.switch_threshold);
        if (!ok) {
          no_chart = true;
          return detail::StepAction::Stop;
        }
        if (moved.chart != chart) {
          traj.events.push_back({t, chart, moved.chart});
          chart = moved.chart;
          s[0] = moved.x;
          s[1] = moved.y;
          traj.samples.push_back({t, chart, s[0], s[1]});
          return detail::StepAction::Restart;
        }
      }
      return detail::StepAction::Continue;
    };
    st = detail::rk_segment<2>(rhs, path.waypoints[seg], path.waypoints[seg + 1], y, ctl, st,
                               on_accept);
    if (no_chart || st.step_limit || st.stopped) break;
  }
  traj.error_estimate = st.error_estimate;
  traj.status = no_chart          ? FlowStatus::NoChartAvailable
                : st.step_limit   ? FlowStatus::StepLimit
                                  : FlowStatus::Completed;
  return traj;
}

Trajectory integrate_riccati(const riccati::RiccatiODE& ode, const PathSpec& path, C x0,
                             const IntegratorConfig& cfg) {
  cfg.validate();
  PathSpec::make(path.waypoints, ode.pole_set, cfg.min_puncture_distance);

  Trajectory traj;
  int chart = 0;  // 0: x-coordinate, 1: u = 1/x
  detail::State<1> y{x0};
  if (std::abs(x0) > cfg.switch_threshold) {
    chart = 1;
    y[0] = C(1.0) / x0;
  }
  traj.samples.push_back({path.waypoints[0], chart, y[0], C(0.0)});

  detail::RkControl ctl{cfg.rel_tol, cfg.abs_tol, cfg.max_step, cfg.max_steps};
  detail::RkStatus st;

  auto rhs = [&](C t, const detail::State<1>& s) -> detail::State<1> {
    const C a = ode.a.eval(t), b = ode.b.eval(t), c = ode.c.eval(t);
    if (chart == 0) return {a * s[0] * s[0] + b * s[0] + c};
    return {-(a + b * s[0] + c * s[0] * s[0])};
  };

  for (size_t seg = 0; seg + 1 < path.waypoints.size(); ++seg) {
    auto on_accept = [&](C t, detail::State<1>& s, double) -> detail::StepAction {
      traj.samples.push_back({t, chart, s[0], C(0.0)});
      if (std::abs(s[0]) > cfg.switch_threshold) {
        traj.events.push_back({t, chart, 1 - chart});
        chart = 1 - chart;
        s[0] = C(1.0) / s[0];
        traj.samples.push_back({t, chart, s[0], C(0.0)});
        return detail::StepAction::Restart;
      }
      return detail::StepAction::Continue;
    };
    st = detail::rk_segment<1>(rhs, path.waypoints[seg], path.waypoints[seg + 1], y, ctl, st,
                               on_accept);
    if (st.step_limit || st.stopped) break;
  }
  traj.error_estimate = st.error_estimate;
  traj.status = st.step_limit ? FlowStatus::StepLimit : FlowStatus::Completed;
  return traj;
}

}  // namespace nodal::flow
