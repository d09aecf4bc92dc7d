#include "nodal/riccati.hpp"

#include <algorithm>
#include <cmath>

#include "nodal/detail/rk.hpp"
#include "nodal/dynkin.hpp"
#include "nodal/tables.hpp"

namespace nodal::riccati {

C ParamAffine::eval(const Params& p) const {
  C acc(constant);
  for (const auto& [name, coeff] : terms) acc += coeff * p.at(name);
  return acc;
}

C ChartEquation::value(const Params& p, C t, C x, C y) const {
  switch (kind) {
    case EqKind::CoordX: return x - g(p, t);
    case EqKind::CoordY: return y - g(p, t);
    default: return x * y - g(p, t);
  }
}

namespace {

using atlas::Capability;

ParamAffine pa(double constant, std::vector<std::pair<std::string, double>> terms = {}) {
  return ParamAffine{constant, std::move(terms)};
}

const ParamAffine kZero{};
const ParamAffine kOne{1.0, {}};

ChartEquation coord_x(ParamAffine g0, ParamAffine g1, std::string text) {
  return ChartEquation{EqKind::CoordX, std::move(g0), std::move(g1), std::move(text)};
}
ChartEquation coord_y(ParamAffine g0, ParamAffine g1, std::string text) {
  return ChartEquation{EqKind::CoordY, std::move(g0), std::move(g1), std::move(text)};
}

std::vector<LocusSpec> build_catalog(PainleveType pt) {
  using PT = PainleveType;
  std::vector<LocusSpec> out;
  switch (pt) {
    case PT::E7t: {
      LocusSpec c;
      c.painleve_type = pt;
      c.name = "C";
      c.constraint = pa(0.5, {{"alpha", 1.0}});
      c.constraint_text = "alpha + 1/2 = 0";
      c.chart_equations[0] = coord_y(kZero, kZero, "y0 = 0");
      c.chart_equations[1] = coord_y(kZero, kZero, "y1 = 0");
      c.reduced_chart = 0;
      c.reduced_coord = 'x';
      c.riccati_a = "-1";
      c.riccati_b = "0";
      c.riccati_c = "-t/2";
      out.push_back(std::move(c));
      break;
    }
    case PT::E6t: {
      LocusSpec c0;
      c0.painleve_type = pt;
      c0.name = "C0";
      c0.constraint = pa(0.0, {{"k0", 1.0}});
      c0.constraint_text = "k0 = 0";
      c0.chart_equations[0] = coord_x(kZero, kZero, "x0 = 0");
      c0.chart_equations[1] = coord_x(kZero, kZero, "x1 = 0");
      c0.reduced_chart = 0;
      c0.reduced_coord = 'y';
      c0.riccati_a = "-2";
      c0.riccati_b = "2*t";
      c0.riccati_c = "-kinf";
      out.push_back(std::move(c0));

      LocusSpec ci;
      ci.painleve_type = pt;
      ci.name = "Cinf";
      ci.constraint = pa(0.0, {{"kinf", 1.0}});
      ci.constraint_text = "kinf = 0";
      ci.chart_equations[0] = coord_y(kZero, kZero, "y0 = 0");
      ci.chart_equations[2] = coord_y(kZero, kZero, "y2 = 0");
      ci.reduced_chart = 0;
      ci.reduced_coord = 'x';
      ci.riccati_a = "-1";
      ci.riccati_b = "-2*t";
      ci.riccati_c = "-2*k0";
      out.push_back(std::move(ci));

      LocusSpec cc;
      cc.painleve_type = pt;
      cc.name = "Ck0=kinf";
      cc.constraint = pa(0.0, {{"k0", 1.0}, {"kinf", -1.0}});
      cc.constraint_text = "k0 - kinf = 0";
      cc.nondegenerate_param = "k0";
      cc.chart_equations[0] =
          ChartEquation{EqKind::ProductXY, pa(0.0, {{"k0", 1.0}}), kZero, "x0*y0 = k0"};
      cc.reduced_chart = 0;
      cc.reduced_coord = 'x';
      cc.riccati_a = "-1";
      cc.riccati_b = "-2*t";
      cc.riccati_c = "2*k0";
      out.push_back(std::move(cc));
      break;
    }
    case PT::D4t: {
      const std::string den = "(t*(t-1))";
      LocusSpec c0;
      c0.painleve_type = pt;
      c0.name = "C0";
      c0.constraint = pa(0.0, {{"k0", 1.0}});
      c0.constraint_text = "k0 = 0";
      c0.chart_equations[0] = coord_x(kZero, kZero, "x0 = 0");
      c0.chart_equations[1] = coord_x(kZero, kZero, "x1 = 0");
      c0.reduced_chart = 0;
      c0.reduced_coord = 'y';
      c0.riccati_a = "-t/" + den;
      c0.riccati_b = "-(k1*t + kt - 1)/" + den;
      c0.riccati_c = "-((k1 + kt - 1)^2 - kinf^2)/(4*t*(t-1))";
      out.push_back(std::move(c0));

      LocusSpec c1;
      c1.painleve_type = pt;
      c1.name = "C1";
      c1.constraint = pa(0.0, {{"k1", 1.0}});
      c1.constraint_text = "k1 = 0";
      c1.chart_equations[0] = coord_x(kOne, kZero, "x0 = 1");
      c1.chart_equations[2] = coord_x(kZero, kZero, "x2 = 0");
      c1.reduced_chart = 0;
      c1.reduced_coord = 'y';
      c1.riccati_a = "-(1-t)/" + den;
      c1.riccati_b = "((k0 + kt - 1) - k0*t)/" + den;
      c1.riccati_c = "-((k0 + kt - 1)^2 - kinf^2)/(4*t*(t-1))";
      out.push_back(std::move(c1));

      LocusSpec ct;
      ct.painleve_type = pt;
      ct.name = "Ct";
      ct.constraint = pa(0.0, {{"kt", 1.0}});
      ct.constraint_text = "kt = 0";
      ct.chart_equations[0] = coord_x(kZero, kOne, "x0 = t");
      ct.chart_equations[3] = coord_x(kZero, kZero, "x3 = 0");
      ct.reduced_chart = 0;
      ct.reduced_coord = 'y';
      ct.riccati_a = "-1";
      ct.riccati_b = "((k0 + k1 - 2)*t - k0 + 1)/" + den;
      ct.riccati_c = "-((k0 + k1 - 1)^2 - kinf^2)/(4*t*(t-1))";
      out.push_back(std::move(ct));

      LocusSpec ce;
      ce.painleve_type = pt;
      ce.name = "Ceps";
      ce.constraint = pa(-1.0, {{"k0", 1.0}, {"k1", 1.0}, {"kt", 1.0}, {"kinf", 1.0}});
      ce.constraint_text = "k0 + k1 + kt + kinf - 1 = 0";
      ce.chart_equations[0] = coord_y(kZero, kZero, "y0 = 0");
      ce.chart_equations[4] = coord_y(kZero, kZero, "y4 = 0");
      ce.reduced_chart = 0;
      ce.reduced_coord = 'x';
      ce.riccati_a = "-(k0 + k1 + kt - 1)/" + den;
      ce.riccati_b = "(k0*(1 + t) + k1*t + kt - 1)/" + den;
      ce.riccati_c = "-k0*t/" + den;
      out.push_back(std::move(ce));

      LocusSpec ci;
      ci.painleve_type = pt;
      ci.name = "Cinf";
      ci.constraint = pa(0.0, {{"kinf", 1.0}});
      ci.constraint_text = "kinf = 0";
      ci.chart_equations[4] = coord_x(kZero, kZero, "x4 = 0");
      ci.chart_equations[5] = coord_x(kZero, kZero, "x5 = 0");
      ci.reduced_chart = 4;
      ci.reduced_coord = 'y';
      ci.riccati_a = "-1/" + den;
      ci.riccati_b = "-((kt - 1)*t + k1)/" + den;
      ci.riccati_c = "-((k1 + kt - 1)^2 - k0^2)*t/(4*t*(t-1))";
      out.push_back(std::move(ci));
      break;
    }
    case PT::D5t: {
      LocusSpec c0;
      c0.painleve_type = pt;
      c0.name = "C0";
      c0.constraint = pa(0.0, {{"k0", 1.0}});
      c0.constraint_text = "k0 = 0";
      c0.chart_equations[0] = coord_x(kZero, kZero, "x0 = 0");
      c0.chart_equations[1] = coord_x(kZero, kZero, "x1 = 0");
      c0.reduced_chart = 0;
      c0.reduced_coord = 'y';
      c0.riccati_a = "-1/t";
      c0.riccati_b = "-(kt - t)/t";
      c0.riccati_c = "-(kt^2 - kinf^2)/(4*t)";
      out.push_back(std::move(c0));

      LocusSpec ce;
      ce.painleve_type = pt;
      ce.name = "Ceps";
      ce.constraint = pa(0.0, {{"k0", 1.0}, {"kt", 1.0}, {"kinf", 1.0}});
      ce.constraint_text = "k0 + kt + kinf = 0";
      ce.chart_equations[0] = coord_y(kZero, kZero, "y0 = 0");
      ce.chart_equations[3] = coord_y(kZero, kZero, "y3 = 0");
      ce.reduced_chart = 0;
      ce.reduced_coord = 'x';
      ce.riccati_a = "-(k0 + kt)/t";
      ce.riccati_b = "(2*k0 + kt - t)/t";
      ce.riccati_c = "-k0/t";
      out.push_back(std::move(ce));

      LocusSpec ci;
      ci.painleve_type = pt;
      ci.name = "Cinf";
      ci.constraint = pa(0.0, {{"kinf", 1.0}});
      ci.constraint_text = "kinf = 0";
      ci.chart_equations[3] = coord_x(kZero, kZero, "x3 = 0");
      ci.chart_equations[4] = coord_x(kZero, kZero, "x4 = 0");
      ci.reduced_chart = 3;
      ci.reduced_coord = 'y';
      ci.riccati_a = "-1/t";
      ci.riccati_b = "-(kt + t)/t";
      ci.riccati_c = "-(kt^2 - k0^2)/(4*t)";
      out.push_back(std::move(ci));
      break;
    }
    case PT::D6t: {
      LocusSpec c1;
      c1.painleve_type = pt;
      c1.name = "C1";
      c1.constraint = pa(0.0, {{"k0", 1.0}, {"kinf", 1.0}});
      c1.constraint_text = "k0 + kinf = 0";
      c1.chart_equations[0] = coord_y(kZero, kZero, "y0 = 0");
      c1.chart_equations[2] = coord_y(kZero, kZero, "y2 = 0");
      c1.reduced_chart = 0;
      c1.reduced_coord = 'x';
      c1.riccati_a = "-2";
      c1.riccati_b = "-(2*k0 + 1)/t";
      c1.riccati_c = "2";
      out.push_back(std::move(c1));

      LocusSpec c2;
      c2.painleve_type = pt;
      c2.name = "C2";
      c2.constraint = pa(0.0, {{"k0", 1.0}, {"kinf", -1.0}});
      c2.constraint_text = "k0 - kinf = 0";
      c2.chart_equations[0] = coord_y(kZero, kOne, "y0 = t");
      c2.chart_equations[3] = coord_y(kZero, kZero, "y3 = 0");
      c2.reduced_chart = 0;
      c2.reduced_coord = 'x';
      c2.riccati_a = "2";
      c2.riccati_b = "-(2*k0 + 1)/t";
      c2.riccati_c = "2";
      out.push_back(std::move(c2));

      LocusSpec c3;
      c3.painleve_type = pt;
      c3.name = "C3";
      c3.constraint = pa(2.0, {{"k0", 1.0}, {"kinf", -1.0}});
      c3.constraint_text = "k0 - kinf + 2 = 0";
      c3.chart_equations[1] = coord_y(kZero, kZero, "y1 = 0");
      c3.chart_equations[2] = coord_y(kZero, kOne, "y2 = t");
      c3.reduced_chart = 1;
      c3.reduced_coord = 'x';
      c3.riccati_a = "-2";
      c3.riccati_b = "(2*k0 + 3)/t";
      c3.riccati_c = "-2";
      out.push_back(std::move(c3));

      LocusSpec c4;
      c4.painleve_type = pt;
      c4.name = "C4";
      c4.constraint = pa(2.0, {{"k0", 1.0}, {"kinf", 1.0}});
      c4.constraint_text = "k0 + kinf + 2 = 0";
      c4.chart_equations[1] = coord_y(kZero, kOne, "y1 = t");
      c4.chart_equations[3] = coord_y(kZero, kOne, "y3 = t");
      c4.reduced_chart = 1;
      c4.reduced_coord = 'x';
      c4.riccati_a = "2";
      c4.riccati_b = "(2*k0 + 3)/t";
      c4.riccati_c = "-2";
      out.push_back(std::move(c4));
      break;
    }
    default: break;  // E8~, D7~, D8~: no nodal curves
  }
  return out;
}

}  // namespace

const std::vector<LocusSpec>& catalog(PainleveType pt) {
  static const std::map<PainleveType, std::vector<LocusSpec>> all = [] {
    std::map<PainleveType, std::vector<LocusSpec>> m;
    for (PainleveType t : {PainleveType::E7t, PainleveType::E6t, PainleveType::D4t,
                           PainleveType::D5t, PainleveType::D6t, PainleveType::E8t,
                           PainleveType::D7t, PainleveType::D8t})
      m[t] = build_catalog(t);
    return m;
  }();
  return all.at(pt);
}

const LocusSpec& find_locus(PainleveType pt, std::string_view name) {
  for (const auto& l : catalog(pt))
    if (l.name == name) return l;
  throw Error("no locus named '" + std::string(name) + "' for type " + atlas::to_string(pt));
}

namespace {

Poly tpoly(C c0, C c1 = C(0.0), C c2 = C(0.0)) {
  Poly p;
  p.c = {c0, c1, c2};
  p.trim();
  return p;
}

RiccatiODE make_ode(Poly na, Poly nb, Poly nc, Poly den, std::vector<C> poles) {
  RiccatiODE ode;
  ode.a = RatFun(std::move(na), den);
  ode.b = RatFun(std::move(nb), den);
  ode.c = RatFun(std::move(nc), std::move(den));
  ode.pole_set = std::move(poles);
  return ode;
}

}  // namespace

RiccatiODE reduce(const LocusSpec& l, const Params& p) {
  using PT = PainleveType;
  const Poly one = Poly::constant(C(1.0));
  const PT pt = l.painleve_type;
  if (p.type != pt)
    throw Error("parameters bound for " + atlas::to_string(p.type) + " but locus belongs to " +
                atlas::to_string(pt));
  if (pt == PT::E7t) {
    return make_ode(tpoly(-1.0), tpoly(0.0), tpoly(0.0, -0.5), one, {});
  }
  if (pt == PT::E6t) {
    const C k0 = p.at("k0"), kinf = p.at("kinf");
    if (l.name == "C0") return make_ode(tpoly(-2.0), tpoly(0.0, 2.0), tpoly(-kinf), one, {});
    if (l.name == "Cinf")
      return make_ode(tpoly(-1.0), tpoly(0.0, -2.0), tpoly(-2.0 * k0), one, {});
    return make_ode(tpoly(-1.0), tpoly(0.0, -2.0), tpoly(2.0 * k0), one, {});
  }
  if (pt == PT::D4t) {
    const C k0 = p.at("k0"), k1 = p.at("k1"), kt = p.at("kt"), kinf = p.at("kinf");
    const Poly den = tpoly(0.0, -1.0, 1.0);  // t(t-1)
    const std::vector<C> poles{C(0.0), C(1.0)};
    if (l.name == "C0") {
      const C q = (k1 + kt - 1.0) * (k1 + kt - 1.0) - kinf * kinf;
      return make_ode(tpoly(0.0, -1.0), tpoly(1.0 - kt, -k1), tpoly(-0.25 * q), den, poles);
    }
    if (l.name == "C1") {
      const C q = (k0 + kt - 1.0) * (k0 + kt - 1.0) - kinf * kinf;
      return make_ode(tpoly(-1.0, 1.0), tpoly(k0 + kt - 1.0, -k0), tpoly(-0.25 * q), den, poles);
    }
    if (l.name == "Ct") {
      const C q = (k0 + k1 - 1.0) * (k0 + k1 - 1.0) - kinf * kinf;
      return make_ode(tpoly(0.0, 1.0, -1.0), tpoly(1.0 - k0, k0 + k1 - 2.0), tpoly(-0.25 * q),
                      den, poles);
    }
    if (l.name == "Ceps") {
      return make_ode(tpoly(-(k0 + k1 + kt - 1.0)), tpoly(k0 + kt - 1.0, k0 + k1),
                      tpoly(0.0, -k0), den, poles);
    }
    // Cinf (chart-4 coordinate)
    const C q = (k1 + kt - 1.0) * (k1 + kt - 1.0) - k0 * k0;
    return make_ode(tpoly(-1.0), tpoly(-k1, 1.0 - kt), tpoly(0.0, -0.25 * q), den, poles);
  }
  if (pt == PT::D5t) {
    const C k0 = p.at("k0"), kt = p.at("kt"), kinf = p.at("kinf");
    const Poly den = tpoly(0.0, 1.0);  // t
    const std::vector<C> poles{C(0.0)};
    if (l.name == "C0")
      return make_ode(tpoly(-1.0), tpoly(-kt, 1.0), tpoly(-0.25 * (kt * kt - kinf * kinf)), den,
                      poles);
    if (l.name == "Ceps")
      return make_ode(tpoly(-(k0 + kt)), tpoly(2.0 * k0 + kt, -1.0), tpoly(-k0), den, poles);
    return make_ode(tpoly(-1.0), tpoly(-kt, -1.0), tpoly(-0.25 * (kt * kt - k0 * k0)), den,
                    poles);
  }
  if (pt == PT::D6t) {
    const C k0 = p.at("k0");
    const Poly den = tpoly(0.0, 1.0);
    const std::vector<C> poles{C(0.0)};
    if (l.name == "C1")
      return make_ode(tpoly(0.0, -2.0), tpoly(-(2.0 * k0 + 1.0)), tpoly(0.0, 2.0), den, poles);
    if (l.name == "C2")
      return make_ode(tpoly(0.0, 2.0), tpoly(-(2.0 * k0 + 1.0)), tpoly(0.0, 2.0), den, poles);
    if (l.name == "C3")
      return make_ode(tpoly(0.0, -2.0), tpoly(2.0 * k0 + 3.0), tpoly(0.0, -2.0), den, poles);
    return make_ode(tpoly(0.0, 2.0), tpoly(2.0 * k0 + 3.0), tpoly(0.0, -2.0), den, poles);
  }
  throw Error("locus does not reduce: type " + atlas::to_string(pt));
}

std::optional<RiccatiODE> reduce_secondary(const LocusSpec& l, const Params& p) {
  if (l.painleve_type != PainleveType::E6t || l.name != "Ck0=kinf") return std::nullopt;
  const C k0 = p.at("k0");
  RiccatiODE ode;
  ode.a = RatFun(Poly::constant(C(-2.0)));
  ode.b = RatFun(Poly{{C(0.0), C(2.0)}});
  ode.c = RatFun(Poly::constant(k0));
  return ode;
}

double invariance_residual(const LocusSpec& l, const Params& p, C t, ChartPoint q) {
  if (atlas::capability(l.painleve_type) != Capability::FullAtlas)
    throw NoAtlas("tangency cannot be evaluated without a chart atlas (" +
                  atlas::to_string(l.painleve_type) + ")");
  if (!l.constraint.vanishes(p))
    throw Error("parameters do not satisfy " + l.constraint_text);
  auto it = l.chart_equations.find(q.chart);
  if (it == l.chart_equations.end())
    throw Error("locus " + l.name + " has no defining equation in chart " +
                std::to_string(q.chart));
  const ChartEquation& eq = it->second;
  auto [vx, vy] = atlas::vf_any_chart(l.painleve_type, q.chart, p, t, q.x, q.y);
  switch (eq.kind) {
    case EqKind::CoordX: return std::abs(vx - eq.dg_dt(p));
    case EqKind::CoordY: return std::abs(vy - eq.dg_dt(p));
    default: return std::abs(vx * q.y + q.x * vy - eq.dg_dt(p));
  }
}

Linear2ODE linearize(const RiccatiODE& ode) {
  if (!ode.quadratic(1e-14)) throw DegenerateQuadratic("leading coefficient a(t) vanishes");
  Linear2ODE lin;
  RatFun sum = ode.a.deriv() / ode.a + ode.b;
  lin.p = RatFun(C(-1.0) * sum.num, sum.den);
  lin.q = ode.a * ode.c;
  lin.pole_set = ode.pole_set;
  return lin;
}

flow::Trajectory solve_via_linear(const RiccatiODE& ode, C x_init, const flow::PathSpec& path,
                                  const flow::IntegratorConfig& cfg) {
  cfg.validate();
  Linear2ODE lin = linearize(ode);
  flow::PathSpec::make(path.waypoints, lin.pole_set, cfg.min_puncture_distance);

  flow::Trajectory traj;
  const C t0 = path.waypoints[0];
  detail::State<2> y{C(1.0), -ode.a.eval(t0) * x_init};

  // A sample sits on a pole of x when u is within one step of its zero
  // (|u| < h |u'|) or the mapped value already exceeds the switch threshold.
  auto emit = [&](C t, const detail::State<2>& s, double h) {
    const C u = s[0], up = s[1];
    const C x = -up / (ode.a.eval(t) * u);
    if (std::abs(u) < 0.75 * h * std::abs(up) || std::abs(x) > cfg.switch_threshold) {
      traj.pole_flags.push_back(t);  // zero of u: pole of x
      return;
    }
    traj.samples.push_back({t, 0, x, C(0.0)});
  };

  emit(t0, y, 0.0);
  detail::RkControl ctl{cfg.rel_tol, cfg.abs_tol, cfg.max_step, cfg.max_steps};
  detail::RkStatus st;
  auto rhs = [&](C t, const detail::State<2>& s) -> detail::State<2> {
    return {s[1], -lin.p.eval(t) * s[1] - lin.q.eval(t) * s[0]};
  };
  for (size_t seg = 0; seg + 1 < path.waypoints.size(); ++seg) {
    auto on_accept = [&](C t, detail::State<2>& s, double h) -> detail::StepAction {
      emit(t, s, h);
      return detail::StepAction::Continue;
    };
    st = detail::rk_segment<2>(rhs, path.waypoints[seg], path.waypoints[seg + 1], y, ctl, st,
                               on_accept);
    if (st.step_limit) break;
  }
  traj.error_estimate = st.error_estimate;
  traj.status = st.step_limit ? flow::FlowStatus::StepLimit : flow::FlowStatus::Completed;
  return traj;
}

namespace {

bool poly_close(const Poly& a, const Poly& b, double tol = 1e-12) {
  size_t n = std::max(a.c.size(), b.c.size());
  for (size_t i = 0; i < n; ++i) {
    C av = i < a.c.size() ? a.c[i] : C(0.0);
    C bv = i < b.c.size() ? b.c[i] : C(0.0);
    if (std::abs(av - bv) > tol) return false;
  }
  return true;
}

Poly bound_g(const ChartEquation& eq, const Params& p) {
  Poly g;
  g.c = {eq.g0.eval(p), eq.g1.eval(p)};
  g.trim();
  return g;
}

std::vector<const LocusSpec*> active_loci(PainleveType pt, const Params& p) {
  std::vector<const LocusSpec*> act;
  for (const auto& l : catalog(pt)) {
    if (!l.constraint.vanishes(p)) continue;
    if (l.nondegenerate_param && std::abs(p.at(*l.nondegenerate_param)) <= 1e-9)
      continue;  // the family splits here; its pieces are catalogued separately
    act.push_back(&l);
  }
  return act;
}

// Do two defining equations share a solution in chart `c` for generic t?
bool equations_meet(const ChartEquation& e1, const ChartEquation& e2, const Params& p) {
  auto both = [&](EqKind a, EqKind b) {
    return (e1.kind == a && e2.kind == b) || (e1.kind == b && e2.kind == a);
  };
  if (both(EqKind::CoordX, EqKind::CoordY)) return true;
  if ((e1.kind == EqKind::CoordX && e2.kind == EqKind::CoordX) ||
      (e1.kind == EqKind::CoordY && e2.kind == EqKind::CoordY))
    return poly_close(bound_g(e1, p), bound_g(e2, p));
  if (both(EqKind::ProductXY, EqKind::CoordX) || both(EqKind::ProductXY, EqKind::CoordY)) {
    const ChartEquation& coord = e1.kind == EqKind::ProductXY ? e2 : e1;
    return !bound_g(coord, p).is_zero(1e-12);
  }
  // two product equations
  return poly_close(bound_g(e1, p), bound_g(e2, p));
}

bool loci_meet(const LocusSpec& a, const LocusSpec& b, const Params& p) {
  for (const auto& [c, e1] : a.chart_equations) {
    auto it = b.chart_equations.find(c);
    if (it == b.chart_equations.end()) continue;
    if (equations_meet(e1, it->second, p)) return true;
  }
  return false;  // loci sharing no chart are reported disjoint
}

}  // namespace

std::vector<RationalSolution> rational_points(PainleveType pt, const Params& p) {
  std::vector<RationalSolution> out;
  auto act = active_loci(pt, p);
  for (size_t i = 0; i < act.size(); ++i)
    for (size_t j = i + 1; j < act.size(); ++j) {
      for (const auto& [c, e1] : act[i]->chart_equations) {
        auto it = act[j]->chart_equations.find(c);
        if (it == act[j]->chart_equations.end()) continue;
        const ChartEquation& e2 = it->second;
        const ChartEquation *ex = nullptr, *ey = nullptr;
        if (e1.kind == EqKind::CoordX && e2.kind == EqKind::CoordY) ex = &e1, ey = &e2;
        if (e1.kind == EqKind::CoordY && e2.kind == EqKind::CoordX) ex = &e2, ey = &e1;
        if (!ex) continue;
        RationalSolution sol;
        sol.chart = c;
        sol.x_of_t = bound_g(*ex, p);
        sol.y_of_t = bound_g(*ey, p);
        sol.note = "intersection of " + act[i]->name + " and " + act[j]->name;
        bool dup = false;
        for (const auto& s : out)
          if (s.chart == sol.chart && poly_close(s.x_of_t, sol.x_of_t) &&
              poly_close(s.y_of_t, sol.y_of_t))
            dup = true;
        if (!dup) out.push_back(std::move(sol));
      }
    }
  if (pt == PainleveType::E7t && std::abs(p.at("alpha")) <= 1e-9) {
    RationalSolution sol;
    sol.chart = 0;
    sol.x_of_t = Poly::constant(C(0.0));
    sol.y_of_t = Poly{{C(0.0), C(0.5)}};
    sol.note = "unique rational solution at alpha = 0";
    out.push_back(std::move(sol));
  }
  return out;
}

ConfigReport config_at_params(PainleveType pt, const Params& p) {
  ConfigReport rep;
  auto act = active_loci(pt, p);
  for (const auto* l : act) rep.active.push_back(l->name);
  rootlat::DynkinDiagram d(static_cast<int>(act.size()));
  for (size_t i = 0; i < act.size(); ++i)
    for (size_t j = i + 1; j < act.size(); ++j)
      if (loci_meet(*act[i], *act[j], p)) {
        d.add_edge(static_cast<int>(i), static_cast<int>(j));
        rep.intersections.emplace_back(act[i]->name, act[j]->name);
      }
  rep.configuration = d.classify_finite();
  return rep;
}

ConfluenceReport confluence_check(PainleveType pt) {
  if (pt != PainleveType::E6t)
    throw NotApplicable("confluence relation is catalogued only for E6");
  ConfluenceReport rep{};
  const LocusSpec& conf = find_locus(pt, "Ck0=kinf");
  const LocusSpec& c0 = find_locus(pt, "C0");
  const LocusSpec& cinf = find_locus(pt, "Cinf");

  Params zero = Params::make(pt, {{"k0", C(0.0)}, {"kinf", C(0.0)}});
  // at k0 = 0 the product equation becomes x0*y0 = 0
  const ChartEquation& pe = conf.chart_equations.at(0);
  rep.splits_at_k0_zero = std::abs(pe.g(zero, C(0.3))) < 1e-15;
  const ChartEquation& e0 = c0.chart_equations.at(0);
  const ChartEquation& ei = cinf.chart_equations.at(0);
  if (rep.splits_at_k0_zero && e0.kind == EqKind::CoordX && bound_g(e0, zero).is_zero() &&
      ei.kind == EqKind::CoordY && bound_g(ei, zero).is_zero())
    rep.factors = {"x0", "y0"};

  auto close = [](const RiccatiODE& u, const RiccatiODE& v) {
    for (C t : {C(0.3), C(0.7), C(-0.4, 0.6), C(1.7, -0.2)}) {
      if (std::abs(u.a.eval(t) - v.a.eval(t)) > 1e-12) return false;
      if (std::abs(u.b.eval(t) - v.b.eval(t)) > 1e-12) return false;
      if (std::abs(u.c.eval(t) - v.c.eval(t)) > 1e-12) return false;
    }
    return true;
  };
  rep.x_reduction_matches_cinf = close(reduce(conf, zero), reduce(cinf, zero));
  rep.y_reduction_matches_c0 = close(*reduce_secondary(conf, zero), reduce(c0, zero));

  Params one = Params::make(pt, {{"k0", C(1.0)}, {"kinf", C(1.0)}});
  rep.irreducible_at_k0_one = std::abs(pe.g(one, C(0.3))) > 1e-12;
  return rep;
}

NonexistenceReport nonexistence(PainleveType pt) {
  using PT = PainleveType;
  if (pt != PT::E8t && pt != PT::D7t && pt != PT::D8t)
    throw NotApplicable("catalog for " + atlas::to_string(pt) + " is nonempty");
  NonexistenceReport rep;
  rep.type = pt;
  rep.catalog_empty = catalog(pt).empty();
  rep.complement_types_empty = rootlat::complement_types(atlas::affine_of(pt)).empty();
  rep.reason =
      "no nodal curve can exist: every candidate configuration L would make "
      "classical_part(" + atlas::to_string(pt) + "~) + L a root subsystem of E8, and no such "
      "subsystem exists; the obstruction is topological (intersection-lattice) data";
  return rep;
}

}  // namespace nodal::riccati
