#include <doctest.h>

#include "helpers.hpp"
#include "nodal/riccati.hpp"
#include "nodal/tables.hpp"

using namespace nodal;
using namespace nodal::riccati;
using testutil::Rng;

namespace {

Params bind(PainleveType pt, std::vector<std::pair<std::string, C>> kv) {
  return Params::make(pt, kv);
}

// parameters satisfying the locus constraint, other values seeded
Params on_constraint(const LocusSpec& l, Rng& rng) {
  const auto& names = atlas::param_names(l.painleve_type);
  std::vector<std::pair<std::string, C>> kv;
  for (const auto& n : names) kv.emplace_back(n, rng.annulus(0.25, 0.9));
  // solve the affine constraint for the last named parameter appearing in it
  const auto& last = l.constraint.terms.back();
  C acc(l.constraint.constant);
  for (const auto& [name, coeff] : l.constraint.terms) {
    if (name == last.first) continue;
    for (auto& [k, v] : kv)
      if (k == name) acc += coeff * v;
  }
  for (auto& [k, v] : kv)
    if (k == last.first) v = -acc / last.second;
  return Params::make(l.painleve_type, kv);
}

// a point on the locus in a chart that carries one of its equations
atlas::ChartPoint sample_on_locus(const LocusSpec& l, const Params& p, C t, Rng& rng,
                                  int which_chart = -1) {
  auto it = l.chart_equations.begin();
  if (which_chart >= 0) it = l.chart_equations.find(which_chart);
  const auto& [chart, eq] = *it;
  C free = rng.annulus(0.3, 1.3);
  switch (eq.kind) {
    case EqKind::CoordX: return {chart, eq.g(p, t), free};
    case EqKind::CoordY: return {chart, free, eq.g(p, t)};
    default: return {chart, free, eq.g(p, t) / free};
  }
}

C riccati_rhs(const RiccatiODE& ode, C t, C x) {
  return ode.a.eval(t) * x * x + ode.b.eval(t) * x + ode.c.eval(t);
}

}  // namespace

TEST_SUITE("riccati catalog") {
  TEST_CASE("catalog sizes per type") {
    CHECK(catalog(PainleveType::E7t).size() == 1);
    CHECK(catalog(PainleveType::E6t).size() == 3);
    CHECK(catalog(PainleveType::D4t).size() == 5);
    CHECK(catalog(PainleveType::D5t).size() == 3);
    CHECK(catalog(PainleveType::D6t).size() == 4);
    CHECK(catalog(PainleveType::E8t).empty());
    CHECK(catalog(PainleveType::D7t).empty());
    CHECK(catalog(PainleveType::D8t).empty());
  }

  TEST_CASE("the E7~ locus") {
    const auto& l = catalog(PainleveType::E7t)[0];
    CHECK(l.name == "C");
    CHECK(l.constraint_text == "alpha + 1/2 = 0");
    REQUIRE(l.chart_equations.count(0));
    REQUIRE(l.chart_equations.count(1));
    CHECK(l.chart_equations.at(0).kind == EqKind::CoordY);
    CHECK(l.chart_equations.at(1).kind == EqKind::CoordY);
  }

  TEST_CASE("the five D4~ hyperplanes") {
    std::vector<std::string> names;
    for (const auto& l : catalog(PainleveType::D4t)) names.push_back(l.name);
    CHECK(names == std::vector<std::string>{"C0", "C1", "Ct", "Ceps", "Cinf"});
    CHECK(find_locus(PainleveType::D4t, "Ceps").constraint_text ==
          "k0 + k1 + kt + kinf - 1 = 0");
  }

  TEST_CASE("pole sets stay inside the time-domain punctures") {
    for (PainleveType pt : {PainleveType::E7t, PainleveType::E6t, PainleveType::D4t,
                            PainleveType::D5t, PainleveType::D6t}) {
      Rng rng(7);
      for (const auto& l : catalog(pt)) {
        Params p = on_constraint(l, rng);
        RiccatiODE ode = reduce(l, p);
        const auto& punct = atlas::punctures(pt);
        for (const C& pole : ode.pole_set)
          CHECK(std::find(punct.begin(), punct.end(), pole) != punct.end());
      }
    }
  }
}

TEST_SUITE("riccati reduction") {
  TEST_CASE("frozen coefficients: E7~") {
    Rng rng(11);
    const auto& l = catalog(PainleveType::E7t)[0];
    RiccatiODE ode = reduce(l, bind(PainleveType::E7t, {{"alpha", C(-0.5)}}));
    CHECK(std::abs(ode.a.eval(C(0.7)) - C(-1.0)) < 1e-15);
    CHECK(std::abs(ode.b.eval(C(0.7))) < 1e-15);
    CHECK(std::abs(ode.c.eval(C(0.7)) - C(-0.35)) < 1e-15);
    (void)rng;
  }

  TEST_CASE("frozen coefficients: E6~ C0") {
    RiccatiODE ode = reduce(find_locus(PainleveType::E6t, "C0"),
                            bind(PainleveType::E6t, {{"k0", C(0.0)}, {"kinf", C(1.5)}}));
    C t(0.3, 0.4);
    CHECK(std::abs(ode.a.eval(t) - C(-2.0)) < 1e-15);
    CHECK(std::abs(ode.b.eval(t) - 2.0 * t) < 1e-15);
    CHECK(std::abs(ode.c.eval(t) - C(-1.5)) < 1e-15);
  }

  TEST_CASE("frozen coefficients: D5~ Cinf") {
    C k0(0.3), kt(0.7);
    RiccatiODE ode = reduce(find_locus(PainleveType::D5t, "Cinf"),
                            bind(PainleveType::D5t, {{"k0", k0}, {"kt", kt}, {"kinf", C(0.0)}}));
    C t(1.3, -0.2);
    CHECK(std::abs(ode.a.eval(t) - C(-1.0) / t) < 1e-15);
    CHECK(std::abs(ode.b.eval(t) + (kt + t) / t) < 1e-15);
    CHECK(std::abs(ode.c.eval(t) + 0.25 * (kt * kt - k0 * k0) / t) < 1e-15);
  }

  TEST_CASE("frozen coefficients: D6~ C1") {
    C k0(0.4);
    RiccatiODE ode = reduce(find_locus(PainleveType::D6t, "C1"),
                            bind(PainleveType::D6t, {{"k0", k0}, {"kinf", -k0}}));
    C t(0.9, 0.1);
    CHECK(std::abs(ode.a.eval(t) - C(-2.0)) < 1e-14);
    CHECK(std::abs(ode.b.eval(t) + (2.0 * k0 + 1.0) / t) < 1e-14);
    CHECK(std::abs(ode.c.eval(t) - C(2.0)) < 1e-14);
  }

  TEST_CASE("reduction agrees with the ambient field on the locus") {
    // on each FullAtlas locus the reduced scalar equation must equal the
    // matching component of the chart field at on-locus points
    Rng rng(23);
    for (PainleveType pt : {PainleveType::E7t, PainleveType::E6t, PainleveType::D4t}) {
      for (const auto& l : catalog(pt)) {
        if (l.name == "Ck0=kinf") continue;  // product locus: no single coordinate
        Params p = on_constraint(l, rng);
        RiccatiODE ode = reduce(l, p);
        for (int s = 0; s < 25; ++s) {
          C t = rng.time_clear();
          auto q = sample_on_locus(l, p, t, rng, l.reduced_chart);
          auto [vx, vy] = atlas::vf_any_chart(pt, l.reduced_chart, p, t, q.x, q.y);
          C reduced_coord = l.reduced_coord == 'x' ? q.x : q.y;
          C expect = riccati_rhs(ode, t, reduced_coord);
          C got = l.reduced_coord == 'x' ? vx : vy;
          CHECK(std::abs(got - expect) < 1e-10 * std::max(1.0, std::abs(expect)));
        }
      }
    }
  }
}

TEST_SUITE("linearization") {
  TEST_CASE("published transforms") {
    // (-2, 2t, -kinf) -> u'' - 2t u' + 2 kinf u = 0
    RiccatiODE ode = reduce(find_locus(PainleveType::E6t, "C0"),
                            bind(PainleveType::E6t, {{"k0", C(0.0)}, {"kinf", C(0.8)}}));
    Linear2ODE lin = linearize(ode);
    C t(0.6, 0.2);
    CHECK(std::abs(lin.p.eval(t) + 2.0 * t) < 1e-14);
    CHECK(std::abs(lin.q.eval(t) - C(1.6)) < 1e-14);

    // (-1, 0, -t/2) -> u'' + (t/2) u = 0 (Airy form)
    RiccatiODE airy = reduce(catalog(PainleveType::E7t)[0],
                             bind(PainleveType::E7t, {{"alpha", C(-0.5)}}));
    Linear2ODE alin = linearize(airy);
    CHECK(std::abs(alin.p.eval(t)) < 1e-14);
    CHECK(std::abs(alin.q.eval(t) - 0.5 * t) < 1e-14);
  }

  TEST_CASE("exact derivative a'/a with a nonconstant leading coefficient") {
    // D4~ C0 at k = (0, 0.3, 0.2, 0.4): a = -t/(t(t-1)), so a'/a = -1/(t-1)
    // and p(t) = (1.3 t - 0.8)/(t(t-1)), q(t) = 0.0225 t/(t(t-1))^2
    RiccatiODE ode = reduce(find_locus(PainleveType::D4t, "C0"),
                            bind(PainleveType::D4t, {{"k0", C(0.0)}, {"k1", C(0.3)},
                                                     {"kt", C(0.2)}, {"kinf", C(0.4)}}));
    Linear2ODE lin = linearize(ode);
    CHECK(std::abs(lin.p.eval(C(2.0)) - C(0.9)) < 1e-14);
    CHECK(std::abs(lin.q.eval(C(2.0)) - C(0.01125)) < 1e-14);
  }

  TEST_CASE("a degenerate quadratic is rejected") {
    RiccatiODE lin_only;
    lin_only.a = RatFun(Poly::constant(C(0.0)));
    lin_only.b = RatFun(Poly::constant(C(1.0)));
    lin_only.c = RatFun(Poly::constant(C(0.0)));
    CHECK_THROWS_AS(linearize(lin_only), DegenerateQuadratic);
  }

  TEST_CASE("u'' = 0 route solves x' = x^2 through the pole") {
    RiccatiODE ode;
    ode.a = RatFun(Poly::constant(C(1.0)));
    ode.b = RatFun(Poly::constant(C(0.0)));
    ode.c = RatFun(Poly::constant(C(0.0)));
    auto tr = solve_via_linear(ode, C(1.0), flow::PathSpec::make({C(0.0), C(1.5)}), {});
    REQUIRE(!tr.samples.empty());
    CHECK(std::abs(tr.back().x - C(-2.0)) < 1e-6);
    CHECK(!tr.pole_flags.empty());
    // the flag marks the sample within one step of the zero of u
    CHECK(std::abs(tr.pole_flags.front() - C(1.0)) < 0.3);
  }
}

TEST_SUITE("invariance") {
  TEST_CASE("exact tangency on the simplest loci") {
    Rng rng(31);
    // E7~: on y0 = 0 with alpha = -1/2 the y-velocity is identically zero
    Params p7 = bind(PainleveType::E7t, {{"alpha", C(-0.5)}});
    const auto& l7 = catalog(PainleveType::E7t)[0];
    for (int s = 0; s < 10; ++s) {
      C t = rng.annulus(0.2, 2.0);
      CHECK(invariance_residual(l7, p7, t, {0, rng.annulus(), C(0.0)}) < 1e-15);
    }
    // E6~: on x0 = 0 with k0 = 0 the x-velocity is -2*k0 = 0
    Params p6 = bind(PainleveType::E6t, {{"k0", C(0.0)}, {"kinf", C(0.77)}});
    const auto& l6 = find_locus(PainleveType::E6t, "C0");
    for (int s = 0; s < 10; ++s) {
      C t = rng.annulus(0.2, 2.0);
      CHECK(invariance_residual(l6, p6, t, {0, C(0.0), rng.annulus()}) < 1e-15);
    }
  }

  TEST_CASE("tangency across every FullAtlas locus and chart") {
    Rng rng(41);
    for (PainleveType pt : {PainleveType::E7t, PainleveType::E6t, PainleveType::D4t}) {
      for (const auto& l : catalog(pt)) {
        Params p = on_constraint(l, rng);
        for (const auto& [chart, eq] : l.chart_equations) {
          double worst = 0.0;
          for (int s = 0; s < 100; ++s) {
            C t = rng.time_clear();
            auto q = sample_on_locus(l, p, t, rng, chart);
            worst = std::max(worst, invariance_residual(l, p, t, q));
          }
          CHECK(worst < 1e-10);
        }
      }
    }
  }

  TEST_CASE("no tangency check without an atlas") {
    Rng rng(43);
    const auto& l = catalog(PainleveType::D5t)[0];
    Params p = on_constraint(l, rng);
    CHECK_THROWS_AS(invariance_residual(l, p, C(0.5), {0, C(0.0), C(1.0)}), NoAtlas);
  }

  TEST_CASE("off-constraint parameters are rejected") {
    const auto& l = find_locus(PainleveType::E6t, "C0");
    Params p = bind(PainleveType::E6t, {{"k0", C(0.5)}, {"kinf", C(0.0)}});
    CHECK_THROWS_AS(invariance_residual(l, p, C(0.5), {0, C(0.0), C(1.0)}), Error);
  }

  TEST_CASE("cross-chart locus consistency") {
    // push an on-locus point to the locus's other chart: the defining
    // equation there must vanish as well
    Rng rng(47);
    for (PainleveType pt : {PainleveType::E7t, PainleveType::E6t, PainleveType::D4t}) {
      for (const auto& l : catalog(pt)) {
        if (l.chart_equations.size() < 2) continue;
        Params p = on_constraint(l, rng);
        auto first = l.chart_equations.begin();
        auto second = std::next(first);
        for (int s = 0; s < 40; ++s) {
          C t = rng.time_clear();
          auto q = sample_on_locus(l, p, t, rng, first->first);
          try {
            auto img = atlas::transition(pt, first->first, second->first, p, t, {q.x, q.y});
            C residual = second->second.value(p, t, img.first, img.second);
            CHECK(std::abs(residual) < 1e-10);
          } catch (const OutsideOverlap&) {
            // sampled point sits outside the chart overlap; skip
          }
        }
      }
    }
  }
}

TEST_SUITE("cross-method integration") {
  TEST_CASE("direct vs linearized integration for every catalog entry") {
    Rng rng(53);
    for (PainleveType pt : {PainleveType::E7t, PainleveType::E6t, PainleveType::D4t,
                            PainleveType::D5t, PainleveType::D6t}) {
      for (const auto& l : catalog(pt)) {
        Params p = on_constraint(l, rng);
        RiccatiODE ode = reduce(l, p);
        if (!ode.quadratic(1e-12)) continue;  // degenerate at these parameters
        // short pole-free path away from the punctures
        flow::PathSpec path = flow::PathSpec::make({C(0.3, 0.4), C(0.9, 0.4)});
        C x0 = rng.annulus(0.05, 0.2);
        auto direct = flow::integrate_riccati(ode, path, x0, {});
        auto linear = solve_via_linear(ode, x0, path, {});
        REQUIRE(direct.status == flow::FlowStatus::Completed);
        REQUIRE(!linear.samples.empty());
        C xd = direct.back().chart == 0 ? direct.back().x : C(1.0) / direct.back().x;
        C xl = linear.back().x;
        CHECK(std::abs(direct.back().t - linear.back().t) < 1e-12);
        CHECK(std::abs(xd - xl) < 1e-6 * std::max(1.0, std::abs(xl)));
      }
    }
  }

  TEST_CASE("P_IV reduction from y0(0) = 1 over [0,1]") {
    Params p = bind(PainleveType::E6t, {{"k0", C(0.0)}, {"kinf", C(1.0)}});
    RiccatiODE ode = reduce(find_locus(PainleveType::E6t, "C0"), p);
    flow::PathSpec path = flow::PathSpec::make({C(0.0), C(1.0)});
    auto direct = flow::integrate_riccati(ode, path, C(1.0), {});
    auto linear = solve_via_linear(ode, C(1.0), path, {});
    REQUIRE(direct.status == flow::FlowStatus::Completed);
    C xd = direct.back().chart == 0 ? direct.back().x : C(1.0) / direct.back().x;
    CHECK(std::abs(xd - linear.back().x) < 1e-6);
  }

  TEST_CASE("agreement through a pole: E7~") {
    Params p = bind(PainleveType::E7t, {{"alpha", C(-0.5)}});
    RiccatiODE ode = reduce(catalog(PainleveType::E7t)[0], p);
    flow::PathSpec path = flow::PathSpec::make({C(0.0), C(4.0)});
    auto direct = flow::integrate_riccati(ode, path, C(1.0), {});
    auto linear = solve_via_linear(ode, C(1.0), path, {});
    REQUIRE(direct.status == flow::FlowStatus::Completed);
    CHECK(!direct.events.empty());       // the pole forces a chart switch
    CHECK(!linear.pole_flags.empty());   // and shows up as a zero of u
    C xd = direct.back().chart == 0 ? direct.back().x : C(1.0) / direct.back().x;
    CHECK(std::abs(xd - linear.back().x) < 1e-5 * std::max(1.0, std::abs(xd)));
  }

  TEST_CASE("agreement through a pole: E6~ with the exact Hermite-type solution") {
    Params p = bind(PainleveType::E6t, {{"k0", C(0.0)}, {"kinf", C(1.0)}});
    RiccatiODE ode = reduce(find_locus(PainleveType::E6t, "C0"), p);
    // y = 1/(2t) solves y' = -2y^2 + 2ty - 1; it has a pole at t = 0
    flow::PathSpec path = flow::PathSpec::make({C(-1.0), C(1.0)});
    auto direct = flow::integrate_riccati(ode, path, C(-0.5), {});
    auto linear = solve_via_linear(ode, C(-0.5), path, {});
    REQUIRE(direct.status == flow::FlowStatus::Completed);
    C xd = direct.back().chart == 0 ? direct.back().x : C(1.0) / direct.back().x;
    CHECK(std::abs(xd - C(0.5)) < 1e-6);             // closed form after the pole
    CHECK(std::abs(linear.back().x - C(0.5)) < 1e-6);
    CHECK(!direct.events.empty());
  }
}

TEST_SUITE("rational points and configurations") {
  TEST_CASE("E6~ rational solution at (0,0)") {
    auto pts = rational_points(PainleveType::E6t,
                               bind(PainleveType::E6t, {{"k0", C(0.0)}, {"kinf", C(0.0)}}));
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].chart == 0);
    CHECK(pts[0].x_of_t.is_zero());
    CHECK(pts[0].y_of_t.is_zero());
    // stationary under the field
    auto [vx, vy] = atlas::vf_chart0(PainleveType::E6t,
                                     bind(PainleveType::E6t, {{"k0", C(0.0)}, {"kinf", C(0.0)}}),
                                     C(0.7), C(0.0), C(0.0));
    CHECK(std::hypot(std::abs(vx), std::abs(vy)) < 1e-12);
  }

  TEST_CASE("E7~ rational solution at alpha = 0") {
    auto pts = rational_points(PainleveType::E7t, bind(PainleveType::E7t, {{"alpha", C(0.0)}}));
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].x_of_t.is_zero());
    CHECK(std::abs(pts[0].y_of_t.eval(C(2.0)) - C(1.0)) < 1e-15);  // y = t/2
    // curve residual: field value minus curve derivative
    Params p = bind(PainleveType::E7t, {{"alpha", C(0.0)}});
    for (C t : {C(0.3), C(1.7, 0.4), C(-2.0, 0.1)}) {
      auto [vx, vy] = atlas::vf_chart0(PainleveType::E7t, p, t, C(0.0), 0.5 * t);
      CHECK(std::abs(vx - pts[0].x_of_t.deriv().eval(t)) < 1e-12);
      CHECK(std::abs(vy - pts[0].y_of_t.deriv().eval(t)) < 1e-12);
    }
  }

  TEST_CASE("D4~ rational point where C0 meets Ceps") {
    C k1(0.3), kt(0.2);
    Params p = bind(PainleveType::D4t,
                    {{"k0", C(0.0)}, {"k1", k1}, {"kt", kt}, {"kinf", C(1.0) - k1 - kt}});
    auto pts = rational_points(PainleveType::D4t, p);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].chart == 0);
    CHECK(pts[0].x_of_t.is_zero());
    CHECK(pts[0].y_of_t.is_zero());
    auto [vx, vy] = atlas::vf_chart0(PainleveType::D4t, p, C(2.0, 0.3), C(0.0), C(0.0));
    CHECK(std::hypot(std::abs(vx), std::abs(vy)) < 1e-12);
  }

  TEST_CASE("the five special D4~ parameter rows") {
    auto run = [&](C k0, C k1, C kt, C kinf) {
      return config_at_params(PainleveType::D4t,
                              bind(PainleveType::D4t, {{"k0", k0}, {"k1", k1}, {"kt", kt},
                                                       {"kinf", kinf}}));
    };
    auto r1 = run(C(0.0), C(0.0), C(0.0), C(1.0));
    CHECK(r1.active == std::vector<std::string>{"C0", "C1", "Ct", "Ceps"});
    CHECK(r1.configuration.str() == "D4");
    auto r2 = run(C(0.0), C(0.0), C(1.0), C(0.0));
    CHECK(r2.active == std::vector<std::string>{"C0", "C1", "Ceps", "Cinf"});
    CHECK(r2.configuration.str() == "D4");
    auto r3 = run(C(0.0), C(1.0), C(0.0), C(0.0));
    CHECK(r3.active == std::vector<std::string>{"C0", "Ct", "Ceps", "Cinf"});
    CHECK(r3.configuration.str() == "D4");
    auto r4 = run(C(1.0), C(0.0), C(0.0), C(0.0));
    CHECK(r4.active == std::vector<std::string>{"C1", "Ct", "Ceps", "Cinf"});
    CHECK(r4.configuration.str() == "D4");
    auto r5 = run(C(0.0), C(0.0), C(0.0), C(0.0));
    CHECK(r5.active == std::vector<std::string>{"C0", "C1", "Ct", "Cinf"});
    CHECK(r5.configuration.str() == "A1+A1+A1+A1");
  }

  TEST_CASE("E6~ configurations") {
    auto r = config_at_params(PainleveType::E6t,
                              bind(PainleveType::E6t, {{"k0", C(0.0)}, {"kinf", C(0.0)}}));
    CHECK(r.active == std::vector<std::string>{"C0", "Cinf"});
    CHECK(r.configuration.str() == "A2");
    // generic point of the confluence hyperplane: a single A1
    auto s = config_at_params(PainleveType::E6t,
                              bind(PainleveType::E6t, {{"k0", C(0.5)}, {"kinf", C(0.5)}}));
    CHECK(s.active == std::vector<std::string>{"Ck0=kinf"});
    CHECK(s.configuration.str() == "A1");
  }

  TEST_CASE("D5~ triple point gives A3") {
    auto r = config_at_params(
        PainleveType::D5t,
        bind(PainleveType::D5t, {{"k0", C(0.0)}, {"kt", C(0.0)}, {"kinf", C(0.0)}}));
    CHECK(r.active == std::vector<std::string>{"C0", "Ceps", "Cinf"});
    CHECK(r.configuration.str() == "A3");
  }

  TEST_CASE("D6~ pairs give disjoint A1+A1") {
    auto run = [&](C k0, C kinf) {
      return config_at_params(PainleveType::D6t,
                              bind(PainleveType::D6t, {{"k0", k0}, {"kinf", kinf}}));
    };
    CHECK(run(C(0.0), C(0.0)).active == std::vector<std::string>{"C1", "C2"});
    CHECK(run(C(0.0), C(0.0)).configuration.str() == "A1+A1");
    CHECK(run(C(-1.0), C(1.0)).active == std::vector<std::string>{"C1", "C3"});
    CHECK(run(C(-1.0), C(-1.0)).active == std::vector<std::string>{"C2", "C4"});
    CHECK(run(C(-2.0), C(0.0)).active == std::vector<std::string>{"C3", "C4"});
    CHECK(run(C(-2.0), C(0.0)).configuration.str() == "A1+A1");
  }

  TEST_CASE("configurations always land in the lattice-allowed set") {
    Rng rng(61);
    for (PainleveType pt : {PainleveType::E7t, PainleveType::E6t, PainleveType::D4t,
                            PainleveType::D5t, PainleveType::D6t}) {
      auto allowed = rootlat::complement_types(atlas::affine_of(pt));
      // every single-locus activation plus the special rows above
      for (const auto& l : catalog(pt)) {
        Params p = on_constraint(l, rng);
        auto rep = config_at_params(pt, p);
        if (rep.configuration.empty()) continue;
        CHECK(allowed.count(rep.configuration));
      }
    }
  }
}

TEST_SUITE("confluence and nonexistence") {
  TEST_CASE("the E6~ confluence relation") {
    auto rep = confluence_check(PainleveType::E6t);
    CHECK(rep.splits_at_k0_zero);
    CHECK(rep.factors == std::vector<std::string>{"x0", "y0"});
    CHECK(rep.x_reduction_matches_cinf);
    CHECK(rep.y_reduction_matches_c0);
    CHECK(rep.irreducible_at_k0_one);
    CHECK_THROWS_AS(confluence_check(PainleveType::D4t), NotApplicable);
  }

  TEST_CASE("confluence locus is invariant at k0 = kinf") {
    Rng rng(67);
    const auto& l = find_locus(PainleveType::E6t, "Ck0=kinf");
    Params p = bind(PainleveType::E6t, {{"k0", C(0.6, 0.1)}, {"kinf", C(0.6, 0.1)}});
    for (int s = 0; s < 50; ++s) {
      C t = rng.time_clear();
      auto q = sample_on_locus(l, p, t, rng);
      CHECK(invariance_residual(l, p, t, q) < 1e-10);
    }
  }

  TEST_CASE("nonexistence reports") {
    for (PainleveType pt : {PainleveType::E8t, PainleveType::D7t, PainleveType::D8t}) {
      auto rep = nonexistence(pt);
      CHECK(rep.catalog_empty);
      CHECK(rep.complement_types_empty);
      CHECK(!rep.reason.empty());
    }
    CHECK_THROWS_AS(nonexistence(PainleveType::E7t), NotApplicable);
  }
}
