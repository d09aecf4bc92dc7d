#include <doctest.h>

#include <cstring>

#include "helpers.hpp"
#include "nodal/flow.hpp"
#include "nodal/riccati.hpp"

using namespace nodal;
using namespace nodal::flow;
using testutil::Rng;

namespace {

riccati::RiccatiODE x_squared() {
  riccati::RiccatiODE ode;
  ode.a = RatFun(Poly::constant(C(1.0)));
  ode.b = RatFun(Poly::constant(C(0.0)));
  ode.c = RatFun(Poly::constant(C(0.0)));
  return ode;
}

Params e6p(C k0, C kinf) {
  return Params::make(PainleveType::E6t, {{"k0", k0}, {"kinf", kinf}});
}

C final_x(const Trajectory& tr) {
  const auto& s = tr.back();
  return s.chart == 0 ? s.x : C(1.0) / s.x;  // u-chart carries 1/x
}

}  // namespace

TEST_SUITE("paths") {
  TEST_CASE("path validation") {
    CHECK_THROWS(PathSpec::make({}));
    CHECK_THROWS(PathSpec::make({C(0.0), C(0.0)}));
    // segment from 0.5 to 1.5 passes through the puncture t = 1
    CHECK_THROWS_AS(PathSpec::make({C(0.5), C(1.5)}, {C(1.0)}, 0.05), PunctureHit);
    // detour around it is fine
    CHECK_NOTHROW(PathSpec::make({C(0.5), C(0.5, 0.4), C(1.5, 0.4), C(1.5)}, {C(1.0)}, 0.05));
  }
}

TEST_SUITE("riccati flow") {
  TEST_CASE("zero path gives a single sample") {
    Trajectory tr = integrate_riccati(x_squared(), PathSpec::make({C(0.0)}), C(1.0), {});
    CHECK(tr.samples.size() == 1);
    CHECK(tr.status == FlowStatus::Completed);
  }

  TEST_CASE("x' = x^2 matches 1/(1-t) before the pole") {
    Trajectory tr = integrate_riccati(x_squared(), PathSpec::make({C(0.0), C(0.5)}), C(1.0), {});
    CHECK(tr.status == FlowStatus::Completed);
    CHECK(std::abs(final_x(tr) - C(2.0)) < 1e-8);
    CHECK(tr.events.empty());
  }

  TEST_CASE("x' = x^2 continues through the pole at t = 1") {
    Trajectory tr = integrate_riccati(x_squared(), PathSpec::make({C(0.0), C(1.5)}), C(1.0), {});
    CHECK(tr.status == FlowStatus::Completed);
    CHECK(!tr.events.empty());  // switched to the u = 1/x chart
    CHECK(std::abs(final_x(tr) - C(-2.0)) < 1e-6);
  }

  TEST_CASE("the u chart crosses zero transversally at the pole") {
    Trajectory tr = integrate_riccati(x_squared(), PathSpec::make({C(0.0), C(1.5)}), C(1.0), {});
    double min_u = 1e9;
    C t_at_min, u_at_min;
    bool seen_pos = false, seen_neg = false;
    for (const auto& s : tr.samples) {
      if (s.chart != 1) continue;
      if (s.x.real() > 1e-4) seen_pos = true;
      if (s.x.real() < -1e-4) seen_neg = true;
      if (std::abs(s.x) < min_u) {
        min_u = std::abs(s.x);
        t_at_min = s.t;
        u_at_min = s.x;
      }
    }
    CHECK(min_u < 0.05);                       // the trajectory passes close to u = 0
    CHECK(std::abs(t_at_min - C(1.0)) < 0.1);  // which happens near t = 1
    CHECK(seen_pos);                           // and u changes sign across it
    CHECK(seen_neg);
    // du/dt = -(a + b u + c u^2) near u = 0: nonzero slope means a simple pole
    C slope = -(C(1.0) + C(0.0) * u_at_min + C(0.0) * u_at_min * u_at_min);
    CHECK(std::abs(slope) > 0.5);
  }

  TEST_CASE("deterministic trajectories") {
    Trajectory a = integrate_riccati(x_squared(), PathSpec::make({C(0.0), C(1.5)}), C(1.0), {});
    Trajectory b = integrate_riccati(x_squared(), PathSpec::make({C(0.0), C(1.5)}), C(1.0), {});
    REQUIRE(a.samples.size() == b.samples.size());
    CHECK(std::memcmp(a.samples.data(), b.samples.data(),
                      a.samples.size() * sizeof(Sample)) == 0);
  }

  TEST_CASE("tolerance scaling sanity") {
    IntegratorConfig coarse;
    coarse.rel_tol = 1e-7;
    coarse.abs_tol = 1e-10;
    IntegratorConfig fine = coarse;
    fine.rel_tol /= 2;
    fine.abs_tol /= 2;
    Trajectory a = integrate_riccati(x_squared(), PathSpec::make({C(0.0), C(0.8)}), C(1.0), coarse);
    Trajectory b = integrate_riccati(x_squared(), PathSpec::make({C(0.0), C(0.8)}), C(1.0), fine);
    CHECK(std::abs(final_x(a) - final_x(b)) < a.error_estimate);
  }
}

TEST_SUITE("atlas flow") {
  TEST_CASE("zero path gives the initial sample") {
    Trajectory tr = integrate_atlas(PainleveType::E6t, e6p(C(0.3), C(0.4)),
                                    PathSpec::make({C(0.0)}), ChartPoint{0, C(0.1), C(0.2)}, {});
    CHECK(tr.samples.size() == 1);
  }

  TEST_CASE("the E6~ rational solution stays put") {
    Trajectory tr = integrate_atlas(PainleveType::E6t, e6p(C(0.0), C(0.0)),
                                    PathSpec::make({C(0.0), C(1.0)}),
                                    ChartPoint{0, C(0.0), C(0.0)}, {});
    CHECK(tr.status == FlowStatus::Completed);
    for (const auto& s : tr.samples) {
      CHECK(std::abs(s.x) < 1e-12);
      CHECK(std::abs(s.y) < 1e-12);
    }
  }

  TEST_CASE("the locus x0 = 0 is invariant when k0 = 0") {
    IntegratorConfig cfg;
    cfg.rel_tol = 1e-9;
    Trajectory tr = integrate_atlas(PainleveType::E6t, e6p(C(0.0), C(1.0)),
                                    PathSpec::make({C(0.0), C(1.0)}),
                                    ChartPoint{0, C(0.0), C(1.0)}, cfg);
    CHECK(tr.status == FlowStatus::Completed);
    for (const auto& s : tr.samples) CHECK(std::abs(s.x) < 1e-6);
  }

  TEST_CASE("D4~ full system follows the Ceps scalar reduction") {
    // on k0+k1+kt+kinf = 1 the section y0 = 0 is invariant and x0 obeys the
    // reduced Riccati equation
    Params p = Params::make(PainleveType::D4t, {{"k0", C(0.2)}, {"k1", C(0.3)},
                                                {"kt", C(0.1)}, {"kinf", C(0.4)}});
    PathSpec path = PathSpec::make({C(2.0), C(3.0)});
    auto tr = integrate_atlas(PainleveType::D4t, p, path, {0, C(0.5), C(0.0)}, {});
    REQUIRE(tr.status == FlowStatus::Completed);
    for (const auto& s : tr.samples) CHECK(std::abs(s.y) < 1e-9);
    auto ode = riccati::reduce(riccati::find_locus(PainleveType::D4t, "Ceps"), p);
    auto sc = integrate_riccati(ode, path, C(0.5), {});
    C xs = sc.back().chart == 0 ? sc.back().x : C(1.0) / sc.back().x;
    CHECK(std::abs(xs - tr.back().x) < 1e-6);
  }

  TEST_CASE("D4~ full system follows the Cinf reduction in chart 4") {
    Params p = Params::make(PainleveType::D4t, {{"k0", C(0.3)}, {"k1", C(0.2)},
                                                {"kt", C(0.4)}, {"kinf", C(0.0)}});
    PathSpec path = PathSpec::make({C(2.0), C(3.0)});
    auto tr = integrate_atlas(PainleveType::D4t, p, path, {4, C(0.0), C(0.7)}, {});
    REQUIRE(tr.status == FlowStatus::Completed);
    for (const auto& s : tr.samples)
      if (s.chart == 4) CHECK(std::abs(s.x) < 1e-9);
    auto ode = riccati::reduce(riccati::find_locus(PainleveType::D4t, "Cinf"), p);
    auto sc = integrate_riccati(ode, path, C(0.7), {});
    C ys = sc.back().chart == 0 ? sc.back().x : C(1.0) / sc.back().x;
    REQUIRE(tr.back().chart == 4);
    CHECK(std::abs(ys - tr.back().y) < 1e-6);
  }

  TEST_CASE("switch_chart rules") {
    Params p = Params::make(PainleveType::E7t, {{"alpha", C(-0.5)}});
    ChartPoint small{0, C(0.5), C(0.5)};
    ChartPoint same = switch_chart(PainleveType::E7t, p, C(0.2), small, 1e3);
    CHECK(same.chart == 0);
    CHECK(same.x == small.x);

    ChartPoint huge{0, C(1e6), C(0.0)};
    ChartPoint moved = switch_chart(PainleveType::E7t, p, C(0.2), huge, 1e3);
    CHECK(moved.chart != 0);
    CHECK(std::abs(moved.x) <= 1e-5);

    // both x and y enormous: every adjacent image stays above the threshold
    ChartPoint stuck{0, C(1e6), C(1e6)};
    CHECK_THROWS_AS(switch_chart(PainleveType::E7t, p, C(0.2), stuck, 1e3), NoChartAvailable);
  }

  TEST_CASE("chart switching is transparent to the physical trajectory") {
    // a P_II flow that blows up in chart 0 and continues elsewhere
    Params p = Params::make(PainleveType::E7t, {{"alpha", C(-0.5)}});
    IntegratorConfig small_rho;
    small_rho.switch_threshold = 1e2;
    IntegratorConfig big_rho;
    big_rho.switch_threshold = 1e3;
    PathSpec path = PathSpec::make({C(0.0), C(4.0)});
    ChartPoint init{0, C(1.0), C(0.0)};
    Trajectory a = integrate_atlas(PainleveType::E7t, p, path, init, small_rho);
    Trajectory b = integrate_atlas(PainleveType::E7t, p, path, init, big_rho);
    REQUIRE(a.status == FlowStatus::Completed);
    REQUIRE(b.status == FlowStatus::Completed);
    CHECK(!a.events.empty());  // the pole does force switches
    // compare endpoints in a common chart
    auto ea = a.back();
    auto eb = b.back();
    std::pair<C, C> qa{ea.x, ea.y}, qb{eb.x, eb.y};
    if (ea.chart != eb.chart) qa = atlas::transition(PainleveType::E7t, ea.chart, eb.chart, p,
                                                     ea.t, qa);
    CHECK(std::abs(qa.first - qb.first) < 1e-5 * std::max(1.0, std::abs(qb.first)));
    CHECK(std::abs(qa.second - qb.second) < 1e-5 * std::max(1.0, std::abs(qb.second)));
  }

  TEST_CASE("a detour around a movable pole lands on the through-pole value") {
    // movable singularities are plain poles: continuing around one in the
    // complex t-plane must return the same branch as crossing it by chart
    // switching on the real axis
    Params p = Params::make(PainleveType::E7t, {{"alpha", C(-0.5)}});
    ChartPoint init{0, C(1.0), C(0.0)};
    Trajectory through =
        integrate_atlas(PainleveType::E7t, p, PathSpec::make({C(0.0), C(4.0)}), init, {});
    Trajectory around = integrate_atlas(
        PainleveType::E7t, p, PathSpec::make({C(0.0), C(2.0, 0.5), C(4.0)}), init, {});
    REQUIRE(through.status == FlowStatus::Completed);
    REQUIRE(around.status == FlowStatus::Completed);
    CHECK(!through.events.empty());
    CHECK(around.events.empty());
    auto a = through.back();
    auto b = around.back();
    std::pair<C, C> qa{a.x, a.y};
    if (a.chart != b.chart)
      qa = atlas::transition(PainleveType::E7t, a.chart, b.chart, p, a.t, qa);
    CHECK(std::abs(qa.first - b.x) < 1e-5 * std::max(1.0, std::abs(b.x)));
    CHECK(std::abs(qa.second - b.y) < 1e-5 * std::max(1.0, std::abs(b.y)));
  }

  TEST_CASE("trajectory samples in different charts glue via transitions") {
    Params p = Params::make(PainleveType::E7t, {{"alpha", C(-0.5)}});
    PathSpec path = PathSpec::make({C(0.0), C(4.0)});
    Trajectory tr = integrate_atlas(PainleveType::E7t, p, path, ChartPoint{0, C(1.0), C(0.0)}, {});
    REQUIRE(!tr.events.empty());
    // at every switch event, consecutive samples represent the same point
    size_t glue_pairs = 0;
    for (size_t i = 0; i + 1 < tr.samples.size(); ++i) {
      const auto& s0 = tr.samples[i];
      const auto& s1 = tr.samples[i + 1];
      if (s0.chart == s1.chart || s0.t != s1.t) continue;
      ++glue_pairs;
      auto img = atlas::transition(PainleveType::E7t, s0.chart, s1.chart, p, s0.t, {s0.x, s0.y});
      CHECK(std::abs(img.first - s1.x) < 1e-9 * std::max(1.0, std::abs(s1.x)));
      CHECK(std::abs(img.second - s1.y) < 1e-9 * std::max(1.0, std::abs(s1.y)));
    }
    CHECK(glue_pairs == tr.events.size());
  }
}
