#include "nodal/verify.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "nodal/atlas.hpp"
#include "nodal/e8.hpp"
#include "nodal/flow.hpp"
#include "nodal/riccati.hpp"
#include "nodal/tables.hpp"

namespace nodal::verify {

namespace {

using namespace nodal::rootlat;
using atlas::PainleveType;
using atlas::Params;
using nodal::C;

// ---- reference tables, transcribed row by row ------------------------------

const std::vector<std::pair<int, std::vector<const char*>>> kTable2 = {
    {8,
     {"A8", "D8", "A7+A1", "A5+A2+A1", "A4^2", "A2^4", "E6+A2", "E7+A1", "D6+A1^2", "D5+A3",
      "D4^2", "D4+A1^4", "A3^2+A1^2", "A1^8"}},
    {7,
     {"A6+A1", "A4+A2+A1", "A5+A2", "A2^3+A1", "E6+A1", "E7", "D7", "D5+A1^2", "D4+A1^3",
      "A3^2+A1", "A1^7", "D6+A1", "D5+A2", "A3+A2+A1^2", "D4+A3", "A3+A1^4", "A4+A3", "A5+A1^2",
      "A7"}},
    {6,
     {"A2^3", "E6", "D6", "D4+A1^2", "A3^2", "D5+A1", "A3+A1^3", "D4+A2", "A1^6", "A2+A1^4",
      "A4+A1^2", "A6", "A3+A2+A1", "A5+A1", "A4+A2", "A2^2+A1^2"}},
    {5, {"D5", "A3+A1^2", "A3+A2", "A5", "A1^5", "A4+A1", "D4+A1", "A2+A1^3", "A2^2+A1"}},
    {4, {"D4", "A1^4", "A2+A1^2", "A2^2", "A3+A1", "A4"}},
    {3, {"A3", "A2+A1", "A1^3"}},
    {2, {"A2", "A1^2"}},
    {1, {"A1"}}};

const std::vector<std::pair<const char*, std::vector<const char*>>> kTable3 = {
    {"E8", {}},
    {"E7", {"A1"}},
    {"D8", {}},
    {"D7", {}},
    {"D6", {"A1^2", "A1"}},
    {"E6", {"A2", "A1"}},
    {"D5", {"A3", "A2", "A1^2", "A1"}},
    {"D4", {"D4", "A1^4", "A3", "A1^3", "A2", "A1^2", "A1"}}};

const std::vector<std::pair<const char*, std::vector<const char*>>> kTable4 = {
    {"E8", {}},
    {"E7", {"A1"}},
    {"D8", {}},
    {"D7", {}},
    {"D6", {"A1^2", "A1"}},
    {"E6", {"A2", "A1"}},
    {"D5", {"A3", "A2", "A1^2", "A1"}},
    {"D4", {"D4", "A3", "A1^3", "A2", "A1^2", "A1"}}};

std::set<RootSystemType> parse_set(const std::vector<const char*>& names) {
  std::set<RootSystemType> out;
  for (const char* s : names) out.insert(RootSystemType::parse(s));
  return out;
}

struct Sampler {
  std::mt19937_64 gen;
  explicit Sampler(uint64_t seed) : gen(seed) {}
  double real(double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    return d(gen);
  }
  C annulus(double lo = 0.4, double hi = 1.6) {
    double r = real(lo, hi), phi = real(0.0, 6.283185307179586);
    return {r * std::cos(phi), r * std::sin(phi)};
  }
  C time_clear() { return C(real(1.4, 2.4), real(0.3, 1.1)); }
};

Params generic_params(PainleveType pt, Sampler& rng) {
  std::vector<std::pair<std::string, C>> kv;
  for (const auto& name : atlas::param_names(pt)) kv.emplace_back(name, rng.annulus(0.3, 1.2));
  return Params::make(pt, kv);
}

Params on_constraint(const riccati::LocusSpec& l, Sampler& rng) {
  const auto& names = atlas::param_names(l.painleve_type);
  std::vector<std::pair<std::string, C>> kv;
  for (const auto& n : names) kv.emplace_back(n, rng.annulus(0.25, 0.9));
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

atlas::ChartPoint sample_on_locus(const riccati::LocusSpec& l, const Params& p, C t, Sampler& rng,
                                  int chart) {
  const auto& eq = l.chart_equations.at(chart);
  C free = rng.annulus(0.3, 1.3);
  switch (eq.kind) {
    case riccati::EqKind::CoordX: return {chart, eq.g(p, t), free};
    case riccati::EqKind::CoordY: return {chart, free, eq.g(p, t)};
    default: return {chart, free, eq.g(p, t) / free};
  }
}

std::string set_diff_note(const std::set<RootSystemType>& got,
                          const std::set<RootSystemType>& want) {
  std::ostringstream os;
  for (const auto& t : want)
    if (!got.count(t)) os << " missing " << t.str();
  for (const auto& t : got)
    if (!want.count(t)) os << " extra " << t.str();
  return os.str();
}

// ---- individual criteria ----------------------------------------------------

CriterionResult c1_table2() {
  auto start = std::chrono::steady_clock::now();
  std::set<RootSystemType> got = subsystem_closure();
  bool pass = got.size() == 70;
  std::ostringstream note;
  for (const auto& [rank, names] : kTable2) {
    std::set<RootSystemType> want = parse_set(names);
    std::set<RootSystemType> here;
    for (const auto& t : got)
      if (t.rank() == rank) here.insert(t);
    if (here != want) {
      pass = false;
      note << " rank " << rank << ":" << set_diff_note(here, want);
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 60.0) pass = false;
  note << " (70 types, " << secs << " s)";
  return {1, "table2-reproduction", pass, note.str()};
}

CriterionResult c2_table3() {
  bool pass = true;
  std::ostringstream note;
  for (const auto& [key, names] : kTable3) {
    auto got = complement_types(AffineType::parse(key));
    auto want = parse_set(names);
    if (got != want) {
      pass = false;
      note << " " << key << ":" << set_diff_note(got, want);
    }
  }
  note << " (8 rows)";
  return {2, "table3-reproduction", pass, note.str()};
}

CriterionResult c3_table4() {
  bool pass = true;
  std::ostringstream note;
  for (const auto& [key, names] : kTable4) {
    auto got = fibered_configs(AffineType::parse(key));
    auto want = parse_set(names);
    if (got != want) {
      pass = false;
      note << " " << key << ":" << set_diff_note(got, want);
    }
  }
  std::set<RootSystemType> excluded;
  for (const auto& t : subsystem_closure())
    if (!oguiso_shioda_feasible(t).feasible) excluded.insert(t);
  auto want_excl = parse_set({"D4+A1^4", "A1^8", "A1^7"});
  if (excluded != want_excl) {
    pass = false;
    note << " exclusions:" << set_diff_note(excluded, want_excl);
  }
  note << " (8 rows + 3 Euler exclusions)";
  return {3, "table4-and-euler-exclusions", pass, note.str()};
}

CriterionResult c4_embeddings() {
  auto start = std::chrono::steady_clock::now();
  bool pass = true;
  std::ostringstream note;
  int n = 0;
  for (const auto& t : subsystem_closure()) {
    try {
      RootEmbedding emb = find_embedding(t);
      if (!(classify_gram(emb.gram()) == t)) {
        pass = false;
        note << " certificate mismatch for " << t.str();
      }
    } catch (const Error& e) {
      pass = false;
      note << " " << t.str() << ": " << e.what();
    }
    ++n;
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 300.0) pass = false;
  note << " (" << n << " certificates, " << secs << " s)";
  return {4, "embedding-certificates", pass, note.str()};
}

CriterionResult c5_atlas_consistency(uint64_t seed) {
  Sampler rng(seed);
  double worst_res = 0.0, worst_rt = 0.0;
  for (PainleveType pt : {PainleveType::E7t, PainleveType::E6t, PainleveType::D4t}) {
    for (auto [i, j] : atlas::adjacent_pairs(pt)) {
      for (int s = 0; s < 100; ++s) {
        Params p = generic_params(pt, rng);
        C t = rng.time_clear();
        std::pair<C, C> q{rng.annulus(), rng.annulus()};
        worst_res = std::max(worst_res, atlas::consistency_residual(pt, i, j, p, t, q));
        worst_res = std::max(worst_res, atlas::consistency_residual(pt, j, i, p, t, q));
        auto img = atlas::transition(pt, i, j, p, t, q);
        auto back = atlas::transition(pt, j, i, p, t, img);
        double scale = std::max({1.0, std::abs(q.first), std::abs(q.second)});
        worst_rt = std::max(worst_rt,
                            std::max(std::abs(back.first - q.first), std::abs(back.second - q.second)) /
                                scale);
      }
    }
  }
  bool pass = worst_res < 1e-9 && worst_rt < 1e-12;
  std::ostringstream note;
  note << " worst residual " << worst_res << ", worst round trip " << worst_rt;
  return {5, "atlas-consistency", pass, note.str()};
}

CriterionResult c6_locus_tangency(uint64_t seed) {
  Sampler rng(seed + 1);
  double worst = 0.0;
  std::string worst_at = "-";
  for (PainleveType pt : {PainleveType::E7t, PainleveType::E6t, PainleveType::D4t}) {
    for (const auto& l : riccati::catalog(pt)) {
      Params p = on_constraint(l, rng);  // confluence: k0 = kinf != 0
      std::vector<int> chart_ids;
      for (const auto& [c, eq] : l.chart_equations) chart_ids.push_back(c);
      for (int s = 0; s < 100; ++s) {
        int chart = chart_ids[s % chart_ids.size()];
        C t = rng.time_clear();
        auto q = sample_on_locus(l, p, t, rng, chart);
        double r = riccati::invariance_residual(l, p, t, q);
        if (r > worst) {
          worst = r;
          worst_at = atlas::to_string(pt) + "/" + l.name;
        }
      }
    }
  }
  bool pass = worst < 1e-10;
  std::ostringstream note;
  note << " worst residual " << worst << " at " << worst_at << " (9 loci x 100 points)";
  return {6, "locus-tangency", pass, note.str()};
}

CriterionResult c7_riccati_linear(uint64_t seed) {
  Sampler rng(seed + 2);
  bool pass = true;
  double worst = 0.0;
  std::ostringstream note;
  int entries = 0;
  for (PainleveType pt : {PainleveType::E7t, PainleveType::E6t, PainleveType::D4t,
                          PainleveType::D5t, PainleveType::D6t}) {
    for (const auto& l : riccati::catalog(pt)) {
      Params p = on_constraint(l, rng);
      riccati::RiccatiODE ode = riccati::reduce(l, p);
      if (!ode.quadratic(1e-12)) {
        note << " [" << atlas::to_string(pt) << "/" << l.name << " degenerate at sample]";
        continue;
      }
      ++entries;
      flow::PathSpec path = flow::PathSpec::make({C(0.3, 0.4), C(0.9, 0.4)});
      C x0 = rng.annulus(0.05, 0.2);
      auto direct = flow::integrate_riccati(ode, path, x0, {});
      auto linear = riccati::solve_via_linear(ode, x0, path, {});
      if (direct.status != flow::FlowStatus::Completed || linear.samples.empty()) {
        pass = false;
        note << " " << atlas::to_string(pt) << "/" << l.name << ": integration failed";
        continue;
      }
      C xd = direct.back().chart == 0 ? direct.back().x : C(1.0) / direct.back().x;
      double diff = std::abs(xd - linear.back().x) / std::max(1.0, std::abs(xd));
      worst = std::max(worst, diff);
      if (diff >= 1e-6) {
        pass = false;
        note << " " << atlas::to_string(pt) << "/" << l.name << " differs by " << diff;
      }
    }
  }
  // through one pole: E7~ (alpha = -1/2) and E6~ C0 (kinf = 1)
  {
    Params p7 = Params::make(PainleveType::E7t, {{"alpha", C(-0.5)}});
    auto ode = riccati::reduce(riccati::catalog(PainleveType::E7t)[0], p7);
    flow::PathSpec path = flow::PathSpec::make({C(0.0), C(4.0)});
    auto direct = flow::integrate_riccati(ode, path, C(1.0), {});
    auto linear = riccati::solve_via_linear(ode, C(1.0), path, {});
    C xd = direct.back().chart == 0 ? direct.back().x : C(1.0) / direct.back().x;
    double diff = std::abs(xd - linear.back().x) / std::max(1.0, std::abs(xd));
    bool crossed = !direct.events.empty() && !linear.pole_flags.empty();
    if (!crossed || diff >= 1e-5) {
      pass = false;
      note << " E7 pole crossing: diff " << diff << (crossed ? "" : " (no pole crossed)");
    }
  }
  {
    Params p6 = Params::make(PainleveType::E6t, {{"k0", C(0.0)}, {"kinf", C(1.0)}});
    auto ode = riccati::reduce(riccati::find_locus(PainleveType::E6t, "C0"), p6);
    flow::PathSpec path = flow::PathSpec::make({C(-1.0), C(1.0)});
    auto direct = flow::integrate_riccati(ode, path, C(-0.5), {});
    auto linear = riccati::solve_via_linear(ode, C(-0.5), path, {});
    C xd = direct.back().chart == 0 ? direct.back().x : C(1.0) / direct.back().x;
    // closed form y = 1/(2t): y(1) = 1/2 after the pole at t = 0
    double diff = std::abs(xd - linear.back().x);
    bool crossed = !direct.events.empty();
    if (!crossed || diff >= 1e-5 || std::abs(xd - C(0.5)) >= 1e-5) {
      pass = false;
      note << " E6 pole crossing: diff " << diff;
    }
  }
  std::ostringstream head;
  head << " " << entries << " catalog entries, worst pole-free difference " << worst
       << note.str();
  return {7, "riccati-linear-equivalence", pass, head.str()};
}

CriterionResult c8_on_locus_full_system() {
  Params p = Params::make(PainleveType::E6t, {{"k0", C(0.0)}, {"kinf", C(1.0)}});
  flow::IntegratorConfig cfg;
  cfg.rel_tol = 1e-9;
  flow::PathSpec path = flow::PathSpec::make({C(0.0), C(1.0)});
  auto tr = flow::integrate_atlas(PainleveType::E6t, p, path, {0, C(0.0), C(1.0)}, cfg);
  double worst_x = 0.0;
  for (const auto& s : tr.samples) worst_x = std::max(worst_x, std::abs(s.x));
  auto ode = riccati::reduce(riccati::find_locus(PainleveType::E6t, "C0"), p);
  auto scalar = flow::integrate_riccati(ode, path, C(1.0), cfg);
  C ys = scalar.back().chart == 0 ? scalar.back().x : C(1.0) / scalar.back().x;
  double diff = std::abs(tr.back().y - ys);
  bool pass = tr.status == flow::FlowStatus::Completed && worst_x < 1e-6 && diff < 1e-6;
  std::ostringstream note;
  note << " max |x0| " << worst_x << ", y0 vs scalar Riccati " << diff;
  return {8, "on-locus-full-system", pass, note.str()};
}

CriterionResult c9_rational_solutions(uint64_t seed) {
  Sampler rng(seed + 3);
  double worst = 0.0;
  Params p6 = Params::make(PainleveType::E6t, {{"k0", C(0.0)}, {"kinf", C(0.0)}});
  Params p7 = Params::make(PainleveType::E7t, {{"alpha", C(0.0)}});
  for (int s = 0; s < 20; ++s) {
    C t = rng.annulus(0.2, 2.2);
    auto [ex, ey] = atlas::vf_chart0(PainleveType::E6t, p6, t, C(0.0), C(0.0));
    worst = std::max(worst, std::hypot(std::abs(ex), std::abs(ey)));
    auto [sx, sy] = atlas::vf_chart0(PainleveType::E7t, p7, t, C(0.0), 0.5 * t);
    worst = std::max(worst, std::hypot(std::abs(sx), std::abs(sy - C(0.5))));
  }
  bool pass = worst < 1e-12;
  std::ostringstream note;
  note << " worst field residual " << worst << " over 20 sampled t";
  return {9, "rational-solutions-stationary", pass, note.str()};
}

CriterionResult c10_configuration_tables() {
  bool pass = true;
  std::ostringstream note;
  auto d4 = [&](double k0, double k1, double kt, double kinf) {
    return riccati::config_at_params(
        PainleveType::D4t, Params::make(PainleveType::D4t, {{"k0", C(k0)}, {"k1", C(k1)},
                                                            {"kt", C(kt)}, {"kinf", C(kinf)}}));
  };
  struct Row {
    double k[4];
    const char* type;
  };
  const Row rows[] = {{{0, 0, 0, 1}, "D4"},
                      {{0, 0, 1, 0}, "D4"},
                      {{0, 1, 0, 0}, "D4"},
                      {{1, 0, 0, 0}, "D4"},
                      {{0, 0, 0, 0}, "A1+A1+A1+A1"}};
  for (const auto& r : rows) {
    auto rep = d4(r.k[0], r.k[1], r.k[2], r.k[3]);
    if (rep.configuration.str() != r.type) {
      pass = false;
      note << " D4(" << r.k[0] << "," << r.k[1] << "," << r.k[2] << "," << r.k[3] << ") gave "
           << rep.configuration.str() << " wanted " << r.type;
    }
  }
  auto e6 = riccati::config_at_params(
      PainleveType::E6t, Params::make(PainleveType::E6t, {{"k0", C(0.0)}, {"kinf", C(0.0)}}));
  if (e6.configuration.str() != "A2" ||
      e6.active != std::vector<std::string>{"C0", "Cinf"}) {
    pass = false;
    note << " E6(0,0) gave " << e6.configuration.str();
  }
  note << " (5 D4 rows + E6 row)";
  return {10, "configuration-tables", pass, note.str()};
}

CriterionResult c11_nonexistence() {
  bool pass = true;
  std::ostringstream note;
  for (PainleveType pt : {PainleveType::E8t, PainleveType::D7t, PainleveType::D8t}) {
    auto rep = riccati::nonexistence(pt);
    if (!rep.catalog_empty || !rep.complement_types_empty || rep.reason.empty()) {
      pass = false;
      note << " " << atlas::to_string(pt) << " report incomplete";
    }
  }
  note << " (E8, D7, D8)";
  return {11, "riccati-nonexistence", pass, note.str()};
}

CriterionResult c12_closed_form_integrator() {
  riccati::RiccatiODE ode;
  ode.a = RatFun(Poly::constant(C(1.0)));
  ode.b = RatFun(Poly::constant(C(0.0)));
  ode.c = RatFun(Poly::constant(C(0.0)));
  auto pre = flow::integrate_riccati(ode, flow::PathSpec::make({C(0.0), C(0.5)}), C(1.0), {});
  C x_pre = pre.back().chart == 0 ? pre.back().x : C(1.0) / pre.back().x;
  auto post = flow::integrate_riccati(ode, flow::PathSpec::make({C(0.0), C(1.5)}), C(1.0), {});
  C x_post = post.back().chart == 0 ? post.back().x : C(1.0) / post.back().x;
  double e_pre = std::abs(x_pre - C(2.0));
  double e_post = std::abs(x_post - C(-2.0));
  bool pass = e_pre < 1e-8 && e_post < 1e-6;
  std::ostringstream note;
  note << " |x(0.5)-2| = " << e_pre << ", |x(1.5)+2| = " << e_post;
  return {12, "closed-form-integrator", pass, note.str()};
}

CriterionResult c13_moduli_dim() {
  bool pass = moduli_dim(5, 4) == 1 && moduli_dim(9, 0) == 1;
  return {13, "moduli-dimension-arithmetic", pass,
          " moduli_dim(5,4) = " + std::to_string(moduli_dim(5, 4)) +
              ", moduli_dim(9,0) = " + std::to_string(moduli_dim(9, 0))};
}

}  // namespace

std::vector<CriterionResult> run_all(uint64_t seed) {
  std::vector<CriterionResult> out;
  out.push_back(c1_table2());
  out.push_back(c2_table3());
  out.push_back(c3_table4());
  out.push_back(c4_embeddings());
  out.push_back(c5_atlas_consistency(seed));
  out.push_back(c6_locus_tangency(seed));
  out.push_back(c7_riccati_linear(seed));
  out.push_back(c8_on_locus_full_system());
  out.push_back(c9_rational_solutions(seed));
  out.push_back(c10_configuration_tables());
  out.push_back(c11_nonexistence());
  out.push_back(c12_closed_form_integrator());
  out.push_back(c13_moduli_dim());
  return out;
}

}  // namespace nodal::verify
