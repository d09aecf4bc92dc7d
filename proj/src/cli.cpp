#include "nodal/cli.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "nodal/io.hpp"
#include "nodal/tables.hpp"
#include "nodal/verify.hpp"

namespace nodal::cli {

namespace {

using atlas::ChartPoint;
using atlas::PainleveType;
using atlas::Params;
using io::json;

// "1.5", "-2", "1.5+0.5i", "-1e-3-2i"
C parse_complex(const std::string& s) {
  if (s.empty()) throw Error("empty complex literal");
  if (s.back() == 'i') {
    std::string body = s.substr(0, s.size() - 1);
    size_t split = std::string::npos;
    for (size_t k = body.size(); k-- > 1;) {
      if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
        split = k;
        break;
      }
    }
    if (split == std::string::npos) return {0.0, std::stod(body.empty() ? "1" : body)};
    return {std::stod(body.substr(0, split)), std::stod(body.substr(split))};
  }
  return {std::stod(s), 0.0};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

// "k0=1,2,kinf=3" -> {k0: 1+2i, kinf: 3}; a comma segment without '=' is the
// imaginary part of the preceding value
std::vector<std::pair<std::string, C>> parse_assignments(const std::string& s) {
  std::vector<std::pair<std::string, C>> out;
  for (const std::string& tok : split(s, ',')) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) {
      if (out.empty()) throw Error("expected key=value in '" + s + "'");
      out.back().second = {out.back().second.real(), std::stod(tok)};
    } else {
      out.emplace_back(tok.substr(0, eq), C(std::stod(tok.substr(eq + 1)), 0.0));
    }
  }
  return out;
}

Params parse_params(PainleveType pt, const std::string& s) {
  return Params::make(pt, parse_assignments(s));
}

ChartPoint parse_init(const std::string& s) {
  ChartPoint q;
  bool saw_chart = false, saw_x = false, saw_y = false;
  for (const auto& [key, value] : parse_assignments(s)) {
    if (key == "chart") {
      q.chart = static_cast<int>(value.real());
      saw_chart = true;
    } else if (key == "x") {
      q.x = value;
      saw_x = true;
    } else if (key == "y") {
      q.y = value;
      saw_y = true;
    } else {
      throw Error("unknown init field '" + key + "'");
    }
  }
  if (!saw_chart || !saw_x || !saw_y) throw Error("init needs chart=,x=,y=");
  return q;
}

std::vector<C> parse_path(const std::string& s) {
  std::vector<C> pts;
  for (const std::string& tok : split(s, ',')) pts.push_back(parse_complex(tok));
  return pts;
}

void emit_trajectory(const flow::Trajectory& traj, const std::string& out_file, std::ostream& out,
                     std::ostream& err) {
  if (!out_file.empty()) {
    std::ofstream f(out_file);
    if (!f) throw Error("cannot open '" + out_file + "' for writing");
    io::write_trajectory_csv(f, traj);
    out << io::trajectory_events_json(traj).dump(2) << '\n';
  } else {
    io::write_trajectory_csv(out, traj);
    err << io::trajectory_events_json(traj).dump(2) << '\n';
  }
}

int run_impl(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"nodal curves, Riccati loci and Painleve flows"};
  app.require_subcommand(1);

  // ---- lattice ----
  auto* lattice = app.add_subcommand("lattice", "root-lattice classification tables");
  lattice->require_subcommand(1);
  std::string fmt = "text";
  int table_id = 0;
  for (int which : {2, 3, 4}) {
    auto* t = lattice->add_subcommand("table" + std::to_string(which),
                                      "print classification table " + std::to_string(which));
    t->add_option("--format", fmt)->check(CLI::IsMember({"json", "text"}));
    t->callback([&table_id, which] { table_id = which; });
  }
  auto* embed = lattice->add_subcommand("embed", "explicit root vectors for a type");
  std::string embed_type;
  embed->add_option("--type", embed_type, "canonical type string, e.g. D4+A1^4")->required();
  auto* opcheck = lattice->add_subcommand("opcheck", "anti-canonical lattice conditions");
  std::string opcheck_file;
  opcheck->add_option("--file", opcheck_file, "Picard configuration JSON")->required();
  auto* modulidim = lattice->add_subcommand("modulidim", "deformation dimension 10-(r+s)");
  int mr = 0, ms = 0;
  modulidim->add_option("--r", mr)->required();
  modulidim->add_option("--s", ms)->required();

  // ---- painleve ----
  auto* painleve = app.add_subcommand("painleve", "full-system integration");
  auto* integrate = painleve->add_subcommand("integrate", "integrate the Painleve flow");
  std::string i_type, i_params, i_init, i_path, i_out;
  flow::IntegratorConfig icfg;
  integrate->add_option("--type", i_type)->required()->check(CLI::IsMember({"E7", "E6", "D4"}));
  integrate->add_option("--params", i_params)->required();
  integrate->add_option("--init", i_init, "chart=<i>,x=<re[,im]>,y=<re[,im]>")->required();
  integrate->add_option("--path", i_path, "waypoints t0,t1[,...]")->required();
  integrate->add_option("--rtol", icfg.rel_tol)->check(CLI::PositiveNumber);
  integrate->add_option("--atol", icfg.abs_tol)->check(CLI::PositiveNumber);
  integrate->add_option("--rho", icfg.switch_threshold)->check(CLI::PositiveNumber);
  integrate->add_option("--out", i_out, "trajectory CSV file");

  // ---- riccati ----
  auto* riccati_cmd = app.add_subcommand("riccati", "invariant loci and Riccati reductions");
  riccati_cmd->require_subcommand(1);
  std::string r_type, r_locus, r_params, r_x0 = "0.1", r_path = "0.3,0.9", r_method = "direct",
              r_out, r_fmt = "json";
  uint64_t r_seed = 20240;
  auto* rlist = riccati_cmd->add_subcommand("list", "catalog of invariant loci");
  rlist->add_option("--type", r_type)->required();
  rlist->add_option("--format", r_fmt)->check(CLI::IsMember({"json", "text"}));
  auto* rreduce = riccati_cmd->add_subcommand("reduce", "scalar Riccati equation of a locus");
  rreduce->add_option("--type", r_type)->required();
  rreduce->add_option("--locus", r_locus)->required();
  rreduce->add_option("--params", r_params);
  auto* rverify = riccati_cmd->add_subcommand("verify", "invariance / linearization checks");
  rverify->add_option("--type", r_type)->required();
  rverify->add_option("--locus", r_locus);
  rverify->add_option("--seed", r_seed);
  auto* rsolve = riccati_cmd->add_subcommand("solve", "integrate one Riccati reduction");
  rsolve->add_option("--type", r_type)->required();
  rsolve->add_option("--locus", r_locus)->required();
  rsolve->add_option("--params", r_params)->required();
  rsolve->add_option("--x0", r_x0, "initial value re[,im]");
  rsolve->add_option("--path", r_path, "waypoints t0,t1[,...]");
  rsolve->add_option("--method", r_method)->check(CLI::IsMember({"direct", "linear"}));
  rsolve->add_option("--out", r_out);
  auto* rconfig = riccati_cmd->add_subcommand("config", "active loci and configuration type");
  rconfig->add_option("--type", r_type)->required();
  rconfig->add_option("--params", r_params)->required();
  auto* rrational = riccati_cmd->add_subcommand("rational", "constant/rational solutions from locus intersections");
  rrational->add_option("--type", r_type)->required();
  rrational->add_option("--params", r_params)->required();
  auto* rconfluence = riccati_cmd->add_subcommand("confluence", "splitting of the E6 confluence locus");
  rconfluence->add_option("--type", r_type)->required();
  auto* rnonex = riccati_cmd->add_subcommand("nonexistence", "no-Riccati-solutions report");
  rnonex->add_option("--type", r_type)->required()->check(CLI::IsMember({"E8", "D7", "D8"}));

  // ---- verify ----
  auto* verify_cmd = app.add_subcommand("verify", "verification suites");
  auto* vall = verify_cmd->add_subcommand("all", "run every acceptance check");
  uint64_t v_seed = 20240;
  vall->add_option("--seed", v_seed, "seed for sampled checks");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  if (table_id != 0) {
    if (fmt == "json") out << io::table_json(table_id).dump(2) << '\n';
    else out << io::table_text(table_id);
    return 0;
  }
  if (embed->parsed()) {
    auto emb = rootlat::find_embedding(rootlat::RootSystemType::parse(embed_type));
    out << io::embedding_json(emb).dump(2) << '\n';
    return 0;
  }
  if (opcheck->parsed()) {
    std::ifstream f(opcheck_file);
    if (!f) throw Error("cannot read '" + opcheck_file + "'");
    json j = json::parse(f);
    auto rep = rootlat::op_pair_lattice_check(io::picard_from_json(j));
    out << io::opcheck_json(rep).dump(2) << '\n';
    return 0;
  }
  if (modulidim->parsed()) {
    out << rootlat::moduli_dim(mr, ms) << '\n';
    return 0;
  }

  if (integrate->parsed()) {
    PainleveType pt = atlas::painleve_type_from(i_type);
    Params p = parse_params(pt, i_params);
    flow::PathSpec path =
        flow::PathSpec::make(parse_path(i_path), atlas::punctures(pt), icfg.min_puncture_distance);
    auto traj = flow::integrate_atlas(pt, p, path, parse_init(i_init), icfg);
    emit_trajectory(traj, i_out, out, err);
    return traj.status == flow::FlowStatus::Completed ? 0 : 1;
  }

  if (rlist->parsed()) {
    PainleveType pt = atlas::painleve_type_from(r_type);
    if (r_fmt == "json") {
      out << io::loci_json(pt).dump(2) << '\n';
    } else {
      for (const auto& l : riccati::catalog(pt)) {
        out << l.name << ": " << l.constraint_text << "; charts:";
        for (const auto& [c, eq] : l.chart_equations) out << " [" << c << "] " << eq.text << ';';
        out << " riccati a = " << l.riccati_a << ", b = " << l.riccati_b
            << ", c = " << l.riccati_c << '\n';
      }
    }
    return 0;
  }
  if (rreduce->parsed()) {
    PainleveType pt = atlas::painleve_type_from(r_type);
    const auto& l = riccati::find_locus(pt, r_locus);
    json j{{"type", r_type},
           {"locus", l.name},
           {"reduced_chart", l.reduced_chart},
           {"reduced_coordinate", std::string(1, l.reduced_coord)},
           {"a", l.riccati_a},
           {"b", l.riccati_b},
           {"c", l.riccati_c}};
    if (!r_params.empty()) {
      auto ode = riccati::reduce(l, parse_params(pt, r_params));
      j["bound"] = {{"a", ode.a.str()}, {"b", ode.b.str()}, {"c", ode.c.str()}};
    }
    out << j.dump(2) << '\n';
    return 0;
  }
  if (rverify->parsed()) {
    PainleveType pt = atlas::painleve_type_from(r_type);
    if (riccati::catalog(pt).empty()) {
      out << "no loci: the catalog for " << r_type
          << " is empty (see `riccati nonexistence --type " << r_type << "`)\n";
      return 0;
    }
    std::mt19937_64 gen(r_seed);
    auto sample = [&](double lo, double hi) {
      std::uniform_real_distribution<double> d(lo, hi);
      return d(gen);
    };
    bool all_ok = true;
    for (const auto& l : riccati::catalog(pt)) {
      if (!r_locus.empty() && l.name != r_locus) continue;
      // parameters on the hyperplane
      std::vector<std::pair<std::string, C>> kv;
      for (const auto& n : atlas::param_names(pt))
        kv.emplace_back(n, C(sample(0.25, 0.9), sample(-0.2, 0.2)));
      const auto& pivot = l.constraint.terms.back();
      C acc(l.constraint.constant);
      for (const auto& [name, coeff] : l.constraint.terms)
        if (name != pivot.first)
          for (auto& [k, v] : kv)
            if (k == name) acc += coeff * v;
      for (auto& [k, v] : kv)
        if (k == pivot.first) v = -acc / pivot.second;
      Params p = Params::make(pt, kv);

      double worst = 0.0;
      std::string what;
      if (atlas::capability(pt) == atlas::Capability::FullAtlas) {
        what = "tangency";
        for (const auto& [chart, eq] : l.chart_equations) {
          for (int s = 0; s < 50; ++s) {
            C t(sample(1.4, 2.4), sample(0.3, 1.1));
            C free(sample(0.4, 1.3), sample(-0.5, 0.5));
            atlas::ChartPoint q{chart, C(0), C(0)};
            if (eq.kind == riccati::EqKind::CoordX) q = {chart, eq.g(p, t), free};
            else if (eq.kind == riccati::EqKind::CoordY) q = {chart, free, eq.g(p, t)};
            else q = {chart, free, eq.g(p, t) / free};
            worst = std::max(worst, riccati::invariance_residual(l, p, t, q));
          }
        }
      } else {
        what = "linearization cross-check";
        auto ode = riccati::reduce(l, p);
        if (ode.quadratic(1e-12)) {
          flow::PathSpec path = flow::PathSpec::make({C(0.3, 0.4), C(0.9, 0.4)});
          auto direct = flow::integrate_riccati(ode, path, C(0.1), {});
          auto linear = riccati::solve_via_linear(ode, C(0.1), path, {});
          C xd = direct.back().chart == 0 ? direct.back().x : C(1.0) / direct.back().x;
          worst = std::abs(xd - linear.back().x);
        }
      }
      bool ok = worst < (atlas::capability(pt) == atlas::Capability::FullAtlas ? 1e-10 : 1e-6);
      all_ok = all_ok && ok;
      out << (ok ? "PASS" : "FAIL") << ' ' << r_type << '/' << l.name << ' ' << what
          << " worst residual " << io::fmt17(worst) << '\n';
    }
    return all_ok ? 0 : 1;
  }
  if (rsolve->parsed()) {
    PainleveType pt = atlas::painleve_type_from(r_type);
    Params p = parse_params(pt, r_params);
    auto ode = riccati::reduce(riccati::find_locus(pt, r_locus), p);
    auto assigns = parse_assignments("x0=" + r_x0);
    C x0 = assigns[0].second;
    flow::IntegratorConfig cfg;
    flow::PathSpec path =
        flow::PathSpec::make(parse_path(r_path), ode.pole_set, cfg.min_puncture_distance);
    flow::Trajectory traj = r_method == "direct"
                                ? flow::integrate_riccati(ode, path, x0, cfg)
                                : riccati::solve_via_linear(ode, x0, path, cfg);
    emit_trajectory(traj, r_out, out, err);
    return traj.status == flow::FlowStatus::Completed ? 0 : 1;
  }
  if (rconfig->parsed()) {
    PainleveType pt = atlas::painleve_type_from(r_type);
    auto rep = riccati::config_at_params(pt, parse_params(pt, r_params));
    json pairs = json::array();
    for (const auto& [a, b] : rep.intersections) pairs.push_back({a, b});
    out << json{{"type", r_type},
                {"active", rep.active},
                {"intersections", pairs},
                {"configuration", rep.configuration.str()}}
               .dump(2)
        << '\n';
    return 0;
  }
  if (rrational->parsed()) {
    PainleveType pt = atlas::painleve_type_from(r_type);
    auto pts = riccati::rational_points(pt, parse_params(pt, r_params));
    json arr = json::array();
    for (const auto& s : pts)
      arr.push_back({{"chart", s.chart},
                     {"x", s.x_of_t.str()},
                     {"y", s.y_of_t.str()},
                     {"note", s.note}});
    out << json{{"type", r_type}, {"solutions", arr}}.dump(2) << '\n';
    return 0;
  }
  if (rconfluence->parsed()) {
    auto rep = riccati::confluence_check(atlas::painleve_type_from(r_type));
    out << json{{"type", r_type},
                {"splits_at_k0_zero", rep.splits_at_k0_zero},
                {"factors", rep.factors},
                {"x_reduction_matches_cinf", rep.x_reduction_matches_cinf},
                {"y_reduction_matches_c0", rep.y_reduction_matches_c0},
                {"irreducible_at_k0_one", rep.irreducible_at_k0_one}}
               .dump(2)
        << '\n';
    return 0;
  }
  if (rnonex->parsed()) {
    auto rep = riccati::nonexistence(atlas::painleve_type_from(r_type));
    out << json{{"type", r_type},
                {"catalog_empty", rep.catalog_empty},
                {"complement_types_empty", rep.complement_types_empty},
                {"reason", rep.reason}}
               .dump(2)
        << '\n';
    return 0;
  }

  if (vall->parsed()) {
    auto results = nodal::verify::run_all(v_seed);
    bool all = true;
    for (const auto& r : results) {
      all = all && r.pass;
      out << (r.pass ? "PASS" : "FAIL") << ' ' << r.id << ' ' << r.name << r.detail << '\n';
    }
    return all ? 0 : 1;
  }

  err << "usage error: no action selected\n" << app.help();
  return 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return run_impl(args, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace nodal::cli
