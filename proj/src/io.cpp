#include "nodal/io.hpp"

#include <cstdio>
#include <map>
#include <ostream>
#include <sstream>

#include "nodal/tables.hpp"

namespace nodal::io {

namespace {

std::map<int, std::vector<std::string>> table2_rows() {
  std::map<int, std::vector<std::string>> rows;
  for (int r = 1; r <= 8; ++r) rows[r] = {};
  for (const auto& t : rootlat::subsystem_closure()) rows[t.rank()].push_back(t.str());
  return rows;  // sets are ordered, so rows come out sorted deterministically
}

std::vector<std::string> type_strings(const std::set<rootlat::RootSystemType>& s) {
  std::vector<std::string> out;
  for (const auto& t : s) out.push_back(t.str());
  return out;
}

}  // namespace

json table_json(int which) {
  json rows = json::array();
  if (which == 2) {
    for (auto& [rank, types] : table2_rows()) rows.push_back({{"key", rank}, {"types", types}});
  } else if (which == 3 || which == 4) {
    for (const auto& aff : rootlat::painleve_affine_types()) {
      auto types = which == 3 ? rootlat::complement_types(aff) : rootlat::fibered_configs(aff);
      rows.push_back({{"key", aff.base.str()}, {"types", type_strings(types)}});
    }
  } else {
    throw Error("no table " + std::to_string(which));
  }
  return json{{"table", std::to_string(which)}, {"rows", rows}};
}

std::string table_text(int which) {
  std::ostringstream os;
  json j = table_json(which);
  for (const auto& row : j["rows"]) {
    if (which == 2) os << "rank " << row["key"].get<int>() << ": ";
    else os << row["key"].get<std::string>() << ": ";
    const auto& types = row["types"];
    if (types.empty()) {
      os << "none";
    } else {
      for (size_t i = 0; i < types.size(); ++i)
        os << (i ? ", " : "") << types[i].get<std::string>();
    }
    os << '\n';
  }
  if (which == 4) {
    // A1 and A2 factors are realized by two Kodaira fiber types each; the
    // table lists lattice types only
    for (int rank : {1, 2}) {
      rootlat::SimpleType s(rootlat::Family::A, rank);
      auto fibers = rootlat::fiber_realizations(s);
      os << "note: " << s.str() << " fiber realizations: " << fibers[0] << " or " << fibers[1]
         << '\n';
    }
  }
  return os.str();
}

json embedding_json(const rootlat::RootEmbedding& emb) {
  json vecs = json::array();
  for (const auto& v : emb.vectors) vecs.push_back(std::vector<int>(v.begin(), v.end()));
  return json{{"type", emb.type.str()}, {"vectors", vecs}};
}

json loci_json(atlas::PainleveType pt) {
  json loci = json::array();
  for (const auto& l : riccati::catalog(pt)) {
    json charts = json::object();
    for (const auto& [c, eq] : l.chart_equations) charts[std::to_string(c)] = eq.text;
    loci.push_back({{"name", l.name},
                    {"constraint", l.constraint_text},
                    {"charts", charts},
                    {"reduced_chart", l.reduced_chart},
                    {"reduced_coordinate", std::string(1, l.reduced_coord)},
                    {"riccati", {{"a", l.riccati_a}, {"b", l.riccati_b}, {"c", l.riccati_c}}}});
  }
  return json{{"type", atlas::to_string(pt)}, {"loci", loci}};
}

json opcheck_json(const rootlat::OpCheckReport& rep) {
  json j{{"y_dot_yi", rep.y_dot_yi},
         {"y_squared", rep.y_squared},
         {"is_op_pair", rep.is_op_pair}};
  if (rep.has_complement_report) {
    j["y_dot_o"] = rep.y_dot_o;
    j["complement"] = json{{"gram", rep.complement_gram},
                           {"det", rep.complement_det},
                           {"even", rep.complement_even},
                           {"type", rep.complement_type},
                           {"root_count", rep.complement_root_count}};
  }
  return j;
}

rootlat::PicardConfig picard_from_json(const json& j) {
  rootlat::PicardConfig cfg;
  auto read_class = [](const json& arr) {
    if (!arr.is_array() || arr.size() != 10)
      throw MalformedConfig("class vectors must have 10 integer entries");
    rootlat::Class10 c{};
    for (int i = 0; i < 10; ++i) c[i] = arr[i].get<long long>();
    return c;
  };
  if (!j.contains("components")) throw MalformedConfig("missing 'components'");
  for (const auto& comp : j["components"]) {
    cfg.components.push_back(read_class(comp.at("vector")));
    cfg.multiplicities.push_back(comp.value("multiplicity", 1LL));
  }
  if (j.contains("anticanonical")) {
    cfg.anticanonical = read_class(j["anticanonical"]);
  } else {
    for (size_t i = 0; i < cfg.components.size(); ++i)
      for (int k = 0; k < 10; ++k)
        cfg.anticanonical[k] += cfg.multiplicities[i] * cfg.components[i][k];
  }
  if (j.contains("section")) cfg.section = read_class(j["section"]);
  return cfg;
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_trajectory_csv(std::ostream& os, const flow::Trajectory& traj) {
  os << "t_re,t_im,chart,x_re,x_im,y_re,y_im\n";
  for (const auto& s : traj.samples) {
    os << fmt17(s.t.real()) << ',' << fmt17(s.t.imag()) << ',' << s.chart << ','
       << fmt17(s.x.real()) << ',' << fmt17(s.x.imag()) << ',' << fmt17(s.y.real()) << ','
       << fmt17(s.y.imag()) << '\n';
  }
}

json trajectory_events_json(const flow::Trajectory& traj) {
  json events = json::array();
  for (const auto& e : traj.events)
    events.push_back({{"t_re", e.t.real()}, {"t_im", e.t.imag()}, {"from", e.from}, {"to", e.to}});
  json poles = json::array();
  for (const auto& t : traj.pole_flags) poles.push_back({{"t_re", t.real()}, {"t_im", t.imag()}});
  const char* status = traj.status == flow::FlowStatus::Completed     ? "completed"
                       : traj.status == flow::FlowStatus::StepLimit   ? "step_limit"
                                                                      : "no_chart_available";
  return json{{"status", status},
              {"samples", traj.samples.size()},
              {"chart_switches", events},
              {"pole_flags", poles}};
}

}  // namespace nodal::io
