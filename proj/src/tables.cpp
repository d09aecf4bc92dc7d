#include "nodal/tables.hpp"

#include <deque>

#include "nodal/dynkin.hpp"

namespace nodal::rootlat {

namespace {

// Replace component `c` of `t` by the (possibly reducible) type `repl`.
RootSystemType substitute(const RootSystemType& t, size_t c, const RootSystemType& repl) {
  RootSystemType out;
  for (size_t i = 0; i < t.components.size(); ++i) {
    if (i == c) out.add(repl);
    else out.add(t.components[i]);
  }
  return out;
}

// All types obtained from one factor by deleting a node of its diagram, and
// by the Borel-de Siebenthal move (affine-extend, then delete a node).
std::set<RootSystemType> factor_moves(const SimpleType& s) {
  std::set<RootSystemType> out;
  DynkinDiagram fin = diagram_of(s);
  for (int v = 0; v < fin.n; ++v) out.insert(fin.without_node(v).classify_finite());
  if (s.family == Family::A) {
    // the affine extension of A_n is a cycle (a double bond for n=1);
    // deleting any node returns A_n itself
    out.insert(RootSystemType({s}));
  } else {
    DynkinDiagram aff = affine_diagram_of(s);
    for (int v = 0; v < aff.n; ++v) out.insert(aff.without_node(v).classify_finite());
  }
  return out;
}

}  // namespace

const std::set<RootSystemType>& subsystem_closure() {
  static const std::set<RootSystemType> closure = [] {
    RootSystemType e8;
    e8.add(Family::E, 8);
    std::set<RootSystemType> seen{e8};
    std::deque<RootSystemType> frontier{e8};
    while (!frontier.empty()) {
      RootSystemType t = frontier.front();
      frontier.pop_front();
      for (size_t c = 0; c < t.components.size(); ++c) {
        if (c > 0 && t.components[c] == t.components[c - 1]) continue;  // identical factor
        for (const auto& repl : factor_moves(t.components[c])) {
          RootSystemType nt = substitute(t, c, repl);
          if (nt.empty()) continue;
          if (seen.insert(nt).second) frontier.push_back(nt);
        }
      }
    }
    seen.erase(e8);
    return seen;
  }();
  return closure;
}

std::set<RootSystemType> complement_types(const AffineType& r) {
  const SimpleType classical = r.classical_part();
  const int budget = 8 - classical.rank;
  const auto& closure = subsystem_closure();
  std::set<RootSystemType> out;
  for (const auto& l : closure) {
    if (l.rank() > budget) continue;
    RootSystemType sum;
    sum.add(classical);
    sum.add(l);
    if (closure.count(sum)) out.insert(l);
  }
  return out;
}

int euler_min(const SimpleType& t) {
  switch (t.family) {
    case Family::A: return t.rank + 1;
    case Family::D: return t.rank + 2;
    case Family::E: return t.rank + 2;
  }
  return 0;
}

int euler_min(const RootSystemType& t) {
  int e = 0;
  for (const auto& c : t.components) e += euler_min(c);
  return e;
}

std::vector<std::string> fiber_realizations(const SimpleType& t) {
  switch (t.family) {
    case Family::A:
      if (t.rank == 1) return {"I2", "III"};
      if (t.rank == 2) return {"I3", "IV"};
      return {"I" + std::to_string(t.rank + 1)};
    case Family::D:
      return {"I" + std::to_string(t.rank - 4) + "*"};
    case Family::E:
      if (t.rank == 6) return {"IV*"};
      if (t.rank == 7) return {"III*"};
      return {"II*"};
  }
  return {};
}

std::set<RootSystemType> fibered_configs(const AffineType& r) {
  const int fiber_at_infinity = r.classical_part().rank + 2;
  std::set<RootSystemType> out;
  for (const auto& l : complement_types(r))
    if (fiber_at_infinity + euler_min(l) <= 12) out.insert(l);
  return out;
}

Feasibility oguiso_shioda_feasible(const RootSystemType& t) {
  const int e = euler_min(t);
  if (!subsystem_closure().count(t))
    return {false, e, "not a root subsystem of E8"};
  if (e > 12)
    return {false, e, "minimal Euler contribution " + std::to_string(e) + " exceeds 12"};
  return {true, e, "subsystem of E8 with minimal Euler contribution " + std::to_string(e)};
}

int moduli_dim(int r, int s) {
  if (r < 0 || s < 0 || r + s > 10) throw OutOfRange("moduli_dim requires 0 <= r+s <= 10");
  return 10 - (r + s);
}

}  // namespace nodal::rootlat
