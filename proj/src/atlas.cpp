#include "nodal/atlas.hpp"

#include <algorithm>
#include <cmath>

namespace nodal::atlas {

Capability capability(PainleveType pt) {
  switch (pt) {
    case PainleveType::E7t:
    case PainleveType::E6t:
    case PainleveType::D4t: return Capability::FullAtlas;
    case PainleveType::D5t:
    case PainleveType::D6t: return Capability::RiccatiCatalogOnly;
    default: return Capability::NonExistenceOnly;
  }
}

PainleveType painleve_type_from(std::string_view s) {
  if (s == "E7") return PainleveType::E7t;
  if (s == "E6") return PainleveType::E6t;
  if (s == "D4") return PainleveType::D4t;
  if (s == "D5") return PainleveType::D5t;
  if (s == "D6") return PainleveType::D6t;
  if (s == "E8") return PainleveType::E8t;
  if (s == "D7") return PainleveType::D7t;
  if (s == "D8") return PainleveType::D8t;
  throw UnsupportedType("unknown Painleve type '" + std::string(s) + "'");
}

std::string to_string(PainleveType pt) {
  switch (pt) {
    case PainleveType::E7t: return "E7";
    case PainleveType::E6t: return "E6";
    case PainleveType::D4t: return "D4";
    case PainleveType::D5t: return "D5";
    case PainleveType::D6t: return "D6";
    case PainleveType::E8t: return "E8";
    case PainleveType::D7t: return "D7";
    case PainleveType::D8t: return "D8";
  }
  return "?";
}

rootlat::AffineType affine_of(PainleveType pt) {
  return rootlat::AffineType::parse(to_string(pt));
}

const std::vector<C>& punctures(PainleveType pt) {
  static const std::vector<C> none{};
  static const std::vector<C> zero{C(0.0)};
  static const std::vector<C> zero_one{C(0.0), C(1.0)};
  switch (pt) {
    case PainleveType::D4t: return zero_one;
    case PainleveType::D5t:
    case PainleveType::D6t: return zero;
    default: return none;
  }
}

const std::vector<std::string>& param_names(PainleveType pt) {
  static const std::vector<std::string> e7{"alpha"};
  static const std::vector<std::string> two{"k0", "kinf"};
  static const std::vector<std::string> d4{"k0", "k1", "kt", "kinf"};
  static const std::vector<std::string> d5{"k0", "kt", "kinf"};
  static const std::vector<std::string> empty{};
  switch (pt) {
    case PainleveType::E7t: return e7;
    case PainleveType::E6t:
    case PainleveType::D6t: return two;
    case PainleveType::D4t: return d4;
    case PainleveType::D5t: return d5;
    default: return empty;
  }
}

Params Params::make(PainleveType pt, const std::vector<std::pair<std::string, C>>& kv) {
  const auto& names = param_names(pt);
  Params p;
  p.type = pt;
  for (const auto& name : names) {
    auto it = std::find_if(kv.begin(), kv.end(), [&](const auto& e) { return e.first == name; });
    if (it == kv.end()) throw Error("missing parameter '" + name + "' for type " + to_string(pt));
    p.values.emplace_back(name, it->second);
  }
  if (kv.size() != names.size()) throw Error("unexpected parameter for type " + to_string(pt));
  return p;
}

C Params::at(std::string_view name) const {
  for (const auto& [k, v] : values)
    if (k == name) return v;
  throw Error("parameter '" + std::string(name) + "' not present");
}

static void require_full_atlas(PainleveType pt) {
  if (capability(pt) != Capability::FullAtlas)
    throw NoAtlas("no chart atlas for type " + to_string(pt));
}

std::vector<ChartId> charts(PainleveType pt) {
  require_full_atlas(pt);
  switch (pt) {
    case PainleveType::E7t: return {0, 1, 2};
    case PainleveType::E6t: return {0, 1, 2, 3};
    default: return {0, 1, 2, 3, 4, 5};
  }
}

const std::vector<std::pair<ChartId, ChartId>>& adjacent_pairs(PainleveType pt) {
  static const std::vector<std::pair<ChartId, ChartId>> e7{{0, 1}, {0, 2}};
  static const std::vector<std::pair<ChartId, ChartId>> e6{{0, 1}, {0, 2}, {2, 3}};
  static const std::vector<std::pair<ChartId, ChartId>> d4{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {4, 5}};
  require_full_atlas(pt);
  switch (pt) {
    case PainleveType::E7t: return e7;
    case PainleveType::E6t: return e6;
    default: return d4;
  }
}

std::vector<ChartId> adjacent_charts(PainleveType pt, ChartId c) {
  std::vector<ChartId> out;
  for (auto [a, b] : adjacent_pairs(pt)) {
    if (a == c) out.push_back(b);
    if (b == c) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ChartId> chain_from_zero(PainleveType pt, ChartId c) {
  require_full_atlas(pt);
  if (pt == PainleveType::E6t && c == 3) return {0, 2, 3};
  if (pt == PainleveType::D4t && c == 5) return {0, 4, 5};
  if (c == 0) return {0};
  return {0, c};
}

namespace {

template <class S>
S nonzero(const S& z, const char* what) {
  if (value_of(z) == C(0.0)) throw OutsideOverlap(std::string(what) + " vanishes");
  return z;
}

// ---- transitions (the published transformation tables) --------------------

template <class S>
std::pair<S, S> transition_impl(PainleveType pt, ChartId from, ChartId to, const Params& p, S t,
                                std::pair<S, S> q) {
  const auto [x, y] = q;
  auto bad = [&]() -> std::pair<S, S> {
    throw NotAdjacent("no published transition " + std::to_string(from) + "->" +
                      std::to_string(to) + " for type " + to_string(pt));
  };
  if (pt == PainleveType::E7t) {
    const C alpha = p.at("alpha");
    if (from == 0 && to == 1)
      return {S(1.0) / nonzero(x, "x0"), -(alpha + 0.5) * x - x * x * y};
    if (from == 1 && to == 0)
      return {S(1.0) / nonzero(x, "x1"), x * ((-alpha - 0.5) - x * y)};
    if (from == 0 && to == 2) {
      nonzero(x, "x0");
      return {S(1.0) / x, alpha * x + t * x * x + 2.0 * x * x * x * x - x * x * y - 0.5 * x};
    }
    if (from == 2 && to == 0) {
      nonzero(x, "x2");
      return {S(1.0) / x, 2.0 / (x * x) + t + (alpha - 0.5) * x - y * x * x};
    }
    return bad();
  }
  if (pt == PainleveType::E6t) {
    const C k0 = p.at("k0"), kinf = p.at("kinf");
    if (from == 0 && to == 1) return {y * (k0 - x * y), S(1.0) / nonzero(y, "y0")};
    if (from == 1 && to == 0) return {y * (k0 - x * y), S(1.0) / nonzero(y, "y1")};
    if (from == 0 && to == 2) return {S(1.0) / nonzero(x, "x0"), x * (kinf - x * y)};
    if (from == 2 && to == 0) return {S(1.0) / nonzero(x, "x2"), x * (kinf - x * y)};
    if (from == 2 && to == 3) {
      nonzero(x, "x2");
      const C s = 2.0 * kinf - k0 + 1.0;
      return {x, 0.5 / (x * x * x) + t / (x * x) - s / x + y};
    }
    if (from == 3 && to == 2) {
      nonzero(x, "x3");
      const C s = 2.0 * kinf - k0 + 1.0;
      return {x, -0.5 / (x * x * x) - t / (x * x) + s / x + y};
    }
    return bad();
  }
  if (pt == PainleveType::D4t) {
    const C k0 = p.at("k0"), k1 = p.at("k1"), kt = p.at("kt"), kinf = p.at("kinf");
    const C half_sum = 0.5 * (k0 + k1 + kt - 1.0 + kinf);
    if (from == 0 && to == 1) return {y * (k0 - x * y), S(1.0) / nonzero(y, "y0")};
    if (from == 1 && to == 0) return {y * (k0 - x * y), S(1.0) / nonzero(y, "y1")};
    if (from == 0 && to == 2) return {y * (k1 + y - x * y), S(1.0) / nonzero(y, "y0")};
    if (from == 2 && to == 0) return {1.0 + y * (k1 - x * y), S(1.0) / nonzero(y, "y2")};
    if (from == 0 && to == 3) return {y * (kt + t * y - x * y), S(1.0) / nonzero(y, "y0")};
    if (from == 3 && to == 0) return {t + y * (kt - x * y), S(1.0) / nonzero(y, "y3")};
    if (from == 0 && to == 4) {
      nonzero(x, "x0");
      return {S(1.0) / x, x * (half_sum - x * y)};
    }
    if (from == 4 && to == 0) {
      nonzero(x, "x4");
      return {S(1.0) / x, x * (half_sum - x * y)};
    }
    if (from == 4 && to == 5) return {y * (kinf - x * y), S(1.0) / nonzero(y, "y4")};
    if (from == 5 && to == 4) return {y * (kinf - x * y), S(1.0) / nonzero(y, "y5")};
    return bad();
  }
  return bad();
}

// ---- pushed-forward polynomial fields (chart != 0) ------------------------
// Derived by transporting the chart-0 system through the transition chain and
// clearing removable factors; validated against the dual-number pushforward
// by consistency_residual.

std::pair<C, C> e7_field(ChartId c, C t, C x, C y, C alpha) {
  switch (c) {
    case 1: {
      const C nx = 4.0*alpha*x*x*x + 2.0*t*x*x + 4.0*x*x*x*x*y + 2.0*x*x*x + 4.0;
      const C ny = -4.0*alpha*alpha*x - 2.0*alpha*t - 12.0*alpha*x*x*y - 4.0*alpha*x - 4.0*t*x*y - t - 8.0*x*x*x*y*y - 6.0*x*x*y - x;
      return {nx / 4.0, ny / 4.0};
    }
    case 2: {
      const C nx = -4.0*alpha*x*x*x - 2.0*t*x*x + 4.0*x*x*x*x*y + 2.0*x*x*x - 4.0;
      const C ny = -4.0*alpha*alpha*x - 2.0*alpha*t + 12.0*alpha*x*x*y + 4.0*alpha*x + 4.0*t*x*y + t - 8.0*x*x*x*y*y - 6.0*x*x*y - x;
      return {nx / 4.0, ny / 4.0};
    }
    default: throw Error("E7 chart out of range");
  }
}

std::pair<C, C> e6_field(ChartId c, C t, C x, C y, C k0, C kinf) {
  switch (c) {
    case 1: {
      const C nx = -k0*k0 + k0*kinf + 4.0*k0*x*y - 2.0*kinf*x*y + 2.0*t*x - 3.0*x*x*y*y;
      const C ny = -2.0*k0*y*y + kinf*y*y - 2.0*t*y + 2.0*x*y*y*y + 2.0;
      return {nx, ny};
    }
    case 2: {
      const C nx = 2.0*k0*x*x - 4.0*kinf*x*x + 2.0*t*x + 4.0*x*x*x*y + 1.0;
      const C ny = 2.0*k0*kinf - 4.0*k0*x*y - 2.0*kinf*kinf + 8.0*kinf*x*y - 2.0*t*y - 6.0*x*x*y*y;
      return {nx, ny};
    }
    case 3: {
      const C nx = -4.0*k0*x*x + 8.0*kinf*x*x - 4.0*t*x + 8.0*x*x*x*y + 8.0*x*x - 2.0;
      const C ny = 4.0*k0*kinf + 8.0*k0*x*y + 4.0*k0 - 4.0*kinf*kinf - 16.0*kinf*x*y - 8.0*kinf + 4.0*t*y - 12.0*x*x*y*y - 16.0*x*y - 4.0;
      return {nx / 2.0, ny / 2.0};
    }
    default: throw Error("E6 chart out of range");
  }
}

std::pair<C, C> d4_field(ChartId c, C t, C x, C y, C k0, C k1, C kt, C kinf) {
  const C den = 4.0 * t * (t - 1.0);
  switch (c) {
    case 1: {
      const C nx = k0*k0*k0 - 2.0*k0*k0*k1 - 2.0*k0*k0*kt - 10.0*k0*k0*x*y + 2.0*k0*k0 + k0*k1*k1 + 2.0*k0*k1*kt + 12.0*k0*k1*x*y - 2.0*k0*k1 - k0*kinf*kinf + k0*kt*kt + 12.0*k0*kt*x*y - 2.0*k0*kt + 4.0*k0*t*x + 24.0*k0*x*x*y*y - 12.0*k0*x*y + 4.0*k0*x + k0 - 2.0*k1*k1*x*y - 4.0*k1*kt*x*y - 4.0*k1*t*x - 12.0*k1*x*x*y*y + 4.0*k1*x*y + 2.0*kinf*kinf*x*y - 2.0*kt*kt*x*y - 12.0*kt*x*x*y*y + 4.0*kt*x*y - 4.0*kt*x - 8.0*t*x*x*y - 16.0*x*x*x*y*y*y + 12.0*x*x*y*y - 8.0*x*x*y - 2.0*x*y + 4.0*x;
      const C ny = 5.0*k0*k0*y*y - 6.0*k0*k1*y*y - 6.0*k0*kt*y*y - 4.0*k0*t*y - 16.0*k0*x*y*y*y + 6.0*k0*y*y - 4.0*k0*y + k1*k1*y*y + 2.0*k1*kt*y*y + 4.0*k1*t*y + 8.0*k1*x*y*y*y - 2.0*k1*y*y - kinf*kinf*y*y + kt*kt*y*y + 8.0*kt*x*y*y*y - 2.0*kt*y*y + 4.0*kt*y + 8.0*t*x*y*y + 4.0*t + 12.0*x*x*y*y*y*y - 8.0*x*y*y*y + 8.0*x*y*y + y*y - 4.0*y;
      return {nx / den, ny / den};
    }
    case 2: {
      const C nx = k0*k0*k1 - 2.0*k0*k0*x*y - 2.0*k0*k1*k1 + 2.0*k0*k1*kt + 12.0*k0*k1*x*y - 2.0*k0*k1 - 4.0*k0*kt*x*y - 4.0*k0*t*x - 12.0*k0*x*x*y*y + 4.0*k0*x*y + 4.0*k0*x + k1*k1*k1 - 2.0*k1*k1*kt - 10.0*k1*k1*x*y + 2.0*k1*k1 - k1*kinf*kinf + k1*kt*kt + 12.0*k1*kt*x*y - 2.0*k1*kt + 4.0*k1*t*x + 24.0*k1*x*x*y*y - 12.0*k1*x*y - 8.0*k1*x + k1 + 2.0*kinf*kinf*x*y - 2.0*kt*kt*x*y - 12.0*kt*x*x*y*y + 4.0*kt*x*y + 4.0*kt*x - 8.0*t*x*x*y - 16.0*x*x*x*y*y*y + 12.0*x*x*y*y + 16.0*x*x*y - 2.0*x*y - 4.0*x;
      const C ny = k0*k0*y*y - 6.0*k0*k1*y*y + 2.0*k0*kt*y*y + 4.0*k0*t*y + 8.0*k0*x*y*y*y - 2.0*k0*y*y - 4.0*k0*y + 5.0*k1*k1*y*y - 6.0*k1*kt*y*y - 4.0*k1*t*y - 16.0*k1*x*y*y*y + 6.0*k1*y*y + 8.0*k1*y - kinf*kinf*y*y + kt*kt*y*y + 8.0*kt*x*y*y*y - 2.0*kt*y*y - 4.0*kt*y + 8.0*t*x*y*y - 4.0*t + 12.0*x*x*y*y*y*y - 8.0*x*y*y*y - 16.0*x*y*y + y*y + 4.0*y + 4.0;
      return {nx / den, ny / den};
    }
    case 3: {
      const C nx = k0*k0*kt - 2.0*k0*k0*x*y + 2.0*k0*k1*kt - 4.0*k0*k1*x*y - 2.0*k0*kt*kt + 12.0*k0*kt*x*y - 2.0*k0*kt + 4.0*k0*t*x - 12.0*k0*x*x*y*y + 4.0*k0*x*y - 4.0*k0*x + k1*k1*kt - 2.0*k1*k1*x*y - 2.0*k1*kt*kt + 12.0*k1*kt*x*y - 2.0*k1*kt + 4.0*k1*t*x - 12.0*k1*x*x*y*y + 4.0*k1*x*y - kinf*kinf*kt + 2.0*kinf*kinf*x*y + kt*kt*kt - 10.0*kt*kt*x*y + 2.0*kt*kt - 8.0*kt*t*x + 24.0*kt*x*x*y*y - 12.0*kt*x*y + 4.0*kt*x + kt + 16.0*t*x*x*y - 8.0*t*x - 16.0*x*x*x*y*y*y + 12.0*x*x*y*y - 8.0*x*x*y - 2.0*x*y + 4.0*x;
      const C ny = k0*k0*y*y + 2.0*k0*k1*y*y - 6.0*k0*kt*y*y - 4.0*k0*t*y + 8.0*k0*x*y*y*y - 2.0*k0*y*y + 4.0*k0*y + k1*k1*y*y - 6.0*k1*kt*y*y - 4.0*k1*t*y + 8.0*k1*x*y*y*y - 2.0*k1*y*y - kinf*kinf*y*y + 5.0*kt*kt*y*y + 8.0*kt*t*y - 16.0*kt*x*y*y*y + 6.0*kt*y*y - 4.0*kt*y + 4.0*t*t - 16.0*t*x*y*y + 8.0*t*y - 4.0*t + 12.0*x*x*y*y*y*y - 8.0*x*y*y*y + 8.0*x*y*y + y*y - 4.0*y;
      return {nx / den, ny / den};
    }
    case 4: {
      const C nx = -4.0*k1*t*x*x + 4.0*k1*x - 4.0*kinf*t*x*x + 4.0*kinf*t*x + 4.0*kinf*x - 4.0*kinf - 4.0*kt*t*x*x + 4.0*kt*t*x + 8.0*t*x*x*x*y - 8.0*t*x*x*y + 4.0*t*x*x - 4.0*t*x - 8.0*x*x*y + 8.0*x*y;
      const C ny = k0*k0*t - k1*k1*t - 2.0*k1*kinf*t - 2.0*k1*kt*t + 8.0*k1*t*x*y + 2.0*k1*t - 4.0*k1*y - kinf*kinf*t - 2.0*kinf*kt*t + 8.0*kinf*t*x*y - 4.0*kinf*t*y + 2.0*kinf*t - 4.0*kinf*y - kt*kt*t + 8.0*kt*t*x*y - 4.0*kt*t*y + 2.0*kt*t - 12.0*t*x*x*y*y + 8.0*t*x*y*y - 8.0*t*x*y + 4.0*t*y - t + 8.0*x*y*y - 4.0*y*y;
      return {nx / den, ny / den};
    }
    case 5: {
      const C nx = -k0*k0*kinf*t + 2.0*k0*k0*t*x*y + k1*k1*kinf*t - 2.0*k1*k1*t*x*y - 2.0*k1*kinf*kinf*t + 2.0*k1*kinf*kt*t + 12.0*k1*kinf*t*x*y - 2.0*k1*kinf*t - 4.0*k1*kt*t*x*y - 12.0*k1*t*x*x*y*y + 4.0*k1*t*x*y - 4.0*k1*x + kinf*kinf*kinf*t - 2.0*kinf*kinf*kt*t - 10.0*kinf*kinf*t*x*y + 2.0*kinf*kinf*t + kinf*kt*kt*t + 12.0*kinf*kt*t*x*y - 2.0*kinf*kt*t + 24.0*kinf*t*x*x*y*y - 12.0*kinf*t*x*y + 4.0*kinf*t*x + kinf*t + 4.0*kinf*x - 2.0*kt*kt*t*x*y - 12.0*kt*t*x*x*y*y + 4.0*kt*t*x*y - 4.0*kt*t*x - 16.0*t*x*x*x*y*y*y + 12.0*t*x*x*y*y - 8.0*t*x*x*y - 2.0*t*x*y + 4.0*t*x - 8.0*x*x*y;
      const C ny = -k0*k0*t*y*y + k1*k1*t*y*y - 6.0*k1*kinf*t*y*y + 2.0*k1*kt*t*y*y + 8.0*k1*t*x*y*y*y - 2.0*k1*t*y*y + 4.0*k1*y + 5.0*kinf*kinf*t*y*y - 6.0*kinf*kt*t*y*y - 16.0*kinf*t*x*y*y*y + 6.0*kinf*t*y*y - 4.0*kinf*t*y - 4.0*kinf*y + kt*kt*t*y*y + 8.0*kt*t*x*y*y*y - 2.0*kt*t*y*y + 4.0*kt*t*y + 12.0*t*x*x*y*y*y*y - 8.0*t*x*y*y*y + 8.0*t*x*y*y + t*y*y - 4.0*t*y + 8.0*x*y*y + 4.0;
      return {nx / den, ny / den};
    }
    default: throw Error("D4 chart out of range");
  }
}

void check_puncture(PainleveType pt, C t) {
  for (const C& p : punctures(pt))
    if (t == p) throw PunctureHit("t = " + std::to_string(p.real()) + " is a puncture");
}

}  // namespace

std::pair<C, C> vf_chart0(PainleveType pt, const Params& p, C t, C x, C y) {
  require_full_atlas(pt);
  check_puncture(pt, t);
  switch (pt) {
    case PainleveType::E7t: {
      const C alpha = p.at("alpha");
      return {y - x * x - 0.5 * t, 2.0 * x * y + alpha + 0.5};
    }
    case PainleveType::E6t: {
      const C k0 = p.at("k0"), kinf = p.at("kinf");
      return {4.0 * x * y - x * x - 2.0 * t * x - 2.0 * k0,
              -2.0 * y * y + 2.0 * (x + t) * y - kinf};
    }
    default: {
      // denominators cleared: the bracketed form of the x-equation has
      // removable singularities exactly on the Riccati loci x = 0, 1, t
      const C k0 = p.at("k0"), k1 = p.at("k1"), kt = p.at("kt"), kinf = p.at("kinf");
      const C den = t * (t - 1.0);
      const C ax = 2.0 * x * (x - 1.0) * (x - t) * y - k0 * (x - 1.0) * (x - t) -
                   k1 * x * (x - t) - (kt - 1.0) * x * (x - 1.0);
      const C s = k0 + k1 + kt - 1.0;
      const C by = (3.0 * x * x - 2.0 * (t + 1.0) * x + t) * y * y -
                   (2.0 * s * x - (k0 + k1) * t - k0 - kt + 1.0) * y +
                   0.25 * (s * s - kinf * kinf);
      return {ax / den, -by / den};
    }
  }
}

std::pair<C, C> transition(PainleveType pt, ChartId from, ChartId to, const Params& p, C t,
                           std::pair<C, C> q) {
  require_full_atlas(pt);
  return transition_impl<C>(pt, from, to, p, t, q);
}

std::pair<Dual, Dual> transition(PainleveType pt, ChartId from, ChartId to, const Params& p,
                                 Dual t, std::pair<Dual, Dual> q) {
  require_full_atlas(pt);
  return transition_impl<Dual>(pt, from, to, p, t, q);
}

std::pair<C, C> vf_any_chart(PainleveType pt, ChartId c, const Params& p, C t, C x, C y) {
  require_full_atlas(pt);
  if (c == 0) return vf_chart0(pt, p, t, x, y);
  check_puncture(pt, t);
  switch (pt) {
    case PainleveType::E7t: return e7_field(c, t, x, y, p.at("alpha"));
    case PainleveType::E6t: return e6_field(c, t, x, y, p.at("k0"), p.at("kinf"));
    default:
      return d4_field(c, t, x, y, p.at("k0"), p.at("k1"), p.at("kt"), p.at("kinf"));
  }
}

double consistency_residual(PainleveType pt, ChartId i, ChartId j, const Params& p, C t,
                            std::pair<C, C> q) {
  require_full_atlas(pt);
  if (i == j) return 0.0;
  auto [vx, vy] = vf_any_chart(pt, i, p, t, q.first, q.second);
  // one dual evaluation carries J*v + dT/dt across the transition
  auto pushed = transition_impl<Dual>(pt, i, j, p, Dual(t, C(1.0)),
                                      {Dual(q.first, vx), Dual(q.second, vy)});
  auto [wx, wy] = vf_any_chart(pt, j, p, t, pushed.first.v, pushed.second.v);
  return std::hypot(std::abs(wx - pushed.first.d), std::abs(wy - pushed.second.d));
}

}  // namespace nodal::atlas
