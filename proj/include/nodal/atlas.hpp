#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nodal/dual.hpp"
#include "nodal/errors.hpp"
#include "nodal/roots.hpp"

namespace nodal::atlas {

using C = std::complex<double>;

enum class PainleveType { E7t, E6t, D4t, D5t, D6t, E8t, D7t, D8t };

enum class Capability { FullAtlas, RiccatiCatalogOnly, NonExistenceOnly };

Capability capability(PainleveType pt);
PainleveType painleve_type_from(std::string_view s);  // "E7", "E6", ...
std::string to_string(PainleveType pt);
rootlat::AffineType affine_of(PainleveType pt);

// Punctures of the time domain: none for E7~/E6~, {0} for D5~/D6~, {0,1} for D4~.
const std::vector<C>& punctures(PainleveType pt);

// Named complex parameters, validated against the type's schema
// (E7~: alpha; E6~: k0,kinf; D4~: k0,k1,kt,kinf; D5~: k0,kt,kinf; D6~: k0,kinf).
struct Params {
  PainleveType type;
  std::vector<std::pair<std::string, C>> values;  // schema order

  static Params make(PainleveType pt, const std::vector<std::pair<std::string, C>>& kv);
  C at(std::string_view name) const;
};

const std::vector<std::string>& param_names(PainleveType pt);

using ChartId = int;

struct ChartPoint {
  ChartId chart = 0;
  C x{};
  C y{};
};

// Chart list of a full atlas; NoAtlas for catalog-only / nonexistence types.
std::vector<ChartId> charts(PainleveType pt);

// Unordered adjacent chart pairs with published transition formulas.
const std::vector<std::pair<ChartId, ChartId>>& adjacent_pairs(PainleveType pt);
std::vector<ChartId> adjacent_charts(PainleveType pt, ChartId c);

// Chart chain 0 -> ... -> c through adjacent steps (e.g. {0,2,3} for E6~ chart 3).
std::vector<ChartId> chain_from_zero(PainleveType pt, ChartId c);

// The system in chart 0 exactly as published.
std::pair<C, C> vf_chart0(PainleveType pt, const Params& p, C t, C x, C y);

// Coordinates of the same phase point in an adjacent chart.  Throws
// NotAdjacent for unlisted pairs and OutsideOverlap when a denominator
// coordinate vanishes.  The Dual overload carries derivatives through.
std::pair<C, C> transition(PainleveType pt, ChartId from, ChartId to, const Params& p, C t,
                           std::pair<C, C> q);
std::pair<Dual, Dual> transition(PainleveType pt, ChartId from, ChartId to, const Params& p,
                                 Dual t, std::pair<Dual, Dual> q);

// The global vector field expressed in chart c.  Chart 0 equals vf_chart0;
// the other charts use the pushed-forward polynomial form, which is regular
// on the whole chart (including the loci where the chain back to chart 0
// leaves the overlap).
std::pair<C, C> vf_any_chart(PainleveType pt, ChartId c, const Params& p, C t, C x, C y);

// || vf(j, T(q)) - [J*vf(i,q) + dT/dt] ||  for adjacent i,j; both the Jacobian
// and the explicit time derivative come from one dual-number evaluation.
double consistency_residual(PainleveType pt, ChartId i, ChartId j, const Params& p, C t,
                            std::pair<C, C> q);

}  // namespace nodal::atlas
