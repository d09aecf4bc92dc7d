#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nodal/atlas.hpp"
#include "nodal/flow.hpp"
#include "nodal/riccati_ode.hpp"
#include "nodal/roots.hpp"

namespace nodal::riccati {

using atlas::ChartId;
using atlas::ChartPoint;
using atlas::PainleveType;
using atlas::Params;

// Affine-linear function of the named parameters: constant + sum coeff*param.
struct ParamAffine {
  double constant = 0.0;
  std::vector<std::pair<std::string, double>> terms;

  C eval(const Params& p) const;
  bool vanishes(const Params& p, double tol = 1e-9) const { return std::abs(eval(p)) <= tol; }
};

enum class EqKind { CoordX, CoordY, ProductXY };

// Defining equation of a locus in one chart:
//   CoordX:    x - g(t) = 0,   CoordY: y - g(t) = 0,
//   ProductXY: x*y - g = 0  (g constant in t),
// where g(t) = g0 + g1*t with parameter-affine coefficients.
struct ChartEquation {
  EqKind kind;
  ParamAffine g0, g1;
  std::string text;

  C g(const Params& p, C t) const { return g0.eval(p) + g1.eval(p) * t; }
  C dg_dt(const Params& p) const { return g1.eval(p); }
  // value of the defining function at a point
  C value(const Params& p, C t, C x, C y) const;
};

// An invariant nodal-curve locus: parameter hyperplane + per-chart equations.
struct LocusSpec {
  PainleveType painleve_type;
  std::string name;             // "C0", "C1", "Ct", "Ceps", "Cinf", "Ck0=kinf", ...
  ParamAffine constraint;
  std::string constraint_text;  // e.g. "k0 + k1 + kt + kinf - 1 = 0"
  // entries as the locus family degenerates (the E6~ confluence curve splits
  // into C0 u Cinf when this parameter vanishes)
  std::optional<std::string> nondegenerate_param;
  std::map<ChartId, ChartEquation> chart_equations;
  ChartId reduced_chart = 0;
  char reduced_coord = 'x';     // coordinate carrying the reduced dynamics
  std::string riccati_a, riccati_b, riccati_c;  // symbolic display forms
};

// Catalog per type: E7~ 1, E6~ 3, D4~ 5, D5~ 3, D6~ 4, otherwise empty.
const std::vector<LocusSpec>& catalog(PainleveType pt);
const LocusSpec& find_locus(PainleveType pt, std::string_view name);

// Scalar Riccati equation on the reduced coordinate, with the stated
// parameter values bound; coefficients are exact rational functions of t.
RiccatiODE reduce(const LocusSpec& l, const Params& p);

// The confluence locus of E6~ reduces on both coordinates; the y-equation is
// the secondary reduction (empty for every other locus).
std::optional<RiccatiODE> reduce_secondary(const LocusSpec& l, const Params& p);

// |d/dt(defining equation)| along the atlas field at an on-locus point.
// Requires a full atlas; throws NoAtlas for D5~/D6~.
double invariance_residual(const LocusSpec& l, const Params& p, C t, ChartPoint q);

// Integration through the linearization u'' + p u' + q u = 0, mapped back
// through x = -u'/(a u).  Samples with |u| at pole scale are recorded in
// pole_flags instead of being emitted.
flow::Trajectory solve_via_linear(const RiccatiODE& ode, C x_init, const flow::PathSpec& path,
                                  const flow::IntegratorConfig& cfg);

// A constant or polynomially-moving solution obtained from a locus
// intersection (plus the hard-coded E7~ alpha = 0 rational solution).
struct RationalSolution {
  ChartId chart;
  Poly x_of_t, y_of_t;
  std::string note;
};

std::vector<RationalSolution> rational_points(PainleveType pt, const Params& p);

struct ConfigReport {
  std::vector<std::string> active;                              // locus names
  std::vector<std::pair<std::string, std::string>> intersections;
  rootlat::RootSystemType configuration;
};

// Active loci at the given parameters and the Dynkin type of their
// intersection graph.
ConfigReport config_at_params(PainleveType pt, const Params& p);

struct ConfluenceReport {
  bool splits_at_k0_zero;             // x0*y0 - k0 becomes x0*y0 = 0
  std::vector<std::string> factors;   // {"x0", "y0"}
  bool x_reduction_matches_cinf;      // Eq on x at k0=0 equals the Cinf Riccati
  bool y_reduction_matches_c0;        // Eq on y at k0=0 equals the C0 Riccati
  bool irreducible_at_k0_one;
};

ConfluenceReport confluence_check(PainleveType pt);  // NotApplicable unless E6~

struct NonexistenceReport {
  PainleveType type;
  bool catalog_empty;
  bool complement_types_empty;
  std::string reason;
};

// Non-existence report for E8~/D7~/D8~; NotApplicable for the others.
NonexistenceReport nonexistence(PainleveType pt);

}  // namespace nodal::riccati
