#pragma once

#include <set>
#include <string>
#include <vector>

#include "nodal/roots.hpp"

namespace nodal::rootlat {

// Types of all nonzero proper root subsystems of E8: the fixpoint closure of
// {E8} under the Borel-de Siebenthal move (replace a factor by its affine
// extension, delete one node) and plain node deletion, applied factor by
// factor.  E8 itself and the empty type are excluded.
const std::set<RootSystemType>& subsystem_closure();

// Nonempty L with classical_part(r) + L still a subsystem of E8; equivalently
// the possible nodal-curve configurations for a pair of affine type r.
std::set<RootSystemType> complement_types(const AffineType& r);

// Minimal local Euler number of a Kodaira fiber realizing one factor:
// A_k -> k+1 (fiber I_{k+1}), D_k -> k+2 (I*_{k-4}), E_k -> k+2.
int euler_min(const SimpleType& t);
int euler_min(const RootSystemType& t);

// Kodaira fiber symbols realizing a factor.  A1 and A2 each admit two
// (I2/III and I3/IV); all other factors are determined.
std::vector<std::string> fiber_realizations(const SimpleType& t);

// complement_types filtered by the Euler bound: the affine fiber at infinity
// contributes rank+2, and the total over a rational elliptic surface is 12.
std::set<RootSystemType> fibered_configs(const AffineType& r);

struct Feasibility {
  bool feasible;
  int euler;  // euler_min of the type (fiber at infinity not included)
  std::string reason;
};

// Realizability as the reducible-fiber lattice of a rational elliptic
// surface: membership in the closure plus euler_min <= 12.
Feasibility oguiso_shioda_feasible(const RootSystemType& t);

// Deformation-space dimension 10 - (r + s); requires 0 <= r+s <= 10.
int moduli_dim(int r, int s);

}  // namespace nodal::rootlat
