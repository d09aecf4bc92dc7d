#pragma once

#include <vector>

#include "nodal/dynkin.hpp"
#include "nodal/roots.hpp"

namespace nodal::rootlat {

// Integer Gram matrix of a candidate simple-root basis.  `negative` selects
// the geometric sign convention (diagonal -2, bonds +1); the default is the
// positive root-lattice convention (diagonal +2, bonds -1).
struct GramMatrix {
  std::vector<std::vector<long long>> a;
  bool negative = false;

  int size() const { return static_cast<int>(a.size()); }
};

// Decodes the ADE type of the diagram whose nodes are the basis vectors and
// whose bonds join pairs of inner product -1 (positive convention).
// Throws NotSimplyLaced for |off-diagonal| > 1 or diagonal != +/-2, and
// NotADE when the bond pattern is not a disjoint union of ADE diagrams
// (this includes off-diagonal entries of the wrong sign, which mean the
// basis is not a simple system).
RootSystemType classify_gram(const GramMatrix& g);

// Exact integer determinant (Bareiss elimination).
long long gram_det(const GramMatrix& g);

}  // namespace nodal::rootlat
