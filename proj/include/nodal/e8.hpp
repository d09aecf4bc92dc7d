#pragma once

#include <array>
#include <vector>

#include "nodal/gram.hpp"
#include "nodal/roots.hpp"

namespace nodal::rootlat {

// Roots are stored in doubled coordinates so that both shape families
// (+-e_i +- e_j and the half-integer vectors) are exact integers; inner
// products in lattice units are dot/4.
using RootVec = std::array<int, 8>;

long long dot_doubled(const RootVec& a, const RootVec& b);
inline long long inner(const RootVec& a, const RootVec& b) { return dot_doubled(a, b) / 4; }

// The 240 roots of E8, sorted lexicographically in doubled coordinates.
const std::vector<RootVec>& e8_roots();

// Explicit simple-root vectors realizing a RootSystemType inside E8.
struct RootEmbedding {
  RootSystemType type;
  std::vector<RootVec> vectors;

  // Positive-convention Gram matrix of the vectors.
  GramMatrix gram() const;
};

// Deterministic backtracking search over e8_roots().  Throws NotEmbeddable
// when no arrangement of roots realizes the requested diagram (and always
// for rank > 8).
RootEmbedding find_embedding(const RootSystemType& t);

}  // namespace nodal::rootlat
