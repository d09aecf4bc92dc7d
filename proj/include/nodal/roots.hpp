#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nodal/errors.hpp"

namespace nodal::rootlat {

enum class Family { A, D, E };

char family_letter(Family f);

// One irreducible simply-laced factor.  Values are canonical: A_n (n >= 1),
// D_n (n >= 4), E_n (n in {6,7,8}).  The low-rank D aliases D3 = A3 and
// D2 = A1+A1 are normalized away by RootSystemType::add, so a SimpleType
// never holds them.
struct SimpleType {
  Family family;
  int rank;

  SimpleType(Family f, int r);

  std::string str() const;  // e.g. "D4"

  friend bool operator==(const SimpleType& a, const SimpleType& b) {
    return a.family == b.family && a.rank == b.rank;
  }
  // Canonical component order: descending rank, ties E before D before A.
  friend bool operator<(const SimpleType& a, const SimpleType& b);
};

// A formal direct sum of SimpleType factors kept in canonical order.
struct RootSystemType {
  std::vector<SimpleType> components;

  RootSystemType() = default;
  explicit RootSystemType(std::vector<SimpleType> comps);

  // Appends a factor, normalizing D3 -> A3 and D2 -> A1+A1, and re-sorts.
  void add(Family f, int rank);
  void add(const SimpleType& s);
  void add(const RootSystemType& other);

  int rank() const;
  bool empty() const { return components.empty(); }

  // Canonical string, e.g. "D4+A1+A1+A1+A1".
  std::string str() const;

  // Accepts both the canonical form and exponent shorthand "D4+A1^4".
  static RootSystemType parse(std::string_view s);

  friend bool operator==(const RootSystemType& a, const RootSystemType& b) {
    return a.components == b.components;
  }
  friend bool operator<(const RootSystemType& a, const RootSystemType& b) {
    return a.components < b.components;
  }
};

// The affine label R~ of an Okamoto-Painleve pair, stored by its finite base
// type R.  Only the eight Painleve-relevant labels are accepted.
struct AffineType {
  SimpleType base;

  explicit AffineType(SimpleType b);

  static AffineType parse(std::string_view s);  // "D4".."D8", "E6".."E8"

  SimpleType classical_part() const { return base; }
  int node_count() const { return base.rank + 1; }
  std::string str() const { return base.str() + "~"; }
};

// All eight Painleve-relevant affine types, in the fixed report order
// E8, E7, D8, D7, D6, E6, D5, D4.
const std::vector<AffineType>& painleve_affine_types();

}  // namespace nodal::rootlat
