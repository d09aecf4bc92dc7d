#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "nodal/gram.hpp"

namespace nodal::rootlat {

// Classes in Z^10 carrying the rank-(1,9) form diag(1, -1, ..., -1).
using Class10 = std::array<long long, 10>;

long long form_dot(const Class10& u, const Class10& v);

struct PicardConfig {
  std::vector<Class10> components;       // Y_i
  std::vector<long long> multiplicities; // m_i
  Class10 anticanonical{};               // Y (must equal sum m_i Y_i)
  std::optional<Class10> section;        // O, if supplied
};

struct OpCheckReport {
  std::vector<long long> y_dot_yi;
  long long y_squared = 0;
  bool is_op_pair = false;  // every Y.Y_i vanishes

  // present only when a section O with Y.O = 1 was supplied
  bool has_complement_report = false;
  long long y_dot_o = 0;
  std::vector<std::vector<long long>> complement_gram;  // basis of <Y,O>^perp, geometric sign
  long long complement_det = 0;                         // +/-1 for unimodular
  bool complement_even = false;
  std::string complement_type;  // classified via a simple-root basis ("E8" expected)
  int complement_root_count = 0;
};

// Checks the anti-canonical conditions Y.Y_i = 0, Y^2 = 0 and, given a
// section, computes and classifies the orthogonal complement <Y,O>^perp.
// Throws MalformedConfig when Y != sum m_i Y_i or the shape is inconsistent.
OpCheckReport op_pair_lattice_check(const PicardConfig& cfg);

}  // namespace nodal::rootlat
