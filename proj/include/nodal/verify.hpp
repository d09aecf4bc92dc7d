#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nodal::verify {

struct CriterionResult {
  int id;
  std::string name;
  bool pass;
  std::string detail;
};

// Runs the full verification suite (classification tables, embedding
// certificates, atlas consistency, locus tangency, integration cross-checks,
// configuration tables, nonexistence, arithmetic).  Deterministic for a
// fixed seed.
std::vector<CriterionResult> run_all(uint64_t seed = 20240u);

}  // namespace nodal::verify
