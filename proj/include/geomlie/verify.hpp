// One-shot verification suite: every acceptance check, per type, with timing.

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "geomlie/rootsys.hpp"

namespace geomlie {

struct CheckRecord {
  int criterion;         // 1..16
  std::string name;      // criterion name
  std::string subject;   // type label, folding label, or "-"
  bool pass;
  std::string expected;
  std::string actual;
  double millis;
};

struct VerifyReport {
  std::vector<CheckRecord> records;

  bool ok() const;
  // Criteria that have at least one failing record.
  std::vector<int> failing_criteria() const;
  nlohmann::json to_json() const;
};

// Names of criteria 1..16, index 0 unused.
const std::vector<std::string>& criterion_names();

// Runs every criterion that applies to the given types. Folding checks run
// when include_foldings is set.
VerifyReport run_verify(const std::vector<LieType>& types, bool include_foldings = true);

// All x with x^T C x = 2, found by exact Fincke-Pohst enumeration of the
// ellipsoid. Independent of the reflection closure in rootsys.
std::vector<Root> lattice_scan_roots(const LieType& t);

// Reference monodromy matrices in the projective basis for E6, E7, E8.
IntMatrix reference_projective_monodromy(const LieType& t);

}  // namespace geomlie
