#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "digigap/cell.hpp"
#include "digigap/object.hpp"

namespace digigap {

/// Points, blocks and an incidence relation given as (point index, block index).
struct IncidenceStructure {
  std::vector<Cell> points;
  std::vector<Cell> blocks;
  std::vector<std::pair<std::size_t, std::size_t>> relation;
};

/// (C_i(D), C_j(D), <) for i < j.
IncidenceStructure bounding_structure(const CellCensus& census, int i, int j);

struct DegreeSum {
  std::int64_t left = 0;   // sum of point degrees
  std::int64_t right = 0;  // sum of block degrees
  bool pass() const noexcept { return left == right; }
};

DegreeSum degree_sum_check(const IncidenceStructure& s);

struct Verdict {
  std::string claim;
  std::string input;
  std::int64_t expected = 0;
  std::int64_t observed = 0;
  bool pass = false;
  /// Reported but excluded from the overall verdict (out-of-hypothesis rows).
  bool informational = false;
};

struct VerdictTable {
  std::vector<Verdict> rows;
  bool curve_valid = false;

  bool all_pass() const;
  std::size_t failures() const;
};

/// Re-derives every counting identity on D and the canonical fixtures.
VerdictTable run_identity_suite(const DigitalObject& d);

}  // namespace digigap
