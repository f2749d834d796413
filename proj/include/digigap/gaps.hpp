#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "digigap/cell.hpp"
#include "digigap/object.hpp"

namespace digigap {

/// H_i(D): every i-cell of D over which D has an i-gap, sorted.
/// Requires 0 <= i <= n - 2.
std::vector<Cell> detect_hubs(const DigitalObject& d, int i);

/// g_1 = 2 c_2^* - c_1^*, valid for every object of C_3.
std::int64_t g1_closed_form(const CellCensus& census);

/// g_0 = -c_0 + 2 c_1 - 4 c_2 + 8 c_3, valid for digital 0-curves of C_3.
std::int64_t g0_closed_form(const CellCensus& census);

struct CsiCheck {
  std::int64_t lhs = 0;  // 3 c_0 + 4 c_2' + 4 g_1 + 3 g_0
  std::int64_t rhs = 0;  // 2 c_1
  bool holds() const noexcept { return lhs == rhs; }
};

/// Evaluates 3 c_0 + 4 c_2' + 4 g_1 + 3 g_0 = 2 c_1 with brute-force gaps.
CsiCheck csi_identity_check(const DigitalObject& d);

struct VertexClass {
  std::vector<Cell> vertices;
  /// b_1(v, D) for each vertex, aligned with `vertices`.
  std::vector<std::int64_t> b1;
};

/// Partition of C_0(D) used in the 0-gap counting argument.
struct VertexClassification {
  VertexClass hubs;             // A: 0-hubs
  VertexClass hub1_vertices;    // B: vertices bounding a 1-hub
  VertexClass nonfree_face_vertices;  // C: vertices bounding a non-free 2-cell
  VertexClass rest;
};

/// Throws ClassificationOverlap if A, B and C are not pairwise disjoint.
VertexClassification vertex_classification(const DigitalObject& d);

struct GapReport {
  std::size_t ambient_n = 0;
  /// hubs[i] = H_i(D) for 0 <= i <= n - 2.
  std::vector<std::vector<Cell>> hubs;
  std::optional<std::int64_t> g1_formula;  // n = 3
  std::optional<std::int64_t> g0_formula;  // n = 3
  bool is_zero_curve = false;

  std::int64_t g(std::size_t i) const { return static_cast<std::int64_t>(hubs.at(i).size()); }
  bool g1_agrees() const { return g1_formula && *g1_formula == g(1); }
  bool g0_agrees() const { return g0_formula && *g0_formula == g(0); }
};

GapReport gap_report(const DigitalObject& d);

}  // namespace digigap
