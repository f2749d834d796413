#include "digigap/gaps.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "digigap/curves.hpp"
#include "digigap/errors.hpp"

namespace digigap {
namespace {

void require_3d(std::size_t n, const char* what) {
  if (n != 3) {
    throw DimensionMismatch(std::string(what) + " is defined for n = 3 only, got n = " +
                            std::to_string(n));
  }
}

// Vertices bounding (or equal to) any of the given cells.
std::set<Cell> vertices_of(const std::vector<Cell>& cells) {
  std::set<Cell> out;
  for (const Cell& c : cells) {
    for (Cell& v : faces_of(c, 0)) out.insert(std::move(v));
  }
  return out;
}

VertexClass make_class(const DigitalObject& d, std::vector<Cell> vertices) {
  VertexClass out;
  out.vertices = std::move(vertices);
  out.b1.reserve(out.vertices.size());
  for (const Cell& v : out.vertices) out.b1.push_back(b_count(v, d, 1));
  return out;
}

void require_disjoint(const std::set<Cell>& a, const std::set<Cell>& b, const char* names) {
  for (const Cell& c : a) {
    if (b.contains(c)) {
      throw ClassificationOverlap(std::string("vertex classes ") + names + " share vertex " +
                                  c.half_integer_string());
    }
  }
}

}  // namespace

std::vector<Cell> detect_hubs(const DigitalObject& d, int i) {
  const int n = static_cast<int>(d.ambient());
  if (i < 0 || i > n - 2) {
    throw std::out_of_range("hub dimension must satisfy 0 <= i <= n - 2, got " +
                            std::to_string(i));
  }
  // A hub bounds both voxels of its tandem, so C_i(D) holds every candidate.
  std::set<Cell> candidates;
  for (const Point& v : d.voxels()) {
    for (Cell& f : faces_of(Cell::voxel(v), i)) candidates.insert(std::move(f));
  }
  std::vector<Cell> hubs;
  for (const Cell& e : candidates) {
    if (tandem_over(d, e)) hubs.push_back(e);
  }
  return hubs;
}

std::int64_t g1_closed_form(const CellCensus& census) {
  require_3d(census.ambient_n, "g1_closed_form");
  return 2 * census.c_free(2) - census.c_free(1);
}

std::int64_t g0_closed_form(const CellCensus& census) {
  require_3d(census.ambient_n, "g0_closed_form");
  return -census.c(0) + 2 * census.c(1) - 4 * census.c(2) + 8 * census.c(3);
}

CsiCheck csi_identity_check(const DigitalObject& d) {
  require_3d(d.ambient(), "csi_identity_check");
  const CellCensus cc = census(d);
  const auto g0 = static_cast<std::int64_t>(detect_hubs(d, 0).size());
  const auto g1 = static_cast<std::int64_t>(detect_hubs(d, 1).size());
  return CsiCheck{3 * cc.c(0) + 4 * cc.c_nonfree(2) + 4 * g1 + 3 * g0, 2 * cc.c(1)};
}

VertexClassification vertex_classification(const DigitalObject& d) {
  require_3d(d.ambient(), "vertex_classification");
  const CellCensus cc = census(d);
  const auto h0 = detect_hubs(d, 0);
  const std::set<Cell> a(h0.begin(), h0.end());
  const std::set<Cell> b = vertices_of(detect_hubs(d, 1));
  const std::set<Cell> c = vertices_of(cc.nonfree[2]);
  require_disjoint(a, b, "A/B");
  require_disjoint(a, c, "A/C");
  require_disjoint(b, c, "B/C");

  std::vector<Cell> rest;
  for (const Cell& v : cc.cells[0]) {
    if (!a.contains(v) && !b.contains(v) && !c.contains(v)) rest.push_back(v);
  }
  return VertexClassification{
      make_class(d, {a.begin(), a.end()}),
      make_class(d, {b.begin(), b.end()}),
      make_class(d, {c.begin(), c.end()}),
      make_class(d, std::move(rest)),
  };
}

GapReport gap_report(const DigitalObject& d) {
  GapReport r;
  r.ambient_n = d.ambient();
  const int n = static_cast<int>(d.ambient());
  for (int i = 0; i <= n - 2; ++i) r.hubs.push_back(detect_hubs(d, i));
  if (n == 3) {
    const CellCensus cc = census(d);
    r.g1_formula = g1_closed_form(cc);
    r.g0_formula = g0_closed_form(cc);
  }
  r.is_zero_curve = validate_curve(d, 0).is_valid;
  return r;
}

}  // namespace digigap
