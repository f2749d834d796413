#include "digigap/verify.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "digigap/curves.hpp"
#include "digigap/errors.hpp"
#include "digigap/gaps.hpp"

namespace digigap {
namespace {

std::int64_t exact_div(std::int64_t num, std::int64_t den) {
  if (den == 0 || num % den != 0) {
    throw std::logic_error("constant " + std::to_string(num) + "/" + std::to_string(den) +
                           " is not integral");
  }
  return num / den;
}

std::string idx(int i) { return std::to_string(i); }

class RowSink {
 public:
  explicit RowSink(std::vector<Verdict>& rows) : rows_(rows) {}

  void add(std::string claim, std::string input, std::int64_t expected, std::int64_t observed,
           bool informational = false) {
    rows_.push_back(Verdict{std::move(claim), std::move(input), expected, observed,
                            expected == observed, informational});
  }

 private:
  std::vector<Verdict>& rows_;
};

DigitalObject fixture(std::vector<Point> voxels) { return DigitalObject(3, std::move(voxels)); }

const DigitalObject& single_voxel() {
  static const DigitalObject d = fixture({{0, 0, 0}});
  return d;
}
const DigitalObject& face_pair() {
  static const DigitalObject d = fixture({{0, 0, 0}, {1, 0, 0}});
  return d;
}
const DigitalObject& edge_tandem() {
  static const DigitalObject d = fixture({{0, 0, 0}, {1, 1, 0}});
  return d;
}
const DigitalObject& diagonal_pair() {
  static const DigitalObject d = fixture({{0, 0, 0}, {1, 1, 1}});
  return d;
}

std::int64_t face_block_count(int i) { return exact_div((9 + i) * const_i_to_j(i, 3, 3), 6); }

std::int64_t tandem_count(int i) {
  return exact_div((42 + 5 * i - i * i) * const_i_to_j(i, 3, 3), 24);
}

void general_rows(RowSink& sink, const DigitalObject& d, const CellCensus& cc) {
  const int n = static_cast<int>(d.ambient());
  for (int i = 0; i < n; ++i) {
    sink.add("census.partition.i" + idx(i), "D", cc.c(i), cc.c_free(i) + cc.c_nonfree(i));
  }
  sink.add("census.facets", "D", cc.c(n - 1), 2 * n * cc.c(n) - cc.c_nonfree(n - 1));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const DegreeSum s = degree_sum_check(bounding_structure(cc, i, j));
      sink.add("incidence.degree_sum.i" + idx(i) + ".j" + idx(j), "(C_i(D), C_j(D), <)", s.left,
               s.right);
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const std::string input = "n=" + idx(n) + " lattice enumeration";
      sink.add("constants.to.i" + idx(i) + ".j" + idx(j), input, const_i_to_j(i, j, n),
               enumerate_i_to_j(i, j, n));
      sink.add("constants.from.i" + idx(i) + ".j" + idx(j), input, const_i_from_j(i, j, n),
               enumerate_i_from_j(i, j, n));
    }
  }
}

void fixture_rows(RowSink& sink) {
  const CellCensus fp = census(face_pair());
  for (int i = 0; i <= 2; ++i) {
    sink.add("fixture.face_block.c" + idx(i), "face pair", face_block_count(i), fp.c(i));
  }
  const CellCensus tp = census(edge_tandem());
  for (int i = 0; i <= 1; ++i) {
    sink.add("fixture.tandem1.c" + idx(i), "1-tandem", tandem_count(i), tp.c(i));
  }

  const Cell voxel = Cell::voxel(single_voxel().voxels()[0]);
  for (int i = 0; i <= 2; ++i) {
    const Cell e = faces_of(voxel, i).front();
    for (int j = i + 1; j <= 2; ++j) {
      const std::int64_t observed = b_count(e, single_voxel(), j);
      const std::string tag = ".i" + idx(i) + ".j" + idx(j);
      sink.add("fixture.b_j.binomial" + tag, "single voxel", binomial(3 - i, j - i), observed);
      sink.add("fixture.b_j.quotient" + tag, "single voxel",
               exact_div(const_i_to_j(i, j, 3) * const_i_to_j(j, 3, 3), const_i_to_j(i, 3, 3)),
               observed);
    }
  }

  const Cell corner{1, 1, 1};
  sink.add("fixture.b1.hub0", "diagonal pair", const_i_from_j(0, 1, 3),
           b_count(corner, diagonal_pair(), 1));
  sink.add("fixture.b1.hub1_vertex", "1-tandem", 5, b_count(corner, edge_tandem(), 1));
  sink.add("fixture.b1.nonfree_face_vertex", "face pair", 4, b_count(corner, face_pair(), 1));
  sink.add("fixture.b1.lone_vertex", "single voxel", 3, b_count(corner, single_voxel(), 1));
}

// Prop 1b / Prop E on every 2-block and 1-tandem found inside D.
void subobject_rows(RowSink& sink, const DigitalObject& d, const CellCensus& cc,
                    const std::vector<Cell>& hubs1) {
  auto sum_census = [&](const std::vector<Cell>& centres, int i) {
    std::int64_t s = 0;
    for (const Cell& e : centres) s += census(DigitalObject(3, block_occupancy(d, e))).c(i);
    return s;
  };
  const auto& blocks2 = cc.nonfree[2];
  if (!blocks2.empty()) {
    const auto count = static_cast<std::int64_t>(blocks2.size());
    for (int i = 0; i <= 2; ++i) {
      sink.add("subobject.face_block.c" + idx(i), std::to_string(count) + " 2-blocks of D",
               count * face_block_count(i), sum_census(blocks2, i));
    }
  }
  if (!hubs1.empty()) {
    const auto count = static_cast<std::int64_t>(hubs1.size());
    for (int i = 0; i <= 1; ++i) {
      sink.add("subobject.tandem1.c" + idx(i), std::to_string(count) + " 1-tandems of D",
               count * tandem_count(i), sum_census(hubs1, i));
    }
  }
}

void curve_rows(RowSink& sink, const DigitalObject& d, const CellCensus& cc, std::int64_t g0,
                std::int64_t g1) {
  VertexClassification vc;
  try {
    vc = vertex_classification(d);
  } catch (const ClassificationOverlap&) {
    sink.add("curve.classes.disjoint", "D", 0, 1);
    return;
  }
  sink.add("curve.classes.disjoint", "D", 0, 0);

  auto with_value = [](const VertexClass& c, std::int64_t value) {
    return static_cast<std::int64_t>(std::ranges::count(c.b1, value));
  };
  auto size = [](const VertexClass& c) { return static_cast<std::int64_t>(c.vertices.size()); };

  sink.add("curve.b1.A_is_6", "0-hubs", size(vc.hubs), with_value(vc.hubs, 6));
  sink.add("curve.b1.B_is_5", "vertices of 1-hubs", size(vc.hub1_vertices),
           with_value(vc.hub1_vertices, 5));
  sink.add("curve.b1.C_is_4", "vertices of non-free 2-cells", size(vc.nonfree_face_vertices),
           with_value(vc.nonfree_face_vertices, 4));
  sink.add("curve.b1.Rest_is_3", "remaining vertices", size(vc.rest), with_value(vc.rest, 3));

  sink.add("curve.size.A", "|A| = g0", g0, size(vc.hubs));
  sink.add("curve.size.B", "|B| = 2 g1", 2 * g1, size(vc.hub1_vertices));
  sink.add("curve.size.C", "|C| = 4 c2'", 4 * cc.c_nonfree(2), size(vc.nonfree_face_vertices));
  sink.add("curve.size.Rest", "|Rest| = c0 - g0 - 2 g1 - 4 c2'",
           cc.c(0) - g0 - 2 * g1 - 4 * cc.c_nonfree(2), size(vc.rest));

  sink.add("curve.csi", "3c0 + 4c2' + 4g1 + 3g0 vs 2c1", 2 * cc.c(1),
           3 * cc.c(0) + 4 * cc.c_nonfree(2) + 4 * g1 + 3 * g0);
  sink.add("curve.theorem.g0", "brute force vs -c0 + 2c1 - 4c2 + 8c3", g0, g0_closed_form(cc));
}

}  // namespace

IncidenceStructure bounding_structure(const CellCensus& census, int i, int j) {
  const int n = static_cast<int>(census.ambient_n);
  if (!(0 <= i && i < j && j <= n)) throw std::out_of_range("need 0 <= i < j <= n");
  IncidenceStructure s;
  s.points = census.cells[static_cast<std::size_t>(i)];
  s.blocks = census.cells[static_cast<std::size_t>(j)];
  for (std::size_t b = 0; b < s.blocks.size(); ++b) {
    for (const Cell& f : faces_of(s.blocks[b], i)) {
      const auto it = std::lower_bound(s.points.begin(), s.points.end(), f);
      if (it == s.points.end() || *it != f) {
        throw std::logic_error("census is not closed under faces");
      }
      s.relation.emplace_back(static_cast<std::size_t>(it - s.points.begin()), b);
    }
  }
  return s;
}

DegreeSum degree_sum_check(const IncidenceStructure& s) {
  std::vector<std::int64_t> point_degree(s.points.size(), 0);
  std::vector<std::int64_t> block_degree(s.blocks.size(), 0);
  for (const auto& [p, b] : s.relation) {
    if (p >= s.points.size() || b >= s.blocks.size()) {
      throw std::out_of_range("incidence relation refers to a missing point or block");
    }
    ++point_degree[p];
    ++block_degree[b];
  }
  DegreeSum out;
  for (std::int64_t r : point_degree) out.left += r;
  for (std::int64_t k : block_degree) out.right += k;
  return out;
}

bool VerdictTable::all_pass() const { return failures() == 0; }

std::size_t VerdictTable::failures() const {
  return static_cast<std::size_t>(
      std::ranges::count_if(rows, [](const Verdict& v) { return !v.informational && !v.pass; }));
}

VerdictTable run_identity_suite(const DigitalObject& d) {
  VerdictTable table;
  RowSink sink(table.rows);
  const CellCensus cc = census(d);
  general_rows(sink, d, cc);

  if (d.ambient() == 3) {
    const auto hubs0 = detect_hubs(d, 0);
    const auto hubs1 = detect_hubs(d, 1);
    const auto g0 = static_cast<std::int64_t>(hubs0.size());
    const auto g1 = static_cast<std::int64_t>(hubs1.size());

    sink.add("census.c2", "c2 = 6 c3 - c2'", cc.c(2), 6 * cc.c(3) - cc.c_nonfree(2));
    sink.add("gaps.g1_closed_form", "brute force vs 2 c2* - c1*", g1, g1_closed_form(cc));
    fixture_rows(sink);
    subobject_rows(sink, d, cc, hubs1);

    table.curve_valid = validate_curve(d, 0).is_valid;
    if (table.curve_valid) {
      curve_rows(sink, d, cc, g0, g1);
    } else {
      sink.add("curve.theorem.g0.out_of_hypothesis", "not a 0-curve: brute force vs formula", g0,
               g0_closed_form(cc), true);
    }
  }

  std::ranges::stable_sort(table.rows, {}, &Verdict::claim);
  return table;
}

}  // namespace digigap
