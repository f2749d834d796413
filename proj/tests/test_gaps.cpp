#include <doctest.h>

#include "digigap/curves.hpp"
#include "digigap/errors.hpp"
#include "digigap/gaps.hpp"
#include "oracle.hpp"

using namespace digigap;

namespace {
DigitalObject obj(std::vector<Point> v) { return DigitalObject(3, std::move(v)); }

DigitalObject cube2() {
  std::vector<Point> v;
  oracle::scan({{0, 1}, {0, 1}, {0, 1}}, [&](const std::vector<Coord>& p) { v.push_back(p); });
  return obj(v);
}
}  // namespace

TEST_CASE("detect_hubs examples") {
  const auto diag = obj({{0, 0, 0}, {1, 1, 1}});
  CHECK(detect_hubs(diag, 0) == std::vector<Cell>{Cell{1, 1, 1}});
  CHECK(detect_hubs(diag, 1).empty());

  const auto tandem = obj({{0, 0, 0}, {1, 1, 0}});
  CHECK(detect_hubs(tandem, 1) == std::vector<Cell>{Cell{1, 1, 0}});
  CHECK(detect_hubs(tandem, 0).empty());

  const auto face = obj({{0, 0, 0}, {1, 0, 0}});
  CHECK(detect_hubs(face, 0).empty());
  CHECK(detect_hubs(face, 1).empty());

  CHECK(detect_hubs(cube2(), 0).empty());
  CHECK(detect_hubs(DigitalObject(3), 0).empty());

  CHECK_THROWS_AS(detect_hubs(diag, 2), std::out_of_range);
  CHECK_THROWS_AS(detect_hubs(diag, -1), std::out_of_range);
}

TEST_CASE("detect_hubs matches the window-scan oracle for n = 2..4") {
  for (std::uint64_t seed = 0; seed < 90; ++seed) {
    const std::size_t n = 2 + seed % 3;
    const auto d = oracle::random_object(seed * 31 + 7, n, n == 4 ? 10 : 20, 4);
    for (int i = 0; i <= static_cast<int>(n) - 2; ++i) {
      const auto hubs = detect_hubs(d, i);
      CAPTURE(seed);
      CAPTURE(i);
      REQUIRE(static_cast<std::int64_t>(hubs.size()) == oracle::gaps(d, i));
      for (const Cell& h : hubs) {
        REQUIRE(h.dimension() == i);
        REQUIRE(d.is_free(h));
        REQUIRE(d.contains_cell(h));
      }
    }
  }
}

TEST_CASE("g1 closed form examples") {
  CHECK(g1_closed_form(census(obj({{0, 0, 0}}))) == 0);
  CHECK(g1_closed_form(census(obj({{0, 0, 0}, {1, 1, 0}}))) == 1);
  CHECK(g1_closed_form(census(obj({{0, 0, 0}, {1, 0, 0}}))) == 0);
  CHECK_THROWS_AS(g1_closed_form(census(DigitalObject(2, {{0, 0}}))), DimensionMismatch);
}

TEST_CASE("g1 closed form equals brute force on arbitrary objects") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto d = oracle::random_object(9000 + seed, 3, 40, 6);
    CAPTURE(seed);
    REQUIRE(g1_closed_form(census(d)) == static_cast<std::int64_t>(detect_hubs(d, 1).size()));
  }
}

TEST_CASE("g0 closed form examples") {
  CHECK(g0_closed_form(census(obj({{0, 0, 0}, {1, 1, 1}}))) == 1);
  const auto chain = obj({{0, 0, 0}, {1, 1, 1}, {2, 2, 2}});
  const CellCensus cc = census(chain);
  CHECK(cc.c(0) == 22);
  CHECK(cc.c(1) == 36);
  CHECK(cc.c(2) == 18);
  CHECK(cc.c(3) == 3);
  CHECK(g0_closed_form(cc) == 2);
  CHECK(detect_hubs(chain, 0).size() == 2);

  // Not a curve: the formula overshoots the brute-force count.
  CHECK(g0_closed_form(census(cube2())) == 1);
  CHECK(detect_hubs(cube2(), 0).empty());
  CHECK_THROWS_AS(g0_closed_form(census(DigitalObject(4))), DimensionMismatch);
}

TEST_CASE("CSI identity examples") {
  const auto t = csi_identity_check(obj({{0, 0, 0}, {1, 1, 0}}));
  CHECK(t.lhs == 46);
  CHECK(t.rhs == 46);
  const auto dg = csi_identity_check(obj({{0, 0, 0}, {1, 1, 1}}));
  CHECK(dg.lhs == 48);
  CHECK(dg.holds());
  const auto fp = csi_identity_check(obj({{0, 0, 0}, {1, 0, 0}}));
  CHECK(fp.lhs == 40);
  CHECK(fp.holds());
}

TEST_CASE("vertex classification examples") {
  SUBCASE("diagonal pair") {
    const auto vc = vertex_classification(obj({{0, 0, 0}, {1, 1, 1}}));
    CHECK(vc.hubs.vertices == std::vector<Cell>{Cell{1, 1, 1}});
    CHECK(vc.hubs.b1 == std::vector<std::int64_t>{6});
    CHECK(vc.hub1_vertices.vertices.empty());
    CHECK(vc.nonfree_face_vertices.vertices.empty());
    CHECK(vc.rest.vertices.size() == 14);
    for (auto b : vc.rest.b1) CHECK(b == 3);
  }
  SUBCASE("1-tandem") {
    const auto vc = vertex_classification(obj({{0, 0, 0}, {1, 1, 0}}));
    CHECK(vc.hub1_vertices.b1 == std::vector<std::int64_t>{5, 5});
    CHECK(vc.rest.vertices.size() == 12);
    for (auto b : vc.rest.b1) CHECK(b == 3);
  }
  SUBCASE("face pair") {
    const auto vc = vertex_classification(obj({{0, 0, 0}, {1, 0, 0}}));
    CHECK(vc.nonfree_face_vertices.b1 == std::vector<std::int64_t>{4, 4, 4, 4});
    CHECK(vc.rest.vertices.size() == 8);
  }
  SUBCASE("overlapping classes are reported") {
    // (0,0,0)-(1,1,0) is a 1-tandem over edge (1,1,0); (1,1,0)-(1,1,1) share a
    // face through vertex (1,1,1), which also bounds that hub edge.
    CHECK_THROWS_AS(vertex_classification(obj({{0, 0, 0}, {1, 1, 0}, {1, 1, 1}})),
                    ClassificationOverlap);
  }
}

TEST_CASE("incidence degree sum on (C_0, C_1): sum of b_1 over vertices is 2 c_1") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto d = oracle::random_object(300 + seed, 3, 25, 5);
    const CellCensus cc = census(d);
    std::int64_t sum = 0;
    for (const Cell& v : cc.cells[0]) sum += b_count(v, d, 1);
    REQUIRE(sum == 2 * cc.c(1));
  }
}

TEST_CASE("gap_report") {
  const auto r = gap_report(obj({{0, 0, 0}, {1, 1, 1}}));
  CHECK(r.hubs.size() == 2);
  CHECK(r.g(0) == 1);
  CHECK(r.g(1) == 0);
  CHECK(r.is_zero_curve);
  CHECK(r.g0_agrees());
  CHECK(r.g1_agrees());

  const auto c = gap_report(cube2());
  CHECK_FALSE(c.is_zero_curve);
  CHECK_FALSE(c.g0_agrees());

  const auto four = gap_report(DigitalObject(4, {{0, 0, 0, 0}, {1, 1, 1, 1}}));
  CHECK(four.hubs.size() == 3);
  CHECK(four.g(0) == 1);
  CHECK_FALSE(four.g0_formula.has_value());
}
