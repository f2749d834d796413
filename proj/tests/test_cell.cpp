#include <doctest.h>

#include <set>

#include "digigap/cell.hpp"
#include "digigap/curves.hpp"
#include "digigap/errors.hpp"
#include "oracle.hpp"

using namespace digigap;

TEST_CASE("cell_from maps (x, theta) to doubled coordinates") {
  const Point origin{0, 0, 0};
  CHECK(cell_from(origin, Direction{0, 0, 0}) == Cell{0, 0, 0});
  CHECK(cell_from(origin, Direction{0, 0, 0}).dimension() == 3);
  CHECK(cell_from(origin, Direction{1, 1, 1}) == Cell{1, 1, 1});
  CHECK(cell_from(origin, Direction{1, 1, 1}).dimension() == 0);

  const Cell e = cell_from(Point{2, 0, -1}, Direction{0, -1, 0});
  CHECK(e == Cell{4, -1, -2});
  CHECK(e.dimension() == 2);
  // {x_2 - 1/2} x [3/2, 5/2] x [-3/2, -1/2]
  CHECK(e.half_integer_string() == "(2,-1/2,-1)");
}

TEST_CASE("cell_from errors") {
  CHECK_THROWS_AS(cell_from(Point{0, 0}, Direction{0, 0, 0}), DimensionMismatch);
  CHECK_THROWS_AS(cell_from(Point{}, Direction{}), DimensionMismatch);
  CHECK_THROWS_AS(Direction({0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(cell_from(Point{kMaxPointCoord + 1}, Direction{0}), CoordinateOverflow);
  CHECK_NOTHROW(cell_from(Point{kMaxPointCoord}, Direction{1}));
  CHECK_NOTHROW(cell_from(Point{-kMaxPointCoord}, Direction{-1}));
  CHECK_THROWS_AS(Cell({kMaxDoubledCoord + 1}), CoordinateOverflow);
}

TEST_CASE("dimension of a cell with n - theta.theta over sampled points") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng.below(5);
    Point x(n);
    std::vector<int> theta(n);
    for (std::size_t j = 0; j < n; ++j) {
      x[j] = static_cast<Coord>(rng.below(2001)) - 1000;
      theta[j] = static_cast<int>(rng.below(3)) - 1;
    }
    const Direction dir(theta);
    CHECK(cell_from(x, dir).dimension() == static_cast<int>(n) - dir.self_dot());
  }
  CHECK(Cell{1, 0, 2}.dimension() == 2);
}

TEST_CASE("incident and bounds") {
  const Cell voxel{0, 0, 0};
  const Cell corner{1, 1, 1};
  CHECK(incident(voxel, voxel));
  CHECK(incident(corner, voxel));
  CHECK(incident(voxel, corner));
  CHECK_FALSE(incident(Cell{3, 1, 1}, voxel));
  CHECK(bounds(corner, voxel));
  CHECK_FALSE(bounds(voxel, corner));
  CHECK_FALSE(bounds(voxel, voxel));
  CHECK(bounds(Cell{1, 1, 0}, Cell{1, 0, 0}));
  CHECK_THROWS_AS(incident(Cell{0, 0}, voxel), DimensionMismatch);
}

TEST_CASE("bounds is irreflexive and transitive, incident symmetric, on a sampled window") {
  std::vector<Cell> cells;
  oracle::scan({{-1, 2}, {-1, 2}, {-1, 1}}, [&](const std::vector<Coord>& c) { cells.emplace_back(c); });
  for (const Cell& a : cells) {
    CHECK_FALSE(bounds(a, a));
    CHECK(incident(a, a));
    for (const Cell& b : cells) {
      REQUIRE(incident(a, b) == incident(b, a));
      // agrees with geometric interval containment
      REQUIRE(contained_in(a, b) == oracle::inside(oracle::box_of(a), oracle::box_of(b)));
    }
  }
  SplitMix64 rng(5);
  for (int t = 0; t < 20000; ++t) {
    const Cell& a = cells[rng.below(cells.size())];
    const Cell& b = cells[rng.below(cells.size())];
    const Cell& c = cells[rng.below(cells.size())];
    if (bounds(a, b) && bounds(b, c)) REQUIRE(bounds(a, c));
  }
}

TEST_CASE("faces_of") {
  const Cell voxel{0, 0, 0};
  CHECK(faces_of(voxel, 3) == std::vector<Cell>{voxel});
  CHECK(faces_of(voxel, 0).size() == 8);
  CHECK(faces_of(voxel, 1).size() == 12);
  CHECK(faces_of(voxel, 2).size() == 6);
  const auto faces = faces_of(voxel, 1);
  CHECK(std::is_sorted(faces.begin(), faces.end()));
  for (const Cell& f : faces) CHECK(bounds(f, voxel));
  CHECK_THROWS_AS(faces_of(voxel, 4), std::out_of_range);
  CHECK_THROWS_AS(faces_of(Cell{1, 0, 1}, 2), std::out_of_range);
  CHECK_THROWS_AS(faces_of(voxel, -1), std::out_of_range);
}

TEST_CASE("cofaces_voxels has 2^(n-i) members, all bounded by the cell") {
  CHECK(cofaces_voxels(Cell{1, 1, 1}).size() == 8);
  CHECK(cofaces_voxels(Cell{1, 1, 0}).size() == 4);
  CHECK(cofaces_voxels(Cell{1, 0, 0}).size() == 2);
  CHECK_THROWS_AS(cofaces_voxels(Cell{0, 0, 0}), std::invalid_argument);

  oracle::scan({{-1, 1}, {-1, 1}, {-1, 1}, {-1, 1}}, [&](const std::vector<Coord>& c) {
    const Cell e(c);
    if (e.is_voxel()) return;
    const auto vs = cofaces_voxels(e);
    REQUIRE(vs.size() == (std::size_t{1} << (4 - e.dimension())));
    REQUIRE(std::is_sorted(vs.begin(), vs.end()));
    for (const Cell& v : vs) REQUIRE(bounds(e, v));
  });
}

TEST_CASE("closed-form constants") {
  CHECK(const_i_to_j(0, 1, 3) == 2);
  CHECK(const_i_from_j(0, 1, 3) == 6);
  CHECK(const_i_to_j(2, 3, 3) == 6);
  CHECK(const_i_from_j(2, 3, 3) == 2);
  CHECK(const_i_to_j(2, 4, 4) == 24);
  CHECK(const_i_to_j(0, 3, 3) == 8);
  CHECK(const_i_to_j(1, 3, 3) == 12);
  CHECK(const_i_to_j(0, 2, 3) == 4);
  CHECK_THROWS_AS(const_i_to_j(2, 2, 3), std::out_of_range);
  CHECK_THROWS_AS(const_i_from_j(1, 0, 3), std::out_of_range);
  CHECK_THROWS_AS(const_i_from_j(0, 4, 3), std::out_of_range);
}

TEST_CASE("constants agree with enumeration and with a geometric window scan, n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    for (int j = 1; j <= n; ++j) {
      for (int i = 0; i < j; ++i) {
        CAPTURE(n);
        CAPTURE(i);
        CAPTURE(j);
        CHECK(enumerate_i_to_j(i, j, n) == const_i_to_j(i, j, n));
        CHECK(enumerate_i_from_j(i, j, n) == const_i_from_j(i, j, n));

        // Independent route: interval containment over a 5^n window.
        std::vector<std::pair<Coord, Coord>> win(static_cast<std::size_t>(n), {-2, 2});
        std::vector<Coord> jc(static_cast<std::size_t>(n), 1), ic(static_cast<std::size_t>(n), 1);
        for (int a = 0; a < j; ++a) jc[static_cast<std::size_t>(a)] = 0;
        for (int a = 0; a < i; ++a) ic[static_cast<std::size_t>(a)] = 0;
        const auto jbox = oracle::box_of(Cell(jc));
        const auto ibox = oracle::box_of(Cell(ic));
        std::int64_t faces = 0, cofaces = 0;
        oracle::scan(win, [&](const std::vector<Coord>& c) {
          const auto b = oracle::box_of(Cell(c));
          const int d = oracle::geometric_dim(b);
          if (d == i && oracle::inside(b, jbox)) ++faces;
          if (d == j && oracle::inside(ibox, b)) ++cofaces;
        });
        CHECK(faces == const_i_to_j(i, j, n));
        CHECK(cofaces == const_i_from_j(i, j, n));
      }
    }
  }
}

TEST_CASE("half-integer rendering is exact") {
  CHECK(Cell{1, 1, 1}.half_integer_string() == "(1/2,1/2,1/2)");
  CHECK(Cell{-1, 0, 3}.half_integer_string() == "(-1/2,0,3/2)");
  CHECK(Cell{1, 1, 0}.doubled_string() == "(1,1,0)");
  CHECK(Cell{4, -2}.centre() == Point{2, -1});
  CHECK_THROWS_AS((Cell{1, 0}.centre()), std::logic_error);
}
