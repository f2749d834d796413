#include "digigap/cell.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "digigap/detail/lattice.hpp"
#include "digigap/errors.hpp"

namespace digigap {
namespace {

using detail::for_each_product;
using detail::is_even;

void check_doubled(Coord c) {
  if (c > kMaxDoubledCoord || c < -kMaxDoubledCoord) {
    throw CoordinateOverflow("doubled coordinate " + std::to_string(c) + " outside safe range");
  }
}

void check_point(Coord x) {
  if (x > kMaxPointCoord || x < -kMaxPointCoord) {
    throw CoordinateOverflow("coordinate " + std::to_string(x) + " outside |x| <= 2^61");
  }
}

// Canonical j-cell at the origin of Z^n: first j axes intervals, rest at +1/2.
Cell canonical_cell(int j, int n) {
  std::vector<Coord> c(static_cast<std::size_t>(n), 1);
  for (int a = 0; a < j; ++a) c[static_cast<std::size_t>(a)] = 0;
  return Cell(std::move(c));
}

void check_order(int i, int j, int n) {
  if (!(0 <= i && i < j && j <= n)) {
    throw std::out_of_range("need 0 <= i < j <= n, got i=" + std::to_string(i) +
                            " j=" + std::to_string(j) + " n=" + std::to_string(n));
  }
}

}  // namespace

Direction::Direction(std::vector<int> word) : word_(std::move(word)) {
  for (int t : word_) {
    if (t < -1 || t > 1) throw std::invalid_argument("direction entries must be in {-1,0,1}");
  }
}

int Direction::self_dot() const noexcept {
  int s = 0;
  for (int t : word_) s += t * t;
  return s;
}

Cell::Cell(std::vector<Coord> doubled) : coords_(std::move(doubled)) {
  for (Coord c : coords_) check_doubled(c);
}

Cell Cell::voxel(std::span<const Coord> centre) {
  std::vector<Coord> c;
  c.reserve(centre.size());
  for (Coord x : centre) {
    check_point(x);
    c.push_back(2 * x);
  }
  return Cell(std::move(c));
}

int Cell::dimension() const noexcept {
  return static_cast<int>(std::count_if(coords_.begin(), coords_.end(), is_even));
}

Point Cell::centre() const {
  if (!is_voxel()) throw std::logic_error("centre() requires a voxel cell");
  Point p(coords_.size());
  for (std::size_t j = 0; j < coords_.size(); ++j) p[j] = coords_[j] / 2;
  return p;
}

std::string Cell::half_integer_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    if (j) os << ',';
    const Coord c = coords_[j];
    if (is_even(c)) {
      os << c / 2;
    } else {
      os << c << "/2";
    }
  }
  os << ')';
  return os.str();
}

std::string Cell::doubled_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    if (j) os << ',';
    os << coords_[j];
  }
  os << ')';
  return os.str();
}

std::size_t CellHash::operator()(const Cell& c) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (Coord x : c.coords()) {
    h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

std::size_t PointHash::operator()(const Point& p) const noexcept {
  std::uint64_t h = 0x84222325cbf29ce4ULL;
  for (Coord x : p) {
    h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

Cell cell_from(std::span<const Coord> x, const Direction& theta) {
  if (x.size() != theta.size()) {
    throw DimensionMismatch("point has length " + std::to_string(x.size()) +
                            " but direction has length " + std::to_string(theta.size()));
  }
  if (x.empty()) throw DimensionMismatch("ambient dimension must be at least 1");
  std::vector<Coord> c(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    check_point(x[j]);
    c[j] = 2 * x[j] + theta[j];
  }
  return Cell(std::move(c));
}

bool contained_in(const Cell& e1, const Cell& e2) {
  if (e1.ambient() != e2.ambient()) {
    throw DimensionMismatch("cells live in different ambient dimensions");
  }
  for (std::size_t j = 0; j < e1.ambient(); ++j) {
    const Coord a = e1[j];
    const Coord b = e2[j];
    if (is_even(b)) {
      if (std::abs(a - b) > 1) return false;
    } else if (a != b) {
      return false;
    }
  }
  return true;
}

bool incident(const Cell& e1, const Cell& e2) {
  return contained_in(e1, e2) || contained_in(e2, e1);
}

bool bounds(const Cell& e1, const Cell& e2) {
  return e1.dimension() < e2.dimension() && incident(e1, e2);
}

std::vector<Cell> faces_of(const Cell& e, int i) {
  const int dim = e.dimension();
  if (i < 0 || i > dim) {
    throw std::out_of_range("face dimension " + std::to_string(i) + " outside [0, " +
                            std::to_string(dim) + "]");
  }
  std::vector<std::vector<Coord>> choices(e.ambient());
  for (std::size_t j = 0; j < e.ambient(); ++j) {
    const Coord c = e[j];
    if (is_even(c)) {
      choices[j] = {c - 1, c, c + 1};
    } else {
      choices[j] = {c};
    }
  }
  std::vector<Cell> out;
  for_each_product(choices, [&](const std::vector<Coord>& cur) {
    if (std::count_if(cur.begin(), cur.end(), is_even) == i) out.emplace_back(cur);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Cell> cofaces_of(const Cell& e, int j) {
  const int dim = e.dimension();
  const int n = static_cast<int>(e.ambient());
  if (j <= dim || j > n) {
    throw std::out_of_range("coface dimension " + std::to_string(j) + " outside (" +
                            std::to_string(dim) + ", " + std::to_string(n) + "]");
  }
  std::vector<std::vector<Coord>> choices(e.ambient());
  for (std::size_t a = 0; a < e.ambient(); ++a) {
    const Coord c = e[a];
    if (is_even(c)) {
      choices[a] = {c};
    } else {
      choices[a] = {c - 1, c, c + 1};
    }
  }
  std::vector<Cell> out;
  for_each_product(choices, [&](const std::vector<Coord>& cur) {
    if (std::count_if(cur.begin(), cur.end(), is_even) == j) out.emplace_back(cur);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Cell> cofaces_voxels(const Cell& e) {
  if (e.is_voxel()) throw std::invalid_argument("cofaces_voxels: cell is already an n-voxel");
  return cofaces_of(e, static_cast<int>(e.ambient()));
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

std::int64_t const_i_to_j(int i, int j, int n) {
  check_order(i, j, n);
  return (std::int64_t{1} << (j - i)) * binomial(j, i);
}

std::int64_t const_i_from_j(int i, int j, int n) {
  check_order(i, j, n);
  return (std::int64_t{1} << (j - i)) * binomial(n - i, j - i);
}

std::int64_t enumerate_i_to_j(int i, int j, int n) {
  check_order(i, j, n);
  return static_cast<std::int64_t>(faces_of(canonical_cell(j, n), i).size());
}

std::int64_t enumerate_i_from_j(int i, int j, int n) {
  check_order(i, j, n);
  const Cell e = canonical_cell(i, n);
  std::vector<std::vector<Coord>> window(static_cast<std::size_t>(n));
  for (std::size_t a = 0; a < window.size(); ++a) window[a] = {e[a] - 1, e[a], e[a] + 1};
  std::int64_t count = 0;
  for_each_product(window, [&](const std::vector<Coord>& cur) {
    const Cell f(cur);
    if (f.dimension() == j && bounds(e, f)) ++count;
  });
  return count;
}

}  // namespace digigap
