#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace digigap {

using Coord = std::int64_t;

/// Integer point of Z^n; the centre of an n-voxel.
using Point = std::vector<Coord>;

/// Largest admissible |x_j| for a voxel centre.
inline constexpr Coord kMaxPointCoord = Coord{1} << 61;
/// Largest admissible |c_j| for a doubled cell coordinate.
inline constexpr Coord kMaxDoubledCoord = (Coord{1} << 62) + 1;

/// Word over {-1, 0, 1} selecting, per axis, the full unit interval (0)
/// or the lower/upper facet (-1/+1) of a voxel.
class Direction {
 public:
  Direction() = default;
  explicit Direction(std::vector<int> word);
  Direction(std::initializer_list<int> word) : Direction(std::vector<int>(word)) {}

  std::size_t size() const noexcept { return word_.size(); }
  int operator[](std::size_t j) const { return word_[j]; }
  std::span<const int> word() const noexcept { return word_; }

  /// theta . theta, i.e. the number of non-zero entries.
  int self_dot() const noexcept;

 private:
  std::vector<int> word_;
};

/// A cell of the cubical grid in doubled coordinates.
///
/// Entry c_j even encodes the closed interval [c_j/2 - 1/2, c_j/2 + 1/2];
/// entry c_j odd encodes the singleton {c_j/2}. The encoding is unique, so
/// equality of cells is equality of coordinate vectors, and ordering is
/// lexicographic on the coordinates.
class Cell {
 public:
  Cell() = default;
  explicit Cell(std::vector<Coord> doubled);
  Cell(std::initializer_list<Coord> doubled) : Cell(std::vector<Coord>(doubled)) {}

  /// The n-voxel centred on an integer point.
  static Cell voxel(std::span<const Coord> centre);

  std::size_t ambient() const noexcept { return coords_.size(); }
  std::span<const Coord> coords() const noexcept { return coords_; }
  Coord operator[](std::size_t j) const { return coords_[j]; }

  /// Number of even coordinates.
  int dimension() const noexcept;
  bool is_voxel() const noexcept { return dimension() == static_cast<int>(ambient()); }

  /// Centre of a voxel cell; throws std::logic_error for lower cells.
  Point centre() const;

  /// "(1/2,1/2,0)" style exact rendering of the cell's centre.
  std::string half_integer_string() const;
  /// "(1,1,0)" rendering of the doubled coordinates.
  std::string doubled_string() const;

  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;

 private:
  std::vector<Coord> coords_;
};

struct CellHash {
  std::size_t operator()(const Cell& c) const noexcept;
};

struct PointHash {
  std::size_t operator()(const Point& p) const noexcept;
};

/// Cell of point x with direction theta: coordinate 2 x_j + theta_j.
Cell cell_from(std::span<const Coord> x, const Direction& theta);

/// e1 is contained in e2 as a point set.
bool contained_in(const Cell& e1, const Cell& e2);
/// e1 and e2 are incident: one contains the other.
bool incident(const Cell& e1, const Cell& e2);
/// Bounding relation e1 < e2: incident and dim e1 < dim e2.
bool bounds(const Cell& e1, const Cell& e2);

/// All i-cells equal to or bounding e, lexicographically ordered.
std::vector<Cell> faces_of(const Cell& e, int i);

/// All j-cells bounded by e (j > dim e), lexicographically ordered.
std::vector<Cell> cofaces_of(const Cell& e, int j);

/// The 2^(n-i) voxels bounded by an i-cell e, lexicographically ordered.
std::vector<Cell> cofaces_voxels(const Cell& e);

/// Maximum number of i-cells bounding a j-cell: 2^(j-i) C(j, i).
std::int64_t const_i_to_j(int i, int j, int n);
/// Maximum number of j-cells bounded by an i-cell: 2^(j-i) C(n-i, j-i).
std::int64_t const_i_from_j(int i, int j, int n);

/// c_{i->j} by counting the i-faces of a concrete j-cell.
std::int64_t enumerate_i_to_j(int i, int j, int n);
/// c_{i<-j} by scanning the 3^n lattice window around a concrete i-cell.
std::int64_t enumerate_i_from_j(int i, int j, int n);

std::int64_t binomial(int n, int k);

}  // namespace digigap
