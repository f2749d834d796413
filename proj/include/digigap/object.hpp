#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

#include "digigap/cell.hpp"

namespace digigap {

enum class DuplicatePolicy { kStrict, kDeduplicate };

/// A finite set of n-voxels, identified by their integer centres.
class DigitalObject {
 public:
  explicit DigitalObject(std::size_t ambient_n);
  DigitalObject(std::size_t ambient_n, std::vector<Point> voxels,
                DuplicatePolicy policy = DuplicatePolicy::kStrict);

  std::size_t ambient() const noexcept { return n_; }
  std::size_t size() const noexcept { return voxels_.size(); }
  bool empty() const noexcept { return voxels_.empty(); }

  /// Voxel centres in lexicographic order.
  std::span<const Point> voxels() const noexcept { return voxels_; }
  bool contains(const Point& p) const { return index_.contains(p); }
  bool contains_voxel(const Cell& v) const;

  /// Duplicates dropped under DuplicatePolicy::kDeduplicate.
  std::size_t duplicates_dropped() const noexcept { return duplicates_dropped_; }

  /// Whether cell e belongs to C_dim(e)(D), i.e. lies in some voxel of D.
  bool contains_cell(const Cell& e) const;
  /// Whether an i-cell (i < n) has a block not entirely inside D.
  bool is_free(const Cell& e) const;

 private:
  std::size_t n_;
  std::vector<Point> voxels_;
  std::unordered_set<Point, PointHash> index_;
  std::size_t duplicates_dropped_ = 0;
};

/// Per-dimension cell sets of an object with the free/non-free partition.
struct CellCensus {
  std::size_t ambient_n = 0;
  /// cells[i] = C_i(D), sorted; cells[n] holds the voxels themselves.
  std::vector<std::vector<Cell>> cells;
  /// Free and non-free i-cells for i < n; empty at index n.
  std::vector<std::vector<Cell>> free;
  std::vector<std::vector<Cell>> nonfree;

  std::int64_t c(std::size_t i) const { return static_cast<std::int64_t>(cells.at(i).size()); }
  std::int64_t c_free(std::size_t i) const { return static_cast<std::int64_t>(free.at(i).size()); }
  std::int64_t c_nonfree(std::size_t i) const {
    return static_cast<std::int64_t>(nonfree.at(i).size());
  }

  friend bool operator==(const CellCensus&, const CellCensus&) = default;
};

/// Cell census of D. With threads > 1 the voxel set is split across worker
/// threads; the result is identical for every thread count.
CellCensus census(const DigitalObject& d, unsigned threads = 1);

/// A_k(v): voxels of D other than v sharing at least a k-cell with v.
std::vector<Point> adjacent_voxels(const DigitalObject& d, const Point& v, int k);

/// Number of axes on which two points agree, or -1 if they differ by
/// more than one on some axis.
int shared_axes(const Point& a, const Point& b);

/// v1 and v2 meet exactly in an i-cell.
bool strictly_adjacent(const Point& v1, const Point& v2, int i);

/// v1 ∩ v2 as a cell, or none when the voxels are equal or disjoint.
std::optional<Cell> intersection_cell(const Point& v1, const Point& v2);

/// B_i(e): centres of the 2^(n-i) voxels bounded by e.
std::vector<Point> block(const Cell& e);

/// D ∩ B_i(e).
std::vector<Point> block_occupancy(const DigitalObject& d, const Cell& e);

struct Tandem {
  Cell hub;
  std::array<Point, 2> pair;
};

/// The i-tandem of D over e, if D ∩ B_i(e) is a strictly i-adjacent
/// pair whose intersection is e.
std::optional<Tandem> tandem_over(const DigitalObject& d, const Cell& e);

/// b_j(e, D): j-cells of D bounded by e.
std::int64_t b_count(const Cell& e, const DigitalObject& d, int j);

}  // namespace digigap
