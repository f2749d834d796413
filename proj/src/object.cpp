#include "digigap/object.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "digigap/detail/lattice.hpp"
#include "digigap/errors.hpp"

namespace digigap {
namespace {

using CellSet = std::unordered_set<Cell, CellHash>;

std::string point_string(const Point& p) {
  std::string s = "(";
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (j) s += ',';
    s += std::to_string(p[j]);
  }
  return s + ")";
}

void check_same_length(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw DimensionMismatch("voxels of different dimension");
}

// Inserts every face of the voxel centred at v into per-dimension sets.
void collect_faces(const Point& v, std::vector<CellSet>& sets) {
  std::vector<std::vector<Coord>> choices(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) choices[j] = {2 * v[j] - 1, 2 * v[j], 2 * v[j] + 1};
  detail::for_each_product(choices, [&](const std::vector<Coord>& cur) {
    const auto dim = std::count_if(cur.begin(), cur.end(), detail::is_even);
    sets[static_cast<std::size_t>(dim)].emplace(cur);
  });
}

template <class F>
void parallel_ranges(std::size_t count, unsigned threads, F&& f) {
  if (threads <= 1 || count < 2) {
    f(std::size_t{0}, count);
    return;
  }
  const std::size_t workers = std::min<std::size_t>(threads, count);
  const std::size_t chunk = (count + workers - 1) / workers;
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&f, lo, hi] { f(lo, hi); });
  }
}

}  // namespace

DigitalObject::DigitalObject(std::size_t ambient_n) : n_(ambient_n) {
  if (n_ == 0) throw DimensionMismatch("ambient dimension must be at least 1");
}

DigitalObject::DigitalObject(std::size_t ambient_n, std::vector<Point> voxels,
                             DuplicatePolicy policy)
    : DigitalObject(ambient_n) {
  for (const Point& p : voxels) {
    if (p.size() != n_) {
      throw DimensionMismatch("voxel " + point_string(p) + " has length " +
                              std::to_string(p.size()) + ", expected " + std::to_string(n_));
    }
    for (Coord x : p) {
      if (x > kMaxPointCoord || x < -kMaxPointCoord) {
        throw CoordinateOverflow("voxel " + point_string(p) + " outside |x| <= 2^61");
      }
    }
    if (!index_.insert(p).second) {
      if (policy == DuplicatePolicy::kStrict) {
        throw DuplicateVoxel("duplicate voxel " + point_string(p));
      }
      ++duplicates_dropped_;
    }
  }
  voxels_.assign(index_.begin(), index_.end());
  std::sort(voxels_.begin(), voxels_.end());
}

bool DigitalObject::contains_voxel(const Cell& v) const {
  return v.ambient() == n_ && v.is_voxel() && contains(v.centre());
}

bool DigitalObject::contains_cell(const Cell& e) const {
  if (e.ambient() != n_) throw DimensionMismatch("cell and object differ in dimension");
  if (e.is_voxel()) return contains(e.centre());
  return std::ranges::any_of(cofaces_voxels(e),
                             [&](const Cell& v) { return contains(v.centre()); });
}

bool DigitalObject::is_free(const Cell& e) const {
  if (e.ambient() != n_) throw DimensionMismatch("cell and object differ in dimension");
  return std::ranges::any_of(cofaces_voxels(e),
                             [&](const Cell& v) { return !contains(v.centre()); });
}

CellCensus census(const DigitalObject& d, unsigned threads) {
  const std::size_t n = d.ambient();
  const auto voxels = d.voxels();

  std::vector<std::vector<CellSet>> partial;
  std::mutex partial_mutex;
  parallel_ranges(voxels.size(), threads, [&](std::size_t lo, std::size_t hi) {
    std::vector<CellSet> sets(n + 1);
    for (std::size_t v = lo; v < hi; ++v) collect_faces(voxels[v], sets);
    std::lock_guard lock(partial_mutex);
    partial.push_back(std::move(sets));
  });

  CellCensus out;
  out.ambient_n = n;
  out.cells.resize(n + 1);
  out.free.resize(n + 1);
  out.nonfree.resize(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    CellSet merged;
    for (auto& sets : partial) merged.merge(sets[i]);
    out.cells[i].assign(merged.begin(), merged.end());
    std::sort(out.cells[i].begin(), out.cells[i].end());
  }

  for (std::size_t i = 0; i < n; ++i) {
    const auto& cells = out.cells[i];
    std::vector<char> is_free(cells.size(), 0);
    parallel_ranges(cells.size(), threads, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t c = lo; c < hi; ++c) is_free[c] = d.is_free(cells[c]) ? 1 : 0;
    });
    for (std::size_t c = 0; c < cells.size(); ++c) {
      (is_free[c] ? out.free[i] : out.nonfree[i]).push_back(cells[c]);
    }
  }
  return out;
}

int shared_axes(const Point& a, const Point& b) {
  check_same_length(a, b);
  int equal = 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const Coord diff = a[j] - b[j];
    if (diff > 1 || diff < -1) return -1;
    if (diff == 0) ++equal;
  }
  return equal;
}

std::vector<Point> adjacent_voxels(const DigitalObject& d, const Point& v, int k) {
  const int n = static_cast<int>(d.ambient());
  if (v.size() != d.ambient()) throw DimensionMismatch("voxel and object differ in dimension");
  if (k < 0 || k >= n) throw std::out_of_range("adjacency index k must satisfy 0 <= k < n");
  if (!d.contains(v)) throw std::invalid_argument("voxel " + point_string(v) + " is not in D");

  std::vector<std::vector<Coord>> window(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) window[j] = {v[j] - 1, v[j], v[j] + 1};
  std::vector<Point> out;
  detail::for_each_product(window, [&](const std::vector<Coord>& w) {
    if (w == v || !d.contains(w)) return;
    if (shared_axes(v, w) >= k) out.push_back(w);
  });
  return out;
}

bool strictly_adjacent(const Point& v1, const Point& v2, int i) {
  check_same_length(v1, v2);
  if (v1 == v2) throw std::invalid_argument("strictly_adjacent requires distinct voxels");
  return shared_axes(v1, v2) == i;
}

std::optional<Cell> intersection_cell(const Point& v1, const Point& v2) {
  if (v1 == v2 || shared_axes(v1, v2) < 0) return std::nullopt;
  std::vector<Coord> c(v1.size());
  for (std::size_t j = 0; j < v1.size(); ++j) c[j] = v1[j] == v2[j] ? 2 * v1[j] : v1[j] + v2[j];
  return Cell(std::move(c));
}

std::vector<Point> block(const Cell& e) {
  std::vector<Point> out;
  for (const Cell& v : cofaces_voxels(e)) out.push_back(v.centre());
  return out;
}

std::vector<Point> block_occupancy(const DigitalObject& d, const Cell& e) {
  if (e.ambient() != d.ambient()) throw DimensionMismatch("cell and object differ in dimension");
  std::vector<Point> out;
  for (Point& p : block(e)) {
    if (d.contains(p)) out.push_back(std::move(p));
  }
  return out;
}

std::optional<Tandem> tandem_over(const DigitalObject& d, const Cell& e) {
  auto occ = block_occupancy(d, e);
  if (occ.size() != 2) return std::nullopt;
  const auto meet = intersection_cell(occ[0], occ[1]);
  if (!meet || *meet != e) return std::nullopt;
  return Tandem{e, {std::move(occ[0]), std::move(occ[1])}};
}

std::int64_t b_count(const Cell& e, const DigitalObject& d, int j) {
  if (e.ambient() != d.ambient()) throw DimensionMismatch("cell and object differ in dimension");
  const auto cofaces = cofaces_of(e, j);
  return std::ranges::count_if(cofaces, [&](const Cell& f) { return d.contains_cell(f); });
}

}  // namespace digigap
