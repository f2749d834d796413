#include "digigap/curves.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "digigap/detail/lattice.hpp"
#include "digigap/errors.hpp"

namespace digigap {
namespace {

bool k_adjacent(const Point& a, const Point& b, int k) {
  return a != b && shared_axes(a, b) >= k;
}

std::size_t count_components(const DigitalObject& d) {
  const auto voxels = d.voxels();
  std::unordered_map<Point, std::size_t, PointHash> index;
  for (std::size_t v = 0; v < voxels.size(); ++v) index.emplace(voxels[v], v);

  std::vector<std::size_t> parent(voxels.size());
  for (std::size_t v = 0; v < parent.size(); ++v) parent[v] = v;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = voxels.size();
  for (std::size_t v = 0; v < voxels.size(); ++v) {
    for (const Point& w : adjacent_voxels(d, voxels[v], 0)) {
      const std::size_t a = find(v);
      const std::size_t b = find(index.at(w));
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
  }
  return components;
}

// Offsets of the k-neighbourhood: non-zero words over {-1,0,1}^n with at
// least k zero entries.
std::vector<Point> neighbourhood_offsets(std::size_t n, int k) {
  std::vector<std::vector<Coord>> choices(n, std::vector<Coord>{-1, 0, 1});
  std::vector<Point> out;
  detail::for_each_product(choices, [&](const std::vector<Coord>& w) {
    const auto zeros = std::count(w.begin(), w.end(), Coord{0});
    if (zeros < static_cast<std::ptrdiff_t>(n) && zeros >= k) out.push_back(w);
  });
  return out;
}

}  // namespace

std::string_view to_string(CurveViolation v) {
  switch (v) {
    case CurveViolation::kDegreeZero:
      return "degree_zero";
    case CurveViolation::kDegreeOverTwo:
      return "degree_over_two";
    case CurveViolation::kNeighborsMutuallyAdjacent:
      return "neighbors_mutually_adjacent";
  }
  return "unknown";
}

CurveCheck validate_curve(const DigitalObject& d, int k) {
  if (k < 0 || k >= static_cast<int>(d.ambient())) {
    throw std::out_of_range("adjacency index k must satisfy 0 <= k < n");
  }
  CurveCheck out;
  for (const Point& v : d.voxels()) {
    const auto nbrs = adjacent_voxels(d, v, k);
    if (nbrs.empty()) {
      out.violations.push_back({v, CurveViolation::kDegreeZero});
    } else if (nbrs.size() > 2) {
      out.violations.push_back({v, CurveViolation::kDegreeOverTwo});
    } else if (nbrs.size() == 2 && k_adjacent(nbrs[0], nbrs[1], k)) {
      out.violations.push_back({v, CurveViolation::kNeighborsMutuallyAdjacent});
    }
    if (nbrs.size() == 1) out.extremes.push_back(v);
  }
  out.is_valid = out.violations.empty();
  out.component_count = count_components(d);
  return out;
}

std::uint64_t SplitMix64::below(std::uint64_t bound) noexcept {
  // Reject the top partial bucket so every residue is equally likely.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

DigitalObject generate_curve(std::size_t length, std::uint64_t seed,
                             const CurveGenOptions& options) {
  const std::size_t n = options.ambient_n;
  const int k = options.k;
  if (length < 2) throw std::invalid_argument("curve length must be at least 2");
  if (n < 1 || k < 0 || k >= static_cast<int>(n)) {
    throw std::invalid_argument("generate_curve needs 0 <= k < n");
  }
  const auto offsets = neighbourhood_offsets(n, k);
  SplitMix64 rng(seed);

  // A cell of the walk remembers which candidate steps are still untried.
  struct Frame {
    Point voxel;
    std::vector<Point> untried;
  };

  for (int walk = 0; walk < options.max_walks; ++walk) {
    std::vector<Frame> path;
    std::set<Point> occupied;
    auto shuffled_candidates = [&](const Point& end) {
      std::vector<Point> cands;
      for (const Point& off : offsets) {
        Point w = end;
        for (std::size_t j = 0; j < n; ++j) w[j] += off[j];
        cands.push_back(std::move(w));
      }
      for (std::size_t a = cands.size(); a > 1; --a) {
        std::swap(cands[a - 1], cands[rng.below(a)]);
      }
      return cands;
    };
    // The new voxel may be k-adjacent to the current end only.
    auto admissible = [&](const Point& w) {
      if (occupied.contains(w)) return false;
      for (std::size_t f = 0; f + 1 < path.size(); ++f) {
        if (k_adjacent(w, path[f].voxel, k)) return false;
      }
      return true;
    };

    Point origin(n, 0);
    occupied.insert(origin);
    path.push_back({origin, shuffled_candidates(origin)});
    std::size_t budget = static_cast<std::size_t>(options.backtrack_factor) * length;

    while (path.size() < length) {
      Frame& top = path.back();
      bool advanced = false;
      while (!top.untried.empty()) {
        Point w = std::move(top.untried.back());
        top.untried.pop_back();
        if (admissible(w)) {
          occupied.insert(w);
          auto cands = shuffled_candidates(w);
          path.push_back({std::move(w), std::move(cands)});
          advanced = true;
          break;
        }
      }
      if (advanced) continue;
      if (path.size() == 1 || budget == 0) break;
      --budget;
      occupied.erase(path.back().voxel);
      path.pop_back();
    }
    if (path.size() == length) {
      std::vector<Point> voxels;
      voxels.reserve(length);
      for (Frame& f : path) voxels.push_back(std::move(f.voxel));
      return DigitalObject(n, std::move(voxels));
    }
  }
  throw GenerationFailure("no curve of length " + std::to_string(length) + " found within " +
                          std::to_string(options.max_walks) + " walks");
}

}  // namespace digigap
