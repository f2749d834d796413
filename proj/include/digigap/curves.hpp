#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "digigap/object.hpp"

namespace digigap {

enum class CurveViolation { kDegreeZero, kDegreeOverTwo, kNeighborsMutuallyAdjacent };

std::string_view to_string(CurveViolation v);

struct CurveCheck {
  struct Violation {
    Point voxel;
    CurveViolation reason;
  };

  bool is_valid = false;
  std::vector<Violation> violations;
  /// Voxels with exactly one k-adjacent neighbour, sorted.
  std::vector<Point> extremes;
  /// Number of 0-adjacency components.
  std::size_t component_count = 0;
};

/// Checks the two digital k-curve conditions on every voxel:
/// 1 <= |A_k(v)| <= 2, and the k-neighbours of v are not k-adjacent to each other.
CurveCheck validate_curve(const DigitalObject& d, int k);

/// SplitMix64 stream. Fixed algorithm, so sequences are identical on every
/// platform for a given seed.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound) noexcept;

 private:
  std::uint64_t state_;
};

struct CurveGenOptions {
  int k = 0;
  std::size_t ambient_n = 3;
  /// Fresh walks tried before giving up.
  int max_walks = 64;
  /// Backtracking steps allowed per walk, as a multiple of the length.
  int backtrack_factor = 8;
};

/// Random open digital k-curve with `length` voxels, grown from the origin
/// as a walk whose every new voxel is k-adjacent to the current end only.
/// Deterministic in (length, seed, options). Throws std::invalid_argument
/// for length < 2 and GenerationFailure when every walk runs out of budget.
DigitalObject generate_curve(std::size_t length, std::uint64_t seed,
                             const CurveGenOptions& options = {});

}  // namespace digigap
