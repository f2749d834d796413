#pragma once

#include <cstddef>
#include <vector>

#include "digigap/cell.hpp"

namespace digigap::detail {

// Odometer over per-axis choice lists, last axis fastest. With sorted choice
// lists the combinations come out in lexicographic order.
template <class F>
void for_each_product(const std::vector<std::vector<Coord>>& choices, F&& f) {
  const std::size_t n = choices.size();
  for (const auto& c : choices) {
    if (c.empty()) return;
  }
  std::vector<std::size_t> idx(n, 0);
  std::vector<Coord> cur(n);
  for (std::size_t j = 0; j < n; ++j) cur[j] = choices[j][0];
  while (true) {
    f(cur);
    std::size_t j = n;
    while (true) {
      if (j == 0) return;
      --j;
      if (++idx[j] < choices[j].size()) {
        cur[j] = choices[j][idx[j]];
        break;
      }
      idx[j] = 0;
      cur[j] = choices[j][0];
    }
  }
}

inline bool is_even(Coord c) { return c % 2 == 0; }

}  // namespace digigap::detail
