#pragma once

#include <cstddef>
#include <vector>

namespace linedyn::detail {

/// Removes beat points until none is left and returns the ids that survive.
/// x is a down beat point when the elements strictly below it have a maximum,
/// an up beat point when those strictly above have a minimum. Removing one is
/// a strong deformation retraction, so homology is unchanged.
template <class Leq>
std::vector<std::size_t> beat_core(std::size_t n, Leq&& leq) {
  std::vector<std::vector<char>> le(n, std::vector<char>(n, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) le[a][b] = a == b || leq(a, b);
  std::vector<char> alive(n, 1);
  std::size_t left = n;
  // cmp(x, y) is "y strictly below x" for down, "y strictly above x" for up
  auto has_extreme = [&](std::size_t x, bool down) {
    std::size_t best = n;
    for (std::size_t y = 0; y < n; ++y) {
      if (!alive[y] || y == x) continue;
      if (down ? !le[y][x] : !le[x][y]) continue;
      if (best == n || (down ? le[best][y] : le[y][best])) best = y;
    }
    if (best == n) return false;
    for (std::size_t y = 0; y < n; ++y) {
      if (!alive[y] || y == x) continue;
      if (down ? (le[y][x] && !le[y][best]) : (le[x][y] && !le[best][y])) return false;
    }
    return true;
  };
  bool changed = true;
  while (changed && left > 1) {
    changed = false;
    for (std::size_t x = 0; x < n && left > 1; ++x) {
      if (!alive[x]) continue;
      if (has_extreme(x, true) || has_extreme(x, false)) {
        alive[x] = 0;
        --left;
        changed = true;
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < n; ++x)
    if (alive[x]) out.push_back(x);
  return out;
}

}  // namespace linedyn::detail
