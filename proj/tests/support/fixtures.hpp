#pragma once

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "linedyn/io.hpp"
#include "linedyn/multi.hpp"

namespace fixtures {

inline std::string map_path(const std::string& name) { return std::string(LINEDYN_MAPS_DIR) + "/" + name; }

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline linedyn::MultiMap load_multi(const std::string& name) { return linedyn::parse_multimap_spec(slurp(map_path(name))); }
inline linedyn::SelfMap load_single(const std::string& name) { return linedyn::parse_selfmap_spec(slurp(map_path(name))); }

inline std::vector<linedyn::LineIndex> range(linedyn::LineIndex a, linedyn::LineIndex b) {
  std::vector<linedyn::LineIndex> out;
  for (auto i = a; i <= b; ++i) out.push_back(i);
  return out;
}

/// The staircase map on [x_0, x_hi]: x_0 -> [x_0, x_2], x_i -> [x_0, x_{i+1}] for odd i,
/// x_i -> [x_0, x_{i+2}] for even i > 0, clipped at hi. Built directly, not via the
/// spec parser.
inline linedyn::MultiMap staircase(linedyn::LineIndex hi) {
  linedyn::LineWindow w(0, hi);
  std::vector<std::vector<linedyn::LineIndex>> v;
  for (linedyn::LineIndex i = 0; i <= hi; ++i) {
    const linedyn::LineIndex top = i == 0 ? 2 : (i % 2 != 0 ? i + 1 : i + 2);
    v.push_back(range(0, std::min(top, hi)));
  }
  return linedyn::MultiMap(w, v);
}

}  // namespace fixtures
