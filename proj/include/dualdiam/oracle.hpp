#pragma once

#include <functional>
#include <map>
#include <vector>

#include "dualdiam/tri.hpp"

namespace dd {

inline constexpr int kOracleMaxN = 14;

// Calls visit once per triangulation (triangle lists, not sorted). Refuses n > max_n; raise the
// limit only for polygons known to have few triangulations.
void enumerate_triangulations(const Polygon& poly, const std::function<void(const std::vector<Tri>&)>& visit,
                              int max_n = kOracleMaxN);

struct EarClass {
  long long count = 0;
  int min_diameter = 0;
  int max_diameter = 0;
};

struct OracleStats {
  long long triangulation_count = 0;
  int min_diameter = 0, max_diameter = 0;
  int min_ears = 0, max_ears = 0;
  std::map<int, EarClass> per_ear_count;
};

// Optional observer sees every triangulation with its (diameter, ears).
using OracleObserver = std::function<void(const std::vector<Tri>&, int diameter, int ears)>;

OracleStats oracle_stats(const Polygon& poly, const OracleObserver& observe = {}, int max_n = kOracleMaxN);

// Dual diameter of a polygon triangulation given as a triangle list (tree dual).
int tree_diameter(int n, const std::vector<Tri>& tris);

}  // namespace dd
