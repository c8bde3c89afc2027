#pragma once

#include <vector>

#include "dualdiam/tri.hpp"

namespace dd {

enum class Direction { inc, dec };

struct Monotone {
  Direction dir = Direction::inc;
  std::vector<int> indices;  // positions in the input sequence
};

// Longer of the longest strictly increasing / decreasing subsequences; ties go to increasing.
Monotone longest_monotone_subsequence(const std::vector<int>& seq);

struct Wedge {
  int i = 0;                  // wedge v_1 v_i v_{i+1}, 1-based as in the hull labelling
  std::vector<int> interior;  // S_i, clockwise around v_1
  std::vector<int> ranks;     // counterclockwise rank around v_i of each interior point
  Direction dir = Direction::inc;
  std::vector<int> sigma;     // chosen chain, point indices
  int separation = 0;         // dual distance between the triangles on v_1v_i and v_1v_{i+1}
};

struct FanDecomposition {
  std::vector<int> hull;  // v_1..v_h clockwise, v_1 lexicographically smallest
  std::vector<Wedge> wedges;
};

struct PointsetMaxResult {
  Triangulation t;
  FanDecomposition fan;
  int diameter = 0;
};

PointsetMaxResult pointset_max_dt(const PointSet& ps);

struct ZigzagResult {
  Triangulation t;
  std::vector<int> order;  // c_1..c_k, counterclockwise
  int diameter = 0;
  bool relaxed = false;    // some non-hull edge avoids C entirely
};

ZigzagResult zigzag_triangulation(const PointSet& ps, const std::vector<int>& convex_subset);

// A maximum-cardinality subset in convex position, counterclockwise.
std::vector<int> max_convex_subset(const PointSet& ps);

}  // namespace dd
