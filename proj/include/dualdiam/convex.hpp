#pragma once

#include <vector>

#include "dualdiam/tri.hpp"

namespace dd {

// Abstract triangulation of the convex cycle 0..n-1.
struct ConvexPlan {
  int n = 0;
  std::vector<Tri> triangles;
  DualGraph dual_tree() const { return build_dual(triangles); }
};

int convex_min_value(int n);
int lower_bound(int n);
double moore_bound(int t);
ConvexPlan balanced_plan(int n);

// Integer points on a circle of radius 2^19, strictly convex, ccw.
Polygon regular_polygon(int n);

}  // namespace dd
