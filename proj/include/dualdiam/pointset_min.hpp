#pragma once

#include <vector>

#include "dualdiam/convex.hpp"
#include "dualdiam/tri.hpp"

namespace dd {

struct Embedding {
  std::vector<int> mapping;      // plan vertex -> point index
  std::vector<Tri> triangles;    // plan triangles in point indices
  std::vector<Edge> drawn_edges;
};

Embedding embed_outerplanar(const ConvexPlan& plan, const PointSet& ps);

struct PocketReport {
  int pockets = 0;
  int pocket_triangles = 0;
  int max_distance = 0;  // dual distance from a pocket triangle to the embedded plan
  int bound = 0;         // ceil(log2 n) + 2
};

Triangulation triangulate_pockets(const PointSet& ps, const Embedding& e, PocketReport* report = nullptr);

struct PointsetMinResult {
  Triangulation t;
  Embedding embedding;
  PocketReport pockets;
  int diameter = 0;
};

PointsetMinResult pointset_min_dt(const PointSet& ps);

int ceil_log2(long long n);

}  // namespace dd
