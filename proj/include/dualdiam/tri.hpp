#pragma once

#include <array>
#include <memory>
#include <utility>
#include <vector>

#include "dualdiam/geom.hpp"

namespace dd {

using Tri = std::array<int, 3>;
using Edge = std::pair<int, int>;

enum class DomainKind { polygon, pointset };

struct Domain {
  DomainKind kind;
  std::vector<Point> pts;
};

using DomainPtr = std::shared_ptr<const Domain>;

DomainPtr polygon_domain(Polygon poly);
DomainPtr pointset_domain(PointSet ps);

struct Triangulation {
  DomainPtr domain;
  std::vector<Tri> triangles;  // each ascending; list kept in lexicographic order

  int n() const { return static_cast<int>(domain->pts.size()); }
  bool is_polygon() const { return domain->kind == DomainKind::polygon; }
  const std::vector<Point>& points() const { return domain->pts; }
  std::vector<Edge> edges() const;
};

Tri sorted_tri(int a, int b, int c);
Triangulation make_triangulation(DomainPtr domain, std::vector<Tri> tris);

struct DualGraph {
  std::vector<std::vector<int>> adj;
  bool is_tree = false;
  int edge_count = 0;
  int size() const { return static_cast<int>(adj.size()); }
};

struct DiameterReport {
  int diameter = 0;
  std::vector<int> witness_path;
};

DualGraph build_dual(const std::vector<Tri>& tris);
DualGraph build_dual(const Triangulation& t);

std::vector<int> bfs_distances(const DualGraph& g, const std::vector<int>& sources);
DiameterReport dual_diameter(const DualGraph& g);
inline DiameterReport dual_diameter(const Triangulation& t) { return dual_diameter(build_dual(t)); }

int count_ears(int n, const std::vector<Tri>& tris);
int count_ears(const Triangulation& t);

ValidationReport validate_triangulation(const Triangulation& t);

// Bounded faces of a plane straight-line graph, each as a ccw vertex cycle.
std::vector<std::vector<int>> plane_faces(const std::vector<Point>& pts, const std::vector<Edge>& edges);

// Greedy lexicographic completion of a non-crossing edge set.
Triangulation complete_to_triangulation(DomainPtr domain, const std::vector<Edge>& partial);

// Boundary edges plus every diagonal that no other diagonal properly crosses.
std::vector<Edge> unavoidable_edges(const Polygon& poly);

}  // namespace dd
