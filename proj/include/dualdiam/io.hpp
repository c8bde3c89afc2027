#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dualdiam/tri.hpp"

namespace dd {

struct Report {
  int diameter = 0;
  std::optional<int> ears;  // null for point-set domains
  std::vector<int> witness_path;
  bool operator==(const Report&) const = default;
};

Report make_report(const Triangulation& t);

// Canonical single-line JSON; parse(serialize(x)) == x.
std::string serialize_polygon(const Polygon& poly);
std::string serialize_pointset(const PointSet& ps);
std::string serialize_triangles(std::vector<Tri> tris);  // triples sorted, list sorted
std::string serialize_report(const Report& r);

// Throw Error("parse") naming the byte offset or JSON path of the problem.
Polygon parse_polygon(std::string_view text);
PointSet parse_pointset(std::string_view text);
std::vector<Tri> parse_triangles(std::string_view text);
Report parse_report(std::string_view text);

struct SvgOptions {
  bool shade_ears = true;
  bool witness = true;
  int size = 800;
};

std::string render_svg(const Triangulation& t, const SvgOptions& opt = {});
std::string render_dot(const Triangulation& t);

// Seeded instances. Coordinates lie in [0, range).
PointSet random_pointset(int n, std::uint64_t seed, coord range = 1 << 16);
Polygon random_simple_polygon(int n, std::uint64_t seed, coord range = 1 << 10);

// k points near a circle (indices 0..k-1, strictly convex) plus n-k uniform points.
struct PlantedSet {
  PointSet points;
  std::vector<int> subset;
};
PlantedSet planted_convex_pointset(int n, int k, std::uint64_t seed, coord range = 1 << 16);

}  // namespace dd
