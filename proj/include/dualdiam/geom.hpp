#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dd {

using coord = std::int64_t;

// |x|,|y| <= 2^20 keeps every orientation determinant exact in int64.
inline constexpr coord kCoordLimit = coord{1} << 20;

struct Point {
  coord x = 0, y = 0;
  auto operator<=>(const Point&) const = default;
};

// Polygons are counterclockwise vertex cycles; point sets are unordered.
using Polygon = std::vector<Point>;
using PointSet = std::vector<Point>;

// Every failure the library raises carries a short machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

struct Violation {
  std::string kind;
  std::vector<int> indices;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

bool in_range(const Point& p);

// +1 left turn, 0 collinear, -1 right turn. Throws "input-range" if out of bounds.
int orient(const Point& a, const Point& b, const Point& c);

// Open segments meet in exactly one point interior to both.
bool properly_cross(const Point& a, const Point& b, const Point& c, const Point& d);

// p on the closed segment ab.
bool on_segment(const Point& a, const Point& b, const Point& p);

// Twice the signed area.
coord area2(const std::vector<Point>& poly);

// Counterclockwise hull indices, starting at the lexicographically smallest point.
std::vector<int> convex_hull(const PointSet& ps);

enum class Turn { ccw, cw };

// Permutation of pts sorted by sweep angle from the ray center->ray_to. Stable on ties.
std::vector<int> angular_sort(const Point& center, const Point& ray_to,
                              const std::vector<Point>& pts, Turn dir = Turn::ccw);

// Exact ray parity; q is given in doubled coordinates so midpoints stay integral.
bool inside_doubled(const Polygon& poly, const Point& q2);

bool is_boundary_edge(int n, int i, int j);
bool is_diagonal(const Polygon& poly, int i, int j);

ValidationReport validate_polygon(const Polygon& poly);
ValidationReport validate_pointset(const PointSet& ps);

// Any three collinear points, as index triples (at most `limit`).
std::vector<std::array<int, 3>> collinear_triples(const PointSet& ps, std::size_t limit = 16);

}  // namespace dd
