#include "dualdiam/geom.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace dd {

namespace {

int sgn(coord v) { return (v > 0) - (v < 0); }

coord cross(coord ax, coord ay, coord bx, coord by) { return ax * by - ay * bx; }

int orient_raw(const Point& a, const Point& b, const Point& c) {
  return sgn(cross(b.x - a.x, b.y - a.y, c.x - a.x, c.y - a.y));
}

bool on_segment_raw(const Point& a, const Point& b, const Point& p) {
  return orient_raw(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool cross_raw(const Point& a, const Point& b, const Point& c, const Point& d) {
  return orient_raw(a, b, c) * orient_raw(a, b, d) < 0 && orient_raw(c, d, a) * orient_raw(c, d, b) < 0;
}

}  // namespace

bool in_range(const Point& p) {
  return p.x <= kCoordLimit && p.x >= -kCoordLimit && p.y <= kCoordLimit && p.y >= -kCoordLimit;
}

int orient(const Point& a, const Point& b, const Point& c) {
  if (!in_range(a) || !in_range(b) || !in_range(c))
    throw Error("input-range", "coordinate exceeds 2^20");
  return orient_raw(a, b, c);
}

bool properly_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
  return orient(a, b, c) * orient(a, b, d) < 0 && orient(c, d, a) * orient(c, d, b) < 0;
}

bool on_segment(const Point& a, const Point& b, const Point& p) {
  return orient(a, b, p) == 0 && on_segment_raw(a, b, p);
}

coord area2(const std::vector<Point>& poly) {
  coord s = 0;
  for (std::size_t i = 0, n = poly.size(); i < n; ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % n];
    s += a.x * b.y - b.x * a.y;
  }
  return s;
}

std::vector<std::array<int, 3>> collinear_triples(const PointSet& ps, std::size_t limit) {
  std::set<std::array<int, 3>> found;
  const int n = static_cast<int>(ps.size());
  for (int i = 0; i < n && found.size() < limit; ++i) {
    std::map<std::pair<coord, coord>, std::vector<int>> dirs;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      coord dx = ps[j].x - ps[i].x, dy = ps[j].y - ps[i].y;
      if (dx == 0 && dy == 0) continue;
      coord g = std::gcd(dx, dy);
      dx /= g;
      dy /= g;
      if (dx < 0 || (dx == 0 && dy < 0)) dx = -dx, dy = -dy;
      auto& seen = dirs[{dx, dy}];
      for (int o : seen) {
        std::array<int, 3> t{i, o, j};
        std::sort(t.begin(), t.end());
        found.insert(t);
        if (found.size() >= limit) return {found.begin(), found.end()};
      }
      seen.push_back(j);
    }
  }
  return {found.begin(), found.end()};
}

std::vector<int> convex_hull(const PointSet& ps) {
  const int n = static_cast<int>(ps.size());
  if (n < 3) throw Error("invalid-input", "convex hull needs at least 3 points");
  for (const auto& p : ps)
    if (!in_range(p)) throw Error("input-range", "coordinate exceeds 2^20");
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return ps[a] < ps[b]; });
  for (int i = 1; i < n; ++i)
    if (ps[idx[i]] == ps[idx[i - 1]]) throw Error("general-position", "duplicate point");

  std::vector<int> h(2 * n);
  int k = 0;
  for (int i = 0; i < n; ++i) {
    while (k >= 2 && orient_raw(ps[h[k - 2]], ps[h[k - 1]], ps[idx[i]]) <= 0) --k;
    h[k++] = idx[i];
  }
  for (int i = n - 2, t = k + 1; i >= 0; --i) {
    while (k >= t && orient_raw(ps[h[k - 2]], ps[h[k - 1]], ps[idx[i]]) <= 0) --k;
    h[k++] = idx[i];
  }
  h.resize(k - 1);
  if (h.size() < 3) throw Error("general-position", "all points collinear");

  // A non-vertex on a hull edge means a collinear triple among hull candidates.
  const int m = static_cast<int>(h.size());
  for (int e = 0; e < m; ++e) {
    const Point& a = ps[h[e]];
    const Point& b = ps[h[(e + 1) % m]];
    for (int i = 0; i < n; ++i) {
      if (i == h[e] || i == h[(e + 1) % m]) continue;
      if (orient_raw(a, b, ps[i]) == 0)
        throw Error("general-position", "point " + std::to_string(i) + " collinear with hull edge");
    }
  }
  return h;
}

std::vector<int> angular_sort(const Point& center, const Point& ray_to, const std::vector<Point>& pts,
                              Turn dir) {
  const coord rx = ray_to.x - center.x, ry = ray_to.y - center.y;
  if (rx == 0 && ry == 0) throw Error("invalid-input", "ray has zero length");
  const int s = dir == Turn::ccw ? 1 : -1;
  auto half = [&](const Point& p) {
    coord vx = p.x - center.x, vy = p.y - center.y;
    int c = s * sgn(cross(rx, ry, vx, vy));
    if (c > 0) return 0;
    if (c == 0 && rx * vx + ry * vy > 0) return 0;
    return 1;
  };
  for (const auto& p : pts)
    if (p == center) throw Error("invalid-input", "point equals sort center");
  std::vector<int> perm(pts.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
    int ha = half(pts[a]), hb = half(pts[b]);
    if (ha != hb) return ha < hb;
    const Point &p = pts[a], &q = pts[b];
    return s * sgn(cross(p.x - center.x, p.y - center.y, q.x - center.x, q.y - center.y)) > 0;
  });
  return perm;
}

bool inside_doubled(const Polygon& poly, const Point& q) {
  // Half-open crossing rule: a vertex exactly at ray height counts as above,
  // which is the symbolic perturbation of the ray by an infinitesimal upward tilt.
  bool in = false;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    Point a{2 * poly[i].x, 2 * poly[i].y};
    Point b{2 * poly[(i + 1) % n].x, 2 * poly[(i + 1) % n].y};
    if ((a.y > q.y) != (b.y > q.y)) {
      int s = orient_raw(a, b, q);
      if ((b.y > a.y && s > 0) || (b.y < a.y && s < 0)) in = !in;
    }
  }
  return in;
}

bool is_boundary_edge(int n, int i, int j) {
  int d = ((i - j) % n + n) % n;
  return d == 1 || d == n - 1;
}

bool is_diagonal(const Polygon& poly, int i, int j) {
  const int n = static_cast<int>(poly.size());
  if (i < 0 || j < 0 || i >= n || j >= n || i == j || is_boundary_edge(n, i, j)) return false;
  const Point &a = poly[i], &b = poly[j];
  for (int k = 0; k < n; ++k) {
    if (k != i && k != j && on_segment_raw(a, b, poly[k])) return false;
    if (cross_raw(a, b, poly[k], poly[(k + 1) % n])) return false;
  }
  return inside_doubled(poly, Point{a.x + b.x, a.y + b.y});
}

ValidationReport validate_polygon(const Polygon& poly) {
  ValidationReport r;
  const int n = static_cast<int>(poly.size());
  if (n < 3) {
    r.violations.push_back({"size", {}, "polygon needs at least 3 vertices"});
    return r;
  }
  for (int i = 0; i < n; ++i)
    if (!in_range(poly[i])) r.violations.push_back({"range", {i}, "coordinate exceeds 2^20"});
  if (!r.ok()) return r;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (poly[i] == poly[j]) r.violations.push_back({"duplicate", {i, j}, "repeated vertex"});
  for (int i = 0; i < n; ++i) {
    const Point &a = poly[i], &b = poly[(i + 1) % n];
    for (int j = i + 1; j < n; ++j) {
      const Point &c = poly[j], &d = poly[(j + 1) % n];
      bool bad;
      if (j == i + 1) {
        bad = orient_raw(a, b, d) == 0 && (on_segment_raw(a, b, d) || on_segment_raw(c, d, a));
      } else if (i == 0 && j == n - 1) {
        bad = orient_raw(c, d, b) == 0 && (on_segment_raw(c, d, b) || on_segment_raw(a, b, c));
      } else {
        bad = cross_raw(a, b, c, d) || on_segment_raw(a, b, c) || on_segment_raw(a, b, d) ||
              on_segment_raw(c, d, a) || on_segment_raw(c, d, b);
      }
      if (bad && n > 3)
        r.violations.push_back({"simplicity", {i, j}, "edges " + std::to_string(i) + " and " +
                                                          std::to_string(j) + " intersect"});
    }
  }
  coord a2 = area2(poly);
  if (a2 <= 0) r.violations.push_back({"orientation", {}, a2 == 0 ? "zero area" : "clockwise"});
  return r;
}

ValidationReport validate_pointset(const PointSet& ps) {
  ValidationReport r;
  const int n = static_cast<int>(ps.size());
  if (n < 3) r.violations.push_back({"size", {}, "point set needs at least 3 points"});
  for (int i = 0; i < n; ++i)
    if (!in_range(ps[i])) r.violations.push_back({"range", {i}, "coordinate exceeds 2^20"});
  if (!r.ok()) return r;
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return ps[a] < ps[b]; });
  for (int i = 1; i < n; ++i)
    if (ps[idx[i]] == ps[idx[i - 1]])
      r.violations.push_back({"duplicate", {std::min(idx[i - 1], idx[i]), std::max(idx[i - 1], idx[i])},
                              "repeated point"});
  if (!r.ok()) return r;
  for (auto& t : collinear_triples(ps))
    r.violations.push_back({"collinear", {t[0], t[1], t[2]}, "three collinear points"});
  return r;
}

}  // namespace dd
