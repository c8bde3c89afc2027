#include "dualdiam/pointset_max.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace dd {

namespace {

void require_general(const PointSet& ps) {
  auto r = validate_pointset(ps);
  if (!r.ok()) throw Error("general-position", r.violations.front().message);
}

// Patience sorting with predecessor links; strictly increasing.
std::vector<int> lis(const std::vector<int>& a) {
  std::vector<int> tails, prev(a.size(), -1);
  for (int i = 0; i < static_cast<int>(a.size()); ++i) {
    auto it = std::lower_bound(tails.begin(), tails.end(), a[i], [&](int t, int v) { return a[t] < v; });
    if (it != tails.begin()) prev[i] = *(it - 1);
    if (it == tails.end())
      tails.push_back(i);
    else
      *it = i;
  }
  std::vector<int> out;
  for (int i = tails.empty() ? -1 : tails.back(); i >= 0; i = prev[i]) out.push_back(i);
  std::reverse(out.begin(), out.end());
  return out;
}

int triangle_on_side(const Triangulation& t, int a, int b, int side_pt) {
  const auto& p = t.points();
  int want = orient(p[a], p[b], p[side_pt]);
  for (int i = 0; i < static_cast<int>(t.triangles.size()); ++i) {
    const auto& tr = t.triangles[i];
    if (std::find(tr.begin(), tr.end(), a) == tr.end() || std::find(tr.begin(), tr.end(), b) == tr.end()) continue;
    int z = tr[0] + tr[1] + tr[2] - a - b;
    if (orient(p[a], p[b], p[z]) == want) return i;
  }
  throw Error("defect", "no triangle on the requested side of an edge");
}

bool clear_of(const std::vector<Point>& p, const std::vector<Edge>& es, int a, int b) {
  for (const auto& [x, y] : es)
    if (properly_cross(p[a], p[b], p[x], p[y])) return false;
  return true;
}

}  // namespace

Monotone longest_monotone_subsequence(const std::vector<int>& seq) {
  std::set<int> seen(seq.begin(), seq.end());
  if (seen.size() != seq.size()) throw Error("invalid-input", "sequence has duplicate values");
  std::vector<int> neg;
  for (int v : seq) neg.push_back(-v);
  auto up = lis(seq), down = lis(neg);
  if (down.size() > up.size()) return {Direction::dec, down};
  return {Direction::inc, up};
}

PointsetMaxResult pointset_max_dt(const PointSet& ps) {
  require_general(ps);
  const int n = static_cast<int>(ps.size());
  auto ccw = convex_hull(ps);
  PointsetMaxResult res;
  auto& v = res.fan.hull;  // v[0] is v_1
  v.push_back(ccw[0]);
  for (int i = static_cast<int>(ccw.size()) - 1; i >= 1; --i) v.push_back(ccw[i]);
  const int h = static_cast<int>(v.size());
  std::vector<char> on_hull(n, 0);
  for (int x : v) on_hull[x] = 1;

  std::vector<Edge> edges;
  for (int i = 0; i < h; ++i) edges.push_back({v[i], v[(i + 1) % h]});
  for (int i = 2; i < h - 1; ++i) edges.push_back({v[0], v[i]});

  for (int i = 1; i + 1 < h; ++i) {  // wedge v_1 v_{i+1} v_{i+2} in 1-based labels
    const Point &A = ps[v[0]], &B = ps[v[i]], &C = ps[v[i + 1]];
    Wedge wd;
    wd.i = i + 1;
    std::vector<int> inside;
    for (int x = 0; x < n; ++x) {
      if (on_hull[x]) continue;
      int s1 = orient(A, B, ps[x]), s2 = orient(B, C, ps[x]), s3 = orient(C, A, ps[x]);
      if (s1 == s2 && s2 == s3) inside.push_back(x);
    }
    if (!inside.empty()) {
      std::vector<Point> q;
      for (int x : inside) q.push_back(ps[x]);
      auto by_v1 = angular_sort(A, B, q, Turn::cw);
      auto by_vi = angular_sort(B, A, q, Turn::ccw);
      std::vector<int> rank(inside.size());
      for (int r = 0; r < static_cast<int>(by_vi.size()); ++r) rank[by_vi[r]] = r;
      for (int k : by_v1) {
        wd.interior.push_back(inside[k]);
        wd.ranks.push_back(rank[k]);
      }
      auto mono = longest_monotone_subsequence(wd.ranks);
      wd.dir = mono.dir;
      for (int k : mono.indices) wd.sigma.push_back(wd.interior[k]);
      const int anchor = wd.dir == Direction::inc ? v[i] : v[i + 1];
      for (std::size_t k = 0; k < wd.sigma.size(); ++k) {
        edges.push_back({v[0], wd.sigma[k]});
        edges.push_back({anchor, wd.sigma[k]});
        if (k > 0) edges.push_back({wd.sigma[k - 1], wd.sigma[k]});
      }
    }
    res.fan.wedges.push_back(std::move(wd));
  }

  res.t = complete_to_triangulation(pointset_domain(ps), edges);
  auto g = build_dual(res.t);
  res.diameter = dual_diameter(g).diameter;
  for (auto& wd : res.fan.wedges) {
    int i = wd.i - 1;
    int s = triangle_on_side(res.t, v[0], v[i], v[i + 1]);
    int e = triangle_on_side(res.t, v[0], v[i + 1], v[i]);
    wd.separation = bfs_distances(g, {s})[e];
  }
  if (static_cast<long long>(res.diameter) * res.diameter < n - 3)
    throw Error("defect", "dual diameter " + std::to_string(res.diameter) + " below sqrt(n-3)");
  return res;
}

ZigzagResult zigzag_triangulation(const PointSet& ps, const std::vector<int>& subset) {
  require_general(ps);
  const int k = static_cast<int>(subset.size());
  if (k < 3) throw Error("invalid-input", "convex subset needs at least 3 points");
  std::vector<Point> cp;
  for (int x : subset) cp.push_back(ps[x]);
  auto ch = convex_hull(cp);
  if (static_cast<int>(ch.size()) != k) throw Error("invalid-input", "subset is not in convex position");
  ZigzagResult res;
  for (int x : ch) res.order.push_back(subset[x]);
  auto c = [&](int i) { return res.order[i - 1]; };  // 1-based c_i

  std::vector<Edge> edges;
  std::set<Edge> have;
  auto add = [&](int a, int b) {
    Edge e{std::min(a, b), std::max(a, b)};
    if (a != b && have.insert(e).second) edges.push_back(e);
  };
  for (int i = 1; i <= k; ++i) add(c(i), c(i % k + 1));
  for (int i = 1; i < k / 2; ++i) {
    add(c(i), c(k - i));
    add(c(i), c(k - i - 1));
  }
  // Edges from extreme points of S to C, kept only where they cross nothing.
  std::set<int> inC(subset.begin(), subset.end());
  auto hull = convex_hull(ps);
  for (int i = 0; i < static_cast<int>(hull.size()); ++i) add(hull[i], hull[(i + 1) % hull.size()]);
  for (int s : hull) {
    if (inC.count(s)) continue;
    for (int x : res.order)
      if (!have.count({std::min(s, x), std::max(s, x)}) && clear_of(ps, edges, s, x)) add(s, x);
  }
  res.t = complete_to_triangulation(pointset_domain(ps), edges);
  std::set<Edge> hull_edges;
  for (int i = 0; i < static_cast<int>(hull.size()); ++i) {
    int a = hull[i], b = hull[(i + 1) % hull.size()];
    hull_edges.insert({std::min(a, b), std::max(a, b)});
  }
  for (const auto& e : res.t.edges())
    if (!hull_edges.count(e) && !inC.count(e.first) && !inC.count(e.second)) res.relaxed = true;
  res.diameter = dual_diameter(res.t).diameter;
  if (res.diameter < k / 2 - 2)
    throw Error("defect", "zig-zag diameter " + std::to_string(res.diameter) + " below floor(k/2)-2");
  return res;
}

std::vector<int> max_convex_subset(const PointSet& ps) {
  require_general(ps);
  const int n = static_cast<int>(ps.size());
  std::vector<int> best;
  auto below = [&](int a, int b) { return ps[a].y != ps[b].y ? ps[a].y < ps[b].y : ps[a].x < ps[b].x; };
  for (int a = 0; a < n; ++a) {
    // a is the lowest vertex; the others are sorted by angle around it.
    std::vector<int> q;
    for (int j = 0; j < n; ++j)
      if (j != a && below(a, j)) q.push_back(j);
    const int m = static_cast<int>(q.size());
    if (m < 2) continue;
    std::vector<Point> qp;
    for (int j : q) qp.push_back(ps[j]);
    auto perm = angular_sort(ps[a], Point{ps[a].x + 1, ps[a].y}, qp);
    std::vector<int> o;
    for (int j : perm) o.push_back(q[j]);
    // len[i][j]: vertices on a convex chain a -> ... -> o[i] -> o[j]; par[i][j]: vertex before o[i].
    std::vector<std::vector<int>> len(m, std::vector<int>(m, 0)), par(m, std::vector<int>(m, -1));
    for (int j = 0; j < m; ++j)
      for (int i = 0; i < j; ++i) {
        if (orient(ps[a], ps[o[i]], ps[o[j]]) <= 0) continue;
        len[i][j] = 3;
        for (int hh = 0; hh < i; ++hh)
          if (len[hh][i] && len[hh][i] + 1 > len[i][j] && orient(ps[o[hh]], ps[o[i]], ps[o[j]]) > 0)
            len[i][j] = len[hh][i] + 1, par[i][j] = hh;
      }
    for (int j = 0; j < m; ++j)
      for (int i = 0; i < j; ++i) {
        if (!len[i][j] || len[i][j] <= static_cast<int>(best.size())) continue;
        if (orient(ps[o[i]], ps[o[j]], ps[a]) <= 0) continue;
        std::vector<int> chain{o[j]};
        for (int x = i, y = j; x >= 0;) {
          chain.push_back(o[x]);
          int px = par[x][y];
          y = x;
          x = px;
        }
        chain.push_back(a);
        std::reverse(chain.begin(), chain.end());
        best = chain;
      }
  }
  return best;
}

}  // namespace dd
