#include "dualdiam/pointset_min.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>

namespace dd {

int ceil_log2(long long n) {
  int k = 0;
  while ((1LL << k) < n) ++k;
  return k;
}

namespace {

void require_general(const PointSet& ps) {
  auto r = validate_pointset(ps);
  if (!r.ok()) throw Error("general-position", r.violations.front().message);
}

}  // namespace

Embedding embed_outerplanar(const ConvexPlan& plan, const PointSet& ps) {
  const int n = plan.n;
  if (n != static_cast<int>(ps.size())) throw Error("invalid-input", "plan and point set differ in size");
  require_general(ps);
  std::map<Edge, int> apex;  // chord (a,c) of the plan -> apex b with a<b<c
  for (const auto& t : plan.triangles) apex[{t[0], t[2]}] = t[1];

  Embedding e;
  e.mapping.assign(n, -1);
  auto hull = convex_hull(ps);

  // Plan interval a..b goes to points strictly right of P->Q; the (a,c) side needs k = c-a-1 of
  // them. Let Z be the first |pts|-k points clockwise around P and r the point of Z that sees
  // the rest of Z on the right of r->Q. Triangle PrQ is then empty. Every other point is on the
  // P side (A), the Q side (B), or in the wedge D behind r. Since A holds at most k points and
  // A+D at least k, a ray from r through D completes the P side with exactly k points.
  std::function<void(int, int, int, int, std::vector<int>)> split = [&](int a, int b, int P, int Q,
                                                                        std::vector<int> pts) {
    e.mapping[a] = P;
    e.mapping[b] = Q;
    if (b - a < 2) {
      if (!pts.empty()) throw Error("defect", "embedding left points in a closed edge");
      return;
    }
    auto it = apex.find({a, b});
    if (it == apex.end()) throw Error("invalid-input", "plan is not a triangulation of the convex cycle");
    const int c = it->second, k = c - a - 1;
    std::vector<Point> coords;
    for (int v : pts) coords.push_back(ps[v]);
    auto perm = angular_sort(ps[P], ps[Q], coords, Turn::cw);
    const int z = static_cast<int>(pts.size()) - k;
    int r = pts[perm[0]];
    for (int i = 1; i < z; ++i)
      if (orient(ps[r], ps[Q], ps[pts[perm[i]]]) > 0) r = pts[perm[i]];

    std::vector<int> X, Y, D;
    for (int v : pts) {
      if (v == r) continue;
      bool pside = orient(ps[P], ps[r], ps[v]) < 0, qside = orient(ps[r], ps[Q], ps[v]) < 0;
      if (pside && qside)
        D.push_back(v);
      else if (pside)
        Y.push_back(v);
      else if (qside)
        X.push_back(v);
      else
        throw Error("defect", "apex triangle is not empty");
    }
    const int need = k - static_cast<int>(Y.size());
    if (need < 0 || need > static_cast<int>(D.size())) throw Error("defect", "apex split count out of reach");
    // Sort D from the ray opposite Q toward the ray opposite P.
    const Point& R = ps[r];
    Point away_q{2 * R.x - ps[Q].x, 2 * R.y - ps[Q].y};
    coord cx = (R.x - ps[Q].x) * (R.y - ps[P].y) - (R.y - ps[Q].y) * (R.x - ps[P].x);
    std::vector<Point> dc;
    for (int v : D) dc.push_back(ps[v]);
    auto dperm = angular_sort(R, away_q, dc, cx > 0 ? Turn::ccw : Turn::cw);
    for (int i = 0; i < static_cast<int>(dperm.size()); ++i) (i < need ? Y : X).push_back(D[dperm[i]]);
    e.triangles.push_back(sorted_tri(P, r, Q));
    split(c, b, r, Q, std::move(X));
    split(a, c, P, r, std::move(Y));
  };

  const int p = hull.front(), q = hull.back();
  std::vector<int> rest;
  for (int i = 0; i < n; ++i)
    if (i != p && i != q) rest.push_back(i);
  split(0, n - 1, p, q, rest);

  std::set<Edge> es;
  for (const auto& t : e.triangles)
    for (auto [x, y] : {Edge{t[0], t[1]}, Edge{t[1], t[2]}, Edge{t[0], t[2]}}) es.insert({x, y});
  e.drawn_edges.assign(es.begin(), es.end());
  std::sort(e.triangles.begin(), e.triangles.end());

  // Exhaustive planarity check of the straight-line drawing.
  const auto& d = e.drawn_edges;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j)
      if (properly_cross(ps[d[i].first], ps[d[i].second], ps[d[j].first], ps[d[j].second]))
        throw Error("defect", "embedding is not plane: (" + std::to_string(d[i].first) + "," +
                                  std::to_string(d[i].second) + ") x (" + std::to_string(d[j].first) + "," +
                                  std::to_string(d[j].second) + ")");
  return e;
}

Triangulation triangulate_pockets(const PointSet& ps, const Embedding& e, PocketReport* report) {
  const int n = static_cast<int>(ps.size());
  if (static_cast<int>(e.mapping.size()) != n) throw Error("invalid-input", "embedding does not cover the point set");
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) pos[e.mapping[i]] = i;
  if (std::ranges::count(pos, -1)) throw Error("invalid-input", "embedding mapping is not a bijection");

  auto hull = convex_hull(ps);
  const int h = static_cast<int>(hull.size());
  std::vector<Tri> tris = e.triangles;
  PocketReport rep;
  for (int i = 0; i < h; ++i) {
    int a = hull[i], b = hull[(i + 1) % h];
    int gap = ((pos[b] - pos[a]) % n + n) % n;
    if (gap == 1) continue;
    // Pocket: hull edge a->b, then the outer cycle walked back from b to a.
    std::vector<int> ids{a, b};
    for (int s = pos[b] - 1; ((s % n) + n) % n != pos[a]; --s) ids.push_back(e.mapping[((s % n) + n) % n]);
    Polygon poly;
    for (int v : ids) poly.push_back(ps[v]);
    auto v = validate_polygon(poly);
    if (!v.ok()) throw Error("defect", "pocket is not a simple ccw polygon: " + v.violations.front().message);
    auto pt = complete_to_triangulation(polygon_domain(poly), {});
    for (const auto& t : pt.triangles) tris.push_back(sorted_tri(ids[t[0]], ids[t[1]], ids[t[2]]));
    ++rep.pockets;
    rep.pocket_triangles += static_cast<int>(pt.triangles.size());
  }
  auto t = make_triangulation(pointset_domain(ps), std::move(tris));

  std::set<Tri> plan(e.triangles.begin(), e.triangles.end());
  std::vector<int> sources;
  for (int i = 0; i < static_cast<int>(t.triangles.size()); ++i)
    if (plan.count(t.triangles[i])) sources.push_back(i);
  auto dist = bfs_distances(build_dual(t), sources);
  for (int i = 0; i < static_cast<int>(t.triangles.size()); ++i)
    if (!plan.count(t.triangles[i])) rep.max_distance = std::max(rep.max_distance, dist[i]);
  rep.bound = ceil_log2(n) + 2;
  if (report) *report = rep;
  return t;
}

PointsetMinResult pointset_min_dt(const PointSet& ps) {
  require_general(ps);
  const int n = static_cast<int>(ps.size());
  PointsetMinResult r;
  r.embedding = embed_outerplanar(balanced_plan(n), ps);
  r.t = triangulate_pockets(ps, r.embedding, &r.pockets);
  r.diameter = dual_diameter(r.t).diameter;
  int bound = convex_min_value(n) + 2 * (ceil_log2(n) + 2);
  if (r.diameter > bound)
    throw Error("defect", "diameter " + std::to_string(r.diameter) + " exceeds " + std::to_string(bound));
  return r;
}

}  // namespace dd
