#include "dualdiam/tri.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace dd {

namespace {

Edge norm(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

std::string tri_str(const Tri& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

// Segment a-b passes through no other domain point and is inside the domain.
bool valid_segment(const Domain& d, int a, int b) {
  const int n = static_cast<int>(d.pts.size());
  if (a == b || a < 0 || b < 0 || a >= n || b >= n) return false;
  if (d.kind == DomainKind::polygon) return is_boundary_edge(n, a, b) || is_diagonal(d.pts, a, b);
  for (int k = 0; k < n; ++k)
    if (k != a && k != b && on_segment(d.pts[a], d.pts[b], d.pts[k])) return false;
  return true;
}

bool crosses(const std::vector<Point>& p, const Edge& e, const Edge& f) {
  return properly_cross(p[e.first], p[e.second], p[f.first], p[f.second]);
}

}  // namespace

DomainPtr polygon_domain(Polygon poly) {
  return std::make_shared<const Domain>(Domain{DomainKind::polygon, std::move(poly)});
}

DomainPtr pointset_domain(PointSet ps) {
  return std::make_shared<const Domain>(Domain{DomainKind::pointset, std::move(ps)});
}

Tri sorted_tri(int a, int b, int c) {
  Tri t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

Triangulation make_triangulation(DomainPtr domain, std::vector<Tri> tris) {
  for (auto& t : tris) std::sort(t.begin(), t.end());
  std::sort(tris.begin(), tris.end());
  return Triangulation{std::move(domain), std::move(tris)};
}

std::vector<Edge> Triangulation::edges() const {
  std::set<Edge> s;
  for (const auto& t : triangles) {
    s.insert(norm(t[0], t[1]));
    s.insert(norm(t[1], t[2]));
    s.insert(norm(t[0], t[2]));
  }
  return {s.begin(), s.end()};
}

DualGraph build_dual(const std::vector<Tri>& tris) {
  std::map<Edge, std::vector<int>> owners;
  for (int i = 0; i < static_cast<int>(tris.size()); ++i) {
    const auto& t = tris[i];
    for (auto e : {norm(t[0], t[1]), norm(t[1], t[2]), norm(t[0], t[2])}) owners[e].push_back(i);
  }
  DualGraph g;
  g.adj.assign(tris.size(), {});
  for (const auto& [e, ts] : owners) {
    if (ts.size() > 2)
      throw Error("invalid-triangulation",
                  "edge (" + std::to_string(e.first) + "," + std::to_string(e.second) + ") in more than two triangles");
    if (ts.size() == 2) {
      g.adj[ts[0]].push_back(ts[1]);
      g.adj[ts[1]].push_back(ts[0]);
      ++g.edge_count;
    }
  }
  for (auto& a : g.adj) std::sort(a.begin(), a.end());
  bool connected = tris.empty() ||
                   std::ranges::none_of(bfs_distances(g, {0}), [](int d) { return d < 0; });
  g.is_tree = connected && g.edge_count + 1 == static_cast<int>(tris.size());
  return g;
}

DualGraph build_dual(const Triangulation& t) { return build_dual(t.triangles); }

std::vector<int> bfs_distances(const DualGraph& g, const std::vector<int>& sources) {
  std::vector<int> dist(g.adj.size(), -1), q;
  q.reserve(g.adj.size());
  for (int s : sources)
    if (dist[s] < 0) dist[s] = 0, q.push_back(s);
  for (std::size_t h = 0; h < q.size(); ++h)
    for (int v : g.adj[q[h]])
      if (dist[v] < 0) dist[v] = dist[q[h]] + 1, q.push_back(v);
  return dist;
}

namespace {

// BFS from s; returns (farthest node, parent array, distance array).
struct Sweep {
  int far;
  std::vector<int> parent, dist;
};

Sweep sweep(const DualGraph& g, int s) {
  Sweep r{s, std::vector<int>(g.adj.size(), -1), std::vector<int>(g.adj.size(), -1)};
  std::vector<int> q{s};
  r.dist[s] = 0;
  for (std::size_t h = 0; h < q.size(); ++h) {
    int u = q[h];
    if (r.dist[u] > r.dist[r.far]) r.far = u;
    for (int v : g.adj[u])
      if (r.dist[v] < 0) r.dist[v] = r.dist[u] + 1, r.parent[v] = u, q.push_back(v);
  }
  return r;
}

std::vector<int> path_to(const Sweep& s, int t) {
  std::vector<int> p;
  for (int v = t; v >= 0; v = s.parent[v]) p.push_back(v);
  std::reverse(p.begin(), p.end());
  return p;
}

}  // namespace

DiameterReport dual_diameter(const DualGraph& g) {
  if (g.adj.empty()) throw Error("invalid-input", "empty dual graph");
  Sweep first = sweep(g, 0);
  if (std::ranges::any_of(first.dist, [](int d) { return d < 0; }))
    throw Error("disconnected", "dual graph is disconnected");
  if (g.is_tree) {
    Sweep second = sweep(g, first.far);
    return {second.dist[second.far], path_to(second, second.far)};
  }
  DiameterReport best{-1, {}};
  for (int s = 0; s < g.size(); ++s) {
    Sweep w = sweep(g, s);
    if (w.dist[w.far] > best.diameter) best = {w.dist[w.far], path_to(w, w.far)};
  }
  return best;
}

int count_ears(int n, const std::vector<Tri>& tris) {
  int ears = 0;
  for (const auto& t : tris) {
    int b = is_boundary_edge(n, t[0], t[1]) + is_boundary_edge(n, t[1], t[2]) + is_boundary_edge(n, t[0], t[2]);
    ears += b == 2;
  }
  return ears;
}

int count_ears(const Triangulation& t) {
  if (!t.is_polygon()) throw Error("domain", "ears are defined for polygon domains only");
  return count_ears(t.n(), t.triangles);
}

ValidationReport validate_triangulation(const Triangulation& t) {
  ValidationReport r;
  const auto& p = t.points();
  const int n = t.n();
  coord domain_area = 0;
  int expected = 0;
  if (t.is_polygon()) {
    expected = n - 2;
    domain_area = area2(p);
  } else {
    try {
      auto h = convex_hull(p);
      expected = 2 * n - static_cast<int>(h.size()) - 2;
      std::vector<Point> hp;
      for (int i : h) hp.push_back(p[i]);
      domain_area = area2(hp);
    } catch (const Error& e) {
      r.violations.push_back({"domain", {}, e.what()});
      return r;
    }
  }
  if (static_cast<int>(t.triangles.size()) != expected)
    r.violations.push_back({"count", {}, "expected " + std::to_string(expected) + " triangles, got " +
                                             std::to_string(t.triangles.size())});
  std::vector<int> used(n, 0);
  coord covered = 0;
  std::map<Edge, int> mult;
  for (int i = 0; i < static_cast<int>(t.triangles.size()); ++i) {
    const auto& tr = t.triangles[i];
    if (std::ranges::any_of(tr, [&](int v) { return v < 0 || v >= n; }) || tr[0] == tr[1] ||
        tr[1] == tr[2] || tr[0] == tr[2]) {
      r.violations.push_back({"index", {i}, "bad triangle " + tri_str(tr)});
      continue;
    }
    for (int v : tr) used[v] = 1;
    coord a = area2(std::vector<Point>{p[tr[0]], p[tr[1]], p[tr[2]]});
    if (a == 0) r.violations.push_back({"degenerate", {tr[0], tr[1], tr[2]}, "zero-area triangle " + tri_str(tr)});
    covered += a < 0 ? -a : a;
    for (auto e : {norm(tr[0], tr[1]), norm(tr[1], tr[2]), norm(tr[0], tr[2])}) ++mult[e];
  }
  if (!r.ok()) return r;
  for (int v = 0; v < n; ++v)
    if (!used[v]) r.violations.push_back({"unused", {v}, "vertex " + std::to_string(v) + " unused"});
  if (covered != domain_area) {
    std::string kind = covered < domain_area ? "area-deficit" : "area-excess";
    r.violations.push_back({kind, {}, "triangles cover " + std::to_string(covered) + " of " +
                                          std::to_string(domain_area) + " (doubled area)"});
  }
  std::vector<Edge> edges;
  for (const auto& [e, m] : mult) {
    edges.push_back(e);
    if (m > 2) r.violations.push_back({"multiplicity", {e.first, e.second}, "edge in more than two triangles"});
    if (!valid_segment(*t.domain, e.first, e.second))
      r.violations.push_back({"edge", {e.first, e.second}, "edge leaves the domain or hits a point"});
  }
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      if (crosses(p, edges[i], edges[j]))
        r.violations.push_back({"crossing",
                                {edges[i].first, edges[i].second, edges[j].first, edges[j].second},
                                "edges cross"});
  return r;
}

std::vector<std::vector<int>> plane_faces(const std::vector<Point>& pts, const std::vector<Edge>& edges) {
  const int n = static_cast<int>(pts.size());
  std::vector<std::vector<int>> nb(n);
  for (auto [a, b] : edges) nb[a].push_back(b), nb[b].push_back(a);
  for (int v = 0; v < n; ++v) {
    std::vector<Point> q;
    for (int u : nb[v]) q.push_back(pts[u]);
    auto perm = angular_sort(pts[v], Point{pts[v].x + 1, pts[v].y}, q);
    std::vector<int> s;
    for (int i : perm) s.push_back(nb[v][i]);
    nb[v] = std::move(s);
  }
  std::map<std::pair<int, int>, int> pos;  // (v,u) -> index of u in nb[v]
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < static_cast<int>(nb[v].size()); ++i) pos[{v, nb[v][i]}] = i;
  std::set<std::pair<int, int>> seen;
  std::vector<std::vector<int>> faces;
  for (int u0 = 0; u0 < n; ++u0)
    for (int v0 : nb[u0]) {
      if (seen.count({u0, v0})) continue;
      std::vector<int> f;
      int u = u0, v = v0;
      while (!seen.count({u, v})) {
        seen.insert({u, v});
        f.push_back(u);
        int d = static_cast<int>(nb[v].size());
        int w = nb[v][(pos[{v, u}] + d - 1) % d];
        u = v;
        v = w;
      }
      std::vector<Point> fp;
      for (int x : f) fp.push_back(pts[x]);
      if (area2(fp) > 0) faces.push_back(std::move(f));
    }
  return faces;
}

Triangulation complete_to_triangulation(DomainPtr domain, const std::vector<Edge>& partial) {
  const auto& p = domain->pts;
  const int n = static_cast<int>(p.size());
  std::set<Edge> have;
  std::vector<Edge> cur;
  for (auto [a, b] : partial) {
    Edge e = norm(a, b);
    if (!valid_segment(*domain, e.first, e.second))
      throw Error("invalid-input", "partial edge (" + std::to_string(a) + "," + std::to_string(b) + ") is not valid");
    if (have.insert(e).second) cur.push_back(e);
  }
  for (std::size_t i = 0; i < cur.size(); ++i)
    for (std::size_t j = i + 1; j < cur.size(); ++j)
      if (crosses(p, cur[i], cur[j])) throw Error("invalid-input", "partial edges cross");
  if (domain->kind == DomainKind::polygon)
    for (int i = 0; i < n; ++i)
      if (have.insert(norm(i, (i + 1) % n)).second) cur.push_back(norm(i, (i + 1) % n));

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (have.count({i, j}) || !valid_segment(*domain, i, j)) continue;
      Edge e{i, j};
      if (std::ranges::any_of(cur, [&](const Edge& f) { return crosses(p, e, f); })) continue;
      have.insert(e);
      cur.push_back(e);
    }

  std::vector<Tri> tris;
  for (const auto& f : plane_faces(p, cur)) {
    if (f.size() != 3) throw Error("defect", "completion left a non-triangular face");
    tris.push_back(sorted_tri(f[0], f[1], f[2]));
  }
  return make_triangulation(std::move(domain), std::move(tris));
}

std::vector<Edge> unavoidable_edges(const Polygon& poly) {
  const int n = static_cast<int>(poly.size());
  std::vector<Edge> out, diags;
  for (int i = 0; i < n; ++i) out.push_back(norm(i, (i + 1) % n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (is_diagonal(poly, i, j)) diags.push_back({i, j});
  for (const auto& d : diags)
    if (std::ranges::none_of(diags, [&](const Edge& f) { return crosses(poly, d, f); })) out.push_back(d);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace dd
