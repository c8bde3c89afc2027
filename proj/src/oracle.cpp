#include "dualdiam/oracle.hpp"

#include <algorithm>
#include <string>

#include "dualdiam/polydp.hpp"

namespace dd {

void enumerate_triangulations(const Polygon& poly, const std::function<void(const std::vector<Tri>&)>& visit,
                              int max_n) {
  const int n = static_cast<int>(poly.size());
  if (n > max_n)
    throw Error("too-large", "oracle refuses n = " + std::to_string(n) + " (limit " + std::to_string(max_n) + ")");
  auto r = validate_polygon(poly);
  if (!r.ok()) throw Error("invalid-polygon", r.violations.front().message);
  const SideMatrix V = side_matrix(poly);
  std::vector<Tri> tris;
  std::vector<std::pair<int, int>> pending{{0, n - 1}};
  // Pop the newest open interval, branch on its apex, restore on the way back.
  std::function<void()> rec = [&] {
    if (pending.empty()) {
      visit(tris);
      return;
    }
    auto [i, j] = pending.back();
    pending.pop_back();
    if (j == i + 1) {
      rec();
    } else {
      for (int l = i + 1; l < j; ++l) {
        if (!V(i, l) || !V(l, j)) continue;
        tris.push_back({i, l, j});
        pending.push_back({i, l});
        pending.push_back({l, j});
        rec();
        pending.pop_back();
        pending.pop_back();
        tris.pop_back();
      }
    }
    pending.push_back({i, j});
  };
  rec();
}

int tree_diameter(int n, const std::vector<Tri>& tris) {
  const int t = static_cast<int>(tris.size());
  std::vector<int> owner(static_cast<std::size_t>(n) * n, -1);
  std::vector<std::vector<int>> adj(t);
  for (int k = 0; k < t; ++k) {
    const auto& tr = tris[k];
    for (auto [a, b] : {std::pair{tr[0], tr[1]}, std::pair{tr[1], tr[2]}, std::pair{tr[0], tr[2]}}) {
      auto key = static_cast<std::size_t>(std::min(a, b)) * n + std::max(a, b);
      if (owner[key] >= 0)
        adj[k].push_back(owner[key]), adj[owner[key]].push_back(k);
      else
        owner[key] = k;
    }
  }
  auto far = [&](int s, int& dist) {
    std::vector<int> d(t, -1), q{s};
    d[s] = 0;
    int best = s;
    for (std::size_t h = 0; h < q.size(); ++h) {
      int u = q[h];
      if (d[u] > d[best]) best = u;
      for (int v : adj[u])
        if (d[v] < 0) d[v] = d[u] + 1, q.push_back(v);
    }
    dist = d[best];
    return best;
  };
  int dist = 0;
  far(far(0, dist), dist);
  return dist;
}

OracleStats oracle_stats(const Polygon& poly, const OracleObserver& observe, int max_n) {
  const int n = static_cast<int>(poly.size());
  OracleStats s;
  enumerate_triangulations(poly, [&](const std::vector<Tri>& tris) {
    int d = tree_diameter(n, tris);
    int e = count_ears(n, tris);
    if (observe) observe(tris, d, e);
    if (s.triangulation_count == 0) {
      s.min_diameter = s.max_diameter = d;
      s.min_ears = s.max_ears = e;
    }
    ++s.triangulation_count;
    s.min_diameter = std::min(s.min_diameter, d);
    s.max_diameter = std::max(s.max_diameter, d);
    s.min_ears = std::min(s.min_ears, e);
    s.max_ears = std::max(s.max_ears, e);
    auto [it, fresh] = s.per_ear_count.try_emplace(e, EarClass{0, d, d});
    it->second.count++;
    it->second.min_diameter = std::min(it->second.min_diameter, d);
    it->second.max_diameter = std::max(it->second.max_diameter, d);
  }, max_n);
  return s;
}

}  // namespace dd
