#include "dualdiam/polydp.hpp"

#include <algorithm>
#include <string>

#include "dualdiam/convex.hpp"

namespace dd {

namespace {

void require_simple(const Polygon& poly) {
  auto r = validate_polygon(poly);
  if (!r.ok()) throw Error("invalid-polygon", r.violations.front().message);
}

std::size_t at(int n, int i, int j) { return static_cast<std::size_t>(i) * n + j; }

DPTable blank(int n, int d, int fill) {
  DPTable t{n, d, std::vector<int>(static_cast<std::size_t>(n) * n, fill),
            std::vector<int>(static_cast<std::size_t>(n) * n, -1)};
  for (int i = 0; i + 1 < n; ++i) t.M[at(n, i, i + 1)] = 0;
  return t;
}

void check_diameter(const Triangulation& t, int want) {
  int got = dual_diameter(t).diameter;
  if (got != want)
    throw Error("defect", "traceback diameter " + std::to_string(got) + " != " + std::to_string(want));
}

}  // namespace

SideMatrix side_matrix(const Polygon& poly) {
  const int n = static_cast<int>(poly.size());
  SideMatrix V{n, std::vector<char>(static_cast<std::size_t>(n) * n, 0)};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      bool ok = j == i + 1 || (i == 0 && j == n - 1) || is_diagonal(poly, i, j);
      V.v[at(n, i, j)] = V.v[at(n, j, i)] = ok;
    }
  return V;
}

DPTable min_table(const SideMatrix& V, int d) {
  const int n = V.n;
  DPTable t = blank(n, d, kInf);
  for (int len = 2; len < n; ++len)
    for (int i = 0; i + len < n; ++i) {
      int j = i + len;
      if (!V(i, j)) continue;
      int best = kInf, arg = -1;
      for (int l = i + 1; l < j; ++l) {
        if (!V(i, l) || !V(l, j)) continue;
        int a = t.M[at(n, i, l)], b = t.M[at(n, l, j)];
        if (a >= kInf || b >= kInf || a + b > d) continue;
        int I = std::max(a, b) + 1;
        if (I < best) best = I, arg = l;
      }
      t.M[at(n, i, j)] = best;
      t.choice[at(n, i, j)] = arg;
    }
  return t;
}

DPTable max_table(const SideMatrix& V, int d) {
  const int n = V.n;
  DPTable t = blank(n, d, kNegInf);
  for (int len = 2; len < n; ++len)
    for (int i = 0; i + len < n; ++i) {
      int j = i + len;
      if (!V(i, j)) continue;
      int best = kNegInf, arg = -1;
      for (int l = i + 1; l < j; ++l) {
        if (!V(i, l) || !V(l, j)) continue;
        int a = t.M[at(n, i, l)], b = t.M[at(n, l, j)], I;
        if (a <= kNegInf || b <= kNegInf)
          I = kNegInf;
        else if (a >= kInf || b >= kInf || a + b >= d)
          I = kInf;
        else
          I = std::max(a, b) + 1;
        if (I > best) best = I, arg = l;
      }
      t.M[at(n, i, j)] = best;
      t.choice[at(n, i, j)] = arg;
    }
  return t;
}

std::vector<Tri> trace(const DPTable& t) {
  std::vector<Tri> out;
  std::vector<std::pair<int, int>> st{{0, t.n - 1}};
  while (!st.empty()) {
    auto [i, j] = st.back();
    st.pop_back();
    if (j == i + 1) continue;
    int l = t.apex(i, j);
    if (l < 0) throw Error("defect", "traceback reached an infeasible cell");
    out.push_back({i, l, j});
    st.push_back({i, l});
    st.push_back({l, j});
  }
  return out;
}

std::optional<Triangulation> feasible_min(const Polygon& poly, int d) {
  require_simple(poly);
  auto t = min_table(side_matrix(poly), d);
  if (t.m(0, t.n - 1) >= kInf) return std::nullopt;
  return make_triangulation(polygon_domain(poly), trace(t));
}

std::optional<Triangulation> feasible_max(const Polygon& poly, int d) {
  require_simple(poly);
  auto t = max_table(side_matrix(poly), d);
  if (t.m(0, t.n - 1) < kInf) return std::nullopt;
  return make_triangulation(polygon_domain(poly), trace(t));
}

DtResult min_dt(const Polygon& poly) {
  require_simple(poly);
  return min_dt(poly, side_matrix(poly));
}

DtResult min_dt(const Polygon& poly, const SideMatrix& V) {
  const int n = V.n;
  int lo = lower_bound(n), hi = n - 3;
  while (lo < hi) {
    int mid = lo + (hi - lo) / 2;
    if (min_table(V, mid).m(0, n - 1) < kInf)
      hi = mid;
    else
      lo = mid + 1;
  }
  auto t = min_table(V, lo);
  if (t.m(0, n - 1) >= kInf) throw Error("defect", "no triangulation within n-3");
  DtResult r{lo, make_triangulation(polygon_domain(poly), trace(t))};
  check_diameter(r.t, r.d);
  return r;
}

DtResult max_dt(const Polygon& poly) {
  require_simple(poly);
  return max_dt(poly, side_matrix(poly));
}

DtResult max_dt(const Polygon& poly, const SideMatrix& V) {
  const int n = V.n;
  int lo = lower_bound(n), hi = n - 3;
  while (lo < hi) {
    int mid = lo + (hi - lo + 1) / 2;
    if (max_table(V, mid).m(0, n - 1) >= kInf)
      lo = mid;
    else
      hi = mid - 1;
  }
  auto t = max_table(V, lo);
  if (t.m(0, n - 1) < kInf) throw Error("defect", "lower bound not attained");
  DtResult r{lo, make_triangulation(polygon_domain(poly), trace(t))};
  check_diameter(r.t, r.d);
  return r;
}

EarResult extreme_ears(const Polygon& poly, EarMode mode) {
  require_simple(poly);
  return extreme_ears(poly, side_matrix(poly), mode);
}

EarResult extreme_ears(const Polygon& poly, const SideMatrix& V, EarMode mode) {
  const int n = V.n;
  const bool mn = mode == EarMode::min;
  const int none = mn ? kInf : kNegInf;
  DPTable t = blank(n, 0, none);
  for (int len = 2; len < n; ++len)
    for (int i = 0; i + len < n; ++i) {
      int j = i + len;
      if (!V(i, j)) continue;
      int best = none, arg = -1;
      for (int l = i + 1; l < j; ++l) {
        if (!V(i, l) || !V(l, j)) continue;
        int a = t.m(i, l), b = t.m(l, j);
        if (a == none || b == none) continue;
        int ear = is_boundary_edge(n, i, l) + is_boundary_edge(n, l, j) + is_boundary_edge(n, i, j) == 2;
        int e = a + b + ear;
        if (arg < 0 || (mn ? e < best : e > best)) best = e, arg = l;
      }
      t.M[at(n, i, j)] = best;
      t.choice[at(n, i, j)] = arg;
    }
  if (t.m(0, n - 1) == none) throw Error("defect", "polygon has no triangulation");
  EarResult r{t.m(0, n - 1), make_triangulation(polygon_domain(poly), trace(t))};
  if (count_ears(r.t) != r.count) throw Error("defect", "ear traceback mismatch");
  return r;
}

}  // namespace dd
