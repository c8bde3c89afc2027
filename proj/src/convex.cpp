#include "dualdiam/convex.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <string>

namespace dd {

namespace {

// Smallest m >= 1 with n <= 3*2^m.
int level(int n) {
  int m = 1;
  while (3LL << m < n) ++m;
  return m;
}

void need3(int n) {
  if (n < 3) throw Error("invalid-input", "n must be at least 3");
}

void split(int a, int b, int N, std::vector<Tri>& out) {
  if (b - a < 2) return;
  int mid = (a + b) / 2;
  out.push_back(sorted_tri(a % N, mid % N, b % N));
  split(a, mid, N, out);
  split(mid, b, N, out);
}

}  // namespace

int convex_min_value(int n) {
  need3(n);
  if (n == 3) return 0;
  int m = level(n);
  return n <= (4 << (m - 1)) ? 2 * m - 1 : 2 * m;
}

int lower_bound(int n) { return convex_min_value(n); }

double moore_bound(int t) {
  if (t < 1) throw Error("invalid-input", "t must be at least 1");
  return std::log2((t + 2) / 3.0);
}

ConvexPlan balanced_plan(int n) {
  need3(n);
  if (n == 3) return {3, {{0, 1, 2}}};
  const int m = level(n);
  const int N = 3 << m, third = N / 3, ears_per = 1 << (m - 1);

  // T1: central triangle, each side closed by a balanced binary split.
  std::vector<Tri> t1{sorted_tri(0, third, 2 * third)};
  for (int s = 0; s < 3; ++s) split(s * third, (s + 1) * third, N, t1);

  // Ear tips of side s are s*third + 1 + 2t; removal runs clockwise from the last tip.
  auto tip = [&](int s, int t) { return s * third + 1 + 2 * t; };
  std::set<int> gone;
  auto strip = [&](int s, int count) {
    for (int t = ears_per - 1; t >= ears_per - count; --t) gone.insert(tip(s, t));
  };
  if (n > 4 * ears_per) {
    strip(2, N - n);
  } else {
    strip(1, ears_per);
    strip(2, ears_per);
    strip(0, 4 * ears_per - n);
  }
  std::vector<int> label(N, -1);
  for (int v = 0, k = 0; v < N; ++v)
    if (!gone.count(v)) label[v] = k++;
  ConvexPlan plan{n, {}};
  for (const auto& t : t1) {
    if (gone.count(t[0]) || gone.count(t[1]) || gone.count(t[2])) continue;
    plan.triangles.push_back(sorted_tri(label[t[0]], label[t[1]], label[t[2]]));
  }
  if (static_cast<int>(plan.triangles.size()) != n - 2) throw Error("defect", "balanced plan has wrong size");
  return plan;
}

Polygon regular_polygon(int n) {
  need3(n);
  const double R = static_cast<double>(1 << 19);
  Polygon p;
  for (int i = 0; i < n; ++i) {
    double a = 2 * std::numbers::pi * i / n;
    p.push_back({static_cast<coord>(std::llround(R * std::cos(a))), static_cast<coord>(std::llround(R * std::sin(a)))});
  }
  for (int i = 0; i < n; ++i)
    if (orient(p[(i + n - 1) % n], p[i], p[(i + 1) % n]) <= 0)
      throw Error("defect", "rounded " + std::to_string(n) + "-gon is not strictly convex");
  return p;
}

}  // namespace dd
