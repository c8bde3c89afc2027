// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <future>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dualdiam/convex.hpp"
#include "dualdiam/gadgets.hpp"
#include "dualdiam/io.hpp"
#include "dualdiam/oracle.hpp"
#include "dualdiam/pointset_max.hpp"
#include "dualdiam/pointset_min.hpp"
#include "dualdiam/polydp.hpp"

using namespace dd;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

// Global audit behind criterion 11.
struct Audit {
  long long polygon = 0, pointset = 0, below = 0;
  std::string first_failure;
  void diameter(bool is_polygon, int n, int t, int d) {
    int bound = is_polygon ? lower_bound(n) : static_cast<int>(std::ceil(moore_bound(t) - 1e-12));
    (is_polygon ? polygon : pointset)++;
    if (d < bound) {
      if (below++ == 0) first_failure = "n=" + std::to_string(n) + " d=" + std::to_string(d);
    }
  }
  void check(const Triangulation& t) {
    diameter(t.is_polygon(), t.n(), static_cast<int>(t.triangles.size()), dual_diameter(t).diameter);
  }
  OracleObserver observer(int n) {
    return [this, n](const std::vector<Tri>& t, int d, int) { diameter(true, n, static_cast<int>(t.size()), d); };
  }
} audit;

struct Line {
  bool ok = true;
  std::ostringstream detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail << "first failure: " << what << "; ";
    ok = ok && cond;
  }
};

int failures = 0;

void report(int id, const std::string& title, Line& l, double secs, double limit = 0) {
  if (limit > 0 && secs > limit) l.require(false, "runtime " + std::to_string(secs) + "s over " + std::to_string(limit) + "s");
  std::printf("criterion %2d: %s  %s  [%s%.2fs]\n", id, l.ok ? "PASS" : "FAIL", title.c_str(), l.detail.str().c_str(), secs);
  std::fflush(stdout);
  failures += !l.ok;
}

template <class F>
void run(int id, const std::string& title, double limit, F body) {
  Line l;
  auto t0 = Clock::now();
  try {
    body(l);
  } catch (const std::exception& e) {
    l.require(false, std::string("exception: ") + e.what());
  }
  report(id, title, l, seconds_since(t0), limit);
}

// Worst diameter among minimum-ear triangulations: ear DP, then a max-diameter feasibility DP
// that only allows apexes consistent with an ear-optimal subtriangulation.
int worst_min_ear_diameter(const Polygon& poly) {
  const int n = static_cast<int>(poly.size());
  const int INF = 1 << 29;
  auto V = side_matrix(poly);
  auto bd = [&](int a, int b) { return is_boundary_edge(n, a, b); };
  auto ear = [&](int i, int l, int j) { return (bd(i, l) + bd(l, j) + bd(i, j)) == 2 ? 1 : 0; };
  std::vector<std::vector<int>> E(n, std::vector<int>(n, INF));
  for (int i = 0; i + 1 < n; ++i) E[i][i + 1] = 0;
  for (int len = 2; len < n; ++len)
    for (int i = 0; i + len < n; ++i) {
      int j = i + len;
      if (!V(i, j)) continue;
      for (int l = i + 1; l < j; ++l)
        if (V(i, l) && V(l, j) && E[i][l] < INF && E[l][j] < INF)
          E[i][j] = std::min(E[i][j], E[i][l] + E[l][j] + ear(i, l, j));
    }
  auto allowed = [&](int i, int l, int j) {
    return V(i, l) && V(l, j) && E[i][l] < INF && E[l][j] < INF && E[i][l] + E[l][j] + ear(i, l, j) == E[i][j];
  };
  auto feasible = [&](int d) {
    std::vector<std::vector<int>> M(n, std::vector<int>(n, -INF));
    for (int i = 0; i + 1 < n; ++i) M[i][i + 1] = 0;
    for (int len = 2; len < n; ++len)
      for (int i = 0; i + len < n; ++i) {
        int j = i + len;
        if (!V(i, j) || E[i][j] >= INF) continue;
        int best = -INF;
        for (int l = i + 1; l < j; ++l) {
          if (!allowed(i, l, j)) continue;
          int a = M[i][l], b = M[l][j], v;
          if (a == -INF || b == -INF)
            v = -INF;
          else if (a + b >= d)
            v = INF;
          else
            v = std::max(a, b) + 1;
          best = std::max(best, v);
        }
        M[i][j] = best;
      }
    return M[0][n - 1] == INF;
  };
  int d = 0;
  while (feasible(d + 1)) ++d;
  return d;
}

int min_ear_count(const Polygon& poly) { return extreme_ears(poly, EarMode::min).count; }

}  // namespace

int main() {
  std::printf("dual-diameter acceptance run\n");

  run(1, "convex minimum equals the closed form (DP n=3..13, oracle n<=12)", 60, [](Line& l) {
    for (int n = 3; n <= 13; ++n) {
      auto poly = regular_polygon(n);
      auto r = min_dt(poly);
      audit.check(r.t);
      l.require(r.d == convex_min_value(n), "DP n=" + std::to_string(n));
      if (n <= 12) {
        auto st = oracle_stats(poly, audit.observer(n));
        l.require(st.min_diameter == convex_min_value(n), "oracle n=" + std::to_string(n));
      }
    }
    l.detail << "13 DP values and 10 oracle values exact; ";
  });

  run(2, "convex maximum is n-3 (oracle and DP, n=4..12)", 0, [](Line& l) {
    for (int n = 4; n <= 12; ++n) {
      auto poly = regular_polygon(n);
      auto st = oracle_stats(poly, audit.observer(n));
      auto mx = max_dt(poly);
      audit.check(mx.t);
      l.require(st.max_diameter == n - 3 && mx.d == n - 3, "n=" + std::to_string(n));
    }
  });

  run(3, "DP matches the oracle on 200 random simple polygons (n=5..12)", 600, [](Line& l) {
    int n_checked = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const int n = 5 + static_cast<int>(seed % 8);
      auto poly = random_simple_polygon(n, 1000 + seed);
      auto st = oracle_stats(poly, audit.observer(n));
      auto mn = min_dt(poly), mx = max_dt(poly);
      auto emin = extreme_ears(poly, EarMode::min), emax = extreme_ears(poly, EarMode::max);
      for (auto* t : {&mn.t, &mx.t, &emin.t, &emax.t}) audit.check(*t);
      bool same = mn.d == st.min_diameter && mx.d == st.max_diameter && emin.count == st.min_ears &&
                  emax.count == st.max_ears;
      l.require(same, "seed " + std::to_string(1000 + seed));
      ++n_checked;
    }
    l.detail << n_checked << " polygons, 4 quantities each; ";
  });

  run(4, "ears gadget: diameters 4k+2, 2k+3, 4k+3 with 5, 4, 4 ears; unique 5-ear triangulation", 0, [](Line& l) {
    for (int k = 1; k <= 3; ++k) {
      auto g = gen_ears_gadget(k);
      const auto& R = g.reference_triangulations;
      for (auto& [name, t] : R) audit.check(t);
      l.require(dual_diameter(R.at("A")).diameter == 4 * k + 2 && count_ears(R.at("A")) == 5, "A k=" + std::to_string(k));
      l.require(dual_diameter(R.at("B")).diameter == 2 * k + 3 && count_ears(R.at("B")) == 4, "B k=" + std::to_string(k));
      l.require(dual_diameter(R.at("C")).diameter == 4 * k + 3 && count_ears(R.at("C")) == 4, "C k=" + std::to_string(k));
      if (k <= 2) {
        const int n = static_cast<int>(g.polygon.size());
        auto st = oracle_stats(g.polygon, audit.observer(n), 16);
        l.require(st.per_ear_count.count(5) && st.per_ear_count.at(5).count == 1, "unique 5-ear k=" + std::to_string(k));
        l.require(st.min_ears == 4 && st.max_ears == 5, "ear range k=" + std::to_string(k));
        auto mn = min_dt(g.polygon);
        audit.check(mn.t);
        l.require(st.min_diameter == 2 * k + 3 && mn.d == 2 * k + 3, "min_dt k=" + std::to_string(k));
      }
    }
  });

  run(5, "concatenation gadget: MAXE 3c+2 ears / c(4k+1)+1, FAST 2c+2 ears / 4c+4k-3, min_dt <= 4c+4k-3", 0,
      [](Line& l) {
        for (auto [k, c] : {std::pair{2, 2}, {3, 3}}) {
          auto g = gen_concat_gadget(k, c);
          const auto& maxe = g.reference_triangulations.at("MAXE");
          const auto& fast = g.reference_triangulations.at("FAST");
          audit.check(maxe);
          audit.check(fast);
          auto mn = min_dt(g.polygon);
          audit.check(mn.t);
          std::string tag = "(k,c)=(" + std::to_string(k) + "," + std::to_string(c) + ")";
          l.require(count_ears(maxe) == 3 * c + 2 && dual_diameter(maxe).diameter == c * (4 * k + 1) + 1, "MAXE " + tag);
          l.require(count_ears(fast) == 2 * c + 2 && dual_diameter(fast).diameter == 4 * c + 4 * k - 3, "FAST " + tag);
          l.require(mn.d <= 4 * c + 4 * k - 3, "min_dt " + tag);
          l.detail << tag << " min_dt=" << mn.d << "; ";
        }
      });

  run(6, "min-ears gadget: separators unavoidable, min-ear diameter >= k-2 below max_dt per part", 0, [](Line& l) {
    for (int k : {3, 4})
      for (int c : {1, 2}) {
        auto g = gen_minears_gadget(k, c);
        std::string tag = "k=" + std::to_string(k) + " c=" + std::to_string(c);
        auto un = unavoidable_edges(g.polygon);
        std::set<Edge> us(un.begin(), un.end());
        for (auto [a, b] : g.separators) l.require(us.count({std::min(a, b), std::max(a, b)}) == 1, "separator " + tag);
        l.require(partition_faces(g.polygon, g.separators).size() == static_cast<std::size_t>(2 * c + 1), "parts " + tag);
        const auto& ref = g.reference_triangulations.at("MINEAR");
        audit.check(ref);
        auto mx = max_dt(g.polygon);
        audit.check(mx.t);
        l.require(count_ears(ref) == min_ear_count(g.polygon), "reference is ear-minimal " + tag);
        const int gap = mx.d - dual_diameter(ref).diameter;
        const int worst_gap = mx.d - worst_min_ear_diameter(g.polygon);
        l.require(gap >= c * (k - 2), "reference gap " + tag);
        l.require(worst_gap >= c * (k - 2), "worst min-ear gap " + tag);
        l.detail << tag << " gap=" << gap << " worst=" << worst_gap << " need=" << c * (k - 2) << "; ";
      }
  });

  run(7, "max-log polygon: quad/hex partition, max_dt <= 3 log2 n + 4 (depth 0-4)", 0, [](Line& l) {
    for (int depth = 0; depth <= 4; ++depth) {
      auto g = gen_maxlog_polygon(depth);
      const int n = static_cast<int>(g.polygon.size());
      auto un = unavoidable_edges(g.polygon);
      std::vector<Edge> diagonals;
      for (auto e : un)
        if (!is_boundary_edge(n, e.first, e.second)) diagonals.push_back(e);
      auto faces = partition_faces(g.polygon, diagonals);
      for (auto& f : faces) {
        bool shape = f.size() == 4 || f.size() == 6 || (depth == 0 && f.size() == 3);
        l.require(shape, "face of size " + std::to_string(f.size()) + " at depth " + std::to_string(depth));
      }
      auto mx = max_dt(g.polygon);
      audit.check(mx.t);
      const double bound = 3 * std::log2(n) + 4;
      l.require(mx.d <= bound, "depth " + std::to_string(depth));
      l.detail << "d" << depth << ": n=" << n << " max_dt=" << mx.d << "<=" << std::floor(bound * 100) / 100 << "; ";
    }
  });

  run(8, "point-set min: valid, diameter <= 4 log2 n + 6, pocket distance <= ceil(log2 n)+2 (50 sets per n)", 300,
      [](Line& l) {
        for (int n : {16, 64, 256, 1024}) {
          std::vector<std::future<std::pair<std::string, Triangulation>>> jobs;
          int worst = 0, worst_pocket = 0;
          std::vector<PointsetMinResult> results(50);
          std::vector<std::future<void>> fut;
          for (int s = 0; s < 50; ++s)
            fut.push_back(std::async(std::launch::async, [&, s] {
              results[s] = pointset_min_dt(random_pointset(n, static_cast<std::uint64_t>(s)));
            }));
          for (auto& f : fut) f.get();
          for (int s = 0; s < 50; ++s) {
            const auto& r = results[s];
            audit.check(r.t);
            l.require(validate_triangulation(r.t).ok(), "invalid n=" + std::to_string(n) + " seed " + std::to_string(s));
            l.require(r.diameter <= 4 * std::log2(n) + 6, "diameter n=" + std::to_string(n) + " seed " + std::to_string(s));
            l.require(r.pockets.max_distance <= ceil_log2(n) + 2, "pocket n=" + std::to_string(n) + " seed " + std::to_string(s));
            worst = std::max(worst, r.diameter);
            worst_pocket = std::max(worst_pocket, r.pockets.max_distance);
          }
          l.detail << "n=" << n << " max d=" << worst << " pocket=" << worst_pocket << "; ";
        }
      });

  run(9, "point-set max: diameter >= sqrt(n-3) on 50 sets per n", 120, [](Line& l) {
    for (int n : {19, 39, 103, 403}) {
      std::vector<PointsetMaxResult> results(50);
      std::vector<std::future<void>> fut;
      for (int s = 0; s < 50; ++s)
        fut.push_back(std::async(std::launch::async, [&, s] {
          results[s] = pointset_max_dt(random_pointset(n, static_cast<std::uint64_t>(s)));
        }));
      for (auto& f : fut) f.get();
      int least = 1 << 30;
      for (int s = 0; s < 50; ++s) {
        audit.check(results[s].t);
        l.require(results[s].diameter >= std::sqrt(n - 3.0), "n=" + std::to_string(n) + " seed " + std::to_string(s));
        least = std::min(least, results[s].diameter);
      }
      l.detail << "n=" << n << " min d=" << least << ">=" << std::sqrt(n - 3.0) << "; ";
    }
  });

  run(10, "zig-zag: diameter >= floor(k/2)-2 on planted convex subsets", 0, [](Line& l) {
    for (int k : {8, 16, 32}) {
      int least = 1 << 30, relaxed = 0, runs = 0;
      for (int extra : {0, k, 3 * k})
        for (std::uint64_t s = 0; s < 10; ++s) {
          auto planted = planted_convex_pointset(k + extra, k, s);
          auto z = zigzag_triangulation(planted.points, planted.subset);
          audit.check(z.t);
          l.require(validate_triangulation(z.t).ok(), "invalid k=" + std::to_string(k));
          l.require(z.diameter >= k / 2 - 2, "k=" + std::to_string(k) + " seed " + std::to_string(s));
          least = std::min(least, z.diameter);
          relaxed += z.relaxed;
          ++runs;
        }
      l.detail << "k=" << k << " min d=" << least << " relaxed " << relaxed << "/" << runs << "; ";
    }
  });

  {
    Line l;
    l.require(audit.polygon > 0, "no polygon triangulations audited");
    l.require(audit.below == 0, audit.first_failure);
    l.detail << audit.polygon << " polygon and " << audit.pointset << " point-set triangulations, " << audit.below
             << " below bound; ";
    report(11, "universal lower bound holds for every triangulation produced or enumerated above", l, 0);
  }

  std::printf("%s: %d of 11 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
