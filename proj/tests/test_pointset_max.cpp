#include <algorithm>
#include <cmath>
#include <numeric>

#include "support.hpp"

#include "dualdiam/convex.hpp"
#include "dualdiam/io.hpp"
#include "dualdiam/pointset_max.hpp"

using namespace dd;

namespace {

// Quadratic longest strictly monotone subsequence lengths.
std::pair<int, int> lis_lds(const std::vector<int>& s) {
  const int n = static_cast<int>(s.size());
  std::vector<int> inc(n, 1), dec(n, 1);
  int bi = 0, bd = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      if (s[j] < s[i]) inc[i] = std::max(inc[i], inc[j] + 1);
      if (s[j] > s[i]) dec[i] = std::max(dec[i], dec[j] + 1);
    }
    bi = std::max(bi, inc[i]);
    bd = std::max(bd, dec[i]);
  }
  return {bi, bd};
}

bool in_convex_position(const PointSet& ps, const std::vector<int>& idx) {
  // Every point must be a vertex of the hull of the subset: not inside any triangle of others.
  for (int p : idx)
    for (int a : idx)
      for (int b : idx)
        for (int c : idx) {
          if (p == a || p == b || p == c || a >= b || b >= c) continue;
          int o1 = orient(ps[a], ps[b], ps[p]), o2 = orient(ps[b], ps[c], ps[p]), o3 = orient(ps[c], ps[a], ps[p]);
          if (o1 == o2 && o2 == o3) return false;
        }
  return true;
}

}  // namespace

TEST_CASE("monotone subsequence examples") {
  auto a = longest_monotone_subsequence({1, 2, 3});
  CHECK(a.dir == Direction::inc);
  CHECK(a.indices == std::vector<int>{0, 1, 2});
  auto b = longest_monotone_subsequence({3, 1, 2});
  CHECK(b.dir == Direction::inc);
  CHECK(b.indices == std::vector<int>{1, 2});
  auto c = longest_monotone_subsequence({5, 4, 3, 1});
  CHECK(c.dir == Direction::dec);
  CHECK(c.indices.size() == 4);
  CHECK_THROWS_AS(longest_monotone_subsequence({1, 1}), Error);
}

TEST_CASE("every permutation of 9 has a monotone run of 3") {
  std::vector<int> p(9);
  std::iota(p.begin(), p.end(), 0);
  long long perms = 0;
  do {
    auto m = longest_monotone_subsequence(p);
    auto [li, ld] = lis_lds(p);
    const int want = std::max(li, ld);
    REQUIRE(static_cast<int>(m.indices.size()) == want);
    REQUIRE(m.dir == (li >= ld ? Direction::inc : Direction::dec));
    for (std::size_t i = 1; i < m.indices.size(); ++i) {
      REQUIRE(m.indices[i - 1] < m.indices[i]);
      if (m.dir == Direction::inc)
        REQUIRE(p[m.indices[i - 1]] < p[m.indices[i]]);
      else
        REQUIRE(p[m.indices[i - 1]] > p[m.indices[i]]);
    }
    REQUIRE(want >= 3);
    ++perms;
  } while (std::next_permutation(p.begin(), p.end()));
  CHECK(perms == 362880);
}

TEST_CASE("fan construction") {
  auto small = pointset_max_dt({{0, 0}, {10, 0}, {0, 10}, {3, 3}});
  CHECK(small.diameter >= 1);
  audit::check(small.t);
  for (int n : {19, 39, 60})
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      auto ps = random_pointset(n, seed);
      auto r = pointset_max_dt(ps);
      CHECK(validate_triangulation(r.t).ok());
      CHECK(r.diameter >= std::sqrt(n - 3.0));
      const auto& hull = r.fan.hull;
      CHECK(ps[hull[0]] == *std::min_element(ps.begin(), ps.end()));
      auto edges = r.t.edges();
      for (std::size_t i = 2; i + 1 < hull.size(); ++i) {
        Edge fan{std::min(hull[0], hull[i]), std::max(hull[0], hull[i])};
        CHECK(std::find(edges.begin(), edges.end(), fan) != edges.end());
      }
      for (const auto& w : r.fan.wedges) {
        CHECK(w.sigma.size() * w.sigma.size() >= w.interior.size());
        CHECK(w.separation >= static_cast<int>(w.sigma.size()));
      }
      audit::check(r.t);
    }
}

TEST_CASE("convex subset search matches exhaustive search") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    auto ps = random_pointset(12, seed, 500);
    auto got = max_convex_subset(ps);
    CHECK(in_convex_position(ps, got));
    int best = 0;
    for (int mask = 0; mask < (1 << 12); ++mask) {
      int bits = __builtin_popcount(mask);
      if (bits <= best || bits < 3) continue;
      std::vector<int> idx;
      for (int i = 0; i < 12; ++i)
        if (mask >> i & 1) idx.push_back(i);
      if (in_convex_position(ps, idx)) best = bits;
    }
    CHECK(static_cast<int>(got.size()) == best);
  }
  CHECK(max_convex_subset({{0, 0}, {4, 0}, {4, 4}, {0, 4}, {2, 1}}).size() == 4);
  CHECK(max_convex_subset(regular_polygon(9)).size() == 9);
}

TEST_CASE("zig-zag") {
  auto conv = regular_polygon(10);
  std::vector<int> all(10);
  std::iota(all.begin(), all.end(), 0);
  auto z = zigzag_triangulation(conv, all);
  CHECK(z.diameter == 7);
  CHECK_FALSE(z.relaxed);
  audit::check(z.t);

  for (int k : {4, 8, 16})
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      auto planted = planted_convex_pointset(20 + k, k, seed);
      auto r = zigzag_triangulation(planted.points, planted.subset);
      CHECK(validate_triangulation(r.t).ok());
      CHECK(r.diameter >= k / 2 - 2);
      audit::check(r.t);
    }
  CHECK_THROWS_AS(zigzag_triangulation({{0, 0}, {4, 0}, {4, 4}, {0, 4}, {2, 1}}, {0, 1, 2, 4}), Error);
}
