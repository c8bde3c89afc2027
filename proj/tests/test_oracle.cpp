#include <set>

#include "support.hpp"

#include "dualdiam/convex.hpp"
#include "dualdiam/io.hpp"
#include "dualdiam/oracle.hpp"

using namespace dd;

namespace {

long long catalan(int m) {
  long long c = 1;
  for (int i = 0; i < m; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

}  // namespace

TEST_CASE("convex polygons give Catalan counts") {
  for (int n = 3; n <= 12; ++n) {
    auto st = oracle_stats(regular_polygon(n), [&](const std::vector<Tri>& t, int d, int) {
      audit::diameter(true, n, static_cast<int>(t.size()), d);
    });
    CHECK(st.triangulation_count == catalan(n - 2));
    CHECK(st.min_diameter == convex_min_value(n));
    CHECK(st.max_diameter == n - 3);
  }
}

TEST_CASE("hexagon statistics") {
  auto st = oracle_stats(regular_polygon(6));
  CHECK(st.triangulation_count == 14);
  CHECK(st.max_ears == 3);
  CHECK(st.min_ears == 2);
  CHECK(st.max_diameter == 3);
  CHECK(st.per_ear_count.at(3).count == 2);
}

TEST_CASE("enumeration yields distinct valid triangulations") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    auto poly = random_simple_polygon(8 + static_cast<int>(seed % 3), seed);
    auto dom = polygon_domain(poly);
    std::set<std::vector<Tri>> seen;
    enumerate_triangulations(poly, [&](const std::vector<Tri>& tris) {
      auto t = make_triangulation(dom, tris);
      CHECK(validate_triangulation(t).ok());
      CHECK(tree_diameter(t.n(), tris) == dual_diameter(t).diameter);
      CHECK(seen.insert(t.triangles).second);
      audit::check(t);
    });
    CHECK(!seen.empty());
  }
}

TEST_CASE("oracle refuses large inputs") {
  CHECK_THROWS_AS(oracle_stats(regular_polygon(kOracleMaxN + 1)), Error);
  CHECK_THROWS_AS(oracle_stats(Polygon{{0, 0}, {2, 2}, {2, 0}, {0, 2}}), Error);
}
