#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "doctest.h"

#include "dualdiam/convex.hpp"
#include "dualdiam/tri.hpp"

namespace audit {

struct Counters {
  long long checked = 0;
  long long violations = 0;
};

inline Counters& counters() {
  static Counters c;
  return c;
}

// Polygon domains obey lower_bound(n). Point sets only get the degree-3 Moore bound on t triangles.
inline int bound_for(bool polygon, int n, int t) {
  if (polygon) return dd::lower_bound(n);
  return static_cast<int>(std::ceil(dd::moore_bound(t) - 1e-12));
}

inline void diameter(bool polygon, int n, int t, int d) {
  auto& c = counters();
  ++c.checked;
  if (d < bound_for(polygon, n, t)) {
    ++c.violations;
    FAIL_CHECK("diameter " << d << " below the lower bound for n=" << n);
  }
}

inline void check(const dd::Triangulation& t) {
  diameter(t.is_polygon(), t.n(), static_cast<int>(t.triangles.size()), dd::dual_diameter(t).diameter);
}

}  // namespace audit
