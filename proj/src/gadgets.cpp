#include "dualdiam/gadgets.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <set>

#include "dualdiam/polydp.hpp"

namespace dd {

bool Claim::holds() const {
  switch (rel) {
    case Rel::eq: return measured == expected;
    case Rel::le: return measured <= expected;
    case Rel::ge: return measured >= expected;
  }
  return false;
}

int GadgetOutput::vertex(const std::string& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw Error("invalid-input", "no vertex labelled " + label);
  return static_cast<int>(it - labels.begin());
}

std::vector<std::vector<int>> partition_faces(const Polygon& poly, const std::vector<Edge>& diagonals) {
  const int n = static_cast<int>(poly.size());
  std::vector<Edge> edges = diagonals;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return plane_faces(poly, edges);
}

namespace {

struct XY {
  double x, y;
};

XY operator+(XY a, XY b) { return {a.x + b.x, a.y + b.y}; }
XY operator-(XY a, XY b) { return {a.x - b.x, a.y - b.y}; }
XY operator*(double s, XY a) { return {s * a.x, s * a.y}; }
XY mid(XY a, XY b) { return 0.5 * (a + b); }

// Round half to even, matching the prototype coordinates exactly.
coord rnd(double v) { return static_cast<coord>(std::nearbyint(v)); }
Point snap(XY p, double s = 1.0) { return {rnd(s * p.x), rnd(s * p.y)}; }
XY as_xy(Point p) { return {static_cast<double>(p.x), static_cast<double>(p.y)}; }
double rad(double deg) { return deg * std::numbers::pi / 180.0; }

struct Builder {
  GadgetOutput out;
  void add(const std::string& name, Point p) {
    out.labels.push_back(name);
    out.polygon.push_back(p);
  }
  int at(const std::string& name) const { return out.vertex(name); }
  Triangulation tri(const std::vector<std::array<std::string, 3>>& named, DomainPtr dom) const {
    std::vector<Tri> ts;
    for (const auto& t : named) ts.push_back(sorted_tri(at(t[0]), at(t[1]), at(t[2])));
    return make_triangulation(std::move(dom), std::move(ts));
  }
  void claim(std::string q, Rel r, long long expected, long long measured) {
    out.claims.push_back({std::move(q), r, expected, measured});
  }
  GadgetOutput finish() {
    auto v = validate_polygon(out.polygon);
    if (!v.ok()) throw Error("defect", "gadget polygon invalid: " + v.violations.front().message);
    for (const auto& [name, t] : out.reference_triangulations) {
      auto r = validate_triangulation(t);
      if (!r.ok()) throw Error("defect", "reference " + name + " invalid: " + r.violations.front().message);
    }
    for (const auto& c : out.claims)
      if (!c.holds())
        throw Error("defect", "claim " + c.quantity + " failed: measured " + std::to_string(c.measured) +
                                  ", expected " + std::to_string(c.expected));
    return std::move(out);
  }
};

std::string num(const std::string& base, int j) { return base + std::to_string(j); }
std::string num(const std::string& base, int j, int i) { return base + std::to_string(j) + "_" + std::to_string(i); }

void check_k(int k, int lo) {
  if (k < lo) throw Error("invalid-input", "k must be at least " + std::to_string(lo));
}

// Fan/arm patterns shared by the ears and concatenation gadgets.
// A: both arms fanned from p, closed by (p,x,y),(x,vb,y). B/C: arms hand over to vb after s quads.
void arm_pattern(char pat, int k, const std::vector<std::string>& L, const std::vector<std::string>& R,
                 const std::string& p, const std::string& vb, std::vector<std::array<std::string, 3>>& T) {
  const int m = 2 * k;
  if (pat == 'A') {
    for (const auto* ch : {&L, &R})
      for (int j = 0; j < m; ++j) T.push_back({p, (*ch)[j], (*ch)[j + 1]});
    T.push_back({p, L[m], R[m]});
    T.push_back({L[m], vb, R[m]});
    return;
  }
  const int s = pat == 'B' ? k : 0;
  for (const auto* ch : {&L, &R}) {
    for (int j = 0; j < s; ++j) T.push_back({p, (*ch)[j], (*ch)[j + 1]});
    T.push_back({p, vb, (*ch)[s]});
    for (int j = s; j < m; ++j) T.push_back({vb, (*ch)[j], (*ch)[j + 1]});
  }
}

int diameter(const Triangulation& t) { return dual_diameter(t).diameter; }

}  // namespace

GadgetOutput gen_ears_gadget(int k) {
  check_k(k, 1);
  const int m = 2 * k;
  const double S = 1000, th0 = 95, th1 = 140, thx = 210, sag = 1.0, spike = 6.0, drop = 0.6;
  const double sx = std::cos(rad(40)), sy = -std::sin(rad(40));
  auto ray = [](double th, double r) { return XY{r * std::cos(rad(th)), r * std::sin(rad(th))}; };

  // The left hill is an arc of a circle bulging away from p; u_i are where rays from p meet it.
  XY A = ray(th0, S * 1.6), B = ray(thx, S * 1.6);
  XY M = mid(A, B);
  double L = std::hypot(A.x - B.x, A.y - B.y);
  double nn = std::hypot(M.x, M.y);
  XY C = M + (sag * L / nn) * M;
  double rho = std::hypot(C.x - A.x, C.y - A.y);
  auto hit = [&](double th) {
    XY d = ray(th, 1.0);
    double b = d.x * C.x + d.y * C.y, c = C.x * C.x + C.y * C.y - rho * rho;
    double t = b - std::sqrt(b * b - c);
    return snap(t * d);
  };
  std::vector<Point> U;
  for (int i = 0; i < m; ++i) U.push_back(hit(th0 + (th1 - th0) * i / (m - 1)));
  Point X = hit(thx);
  Point vb{0, -rnd(drop * S * 2)};
  XY mx = mid(as_xy(U[0]), as_xy(U[1]));
  Point tL{rnd(mx.x - spike * S), rnd(mx.y)};
  XY mb = mid(as_xy(U[m - 1]), as_xy(X));
  Point aL{rnd(mb.x - spike * S * sx), rnd(mb.y + spike * S * sy)};

  std::vector<std::pair<std::string, Point>> left{{"u0", U[0]}, {"tL", tL}};
  for (int j = 1; j < m; ++j) left.push_back({num("u", j), U[j]});
  left.push_back({"aL", aL});
  left.push_back({"x", X});
  auto mirror = [](std::string name, Point p) {
    if (name == "x") name = "y";
    else if (name == "aL") name = "aR";
    else if (name == "tL") name = "tR";
    else name[0] = 'w';
    return std::pair{name, Point{-p.x, p.y}};
  };

  Builder b;
  b.add("vb", vb);
  for (auto it = left.rbegin(); it != left.rend(); ++it) {
    auto [nm, p] = mirror(it->first, it->second);
    b.add(nm, p);
  }
  b.add("p", {0, 0});
  for (const auto& [nm, p] : left) b.add(nm, p);

  auto dom = polygon_domain(b.out.polygon);
  std::vector<std::string> Lc, Rc;
  for (int j = 0; j < m; ++j) Lc.push_back(num("u", j)), Rc.push_back(num("w", j));
  Lc.push_back("x");
  Rc.push_back("y");
  for (char pat : {'A', 'B', 'C'}) {
    std::vector<std::array<std::string, 3>> T{
        {"u0", "tL", "u1"}, {"w1", "tR", "w0"}, {num("u", m - 1), "aL", "x"}, {num("w", m - 1), "aR", "y"}};
    arm_pattern(pat, k, Lc, Rc, "p", "vb", T);
    b.out.reference_triangulations.emplace(std::string(1, pat), b.tri(T, dom));
  }
  const auto& R = b.out.reference_triangulations;
  b.claim("n", Rel::eq, 4 * k + 8, static_cast<long long>(b.out.polygon.size()));
  b.claim("A.ears", Rel::eq, 5, count_ears(R.at("A")));
  b.claim("A.diameter", Rel::eq, 4 * k + 2, diameter(R.at("A")));
  b.claim("B.ears", Rel::eq, 4, count_ears(R.at("B")));
  b.claim("B.diameter", Rel::eq, 2 * k + 3, diameter(R.at("B")));
  b.claim("C.ears", Rel::eq, 4, count_ears(R.at("C")));
  b.claim("C.diameter", Rel::eq, 4 * k + 3, diameter(R.at("C")));

  // In C the two top ears are joined by a dual path with four interior triangles.
  const auto& tc = R.at("C");
  auto find = [&](int a, int bb, int c) {
    auto key = sorted_tri(a, bb, c);
    return static_cast<int>(std::find(tc.triangles.begin(), tc.triangles.end(), key) - tc.triangles.begin());
  };
  int e1 = find(b.at("u0"), b.at("tL"), b.at("u1")), e2 = find(b.at("w1"), b.at("tR"), b.at("w0"));
  b.claim("C.top_ear_distance", Rel::eq, 5, bfs_distances(build_dual(tc), {e1})[e2]);
  return b.finish();
}

GadgetOutput gen_concat_gadget(int k, int c) {
  check_k(k, 1);
  if (c < 1) throw Error("invalid-input", "c must be at least 1");
  const int m = 2 * k;
  const double Wd = 4000, Ht = 3000, Hm = 1500, D = 3000, xw = 1400, bulge = 0.08, crack = 700;
  const coord spike = 3000;

  // Each copy is the ears gadget with concave hills; copies share their top corners.
  auto left_chain = [&](double X) {
    XY A{X - Wd / 2, Hm}, B{X - xw, -D + 400};
    double L = std::hypot(B.x - A.x, B.y - A.y);
    double nx = (B.y - A.y) / L, ny = -(B.x - A.x) / L;
    std::vector<Point> out;
    for (int i = 1; i <= m; ++i) {
      double s = i == m ? 1.0 : static_cast<double>(i - 1) / (m - 1) * 0.75;
      double off = bulge * L * 4 * s * (1 - s);
      out.push_back(snap({A.x + (B.x - A.x) * s - nx * off, A.y + (B.y - A.y) * s - ny * off}));
    }
    return out;  // u1..u_{m-1}, x
  };
  struct Copy {
    std::vector<Point> L, R;
    Point S, S2, p, vb, aL, aR;
  };
  std::vector<Copy> cs;
  for (int i = 0; i < c; ++i) {
    double X = i * Wd;
    Copy cp;
    cp.L = left_chain(X);
    for (const auto& q : cp.L) cp.R.push_back({static_cast<coord>(2 * X) - q.x, q.y});
    cp.S = {static_cast<coord>(X - Wd / 2), static_cast<coord>(Ht)};
    cp.S2 = {static_cast<coord>(X + Wd / 2), static_cast<coord>(Ht)};
    cp.p = {static_cast<coord>(X), 0};
    cp.vb = {static_cast<coord>(X), static_cast<coord>(-D)};
    XY mb = mid(as_xy(cp.L[m - 2]), as_xy(cp.L[m - 1]));
    cp.aL = snap({mb.x - crack * 0.6, mb.y - crack * 0.8});
    XY mr = mid(as_xy(cp.R[m - 2]), as_xy(cp.R[m - 1]));
    cp.aR = snap({mr.x + crack * 0.6, mr.y - crack * 0.8});
    cs.push_back(cp);
  }
  Builder b;
  for (int i = 0; i < c; ++i) {
    const auto& cp = cs[i];
    for (int j = i == 0 ? 0 : 1; j < m - 1; ++j) b.add(num("u", j + 1, i), cp.L[j]);
    b.add(num("aL_", i), cp.aL);
    b.add(num("x_", i), cp.L[m - 1]);
    b.add(num("vb_", i), cp.vb);
    b.add(num("y_", i), cp.R[m - 1]);
    b.add(num("aR_", i), cp.aR);
    for (int j = m - 2; j >= 0; --j) b.add(num("w", j + 1, i), cp.R[j]);
  }
  const auto& last = cs.back();
  b.add("tR", {last.S2.x + spike, (last.S2.y + last.R[0].y) / 2});
  for (int i = c - 1; i >= 0; --i) {
    b.add(num("w0_", i), cs[i].S2);
    b.add(num("p_", i), cs[i].p);
  }
  b.add("u0_0", cs[0].S);
  b.add("tL", {cs[0].S.x - spike, (cs[0].S.y + cs[0].L[0].y) / 2});

  auto U = [&](int i, int j) {
    if (j == 0) return i == 0 ? std::string("u0_0") : num("w0_", i - 1);
    if (j == 1 && i > 0) return num("w1_", i - 1);
    return num("u", j, i);
  };
  auto dom = polygon_domain(b.out.polygon);
  auto build = [&](const std::string& pattern) {
    std::vector<std::array<std::string, 3>> T{{"u0_0", "tL", "u1_0"}, {num("w1_", c - 1), "tR", num("w0_", c - 1)}};
    for (int i = 0; i < c; ++i) {
      std::vector<std::string> Lc, Rc;
      for (int j = 0; j < m; ++j) Lc.push_back(U(i, j)), Rc.push_back(num("w", j, i));
      Lc.push_back(num("x_", i));
      Rc.push_back(num("y_", i));
      T.push_back({Lc[m - 1], num("aL_", i), Lc[m]});
      T.push_back({Rc[m - 1], num("aR_", i), Rc[m]});
      arm_pattern(pattern[i], k, Lc, Rc, num("p_", i), num("vb_", i), T);
    }
    return b.tri(T, dom);
  };
  b.out.reference_triangulations.emplace("MAXE", build(std::string(c, 'A')));
  if (c >= 2) b.out.reference_triangulations.emplace("FAST", build("B" + std::string(c - 2, 'C') + "B"));

  const auto& R = b.out.reference_triangulations;
  b.claim("n", Rel::eq, c * (4 * k + 4) + 4, static_cast<long long>(b.out.polygon.size()));
  b.claim("MAXE.ears", Rel::eq, 3 * c + 2, count_ears(R.at("MAXE")));
  b.claim("MAXE.diameter", Rel::eq, c * (4 * k + 1) + 1, diameter(R.at("MAXE")));
  if (c >= 2) {
    b.claim("FAST.ears", Rel::eq, 2 * c + 2, count_ears(R.at("FAST")));
    b.claim("FAST.diameter", Rel::eq, 4 * c + 4 * k - 3, diameter(R.at("FAST")));
    b.claim("min_dt", Rel::le, 4 * c + 4 * k - 3, min_dt(b.out.polygon).d);
  }
  b.claim("max_ears", Rel::eq, 3 * c + 2, extreme_ears(b.out.polygon, EarMode::max).count);
  return b.finish();
}

GadgetOutput gen_minears_gadget(int k, int copies, int pad) {
  check_k(k, 2);
  if (copies < 1) throw Error("invalid-input", "copies must be at least 1");
  if (pad < 0) pad = 2 * k;
  if (pad < 1) throw Error("invalid-input", "padding must be at least 1");

  // One room: v_a at the mouth, the two ears v_p/v_q on a far wall seen only from v_a,
  // a chain c_1..c_k between v_q and v_a, and v_b on the floor between the two openings.
  struct Room {
    XY va, vp, vq, pb, m, E1, E2, vb, X1, X2;
    std::vector<XY> cs;
  };
  auto polar = [](double r, double deg, XY o) { return XY{o.x + r * std::cos(rad(deg)), o.y + r * std::sin(rad(deg))}; };
  auto room = [&](double x0) {
    Room r;
    r.va = {x0, 50.0};
    r.vp = polar(300, 8, r.va);
    r.vq = polar(300, 16, r.va);
    r.pb = polar(200, 6.5, r.va);
    r.m = polar(200, 13, r.va);
    XY ck = polar(200, 18, r.va), c1{x0 + 25.0, 125.0};
    for (int i = 0; i < k; ++i) {
      if (i == k - 1) {
        r.cs.push_back(ck);
        break;
      }
      double s = static_cast<double>(i) / (k - 1);
      r.cs.push_back({c1.x + s * (ck.x - c1.x), c1.y + s * (ck.y - c1.y) - 3 * 4 * s * (1 - s)});
    }
    r.E1 = {x0, 6.0};
    r.E2 = {x0 + 30.0, 0.0};
    r.vb = {x0 + 120.0, 12.0};
    r.X1 = {x0 + 210.0, 0.0};
    r.X2 = {x0 + 240.0, 6.0};
    return r;
  };
  // Padding corridor hidden in the shadow left of E1; t_1 is the far tip.
  auto corridor = [](int p) {
    const double gap = 100.0, step = 8.0, base = 3.0, slope = 0.08;
    double X = gap + step * (p - 1);
    std::vector<XY> out;
    for (int j = 1; j <= p; ++j) {
      double ax = gap + step * (p - j);
      double u = p > 1 ? (X - ax) / (X - gap) : 0.0;
      double top = 3.0 * (1 - ax / X);
      out.push_back({-ax, base + slope * ax + 0.5 * top * (1 - u / 2)});
    }
    return out;
  };
  const double W = 340, S = 32;
  std::vector<Room> R;
  for (int i = 0; i < copies; ++i) R.push_back(room(i * W));
  auto T = corridor(pad);

  Builder b;
  auto add = [&](const std::string& nm, XY p) { b.add(nm, snap(p, S)); };
  add("E1_0", R[0].E1);
  for (int j = 0; j < pad; ++j) add(num("tL", j + 1), T[j]);
  for (int i = 0; i < copies; ++i) {
    add(num("E2_", i), R[i].E2);
    add(num("vb_", i), R[i].vb);
    add(num("X1_", i), R[i].X1);
  }
  double xr = R.back().vb.x;
  for (int j = pad - 1; j >= 0; --j) add(num("tR", j + 1), {2 * xr - T[j].x, T[j].y});
  for (int i = copies - 1; i >= 0; --i) {
    const auto& r = R[i];
    add(num("X2_", i), r.X2);
    add(num("pb_", i), r.pb);
    add(num("vp_", i), r.vp);
    add(num("m_", i), r.m);
    add(num("vq_", i), r.vq);
    for (int j = k - 1; j >= 0; --j) add(num("c", j + 1, i), r.cs[j]);
    add(num("va_", i), r.va);
    if (i > 0) add(num("E1_", i), r.E1);
  }

  const Polygon& poly = b.out.polygon;
  const int n = static_cast<int>(poly.size());
  {
    auto v = validate_polygon(poly);
    if (!v.ok()) throw Error("defect", "min-ears polygon invalid: " + v.violations.front().message);
  }
  for (int i = 0; i < copies; ++i) {
    for (auto [a, c] : {std::pair{"E1_", "E2_"}, std::pair{"X1_", "X2_"}}) {
      int x = b.at(num(a, i)), y = b.at(num(c, i));
      b.out.separators.push_back({std::min(x, y), std::max(x, y)});
    }
  }
  std::sort(b.out.separators.begin(), b.out.separators.end());

  const SideMatrix V = side_matrix(poly);
  auto minear = extreme_ears(poly, V, EarMode::min);
  auto maxdt = max_dt(poly, V);
  int ref_diam = diameter(minear.t);

  auto unav = unavoidable_edges(poly);
  std::set<Edge> uset(unav.begin(), unav.end());
  int sep_ok = 0;
  for (const auto& e : b.out.separators) sep_ok += uset.count(e) > 0;

  // Components of the min-ear dual once every separator is cut.
  DualGraph g = build_dual(minear.t);
  auto shares_separator = [&](int s, int t) {
    const auto &A = minear.t.triangles[s], &B = minear.t.triangles[t];
    std::vector<int> common;
    for (int v : A)
      if (std::find(B.begin(), B.end(), v) != B.end()) common.push_back(v);
    Edge e{std::min(common[0], common[1]), std::max(common[0], common[1])};
    return std::binary_search(b.out.separators.begin(), b.out.separators.end(), e);
  };
  DualGraph cut = g;
  for (int s = 0; s < g.size(); ++s)
    std::erase_if(cut.adj[s], [&](int t) { return shares_separator(s, t); });
  std::vector<int> comp(g.size(), -1);
  int parts = 0;
  for (int s = 0; s < g.size(); ++s) {
    if (comp[s] >= 0) continue;
    auto reach = bfs_distances(cut, {s});
    for (int v = 0; v < g.size(); ++v)
      if (reach[v] >= 0) comp[v] = parts;
    ++parts;
  }

  // v_p and v_q must each see exactly one vertex: their own v_a.
  int private_sight = 0;
  for (int i = 0; i < copies; ++i)
    for (const char* ear : {"vp_", "vq_"}) {
      int e = b.at(num(ear, i));
      std::vector<int> seen;
      for (int j = 0; j < n; ++j)
        if (is_diagonal(poly, e, j)) seen.push_back(j);
      private_sight += seen.size() == 1 && seen[0] == b.at(num("va_", i));
    }

  b.out.reference_triangulations.emplace("MINEAR", minear.t);
  b.out.reference_triangulations.emplace("MAXDT", maxdt.t);
  b.claim("n", Rel::eq, copies * (10 + k) + 2 * pad, n);
  b.claim("separators_unavoidable", Rel::eq, 2 * copies, sep_ok);
  b.claim("dual_parts_after_cut", Rel::eq, 2 * copies + 1, parts);
  b.claim("vp_vq_private_visibility", Rel::eq, 2 * copies, private_sight);
  b.claim("min_ears", Rel::eq, copies + 2, minear.count);
  b.claim("max_dt_minus_minear_diameter", Rel::ge, static_cast<long long>(copies) * (k - 2), maxdt.d - ref_diam);
  return b.finish();
}

GadgetOutput gen_maxlog_polygon(int depth) {
  if (depth < 0) throw Error("invalid-input", "depth must be non-negative");
  const double w = 1.0, D = 0.5, eps = 0.05, dl = 0.05, cut = 0.1, S = 1 << 19;
  const std::array<XY, 3> tri{XY{0, 0}, XY{1, 0}, XY{0.5, std::sqrt(3.0) / 2}};

  Builder b;
  std::vector<std::pair<int, int>> opens;
  int counter = 0;
  auto push = [&](XY p) {
    b.add(num("v", counter++), snap(p, S));
    return counter - 1;
  };
  // Place template point q in the frame of opening o1->o2 (o2-o1 is the unit x axis).
  auto place = [](XY o1, XY o2, XY q) {
    XY d = o2 - o1;
    return XY{o1.x + q.x * d.x - q.y * d.y, o1.y + q.x * d.y + q.y * d.x};
  };
  const std::array<XY, 4> hexa{XY{-w, eps}, XY{-w, -D}, XY{1 + w, -D}, XY{1 + w, eps}};
  const std::array<XY, 2> quad{XY{-w, -dl}, XY{1 + w, -dl}};

  // Each opening grows a bar T-joined to it: a hexagon with two child openings, or a leaf quad.
  std::function<void(XY, XY, int)> chain = [&](XY o1, XY o2, int d) {
    if (d == 0) {
      for (auto q : quad) push(place(o1, o2, q));
      return;
    }
    XY h2 = place(o1, o2, hexa[0]), h3 = place(o1, o2, hexa[1]);
    XY h4 = place(o1, o2, hexa[2]), h5 = place(o1, o2, hexa[3]);
    int a = push(h2);
    chain(h2, h3, d - 1);
    opens.push_back({a, push(h3)});
    a = push(h4);
    chain(h4, h5, d - 1);
    opens.push_back({a, push(h5)});
  };
  if (depth == 0) {
    for (auto p : tri) push(p);
  } else {
    for (int i = 0; i < 3; ++i) {
      XY s = tri[i], a = tri[(i + 2) % 3], c = tri[(i + 1) % 3];
      XY e1 = s + cut * (a - s), e2 = s + cut * (c - s);
      int x = push(e1);
      chain(e1, e2, depth - 1);
      opens.push_back({x, push(e2)});
    }
  }
  for (auto [x, y] : opens) b.out.separators.push_back({std::min(x, y), std::max(x, y)});
  std::sort(b.out.separators.begin(), b.out.separators.end());

  const Polygon& poly = b.out.polygon;
  const int n = static_cast<int>(poly.size());
  {
    auto v = validate_polygon(poly);
    if (!v.ok()) throw Error("defect", "max-log polygon invalid: " + v.violations.front().message);
  }
  std::vector<Edge> diags;
  for (auto e : unavoidable_edges(poly))
    if (!is_boundary_edge(n, e.first, e.second)) diags.push_back(e);
  int sep_ok = 0;
  for (const auto& e : b.out.separators) sep_ok += std::binary_search(diags.begin(), diags.end(), e);

  // Partition faces and the tree they form across separators.
  auto faces = partition_faces(poly, diags);
  int odd_faces = 0;
  for (const auto& f : faces) odd_faces += !(f.size() == 4 || f.size() == 6 || (depth == 0 && f.size() == 3));
  std::vector<std::vector<int>> fadj(faces.size());
  std::map<Edge, std::vector<int>> owner;
  for (int fi = 0; fi < static_cast<int>(faces.size()); ++fi) {
    const auto& f = faces[fi];
    for (std::size_t j = 0; j < f.size(); ++j) {
      int a = f[j], c = f[(j + 1) % f.size()];
      owner[{std::min(a, c), std::max(a, c)}].push_back(fi);
    }
  }
  for (const auto& [e, fs] : owner)
    if (fs.size() == 2) fadj[fs[0]].push_back(fs[1]), fadj[fs[1]].push_back(fs[0]);
  DualGraph ft{fadj, true, static_cast<int>(diags.size())};
  auto dr = dual_diameter(ft);
  int root = dr.witness_path[dr.witness_path.size() / 2];
  auto depthv = bfs_distances(ft, {root});
  int lo = 1 << 30, hi = -1;
  for (int f = 0; f < ft.size(); ++f)
    if (ft.adj[f].size() <= 1) lo = std::min(lo, depthv[f]), hi = std::max(hi, depthv[f]);

  auto mx = max_dt(poly);
  b.out.reference_triangulations.emplace("MAXDT", mx.t);
  const long long expected_diags = 3LL * ((1LL << depth) - 1);
  b.claim("n", Rel::eq, depth == 0 ? 3 : 9LL * (1LL << depth) - 6, n);
  b.claim("unavoidable_diagonals", Rel::eq, expected_diags, static_cast<long long>(diags.size()));
  b.claim("separators_unavoidable", Rel::eq, expected_diags, sep_ok);
  b.claim("faces_not_quad_or_hex", Rel::eq, 0, odd_faces);
  b.claim("partition_height", Rel::eq, depth, hi);
  b.claim("partition_leaf_depth_spread", Rel::eq, 0, hi - lo);
  b.claim("max_dt_vs_6log2n", Rel::le, static_cast<long long>(std::floor(6 * std::log2(n))), mx.d);
  return b.finish();
}

}  // namespace dd
