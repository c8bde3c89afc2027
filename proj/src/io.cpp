#include "dualdiam/io.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"

namespace dd {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error("parse", where + ": " + what);
}

json load(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error("parse", "byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object()) fail("/", "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail("/", std::string("missing key \"") + key + "\"");
  if (!it->is_array()) fail(std::string("/") + key, "expected an array");
  return *it;
}

long long integer(const json& v, const std::string& where) {
  if (!v.is_number_integer()) fail(where, "expected an integer");
  return v.get<long long>();
}

std::vector<Point> points_of(const json& arr, const std::string& key) {
  std::vector<Point> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    std::string where = "/" + key + "/" + std::to_string(i);
    if (!arr[i].is_array() || arr[i].size() != 2) fail(where, "expected [x, y]");
    Point p{integer(arr[i][0], where + "/0"), integer(arr[i][1], where + "/1")};
    if (!in_range(p)) fail(where, "coordinate exceeds 2^20");
    out.push_back(p);
  }
  return out;
}

json points_json(const std::vector<Point>& pts) {
  json a = json::array();
  for (const auto& p : pts) a.push_back({p.x, p.y});
  return a;
}

}  // namespace

Report make_report(const Triangulation& t) {
  auto d = dual_diameter(t);
  Report r{d.diameter, std::nullopt, d.witness_path};
  if (t.is_polygon()) r.ears = count_ears(t);
  return r;
}

std::string serialize_polygon(const Polygon& poly) { return json{{"polygon", points_json(poly)}}.dump(); }
std::string serialize_pointset(const PointSet& ps) { return json{{"points", points_json(ps)}}.dump(); }

std::string serialize_triangles(std::vector<Tri> tris) {
  for (auto& t : tris) std::sort(t.begin(), t.end());
  std::sort(tris.begin(), tris.end());
  json a = json::array();
  for (const auto& t : tris) a.push_back({t[0], t[1], t[2]});
  return json{{"triangles", a}}.dump();
}

std::string serialize_report(const Report& r) {
  json j{{"diameter", r.diameter}, {"witness_path", r.witness_path}};
  j["ears"] = r.ears ? json(*r.ears) : json(nullptr);
  return j.dump();
}

Polygon parse_polygon(std::string_view text) {
  auto pts = points_of(field(load(text), "polygon"), "polygon");
  if (pts.size() < 3) fail("/polygon", "needs at least 3 vertices");
  return pts;
}

PointSet parse_pointset(std::string_view text) {
  auto pts = points_of(field(load(text), "points"), "points");
  if (pts.size() < 3) fail("/points", "needs at least 3 points");
  return pts;
}

std::vector<Tri> parse_triangles(std::string_view text) {
  const json doc = load(text);
  const json& a = field(doc, "triangles");
  std::vector<Tri> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::string where = "/triangles/" + std::to_string(i);
    if (!a[i].is_array() || a[i].size() != 3) fail(where, "expected [i, j, k]");
    Tri t;
    for (int k = 0; k < 3; ++k) {
      long long v = integer(a[i][k], where + "/" + std::to_string(k));
      if (v < 0 || v > (1 << 30)) fail(where, "index out of range");
      t[k] = static_cast<int>(v);
    }
    out.push_back(sorted_tri(t[0], t[1], t[2]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Report parse_report(std::string_view text) {
  json j = load(text);
  if (!j.is_object() || !j.contains("diameter")) fail("/", "missing key \"diameter\"");
  Report r;
  r.diameter = static_cast<int>(integer(j["diameter"], "/diameter"));
  if (j.contains("ears") && !j["ears"].is_null()) r.ears = static_cast<int>(integer(j["ears"], "/ears"));
  const json& w = field(j, "witness_path");
  for (std::size_t i = 0; i < w.size(); ++i)
    r.witness_path.push_back(static_cast<int>(integer(w[i], "/witness_path/" + std::to_string(i))));
  return r;
}

std::string render_svg(const Triangulation& t, const SvgOptions& opt) {
  const auto& p = t.points();
  coord x0 = p[0].x, x1 = p[0].x, y0 = p[0].y, y1 = p[0].y;
  for (const auto& q : p) x0 = std::min(x0, q.x), x1 = std::max(x1, q.x), y0 = std::min(y0, q.y), y1 = std::max(y1, q.y);
  const double span = std::max<double>({1.0, static_cast<double>(x1 - x0), static_cast<double>(y1 - y0)});
  const double pad = 20, s = (opt.size - 2 * pad) / span;
  auto X = [&](const Point& q) { return pad + (q.x - x0) * s; };
  auto Y = [&](const Point& q) { return pad + (y1 - q.y) * s; };  // y axis points up
  std::ostringstream o;
  o.setf(std::ios::fixed);
  o.precision(2);
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << opt.size << "\" height=\"" << opt.size
    << "\" viewBox=\"0 0 " << opt.size << ' ' << opt.size << "\">\n";
  const int n = t.n();
  for (const auto& tr : t.triangles) {
    bool ear = false;
    if (t.is_polygon() && opt.shade_ears)
      ear = is_boundary_edge(n, tr[0], tr[1]) + is_boundary_edge(n, tr[1], tr[2]) + is_boundary_edge(n, tr[0], tr[2]) == 2;
    o << "<polygon class=\"" << (ear ? "face ear" : "face") << "\" points=\"";
    for (int v : tr) o << X(p[v]) << ',' << Y(p[v]) << ' ';
    o << "\" fill=\"" << (ear ? "#f4c27a" : "#e8eef7") << "\" stroke=\"#7a8aa0\" stroke-width=\"1\"/>\n";
  }
  std::vector<int> outline;
  if (t.is_polygon()) {
    for (int i = 0; i < n; ++i) outline.push_back(i);
  } else {
    outline = convex_hull(p);
  }
  o << "<polygon class=\"outline\" points=\"";
  for (int v : outline) o << X(p[v]) << ',' << Y(p[v]) << ' ';
  o << "\" fill=\"none\" stroke=\"#1b2a41\" stroke-width=\"2\"/>\n";
  if (opt.witness && !t.triangles.empty()) {
    auto d = dual_diameter(t);
    o << "<polyline class=\"witness\" points=\"";
    for (int f : d.witness_path) {
      const auto& tr = t.triangles[f];
      double cx = (X(p[tr[0]]) + X(p[tr[1]]) + X(p[tr[2]])) / 3, cy = (Y(p[tr[0]]) + Y(p[tr[1]]) + Y(p[tr[2]])) / 3;
      o << cx << ',' << cy << ' ';
    }
    o << "\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"2.5\"/>\n";
  }
  for (const auto& q : p) o << "<circle cx=\"" << X(q) << "\" cy=\"" << Y(q) << "\" r=\"2.5\" fill=\"#1b2a41\"/>\n";
  o << "</svg>\n";
  return o.str();
}

std::string render_dot(const Triangulation& t) {
  auto g = build_dual(t);
  std::ostringstream o;
  o << "graph dual {\n";
  for (int i = 0; i < g.size(); ++i) {
    const auto& tr = t.triangles[i];
    o << "  t" << i << " [label=\"" << i << ": " << tr[0] << ' ' << tr[1] << ' ' << tr[2] << "\"];\n";
  }
  for (int i = 0; i < g.size(); ++i)
    for (int j : g.adj[i])
      if (i < j) o << "  t" << i << " -- t" << j << ";\n";
  o << "}\n";
  return o.str();
}

PointSet random_pointset(int n, std::uint64_t seed, coord range) {
  if (n < 3) throw Error("invalid-input", "n must be at least 3");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<coord> u(0, range - 1);
  PointSet ps;
  std::set<Point> used;
  auto fresh = [&] {
    for (;;) {
      Point p{u(rng), u(rng)};
      if (used.insert(p).second) return p;
    }
  };
  for (int i = 0; i < n; ++i) ps.push_back(fresh());
  // Resample a member of any collinear triple until none remain.
  for (auto bad = collinear_triples(ps, 1); !bad.empty(); bad = collinear_triples(ps, 1)) {
    used.erase(ps[bad[0][2]]);
    ps[bad[0][2]] = fresh();
  }
  return ps;
}

PlantedSet planted_convex_pointset(int n, int k, std::uint64_t seed, coord range) {
  if (k < 3 || n < k) throw Error("invalid-input", "need 3 <= k <= n");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<coord> u(0, range - 1);
  std::uniform_real_distribution<double> jitter(-0.3, 0.3);
  PlantedSet out;
  std::set<Point> used;
  const double c = (range - 1) / 2.0, R = 0.45 * (range - 1);
  for (int i = 0; i < k; ++i) {
    double a = 2 * std::acos(-1.0) * (i + jitter(rng)) / k;
    Point p{std::llround(c + R * std::cos(a)), std::llround(c + R * std::sin(a))};
    if (!used.insert(p).second) throw Error("invalid-input", "range too small for k");
    out.points.push_back(p);
    out.subset.push_back(i);
  }
  if (static_cast<int>(convex_hull(out.points).size()) != k) throw Error("invalid-input", "range too small for k");
  auto fresh = [&] {
    for (;;) {
      Point p{u(rng), u(rng)};
      if (used.insert(p).second) return p;
    }
  };
  for (int i = k; i < n; ++i) out.points.push_back(fresh());
  for (auto bad = collinear_triples(out.points, 1); !bad.empty(); bad = collinear_triples(out.points, 1)) {
    int v = *std::max_element(bad[0].begin(), bad[0].end());
    if (v < k) throw Error("invalid-input", "planted points are collinear");
    used.erase(out.points[v]);
    out.points[v] = fresh();
  }
  return out;
}

Polygon random_simple_polygon(int n, std::uint64_t seed, coord range) {
  PointSet ps = random_pointset(n, seed, range);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::shuffle(ps.begin(), ps.end(), rng);
  // 2-opt: reverse the stretch between any two crossing edges until none cross.
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < n && !changed; ++i)
      for (int j = i + 2; j < n && !changed; ++j) {
        if (i == 0 && j == n - 1) continue;
        if (properly_cross(ps[i], ps[i + 1], ps[j], ps[(j + 1) % n])) {
          std::reverse(ps.begin() + i + 1, ps.begin() + j + 1);
          changed = true;
        }
      }
  }
  if (area2(ps) < 0) std::reverse(ps.begin(), ps.end());
  return ps;
}

}  // namespace dd
