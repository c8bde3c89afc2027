#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dualdiam/convex.hpp"
#include "dualdiam/gadgets.hpp"
#include "dualdiam/io.hpp"
#include "dualdiam/oracle.hpp"
#include "dualdiam/pointset_max.hpp"
#include "dualdiam/pointset_min.hpp"
#include "dualdiam/polydp.hpp"

namespace py = pybind11;
using namespace dd;

namespace {

using XY = std::pair<coord, coord>;

std::vector<Point> to_points(const std::vector<XY>& xs) {
  std::vector<Point> out;
  out.reserve(xs.size());
  for (auto [x, y] : xs) out.push_back({x, y});
  return out;
}

std::vector<XY> from_points(const std::vector<Point>& ps) {
  std::vector<XY> out;
  out.reserve(ps.size());
  for (auto p : ps) out.emplace_back(p.x, p.y);
  return out;
}

py::dict report_dict(const Report& r) {
  py::dict d;
  d["diameter"] = r.diameter;
  d["ears"] = r.ears ? py::object(py::int_(*r.ears)) : py::object(py::none());
  d["witness_path"] = r.witness_path;
  return d;
}

py::list violations(const ValidationReport& r) {
  py::list out;
  for (const auto& v : r.violations) {
    py::dict d;
    d["kind"] = v.kind;
    d["indices"] = v.indices;
    d["message"] = v.message;
    out.append(d);
  }
  return out;
}

py::dict gadget_dict(const GadgetOutput& g) {
  py::dict d;
  d["polygon"] = from_points(g.polygon);
  d["labels"] = g.labels;
  py::list claims;
  for (const auto& c : g.claims) {
    py::dict cd;
    cd["quantity"] = c.quantity;
    cd["rel"] = c.rel == Rel::eq ? "==" : c.rel == Rel::le ? "<=" : ">=";
    cd["expected"] = c.expected;
    cd["measured"] = c.measured;
    cd["holds"] = c.holds();
    claims.append(cd);
  }
  d["claims"] = claims;
  py::dict refs;
  for (const auto& [name, t] : g.reference_triangulations) refs[py::str(name)] = t;
  d["references"] = refs;
  d["separators"] = g.separators;
  return d;
}

Triangulation polygon_triangulation(const std::vector<XY>& poly, const std::vector<Tri>& tris) {
  return make_triangulation(polygon_domain(to_points(poly)), tris);
}

Triangulation pointset_triangulation(const std::vector<XY>& pts, const std::vector<Tri>& tris) {
  return make_triangulation(pointset_domain(to_points(pts)), tris);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Dual diameter of polygon and point-set triangulations";

  // Raised instances carry the machine-readable kind as .kind.
  static py::handle error_type = py::exception<Error>(m, "DualDiamError").release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
      exc.attr("kind") = e.kind();
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  py::class_<Triangulation>(m, "Triangulation")
      .def_property_readonly("triangles", [](const Triangulation& t) { return t.triangles; })
      .def_property_readonly("n", &Triangulation::n)
      .def_property_readonly("is_polygon", &Triangulation::is_polygon)
      .def_property_readonly("points", [](const Triangulation& t) { return from_points(t.points()); })
      .def("edges", &Triangulation::edges)
      .def("diameter", [](const Triangulation& t) { return dual_diameter(t).diameter; })
      .def("ears", [](const Triangulation& t) { return count_ears(t); })
      .def("report", [](const Triangulation& t) { return report_dict(make_report(t)); })
      .def("violations", [](const Triangulation& t) { return violations(validate_triangulation(t)); })
      .def("to_json", [](const Triangulation& t) { return serialize_triangles(t.triangles); })
      .def("svg", [](const Triangulation& t, bool shade_ears, bool witness, int size) {
             return render_svg(t, SvgOptions{shade_ears, witness, size});
           },
           py::arg("shade_ears") = true, py::arg("witness") = true, py::arg("size") = 800)
      .def("dot", [](const Triangulation& t) { return render_dot(t); })
      .def("__len__", [](const Triangulation& t) { return t.triangles.size(); })
      .def("__repr__", [](const Triangulation& t) {
        return "<Triangulation " + std::string(t.is_polygon() ? "polygon" : "pointset") + " n=" +
               std::to_string(t.n()) + " triangles=" + std::to_string(t.triangles.size()) + ">";
      });

  m.def("polygon_triangulation", &polygon_triangulation, py::arg("polygon"), py::arg("triangles"));
  m.def("pointset_triangulation", &pointset_triangulation, py::arg("points"), py::arg("triangles"));
  m.def("complete", [](const std::vector<XY>& pts, const std::vector<Edge>& edges, bool polygon) {
    auto pp = to_points(pts);
    return complete_to_triangulation(polygon ? polygon_domain(pp) : pointset_domain(pp), edges);
  }, py::arg("points"), py::arg("edges") = std::vector<Edge>{}, py::arg("polygon") = false);

  m.def("validate_polygon", [](const std::vector<XY>& p) { return violations(validate_polygon(to_points(p))); });
  m.def("validate_pointset", [](const std::vector<XY>& p) { return violations(validate_pointset(to_points(p))); });
  m.def("convex_hull", [](const std::vector<XY>& p) { return convex_hull(to_points(p)); });
  m.def("unavoidable_edges", [](const std::vector<XY>& p) { return unavoidable_edges(to_points(p)); });

  m.def("min_dt", [](const std::vector<XY>& p) {
    auto r = min_dt(to_points(p));
    return py::make_tuple(r.d, r.t);
  });
  m.def("max_dt", [](const std::vector<XY>& p) {
    auto r = max_dt(to_points(p));
    return py::make_tuple(r.d, r.t);
  });
  m.def("feasible_min", [](const std::vector<XY>& p, int d) { return feasible_min(to_points(p), d); });
  m.def("feasible_max", [](const std::vector<XY>& p, int d) { return feasible_max(to_points(p), d); });
  m.def("extreme_ears", [](const std::vector<XY>& p, const std::string& mode) {
    if (mode != "min" && mode != "max") throw Error("invalid-input", "mode must be 'min' or 'max'");
    auto r = extreme_ears(to_points(p), mode == "min" ? EarMode::min : EarMode::max);
    return py::make_tuple(r.count, r.t);
  }, py::arg("polygon"), py::arg("mode"));

  m.def("convex_min_value", &convex_min_value);
  m.def("lower_bound", &lower_bound);
  m.def("moore_bound", &moore_bound);
  m.def("balanced_plan", [](int n) { return balanced_plan(n).triangles; });
  m.def("regular_polygon", [](int n) { return from_points(regular_polygon(n)); });

  m.def("oracle_stats", [](const std::vector<XY>& p, int max_n) {
    auto st = oracle_stats(to_points(p), {}, max_n);
    py::dict d;
    d["triangulations"] = st.triangulation_count;
    d["min_diameter"] = st.min_diameter;
    d["max_diameter"] = st.max_diameter;
    d["min_ears"] = st.min_ears;
    d["max_ears"] = st.max_ears;
    py::dict per;
    for (const auto& [e, c] : st.per_ear_count)
      per[py::int_(e)] = py::make_tuple(c.count, c.min_diameter, c.max_diameter);
    d["per_ear_count"] = per;
    return d;
  }, py::arg("polygon"), py::arg("max_n") = kOracleMaxN);

  m.def("gen_ears_gadget", [](int k) { return gadget_dict(gen_ears_gadget(k)); }, py::arg("k"));
  m.def("gen_concat_gadget", [](int k, int c) { return gadget_dict(gen_concat_gadget(k, c)); }, py::arg("k"), py::arg("c"));
  m.def("gen_minears_gadget", [](int k, int copies, int pad) { return gadget_dict(gen_minears_gadget(k, copies, pad)); },
        py::arg("k"), py::arg("copies"), py::arg("pad") = -1);
  m.def("gen_maxlog_polygon", [](int depth) { return gadget_dict(gen_maxlog_polygon(depth)); }, py::arg("depth"));

  m.def("pointset_min_dt", [](const std::vector<XY>& p) {
    auto r = pointset_min_dt(to_points(p));
    py::dict pockets;
    pockets["pockets"] = r.pockets.pockets;
    pockets["triangles"] = r.pockets.pocket_triangles;
    pockets["max_distance"] = r.pockets.max_distance;
    pockets["bound"] = r.pockets.bound;
    return py::make_tuple(r.diameter, r.t, pockets);
  });
  m.def("pointset_max_dt", [](const std::vector<XY>& p) {
    auto r = pointset_max_dt(to_points(p));
    return py::make_tuple(r.diameter, r.t, r.fan.hull);
  });
  m.def("zigzag", [](const std::vector<XY>& p, std::vector<int> subset) {
    auto pts = to_points(p);
    if (subset.empty()) subset = max_convex_subset(pts);
    auto r = zigzag_triangulation(pts, subset);
    return py::make_tuple(r.diameter, r.t, r.relaxed);
  }, py::arg("points"), py::arg("subset") = std::vector<int>{});
  m.def("max_convex_subset", [](const std::vector<XY>& p) { return max_convex_subset(to_points(p)); });
  m.def("longest_monotone_subsequence", [](const std::vector<int>& s) {
    auto r = longest_monotone_subsequence(s);
    return py::make_tuple(r.dir == Direction::inc ? "inc" : "dec", r.indices);
  });

  m.def("random_pointset", [](int n, std::uint64_t seed, coord range) { return from_points(random_pointset(n, seed, range)); },
        py::arg("n"), py::arg("seed"), py::arg("range") = coord{1} << 16);
  m.def("random_simple_polygon",
        [](int n, std::uint64_t seed, coord range) { return from_points(random_simple_polygon(n, seed, range)); },
        py::arg("n"), py::arg("seed"), py::arg("range") = coord{1} << 10);

  m.def("serialize_polygon", [](const std::vector<XY>& p) { return serialize_polygon(to_points(p)); });
  m.def("serialize_pointset", [](const std::vector<XY>& p) { return serialize_pointset(to_points(p)); });
  m.def("parse_polygon", [](const std::string& s) { return from_points(parse_polygon(s)); });
  m.def("parse_pointset", [](const std::string& s) { return from_points(parse_pointset(s)); });
  m.def("parse_triangles", [](const std::string& s) { return parse_triangles(s); });
}
