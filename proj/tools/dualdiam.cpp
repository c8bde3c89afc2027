// Command-line front end. Every verb prints one canonical JSON document (or SVG/DOT) on success
// and a {"error": kind, "message": ...} line on stderr with a nonzero exit otherwise.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dualdiam/convex.hpp"
#include "dualdiam/gadgets.hpp"
#include "dualdiam/io.hpp"
#include "dualdiam/oracle.hpp"
#include "dualdiam/pointset_max.hpp"
#include "dualdiam/pointset_min.hpp"
#include "dualdiam/polydp.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace dd;

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("io", "cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

// Write to a sibling temp file, then rename over the target.
void write_atomic(const std::string& path, const std::string& text) {
  fs::path target(path), tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw Error("io", "cannot write " + tmp.string());
    out << text << '\n';
  }
  fs::rename(tmp, target);
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty())
    std::cout << text << '\n';
  else
    write_atomic(out, text);
}

DomainPtr domain_from_text(const std::string& text) {
  if (text.find("\"polygon\"") != std::string::npos) {
    auto poly = parse_polygon(text);
    auto rep = validate_polygon(poly);
    if (!rep.ok()) throw Error(rep.violations.front().kind, rep.violations.front().message);
    return polygon_domain(std::move(poly));
  }
  auto ps = parse_pointset(text);
  auto rep = validate_pointset(ps);
  if (!rep.ok()) throw Error(rep.violations.front().kind, rep.violations.front().message);
  return pointset_domain(std::move(ps));
}

DomainPtr load_domain(const std::string& path) { return domain_from_text(slurp(path)); }

Polygon load_polygon(const std::string& path) {
  auto d = load_domain(path);
  if (d->kind != DomainKind::polygon) throw Error("domain", "expected a polygon document");
  return d->pts;
}

PointSet load_pointset(const std::string& path) {
  auto d = load_domain(path);
  if (d->kind != DomainKind::pointset) throw Error("domain", "expected a points document");
  return d->pts;
}

std::string result_text(const Triangulation& t, bool report) {
  return report ? serialize_report(make_report(t)) : serialize_triangles(t.triangles);
}

const char* rel_name(Rel r) { return r == Rel::eq ? "==" : r == Rel::le ? "<=" : ">="; }

std::string gadget_text(const GadgetOutput& g, bool claims) {
  if (!claims) return serialize_polygon(g.polygon);
  json j;
  j["polygon"] = json::parse(serialize_polygon(g.polygon))["polygon"];
  j["labels"] = g.labels;
  json cs = json::array();
  for (const auto& c : g.claims)
    cs.push_back({{"quantity", c.quantity}, {"rel", rel_name(c.rel)}, {"expected", c.expected},
                  {"measured", c.measured}, {"holds", c.holds()}});
  j["claims"] = cs;
  json refs = json::object();
  for (const auto& [name, t] : g.reference_triangulations)
    refs[name] = json::parse(serialize_triangles(t.triangles))["triangles"];
  j["reference_triangulations"] = refs;
  return j.dump();
}

json violations_json(const ValidationReport& r) {
  json vs = json::array();
  for (const auto& v : r.violations) vs.push_back({{"kind", v.kind}, {"indices", v.indices}, {"message", v.message}});
  return vs;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dual diameter of triangulations: constructions, optimizers and checks"};
  app.require_subcommand(1);
  std::string out;
  app.add_option("-o,--out", out, "write the result to this file (atomically) instead of stdout");

  // gen
  auto* gen = app.add_subcommand("gen", "generate an instance");
  std::string family;
  int k = 2, c = 2, depth = 2, n = 8, count = 1;
  std::uint64_t seed = 0;
  bool pointset = false, claims = false;
  std::string out_dir;
  gen->add_option("--family", family, "ears|concat|minears|maxlog|convex|random")
      ->required()
      ->check(CLI::IsMember({"ears", "concat", "minears", "maxlog", "convex", "random"}));
  gen->add_option("--k", k, "gadget size parameter");
  gen->add_option("--c", c, "number of concatenated copies (concat, minears)");
  gen->add_option("--depth", depth, "recursion depth (maxlog)");
  gen->add_option("--n", n, "vertex count (convex, random)");
  gen->add_option("--seed", seed, "random seed");
  gen->add_flag("--pointset", pointset, "random: emit a point set instead of a simple polygon");
  gen->add_flag("--claims", claims, "gadgets: emit labels, claims and reference triangulations");
  gen->add_option("--count", count, "random: number of instances (seeds seed..seed+count-1)");
  gen->add_option("--out-dir", out_dir, "random batch: directory for one file per instance");

  // polygon optimizers
  std::string input = "-";
  bool report = false;
  auto* mindt = app.add_subcommand("min-dt", "triangulation of minimum dual diameter");
  auto* maxdt = app.add_subcommand("max-dt", "triangulation of maximum dual diameter");
  auto* ears = app.add_subcommand("ears", "triangulation with the fewest or most ears");
  for (auto* s : {mindt, maxdt, ears}) {
    s->add_option("input", input, "polygon document ('-' for stdin)");
    s->add_flag("--report", report, "print the diameter report instead of the triangles");
  }
  bool emin = false, emax = false;
  auto* fmin = ears->add_flag("--min", emin, "fewest ears");
  auto* fmax = ears->add_flag("--max", emax, "most ears");
  fmin->excludes(fmax);

  auto* lb = app.add_subcommand("lower-bound", "universal lower bound on the dual diameter");
  lb->add_option("--n", n, "vertex count")->required();

  // point sets
  auto* pset = app.add_subcommand("pointset", "point-set constructions");
  pset->require_subcommand(1);
  auto* pmin = pset->add_subcommand("min-dt", "logarithmic-diameter triangulation");
  auto* pmax = pset->add_subcommand("max-dt", "fan construction with diameter at least sqrt(n-3)");
  auto* pzz = pset->add_subcommand("zigzag", "zig-zag triangulation over a convex subset");
  std::vector<int> subset;
  for (auto* s : {pmin, pmax, pzz}) {
    s->add_option("input", input, "points document ('-' for stdin)");
    s->add_flag("--report", report, "print the diameter report instead of the triangles");
  }
  pzz->add_option("--subset", subset, "indices of a convex subset (default: a largest one)")->delimiter(',');

  auto* orc = app.add_subcommand("oracle", "exhaustive statistics for a small polygon");
  orc->add_option("input", input, "polygon document ('-' for stdin)");

  auto* render = app.add_subcommand("render", "draw a triangulation");
  std::string tris_path;
  bool svg = false, dot = false, no_witness = false;
  render->add_option("input", input, "polygon or points document");
  render->add_option("--triangles", tris_path, "triangles document")->required();
  auto* fsvg = render->add_flag("--svg", svg, "SVG drawing");
  auto* fdot = render->add_flag("--dot", dot, "dual graph in DOT");
  fsvg->excludes(fdot);
  render->add_flag("--no-witness", no_witness, "omit the diameter witness path");

  auto* val = app.add_subcommand("validate", "check a polygon, point set or triangulation");
  val->add_option("input", input, "polygon or points document");
  val->add_option("--triangles", tris_path, "triangles document to check against the input");

  try {
    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
      return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
      return app.exit(e);
    } catch (const CLI::ParseError& e) {
      throw Error("usage", e.what());
    }

    if (gen->parsed()) {
      if (family == "random" && count > 1) {
        if (out_dir.empty()) throw Error("usage", "--count needs --out-dir");
        fs::create_directories(out_dir);
        std::vector<std::future<void>> jobs;
        for (int i = 0; i < count; ++i)
          jobs.push_back(std::async(std::launch::async, [&, i] {
            std::uint64_t s = seed + static_cast<std::uint64_t>(i);
            std::string text = pointset ? serialize_pointset(random_pointset(n, s))
                                        : serialize_polygon(random_simple_polygon(n, s));
            write_atomic((fs::path(out_dir) / ("instance_" + std::to_string(s) + ".json")).string(), text);
          }));
        for (auto& j : jobs) j.get();
        return 0;
      }
      std::string text;
      if (family == "ears")
        text = gadget_text(gen_ears_gadget(k), claims);
      else if (family == "concat")
        text = gadget_text(gen_concat_gadget(k, c), claims);
      else if (family == "minears")
        text = gadget_text(gen_minears_gadget(k, c), claims);
      else if (family == "maxlog")
        text = gadget_text(gen_maxlog_polygon(depth), claims);
      else if (family == "convex")
        text = serialize_polygon(regular_polygon(n));
      else
        text = pointset ? serialize_pointset(random_pointset(n, seed)) : serialize_polygon(random_simple_polygon(n, seed));
      emit(text, out);
    } else if (mindt->parsed()) {
      emit(result_text(min_dt(load_polygon(input)).t, report), out);
    } else if (maxdt->parsed()) {
      emit(result_text(max_dt(load_polygon(input)).t, report), out);
    } else if (ears->parsed()) {
      if (!emin && !emax) throw Error("usage", "ears needs --min or --max");
      emit(result_text(extreme_ears(load_polygon(input), emin ? EarMode::min : EarMode::max).t, report), out);
    } else if (lb->parsed()) {
      emit(json{{"n", n}, {"lower_bound", lower_bound(n)}}.dump(), out);
    } else if (pset->parsed()) {
      auto ps = load_pointset(input);
      if (pmin->parsed()) {
        emit(result_text(pointset_min_dt(ps).t, report), out);
      } else if (pmax->parsed()) {
        emit(result_text(pointset_max_dt(ps).t, report), out);
      } else {
        if (subset.empty()) subset = max_convex_subset(ps);
        emit(result_text(zigzag_triangulation(ps, subset).t, report), out);
      }
    } else if (orc->parsed()) {
      auto st = oracle_stats(load_polygon(input));
      json per = json::object();
      for (const auto& [e, cls] : st.per_ear_count)
        per[std::to_string(e)] = {{"count", cls.count}, {"min_diameter", cls.min_diameter},
                                  {"max_diameter", cls.max_diameter}};
      emit(json{{"triangulations", st.triangulation_count},
                {"min_diameter", st.min_diameter},
                {"max_diameter", st.max_diameter},
                {"min_ears", st.min_ears},
                {"max_ears", st.max_ears},
                {"per_ear_count", per}}
               .dump(),
           out);
    } else if (render->parsed()) {
      if (!svg && !dot) throw Error("usage", "render needs --svg or --dot");
      auto t = make_triangulation(load_domain(input), parse_triangles(slurp(tris_path)));
      auto rep = validate_triangulation(t);
      if (!rep.ok()) throw Error(rep.violations.front().kind, rep.violations.front().message);
      SvgOptions opt;
      opt.witness = !no_witness;
      emit(svg ? render_svg(t, opt) : render_dot(t), out);
    } else if (val->parsed()) {
      std::string text = slurp(input);
      ValidationReport rep;
      if (text.find("\"polygon\"") != std::string::npos)
        rep = validate_polygon(parse_polygon(text));
      else
        rep = validate_pointset(parse_pointset(text));
      if (rep.ok() && !tris_path.empty())
        rep = validate_triangulation(make_triangulation(domain_from_text(text), parse_triangles(slurp(tris_path))));
      emit(json{{"ok", rep.ok()}, {"violations", violations_json(rep)}}.dump(), out);
      return rep.ok() ? 0 : 1;
    }
    return 0;
  } catch (const Error& e) {
    std::cerr << json{{"error", e.kind()}, {"message", e.what()}}.dump() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "internal"}, {"message", e.what()}}.dump() << '\n';
    return 3;
  }
}
