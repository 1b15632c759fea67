// kdiam: command-line front end for the kdiam library.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "kdiam/kdiam.hpp"

using namespace kdiam;

namespace {

struct Options {
  std::size_t k = 2;
  std::string norm = "euclidean";
  std::string mode;  // empty: follow the input's scalar
  double tol = 1e-9;
  std::uint64_t seed = 1;
  std::string out;
  std::string in = "-";
};

std::string read_text(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::invalid_spec, "cannot open " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorKind::invalid_spec, "cannot write " + path);
  f << text;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

// Calls f(configuration, tolerance) with the scalar type chosen by --mode.
template <class F>
auto with_mode(const AnyConfiguration& x, const Options& o, F&& f) {
  const Tolerance tol{o.tol};
  if (o.mode.empty())
    return std::visit([&](const auto& c) { return f(c, tol); }, x);
  if (o.mode == "float") {
    if (const auto* r = std::get_if<PointConfiguration<Rational>>(&x)) {
      std::vector<Point<double>> pts;
      for (const auto& p : *r) {
        Point<double> q(p.dim());
        for (std::size_t a = 0; a < p.dim(); ++a) q[a] = to_double(p[a]);
        pts.push_back(q);
      }
      return f(PointConfiguration<double>(r->dim(), std::move(pts)), tol);
    }
    return f(std::get<PointConfiguration<double>>(x), tol);
  }
  if (o.mode == "exact") {
    if (!std::holds_alternative<PointConfiguration<Rational>>(x))
      throw Error(ErrorKind::invalid_spec, "exact mode needs rational input");
    return f(std::get<PointConfiguration<Rational>>(x), tol);
  }
  throw Error(ErrorKind::invalid_spec, "mode must be exact or float");
}

template <Scalar T>
Norm<T> load_norm(const std::string& spec, const Tolerance& tol) {
  if (spec == "euclidean" || spec == "linf" || spec == "l1") return norm_from_json<T>(Json{{"type", spec}}, tol);
  return norm_from_json<T>(detail::parse_json(read_text(spec)), tol);
}

AnyConfiguration load_configuration(const Options& o) { return parse_configuration(read_text(o.in)); }

int cmd_verify(const Options& o, const std::string& property) {
  auto x = load_configuration(o);
  auto rep = with_mode(x, o, [&]<Scalar T>(const PointConfiguration<T>& c, const Tolerance& tol) {
    if (property == "diametral") return is_k_diametral(c, load_norm<T>(o.norm, tol), o.k, tol);
    if (property == "antipodal") return is_k_antipodal(c, o.k, tol);
    if (property == "equidistant") return is_k_equidistant(c, load_norm<T>(o.norm, tol), o.k, tol);
    if (property == "equivalence") return check_antipodal_gauge_equivalence(c, o.k, tol);
    if (property == "cube-extremal") return verify_cube_extremal(c, o.k, tol);
    throw Error(ErrorKind::invalid_spec, "unknown property " + property);
  });
  emit(to_json(rep));
  return 0;
}

int cmd_graph(const Options& o, const std::string& kind) {
  auto x = load_configuration(o);
  auto g = with_mode(x, o, [&]<Scalar T>(const PointConfiguration<T>& c, const Tolerance& tol) {
    return build_graph(c, load_norm<T>(o.norm, tol), graph_kind_from_string(kind), tol);
  });
  emit(to_json(g));
  return 0;
}

int cmd_search(const Options& o, const std::string& property, std::uint64_t max_nodes) {
  auto x = load_configuration(o);
  return with_mode(x, o, [&]<Scalar T>(const PointConfiguration<T>& c, const Tolerance& tol) {
    SearchProblem<T> prob{c, load_norm<T>(o.norm, tol), o.k, SearchProperty::diametral, max_nodes, o.seed};
    if (property == "antipodal")
      prob.property = SearchProperty::antipodal;
    else if (property != "diametral")
      throw Error(ErrorKind::invalid_spec, "search property must be diametral or antipodal");
    auto res = run_search(prob, tol);
    emit(to_json(res, c));
    return res.exhaustive ? 0 : 1;
  });
}

// Instance file: {"dim", "scalar"?, "body": [[...]], "centers": [[...]]}.
int cmd_tiling(const Options& o, const std::string& check, std::size_t samples) {
  auto j = detail::parse_json(read_text(o.in));
  auto field = [&](const char* key) {
    if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::parse_error, std::string("missing \"") + key + "\"");
    Json c{{"dim", j.value("dim", 0)}, {"points", j.at(key)}};
    if (j.contains("scalar")) c["scalar"] = j.at("scalar");
    return configuration_from_json(c);
  };
  auto body = field("body");
  auto centers = field("centers");
  if (body.index() != centers.index()) throw Error(ErrorKind::parse_error, "body and centers use different scalars");
  auto rep = with_mode(body, o, [&]<Scalar T>(const PointConfiguration<T>& b, const Tolerance& tol) {
    std::vector<Point<T>> cs;
    with_mode(centers, o, [&]<Scalar U>(const PointConfiguration<U>& c, const Tolerance&) {
      if constexpr (std::is_same_v<T, U>) cs.assign(c.points().begin(), c.points().end());
      return 0;
    });
    auto p = convex_hull(b, tol);
    if (check == "packing") return verify_k_fold_packing(p, cs, o.k, tol);
    if (check == "tiling") return verify_multiple_tiling(TilingInstance<T>{p, cs, o.k, samples, o.seed}, tol);
    throw Error(ErrorKind::invalid_spec, "tiling check must be packing or tiling");
  });
  emit(to_json(rep));
  return 0;
}

struct Constructed {
  AnyConfiguration config;
  std::size_t k;
  std::string norm;
  std::string property;
  std::optional<std::string> expected_graph;
};

std::size_t arg(const std::vector<std::string>& params, std::size_t i, const std::string& name) {
  if (i >= params.size()) throw Error(ErrorKind::invalid_spec, "missing parameter " + name);
  try {
    std::size_t used = 0;
    long v = std::stol(params[i], &used);
    if (used != params[i].size() || v < 0) throw std::invalid_argument(params[i]);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw Error(ErrorKind::invalid_spec, "parameter " + name + " must be a nonnegative integer");
  }
}

Constructed construct(const std::string& name, const std::vector<std::string>& params) {
  auto p = [&](std::size_t i, const char* n) { return arg(params, i, n); };
  if (name == "cube") {
    auto d = p(0, "d"), k = p(1, "k");
    return {cube_config(d, k), k, "linf", "cube-extremal", std::nullopt};
  }
  if (name == "cube-norm") {
    auto d = p(0, "d"), k = p(1, "k");
    return {cube_norm_config(d, k), k, "linf", "diametral", std::nullopt};
  }
  if (name == "simplex-lift") {
    auto d = p(0, "d"), k = p(1, "k");
    if (k < 2) throw Error(ErrorKind::invalid_spec, "k must be at least 2");
    return {multiplicity_lift(standard_simplex(d), k - 1), k, "euclidean", "diametral", std::nullopt};
  }
  if (name == "simplex-double") return {simplex_double(p(0, "d")), 3, "euclidean", "diametral", std::nullopt};
  if (name == "polygon") {
    auto m = p(0, "m");
    if (m % 2 == 0) throw Error(ErrorKind::invalid_spec, "polygon expects an odd vertex count");
    return {regular_polygon(m), (m + 1) / 2, "euclidean", "diametral", "C" + std::to_string(m)};
  }
  if (name == "sided-polygon") {
    std::vector<std::size_t> counts;
    for (std::size_t i = 0; i < params.size(); ++i) counts.push_back(p(i, "count"));
    auto n = sided_polygon_size(counts);
    return {sided_polygon(counts), n / 2, "euclidean", "antipodal", std::nullopt};
  }
  if (name == "odd-gon-apex") {
    auto k = p(0, "k");
    return {odd_gon_with_apex(k), k, "euclidean", "diametral", std::nullopt};
  }
  if (name == "moser-spindle") return {moser_spindle(), 3, "euclidean", "equidistant", "moser-spindle"};
  if (name == "realization") {
    if (params.empty()) throw Error(ErrorKind::invalid_spec, "missing parameter name");
    for (auto& r : classification_realizations())
      if (r.name == params[0]) return {r.points, 3, "euclidean", "diametral", r.name};
    throw Error(ErrorKind::invalid_spec, "unknown realization " + params[0]);
  }
  throw Error(ErrorKind::invalid_spec, "unknown construction " + name);
}

int cmd_construct(const std::string& name, const std::vector<std::string>& params) {
  auto c = construct(name, params);
  Json j = to_json(c.config);
  std::size_t n = std::visit([](const auto& x) { return x.size(); }, c.config);
  j["expectation"] = Json{{"k", c.k},
                          {"norm", c.norm},
                          {"property", c.property},
                          {"expected_count", n},
                          {"expected_graph", c.expected_graph ? Json(*c.expected_graph) : Json(nullptr)}};
  emit(j);
  return 0;
}

int cmd_plot(const Options& o, const std::string& kind) {
  if (o.out.empty()) throw Error(ErrorKind::invalid_spec, "plot needs --out");
  auto x = load_configuration(o);
  auto svg = with_mode(x, o, [&]<Scalar T>(const PointConfiguration<T>& c, const Tolerance& tol) {
    std::optional<LabeledGraph> g;
    if (kind != "none") g = build_graph(c, load_norm<T>(o.norm, tol), graph_kind_from_string(kind), tol);
    return emit_svg(c, g);
  });
  write_text(o.out, svg);
  emit(Json{{"written", o.out}});
  return 0;
}

int cmd_reproduce() {
  auto suite = acceptance_suite();
  Json rows = Json::array();
  bool all = true;
  for (std::size_t i = 0; i < suite.size(); ++i) {
    auto r = run_acceptance_row(suite[i], static_cast<int>(i + 1));
    all = all && r.passed;
    rows.push_back(Json{{"id", r.id}, {"claim", r.claim}, {"status", r.passed ? "pass" : "fail"}, {"detail", r.detail}});
  }
  emit(Json{{"rows", rows}, {"all_passed", all}});
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-diametral and k-antipodal point configurations"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* s, bool norm) {
    s->add_option("--in", o.in, "configuration JSON file, - for stdin");
    s->add_option("--k", o.k, "k (at least 2)");
    if (norm) s->add_option("--norm", o.norm, "euclidean, linf, l1 or a norm JSON file");
    s->add_option("--mode", o.mode, "exact or float")->check(CLI::IsMember({"exact", "float"}));
    s->add_option("--tol", o.tol, "relative tolerance for float mode");
  };

  std::string property = "diametral", kind = "diameter", check = "packing", name;
  std::vector<std::string> params;
  std::uint64_t max_nodes = 50'000'000;
  std::size_t samples = 1000;

  auto* verify = app.add_subcommand("verify", "check a k-property of a configuration");
  common(verify, true);
  verify->add_option("--property", property, "diametral, antipodal, equidistant, equivalence or cube-extremal");

  auto* graph = app.add_subcommand("graph", "diameter, antipodal or unit-distance graph");
  common(graph, true);
  graph->add_option("--kind", kind, "diameter, antipodal or unit-distance");

  auto* search = app.add_subcommand("search", "largest k-diametral or k-antipodal subset");
  common(search, true);
  search->add_option("--property", property, "diametral or antipodal");
  search->add_option("--max-nodes", max_nodes, "node budget");
  search->add_option("--seed", o.seed, "seed");

  auto* tiling = app.add_subcommand("tiling", "packing or multiple tiling by half-homothets");
  common(tiling, false);
  tiling->add_option("--check", check, "packing or tiling");
  tiling->add_option("--samples", samples, "sample count for tiling");
  tiling->add_option("--seed", o.seed, "sampling seed");

  auto* cons = app.add_subcommand("construct", "emit a named construction");
  cons->add_option("name", name, "construction name")->required();
  cons->add_option("params", params, "integer parameters or a realization name");

  auto* plot = app.add_subcommand("plot", "SVG drawing of a 2D or 3D configuration");
  common(plot, true);
  plot->add_option("--graph", kind, "diameter, antipodal, unit-distance or none");
  plot->add_option("--out", o.out, "SVG output path");

  auto* repro = app.add_subcommand("reproduce", "run the acceptance table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    emit(Json{{"error", {{"kind", "usage"}, {"message", e.what()}}}});
    return 2;
  }

  try {
    if (*verify) return cmd_verify(o, property);
    if (*graph) return cmd_graph(o, kind);
    if (*search) return cmd_search(o, property, max_nodes);
    if (*tiling) return cmd_tiling(o, check, samples);
    if (*cons) return cmd_construct(name, params);
    if (*plot) return cmd_plot(o, kind);
    if (*repro) return cmd_reproduce();
  } catch (const Error& e) {
    emit(error_json(e));
    return 3;
  } catch (const std::exception& e) {
    emit(Json{{"error", {{"kind", "internal"}, {"message", e.what()}}}});
    return 4;
  }
  return 2;
}
