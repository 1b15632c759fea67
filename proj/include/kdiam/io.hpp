#pragma once

#include <json.hpp>
#include <string>

#include "kdiam/construct.hpp"
#include "kdiam/report.hpp"
#include "kdiam/search.hpp"

namespace kdiam {

using Json = nlohmann::ordered_json;

namespace detail {

// "line L, column C: <text of line L>" for a byte offset into `text`.
inline std::string line_context(const std::string& text, std::size_t offset) {
  offset = std::min(offset, text.size());
  while (offset > 0 && offset == text.size() && text[offset - 1] == '\n') --offset;
  std::size_t line = 1, start = 0;
  for (std::size_t i = 0; i < offset; ++i)
    if (text[i] == '\n') {
      ++line;
      start = i + 1;
    }
  std::size_t end = text.find('\n', start);
  if (end == std::string::npos) end = text.size();
  return "line " + std::to_string(line) + ", column " + std::to_string(offset - start + 1) + ": " +
         text.substr(start, end - start);
}

inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::parse_error, std::string("malformed JSON at ") + line_context(text, e.byte ? e.byte - 1 : 0));
  }
}

template <Scalar T>
T parse_coordinate(const Json& v) {
  if (v.is_string()) return ScalarTraits<T>::parse(v.get<std::string>());
  if (v.is_number_integer()) return ScalarTraits<T>::from_int(v.get<long>());
  if (v.is_number()) {
    // Decimal text of the JSON number, converted exactly in rational mode.
    return ScalarTraits<T>::parse(v.dump());
  }
  throw Error(ErrorKind::parse_error, "coordinate must be a string or a number: " + v.dump());
}

template <Scalar T>
Json scalar_json(const T& v) {
  if constexpr (ScalarTraits<T>::exact)
    return v.get_str();
  else
    return v;
}

template <Scalar T>
PointConfiguration<T> parse_points(const Json& j, std::size_t dim) {
  const auto& pts = j.at("points");
  if (!pts.is_array() || pts.empty()) throw Error(ErrorKind::parse_error, "\"points\" must be a nonempty array");
  std::vector<std::size_t> mult(pts.size(), 1);
  if (j.contains("multiplicities")) {
    const auto& m = j.at("multiplicities");
    if (!m.is_array() || m.size() != pts.size())
      throw Error(ErrorKind::parse_error, "\"multiplicities\" must list one entry per point");
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i].is_number_integer() || m[i].get<long>() < 1)
        throw Error(ErrorKind::parse_error, "multiplicity " + std::to_string(i) + " must be a positive integer");
      mult[i] = m[i].get<std::size_t>();
    }
  }
  std::vector<Point<T>> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& row = pts[i];
    if (!row.is_array() || row.size() != dim)
      throw Error(ErrorKind::parse_error, "point " + std::to_string(i) + " does not have " + std::to_string(dim) + " coordinates");
    std::vector<T> c;
    for (const auto& v : row) c.push_back(parse_coordinate<T>(v));
    for (std::size_t r = 0; r < mult[i]; ++r) out.emplace_back(c);
  }
  return PointConfiguration<T>(dim, std::move(out));
}

}  // namespace detail

/// Parses {"dim", "scalar": "rational"|"float", "points", "multiplicities"?}.
/// The scalar defaults to rational; multiplicities expand in place.
inline AnyConfiguration configuration_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw Error(ErrorKind::parse_error, "configuration must be a JSON object");
    if (!j.contains("dim") || !j.at("dim").is_number_integer() || j.at("dim").get<long>() < 1)
      throw Error(ErrorKind::parse_error, "\"dim\" must be a positive integer");
    const auto dim = j.at("dim").get<std::size_t>();
    std::string scalar = j.value("scalar", std::string("rational"));
    if (scalar == "rational") return detail::parse_points<Rational>(j, dim);
    if (scalar == "float") return detail::parse_points<double>(j, dim);
    throw Error(ErrorKind::parse_error, "unknown scalar \"" + scalar + "\"");
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::parse_error, e.what());
  } catch (const std::invalid_argument& e) {
    throw Error(ErrorKind::parse_error, e.what());
  }
}

inline AnyConfiguration parse_configuration(const std::string& text) {
  auto j = detail::parse_json(text);
  try {
    return configuration_from_json(j);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::parse_error) throw;
    throw Error(ErrorKind::parse_error, e.what());
  }
}

template <Scalar T>
Json to_json(const PointConfiguration<T>& x) {
  Json pts = Json::array();
  for (const auto& p : x) {
    Json row = Json::array();
    for (const auto& c : p.coords()) row.push_back(detail::scalar_json(c));
    pts.push_back(std::move(row));
  }
  return Json{{"dim", x.dim()}, {"scalar", ScalarTraits<T>::scalar_name}, {"points", std::move(pts)}};
}

inline Json to_json(const AnyConfiguration& x) {
  return std::visit([](const auto& c) { return to_json(c); }, x);
}

/// {"type": "euclidean"|"linf"|"l1"} or {"type": "gauge", "vertices": [...]}.
template <Scalar T>
Norm<T> norm_from_json(const Json& j, const Tolerance& tol = {}) {
  try {
    std::string type = j.at("type").get<std::string>();
    if (type == "euclidean") return Norm<T>::euclidean();
    if (type == "linf") return Norm<T>::linf();
    if (type == "l1") return Norm<T>::l1();
    if (type == "gauge") {
      const auto& vs = j.at("vertices");
      if (!vs.is_array() || vs.empty()) throw Error(ErrorKind::parse_error, "gauge needs a nonempty vertex list");
      auto cfg = detail::parse_points<T>(Json{{"points", vs}}, vs.front().size());
      return Norm<T>::gauge(convex_hull(cfg, tol), tol);
    }
    throw Error(ErrorKind::parse_error, "unknown norm type \"" + type + "\"");
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::parse_error, e.what());
  }
}

template <Scalar T>
Json to_json(const Norm<T>& n) {
  Json j{{"type", n.name()}};
  if (n.kind() == NormKind::gauge) {
    Json vs = Json::array();
    for (const auto& v : n.body().vertices()) {
      Json row = Json::array();
      for (const auto& c : v.coords()) row.push_back(detail::scalar_json(c));
      vs.push_back(std::move(row));
    }
    j["vertices"] = std::move(vs);
  }
  return j;
}

inline Json edges_json(const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  Json e = Json::array();
  for (auto [a, b] : edges) e.push_back(Json::array({a, b}));
  return e;
}

inline Json to_json(const LabeledGraph& g) {
  Json j{{"n", g.n()}, {"edges", edges_json(g.edges())}, {"kind", to_string(g.kind())}};
  if (g.diameter_key()) j["diameter_key"] = *g.diameter_key();
  return j;
}

inline LabeledGraph graph_from_json(const Json& j) {
  try {
    LabeledGraph g(j.at("n").get<std::size_t>(), graph_kind_from_string(j.value("kind", std::string("abstract"))));
    for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
    if (j.contains("diameter_key")) g.set_diameter_key(j.at("diameter_key").get<std::string>());
    return g;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::parse_error, e.what());
  }
}

/// Report JSON. `witness` is the violating tuple for a false verdict and the
/// certifying edge list otherwise.
inline Json to_json(const VerificationReport& r) {
  Json j{{"property", r.property}, {"k", r.k}};
  if (r.norm) j["norm"] = *r.norm;
  j["verdict"] = r.verdict;
  j["witness"] = r.verdict || r.witness.empty() ? edges_json(r.edges) : Json(r.witness);
  j["diameter_key"] = r.diameter_key ? Json(*r.diameter_key) : Json(nullptr);
  j["mode"] = r.mode;
  if (r.tolerance) j["tolerance"] = *r.tolerance;
  j["flags"] = r.flags;
  if (!r.details.empty()) j["details"] = r.details;
  return j;
}

template <Scalar T>
Json to_json(const SearchResult& r, const PointConfiguration<T>& family) {
  Json j{{"best_size", r.best_size}, {"best_subset", r.best_subset}, {"exhaustive", r.exhaustive},
         {"nodes_visited", r.nodes_visited}};
  if (r.diameter_key) j["diameter_key"] = *r.diameter_key;
  if (!r.best_subset.empty()) j["witness"] = to_json(detail::subset_of(family, r.best_subset));
  return j;
}

inline Json error_json(const Error& e) {
  return Json{{"error", {{"kind", to_string(e.kind())}, {"message", e.what()}}}};
}

}  // namespace kdiam
