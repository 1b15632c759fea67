#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>

#include "kdiam/graph.hpp"
#include "kdiam/point.hpp"

namespace kdiam {

namespace detail {

inline std::string svg_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

// Andrew's monotone chain on projected points; returns indices in order.
inline std::vector<std::size_t> planar_hull(const std::vector<std::array<double, 2>>& p) {
  std::vector<std::size_t> idx(p.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return p[a] < p[b]; });
  idx.erase(std::unique(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return p[a] == p[b]; }),
            idx.end());
  if (idx.size() < 3) return idx;
  auto cross = [&](std::size_t o, std::size_t a, std::size_t b) {
    return (p[a][0] - p[o][0]) * (p[b][1] - p[o][1]) - (p[a][1] - p[o][1]) * (p[b][0] - p[o][0]);
  };
  std::vector<std::size_t> h(2 * idx.size());
  std::size_t k = 0;
  for (auto i : idx) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], i) <= 1e-12) --k;
    h[k++] = i;
  }
  for (std::size_t t = idx.size() - 1, lower = k + 1; t-- > 0;) {
    auto i = idx[t];
    while (k >= lower && cross(h[k - 2], h[k - 1], i) <= 1e-12) --k;
    h[k++] = i;
  }
  h.resize(k - 1);
  return h;
}

}  // namespace detail

/// SVG drawing of a 2D or 3D configuration: points as circles, graph edges as
/// lines and the outline of the (projected) hull dashed. 3D input uses a fixed
/// orthographic view.
template <Scalar T>
std::string emit_svg(const PointConfiguration<T>& x, const std::optional<LabeledGraph>& g = std::nullopt) {
  if (x.dim() > 3 || x.dim() < 2)
    throw Error(ErrorKind::unsupported_dimension, "plots support dimension 2 or 3 only");
  if (g && g->n() != x.size()) throw Error(ErrorKind::dimension_mismatch, "graph and configuration sizes differ");
  std::vector<std::array<double, 2>> p;
  const double az = 0.5, el = 0.35;  // radians
  for (const auto& pt : x) {
    double a = to_double(pt[0]), b = to_double(pt[1]);
    if (x.dim() == 2) {
      p.push_back({a, b});
    } else {
      double c = to_double(pt[2]);
      double u = a * std::cos(az) - b * std::sin(az);
      double w = a * std::sin(az) + b * std::cos(az);
      p.push_back({u, c * std::cos(el) - w * std::sin(el)});
    }
  }
  double lo0 = p[0][0], hi0 = p[0][0], lo1 = p[0][1], hi1 = p[0][1];
  for (const auto& q : p) {
    lo0 = std::min(lo0, q[0]);
    hi0 = std::max(hi0, q[0]);
    lo1 = std::min(lo1, q[1]);
    hi1 = std::max(hi1, q[1]);
  }
  const double size = 400, margin = 30;
  double span = std::max({hi0 - lo0, hi1 - lo1, 1e-9});
  double s = (size - 2 * margin) / span;
  auto sx = [&](double v) { return detail::svg_num(margin + (v - lo0) * s); };
  auto sy = [&](double v) { return detail::svg_num(size - margin - (v - lo1) * s); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" viewBox=\"0 0 400 400\">\n";
  out << "<rect width=\"400\" height=\"400\" fill=\"white\"/>\n";
  auto hull = detail::planar_hull(p);
  if (hull.size() >= 2) {
    out << "<polygon fill=\"none\" stroke=\"#888\" stroke-dasharray=\"6 4\" points=\"";
    for (std::size_t i = 0; i < hull.size(); ++i)
      out << (i ? " " : "") << sx(p[hull[i]][0]) << "," << sy(p[hull[i]][1]);
    out << "\"/>\n";
  }
  if (g)
    for (auto [a, b] : g->edges())
      out << "<line x1=\"" << sx(p[a][0]) << "\" y1=\"" << sy(p[a][1]) << "\" x2=\"" << sx(p[b][0]) << "\" y2=\""
          << sy(p[b][1]) << "\" stroke=\"#1f4e9c\" stroke-width=\"2\"/>\n";
  for (std::size_t i = 0; i < p.size(); ++i)
    out << "<circle cx=\"" << sx(p[i][0]) << "\" cy=\"" << sy(p[i][1]) << "\" r=\"5\" fill=\"#c0392b\"><title>" << i
        << "</title></circle>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace kdiam
