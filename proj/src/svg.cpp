#include "uxc/svg.hpp"

#include <cmath>
#include <cstdio>

namespace uxc {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v + 0.0);  // normalize -0
  return buf;
}

std::vector<std::array<double, 3>> real_triples(const Document& doc) {
  if (!doc.draw_hints.empty()) return doc.draw_hints;
  if (!doc.is_rational())
    throw RenderError("prime-field document has no draw hints; nothing to draw");
  std::vector<std::array<double, 3>> out;
  auto push = [&](const std::array<Rational, 3>& t) {
    out.push_back({t[0].convert_to<double>(), t[1].convert_to<double>(), t[2].convert_to<double>()});
  };
  if (doc.is_lines()) {
    for (const auto& l : std::get<LineArrangement<Rational>>(doc.payload).lines()) push(l.coeffs());
  } else {
    for (const auto& p : std::get<PointConfiguration<Rational>>(doc.payload).points()) push(p.coords());
  }
  return out;
}

}  // namespace

std::string render_svg(const Document& doc, const RenderOptions& opt) {
  const auto triples = real_triples(doc);
  const double R = opt.radius;
  const double S = static_cast<double>(opt.size);
  const double cx = S / 2, cy = S / 2;
  const double px_r = S / 2 - 10;
  const double scale = px_r / R;
  auto X = [&](double x) { return cx + x * scale; };
  auto Y = [&](double y) { return cy - y * scale; };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(opt.size) + "\" height=\"" +
         std::to_string(opt.size) + "\" viewBox=\"0 0 " + std::to_string(opt.size) + " " + std::to_string(opt.size) +
         "\">\n";
  if (!doc.label.empty()) svg += "  <title>" + doc.label + "</title>\n";
  svg += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // boundary circle: the line at infinity in the disk model
  svg += "  <circle cx=\"" + fmt(cx) + "\" cy=\"" + fmt(cy) + "\" r=\"" + fmt(px_r) +
         "\" fill=\"none\" stroke=\"#888\" stroke-width=\"1\"/>\n";

  const double eps = 1e-12;
  if (doc.is_lines()) {
    for (const auto& t : triples) {
      const double a = t[0], b = t[1], c = t[2];
      const double n2 = a * a + b * b;
      if (n2 < eps) {
        // the line at infinity itself: emphasize the boundary
        svg += "  <circle cx=\"" + fmt(cx) + "\" cy=\"" + fmt(cy) + "\" r=\"" + fmt(px_r) +
               "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
        continue;
      }
      const double n = std::sqrt(n2);
      const double d0 = -c / n2;      // foot of the perpendicular: d0 * (a, b)
      const double fx = a * d0, fy = b * d0;
      const double dist = std::abs(c) / n;
      if (dist >= R) continue;  // outside the viewport disk
      const double half = std::sqrt(R * R - dist * dist);
      const double ux = -b / n, uy = a / n;
      svg += "  <line x1=\"" + fmt(X(fx - half * ux)) + "\" y1=\"" + fmt(Y(fy - half * uy)) + "\" x2=\"" +
             fmt(X(fx + half * ux)) + "\" y2=\"" + fmt(Y(fy + half * uy)) +
             "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    }
  } else {
    for (const auto& t : triples) {
      const double x = t[0], y = t[1], z = t[2];
      if (std::abs(z) > eps * std::max({std::abs(x), std::abs(y), 1.0})) {
        const double ax = x / z, ay = y / z;
        if (ax * ax + ay * ay <= R * R)
          svg += "  <circle cx=\"" + fmt(X(ax)) + "\" cy=\"" + fmt(Y(ay)) + "\" r=\"3\" fill=\"black\"/>\n";
      } else {
        // direction point: mark on the boundary circle
        const double n = std::sqrt(x * x + y * y);
        svg += "  <circle cx=\"" + fmt(cx + px_r * x / n) + "\" cy=\"" + fmt(cy - px_r * y / n) +
               "\" r=\"3\" fill=\"black\"/>\n";
      }
    }
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace uxc
