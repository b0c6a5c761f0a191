#include "lamina/svg.hpp"

#include "lamina/version.hpp"

#include <fmt/format.h>

#include <array>
#include <cmath>
#include <numbers>

namespace lamina {

namespace {

constexpr double tau = 2 * std::numbers::pi;

struct Panel {
  double x0, y0, size;
  // Maps the square [-r, r]^2 onto the panel, y up.
  double r;
  double px(double x) const { return x0 + (x + r) / (2 * r) * size; }
  double py(double y) const { return y0 + (r - y) / (2 * r) * size; }
  double scale() const { return size / (2 * r); }
};

std::string num(double v) {
  std::string s = fmt::format("{:.3f}", v);
  if (s == "-0.000") s = "0.000";
  return s;
}

// Geodesic from angle a to angle b as an SVG path fragment starting at a.
std::string geodesic(const Panel& p, const Angle& a, const Angle& b, bool move) {
  double ta = a.to_double() * tau, tb = b.to_double() * tau;
  double xa = std::cos(ta), ya = std::sin(ta), xb = std::cos(tb), yb = std::sin(tb);
  double delta = std::fmod(tb - ta + 2 * tau, tau);
  std::string s = move ? fmt::format("M{} {}", num(p.px(xa)), num(p.py(ya))) : std::string();
  if (std::abs(delta - std::numbers::pi) < 1e-9) {
    s += fmt::format(" L{} {}", num(p.px(xb)), num(p.py(yb)));
  } else {
    double radius = std::abs(std::tan(delta / 2)) * p.scale();
    int sweep = delta < std::numbers::pi ? 1 : 0;
    s += fmt::format(" A{} {} 0 0 {} {} {}", num(radius), num(radius), sweep, num(p.px(xb)), num(p.py(yb)));
  }
  return s;
}

const std::array<const char*, 8> palette = {"#0b1a2e", "#17304f", "#22466f", "#2f5d8c",
                                             "#4a78a6", "#6f97bf", "#a1bfd9", "#e3edf6"};

void draw_plane(std::string& out, const Panel& p, const RenderOptions& opts) {
  out += fmt::format("<g id=\"plane\">\n<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"#ffffff\"/>\n",
                     num(p.x0), num(p.y0), num(p.size), num(p.size));
  if (opts.polynomial) {
    out += "<g shape-rendering=\"crispEdges\">\n";
    const Polynomial& poly = *opts.polynomial;
    const double radius = escape_radius(poly);
    const int n = opts.raster;
    const double cell = p.size / n;
    for (int row = 0; row < n; ++row) {
      double y = p.r - (row + 0.5) * 2 * p.r / n;
      std::vector<int> band(n);
      for (int col = 0; col < n; ++col) {
        Complex z(-p.r + (col + 0.5) * 2 * p.r / n, y);
        int it = 0;
        while (it < opts.max_iter && std::abs(z) <= radius) {
          z = poly(z);
          ++it;
        }
        band[col] = it >= opts.max_iter ? 0 : std::max(1, 7 - static_cast<int>(std::log2(1.0 + it)));
      }
      for (int col = 0; col < n;) {
        int end = col;
        while (end < n && band[end] == band[col]) ++end;
        if (band[col] != 7)
          out += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{}\"/>\n",
                             num(p.x0 + col * cell), num(p.y0 + row * cell), num((end - col) * cell), num(cell),
                             palette[static_cast<std::size_t>(band[col])]);
        col = end;
      }
    }
    out += "</g>\n";
  }
  out += fmt::format("<clipPath id=\"view\"><rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\"/></clipPath>\n",
                     num(p.x0), num(p.y0), num(p.size), num(p.size));
  out += "<g clip-path=\"url(#view)\" fill=\"none\" stroke=\"#d1495b\" stroke-width=\"1.2\">\n";
  for (const RayTrace& ray : opts.rays) {
    out += fmt::format("<polyline data-angle=\"{}\" points=\"", ray.angle.str());
    for (std::size_t i = 0; i < ray.points.size(); ++i) {
      if (i) out += ' ';
      out += num(p.px(ray.points[i].real())) + "," + num(p.py(ray.points[i].imag()));
    }
    out += "\"/>\n";
  }
  out += "</g>\n</g>\n";
}

void draw_disk(std::string& out, const Panel& p, const Lamination& lam) {
  out += "<g id=\"disk\">\n";
  out += fmt::format("<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"#fbfbf8\" stroke=\"#222222\" stroke-width=\"1.5\"/>\n",
                     num(p.px(0)), num(p.py(0)), num(p.scale()));
  Lamination l = lam;
  l.normalize();
  for (const AngleClass& c : l.classes) {
    auto sides = c.sides();
    if (sides.empty()) continue;
    std::string d;
    for (std::size_t i = 0; i < sides.size(); ++i) d += geodesic(p, sides[i].first, sides[i].second, i == 0);
    bool polygon = c.size() > 2;
    if (polygon) d += " Z";
    out += fmt::format("<path data-class=\"{}\" d=\"{}\" fill=\"{}\" stroke=\"#1d3557\" stroke-width=\"1\"/>\n",
                       c.str(), d, polygon ? "#a8dadc" : "none");
  }
  out += "</g>\n";
}

std::string header(double width, double height) {
  return fmt::format(
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<!-- lamina {} -->\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">\n",
      version, num(width), num(height), num(width), num(height));
}

}  // namespace

std::string render_svg(const Lamination& lam, const ModelGraph* model, const RenderOptions& opts) {
  const double s = opts.size;
  const bool plane = opts.polynomial.has_value() || !opts.rays.empty();
  std::string out = header(plane ? 2 * s : s, s);
  if (model)
    out += fmt::format("<desc>degree {}; {} classes, {} gaps, {} edges</desc>\n", model->degree,
                       model->class_count(), model->gap_count(), model->edges.size());
  draw_disk(out, Panel{0, 0, s, 1.05}, lam);
  if (plane) draw_plane(out, Panel{s, 0, s, opts.view_radius}, opts);
  out += "</svg>\n";
  return out;
}

std::string render_rays_svg(const RenderOptions& opts) {
  const double s = opts.size;
  std::string out = header(s, s);
  draw_plane(out, Panel{0, 0, s, opts.view_radius}, opts);
  out += "</svg>\n";
  return out;
}

}  // namespace lamina
