#include "vantage/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "vantage/enumeration.hpp"
#include "vantage/errors.hpp"

namespace vantage {

namespace {

struct Xy {
  double x;
  double y;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

// Maps the box [lo, hi]^2 (equal aspect) onto the viewport, y pointing up.
struct Frame {
  double x0, y0, scale;
  int size, margin;
  Frame(Xy lo, Xy hi, const SvgStyle& s) : size(s.size), margin(s.margin) {
    const double span = std::max({hi.x - lo.x, hi.y - lo.y, 1e-12});
    scale = (s.size - 2.0 * s.margin) / span;
    x0 = (lo.x + hi.x) / 2;
    y0 = (lo.y + hi.y) / 2;
  }
  double sx(double x) const { return size / 2.0 + (x - x0) * scale; }
  double sy(double y) const { return size / 2.0 - (y - y0) * scale; }
};

std::string header(const SvgStyle& s) {
  const std::string n = std::to_string(s.size);
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + n + "\" height=\"" + n + "\" viewBox=\"0 0 " + n +
         " " + n + "\">\n<rect width=\"" + n + "\" height=\"" + n + "\" fill=\"white\"/>\n";
}

std::vector<Xy> to_xy(const std::vector<Point>& pts) {
  std::vector<Xy> out;
  for (const auto& p : pts) out.push_back({p[0].get_d(), p.dim() > 1 ? p[1].get_d() : 0.0});
  return out;
}

std::pair<Xy, Xy> bounds(const std::vector<Xy>& pts, double pad) {
  Xy lo{pts[0].x, pts[0].y};
  Xy hi = lo;
  for (const auto& p : pts) {
    lo.x = std::min(lo.x, p.x);
    lo.y = std::min(lo.y, p.y);
    hi.x = std::max(hi.x, p.x);
    hi.y = std::max(hi.y, p.y);
  }
  const double span = std::max({hi.x - lo.x, hi.y - lo.y, 1.0});
  lo.x -= pad * span;
  lo.y -= pad * span;
  hi.x += pad * span;
  hi.y += pad * span;
  return {lo, hi};
}

std::string circle(const Frame& f, Xy p, double r, const std::string& fill, const std::string& stroke) {
  return "<circle cx=\"" + fmt(f.sx(p.x)) + "\" cy=\"" + fmt(f.sy(p.y)) + "\" r=\"" + fmt(r) + "\" fill=\"" + fill +
         "\" stroke=\"" + stroke + "\"/>\n";
}

std::string label(const Frame& f, Xy p, const std::string& text) {
  return "<text x=\"" + fmt(f.sx(p.x) + 6) + "\" y=\"" + fmt(f.sy(p.y) - 6) +
         "\" font-family=\"monospace\" font-size=\"12\">" + text + "</text>\n";
}

// Keeps the part of `poly` where a x + b y - c has sign `sign`.
std::vector<Xy> clip(const std::vector<Xy>& poly, double a, double b, double c, int sign) {
  std::vector<Xy> out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Xy p = poly[i];
    const Xy q = poly[(i + 1) % n];
    const double fp = sign * (a * p.x + b * p.y - c);
    const double fq = sign * (a * q.x + b * q.y - c);
    if (fp >= 0) out.push_back(p);
    if ((fp >= 0) != (fq >= 0)) {
      const double t = fp / (fp - fq);
      out.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
    }
  }
  return out;
}

void require_planar(const CandidateSet& c) {
  if (c.dim != 2) throw PreconditionError("plotting needs 2-dimensional points");
  if (c.size() == 0) throw PreconditionError("nothing to plot");
}

}  // namespace

std::string svg_point_set(const CandidateSet& candidates, const SvgStyle& style) {
  require_planar(candidates);
  const auto pts = to_xy(candidates.points);
  const auto [lo, hi] = bounds(pts, 0.1);
  const Frame f(lo, hi, style);
  std::string out = header(style);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    out += circle(f, pts[i], 4, "black", "black");
    out += label(f, pts[i], std::to_string(i));
  }
  return out + "</svg>\n";
}

std::string svg_six_point(const SvgStyle& style) {
  const double s3 = std::sqrt(3.0);
  const std::vector<Xy> outer{{0, 2}, {-s3, -1}, {s3, -1}};
  const std::vector<Xy> inner{{0, -1.1}, {1.1 * s3 / 2, 0.55}, {-1.1 * s3 / 2, 0.55}};
  const Frame f({-2.5, -2.5}, {2.5, 2.5}, style);
  std::string out = header(style);
  out += "<polygon points=\"";
  for (const auto& p : outer) out += fmt(f.sx(p.x)) + "," + fmt(f.sy(p.y)) + " ";
  out += "\" fill=\"none\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>\n";
  for (std::size_t i = 0; i < 3; ++i) {
    out += "<g class=\"outer\">" + circle(f, outer[i], 5, "black", "black") + "</g>\n";
    out += label(f, outer[i], "c" + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < 3; ++i) {
    out += "<g class=\"inner\">" + circle(f, inner[i], 5, "white", "black") + "</g>\n";
    out += label(f, inner[i], "c'" + std::to_string(i + 1));
  }
  return out + "</svg>\n";
}

std::string svg_bisector_arrangement(const CandidateSet& candidates, const SvgStyle& style) {
  require_planar(candidates);
  const Arrangement arr = bisector_arrangement(candidates);
  const auto pts = to_xy(candidates.points);
  const auto [lo, hi] = bounds(pts, 0.6);
  const Frame f(lo, hi, style);
  const double half = (style.size / 2.0) / f.scale;
  const std::vector<Xy> box{{f.x0 - half, f.y0 - half}, {f.x0 + half, f.y0 - half}, {f.x0 + half, f.y0 + half},
                            {f.x0 - half, f.y0 + half}};
  std::string out = header(style);
  for (std::size_t ci = 0; ci < arr.cells.size(); ++ci) {
    std::vector<Xy> poly = box;
    const auto& cell = arr.cells[ci];
    for (std::size_t li = 0; li < arr.lines.size() && !poly.empty(); ++li) {
      const Line& l = arr.lines[li];
      poly = clip(poly, l.a.get_d(), l.b.get_d(), l.c.get_d(), cell.signs[li]);
    }
    if (poly.size() < 3) continue;
    const int hue = static_cast<int>((ci * 360) / std::max<std::size_t>(arr.cells.size(), 1));
    out += "<polygon class=\"cell\" points=\"";
    for (const auto& p : poly) out += fmt(f.sx(p.x)) + "," + fmt(f.sy(p.y)) + " ";
    out += "\" fill=\"hsl(" + std::to_string(hue) + ",60%,85%)\" stroke=\"none\"/>\n";
  }
  for (const auto& l : arr.lines) {
    const double a = l.a.get_d();
    const double b = l.b.get_d();
    const double c = l.c.get_d();
    Xy p;
    Xy q;
    if (std::abs(b) > std::abs(a)) {
      p = {box[0].x, (c - a * box[0].x) / b};
      q = {box[1].x, (c - a * box[1].x) / b};
    } else {
      p = {(c - b * box[0].y) / a, box[0].y};
      q = {(c - b * box[2].y) / a, box[2].y};
    }
    out += "<line class=\"bisector\" x1=\"" + fmt(f.sx(p.x)) + "\" y1=\"" + fmt(f.sy(p.y)) + "\" x2=\"" +
           fmt(f.sx(q.x)) + "\" y2=\"" + fmt(f.sy(q.y)) + "\" stroke=\"#444\"/>\n";
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    out += circle(f, pts[i], 4, "black", "black");
    out += label(f, pts[i], std::to_string(i));
  }
  return out + "</svg>\n";
}

std::string svg_flanked(const FlankedLayout& layout, const VantageMultiset& vantage, const SvgStyle& style) {
  const CandidateSet& c = layout.candidates;
  if (c.dim > 2 || c.size() == 0) throw PreconditionError("flanked plot needs 1- or 2-dimensional points");
  auto squash = [](double v) { return std::copysign(std::log10(1.0 + std::abs(v)), v); };
  std::vector<Xy> pts;
  for (const auto& p : to_xy(c.points)) pts.push_back({squash(p.x), squash(p.y)});
  std::vector<Xy> vs;
  for (const auto& e : vantage.entries) {
    vs.push_back({squash(e.point[0].get_d()), e.point.dim() > 1 ? squash(e.point[1].get_d()) : 0.0});
  }
  std::vector<Xy> all = pts;
  all.insert(all.end(), vs.begin(), vs.end());
  const auto [lo, hi] = bounds(all, 0.08);
  const Frame f(lo, hi, style);
  std::string out = header(style);
  out += "<line x1=\"0\" y1=\"" + fmt(f.sy(0)) + "\" x2=\"" + std::to_string(style.size) + "\" y2=\"" + fmt(f.sy(0)) +
         "\" stroke=\"#ccc\"/>\n";
  const char* colours[] = {"black", "#1f77b4", "#d62728"};
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const int part = i < layout.n_prime ? 0 : (i < layout.n_prime + layout.n_hat1 ? 1 : 2);
    out += circle(f, pts[i], 3, colours[part], colours[part]);
  }
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const double x = f.sx(vs[i].x);
    const double y = f.sy(vs[i].y);
    out += "<path class=\"vantage\" d=\"M" + fmt(x - 5) + "," + fmt(y - 5) + " L" + fmt(x + 5) + "," + fmt(y + 5) +
           " M" + fmt(x - 5) + "," + fmt(y + 5) + " L" + fmt(x + 5) + "," + fmt(y - 5) +
           "\" stroke=\"#2ca02c\" stroke-width=\"2\"/>\n";
    if (vantage.entries[i].multiplicity > 1) {
      out += label(f, vs[i], "x" + std::to_string(vantage.entries[i].multiplicity));
    }
  }
  out += "<text x=\"10\" y=\"20\" font-family=\"monospace\" font-size=\"12\">log scale: sgn(x) log10(1+|x|)</text>\n";
  return out + "</svg>\n";
}

}  // namespace vantage
