#include "springweb/render.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <vector>

namespace springweb {

namespace {

constexpr double kCanvas = 600.0;
constexpr double kCenter = 300.0;
constexpr double kRadius = 240.0;
constexpr double kBaseline = 450.0;
constexpr double kMargin = 50.0;
constexpr double kStrandGap = 4.0;

struct Point {
  double x = 0;
  double y = 0;
};

std::string num(double v) {
  if (std::fabs(v) < 0.005) v = 0.0;  // no "-0.00"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

Point on_circle(int label, int n, double radius = kRadius) {
  const double theta = 2.0 * std::numbers::pi * (label - 0.5) / n;
  return {kCenter + radius * std::sin(theta), kCenter - radius * std::cos(theta)};
}

Point on_baseline(int label, int n) {
  const double step = n > 1 ? (kCanvas - 2 * kMargin) / (n - 1) : 0.0;
  return {n > 1 ? kMargin + (label - 1) * step : kCenter, kBaseline};
}

Point mean(const std::vector<Point>& ps) {
  Point out;
  for (const auto& p : ps) {
    out.x += p.x;
    out.y += p.y;
  }
  out.x /= static_cast<double>(ps.size());
  out.y /= static_cast<double>(ps.size());
  return out;
}

std::string svg_open() {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"600\" height=\"600\" "
         "viewBox=\"0 0 600 600\">\n"
         "<rect width=\"600\" height=\"600\" fill=\"white\"/>\n";
}

std::string svg_close() { return "</svg>\n"; }

std::string disc() {
  return "<circle class=\"disc\" cx=\"300.00\" cy=\"300.00\" r=\"240.00\" fill=\"none\" stroke=\"#999999\"/>\n";
}

std::string line(const char* cls, Point a, Point b) {
  return std::string("<line class=\"") + cls + "\" x1=\"" + num(a.x) + "\" y1=\"" + num(a.y) + "\" x2=\"" +
         num(b.x) + "\" y2=\"" + num(b.y) + "\" stroke=\"black\" stroke-width=\"2\"/>\n";
}

std::string dot(const char* cls, Point p, double r, const char* fill) {
  return std::string("<circle class=\"") + cls + "\" cx=\"" + num(p.x) + "\" cy=\"" + num(p.y) + "\" r=\"" +
         num(r) + "\" fill=\"" + fill + "\" stroke=\"black\" stroke-width=\"2\"/>\n";
}

std::string label_text(int label, Point p) {
  return "<text class=\"label\" x=\"" + num(p.x) + "\" y=\"" + num(p.y) +
         "\" font-size=\"14\" text-anchor=\"middle\" dominant-baseline=\"middle\">" + std::to_string(label) +
         "</text>\n";
}

std::string circle_boundary(int n) {
  std::string out;
  for (int i = 1; i <= n; ++i) {
    out += dot("boundary", on_circle(i, n), 4, "black");
    out += label_text(i, on_circle(i, n, kRadius + 22));
  }
  return out;
}

// Chord bent toward the centre, so nested arcs stay nested.
std::string circle_arc(Point a, Point b) {
  const Point mid{(a.x + b.x) / 2, (a.y + b.y) / 2};
  const Point ctrl{kCenter + (mid.x - kCenter) * 0.3, kCenter + (mid.y - kCenter) * 0.3};
  return "<path class=\"arc\" d=\"M " + num(a.x) + " " + num(a.y) + " Q " + num(ctrl.x) + " " + num(ctrl.y) + " " +
         num(b.x) + " " + num(b.y) + "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
}

struct WebLayout {
  std::map<int, Point> vertex;  // internal vertex id -> position
};

WebLayout layout_web(const HourglassWeb& w) {
  const int n = w.boundary_size();
  WebLayout out;
  for (const auto& c : w.claws()) {
    std::vector<Point> ps;
    for (int label : c.boundary) ps.push_back(on_circle(label, n, kRadius * 0.55));
    out.vertex[c.vertex] = mean(ps);
  }
  for (int f : w.filled()) {
    std::vector<Point> ps;
    for (const auto& e : w.edges()) {
      if (e.v == f) ps.push_back(out.vertex.at(e.u));
      if (e.u == f) ps.push_back(out.vertex.at(e.v));
    }
    out.vertex[f] = ps.empty() ? Point{kCenter, kCenter} : mean(ps);
  }
  return out;
}

std::vector<std::pair<Point, Point>> strands(Point a, Point b, int mult) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len = std::hypot(dx, dy);
  const double nx = len > 0 ? -dy / len : 0.0;
  const double ny = len > 0 ? dx / len : 0.0;
  std::vector<std::pair<Point, Point>> out;
  for (int s = 0; s < mult; ++s) {
    const double off = (s - (mult - 1) / 2.0) * kStrandGap;
    out.push_back({{a.x + nx * off, a.y + ny * off}, {b.x + nx * off, b.y + ny * off}});
  }
  return out;
}

// TikZ helpers: canvas pixels map to cm with the y axis flipped.
std::string tikz_coord(Point p) {
  return "(" + num((p.x - kCenter) / 40.0) + "," + num((kCenter - p.y) / 40.0) + ")";
}

}  // namespace

std::string render_matching(const NoncrossingMatching& m) {
  std::string out = svg_open() + disc();
  for (const auto& [a, b] : m.edges()) out += circle_arc(on_circle(a, m.n()), on_circle(b, m.n()));
  out += circle_boundary(m.n());
  return out + svg_close();
}

std::string render_diagram(const MatchingRayDiagram& m) {
  const int n = m.n();
  std::string out = svg_open();
  out += line("baseline", {kMargin / 2, kBaseline}, {kCanvas - kMargin / 2, kBaseline});
  for (const auto& [a, b] : m.edges()) {
    const Point p = on_baseline(a, n);
    const Point q = on_baseline(b, n);
    const double r = (q.x - p.x) / 2;
    out += "<path class=\"arc\" d=\"M " + num(p.x) + " " + num(p.y) + " A " + num(r) + " " + num(r) + " 0 0 1 " +
           num(q.x) + " " + num(q.y) + "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
  }
  for (int v : m.rays()) {
    const Point p = on_baseline(v, n);
    out += line("ray", p, {p.x, 20.0});
  }
  for (int i = 1; i <= n; ++i) {
    const Point p = on_baseline(i, n);
    out += dot("boundary", p, 4, "black");
    out += label_text(i, {p.x, p.y + 22});
  }
  return out + svg_close();
}

std::string render_web(const HourglassWeb& w) {
  const int n = w.boundary_size();
  const auto layout = layout_web(w);
  std::string out = svg_open() + disc();
  for (const auto& c : w.claws())
    for (int label : c.boundary) out += line("leg", on_circle(label, n), layout.vertex.at(c.vertex));
  for (const auto& e : w.edges()) {
    const Point a = layout.vertex.at(e.u);
    const Point b = layout.vertex.at(e.v);
    if (e.mult == 1) {
      out += line("edge", a, b);
      continue;
    }
    out += "<g class=\"hourglass\" data-mult=\"" + std::to_string(e.mult) + "\">\n";
    for (const auto& [p, q] : strands(a, b, e.mult)) out += line("strand", p, q);
    out += "</g>\n";
  }
  for (const auto& c : w.claws()) out += dot("unfilled", layout.vertex.at(c.vertex), 8, "white");
  for (int f : w.filled()) out += dot("filled", layout.vertex.at(f), 8, "black");
  out += circle_boundary(n);
  return out + svg_close();
}

std::string render_matching_tikz(const NoncrossingMatching& m) {
  std::string out = "\\begin{tikzpicture}\n\\draw[gray] (0,0) circle (6cm);\n";
  for (const auto& [a, b] : m.edges())
    out += "\\draw[thick] " + tikz_coord(on_circle(a, m.n())) + " to[bend left=20] " +
           tikz_coord(on_circle(b, m.n())) + ";\n";
  for (int i = 1; i <= m.n(); ++i)
    out += "\\fill " + tikz_coord(on_circle(i, m.n())) + " circle (2pt) node[anchor=center, label={" +
           std::to_string(i) + "}] {};\n";
  return out + "\\end{tikzpicture}\n";
}

std::string render_diagram_tikz(const MatchingRayDiagram& m) {
  const int n = m.n();
  std::string out = "\\begin{tikzpicture}\n";
  for (const auto& [a, b] : m.edges())
    out += "\\draw[thick] " + tikz_coord(on_baseline(a, n)) + " arc (180:0:" +
           num((on_baseline(b, n).x - on_baseline(a, n).x) / 80.0) + ");\n";
  for (int v : m.rays()) {
    const Point p = on_baseline(v, n);
    out += "\\draw[thick] " + tikz_coord(p) + " -- " + tikz_coord({p.x, 20.0}) + ";\n";
  }
  for (int i = 1; i <= n; ++i)
    out += "\\fill " + tikz_coord(on_baseline(i, n)) + " circle (2pt) node[below] {" + std::to_string(i) + "};\n";
  return out + "\\end{tikzpicture}\n";
}

std::string render_web_tikz(const HourglassWeb& w) {
  const int n = w.boundary_size();
  const auto layout = layout_web(w);
  std::string out = "\\begin{tikzpicture}\n\\draw[gray] (0,0) circle (6cm);\n";
  for (const auto& c : w.claws())
    for (int label : c.boundary)
      out += "\\draw[thick] " + tikz_coord(on_circle(label, n)) + " -- " + tikz_coord(layout.vertex.at(c.vertex)) +
             ";\n";
  for (const auto& e : w.edges())
    for (const auto& [p, q] : strands(layout.vertex.at(e.u), layout.vertex.at(e.v), e.mult))
      out += "\\draw[thick] " + tikz_coord(p) + " -- " + tikz_coord(q) + ";\n";
  for (const auto& c : w.claws())
    out += "\\filldraw[fill=white, thick] " + tikz_coord(layout.vertex.at(c.vertex)) + " circle (4pt);\n";
  for (int f : w.filled()) out += "\\filldraw[thick] " + tikz_coord(layout.vertex.at(f)) + " circle (4pt);\n";
  for (int i = 1; i <= n; ++i)
    out += "\\fill " + tikz_coord(on_circle(i, n)) + " circle (2pt) node[anchor=center, label={" +
           std::to_string(i) + "}] {};\n";
  return out + "\\end{tikzpicture}\n";
}

}  // namespace springweb
