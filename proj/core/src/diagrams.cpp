#include "springweb/diagrams.hpp"

#include <algorithm>
#include <string>

#include "springweb/error.hpp"

namespace springweb {

namespace {

std::string edge_str(const Edge& e) {
  return "{" + std::to_string(e.first) + "," + std::to_string(e.second) + "}";
}

void normalise(std::vector<Edge>& edges) {
  for (auto& e : edges) {
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
}

// Fills partner (1-based, 0 = unused) and checks coverage and crossings.
std::vector<int> build_partner(int n, const std::vector<Edge>& edges, const std::vector<int>& rays) {
  if (n < 1) throw InvalidInput("diagram needs at least one vertex");
  std::vector<int> partner(static_cast<std::size_t>(n) + 1, -1);
  auto claim = [&](int v, int value) {
    if (v < 1 || v > n) throw InvalidInput("vertex " + std::to_string(v) + " outside [1, n]");
    if (partner[v] != -1) throw InvalidInput("vertex " + std::to_string(v) + " used twice");
    partner[v] = value;
  };
  for (const auto& [a, b] : edges) {
    if (a == b) throw InvalidInput("loop at vertex " + std::to_string(a));
    claim(a, b);
    claim(b, a);
  }
  for (int r : rays) claim(r, 0);
  for (int v = 1; v <= n; ++v) {
    if (partner[v] == -1) throw InvalidInput("vertex " + std::to_string(v) + " is uncovered");
  }
  for (std::size_t x = 0; x < edges.size(); ++x) {
    for (std::size_t y = x + 1; y < edges.size(); ++y) {
      const auto [a, c] = edges[x];
      const auto [b, d] = edges[y];
      if ((a < b && b < c && c < d) || (b < a && a < d && d < c)) {
        throw InvalidInput("edges " + edge_str(edges[x]) + " and " + edge_str(edges[y]) + " cross");
      }
    }
  }
  return partner;
}

}  // namespace

MatchingRayDiagram::MatchingRayDiagram(int n, std::vector<Edge> edges, std::vector<int> rays)
    : n_(n), edges_(std::move(edges)), rays_(std::move(rays)) {
  normalise(edges_);
  std::sort(rays_.begin(), rays_.end());
  partner_ = build_partner(n_, edges_, rays_);
  for (int r : rays_) {
    for (const auto& e : edges_) {
      if (e.first < r && r < e.second) {
        throw InvalidInput("ray at " + std::to_string(r) + " lies under edge " + edge_str(e));
      }
    }
  }
}

bool MatchingRayDiagram::is_ray(int v) const {
  return v >= 1 && v <= n_ && partner_[v] == 0;
}

std::optional<int> MatchingRayDiagram::partner(int v) const {
  if (v < 1 || v > n_ || partner_[v] == 0) return std::nullopt;
  return partner_[v];
}

bool MatchingRayDiagram::has_edge(int a, int b) const {
  return a >= 1 && a <= n_ && partner_[a] == b && b != 0;
}

NoncrossingMatching::NoncrossingMatching(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 2 || n_ % 2 != 0) throw InvalidInput("perfect matching needs an even, positive vertex count");
  normalise(edges_);
  partner_ = build_partner(n_, edges_, {});
}

bool NoncrossingMatching::has_edge(int a, int b) const {
  return a >= 1 && a <= n_ && partner_[a] == b;
}

MatchingRayDiagram diagram_from_tableau(const TwoColumnTableau& t) {
  std::vector<bool> matched(static_cast<std::size_t>(t.n()) + 1, false);
  std::vector<Edge> edges;
  for (int b : t.col2()) {
    int a = b - 1;
    while (a >= 1 && (matched[a] || t.in_col2(a))) --a;
    // Standardness (b_i >= 2i) guarantees a free first-column entry below b.
    if (a < 1) throw InvalidInput("tableau " + t.to_string() + " admits no greedy matching");
    matched[a] = true;
    matched[b] = true;
    edges.emplace_back(a, b);
  }
  std::vector<int> rays;
  for (int v = 1; v <= t.n(); ++v) {
    if (!matched[v]) rays.push_back(v);
  }
  return MatchingRayDiagram(t.n(), std::move(edges), std::move(rays));
}

NoncrossingMatching matching_from_tableau(const TwoColumnTableau& t) {
  if (!t.rectangular()) throw NonRectangularShape(t.n(), t.k());
  return NoncrossingMatching(t.n(), diagram_from_tableau(t).edges());
}

TwoColumnTableau tableau_from_diagram(const MatchingRayDiagram& m) {
  std::vector<int> col2;
  for (const auto& e : m.edges()) col2.push_back(e.second);
  std::sort(col2.begin(), col2.end());
  return TwoColumnTableau(TwoColumnShape(m.n(), m.edge_count()), std::move(col2));
}

std::vector<int> short_edges(const MatchingRayDiagram& m) {
  std::vector<int> out;
  for (const auto& e : m.edges()) {
    if (e.second == e.first + 1) out.push_back(e.first);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> short_edges_mod(const NoncrossingMatching& m) {
  std::vector<int> out;
  for (int i = 1; i <= m.n(); ++i) {
    const int next = i == m.n() ? 1 : i + 1;
    if (m.partner(i) == next) out.push_back(i);
  }
  // With n = 2 the single edge {1,2} is adjacent both ways; count it once.
  if (m.n() == 2) out.resize(1);
  return out;
}

Pseudoclaw pseudoclaw(const MatchingRayDiagram& m, int i, int j) {
  if (!m.has_edge(i, i + 1)) throw NotAShortEdge(i);
  if (!m.has_edge(j, j + 1)) throw NotAShortEdge(j);
  if (i >= j) throw InvalidInput("pseudoclaw needs i < j");
  auto inside = [&](int v) { return v > i && v <= j; };
  Pseudoclaw out;
  for (const auto& e : m.edges()) {
    if (!inside(e.first) && !inside(e.second)) out.edges.push_back(e);
  }
  for (int r : m.rays()) {
    if (!inside(r)) out.rays.push_back(r);
  }
  return out;
}

}  // namespace springweb
