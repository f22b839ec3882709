#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "springweb/tableaux.hpp"

namespace springweb {

/// Matching edge {first, second} with first < second.
using Edge = std::pair<int, int>;

/// Noncrossing matching with rays on vertices 1..n of a horizontal baseline.
/// Every vertex carries exactly one matching edge or one ray, edges do not
/// cross, and no ray sits under an edge.
class MatchingRayDiagram {
 public:
  /// Validates all invariants; throws InvalidInput. Edges are normalised to
  /// (small, large) and sorted, rays sorted.
  MatchingRayDiagram(int n, std::vector<Edge> edges, std::vector<int> rays);

  int n() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int ray_count() const { return static_cast<int>(rays_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& rays() const { return rays_; }
  bool perfect() const { return rays_.empty(); }

  bool is_ray(int v) const;
  std::optional<int> partner(int v) const;
  bool has_edge(int a, int b) const;

  friend bool operator==(const MatchingRayDiagram&, const MatchingRayDiagram&) = default;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<int> rays_;
  std::vector<int> partner_;  // 0 for rays, index by vertex
};

/// Noncrossing perfect matching of 2k points on a circle.
class NoncrossingMatching {
 public:
  NoncrossingMatching(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  int k() const { return n_ / 2; }
  const std::vector<Edge>& edges() const { return edges_; }
  int partner(int v) const { return partner_.at(static_cast<std::size_t>(v)); }
  bool has_edge(int a, int b) const;

  MatchingRayDiagram as_diagram() const { return MatchingRayDiagram(n_, edges_, {}); }

  friend bool operator==(const NoncrossingMatching&, const NoncrossingMatching&) = default;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<int> partner_;
};

/// Greedy bijection: b_1, ..., b_k in order, each matched with the largest
/// unmatched first-column entry below it. Throws NonRectangularShape.
NoncrossingMatching matching_from_tableau(const TwoColumnTableau& t);

/// Same greedy rule for any two column shape; unmatched vertices get rays.
MatchingRayDiagram diagram_from_tableau(const TwoColumnTableau& t);

/// Inverse of diagram_from_tableau: col2 is the set of larger edge endpoints.
TwoColumnTableau tableau_from_diagram(const MatchingRayDiagram& m);

/// Sorted i with {i, i+1} an edge.
std::vector<int> short_edges(const MatchingRayDiagram& m);

/// Sorted i in [1, n] with {i, i+1 mod n} an edge; i = n stands for {n, 1}.
std::vector<int> short_edges_mod(const NoncrossingMatching& m);

struct Pseudoclaw {
  std::vector<Edge> edges;
  std::vector<int> rays;

  int size() const { return static_cast<int>(edges.size() + rays.size()); }
  friend bool operator==(const Pseudoclaw&, const Pseudoclaw&) = default;
};

/// Edges and rays with no endpoint in {i+1, ..., j}. Requires {i, i+1} and
/// {j, j+1} to be short edges with i < j, else throws NotAShortEdge.
Pseudoclaw pseudoclaw(const MatchingRayDiagram& m, int i, int j);

}  // namespace springweb
