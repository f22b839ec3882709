#pragma once

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "springweb/diagrams.hpp"

namespace springweb {

/// Weighted dissection (or triangulation) of an s-gon obtained by collapsing
/// each run of boundary labels between consecutive short edges.
struct WeightedPolygon {
  int k = 0;
  /// Polygon vertices in clockwise order; each is a cyclic interval of
  /// boundary labels listed clockwise.
  std::vector<std::vector<int>> intervals;
  /// Chord (p, q), p < q polygon-vertex indices, to its weight. Weight 0
  /// marks a triangulation diagonal.
  std::map<std::pair<int, int>, int> chords;

  int size() const { return static_cast<int>(intervals.size()); }
  int weight(int p, int q) const;
  bool has_chord(int p, int q) const;
  /// Smallest boundary label held by polygon vertex p.
  int least_label(int p) const;
  /// Faces of a full triangulation, each as ascending vertex indices.
  std::vector<std::array<int, 3>> triangles() const;

  friend bool operator==(const WeightedPolygon&, const WeightedPolygon&) = default;
};

/// Throws DegenerateMatching when k < 2.
WeightedPolygon dissect(const NoncrossingMatching& m);

/// Which face vertex each fan of the triangulation is centred on.
enum class FanApex {
  LeastLabel,        ///< vertex holding the face's smallest boundary label
  SuccessorOfLeast,  ///< its clockwise neighbour within the face
};

/// Adds weight-0 diagonals until every face is a triangle. Each face of the
/// positive-chord dissection is fanned from one apex.
WeightedPolygon triangulate(const WeightedPolygon& p, FanApex apex = FanApex::LeastLabel);

/// Degree two sl_k hourglass web. Unfilled vertices are numbered 0..s-1 in
/// claw order; filled vertices follow.
class HourglassWeb {
 public:
  struct Claw {
    int vertex;
    std::vector<int> boundary;  // clockwise
    friend bool operator==(const Claw&, const Claw&) = default;
  };
  struct Edge {
    int u;
    int v;
    int mult;
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  /// Checks k-valence, that claws partition [2k] into cyclic intervals, that
  /// vertex ids are distinct and that edges join known vertices with mult > 0.
  /// Throws InvalidInput.
  HourglassWeb(int k, std::vector<Claw> claws, std::vector<int> filled, std::vector<Edge> edges);

  int k() const { return k_; }
  int boundary_size() const { return 2 * k_; }
  const std::vector<Claw>& claws() const { return claws_; }
  const std::vector<int>& filled() const { return filled_; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Index into claws() of the claw holding a boundary label.
  int claw_of(int label) const;
  /// Multiplicity of the internal edge between two vertex ids, 0 if absent.
  int multiplicity(int u, int v) const;
  /// Internal vertex ids: claw vertices first, then filled.
  std::vector<int> internal_vertices() const;

  friend bool operator==(const HourglassWeb&, const HourglassWeb&) = default;

 private:
  int k_;
  std::vector<Claw> claws_;
  std::vector<int> filled_;
  std::vector<Edge> edges_;
};

HourglassWeb web_from_polygon(const WeightedPolygon& triangulated);
HourglassWeb web_from_matching(const NoncrossingMatching& m, FanApex apex = FanApex::LeastLabel);
/// Rectangular tableaux only (NonRectangularShape otherwise).
HourglassWeb web_from_tableau(const TwoColumnTableau& t, FanApex apex = FanApex::LeastLabel);

/// Graph predicates on the underlying simple graph: an m-hourglass is one
/// edge, boundary vertices are leaves.
bool is_forest(const HourglassWeb& w);
bool is_tree(const HourglassWeb& w);
int components(const HourglassWeb& w);
/// A cycle as a closed walk of internal vertex ids (first != last), if any.
std::optional<std::vector<int>> find_cycle(const HourglassWeb& w);

/// Claws sorted by their first clockwise label.
std::vector<std::vector<int>> claw_sets(const HourglassWeb& w);
/// j in [1, 2k] for each arc (j, j+1 mod 2k) that separates two claws.
std::vector<int> breaks(const HourglassWeb& w);
/// Index into w.claws() of the first claw clockwise from the arc (2k, 1)
/// that does not contain 2k.
int first_claw(const HourglassWeb& w);
/// Claw indices in clockwise order starting at the first claw.
std::vector<int> claws_from_first(const HourglassWeb& w);

/// Boundary relabelling i -> i+1 mod 2k.
HourglassWeb rotate(const HourglassWeb& w, int steps = 1);
/// Boundary relabelling i -> 2k+1-i.
HourglassWeb reflect(const HourglassWeb& w);

/// Break set after applying rotation^t, optionally preceded by reflection.
std::vector<int> transform_breaks(const std::vector<int>& breaks, int k, int rotation, bool reflected);

struct DihedralOrbit {
  std::vector<int> canonical_breaks;
  int size = 0;
  friend bool operator==(const DihedralOrbit&, const DihedralOrbit&) = default;
};

/// Lexicographically least break set over D_{2k} and the orbit size. Forests
/// are determined by their breaks; throws NonForestWeb otherwise.
DihedralOrbit dihedral_orbit(const HourglassWeb& w);

}  // namespace springweb
