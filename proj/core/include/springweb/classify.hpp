#pragma once

#include <optional>
#include <string>
#include <vector>

#include "springweb/diagrams.hpp"
#include "springweb/tableaux.hpp"
#include "springweb/webs.hpp"

namespace springweb {

/// Which criterion produced a verdict.
enum class Criterion { TableauRectangular, TableauGeneral, Web, Diagram };

/// Outcome of a smoothness test together with the data needed to re-check it.
struct SmoothnessVerdict {
  bool smooth = false;
  Criterion criterion = Criterion::TableauGeneral;
  /// Satisfied clause when smooth ("S1", "S2", "S3", "S1'", ..., "forest"),
  /// violated clause otherwise ("tau>3", "S3:no-prefix", "cycle", ...).
  std::string clause;
  /// |tau*(T)|, number of short edges, or number of claws.
  int count = 0;
  /// i with b_i = 2i when the clause relies on one.
  std::optional<int> prefix;
  /// For the diagram and general tableau criteria: whether n carries a ray /
  /// lies in the first column.
  std::optional<bool> last_is_ray;
  /// Singular web witness: internal vertex ids of a cycle.
  std::vector<int> cycle;

  friend bool operator==(const SmoothnessVerdict&, const SmoothnessVerdict&) = default;
};

std::string to_string(Criterion c);
Criterion criterion_from_string(const std::string& s);

/// |tau*| <= 3, and a prefix b_i = 2i with i < k when |tau*| = 3.
/// Throws NonRectangularShape.
SmoothnessVerdict smooth_by_tableau_rect(const TwoColumnTableau& t);

/// Clauses (S1)-(S3) for any two column shape. On rectangles the result is
/// asserted to agree with smooth_by_tableau_rect.
SmoothnessVerdict smooth_by_tableau_general(const TwoColumnTableau& t);

/// Smooth iff the web is a forest; a singular verdict carries a cycle.
SmoothnessVerdict smooth_by_web(const HourglassWeb& w);

/// Clauses (S1')-(S3') on short edges and rays.
SmoothnessVerdict smooth_by_diagram(const MatchingRayDiagram& m);

/// Re-derives the verdict's claim from the object it was computed on.
bool check_witness(const SmoothnessVerdict& v, const TwoColumnTableau& t);
bool check_witness(const SmoothnessVerdict& v, const HourglassWeb& w);
bool check_witness(const SmoothnessVerdict& v, const MatchingRayDiagram& m);

}  // namespace springweb
