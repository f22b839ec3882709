#include "springweb/classify.hpp"

#include <algorithm>
#include <stdexcept>

#include "springweb/error.hpp"

namespace springweb {

std::string to_string(Criterion c) {
  switch (c) {
    case Criterion::TableauRectangular: return "tableau-rect";
    case Criterion::TableauGeneral: return "tableau";
    case Criterion::Web: return "web";
    case Criterion::Diagram: return "diagram";
  }
  return "?";
}

Criterion criterion_from_string(const std::string& s) {
  for (auto c : {Criterion::TableauRectangular, Criterion::TableauGeneral, Criterion::Web, Criterion::Diagram}) {
    if (to_string(c) == s) return c;
  }
  throw InvalidInput("unknown criterion '" + s + "'");
}

namespace {

SmoothnessVerdict rect_rule(const TwoColumnTableau& t) {
  SmoothnessVerdict v;
  v.criterion = Criterion::TableauRectangular;
  v.count = static_cast<int>(tau_star(t).size());
  if (v.count > 3) {
    v.clause = "tau>3";
  } else if (v.count < 3) {
    v.smooth = true;
    v.clause = "tau<=2";
  } else {
    v.prefix = balanced_prefix(t, t.k() - 1);
    v.smooth = v.prefix.has_value();
    v.clause = v.smooth ? "tau=3+prefix" : "tau=3:no-prefix";
  }
  return v;
}

SmoothnessVerdict general_rule(const TwoColumnTableau& t) {
  SmoothnessVerdict v;
  v.criterion = Criterion::TableauGeneral;
  v.count = static_cast<int>(tau_star(t).size());
  const bool n_in_col2 = t.b(t.k()) == t.n();
  v.last_is_ray = !n_in_col2;
  switch (v.count) {
    case 1:
      v.smooth = true;
      v.clause = "S1";
      break;
    case 2:
      v.prefix = balanced_prefix(t, t.k());
      v.smooth = n_in_col2 || v.prefix.has_value();
      v.clause = v.smooth ? "S2" : "S2:fails";
      break;
    case 3:
      v.prefix = balanced_prefix(t, t.k() - 1);
      v.smooth = n_in_col2 && v.prefix.has_value();
      v.clause = v.smooth ? "S3" : "S3:fails";
      break;
    default:
      v.clause = "tau>3";
  }
  return v;
}

}  // namespace

SmoothnessVerdict smooth_by_tableau_rect(const TwoColumnTableau& t) {
  if (!t.rectangular()) throw NonRectangularShape(t.n(), t.k());
  return rect_rule(t);
}

SmoothnessVerdict smooth_by_tableau_general(const TwoColumnTableau& t) {
  auto v = general_rule(t);
  if (t.rectangular() && rect_rule(t).smooth != v.smooth) {
    throw std::logic_error("general and rectangular criteria disagree on " + t.to_string());
  }
  return v;
}

SmoothnessVerdict smooth_by_web(const HourglassWeb& w) {
  SmoothnessVerdict v;
  v.criterion = Criterion::Web;
  v.count = static_cast<int>(w.claws().size());
  if (auto cycle = find_cycle(w)) {
    v.clause = "cycle";
    v.cycle = std::move(*cycle);
  } else {
    v.smooth = true;
    v.clause = "forest";
  }
  return v;
}

SmoothnessVerdict smooth_by_diagram(const MatchingRayDiagram& m) {
  SmoothnessVerdict v;
  v.criterion = Criterion::Diagram;
  v.count = static_cast<int>(short_edges(m).size());
  const bool first_ray = m.is_ray(1);
  const bool last_ray = m.is_ray(m.n());
  v.last_is_ray = last_ray;
  switch (v.count) {
    case 1:
      v.smooth = true;
      v.clause = "S1'";
      break;
    case 2:
      v.smooth = !first_ray || !last_ray;
      v.clause = v.smooth ? "S2'" : "S2':fails";
      break;
    case 3:
      v.smooth = !m.has_edge(1, m.n()) && !first_ray && !last_ray;
      v.clause = v.smooth ? "S3'" : "S3':fails";
      break;
    default:
      v.clause = v.count == 0 ? "no-short-edge" : "short>3";
  }
  return v;
}

bool check_witness(const SmoothnessVerdict& v, const TwoColumnTableau& t) {
  if (v.criterion != Criterion::TableauGeneral && v.criterion != Criterion::TableauRectangular) return false;
  if (v.count != static_cast<int>(tau_star(t).size())) return false;
  if (v.prefix && (*v.prefix < 1 || *v.prefix > t.k() || t.b(*v.prefix) != 2 * *v.prefix)) return false;
  const auto recomputed = v.criterion == Criterion::TableauRectangular ? smooth_by_tableau_rect(t)
                                                                       : smooth_by_tableau_general(t);
  return recomputed == v;
}

bool check_witness(const SmoothnessVerdict& v, const HourglassWeb& w) {
  if (v.criterion != Criterion::Web || v.count != static_cast<int>(w.claws().size())) return false;
  if (v.smooth) return v.cycle.empty() && is_forest(w);
  // Every consecutive pair of the witness (cyclically) must be an internal edge.
  if (v.cycle.size() < 3) return false;
  for (std::size_t i = 0; i < v.cycle.size(); ++i) {
    if (w.multiplicity(v.cycle[i], v.cycle[(i + 1) % v.cycle.size()]) == 0) return false;
  }
  auto sorted = v.cycle;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool check_witness(const SmoothnessVerdict& v, const MatchingRayDiagram& m) {
  if (v.criterion != Criterion::Diagram) return false;
  if (v.count != static_cast<int>(short_edges(m).size())) return false;
  return smooth_by_diagram(m) == v;
}

}  // namespace springweb
