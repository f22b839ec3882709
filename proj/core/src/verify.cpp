#include "springweb/verify.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "springweb/classify.hpp"
#include "springweb/diagrams.hpp"
#include "springweb/error.hpp"
#include "springweb/geometry.hpp"
#include "springweb/json_io.hpp"
#include "springweb/qseries.hpp"
#include "springweb/webs.hpp"

namespace springweb {

namespace {

class ReportBuilder {
 public:
  explicit ReportBuilder(std::string suite) { report_.suite = std::move(suite); }

  ShapeRecord& record(std::string label) {
    report_.records.push_back({std::move(label), {}});
    return report_.records.back();
  }

  void fail(const std::string& label, std::string check, Json witness) {
    report_.failures.push_back({label, std::move(check), std::move(witness)});
    ++report_.records.back().counts["failures"];
  }

  Report finish() {
    for (auto& r : report_.records) r.counts.try_emplace("failures", 0);
    std::sort(report_.failures.begin(), report_.failures.end(), [](const Failure& x, const Failure& y) {
      return std::tie(x.label, x.check) < std::tie(y.label, y.check) ||
             (std::tie(x.label, x.check) == std::tie(y.label, y.check) && x.witness.dump() < y.witness.dump());
    });
    return std::move(report_);
  }

 private:
  Report report_;
};

std::string k_label(int k) { return "k=" + std::to_string(k); }

BigInt euler_characteristic(const BundleFactor& f) {
  auto factorial = [](int n) {
    BigInt out = 1;
    for (int i = 2; i <= n; ++i) out *= i;
    return out;
  };
  switch (f.kind) {
    case BundleFactor::Kind::Projective: return f.n + 1;
    case BundleFactor::Kind::Flag: return factorial(f.n);
    case BundleFactor::Kind::Grassmannian: return factorial(f.n) / (factorial(f.d) * factorial(f.n - f.d));
    case BundleFactor::Kind::Product: {
      BigInt out = 1;
      for (const auto& p : f.parts) out *= euler_characteristic(p);
      return out;
    }
  }
  return 0;
}

std::string to_decimal(const BigInt& x) { return x.str(); }

}  // namespace

std::vector<TwoColumnShape> rectangular_shapes(int k_max) {
  std::vector<TwoColumnShape> out;
  for (int k = 2; k <= k_max; ++k) out.push_back(TwoColumnShape::rectangle(k));
  return out;
}

std::vector<TwoColumnShape> two_column_shapes(int n_max) {
  std::vector<TwoColumnShape> out;
  for (int n = 2; n <= n_max; ++n)
    for (int k = 1; 2 * k <= n; ++k) out.emplace_back(n, k);
  return out;
}

Report verify_smoothness_equivalence(int k_max) {
  if (k_max > 8) throw InvalidInput("smoothness sweep supports k_max <= 8");
  ReportBuilder rb("smooth");
  for (const auto& shape : rectangular_shapes(k_max)) {
    const std::string label = shape.to_string();
    auto& rec = rb.record(label);
    for (const auto& t : enumerate_tableaux(shape)) {
      ++rec.counts["tableaux"];
      const auto by_tableau = smooth_by_tableau_rect(t);
      const auto general = smooth_by_tableau_general(t);
      const auto web = web_from_tableau(t);
      const auto by_web = smooth_by_web(web);
      const auto diagram = diagram_from_tableau(t);
      const auto by_diagram = smooth_by_diagram(diagram);
      if (by_tableau.smooth) ++rec.counts["smooth"];
      const bool agree = by_tableau.smooth == by_web.smooth && by_web.smooth == by_diagram.smooth &&
                         general.smooth == by_tableau.smooth;
      const bool witnessed = check_witness(by_tableau, t) && check_witness(general, t) &&
                             check_witness(by_web, web) && check_witness(by_diagram, diagram);
      if (!agree || !witnessed) {
        rb.fail(label, agree ? "witness" : "verdicts",
                Json{{"tableau", to_json(t)},
                     {"web", to_json(web)},
                     {"verdicts",
                      {to_json(by_tableau), to_json(general), to_json(by_web), to_json(by_diagram)}}});
      }
    }
  }
  for (const auto& shape : two_column_shapes(2 * k_max)) {
    if (shape.rectangular()) continue;
    const std::string label = shape.to_string();
    auto& rec = rb.record(label);
    for (const auto& t : enumerate_tableaux(shape)) {
      ++rec.counts["tableaux"];
      const auto general = smooth_by_tableau_general(t);
      const auto diagram = diagram_from_tableau(t);
      const auto by_diagram = smooth_by_diagram(diagram);
      if (general.smooth) ++rec.counts["smooth"];
      const bool agree = general.smooth == by_diagram.smooth;
      const bool witnessed = check_witness(general, t) && check_witness(by_diagram, diagram);
      if (!agree || !witnessed) {
        rb.fail(label, agree ? "witness" : "verdicts",
                Json{{"tableau", to_json(t)},
                     {"diagram", to_json(diagram)},
                     {"verdicts", {to_json(general), to_json(by_diagram)}}});
      }
    }
  }
  return rb.finish();
}

std::int64_t count_smooth(int k) {
  std::int64_t count = 0;
  for (const auto& t : enumerate_tableaux(TwoColumnShape::rectangle(k)))
    if (smooth_by_tableau_rect(t).smooth) ++count;
  return count;
}

std::int64_t smooth_count_formula(int k) {
  const std::int64_t kk = k;
  return kk + 2 * (kk * (kk - 1) * (kk - 2) / 6);
}

bool contains_pattern(const std::vector<int>& perm, const std::vector<int>& pattern) {
  const int n = static_cast<int>(perm.size());
  const int m = static_cast<int>(pattern.size());
  if (m > n) return false;
  // Walk index subsets idx[0] < ... < idx[m-1] in lexicographic order.
  std::vector<int> idx(static_cast<std::size_t>(m));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    bool match = true;
    for (int a = 0; a < m && match; ++a)
      for (int b = a + 1; b < m && match; ++b)
        match = (perm[idx[a]] < perm[idx[b]]) == (pattern[a] < pattern[b]);
    if (match) return true;
    int pos = m - 1;
    while (pos >= 0 && idx[pos] == n - m + pos) --pos;
    if (pos < 0) return false;
    ++idx[pos];
    for (int a = pos + 1; a < m; ++a) idx[a] = idx[a - 1] + 1;
  }
}

std::int64_t count_pattern_avoiders(int k) {
  if (k < 0 || k > 10) throw InvalidInput("pattern avoidance supports 0 <= k <= 10");
  static const std::vector<std::vector<int>> patterns{{3, 2, 1}, {2, 1, 4, 3}, {3, 1, 2, 4}};
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 1);
  std::int64_t count = 0;
  do {
    if (std::none_of(patterns.begin(), patterns.end(),
                     [&](const auto& p) { return contains_pattern(perm, p); }))
      ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

Report verify_counts(int smooth_max, int avoid_max) {
  ReportBuilder rb("counts");
  for (int k = 2; k <= std::max(smooth_max, avoid_max); ++k) {
    const std::string label = k_label(k);
    auto& rec = rb.record(label);
    const std::int64_t formula = smooth_count_formula(k);
    rec.counts["formula"] = formula;
    std::int64_t exhaustive = -1;
    if (k <= smooth_max) {
      exhaustive = count_smooth(k);
      rec.counts["smooth"] = exhaustive;
      if (exhaustive != formula)
        rb.fail(label, "formula", Json{{"k", k}, {"smooth", exhaustive}, {"formula", formula}});
    }
    if (k >= 3 && k <= avoid_max) {
      const std::int64_t avoiders = count_pattern_avoiders(k);
      rec.counts["avoiders"] = avoiders;
      if (avoiders != formula)
        rb.fail(label, "avoiders", Json{{"k", k}, {"avoiders", avoiders}, {"formula", formula}});
    }
  }
  return rb.finish();
}

Report verify_geometry_agreement(int k_max, int n_max) {
  ReportBuilder rb("geometry");
  for (const auto& shape : rectangular_shapes(k_max)) {
    const std::string label = shape.to_string() + " web";
    auto& rec = rb.record(label);
    for (const auto& t : enumerate_tableaux(shape)) {
      const auto web = web_from_tableau(t);
      if (!is_forest(web)) continue;
      ++rec.counts["smooth"];
      const auto triple = fmso_triple(t);
      const auto from_web = canonicalize(base_from_web(web));
      const auto from_triple = canonicalize(base_from_triple(triple, t.k()));
      if (from_web != from_triple) {
        rb.fail(label, "web-vs-triple",
                Json{{"tableau", to_json(t)},
                     {"web", to_json(web)},
                     {"via_web", to_json(from_web)},
                     {"via_triple", to_json(from_triple)}});
      }
      const bool connected = components(web) == 1;
      if (connected != (triple.a != 0 && triple.c != 0)) {
        rb.fail(label, "connectivity",
                Json{{"tableau", to_json(t)}, {"triple", to_json(triple)}, {"components", components(web)}});
      }
    }
  }
  for (const auto& shape : two_column_shapes(n_max)) {
    const std::string label = shape.to_string() + " diagram";
    auto& rec = rb.record(label);
    for (const auto& t : enumerate_tableaux(shape)) {
      if (!smooth_by_tableau_general(t).smooth) continue;
      ++rec.counts["smooth"];
      const auto diagram = diagram_from_tableau(t);
      const auto from_diagram = canonicalize(base_from_diagram(diagram));
      const auto from_triple = canonicalize(base_from_triple(t));
      if (from_diagram != from_triple) {
        rb.fail(label, "diagram-vs-triple",
                Json{{"tableau", to_json(t)},
                     {"diagram", to_json(diagram)},
                     {"via_diagram", to_json(from_diagram)},
                     {"via_triple", to_json(from_triple)}});
      }
    }
  }
  return rb.finish();
}

Report verify_dimension(int k_max, int n_max) {
  ReportBuilder rb("dimension");
  auto sweep = [&](const TwoColumnShape& shape, const std::string& label, bool use_web) {
    auto& rec = rb.record(label);
    const int expected = springer_dimension(shape);
    rec.counts["expected"] = expected;
    for (const auto& t : enumerate_tableaux(shape)) {
      if (!smooth_by_tableau_general(t).smooth) continue;
      ++rec.counts["smooth"];
      const auto base = use_web ? base_from_web(web_from_tableau(t)) : base_from_diagram(diagram_from_tableau(t));
      const int via_triple = dimension(base_from_triple(t));
      if (dimension(base) != expected || via_triple != expected) {
        rb.fail(label, "dimension",
                Json{{"tableau", to_json(t)},
                     {"base", to_json(base)},
                     {"triple_dimension", via_triple},
                     {"expected", expected}});
      }
    }
  };
  for (const auto& shape : rectangular_shapes(k_max)) sweep(shape, shape.to_string() + " web", true);
  for (const auto& shape : two_column_shapes(n_max)) sweep(shape, shape.to_string() + " diagram", false);
  return rb.finish();
}

Report verify_poincare_orbit(int k_max) {
  ReportBuilder rb("poincare");
  for (const auto& shape : rectangular_shapes(k_max)) {
    const std::string label = shape.to_string();
    auto& rec = rb.record(label);
    const int k = shape.k();
    struct Entry {
      TwoColumnTableau t;
      FmsoTriple triple;
      QPolynomial poly;
      DihedralOrbit orbit;
    };
    std::vector<Entry> forests;
    for (const auto& t : enumerate_tableaux(shape)) {
      const auto web = web_from_tableau(t);
      if (!is_forest(web)) continue;
      const auto base = base_from_web(web);
      Entry e{t, fmso_triple(t), poincare_base(base), dihedral_orbit(web)};
      BigInt euler = 1;
      for (const auto& f : canonicalize(base)) euler *= euler_characteristic(f);
      if (e.poly.at_one() != euler || e.poly.degree() != k * (k - 1) || e.poly != poincare_component(t)) {
        rb.fail(label, "polynomial",
                Json{{"tableau", to_json(t)},
                     {"polynomial", to_json(e.poly)},
                     {"euler", to_decimal(euler)},
                     {"expected_degree", k * (k - 1)}});
      }
      if (poincare_equal_iff_orbit(web, reflect(web)) != OrbitComparison{true, true}) {
        rb.fail(label, "reflection", Json{{"tableau", to_json(t)}, {"web", to_json(web)}});
      }
      forests.push_back(std::move(e));
    }
    rec.counts["forests"] = static_cast<std::int64_t>(forests.size());
    std::int64_t pairs = 0;
    for (std::size_t x = 0; x < forests.size(); ++x) {
      for (std::size_t y = x + 1; y < forests.size(); ++y) {
        ++pairs;
        const bool poly_equal = forests[x].poly == forests[y].poly;
        const bool same_orbit = forests[x].orbit == forests[y].orbit;
        const bool rule = triples_predict_equal(forests[x].triple, forests[y].triple);
        if (poly_equal != same_orbit || poly_equal != rule) {
          rb.fail(label, "pair",
                  Json{{"tableaux", {to_json(forests[x].t), to_json(forests[y].t)}},
                       {"triples", {to_json(forests[x].triple), to_json(forests[y].triple)}},
                       {"poincare_equal", poly_equal},
                       {"same_orbit", same_orbit},
                       {"triple_rule", rule}});
        }
      }
    }
    rec.counts["pairs"] = pairs;
  }
  return rb.finish();
}

Report verify_promotion_rotation(int k_max) {
  ReportBuilder rb("promotion");
  for (const auto& shape : rectangular_shapes(k_max)) {
    const std::string label = shape.to_string();
    auto& rec = rb.record(label);
    for (const auto& t : enumerate_tableaux(shape)) {
      const auto web = web_from_matching(matching_from_tableau(t));
      if (!is_forest(web)) continue;
      ++rec.counts["forests"];
      const auto promoted = web_from_matching(matching_from_tableau(promotion(t)));
      if (breaks(promoted) != breaks(rotate(web))) {
        rb.fail(label, "promotion",
                Json{{"tableau", to_json(t)}, {"web", to_json(web)}, {"promoted_web", to_json(promoted)}});
      }
      const auto evacuated = web_from_matching(matching_from_tableau(evacuation(t)));
      if (breaks(evacuated) != breaks(reflect(web))) {
        rb.fail(label, "evacuation",
                Json{{"tableau", to_json(t)}, {"web", to_json(web)}, {"evacuated_web", to_json(evacuated)}});
      }
    }
  }
  return rb.finish();
}

std::vector<Report> run_suites(int max_k, const std::string& suite) {
  static const std::vector<std::string> known{"all", "smooth", "geometry", "poincare", "promotion", "counts"};
  if (std::find(known.begin(), known.end(), suite) == known.end()) throw InvalidInput("unknown suite: " + suite);
  if (max_k < 2 || max_k > 8) throw InvalidInput("--max-k must lie in [2, 8]");
  const bool all = suite == "all";
  std::vector<Report> out;
  if (all || suite == "smooth") out.push_back(verify_smoothness_equivalence(max_k));
  if (all || suite == "counts") out.push_back(verify_counts(max_k, std::min(max_k, 9)));
  if (all || suite == "geometry") {
    out.push_back(verify_geometry_agreement(max_k, 2 * max_k));
    out.push_back(verify_dimension(max_k, 2 * max_k));
  }
  if (all || suite == "poincare") out.push_back(verify_poincare_orbit(max_k));
  if (all || suite == "promotion") out.push_back(verify_promotion_rotation(max_k));
  return out;
}

}  // namespace springweb
