#include "springweb/json_io.hpp"

#include <limits>

#include "springweb/error.hpp"

namespace springweb {

namespace {

// Wraps nlohmann's type errors so callers only see InvalidInput.
template <typename F>
auto parsing(const char* what, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

std::vector<int> int_list(const Json& j) { return j.get<std::vector<int>>(); }

}  // namespace

Json to_json(const TwoColumnTableau& t) { return Json{{"n", t.n()}, {"k", t.k()}, {"col2", t.col2()}}; }

TwoColumnTableau tableau_from_json(const Json& j) {
  return parsing("tableau", [&] {
    auto col2 = int_list(j.at("col2"));
    const int k = j.contains("k") ? j.at("k").get<int>() : static_cast<int>(col2.size());
    const int n = j.contains("n") ? j.at("n").get<int>() : 2 * k;
    if (k != static_cast<int>(col2.size())) throw InvalidInput("tableau JSON: k does not match col2 length");
    return TwoColumnTableau(TwoColumnShape(n, k), std::move(col2));
  });
}

Json to_json(const MatchingRayDiagram& m) {
  Json edges = Json::array();
  for (const auto& [a, b] : m.edges()) edges.push_back({a, b});
  Json out{{"n", m.n()}, {"edges", edges}};
  if (!m.perfect()) out["rays"] = m.rays();
  return out;
}

namespace {

std::vector<Edge> edge_list(const Json& j) {
  std::vector<Edge> edges;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) throw InvalidInput("edge must be a pair [i, j]");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return edges;
}

}  // namespace

MatchingRayDiagram diagram_from_json(const Json& j) {
  return parsing("diagram", [&] {
    std::vector<int> rays = j.contains("rays") ? int_list(j.at("rays")) : std::vector<int>{};
    return MatchingRayDiagram(j.at("n").get<int>(), edge_list(j.at("edges")), std::move(rays));
  });
}

Json to_json(const NoncrossingMatching& m) { return to_json(m.as_diagram()); }

NoncrossingMatching matching_from_json(const Json& j) {
  return parsing("matching", [&] {
    if (j.contains("rays") && !j.at("rays").empty()) throw InvalidInput("a perfect matching has no rays");
    return NoncrossingMatching(j.at("n").get<int>(), edge_list(j.at("edges")));
  });
}

Json to_json(const HourglassWeb& w) {
  Json claws = Json::array();
  for (const auto& c : w.claws()) claws.push_back({{"vertex", c.vertex}, {"boundary", c.boundary}});
  Json edges = Json::array();
  for (const auto& e : w.edges()) edges.push_back({{"u", e.u}, {"v", e.v}, {"mult", e.mult}});
  return Json{{"k", w.k()}, {"claws", claws}, {"filled", w.filled()}, {"edges", edges}};
}

HourglassWeb web_from_json(const Json& j) {
  return parsing("web", [&] {
    std::vector<HourglassWeb::Claw> claws;
    for (const auto& c : j.at("claws")) claws.push_back({c.at("vertex").get<int>(), int_list(c.at("boundary"))});
    std::vector<HourglassWeb::Edge> edges;
    for (const auto& e : j.at("edges"))
      edges.push_back({e.at("u").get<int>(), e.at("v").get<int>(), e.at("mult").get<int>()});
    return HourglassWeb(j.at("k").get<int>(), std::move(claws), int_list(j.at("filled")), std::move(edges));
  });
}

Json to_json(const SmoothnessVerdict& v) {
  Json out{{"smooth", v.smooth}, {"criterion", to_string(v.criterion)}, {"clause", v.clause}, {"count", v.count}};
  if (v.prefix) out["prefix"] = *v.prefix;
  if (v.last_is_ray) out["last_is_ray"] = *v.last_is_ray;
  if (!v.cycle.empty()) out["cycle"] = v.cycle;
  return out;
}

SmoothnessVerdict verdict_from_json(const Json& j) {
  return parsing("verdict", [&] {
    SmoothnessVerdict v;
    v.smooth = j.at("smooth").get<bool>();
    v.criterion = criterion_from_string(j.at("criterion").get<std::string>());
    v.clause = j.at("clause").get<std::string>();
    v.count = j.at("count").get<int>();
    if (j.contains("prefix")) v.prefix = j.at("prefix").get<int>();
    if (j.contains("last_is_ray")) v.last_is_ray = j.at("last_is_ray").get<bool>();
    if (j.contains("cycle")) v.cycle = int_list(j.at("cycle"));
    return v;
  });
}

Json to_json(const BundleFactor& f) {
  switch (f.kind) {
    case BundleFactor::Kind::Projective: return Json{{"type", "P"}, {"n", f.n}};
    case BundleFactor::Kind::Grassmannian: return Json{{"type", "Gr"}, {"d", f.d}, {"n", f.n}};
    case BundleFactor::Kind::Flag: return Json{{"type", "Fl"}, {"n", f.n}};
    case BundleFactor::Kind::Product: {
      Json parts = Json::array();
      for (const auto& p : f.parts) parts.push_back(to_json(p));
      return Json{{"type", "Prod"}, {"factors", parts}};
    }
  }
  return Json();
}

BundleFactor factor_from_json(const Json& j) {
  return parsing("bundle factor", [&] {
    const auto type = j.at("type").get<std::string>();
    if (type == "P") return BundleFactor::projective(j.at("n").get<int>());
    if (type == "Gr") return BundleFactor::grassmannian(j.at("d").get<int>(), j.at("n").get<int>());
    if (type == "Fl") return BundleFactor::flag(j.at("n").get<int>());
    if (type == "Prod") {
      std::vector<BundleFactor> parts;
      for (const auto& p : j.at("factors")) parts.push_back(factor_from_json(p));
      return BundleFactor::product(std::move(parts));
    }
    throw InvalidInput("unknown bundle factor type: " + type);
  });
}

Json to_json(const BundleBase& base) {
  Json factors = Json::array();
  for (const auto& f : base) factors.push_back(to_json(f));
  return Json{{"base", factors}, {"dimension", dimension(base)}};
}

BundleBase base_from_json(const Json& j) {
  return parsing("base", [&] {
    BundleBase base;
    for (const auto& f : j.at("base")) base.push_back(factor_from_json(f));
    if (j.contains("dimension") && j.at("dimension").get<int>() != dimension(base))
      throw InvalidInput("base JSON: dimension does not match factors");
    return base;
  });
}

Json to_json(const FmsoTriple& t) { return Json{{"a", t.a}, {"b", t.b}, {"c", t.c}}; }

FmsoTriple triple_from_json(const Json& j) {
  return parsing("triple", [&] { return FmsoTriple{j.at("a").get<int>(), j.at("b").get<int>(), j.at("c").get<int>()}; });
}

Json to_json(const QPolynomial& p) {
  Json out = Json::array();
  const BigInt lo = std::numeric_limits<std::int64_t>::min();
  const BigInt hi = std::numeric_limits<std::int64_t>::max();
  for (const auto& c : p.coefficients()) {
    if (c >= lo && c <= hi)
      out.push_back(static_cast<std::int64_t>(c));
    else
      out.push_back(c.str());
  }
  return out;
}

QPolynomial polynomial_from_json(const Json& j) {
  return parsing("polynomial", [&] {
    if (!j.is_array()) throw InvalidInput("polynomial JSON must be a coefficient array");
    std::vector<BigInt> coeffs;
    for (const auto& c : j) {
      if (c.is_number_integer())
        coeffs.emplace_back(c.get<std::int64_t>());
      else if (c.is_string())
        try {
          coeffs.emplace_back(c.get<std::string>());
        } catch (const std::runtime_error&) {
          throw InvalidInput("polynomial coefficient is not an integer: " + c.get<std::string>());
        }
      else
        throw InvalidInput("polynomial coefficient must be an integer or decimal string");
    }
    return QPolynomial(std::move(coeffs));
  });
}

Json to_json(const Report& r) {
  Json records = Json::array();
  for (const auto& rec : r.records) records.push_back({{"shape", rec.label}, {"counts", rec.counts}});
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back({{"shape", f.label}, {"check", f.check}, {"witness", f.witness}});
  return Json{{"suite", r.suite}, {"passed", r.passed()}, {"records", records}, {"failures", failures}};
}

Report report_from_json(const Json& j) {
  return parsing("report", [&] {
    Report r;
    r.suite = j.at("suite").get<std::string>();
    for (const auto& rec : j.at("records"))
      r.records.push_back({rec.at("shape").get<std::string>(), rec.at("counts").get<std::map<std::string, std::int64_t>>()});
    for (const auto& f : j.at("failures"))
      r.failures.push_back({f.at("shape").get<std::string>(), f.at("check").get<std::string>(), f.at("witness")});
    return r;
  });
}

Json to_json(const std::vector<Report>& reports) {
  Json list = Json::array();
  bool passed = true;
  for (const auto& r : reports) {
    list.push_back(to_json(r));
    passed = passed && r.passed();
  }
  return Json{{"passed", passed}, {"reports", list}};
}

std::vector<Report> reports_from_json(const Json& j) {
  return parsing("reports", [&] {
    std::vector<Report> out;
    for (const auto& r : j.at("reports")) out.push_back(report_from_json(r));
    return out;
  });
}

}  // namespace springweb
