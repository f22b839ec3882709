#pragma once

#include <nlohmann/json.hpp>

#include "springweb/classify.hpp"
#include "springweb/diagrams.hpp"
#include "springweb/geometry.hpp"
#include "springweb/qseries.hpp"
#include "springweb/tableaux.hpp"
#include "springweb/verify.hpp"
#include "springweb/webs.hpp"

namespace springweb {

using Json = nlohmann::json;

// Writers and readers are paired; every reader re-validates through the
// type's constructor and throws InvalidInput on malformed JSON.

Json to_json(const TwoColumnTableau& t);
TwoColumnTableau tableau_from_json(const Json& j);

Json to_json(const MatchingRayDiagram& m);
MatchingRayDiagram diagram_from_json(const Json& j);
Json to_json(const NoncrossingMatching& m);
NoncrossingMatching matching_from_json(const Json& j);

Json to_json(const HourglassWeb& w);
HourglassWeb web_from_json(const Json& j);

Json to_json(const SmoothnessVerdict& v);
SmoothnessVerdict verdict_from_json(const Json& j);

Json to_json(const BundleFactor& f);
BundleFactor factor_from_json(const Json& j);
/// {"base": [...], "dimension": d}
Json to_json(const BundleBase& base);
BundleBase base_from_json(const Json& j);

Json to_json(const FmsoTriple& t);
FmsoTriple triple_from_json(const Json& j);

/// Coefficient list, lowest power first. Entries are numbers when they fit
/// in 64 bits and decimal strings otherwise.
Json to_json(const QPolynomial& p);
QPolynomial polynomial_from_json(const Json& j);

Json to_json(const Report& r);
Report report_from_json(const Json& j);
/// {"passed": bool, "reports": [...]}
Json to_json(const std::vector<Report>& reports);
std::vector<Report> reports_from_json(const Json& j);

}  // namespace springweb
