#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "springweb/tableaux.hpp"

namespace springweb {

/// Counts for one shape (or one k) within a suite.
struct ShapeRecord {
  std::string label;  // "(4, 4)*" or "k=4"
  std::map<std::string, std::int64_t> counts;
  friend bool operator==(const ShapeRecord&, const ShapeRecord&) = default;
};

/// A failing case with enough data to replay it.
struct Failure {
  std::string label;
  std::string check;
  nlohmann::json witness;
  friend bool operator==(const Failure&, const Failure&) = default;
};

struct Report {
  std::string suite;
  std::vector<ShapeRecord> records;
  /// Sorted by (label, check, witness dump).
  std::vector<Failure> failures;
  bool passed() const { return failures.empty(); }
  friend bool operator==(const Report&, const Report&) = default;
};

/// (k,k)* for 2 <= k <= k_max.
std::vector<TwoColumnShape> rectangular_shapes(int k_max);
/// Every two column shape (n-k, k)* with 1 <= k <= n/2 and 2 <= n <= n_max.
std::vector<TwoColumnShape> two_column_shapes(int n_max);

/// Rectangles up to k_max: tableau, web and diagram verdicts agree and
/// replay their witnesses. Other shapes with n <= 2 k_max: the general
/// tableau clauses agree with the diagram clauses. Requires k_max <= 8.
Report verify_smoothness_equivalence(int k_max);

/// Exhaustive count of smooth components of (k,k)*.
std::int64_t count_smooth(int k);
/// k + 2 C(k,3).
std::int64_t smooth_count_formula(int k);
/// Permutations of [k] avoiding 321, 2143 and 3124. Requires k <= 10.
std::int64_t count_pattern_avoiders(int k);
/// True when the sequence contains the pattern (both given 0-based or 1-based).
bool contains_pattern(const std::vector<int>& perm, const std::vector<int>& pattern);

/// count_smooth against the formula for 2 <= k <= smooth_max, and against
/// the avoider count for 3 <= k <= avoid_max.
Report verify_counts(int smooth_max, int avoid_max);

/// Web bases against triple bases on rectangles up to k_max (with the
/// connectivity test on a and c), diagram bases against triple bases on
/// every shape with n <= n_max.
Report verify_geometry_agreement(int k_max, int n_max);
/// Base dimension equals the Springer fiber dimension, same ranges.
Report verify_dimension(int k_max, int n_max);
/// All pairs of forest webs of (k,k)*, k <= k_max: equal Poincare
/// polynomials iff same dihedral orbit iff the triple rule holds. Also
/// P(1) against Euler characteristics and the degree k(k-1).
Report verify_poincare_orbit(int k_max);
/// Forest-web tableaux of (k,k)*, k <= k_max: promotion against rotation and
/// evacuation against reflection, compared on break sets.
Report verify_promotion_rotation(int k_max);

/// Suites run by `verify --suite`: all, smooth, geometry (with dimension),
/// poincare, promotion, counts. Throws InvalidInput for unknown names.
std::vector<Report> run_suites(int max_k, const std::string& suite);

}  // namespace springweb
