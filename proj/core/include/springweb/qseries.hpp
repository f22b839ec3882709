#pragma once

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "springweb/geometry.hpp"
#include "springweb/webs.hpp"

namespace springweb {

using BigInt = boost::multiprecision::cpp_int;

/// Polynomial in q with exact integer coefficients; index = power of q,
/// trailing zeros trimmed (the zero polynomial has no coefficients).
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<BigInt> coefficients);

  static QPolynomial zero() { return {}; }
  static QPolynomial one() { return QPolynomial({BigInt(1)}); }

  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  BigInt coefficient(int power) const;
  BigInt at_one() const;
  bool palindromic() const;

  /// "1 + 2q + 2q^2 + q^3".
  std::string to_string() const;

  QPolynomial& operator+=(const QPolynomial& rhs);
  QPolynomial& operator*=(const QPolynomial& rhs);
  friend QPolynomial operator+(QPolynomial lhs, const QPolynomial& rhs) { return lhs += rhs; }
  friend QPolynomial operator*(QPolynomial lhs, const QPolynomial& rhs) { return lhs *= rhs; }
  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// [n] = 1 + q + ... + q^{n-1}; [0] = 0.
QPolynomial q_integer(int n);
/// [n]! = [1][2]...[n]; [0]! = 1.
QPolynomial q_factorial(int n);
/// Gaussian binomial by the Pascal recurrence
///   [n, d] = [n-1, d-1] + q^d [n-1, d],
/// with [n, 0] = 1 for every n >= 0 and [n, d] = 0 for d > n.
QPolynomial q_binomial(int n, int d);

QPolynomial poincare_factor(const BundleFactor& f);
QPolynomial poincare_base(const BundleBase& base);
/// Poincare polynomial of the component via its triple. Throws SingularComponent.
QPolynomial poincare_component(const TwoColumnTableau& t);
/// Via the web's bundle base. Throws NonForestWeb.
QPolynomial poincare_component(const HourglassWeb& w);

/// Exponents of q-integers [m] (m >= 2) whose product is the Poincare
/// polynomial of the base; exponents may be negative before cancellation
/// completes only for Grassmannian factors taken alone.
std::map<int, int> q_integer_exponents(const BundleBase& base);
/// "[2]^4 [3]".
std::string factored_form(const BundleBase& base);

struct OrbitComparison {
  bool poincare_equal = false;
  bool same_orbit = false;
  friend bool operator==(const OrbitComparison&, const OrbitComparison&) = default;
};

/// Both booleans for a pair of forest webs with the same k. Throws
/// NonForestWeb (or InvalidInput when k differs).
OrbitComparison poincare_equal_iff_orbit(const HourglassWeb& w, const HourglassWeb& other);

/// Triple-level rule: equal iff both triples have a zero in {a, c}, or none
/// of a, c, a', c' vanish and {a, b, c} = {a', b', c'} as multisets.
bool triples_predict_equal(const FmsoTriple& t, const FmsoTriple& other);

}  // namespace springweb
