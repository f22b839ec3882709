#include "springweb/qseries.hpp"

#include <algorithm>
#include <array>

#include "springweb/error.hpp"

namespace springweb {

QPolynomial::QPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void QPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt QPolynomial::coefficient(int power) const {
  if (power < 0 || power >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(power)];
}

BigInt QPolynomial::at_one() const {
  BigInt sum = 0;
  for (const auto& c : coeffs_) sum += c;
  return sum;
}

bool QPolynomial::palindromic() const { return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin()); }

std::string QPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const auto& c = coeffs_[i];
    if (c == 0) continue;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    if (i == 0 || mag != 1) out += mag.str();
    if (i >= 1) out += "q";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& rhs) {
  if (coeffs_.empty() || rhs.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

QPolynomial q_integer(int n) {
  if (n < 0) throw InvalidInput("q-integer needs n >= 0");
  return QPolynomial(std::vector<BigInt>(static_cast<std::size_t>(n), BigInt(1)));
}

QPolynomial q_factorial(int n) {
  if (n < 0) throw InvalidInput("q-factorial needs n >= 0");
  QPolynomial out = QPolynomial::one();
  for (int i = 2; i <= n; ++i) out *= q_integer(i);
  return out;
}

QPolynomial q_binomial(int n, int d) {
  if (n < 0 || d < 0) throw InvalidInput("q-binomial needs n, d >= 0");
  if (d > n) return QPolynomial::zero();
  d = std::min(d, n - d);
  // row[j] = [m, j] for the current m; updated right to left.
  std::vector<std::vector<BigInt>> row(static_cast<std::size_t>(d) + 1);
  row[0] = {1};
  for (int m = 1; m <= n; ++m) {
    for (int j = std::min(m, d); j >= 1; --j) {
      // [m, j] = [m-1, j-1] + q^j [m-1, j]
      const auto& lower = row[j - 1];
      const auto& same = row[j];
      std::vector<BigInt> next(std::max(lower.size(), same.empty() ? 0 : same.size() + j));
      for (std::size_t i = 0; i < lower.size(); ++i) next[i] += lower[i];
      for (std::size_t i = 0; i < same.size(); ++i) next[i + j] += same[i];
      row[j] = std::move(next);
    }
  }
  return QPolynomial(row[d]);
}

QPolynomial poincare_factor(const BundleFactor& f) {
  switch (f.kind) {
    case BundleFactor::Kind::Projective: return q_integer(f.n + 1);
    case BundleFactor::Kind::Grassmannian: return q_binomial(f.n, f.d);
    case BundleFactor::Kind::Flag: return q_factorial(f.n);
    case BundleFactor::Kind::Product: return poincare_base(f.parts);
  }
  return QPolynomial::zero();
}

QPolynomial poincare_base(const BundleBase& base) {
  QPolynomial out = QPolynomial::one();
  for (const auto& f : canonicalize(base)) out *= poincare_factor(f);
  return out;
}

QPolynomial poincare_component(const TwoColumnTableau& t) { return poincare_base(base_from_triple(t)); }

QPolynomial poincare_component(const HourglassWeb& w) { return poincare_base(base_from_web(w)); }

namespace {

void add_factor_exponents(const BundleFactor& f, std::map<int, int>& exps) {
  auto bump_range = [&](int from, int to, int by) {
    for (int m = std::max(from, 2); m <= to; ++m) exps[m] += by;
  };
  switch (f.kind) {
    case BundleFactor::Kind::Projective: bump_range(f.n + 1, f.n + 1, 1); break;
    case BundleFactor::Kind::Flag: bump_range(2, f.n, 1); break;
    case BundleFactor::Kind::Grassmannian:
      bump_range(f.n - f.d + 1, f.n, 1);
      bump_range(2, f.d, -1);
      break;
    case BundleFactor::Kind::Product:
      for (const auto& p : f.parts) add_factor_exponents(p, exps);
      break;
  }
}

}  // namespace

std::map<int, int> q_integer_exponents(const BundleBase& base) {
  std::map<int, int> exps;
  for (const auto& f : base) add_factor_exponents(f, exps);
  std::erase_if(exps, [](const auto& kv) { return kv.second == 0; });
  return exps;
}

std::string factored_form(const BundleBase& base) {
  const auto exps = q_integer_exponents(base);
  if (exps.empty()) return "1";
  std::string out;
  for (const auto& [m, e] : exps) {
    if (!out.empty()) out += " ";
    out += "[" + std::to_string(m) + "]";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

OrbitComparison poincare_equal_iff_orbit(const HourglassWeb& w, const HourglassWeb& other) {
  if (w.k() != other.k()) throw InvalidInput("webs have different k");
  return {poincare_component(w) == poincare_component(other), dihedral_orbit(w) == dihedral_orbit(other)};
}

bool triples_predict_equal(const FmsoTriple& t, const FmsoTriple& o) {
  const bool t_zero = t.a == 0 || t.c == 0;
  const bool o_zero = o.a == 0 || o.c == 0;
  if (t_zero && o_zero) return true;
  if (t_zero || o_zero) return false;
  std::array<int, 3> x{t.a, t.b, t.c};
  std::array<int, 3> y{o.a, o.b, o.c};
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

}  // namespace springweb
