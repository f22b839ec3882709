#include <gtest/gtest.h>

#include <functional>
#include <limits>

#include "springweb/classify.hpp"
#include "springweb/error.hpp"
#include "springweb/qseries.hpp"
#include "support.hpp"

using namespace springweb;

namespace {

QPolynomial poly(std::initializer_list<int> cs) {
  std::vector<BigInt> v;
  for (int c : cs) v.emplace_back(c);
  return QPolynomial(std::move(v));
}

HourglassWeb web_of(std::vector<int> col2) { return web_from_tableau(TwoColumnTableau::rectangular(std::move(col2))); }

}  // namespace

TEST(QSeries, Arithmetic) {
  EXPECT_EQ(poly({1, 1}) * poly({1, 1}), poly({1, 2, 1}));
  EXPECT_EQ(poly({1, 2}) + poly({0, -2, 3}), poly({1, 0, 3}));
  EXPECT_EQ(poly({1, -1}) + poly({-1, 1}), QPolynomial::zero());
  EXPECT_EQ(poly({0, 0}).degree(), -1);
  EXPECT_EQ(poly({1, 2, 0, 0}).coefficients().size(), 2u);
  EXPECT_EQ(poly({1, 2, 2, 1}).to_string(), "1 + 2q + 2q^2 + q^3");
  EXPECT_EQ(poly({0, -1, 3}).to_string(), "-q + 3q^2");
  EXPECT_EQ(QPolynomial::zero().to_string(), "0");
  EXPECT_EQ(poly({2, 3}) * QPolynomial::zero(), QPolynomial::zero());
}

TEST(QSeries, Examples) {
  EXPECT_EQ(q_binomial(2, 1), poly({1, 1}));
  EXPECT_EQ(q_binomial(4, 2), poly({1, 1, 2, 1, 1}));
  EXPECT_EQ(q_factorial(3), poly({1, 2, 2, 1}));
  EXPECT_EQ(poincare_factor(BundleFactor::projective(1)), poly({1, 1}));
  EXPECT_EQ(poincare_factor(BundleFactor::flag(3)), poly({1, 2, 2, 1}));
  EXPECT_EQ(poincare_factor(BundleFactor::grassmannian(5, 6)), q_integer(6));
  EXPECT_EQ(q_binomial(3, 4), QPolynomial::zero());
  EXPECT_EQ(q_binomial(0, 0), QPolynomial::one());
  for (int n = 0; n <= 12; ++n) EXPECT_EQ(q_binomial(n, 0), QPolynomial::one());
}

TEST(QSeries, IntegersAtOne) {
  for (int n = 0; n <= 30; ++n) {
    EXPECT_EQ(q_integer(n).at_one(), n);
    EXPECT_EQ(q_integer(n).degree(), n - 1);
  }
}

TEST(QSeries, BinomialSymmetryAndPalindromes) {
  for (int n = 0; n <= 12; ++n) {
    for (int d = 0; d <= n; ++d) {
      const auto b = q_binomial(n, d);
      EXPECT_EQ(b, q_binomial(n, n - d));
      EXPECT_TRUE(b.palindromic());
      EXPECT_EQ(b.degree(), d * (n - d));
      EXPECT_EQ(b.at_one(), oracle::binomial(n, d));
    }
  }
}

TEST(QSeries, PascalEqualsFactorialQuotient) {
  // [n choose d] [d]! [n-d]! == [n]!, no division needed
  for (int n = 0; n <= 12; ++n)
    for (int d = 0; d <= n; ++d)
      EXPECT_EQ(q_binomial(n, d) * q_factorial(d) * q_factorial(n - d), q_factorial(n)) << n << "," << d;
}

TEST(QSeries, OtherPascalRule) {
  // [n, d] = q^{n-d} [n-1, d-1] + [n-1, d]
  for (int n = 1; n <= 12; ++n) {
    for (int d = 1; d <= n; ++d) {
      std::vector<BigInt> shift(static_cast<std::size_t>(n - d), BigInt(0));
      shift.emplace_back(1);
      EXPECT_EQ(q_binomial(n, d), QPolynomial(shift) * q_binomial(n - 1, d - 1) + q_binomial(n - 1, d));
    }
  }
}

TEST(QSeries, BigCoefficientsStayExact) {
  const auto p = q_factorial(25) * q_factorial(25);
  EXPECT_TRUE(p.palindromic());
  BigInt fact = 1;
  for (int i = 2; i <= 25; ++i) fact *= i;
  EXPECT_EQ(p.at_one(), fact * fact);
  EXPECT_GT(p.coefficient(p.degree() / 2), BigInt(std::numeric_limits<std::int64_t>::max()));
}

TEST(QSeries, SlThreeWebs) {
  const auto f3 = q_factorial(3);
  const auto i2 = q_integer(2);
  const auto a = f3 * f3;
  const auto b = i2 * i2 * i2 * i2 * q_integer(3);
  EXPECT_EQ(poincare_component(web_of({2, 5, 6})), a);
  EXPECT_EQ(poincare_component(web_of({3, 4, 6})), a);
  EXPECT_EQ(poincare_component(web_of({4, 5, 6})), a);
  EXPECT_EQ(poincare_component(web_of({2, 4, 6})), b);
  EXPECT_EQ(poincare_component(web_of({3, 5, 6})), b);
  EXPECT_EQ(a.coefficients(), (std::vector<BigInt>{1, 4, 8, 10, 8, 4, 1}));
  EXPECT_EQ(b.coefficients(), (std::vector<BigInt>{1, 5, 11, 14, 11, 5, 1}));
  EXPECT_EQ(poincare_equal_iff_orbit(web_of({2, 5, 6}), web_of({3, 4, 6})), (OrbitComparison{true, true}));
  EXPECT_EQ(poincare_equal_iff_orbit(web_of({2, 5, 6}), web_of({2, 4, 6})), (OrbitComparison{false, false}));
  EXPECT_EQ(factored_form({BundleFactor::product({BundleFactor::flag(2), BundleFactor::flag(2)}),
                           BundleFactor::grassmannian(1, 2), BundleFactor::projective(2)}),
            "[2]^3 [3]");
}

TEST(QSeries, FactoredFormMultipliesBack) {
  for (int k = 2; k <= 6; ++k) {
    for (const auto& t : enumerate_tableaux(TwoColumnShape::rectangle(k))) {
      if (!smooth_by_tableau_rect(t).smooth) continue;
      const auto base = base_from_triple(t);
      QPolynomial product = QPolynomial::one();
      for (const auto& [m, e] : q_integer_exponents(base)) {
        ASSERT_GT(e, 0);
        for (int i = 0; i < e; ++i) product *= q_integer(m);
      }
      EXPECT_EQ(product, poincare_base(base));
    }
  }
}

TEST(QSeries, ComponentPolynomials) {
  auto euler = [](const BundleFactor& f) -> BigInt {
    BigInt out = 1;
    std::function<void(const BundleFactor&)> go = [&](const BundleFactor& g) {
      switch (g.kind) {
        case BundleFactor::Kind::Projective: out *= g.n + 1; break;
        case BundleFactor::Kind::Flag:
          for (int i = 2; i <= g.n; ++i) out *= i;
          break;
        case BundleFactor::Kind::Grassmannian: out *= oracle::binomial(g.n, g.d); break;
        case BundleFactor::Kind::Product:
          for (const auto& p : g.parts) go(p);
          break;
      }
    };
    go(f);
    return out;
  };
  for (int k = 2; k <= 7; ++k) {
    for (const auto& t : enumerate_tableaux(TwoColumnShape::rectangle(k))) {
      const auto w = web_from_tableau(t);
      if (!is_forest(w)) {
        EXPECT_THROW(poincare_component(w), NonForestWeb);
        EXPECT_THROW(poincare_component(t), SingularComponent);
        continue;
      }
      const auto p = poincare_component(w);
      EXPECT_EQ(p, poincare_component(t));
      EXPECT_EQ(p.degree(), k * (k - 1));
      EXPECT_TRUE(p.palindromic());
      BigInt chi = 1;
      for (const auto& f : base_from_web(w)) chi *= euler(f);
      EXPECT_EQ(p.at_one(), chi);
    }
  }
}

TEST(QSeries, OrbitsVersusPolynomialsVersusTriples) {
  for (int k = 2; k <= 6; ++k) {
    std::vector<TwoColumnTableau> forests;
    for (const auto& t : enumerate_tableaux(TwoColumnShape::rectangle(k)))
      if (is_forest(web_from_tableau(t))) forests.push_back(t);
    for (std::size_t x = 0; x < forests.size(); ++x) {
      const auto wx = web_from_tableau(forests[x]);
      EXPECT_EQ(poincare_equal_iff_orbit(wx, reflect(wx)), (OrbitComparison{true, true}));
      for (std::size_t y = x + 1; y < forests.size(); ++y) {
        const auto cmp = poincare_equal_iff_orbit(wx, web_from_tableau(forests[y]));
        EXPECT_EQ(cmp.poincare_equal, cmp.same_orbit) << forests[x].to_string() << " " << forests[y].to_string();
        EXPECT_EQ(triples_predict_equal(fmso_triple(forests[x]), fmso_triple(forests[y])), cmp.poincare_equal);
      }
    }
  }
  EXPECT_THROW(poincare_equal_iff_orbit(web_of({2, 5, 6}), web_of({2, 4, 6, 8})), InvalidInput);
}

TEST(QSeries, TripleRule) {
  EXPECT_TRUE(triples_predict_equal({0, 3, 0}, {0, 2, 1}));
  EXPECT_FALSE(triples_predict_equal({0, 3, 0}, {1, 1, 1}));
  EXPECT_TRUE(triples_predict_equal({1, 2, 3}, {3, 1, 2}));
  EXPECT_FALSE(triples_predict_equal({1, 2, 3}, {1, 1, 4}));
}

TEST(QSeries, RejectsNegativeArguments) {
  EXPECT_THROW(q_integer(-1), InvalidInput);
  EXPECT_THROW(q_factorial(-1), InvalidInput);
  EXPECT_THROW(q_binomial(-1, 0), InvalidInput);
}
