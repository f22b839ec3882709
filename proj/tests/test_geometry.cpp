#include <gtest/gtest.h>

#include "springweb/classify.hpp"
#include "springweb/error.hpp"
#include "springweb/geometry.hpp"
#include "support.hpp"

using namespace springweb;

namespace {

using F = BundleFactor;

BundleBase ps(int from, int to) {
  BundleBase out;
  for (int i = from; i <= to; ++i) out.push_back(F::projective(i));
  return out;
}

BundleBase cat(BundleBase a, const BundleBase& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

TwoColumnTableau rect(std::vector<int> col2) { return TwoColumnTableau::rectangular(std::move(col2)); }

// sum (i-1) eta_i equals the sum of C(column length, 2).
int springer_oracle(const TwoColumnShape& s) {
  return static_cast<int>(oracle::binomial(s.n() - s.k(), 2) + oracle::binomial(s.k(), 2));
}

}  // namespace

TEST(Geometry, FactorDimensionsAndPoints) {
  EXPECT_EQ(F::projective(7).dimension(), 7);
  EXPECT_EQ(F::grassmannian(5, 6).dimension(), 5);
  EXPECT_EQ(F::flag(7).dimension(), 21);
  EXPECT_EQ(F::product({F::flag(7), F::flag(3)}).dimension(), 24);
  for (const auto& p : {F::projective(0), F::flag(0), F::flag(1), F::grassmannian(0, 4), F::grassmannian(4, 4),
                        F::product({})})
    EXPECT_TRUE(p.is_point()) << p.to_string();
  EXPECT_FALSE(F::grassmannian(1, 2).is_point());
  EXPECT_THROW(F::grassmannian(3, 2), InvalidInput);
  EXPECT_THROW(F::projective(-1), InvalidInput);
  EXPECT_EQ(F::product({F::flag(7), F::flag(3)}).to_string(), "Fl(7) x Fl(3)");
  EXPECT_EQ(F::grassmannian(5, 6).to_string(), "Gr_5(6)");
  EXPECT_EQ(to_string(BundleBase{F::flag(3), F::projective(2)}), "(Fl(3), P^2)");
}

TEST(Geometry, Canonicalize) {
  const BundleBase raw{F::product({F::flag(5), F::flag(1)}), F::grassmannian(0, 3), F::projective(0),
                       F::flag(1), F::grassmannian(4, 4), F::projective(2)};
  EXPECT_EQ(canonicalize(raw), (BundleBase{F::flag(5), F::projective(2)}));
  EXPECT_EQ(canonicalize({F::product({F::flag(7), F::flag(3)})}), canonicalize({F::product({F::flag(3), F::flag(7)})}));
  EXPECT_EQ(canonicalize(canonicalize(raw)), canonicalize(raw));
}

TEST(Geometry, SpringerDimension) {
  const std::vector<int> eta{3, 2, 1};
  EXPECT_EQ(springer_dimension(eta), 4);
  for (int k = 1; k <= 10; ++k) EXPECT_EQ(springer_dimension(TwoColumnShape::rectangle(k)), k * (k - 1));
  for (int n = 2; n <= 14; ++n)
    for (int k = 1; 2 * k <= n; ++k) EXPECT_EQ(springer_dimension(TwoColumnShape(n, k)), springer_oracle({n, k}));
  EXPECT_EQ(springer_dimension(TwoColumnShape(5, 2)), 4);
}

TEST(Geometry, IntroductionTree) {
  const auto t = rect({2, 9, 10, 12, 13, 14, 15, 16});
  EXPECT_EQ(fmso_triple(t), (FmsoTriple{5, 2, 1}));
  const BundleBase expected = cat({F::product({F::flag(7), F::flag(3)}), F::grassmannian(5, 6)}, ps(2, 7));
  EXPECT_EQ(base_from_triple(t), expected);
  EXPECT_EQ(canonicalize(base_from_web(web_from_tableau(t))), canonicalize(expected));
  EXPECT_EQ(dimension(expected), 56);
}

TEST(Geometry, TwoComponentForest) {
  const auto w = web_from_tableau(rect({4, 5, 6, 9, 10}));
  EXPECT_EQ(canonicalize(base_from_web(w)), canonicalize(cat({F::product({F::flag(3), F::flag(5)})}, ps(3, 4))));
}

TEST(Geometry, TwoClawWebGivesFlagSquared) {
  for (int k = 2; k <= 7; ++k) {
    std::vector<int> top;
    for (int i = 1; i <= k; ++i) top.push_back(k + i);
    const auto t = rect(top);
    EXPECT_EQ(fmso_triple(t), (FmsoTriple{0, k, 0}));
    const BundleBase square{F::product({F::flag(k), F::flag(k)})};
    EXPECT_EQ(canonicalize(base_from_triple(t)), square);
    EXPECT_EQ(canonicalize(base_from_web(web_from_tableau(t))), square);
  }
}

TEST(Geometry, RayDiagramExamples) {
  const TwoColumnShape s(8, 3);
  const auto top_left = diagram_from_tableau(TwoColumnTableau(s, {3, 4, 7}));
  EXPECT_EQ(canonicalize(base_from_diagram(top_left)),
            canonicalize({F::product({F::flag(2), F::flag(4)}), F::grassmannian(1, 4), F::projective(1),
                          F::projective(2)}));
  const auto lower_left = diagram_from_tableau(TwoColumnTableau(s, {2, 5, 8}));
  EXPECT_EQ(canonicalize(base_from_diagram(lower_left)),
            canonicalize({F::product({F::flag(3), F::flag(3)}), F::grassmannian(2, 4), F::projective(1),
                          F::projective(2)}));
  EXPECT_EQ(dimension(base_from_diagram(lower_left)), 13);
  EXPECT_EQ(springer_dimension(s), 13);
  const auto single = diagram_from_tableau(TwoColumnTableau(TwoColumnShape(4, 1), {2}));
  EXPECT_EQ(canonicalize(base_from_diagram(single)), (BundleBase{F::flag(3)}));
  EXPECT_THROW(base_from_diagram(diagram_from_tableau(TwoColumnTableau(s, {2, 4, 6}))), SingularComponent);
}

TEST(Geometry, SmallShapesHaveTheRightDimension) {
  for (const auto& t : enumerate_tableaux(TwoColumnShape(5, 2))) EXPECT_EQ(dimension(base_from_triple(t)), 4);
}

TEST(Geometry, TripleInvariants) {
  for (int n = 2; n <= 12; ++n) {
    for (int k = 1; 2 * k <= n; ++k) {
      for (const auto& t : enumerate_tableaux(TwoColumnShape(n, k))) {
        if (!smooth_by_tableau_general(t).smooth) {
          EXPECT_THROW(fmso_triple(t), SingularComponent);
          continue;
        }
        const auto tr = fmso_triple(t);
        EXPECT_GE(tr.a, 0);
        EXPECT_GE(tr.b, 1);
        EXPECT_GE(tr.c, 0);
        EXPECT_EQ(tr.a + tr.b + tr.c, n - k) << t.to_string();
        if (tau_star(t).size() == 1 && t.rectangular()) EXPECT_EQ(tr, (FmsoTriple{0, k, 0}));
      }
    }
  }
}

TEST(Geometry, AllConstructionsAgree) {
  for (int k = 2; k <= 7; ++k) {
    for (const auto& t : enumerate_tableaux(TwoColumnShape::rectangle(k))) {
      const auto w = web_from_tableau(t);
      if (!is_forest(w)) {
        EXPECT_THROW(base_from_web(w), NonForestWeb);
        continue;
      }
      const auto tr = fmso_triple(t);
      EXPECT_EQ(canonicalize(base_from_web(w)), canonicalize(base_from_triple(t))) << t.to_string();
      EXPECT_EQ(components(w) == 1, tr.a != 0 && tr.c != 0) << t.to_string();
      EXPECT_EQ(dimension(base_from_web(w)), k * (k - 1));
    }
  }
  for (int n = 2; n <= 12; ++n) {
    for (int k = 1; 2 * k <= n; ++k) {
      for (const auto& t : enumerate_tableaux(TwoColumnShape(n, k))) {
        if (!smooth_by_tableau_general(t).smooth) continue;
        const auto d = diagram_from_tableau(t);
        EXPECT_EQ(canonicalize(base_from_diagram(d)), canonicalize(base_from_triple(t))) << t.to_string();
        EXPECT_EQ(dimension(base_from_diagram(d)), springer_dimension(t.shape())) << t.to_string();
        EXPECT_EQ(dimension(base_from_triple(t)), springer_dimension(t.shape())) << t.to_string();
      }
    }
  }
}
