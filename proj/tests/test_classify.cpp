#include <gtest/gtest.h>

#include "springweb/classify.hpp"
#include "springweb/error.hpp"
#include "support.hpp"

using namespace springweb;

namespace {

TwoColumnTableau rect(std::vector<int> col2) { return TwoColumnTableau::rectangular(std::move(col2)); }

// Clause names of the two criteria line up once the prime is dropped.
std::string unprimed(std::string clause) {
  std::erase(clause, '\'');
  if (clause == "short>3") return "tau>3";
  return clause;
}

}  // namespace

TEST(Classify, EightBoxRepresentatives) {
  EXPECT_TRUE(smooth_by_tableau_rect(rect({3, 4, 7, 8})).smooth);
  EXPECT_TRUE(smooth_by_tableau_rect(rect({2, 5, 7, 8})).smooth);
  const auto singular = smooth_by_tableau_rect(rect({3, 5, 7, 8}));
  EXPECT_FALSE(singular.smooth);
  EXPECT_EQ(singular.clause, "tau=3:no-prefix");
}

TEST(Classify, IntroductionTreeIsSmoothThroughPrefixOne) {
  const auto t = rect({2, 9, 10, 12, 13, 14, 15, 16});
  const auto v = smooth_by_tableau_rect(t);
  EXPECT_TRUE(v.smooth);
  EXPECT_EQ(v.count, 3);
  EXPECT_EQ(v.prefix, 1);
  EXPECT_TRUE(check_witness(v, t));
  EXPECT_TRUE(smooth_by_web(web_from_tableau(t)).smooth);
}

TEST(Classify, SingularWebsCarryCycles) {
  for (const auto& col2 : {std::vector<int>{3, 4, 6, 8, 10}, std::vector<int>{6, 7, 8, 9, 11, 14, 15, 16}}) {
    const auto w = web_from_tableau(rect(col2));
    const auto v = smooth_by_web(w);
    EXPECT_FALSE(v.smooth);
    EXPECT_EQ(v.clause, "cycle");
    EXPECT_TRUE(check_witness(v, w));
    auto broken = v;
    std::reverse(broken.cycle.begin(), broken.cycle.end());
    EXPECT_TRUE(check_witness(broken, w));  // still a cycle
    broken.cycle.pop_back();
    broken.cycle.pop_back();
    EXPECT_FALSE(check_witness(broken, w));
  }
  const auto other_diagonal = web_from_tableau(rect({3, 4, 6, 8, 10}), FanApex::SuccessorOfLeast);
  EXPECT_FALSE(smooth_by_web(other_diagonal).smooth);
}

TEST(Classify, SmallNonRectangularShapes) {
  for (const auto& t : enumerate_tableaux(TwoColumnShape(5, 2))) {
    EXPECT_TRUE(smooth_by_tableau_general(t).smooth) << t.to_string();
    EXPECT_TRUE(smooth_by_diagram(diagram_from_tableau(t)).smooth) << t.to_string();
  }
  const TwoColumnShape s(8, 3);
  for (const auto& col2 : {std::vector<int>{3, 4, 7}, std::vector<int>{2, 5, 8}}) {
    const TwoColumnTableau t(s, col2);
    EXPECT_TRUE(smooth_by_tableau_general(t).smooth);
    EXPECT_TRUE(smooth_by_diagram(diagram_from_tableau(t)).smooth);
  }
  const TwoColumnTableau singular(s, {2, 4, 6});
  EXPECT_FALSE(smooth_by_tableau_general(singular).smooth);
  EXPECT_FALSE(smooth_by_diagram(diagram_from_tableau(singular)).smooth);
}

TEST(Classify, ThreeWayAgreementOnRectangles) {
  for (int k = 2; k <= 7; ++k) {
    for (const auto& t : enumerate_tableaux(TwoColumnShape::rectangle(k))) {
      const auto a = smooth_by_tableau_rect(t);
      const auto w = web_from_tableau(t);
      const auto b = smooth_by_web(w);
      const auto d = matching_from_tableau(t).as_diagram();
      const auto c = smooth_by_diagram(d);
      EXPECT_EQ(a.smooth, b.smooth) << t.to_string();
      EXPECT_EQ(a.smooth, c.smooth) << t.to_string();
      EXPECT_TRUE(check_witness(a, t));
      EXPECT_TRUE(check_witness(b, w));
      EXPECT_TRUE(check_witness(c, d));
    }
  }
}

TEST(Classify, TwoWayAgreementClauseByClause) {
  for (int n = 2; n <= 12; ++n) {
    for (int k = 1; 2 * k <= n; ++k) {
      for (const auto& t : enumerate_tableaux(TwoColumnShape(n, k))) {
        const auto g = smooth_by_tableau_general(t);
        const auto d = smooth_by_diagram(diagram_from_tableau(t));
        EXPECT_EQ(g.smooth, d.smooth) << t.to_string();
        EXPECT_EQ(g.clause, unprimed(d.clause)) << t.to_string();
        EXPECT_EQ(g.last_is_ray, d.last_is_ray);
      }
    }
  }
}

TEST(Classify, TamperedVerdictsAreRejected) {
  for (const auto& t : enumerate_tableaux(TwoColumnShape::rectangle(5))) {
    auto v = smooth_by_tableau_rect(t);
    v.smooth = !v.smooth;
    EXPECT_FALSE(check_witness(v, t));
    auto g = smooth_by_tableau_general(t);
    g.count += 1;
    EXPECT_FALSE(check_witness(g, t));
    const auto w = web_from_tableau(t);
    auto wv = smooth_by_web(w);
    wv.smooth = !wv.smooth;
    EXPECT_FALSE(check_witness(wv, w));
    const auto d = diagram_from_tableau(t);
    auto dv = smooth_by_diagram(d);
    dv.clause = "S1'";
    if (smooth_by_diagram(d).clause != "S1'") EXPECT_FALSE(check_witness(dv, d));
    // wrong criterion for the object
    EXPECT_FALSE(check_witness(smooth_by_diagram(d), t));
  }
}

TEST(Classify, CriterionNames) {
  for (auto c : {Criterion::TableauRectangular, Criterion::TableauGeneral, Criterion::Web, Criterion::Diagram})
    EXPECT_EQ(criterion_from_string(to_string(c)), c);
  EXPECT_THROW(criterion_from_string("magic"), InvalidInput);
  EXPECT_THROW(smooth_by_tableau_rect(TwoColumnTableau(TwoColumnShape(5, 2), {2, 4})), NonRectangularShape);
}
