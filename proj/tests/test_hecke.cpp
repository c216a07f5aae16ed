#include "klcat/cli.hpp"
#include "klcat/hecke.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace klcat;

namespace {

const LaurentPoly v = LaurentPoly::v();
const LaurentPoly vinv = LaurentPoly::monomial(1, -1);

struct A2 : ::testing::Test {
  GroupTable t = GroupTable::build(cli::preset("A2"), 100);
  Element e = t.identity();
  Element s = t.evaluate({0});
  Element st = t.evaluate({0, 1});
  Element tt = t.evaluate({1});
  HeckeElt H(Element w) const { return HeckeElt::std_basis(t, w); }
};

TEST_F(A2, StdBasis) {
  EXPECT_EQ(H(e).support().size(), 1U);
  EXPECT_EQ(H(st).coefficient(st), LaurentPoly(1));
  EXPECT_TRUE(H(st).coefficient(s).is_zero());
}

TEST_F(A2, MulHs) {
  EXPECT_EQ(mul_Hs(0, H(e)), H(s));
  EXPECT_EQ(mul_Hs(0, H(s)), (vinv - v) * H(s) + H(e));
  EXPECT_EQ(mul_Hs(0, H(tt)), H(st));
}

TEST_F(A2, MulKLs) {
  EXPECT_EQ(mul_KLs(0, H(e)), H(s) + v * H(e));
  EXPECT_EQ(mul_KLs(0, H(s)), H(e) + vinv * H(s));
  EXPECT_EQ(mul_KLs(0, H(tt)), H(st) + v * H(tt));
}

TEST_F(A2, Product) {
  EXPECT_EQ(product(H(s), H(s)), mul_Hs(0, H(s)));
  const HeckeElt x = H(st) + v * H(s);
  EXPECT_EQ(product(H(e), x), x);
  EXPECT_EQ(product(x, H(e)), x);
  EXPECT_EQ(product(H(s) + v * H(e), H(tt) + v * H(e)),
            H(st) + v * H(s) + v * H(tt) + v * v * H(e));
}

TEST_F(A2, Bar) {
  EXPECT_EQ(bar(H(e)), H(e));
  EXPECT_EQ(bar(H(s)), H(s) + (v - vinv) * H(e));
  EXPECT_EQ(bar(H(s) + v * H(e)), H(s) + v * H(e));
}

TEST_F(A2, JsonRoundTrip) {
  const HeckeElt x = H(st) + LaurentPoly({{-2, 3}}) * H(e);
  const nlohmann::json j = to_json(x);
  EXPECT_EQ(j.dump(), R"({"coeffs":[[[],{"-2":3}],[[0,1],{"0":1}]]})");
  EXPECT_EQ(hecke_from_json(t, j), x);
}

TEST_F(A2, PartialTableOverflowIsReported) {
  const GroupTable inf = GroupTable::build(CoxeterMatrix(2, {{1, 0}, {0, 1}}), 9);
  const Element top = inf.elements_of_length(inf.complete_length()).front();
  const Generator up = inf.is_descent(top, 0, Side::left) ? 1 : 0;
  EXPECT_THROW(mul_Hs(up, HeckeElt::std_basis(inf, top)), PartialTableError);
}

// ---- properties -------------------------------------------------------------

HeckeElt random_elt(oracle::Rng& rng, const GroupTable& t, int terms = 3) {
  HeckeElt h(t);
  for (int i = 0; i < terms; ++i)
    h.add_term(t.element(rng.uniform(0, static_cast<int>(t.size()) - 1)),
               oracle::random_poly(rng, 3, 3));
  return h;
}

class HeckeProperty : public ::testing::TestWithParam<const char*> {
 protected:
  oracle::Rng rng{7};
};

TEST_P(HeckeProperty, BarIsAnInvolutiveRingMap) {
  const GroupTable t = GroupTable::build(cli::preset(GetParam()), 1000);
  for (int i = 0; i < 40; ++i) {
    const HeckeElt a = random_elt(rng, t), b = random_elt(rng, t);
    ASSERT_EQ(bar(bar(a)), a);
    ASSERT_EQ(bar(a + b), bar(a) + bar(b));
    ASSERT_EQ(bar(product(a, b)), product(bar(a), bar(b)));
  }
}

TEST_P(HeckeProperty, ProductIsAssociative) {
  const GroupTable t = GroupTable::build(cli::preset(GetParam()), 1000);
  for (int i = 0; i < 25; ++i) {
    const HeckeElt a = random_elt(rng, t, 2), b = random_elt(rng, t, 2), c = random_elt(rng, t, 2);
    ASSERT_EQ(product(product(a, b), c), product(a, product(b, c)));
  }
}

TEST_P(HeckeProperty, KLGeneratorIsHsPlusV) {
  const GroupTable t = GroupTable::build(cli::preset(GetParam()), 1000);
  for (int i = 0; i < 50; ++i) {
    const HeckeElt h = random_elt(rng, t);
    const Generator s = rng.uniform(0, t.rank() - 1);
    ASSERT_EQ(mul_KLs(s, h), mul_Hs(s, h) + v * h);
    ASSERT_EQ(mul_KLs(s, h), product(HeckeElt::kl_generator(t, s), h));
  }
}

TEST_P(HeckeProperty, LengthAdditiveProducts) {
  const GroupTable t = GroupTable::build(cli::preset(GetParam()), 1000);
  for (Element x : t.elements())
    for (Element y : t.elements()) {
      Word xy = t.word(x);
      xy.insert(xy.end(), t.word(y).begin(), t.word(y).end());
      if (!t.is_reduced(xy)) continue;
      ASSERT_EQ(product(HeckeElt::std_basis(t, x), HeckeElt::std_basis(t, y)),
                HeckeElt::std_basis(t, t.evaluate(xy)));
    }
}

TEST_P(HeckeProperty, AgreesWithOracleAlgebra) {
  const GroupTable t = GroupTable::build(cli::preset(GetParam()), 1000);
  for (Element y : t.elements()) {
    const HeckeElt b = bar(HeckeElt::std_basis(t, y));
    const oracle::Vec ob = oracle::bar_std(t, y);
    ASSERT_EQ(b.support().size(), ob.size());
    for (const auto& [id, c] : ob) ASSERT_EQ(b.coefficient(Element{id}), oracle::to_laurent(c));
  }
}

INSTANTIATE_TEST_SUITE_P(Groups, HeckeProperty, ::testing::Values("A2", "A3", "B3", "I2(5)"));

// The two alternating m-fold products of generators agree as operators.
class BraidRelation : public ::testing::TestWithParam<int> {};

TEST_P(BraidRelation, HoldsOnRandomElements) {
  const int m = GetParam();
  const GroupTable t = GroupTable::build(CoxeterMatrix(2, {{1, m}, {m, 1}}), 100);
  oracle::Rng rng(m);
  for (int i = 0; i < 20; ++i) {
    const HeckeElt h = random_elt(rng, t, 4);
    HeckeElt a = h, b = h;
    for (int k = 0; k < m; ++k) {
      a = mul_Hs(k % 2, a);
      b = mul_Hs((k + 1) % 2, b);
    }
    ASSERT_EQ(a, b);
  }
}

INSTANTIATE_TEST_SUITE_P(Dihedral, BraidRelation, ::testing::Values(2, 3, 4, 5, 6, 7, 8));

}  // namespace
