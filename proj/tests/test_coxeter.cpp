#include "klcat/cli.hpp"
#include "klcat/coxeter.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>

using namespace klcat;

namespace {

GroupTable group(const char* name, std::size_t cap = 100000) {
  return GroupTable::build(cli::preset(name), cap);
}

Element el(const GroupTable& t, const Word& w) { return t.evaluate(w); }

TEST(CoxeterMatrix, Validation) {
  EXPECT_THROW(CoxeterMatrix(2, {{1, 3}, {2, 1}}), std::invalid_argument);  // asymmetric
  EXPECT_THROW(CoxeterMatrix(2, {{2, 3}, {3, 1}}), std::invalid_argument);  // diagonal
  EXPECT_THROW(CoxeterMatrix(2, {{1, 1}, {1, 1}}), std::invalid_argument);  // m = 1 off-diagonal
  EXPECT_THROW(CoxeterMatrix(0, {}), std::invalid_argument);
  EXPECT_NO_THROW(CoxeterMatrix(2, {{1, 0}, {0, 1}}));
}

TEST(CoxeterMatrix, JsonRoundTrip) {
  const CoxeterMatrix m = cli::preset("B3");
  nlohmann::json j;
  to_json(j, m);
  EXPECT_EQ(j.dump(), R"({"m":[[1,4,2],[4,1,3],[2,3,1]],"rank":3})");
  EXPECT_EQ(coxeter_matrix_from_json(j), m);
  EXPECT_THROW(coxeter_matrix_from_json(nlohmann::json::parse(R"({"rank":2})")),
               std::invalid_argument);
}

TEST(GroupTable, Orders) {
  EXPECT_EQ(group("A2").size(), 6U);
  EXPECT_EQ(group("I2(4)").size(), 8U);
  EXPECT_EQ(group("I2(4)").complete_length(), 4);
  EXPECT_EQ(group("A3").size(), 24U);
  EXPECT_EQ(group("A3").complete_length(), 6);
  EXPECT_EQ(group("A4").size(), 120U);
  EXPECT_EQ(group("B3").size(), 48U);
  for (int m = 2; m <= 12; ++m)
    EXPECT_EQ(group(("I2(" + std::to_string(m) + ")").c_str()).size(), 2U * m);
  EXPECT_THROW(GroupTable::build(cli::preset("A2"), 0), std::invalid_argument);
}

TEST(GroupTable, Multiplication) {
  const GroupTable t = group("A2");
  const Element e = t.identity(), s = el(t, {0}), st = el(t, {0, 1});
  EXPECT_EQ(t.mult(e, 0, Side::left), s);
  EXPECT_EQ(t.length(s), 1);
  EXPECT_EQ(t.mult(s, 0, Side::left), e);
  const Element sts = t.mult(st, 0, Side::right);
  EXPECT_EQ(sts, el(t, {1, 0, 1}));
  EXPECT_EQ(t.word(sts), (Word{0, 1, 0}));
}

TEST(GroupTable, EvaluateAndReduced) {
  const GroupTable t = group("A2");
  EXPECT_EQ(t.evaluate({}), t.identity());
  EXPECT_EQ(t.evaluate({0, 0}), t.identity());
  EXPECT_EQ(t.length(t.evaluate({0, 1, 0})), 3);
  EXPECT_TRUE(t.is_reduced({0, 1, 0}));
  EXPECT_FALSE(t.is_reduced({0, 0}));
  EXPECT_TRUE(t.is_reduced({}));
  EXPECT_FALSE(t.is_reduced({0, 1, 0, 1}));
  EXPECT_THROW(t.evaluate({0, 5}), std::invalid_argument);
}

TEST(GroupTable, Descents) {
  const GroupTable t = group("A2");
  EXPECT_TRUE(t.descents(t.identity(), Side::left).empty());
  EXPECT_EQ(t.descents(el(t, {0, 1, 0}), Side::left), (std::vector<Generator>{0, 1}));
  EXPECT_EQ(t.descents(el(t, {0, 1}), Side::left), (std::vector<Generator>{0}));
  EXPECT_EQ(t.descents(el(t, {0, 1}), Side::right), (std::vector<Generator>{1}));
}

TEST(GroupTable, BruhatExamples) {
  const GroupTable t = group("A2");
  for (Element w : t.elements()) {
    EXPECT_TRUE(t.bruhat_leq(t.identity(), w));
    EXPECT_TRUE(t.bruhat_leq(w, w));
  }
  EXPECT_TRUE(t.bruhat_leq(el(t, {0}), el(t, {1, 0})));
  EXPECT_FALSE(t.bruhat_leq(el(t, {0, 1}), el(t, {1, 0})));
  EXPECT_EQ(t.bruhat_interval(t.identity()), std::vector<Element>{t.identity()});
  const std::vector<Element> st{t.identity(), el(t, {0}), el(t, {1}), el(t, {0, 1})};
  EXPECT_EQ(t.bruhat_interval(el(t, {0, 1})), st);
  EXPECT_EQ(t.bruhat_interval(el(t, {0, 1, 0})).size(), 6U);
}

TEST(GroupTable, ReducedWords) {
  const GroupTable a2 = group("A2");
  EXPECT_EQ(a2.all_reduced_words(a2.identity()), std::vector<Word>{Word{}});
  auto words = a2.all_reduced_words(el(a2, {0, 1, 0}));
  std::sort(words.begin(), words.end());
  EXPECT_EQ(words, (std::vector<Word>{{0, 1, 0}, {1, 0, 1}}));
  const GroupTable a3 = group("A3");
  EXPECT_EQ(a3.all_reduced_words(a3.element(a3.size() - 1)).size(), 16U);
}

TEST(GroupTable, PartialInfiniteDihedral) {
  const GroupTable t = GroupTable::build(CoxeterMatrix(2, {{1, 0}, {0, 1}}), 50);
  EXPECT_TRUE(t.is_partial());
  EXPECT_LE(t.size(), 50U);
  const int top = t.complete_length();
  EXPECT_EQ(t.size(), 1U + 2U * top);
  for (int len = 1; len <= top; ++len) EXPECT_EQ(t.count_of_length(len), 2U);
  const Element last = t.elements_of_length(top).front();
  const Generator up = t.descents(last, Side::right).front() == 0 ? 1 : 0;
  EXPECT_THROW(t.mult(last, up, Side::right), PartialTableError);
  EXPECT_FALSE(t.try_mult(last, up, Side::right).has_value());
  // Still usable below the truncation.
  EXPECT_EQ(t.bruhat_interval(last).size(), static_cast<std::size_t>(2 * top));
}

TEST(GroupTable, PartialTableCountsStopAtCompleteLength) {
  const GroupTable t = GroupTable::build(cli::preset("A3"), 10);
  EXPECT_TRUE(t.is_partial());
  EXPECT_EQ(t.complete_length(), 2);  // 1 + 3 + 5 = 9 <= 10 < 15
  EXPECT_EQ(t.size(), 9U);
}

// ---- invariants over whole tables -------------------------------------------

class EveryGroup : public ::testing::TestWithParam<const char*> {};

TEST_P(EveryGroup, LengthChangesByOne) {
  const GroupTable t = group(GetParam());
  for (Element w : t.elements())
    for (Generator s = 0; s < t.rank(); ++s)
      for (Side side : {Side::left, Side::right})
        ASSERT_EQ(std::abs(t.length(t.mult(w, s, side)) - t.length(w)), 1);
}

TEST_P(EveryGroup, CanonicalWordsAreShortLexMinimalUnderBraidClosure) {
  const GroupTable t = group(GetParam());
  for (Element w : t.elements()) {
    const Word& nf = t.word(w);
    ASSERT_EQ(static_cast<int>(nf.size()), t.length(w));
    ASSERT_EQ(t.evaluate(nf), w);
    const auto closure = oracle::braid_closure(t.matrix(), nf);
    ASSERT_EQ(*closure.begin(), nf);  // std::set of equal-length words: lexicographic
    auto words = t.all_reduced_words(w);
    ASSERT_EQ(std::set<Word>(words.begin(), words.end()), closure);
  }
}

TEST_P(EveryGroup, BruhatIsAPartialOrderMatchingSubwords) {
  const GroupTable t = group(GetParam());
  const auto all = t.elements();
  for (Element x : all)
    for (Element w : all) {
      const bool leq = t.bruhat_leq(x, w);
      ASSERT_EQ(leq, oracle::subword_leq(t, x, t.word(w)));
      if (leq && t.bruhat_leq(w, x)) {
        ASSERT_EQ(x, w);
      }
      if (leq) {
        for (Element y : t.bruhat_interval(x)) ASSERT_TRUE(t.bruhat_leq(y, w));
      }
    }
}

TEST_P(EveryGroup, IntervalsAreSortedAndExact) {
  const GroupTable t = group(GetParam());
  for (Element w : t.elements()) {
    const auto interval = t.bruhat_interval(w);
    ASSERT_TRUE(std::is_sorted(interval.begin(), interval.end()));
    std::size_t count = 0;
    for (Element x : t.elements()) count += t.bruhat_leq(x, w);
    ASSERT_EQ(interval.size(), count);
  }
}

TEST_P(EveryGroup, IdsFollowLengthThenShortLex) {
  const GroupTable t = group(GetParam());
  for (std::size_t i = 1; i < t.size(); ++i) {
    const Element a = t.element(i - 1), b = t.element(i);
    ASSERT_TRUE(t.length(a) < t.length(b) || (t.length(a) == t.length(b) && t.word(a) < t.word(b)));
  }
}

INSTANTIATE_TEST_SUITE_P(Small, EveryGroup,
                         ::testing::Values("A1", "A2", "A3", "B2", "B3", "I2(2)", "I2(5)",
                                           "I2(6)", "I2(7)", "I2(8)"));

// A_{n-1} against permutations of n letters.
class PermutationBackend : public ::testing::TestWithParam<int> {};

TEST_P(PermutationBackend, SameGroupTable) {
  const int n = GetParam();
  const GroupTable t = group(("A" + std::to_string(n - 1)).c_str());
  const auto perms = oracle::all_perms(n);
  ASSERT_EQ(t.size(), perms.size());

  std::map<oracle::Perm, Element> by_perm;
  for (Element w : t.elements()) {
    const oracle::Perm p = oracle::perm_of_word(t.word(w), n);
    ASSERT_EQ(oracle::inversions(p), t.length(w));
    ASSERT_TRUE(by_perm.emplace(p, w).second) << "two elements with the same permutation";
  }
  for (const auto& [p, w] : by_perm)
    for (Generator s = 0; s + 1 < n; ++s) {
      oracle::Perm right = p;
      std::swap(right[s], right[s + 1]);
      oracle::Perm left = p;
      for (int& value : left) value = value == s ? s + 1 : value == s + 1 ? s : value;
      ASSERT_EQ(t.mult(w, s, Side::right), by_perm.at(right));
      ASSERT_EQ(t.mult(w, s, Side::left), by_perm.at(left));
    }
  for (const auto& [px, x] : by_perm)
    for (const auto& [pw, w] : by_perm) ASSERT_EQ(t.bruhat_leq(x, w), oracle::perm_bruhat_leq(px, pw));
}

INSTANTIATE_TEST_SUITE_P(UpToFive, PermutationBackend, ::testing::Values(2, 3, 4, 5));

}  // namespace
