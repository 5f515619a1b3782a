#include "qsl3/u3algebra.hpp"

#include <gtest/gtest.h>

#include <utility>
#include <vector>

#include "qsl3/partitions.hpp"
#include "qsl3/qlaurent.hpp"

namespace {

using qsl3::AlgElem;
using qsl3::CanonExpansion;
using qsl3::CanonicalElem;
using qsl3::LaurentPoly;
using qsl3::Monomial;
using qsl3::Sign;

Monomial word(const std::vector<std::pair<int, int>>& letters) {
  return Monomial::fromLetters(letters).first;
}

/// Every word (adjacent colors distinct, exponents >= 1) with exponent sum
/// up to `maxSum`, including the empty word.
std::vector<Monomial> corpus(int maxSum) {
  std::vector<Monomial> out;
  std::vector<std::pair<int, int>> cur;
  auto rec = [&](auto&& self, int remaining) -> void {
    out.push_back(word(cur));
    for (int color = 1; color <= 2; ++color) {
      if (!cur.empty() && cur.back().first == color) continue;
      for (int e = 1; e <= remaining; ++e) {
        cur.emplace_back(color, e);
        self(self, remaining - e);
        cur.pop_back();
      }
    }
  };
  rec(rec, maxSum);
  return out;
}

TEST(U3Algebra, SameColorMerge) {
  const auto [pair12, factor12] = qsl3::mergeSameColor(1, 2);
  EXPECT_EQ(pair12, 3);
  EXPECT_EQ(factor12, qsl3::qbinom(3, 1));

  const auto [m, f] = Monomial::fromLetters({{1, 1}, {1, 1}});
  EXPECT_EQ(m, word({{1, 2}}));
  EXPECT_EQ(f, qsl3::qbinom(2, 1));

  const auto [m2, f2] = Monomial::fromLetters({{1, 2}, {1, 1}, {2, 3}});
  EXPECT_EQ(m2.str(), "1^3 2^3");
  EXPECT_EQ(f2, qsl3::qbinom(3, 2));

  const auto [m3, f3] = Monomial::fromLetters({{1, 1}, {2, 0}, {1, 2}});
  EXPECT_EQ(m3.str(), "1^3");
  EXPECT_EQ(f3, qsl3::qbinom(3, 1));

  EXPECT_TRUE(Monomial().empty());
  EXPECT_EQ(Monomial().str(), "1^0");
  EXPECT_EQ(word({{1, 2}, {2, 1}}).exponentSum(), 3);
}

TEST(U3Algebra, CanonicalElemNormalization) {
  const CanonicalElem e = CanonicalElem::make(1, 1, 3, 1);
  EXPECT_EQ(e.word().str(), "2^1 1^3 2^1");
  // On the dominance boundary b == a+c the two presentations agree; the
  // representative is stored with lead color 1.
  EXPECT_EQ(CanonicalElem::make(2, 1, 3, 2), CanonicalElem::make(1, 2, 3, 1));
  EXPECT_EQ(CanonicalElem::make(1, 0, 0, 0), CanonicalElem());
  EXPECT_ANY_THROW(CanonicalElem::make(1, 2, 1, 0));
  EXPECT_ANY_THROW(CanonicalElem::make(3, 0, 1, 0));
}

TEST(U3Algebra, CanonicalElemFromWord) {
  EXPECT_TRUE(CanonicalElem::fromWord(Monomial()).has_value());
  EXPECT_TRUE(CanonicalElem::fromWord(word({{1, 2}})).has_value());
  EXPECT_TRUE(CanonicalElem::fromWord(word({{2, 1}, {1, 3}, {2, 2}})).has_value());
  EXPECT_FALSE(CanonicalElem::fromWord(word({{1, 1}, {2, 1}, {1, 1}})).has_value());
  EXPECT_FALSE(CanonicalElem::fromWord(word({{1, 1}, {2, 5}, {1, 1}, {2, 1}})).has_value());
  const auto roundTrip = CanonicalElem::fromWord(word({{2, 1}, {1, 3}, {2, 1}}));
  ASSERT_TRUE(roundTrip.has_value());
  EXPECT_EQ(*roundTrip, CanonicalElem::make(1, 1, 3, 1));
}

TEST(U3Algebra, BaseCanonicalExpansion) {
  const CanonExpansion expansion = qsl3::canonicalize(word({{1, 1}, {2, 1}, {1, 1}}));
  ASSERT_EQ(expansion.terms().size(), 2u);
  const LaurentPoly one(1);
  EXPECT_EQ(expansion.terms().at(CanonicalElem::make(1, 0, 2, 1)), one);
  EXPECT_EQ(expansion.terms().at(CanonicalElem::make(1, 1, 2, 0)), one);
}

TEST(U3Algebra, RewriteIsIdentityInShuffleImage) {
  for (int lead = 1; lead <= 2; ++lead) {
    for (int a = 0; a <= 2; ++a) {
      for (int c = 0; c <= 2; ++c) {
        for (int b = 0; b <= a + c; ++b) {
          const AlgElem rewritten = qsl3::serreRewrite(a, b, c, lead);
          const int other = 3 - lead;
          // Keep the merge factor: with b = 0 the outer letters collapse into
          // one divided power times a quantum binomial.
          const auto [w, factor] = Monomial::fromLetters({{lead, a}, {other, b}, {lead, c}});
          AlgElem original;
          original.add(w, factor);
          EXPECT_EQ(qsl3::shuffle::shuffleImage(rewritten),
                    qsl3::shuffle::shuffleImage(original))
              << "a=" << a << " b=" << b << " c=" << c << " lead=" << lead;
        }
      }
    }
  }
  EXPECT_ANY_THROW(qsl3::serreRewrite(1, 3, 1, 1));
}

TEST(U3Algebra, CanonicalizeMatchesShuffleOracle) {
  for (const Monomial& w : corpus(5)) {
    const CanonExpansion expansion = qsl3::canonicalize(w);
    EXPECT_EQ(qsl3::shuffle::shuffleImage(expansion), qsl3::shuffle::shuffleImage(w))
        << w.str();
  }
}

TEST(U3Algebra, CanonicalCoefficientsAreNonnegative) {
  for (const Monomial& w : corpus(6)) {
    const CanonExpansion expansion = qsl3::canonicalize(w);
    for (const auto& [elem, coeff] : expansion.terms()) {
      EXPECT_TRUE(coeff.isNonnegative()) << w.str() << " at " << elem.str();
    }
  }
}

TEST(U3Algebra, RewriteOrderDoesNotMatter) {
  for (const Monomial& w : corpus(6)) {
    EXPECT_EQ(qsl3::canonicalize(w), qsl3::canonicalizeRightmost(w)) << w.str();
  }
}

TEST(U3Algebra, CanonicalizeIsIdempotentAndLinear) {
  const LaurentPoly weight = LaurentPoly::q(2) - LaurentPoly(3);
  for (const Monomial& w : corpus(5)) {
    const CanonExpansion expansion = qsl3::canonicalize(w);
    EXPECT_EQ(qsl3::canonicalize(qsl3::canonicalToAlg(expansion)), expansion);
    AlgElem scaled(w, weight);
    CanonExpansion expected = expansion;
    expected.scale(weight);
    EXPECT_EQ(qsl3::canonicalize(scaled), expected);
  }
}

TEST(U3Algebra, MultiplyIsAShuffleHomomorphism) {
  const auto smalls = corpus(3);
  for (const Monomial& u : smalls) {
    for (const Monomial& v : smalls) {
      const CanonExpansion product = qsl3::multiply(AlgElem(u), AlgElem(v));
      EXPECT_EQ(qsl3::shuffle::shuffleImage(product),
                qsl3::shuffle::shuffleProduct(qsl3::shuffle::shuffleImage(u),
                                              qsl3::shuffle::shuffleImage(v)))
          << u.str() << " * " << v.str();
    }
  }
}

TEST(U3Algebra, HigherSerreSumVanishes) {
  for (int m = 2; m <= 4; ++m) {
    for (int n = 1; n < m; ++n) {
      for (const Sign sign : {Sign::plus, Sign::minus}) {
        for (int lead = 1; lead <= 2; ++lead) {
          EXPECT_TRUE(qsl3::higherSerreSum(m, n, sign, lead).isZero())
              << "m=" << m << " n=" << n;
        }
      }
    }
  }
  EXPECT_ANY_THROW(qsl3::higherSerreSum(2, 2, Sign::plus, 1));
  EXPECT_ANY_THROW(qsl3::higherSerreSum(1, 3, Sign::plus, 1));
  EXPECT_ANY_THROW(qsl3::higherSerreSum(2, 0, Sign::plus, 1));
}

TEST(U3Algebra, GaussianBoxIdentity) {
  for (int m = 0; m <= 5; ++m) {
    for (int n = 0; n <= 5; ++n) {
      LaurentPoly sum;
      for (const qsl3::Partition& alpha : qsl3::enumerate(m, n)) {
        sum += LaurentPoly::q(2 * alpha.size() - m * n);
      }
      EXPECT_EQ(sum, qsl3::qbinom(m + n, m)) << m << "," << n;
    }
  }
}

}  // namespace
