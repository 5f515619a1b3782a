#include "qsl3/partitions.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <vector>

#include "qsl3/mpoly.hpp"

namespace {

using qsl3::MPoly;
using qsl3::Partition;

long long intBinomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long value = 1;
  for (int i = 1; i <= k; ++i) value = value * (n - k + i) / i;
  return value;
}

TEST(Partitions, ConstructionNormalizesTrailingZeros) {
  const Partition p({3, 1, 1, 0, 0});
  EXPECT_EQ(p.numParts(), 3);
  EXPECT_EQ(p.size(), 5);
  EXPECT_EQ(p.part(0), 3);
  EXPECT_EQ(p.part(2), 1);
  EXPECT_EQ(p.part(7), 0);
  EXPECT_TRUE(Partition().empty());
  EXPECT_ANY_THROW(Partition({1, 2}));
  EXPECT_ANY_THROW(Partition({2, -1}));
}

TEST(Partitions, StrAndParse) {
  EXPECT_EQ(Partition({3, 1, 1}).str(), "(3,1,1)");
  EXPECT_EQ(Partition().str(), "()");
  EXPECT_EQ(Partition::parse("(3,1,1)"), Partition({3, 1, 1}));
  EXPECT_EQ(Partition::parse("()"), Partition());
  EXPECT_FALSE(Partition::parse("(1,2)").has_value());
  EXPECT_FALSE(Partition::parse("3,1").has_value());
  for (const Partition& p : qsl3::enumerate(4, 4)) {
    EXPECT_EQ(Partition::parse(p.str()), p);
  }
}

TEST(Partitions, ContainmentAndBoxes) {
  EXPECT_TRUE(Partition({2, 1}).fitsInBox(2, 2));
  EXPECT_FALSE(Partition({2, 1}).fitsInBox(1, 2));
  EXPECT_FALSE(Partition({3}).fitsInBox(2, 2));
  EXPECT_TRUE(Partition({2, 1}).contains(Partition({1, 1})));
  EXPECT_FALSE(Partition({2, 1}).contains(Partition({1, 1, 1})));
}

TEST(Partitions, ConjugateIsAnInvolution) {
  EXPECT_EQ(qsl3::conjugate(Partition({3, 1})), Partition({2, 1, 1}));
  EXPECT_EQ(qsl3::conjugate(Partition()), Partition());
  for (const Partition& p : qsl3::enumerate(4, 5)) {
    EXPECT_EQ(qsl3::conjugate(qsl3::conjugate(p)), p);
    EXPECT_EQ(qsl3::conjugate(p).size(), p.size());
  }
}

TEST(Partitions, HatIsABoxComplementInvolution) {
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; b <= 4; ++b) {
      for (const Partition& alpha : qsl3::enumerate(a, b)) {
        const Partition h = qsl3::hat(alpha, a, b);
        EXPECT_TRUE(h.fitsInBox(b, a));
        EXPECT_EQ(h.size() + alpha.size(), a * b);
        EXPECT_EQ(qsl3::hat(h, b, a), alpha);
      }
    }
  }
  EXPECT_ANY_THROW(qsl3::hat(Partition({3}), 1, 2));
}

TEST(Partitions, EnumerateIsSortedCompleteAndCounted) {
  for (int a = 0; a <= 5; ++a) {
    for (int b = 0; b <= 5; ++b) {
      const auto all = qsl3::enumerate(a, b);
      EXPECT_EQ(static_cast<long long>(all.size()), intBinomial(a + b, a));
      EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
      EXPECT_TRUE(std::adjacent_find(all.begin(), all.end()) == all.end());
      EXPECT_TRUE(std::find(all.begin(), all.end(), Partition()) != all.end());
      for (const Partition& p : all) EXPECT_TRUE(p.fitsInBox(a, b));
    }
  }
}

TEST(Partitions, SizeFilteredEnumeration) {
  for (int rows = 0; rows <= 4; ++rows) {
    for (int cols = 0; cols <= 4; ++cols) {
      const auto all = qsl3::enumerate(rows, cols);
      for (int n = 0; n <= rows * cols; ++n) {
        const auto got = qsl3::partitionsOfSizeInBox(n, rows, cols);
        std::vector<Partition> expected;
        for (const Partition& p : all) {
          if (p.size() == n) expected.push_back(p);
        }
        EXPECT_EQ(got, expected) << "n=" << n << " box " << rows << "x" << cols;
      }
    }
  }
}

TEST(Partitions, SchurPolynomialSmallValues) {
  // s_(1) = x1 + x2, s_(2) = x1^2 + x1 x2 + x2^2, s_(1,1) = x1 x2.
  const MPoly x1 = MPoly::var(2, 0);
  const MPoly x2 = MPoly::var(2, 1);
  EXPECT_EQ(qsl3::schurPolynomialEval(Partition({1}), 2), x1 + x2);
  EXPECT_EQ(qsl3::schurPolynomialEval(Partition({2}), 2), x1 * x1 + x1 * x2 + x2 * x2);
  EXPECT_EQ(qsl3::schurPolynomialEval(Partition({1, 1}), 2), x1 * x2);
  EXPECT_TRUE(qsl3::schurPolynomialEval(Partition({1, 1, 1}), 2).isZero());
  EXPECT_TRUE(qsl3::schurPolynomialEval(Partition(), 2).isOne());
}

/// The structure constants from tableau counting must reproduce honest
/// polynomial multiplication of Schur polynomials.
TEST(Partitions, LRCoefficientsMatchPolynomialMultiplication) {
  const auto shapes = qsl3::enumerate(2, 3);  // partitions with <= 2 rows, parts <= 3
  for (const Partition& alpha : shapes) {
    for (const Partition& beta : shapes) {
      const int nv = 4;
      const MPoly lhs =
          qsl3::schurPolynomialEval(alpha, nv) * qsl3::schurPolynomialEval(beta, nv);
      MPoly rhs(nv);
      const int total = alpha.size() + beta.size();
      for (const Partition& gamma :
           qsl3::partitionsOfSizeInBox(total, nv, alpha.part(0) + beta.part(0))) {
        const long long c = qsl3::lrCoefficient(gamma, alpha, beta);
        if (c == 0) continue;
        MPoly term = qsl3::schurPolynomialEval(gamma, nv);
        term.scale(mpz_class(static_cast<long>(c)));
        rhs += term;
      }
      EXPECT_EQ(lhs, rhs) << alpha.str() << " * " << beta.str();
    }
  }
}

TEST(Partitions, LRKnownValues) {
  EXPECT_EQ(qsl3::lrCoefficient(Partition({2}), Partition({1}), Partition({1})), 1);
  EXPECT_EQ(qsl3::lrCoefficient(Partition({1, 1}), Partition({1}), Partition({1})), 1);
  EXPECT_EQ(qsl3::lrCoefficient(Partition({3, 2, 1}), Partition({2, 1}), Partition({2, 1})), 2);
  EXPECT_EQ(qsl3::lrCoefficient(Partition({4, 2}), Partition({2, 1}), Partition({2, 1})), 1);
  // Size mismatch and non-containment vanish.
  EXPECT_EQ(qsl3::lrCoefficient(Partition({3}), Partition({1}), Partition({1})), 0);
  EXPECT_EQ(qsl3::lrCoefficient(Partition({1, 1, 1}), Partition({2}), Partition({1})), 0);
  // Empty factor reduces to equality.
  EXPECT_EQ(qsl3::lrCoefficient(Partition({2, 1}), Partition({2, 1}), Partition()), 1);
  EXPECT_EQ(qsl3::lrCoefficient(Partition({2, 1}), Partition({1, 1}), Partition()), 0);
}

TEST(Partitions, MultiLRMatchesIteratedExpansion) {
  const auto shapes = qsl3::enumerate(2, 2);
  for (const Partition& alpha : shapes) {
    for (const Partition& beta : shapes) {
      for (const Partition& delta : shapes) {
        const int total = alpha.size() + beta.size() + delta.size();
        for (const Partition& gamma : qsl3::partitionsOfSizeInBox(total, 6, 6)) {
          long long expected = 0;
          for (const Partition& mu :
               qsl3::partitionsOfSizeInBox(alpha.size() + beta.size(), 6, 6)) {
            expected += qsl3::lrCoefficient(mu, alpha, beta) *
                        qsl3::lrCoefficient(gamma, mu, delta);
          }
          EXPECT_EQ(qsl3::multiLR({alpha, beta, delta}, gamma), expected)
              << alpha.str() << beta.str() << delta.str() << " -> " << gamma.str();
        }
      }
    }
  }
  EXPECT_EQ(qsl3::multiLR({}, Partition()), 1);
  EXPECT_EQ(qsl3::multiLR({}, Partition({1})), 0);
}

TEST(Partitions, SkewExpansionMatchesSkewPolynomials) {
  for (const Partition& gamma : qsl3::enumerate(2, 3)) {
    for (const Partition& alpha : qsl3::enumerate(2, 3)) {
      const int nv = 3;
      const MPoly direct = qsl3::skewSchurPolynomialEval(gamma, alpha, nv);
      if (!gamma.contains(alpha)) {
        EXPECT_TRUE(direct.isZero());
        EXPECT_TRUE(qsl3::skewSchurExpand(gamma, alpha).empty());
        continue;
      }
      MPoly viaExpansion(nv);
      for (const auto& [beta, c] : qsl3::skewSchurExpand(gamma, alpha)) {
        MPoly term = qsl3::schurPolynomialEval(beta, nv);
        term.scale(mpz_class(static_cast<long>(c)));
        viaExpansion += term;
      }
      EXPECT_EQ(direct, viaExpansion) << gamma.str() << " / " << alpha.str();
    }
  }
}

TEST(Partitions, MultiplyExpandAgreesWithLR) {
  for (const Partition& mu : qsl3::enumerate(2, 2)) {
    for (const Partition& alpha : qsl3::enumerate(2, 2)) {
      const auto expansion = qsl3::multiplyExpand(mu, alpha);
      for (const auto& [gamma, c] : expansion) {
        EXPECT_EQ(c, qsl3::lrCoefficient(gamma, mu, alpha));
        EXPECT_GT(c, 0);
      }
      // Completeness: every gamma with a nonzero coefficient is present.
      for (const Partition& gamma :
           qsl3::partitionsOfSizeInBox(mu.size() + alpha.size(), 4, 4)) {
        const long long c = qsl3::lrCoefficient(gamma, mu, alpha);
        if (c != 0) {
          EXPECT_TRUE(expansion.count(gamma)) << gamma.str();
        }
      }
    }
  }
}

}  // namespace
