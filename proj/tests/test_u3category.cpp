#include "qsl3/u3category.hpp"

#include <gtest/gtest.h>

#include <random>
#include <utility>
#include <vector>

#include "qsl3/qlaurent.hpp"
#include "qsl3/u3algebra.hpp"

namespace {

using qsl3::AlgElem;
using qsl3::GradedObject;
using qsl3::LaurentPoly;
using qsl3::Monomial;

Monomial word(const std::vector<std::pair<int, int>>& letters) {
  return Monomial::fromLetters(letters).first;
}

Monomial randomWord(std::mt19937& rng, int maxSum) {
  std::vector<std::pair<int, int>> letters;
  std::uniform_int_distribution<int> colorDist(1, 2);
  int remaining = std::uniform_int_distribution<int>(0, maxSum)(rng);
  int color = colorDist(rng);
  while (remaining > 0) {
    const int e = std::uniform_int_distribution<int>(1, remaining)(rng);
    letters.emplace_back(color, e);
    remaining -= e;
    color = 3 - color;
  }
  return word(letters);
}

TEST(U3Category, PairDecompositionSmall) {
  const GradedObject two = qsl3::decomposePair(1, 1, 1, 0);
  ASSERT_EQ(two.summands().size(), 2u);
  GradedObject expected;
  expected.add(word({{1, 2}}), -1);
  expected.add(word({{1, 2}}), 1);
  EXPECT_EQ(two, expected);

  // Degenerate thicknesses collapse to a single shifted summand.
  EXPECT_EQ(qsl3::decomposePair(2, 0, 3, 4), GradedObject(word({{2, 3}}), 4));
  EXPECT_EQ(qsl3::decomposePair(1, 0, 0, -2), GradedObject(Monomial(), -2));
}

TEST(U3Category, PairDecompositionDecategorifiesToGaussian) {
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; b <= 3; ++b) {
      const AlgElem lhs = qsl3::decategorify(qsl3::decomposePair(1, a, b, 0));
      AlgElem rhs(word({{1, a + b}}), qsl3::qbinom(a + b, a));
      EXPECT_EQ(lhs, rhs) << a << "," << b;
    }
  }
}

TEST(U3Category, TripleDecompositionMatchesRewriteInK0) {
  for (int lead = 1; lead <= 2; ++lead) {
    for (int a = 0; a <= 2; ++a) {
      for (int c = 0; c <= 2; ++c) {
        for (int b = 0; b <= a + c; ++b) {
          const AlgElem lhs =
              qsl3::decategorify(qsl3::decomposeTriple(a, b, c, lead, 0));
          const AlgElem rhs = qsl3::serreRewrite(a, b, c, lead);
          EXPECT_EQ(lhs, rhs) << "a=" << a << " b=" << b << " c=" << c << " lead=" << lead;
        }
      }
    }
  }
  EXPECT_ANY_THROW(qsl3::decomposeTriple(1, 3, 1, 1, 0));
}

TEST(U3Category, ObjectApi) {
  GradedObject x;
  EXPECT_TRUE(x.isZero());
  EXPECT_EQ(x.str(), "0");
  x.add(word({{1, 1}}), 2, 3);
  x.add(word({{1, 1}}), 2);
  EXPECT_EQ(x.summands().at({word({{1, 1}}), 2}), 4);
  EXPECT_ANY_THROW(x.add(word({{1, 1}}), 0, 0));
  EXPECT_ANY_THROW(x.add(word({{1, 1}}), 0, -1));
  EXPECT_EQ(x.str(), "1^1 {2} (+) 1^1 {2} (+) 1^1 {2} (+) 1^1 {2}");
}

TEST(U3Category, NormalizeFixesCanonicalSummands) {
  const Monomial canonical = word({{2, 1}, {1, 3}, {2, 1}});
  const qsl3::IndecompSum sum = qsl3::normalizeObject(GradedObject(canonical, 5));
  ASSERT_EQ(sum.size(), 1u);
  const auto& [indec, mult] = *sum.begin();
  EXPECT_EQ(indec.shift, 5);
  EXPECT_EQ(indec.canonical.word(), canonical);
  EXPECT_EQ(mult, 1);
}

/// Decategorification is a ring-level invariant of decomposition: splitting
/// an object into indecomposables must match rewriting its image onto the
/// canonical basis.
TEST(U3Category, GrothendieckConsistencyRandomObjects) {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> shiftDist(-5, 5);
  std::uniform_int_distribution<int> summandCount(1, 3);
  for (int trial = 0; trial < 500; ++trial) {
    GradedObject x;
    const int n = summandCount(rng);
    for (int i = 0; i < n; ++i) {
      x.add(randomWord(rng, 6), shiftDist(rng));
    }
    const AlgElem viaObjects = qsl3::decategorify(qsl3::normalizeObject(x));
    const AlgElem viaAlgebra =
        qsl3::canonicalToAlg(qsl3::canonicalize(qsl3::decategorify(x)));
    EXPECT_EQ(viaObjects, viaAlgebra) << x.str();
  }
}

TEST(U3Category, EndomorphismDegreeSpectrum) {
  for (int a = 0; a <= 3; ++a) {
    for (int c = 0; c <= 3; ++c) {
      for (int b = a + c; b <= a + c + 2; ++b) {
        const std::vector<int> degrees = qsl3::endoDotlessDegrees(a, b, c);
        ASSERT_EQ(degrees.size(), static_cast<std::size_t>(c + 1));
        int zeros = 0;
        for (const int d : degrees) {
          if (d == 0) {
            ++zeros;
          } else {
            EXPECT_GT(d, 0) << "a=" << a << " b=" << b << " c=" << c;
          }
        }
        EXPECT_EQ(zeros, 1) << "a=" << a << " b=" << b << " c=" << c;
      }
    }
  }
}

TEST(U3Category, CrossingDegreeLowerBound) {
  for (int a = 0; a <= 3; ++a) {
    for (int c = 0; c <= 3; ++c) {
      for (int x = 0; x <= 3; ++x) {
        for (int y = 0; y <= 3; ++y) {
          for (int b = a + c + x + y; b <= a + c + x + y + 2; ++b) {
            EXPECT_GE(qsl3::crossHomDegree(a, b, c, x, y), x * x + y * y)
                << "a=" << a << " b=" << b << " c=" << c << " x=" << x << " y=" << y;
          }
        }
      }
    }
  }
}

TEST(U3Category, MixedDegreeVanishesOnlyAtMatch) {
  for (int a = 0; a <= 4; ++a) {
    for (int c = 0; c <= 4; ++c) {
      for (int p = 0; p <= 4; ++p) {
        const int d = qsl3::mixedHomDegree(a, c, p);
        EXPECT_EQ(d == 0, p == c);
        EXPECT_GE(d, 0);
      }
    }
  }
}

}  // namespace
