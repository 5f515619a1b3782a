#include "qsl3/thick.hpp"

#include <gtest/gtest.h>

#include <map>
#include <vector>

#include "qsl3/partitions.hpp"

namespace {

using qsl3::ColorSeq;
using qsl3::DiagramOperator;
using qsl3::MPoly;
using qsl3::Partition;
using qsl3::RationalCoeff;
using qsl3::ThickDiagram;
using qsl3::ThickEdge;
using qsl3::ThickWord;

MPoly mono(std::vector<int> exps, int c = 1) { return MPoly::monomial(std::move(exps), c); }

/// Split a thick edge, decorate both halves, and merge back.
DiagramOperator digon(int color, int a, int b, const Partition& alpha, const Partition& beta) {
  const DiagramOperator decorated =
      qsl3::tensor(qsl3::schurLabelOp(color, a, alpha), qsl3::schurLabelOp(color, b, beta));
  return qsl3::compose(qsl3::mergeOp(color, a, b),
                       qsl3::compose(decorated, qsl3::splitOp(color, a, b)));
}

TEST(ThickWords, ExplodeAndInternalShift) {
  const ThickWord word{{1, 2}, {2, 1}, {1, 3}};
  EXPECT_EQ(qsl3::explode(word), (ColorSeq{1, 1, 2, 1, 1, 1}));
  EXPECT_EQ(qsl3::internalShift(1), 0);
  EXPECT_EQ(qsl3::internalShift(2), -1);
  EXPECT_EQ(qsl3::internalShift(3), -3);
  EXPECT_EQ(qsl3::internalShift(4), -6);
}

TEST(Projectors, ClosedFormThickness2) {
  const DiagramOperator e2 = qsl3::idempotentE(1, 2);
  DiagramOperator expected({1, 1}, {1, 1});
  const RationalCoeff frac(MPoly::var(2, 0), {{{0, 1}, 1}});  // x0 / (x0 - x1)
  expected.addTerm({0, 1}, frac);
  expected.addTerm({1, 0}, -frac);
  EXPECT_EQ(e2, expected);
  EXPECT_EQ(e2.apply(mono({1, 0})), RationalCoeff(mono({1, 0})));
  EXPECT_TRUE(e2.apply(MPoly::one(2)).isZero());
}

TEST(Projectors, IdempotentAndAbsorbing) {
  for (int color : {1, 2}) {
    EXPECT_EQ(qsl3::idempotentE(color, 0), DiagramOperator::identity({}));
    EXPECT_EQ(qsl3::idempotentE(color, 1), DiagramOperator::identity({color}));
    for (int n = 2; n <= 4; ++n) {
      const DiagramOperator e = qsl3::idempotentE(color, n);
      EXPECT_EQ(qsl3::compose(e, e), e) << "color " << color << " thickness " << n;
    }
  }
  // idOn tensors the edge projectors in order.
  const ThickWord word{{1, 2}, {2, 1}};
  EXPECT_EQ(qsl3::idOn(word),
            qsl3::tensor(qsl3::idempotentE(1, 2), qsl3::idempotentE(2, 1)));
}

TEST(SplitMerge, ThinCasesAndDegrees) {
  EXPECT_EQ(qsl3::splitOp(1, 1, 1), qsl3::crossingOp({1, 1}, 1));
  EXPECT_EQ(qsl3::mergeOp(1, 1, 1), qsl3::idempotentE(1, 2));
  const ThickWord whole{{1, 3}};
  const ThickWord parts{{1, 2}, {1, 1}};
  EXPECT_EQ(qsl3::effectiveDegree(qsl3::splitOp(1, 2, 1), whole, parts),
            std::optional<int>(-2));
  EXPECT_EQ(qsl3::effectiveDegree(qsl3::mergeOp(1, 2, 1), parts, whole),
            std::optional<int>(-2));
  EXPECT_ANY_THROW((void)qsl3::splitOp(1, 0, 1));
  EXPECT_ANY_THROW((void)qsl3::mergeOp(1, 1, 0));
}

TEST(SplitMerge, CoassociativityInstance) {
  const DiagramOperator left = qsl3::compose(
      qsl3::tensor(qsl3::splitOp(1, 1, 1), qsl3::idempotentE(1, 1)), qsl3::splitOp(1, 2, 1));
  const DiagramOperator right = qsl3::compose(
      qsl3::tensor(qsl3::idempotentE(1, 1), qsl3::splitOp(1, 1, 1)), qsl3::splitOp(1, 1, 2));
  EXPECT_EQ(left, right);
}

TEST(Digons, FrozenTableThickness11) {
  const Partition none;
  const Partition one({1});
  EXPECT_TRUE(digon(1, 1, 1, none, none).isZero());
  EXPECT_EQ(digon(1, 1, 1, one, none), qsl3::idempotentE(1, 2));
  EXPECT_EQ(digon(1, 1, 1, none, one), -qsl3::idempotentE(1, 2));
  EXPECT_TRUE(digon(1, 1, 1, one, one).isZero());
}

TEST(Digons, FrozenTableThickness21) {
  const DiagramOperator e3 = qsl3::idempotentE(1, 3);
  EXPECT_TRUE(digon(1, 2, 1, Partition(), Partition()).isZero());
  EXPECT_TRUE(digon(1, 2, 1, Partition({1}), Partition()).isZero());
  EXPECT_TRUE(digon(1, 2, 1, Partition(), Partition({1})).isZero());
  EXPECT_EQ(digon(1, 2, 1, Partition(), Partition({2})), e3);
  EXPECT_EQ(digon(1, 2, 1, Partition({1}), Partition({1})), -e3);
  EXPECT_EQ(digon(1, 2, 1, Partition({1, 1}), Partition()), e3);
}

TEST(SchurLabels, EmptyAndOverfull) {
  EXPECT_EQ(qsl3::schurLabelOp(1, 2, Partition()), qsl3::idempotentE(1, 2));
  EXPECT_TRUE(qsl3::schurLabelOp(1, 1, Partition({1, 1})).isZero());
  EXPECT_TRUE(qsl3::schurLabelOp(2, 2, Partition({3, 2, 1})).isZero());
}

TEST(SchurLabels, ProductsFollowLittlewoodRichardson) {
  // On a thickness-t edge the labels multiply like Schur polynomials in t
  // variables: labels with more than t rows vanish.
  const int t = 2;
  const auto box = qsl3::enumerate(2, 2);
  for (const Partition& alpha : box) {
    for (const Partition& beta : box) {
      const DiagramOperator product = qsl3::compose(qsl3::schurLabelOp(1, t, alpha),
                                                    qsl3::schurLabelOp(1, t, beta));
      DiagramOperator expected(ColorSeq(t, 1), ColorSeq(t, 1));
      for (const auto& [gamma, c] : qsl3::multiplyExpand(alpha, beta)) {
        if (gamma.numParts() > t) continue;
        DiagramOperator part = qsl3::schurLabelOp(1, t, gamma);
        part.scale(c);
        expected += part;
      }
      EXPECT_EQ(product, expected) << alpha.str() << " * " << beta.str();
    }
  }
}

TEST(ThickCrossings, ThinCasesMatchStrandCrossings) {
  EXPECT_EQ(qsl3::thickCrossingOp({1, 1}, {2, 1}), qsl3::crossingOp({1, 2}, 1));
  EXPECT_EQ(qsl3::thickCrossingOp({2, 1}, {1, 1}), qsl3::crossingOp({2, 1}, 1));
  EXPECT_EQ(qsl3::thickCrossingOp({1, 1}, {1, 1}), qsl3::crossingOp({1, 1}, 1));
}

TEST(ThickCrossings, EffectiveDegrees) {
  for (int p = 1; p <= 2; ++p) {
    for (int q = 1; q <= 2; ++q) {
      const ThickWord sameSrc{{1, p}, {1, q}};
      const ThickWord sameTgt{{1, q}, {1, p}};
      EXPECT_EQ(qsl3::effectiveDegree(qsl3::thickCrossingOp({1, p}, {1, q}), sameSrc, sameTgt),
                std::optional<int>(-2 * p * q));
      const ThickWord mixedSrc{{1, p}, {2, q}};
      const ThickWord mixedTgt{{2, q}, {1, p}};
      EXPECT_EQ(qsl3::effectiveDegree(qsl3::thickCrossingOp({1, p}, {2, q}), mixedSrc, mixedTgt),
                std::optional<int>(p * q));
      EXPECT_EQ(qsl3::effectiveDegree(qsl3::thickCrossingOp({2, q}, {1, p}), mixedTgt, mixedSrc),
                std::optional<int>(p * q));
    }
  }
}

TEST(ThickCrossings, SchurDegreeAndProjectorDegree) {
  const ThickWord pair2{{1, 2}};
  EXPECT_EQ(qsl3::effectiveDegree(qsl3::idempotentE(1, 2), pair2, pair2), std::optional<int>(0));
  EXPECT_EQ(qsl3::effectiveDegree(qsl3::schurLabelOp(1, 2, Partition({2, 1})), pair2, pair2),
            std::optional<int>(6));
  const ThickWord thin{{1, 1}};
  EXPECT_EQ(qsl3::effectiveDegree(qsl3::dotOp({1}, 1), thin, thin), std::optional<int>(2));
}

TEST(DiagramTrees, CompileMatchesDirectBuilders) {
  const ThickDiagram tree = ThickDiagram::vertical({
      ThickDiagram::split(1, 1, 1),
      ThickDiagram::horizontal({ThickDiagram::schur({1, 1}, Partition({1})),
                                ThickDiagram::ident({1, 1})}),
      ThickDiagram::merge(1, 1, 1),
  });
  const DiagramOperator direct = qsl3::compose(
      qsl3::mergeOp(1, 1, 1),
      qsl3::compose(qsl3::tensor(qsl3::schurLabelOp(1, 1, Partition({1})),
                                 qsl3::idempotentE(1, 1)),
                    qsl3::splitOp(1, 1, 1)));
  EXPECT_EQ(qsl3::compileThick(tree), direct);
  EXPECT_EQ(tree.source(), (ThickWord{{1, 2}}));
  EXPECT_EQ(tree.target(), (ThickWord{{1, 2}}));
  EXPECT_EQ(tree.combinatorialDegree(), -1 + 2 + -1);

  const ThickDiagram doubled = ThickDiagram::scaled(-2, ThickDiagram::ident({2, 1}));
  DiagramOperator expected = DiagramOperator::identity({2});
  expected.scale(-2);
  EXPECT_EQ(qsl3::compileThick(doubled), expected);

  const ThickDiagram cross = ThickDiagram::crossing({1, 2}, {2, 1});
  EXPECT_EQ(qsl3::compileThick(cross), qsl3::thickCrossingOp({1, 2}, {2, 1}));
  EXPECT_EQ(cross.source(), (ThickWord{{1, 2}, {2, 1}}));
  EXPECT_EQ(cross.target(), (ThickWord{{2, 1}, {1, 2}}));
  EXPECT_EQ(cross.combinatorialDegree(), 2);
}

TEST(DiagramTrees, CompileValidatesInterfaces) {
  const ThickDiagram bad = ThickDiagram::vertical({
      ThickDiagram::split(1, 1, 1),
      ThickDiagram::merge(2, 1, 1),
  });
  EXPECT_ANY_THROW((void)qsl3::compileThick(bad));
  EXPECT_ANY_THROW((void)ThickDiagram::vertical({}));
}

TEST(DiagramTrees, StringForms) {
  EXPECT_EQ(ThickDiagram::ident({1, 2}).str(), "(id 1 2)");
  EXPECT_EQ(ThickDiagram::split(2, 1, 3).str(), "(split 2 1 3)");
  EXPECT_EQ(ThickDiagram::schur({1, 2}, Partition({2, 1})).str(), "(schur 1 2 (2 1))");
  const ThickDiagram tree = ThickDiagram::scaled(
      3, ThickDiagram::vertical({ThickDiagram::split(1, 1, 1),
                                 ThickDiagram::merge(1, 1, 1)}));
  EXPECT_EQ(tree.str(), "(scale 3 (v (split 1 1 1) (merge 1 1 1)))");
}

}  // namespace
