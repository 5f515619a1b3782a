#include "qsl3/verify.hpp"

#include <gtest/gtest.h>

#include <utility>
#include <vector>

namespace {

using qsl3::DiagramOperator;
using qsl3::Partition;
using qsl3::Report;
using qsl3::ThickWord;

testing::AssertionResult reportPasses(const Report& report) {
  if (report.allPass()) return testing::AssertionSuccess();
  testing::AssertionResult out = testing::AssertionFailure();
  for (const auto& entry : report.results) {
    if (entry.pass) continue;
    out << entry.check << " [" << entry.params << "]";
    if (entry.counterexample) out << ": " << *entry.counterexample;
    out << "\n";
  }
  return out;
}

TEST(TripleLabels, AdmissibleCounts) {
  const std::vector<std::pair<std::vector<int>, int>> expected{
      {{1, 1, 1}, 2}, {{2, 1, 1}, 3}, {{1, 1, 2}, 3}, {{1, 2, 1}, 1}, {{1, 2, 2}, 2}};
  for (const auto& [abc, count] : expected) {
    const auto labels = qsl3::admissibleTripleLabels(abc[0], abc[1], abc[2]);
    EXPECT_EQ(static_cast<int>(labels.size()), count)
        << "(" << abc[0] << "," << abc[1] << "," << abc[2] << ")";
  }
  // Every reported label respects p-range and the alpha box.
  for (const auto& label : qsl3::admissibleTripleLabels(2, 2, 2)) {
    EXPECT_GE(label.p, 0);
    EXPECT_LE(label.p, 2);
    EXPECT_TRUE(label.alpha.fitsInBox(2 - label.p, 2 - (2 - label.p)));
  }
}

TEST(TripleLabels, BoundaryWordsOfBasisMorphisms) {
  const DiagramOperator lambda = qsl3::lambdaOp(1, 1, 1, 1, Partition());
  EXPECT_EQ(lambda.source(), (qsl3::ColorSeq{2, 1, 1}));
  EXPECT_EQ(lambda.target(), (qsl3::ColorSeq{1, 2, 1}));
  const DiagramOperator sigma = qsl3::sigmaOp(1, 1, 1, 1, Partition());
  EXPECT_EQ(sigma.source(), (qsl3::ColorSeq{1, 2, 1}));
  EXPECT_EQ(sigma.target(), (qsl3::ColorSeq{2, 1, 1}));
}

TEST(TripleLabels, SmallestTripleOrthogonalityAndIdempotents) {
  EXPECT_TRUE(reportPasses(qsl3::verifySigmaLambda(1, 1, 1)));
  EXPECT_TRUE(reportPasses(qsl3::verifyIdempotents(1, 1, 1)));
}

TEST(Complexes, ObjectsAndDegrees) {
  EXPECT_EQ(qsl3::complexObject(3, 2, 0), (ThickWord{{1, 3}, {2, 2}}));
  EXPECT_EQ(qsl3::complexObject(3, 2, 1), (ThickWord{{1, 2}, {2, 2}, {1, 1}}));
  EXPECT_EQ(qsl3::complexObject(3, 2, 3), (ThickWord{{2, 2}, {1, 3}}));
  for (bool reversed : {false, true}) {
    const DiagramOperator d = qsl3::complexDifferential(3, 1, 1, reversed);
    const int from = reversed ? 2 : 1;
    const int to = reversed ? 1 : 2;
    EXPECT_EQ(qsl3::effectiveDegree(d, qsl3::complexObject(3, 1, from),
                                    qsl3::complexObject(3, 1, to)),
              std::optional<int>(1 - 3 + 1));
    const DiagramOperator h = qsl3::complexHomotopy(3, 1, 1, reversed);
    EXPECT_EQ(qsl3::effectiveDegree(h, qsl3::complexObject(3, 1, to),
                                    qsl3::complexObject(3, 1, from)),
              std::optional<int>(3 - 1 - 1));
  }
}

TEST(Complexes, SmallestNullHomotopy) {
  EXPECT_TRUE(reportPasses(qsl3::verifyComplexNullHomotopy(2, 1, false)));
  EXPECT_TRUE(reportPasses(qsl3::verifyComplexNullHomotopy(2, 1, true)));
}

TEST(Suites, LocalRelationsSmoke) {
  EXPECT_TRUE(reportPasses(qsl3::verifyLocalRelations(2)));
}

TEST(Suites, ThickRelationsSmoke) {
  EXPECT_TRUE(reportPasses(qsl3::verifyThickRelations(1)));
}

}  // namespace
