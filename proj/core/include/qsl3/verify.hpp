#ifndef QSL3_VERIFY_HPP
#define QSL3_VERIFY_HPP

/// Mechanical verification suites: local strand relations, thick-calculus
/// identities, the triple-word basis morphisms with their orthogonality and
/// completeness, and null-homotopy of the alternating complexes. Each suite
/// returns a Report with one entry per checked identity.

#include "qsl3/partitions.hpp"
#include "qsl3/report.hpp"
#include "qsl3/thick.hpp"

namespace qsl3 {

/// Dot/crossing relations on every color sequence of length <= maxLen,
/// including dot migration up to third powers.
[[nodiscard]] Report verifyLocalRelations(int maxLen);

/// Thick-generator identities (idempotency, reduced-word independence,
/// coassociativity, pitchfork, opening, decorated digons, block R2/R3) with
/// block thicknesses up to maxThickness, plus the degree audit.
[[nodiscard]] Report verifyThickRelations(int maxThickness);

/// Admissible (p, alpha) labels for the triple a, b, c: p in
/// [max(0, b-a), min(b, c)], alpha in P(c-p, a-(b-p)).
struct TripleLabel {
  int p = 0;
  Partition alpha;
};
[[nodiscard]] std::vector<TripleLabel> admissibleTripleLabels(int a, int b, int c);

/// Basis morphism from the shifted standard-form word into the mixed triple
/// (and its reverse). Boundary words:
///   lambda: [2^(p), 1^(a+c), 2^(b-p)] -> [1^(a), 2^(b), 1^(c)]
///   sigma:  the reverse direction.
[[nodiscard]] DiagramOperator lambdaOp(int a, int b, int c, int p, const Partition& alpha);
[[nodiscard]] DiagramOperator sigmaOp(int a, int b, int c, int p, const Partition& alpha);

/// sigma-lambda orthogonality and the degree bookkeeping of both families.
[[nodiscard]] Report verifySigmaLambda(int a, int b, int c);
/// lambda-sigma idempotents: idempotency, mutual orthogonality, completeness.
[[nodiscard]] Report verifyIdempotents(int a, int b, int c);

/// The i-th object of the alternating complex: [1^(a-i), 2^(b), 1^(i)].
[[nodiscard]] ThickWord complexObject(int a, int b, int i);
/// Differential and homotopy; `reversed` selects the mirrored complex whose
/// differential runs the other way.
[[nodiscard]] DiagramOperator complexDifferential(int a, int b, int i, bool reversed);
[[nodiscard]] DiagramOperator complexHomotopy(int a, int b, int i, bool reversed);

/// d.d = 0 plus the homotopy identities showing the complex contracts.
[[nodiscard]] Report verifyComplexNullHomotopy(int a, int b, bool reversed);

}  // namespace qsl3

#endif  // QSL3_VERIFY_HPP
