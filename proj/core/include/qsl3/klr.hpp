#ifndef QSL3_KLR_HPP
#define QSL3_KLR_HPP

/// Exact operator model of string diagrams acting on polynomial rings. A
/// diagram on n strands is a finite sum of (strand bijection, rational
/// coefficient) pairs; coefficients live in the target variables with
/// denominators kept as factored products of linear differences (x_i - x_j),
/// so every reduction is exact and equality is syntactic after reduction.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsl3/mpoly.hpp"

namespace qsl3 {

using ColorSeq = std::vector<int>;  // strand colors, entries in {1, 2}
using Perm = std::vector<int>;      // w[s] = target position of source strand s (0-based)

[[nodiscard]] Perm identityPerm(int n);
[[nodiscard]] bool isIdentityPerm(const Perm& w);
/// (w after v): result[s] = w[v[s]].
[[nodiscard]] Perm composePerm(const Perm& w, const Perm& v);
[[nodiscard]] int permSign(const Perm& w);
/// 0-based adjacent-transposition positions forming a reduced word for v,
/// listed in application order (the first entry acts first).
[[nodiscard]] std::vector<int> reducedWordByDescents(Perm v);

class DiagramOperator;

/// num / prod (x_i - x_j)^mult with i < j in every factor; kept fully
/// reduced, which makes the representation canonical and == reliable.
class RationalCoeff {
 public:
  explicit RationalCoeff(int nvars = 0) : num_(nvars) {}
  explicit RationalCoeff(MPoly numerator) : num_(std::move(numerator)) {}
  RationalCoeff(MPoly numerator, std::map<std::pair<int, int>, int> denominator);

  [[nodiscard]] static RationalCoeff one(int nvars) {
    return RationalCoeff(MPoly::one(nvars));
  }
  /// 1 / (x_i - x_j); i != j in either order (sign folded into numerator).
  [[nodiscard]] static RationalCoeff inverseLinear(int nvars, int i, int j);

  [[nodiscard]] int nvars() const { return num_.nvars(); }
  [[nodiscard]] bool isZero() const { return num_.isZero(); }
  [[nodiscard]] const MPoly& numerator() const { return num_; }
  [[nodiscard]] const std::map<std::pair<int, int>, int>& denominator() const { return den_; }
  /// The value as a plain polynomial when the reduced denominator is trivial.
  [[nodiscard]] std::optional<MPoly> asPolynomial() const;

  RationalCoeff& operator+=(const RationalCoeff& rhs);
  [[nodiscard]] friend RationalCoeff operator*(const RationalCoeff& a, const RationalCoeff& b);
  [[nodiscard]] RationalCoeff operator-() const;
  RationalCoeff& scalePoly(const MPoly& p);
  RationalCoeff& scaleInt(long c);
  /// x_i -> x_{perm[i]} on numerator and denominator factors.
  [[nodiscard]] RationalCoeff renamed(const Perm& perm) const;
  /// Reindex into newNvars variables, indices shifted up by offset.
  [[nodiscard]] RationalCoeff embedded(int newNvars, int offset) const;

  bool operator==(const RationalCoeff& rhs) const = default;

  /// x-degree when homogeneous: deg(numerator) - total denominator
  /// multiplicity; nullopt when the numerator is inhomogeneous.
  [[nodiscard]] std::optional<int> homogeneousDegree() const;
  [[nodiscard]] std::string str() const;

 private:
  void reduce();
  /// Sum over the factor-wise maximal common denominator, skipping the final
  /// canonicalization. Bulk accumulators add many partial sums into one slot
  /// and reduce once at the end; reducing after every step re-walks the
  /// growing numerator and dominates the cost on dense operators.
  void addNoReduce(const RationalCoeff& rhs);
  /// Product without canonicalization (exact, possibly not in lowest terms).
  [[nodiscard]] static RationalCoeff timesNoReduce(const RationalCoeff& a,
                                                   const RationalCoeff& b);
  friend class DiagramOperator;
  friend DiagramOperator compose(const DiagramOperator& f, const DiagramOperator& g);
  friend DiagramOperator tensor(const DiagramOperator& f, const DiagramOperator& g);
  MPoly num_;
  std::map<std::pair<int, int>, int> den_;
};

/// A linear operator Pol(source) -> Pol(target) spanned by variable
/// relabelings: (D f) = sum_w q_w * (f with x_s -> x_{w(s)}). Sources and
/// targets always have equal length, and every stored bijection matches
/// strand colors.
class DiagramOperator {
 public:
  DiagramOperator(ColorSeq source, ColorSeq target);
  [[nodiscard]] static DiagramOperator identity(const ColorSeq& colors);

  [[nodiscard]] const ColorSeq& source() const { return source_; }
  [[nodiscard]] const ColorSeq& target() const { return target_; }
  [[nodiscard]] int strands() const { return static_cast<int>(source_.size()); }
  [[nodiscard]] const std::map<Perm, RationalCoeff>& terms() const { return terms_; }
  [[nodiscard]] bool isZero() const { return terms_.empty(); }

  void addTerm(const Perm& w, const RationalCoeff& q);

  DiagramOperator& operator+=(const DiagramOperator& rhs);
  DiagramOperator& operator-=(const DiagramOperator& rhs);
  [[nodiscard]] friend DiagramOperator operator+(DiagramOperator a, const DiagramOperator& b) {
    a += b;
    return a;
  }
  [[nodiscard]] friend DiagramOperator operator-(DiagramOperator a, const DiagramOperator& b) {
    a -= b;
    return a;
  }
  [[nodiscard]] DiagramOperator operator-() const;
  DiagramOperator& scale(long c);
  /// Multiply every coefficient by p (in target variables).
  DiagramOperator& scalePoly(const MPoly& p);

  bool operator==(const DiagramOperator& rhs) const = default;

  /// Apply to a polynomial in the source variables.
  [[nodiscard]] RationalCoeff apply(const MPoly& f) const;

  [[nodiscard]] std::string str() const;

 private:
  friend DiagramOperator compose(const DiagramOperator& f, const DiagramOperator& g);
  friend DiagramOperator tensor(const DiagramOperator& f, const DiagramOperator& g);
  ColorSeq source_;
  ColorSeq target_;
  std::map<Perm, RationalCoeff> terms_;
};

/// f after g (g acts first); requires g.target() == f.source().
[[nodiscard]] DiagramOperator compose(const DiagramOperator& f, const DiagramOperator& g);
/// Horizontal juxtaposition: f on the left strands, g on the right.
[[nodiscard]] DiagramOperator tensor(const DiagramOperator& f, const DiagramOperator& g);

/// Dot on strand k (1-based).
[[nodiscard]] DiagramOperator dotOp(const ColorSeq& colors, int k);
/// Crossing of strands k and k+1 (1-based k). Same-colored strands give the
/// divided-difference operator; adjacent-colored strands give the plain or
/// weighted transposition depending on orientation.
[[nodiscard]] DiagramOperator crossingOp(const ColorSeq& colors, int k);

/// Graded degree with dots in degree 2, when every term is homogeneous of
/// one common degree; nullopt otherwise (zero operators report degree 0).
[[nodiscard]] std::optional<int> rawDegree(const DiagramOperator& op);

}  // namespace qsl3

#endif  // QSL3_KLR_HPP
