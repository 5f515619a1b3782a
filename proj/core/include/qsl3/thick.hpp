#ifndef QSL3_THICK_HPP
#define QSL3_THICK_HPP

/// Thick edges, explicit diagram trees, and the compilation of thick
/// generators (idempotents, splitters, mergers, Schur labels, block
/// crossings) into exact strand operators.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qsl3/klr.hpp"
#include "qsl3/partitions.hpp"

namespace qsl3 {

struct ThickEdge {
  int color = 1;      // 1 or 2
  int thickness = 1;  // >= 1 for public generators
  auto operator<=>(const ThickEdge&) const = default;
};

using ThickWord = std::vector<ThickEdge>;

[[nodiscard]] ColorSeq explode(const ThickWord& word);
/// Internal grading shift carried by a thickness-t edge: -t(t-1)/2.
[[nodiscard]] constexpr int internalShift(int t) { return -t * (t - 1) / 2; }

/// The idempotent projecting n same-colored strands onto the thick edge
/// (closed antisymmetrization form; idempotency is covered by tests).
[[nodiscard]] DiagramOperator idempotentE(int color, int n);
/// Identity of a thick word: tensor product of edge idempotents.
[[nodiscard]] DiagramOperator idOn(const ThickWord& word);

/// E^(a+b) -> E^(a) E^(b) (left factor a); requires a, b >= 1.
[[nodiscard]] DiagramOperator splitOp(int color, int a, int b);
/// E^(a) E^(b) -> E^(a+b); requires a, b >= 1.
[[nodiscard]] DiagramOperator mergeOp(int color, int a, int b);
/// Schur-polynomial decoration on a thickness-t edge; zero when alpha has
/// more than t rows. Requires t >= 1.
[[nodiscard]] DiagramOperator schurLabelOp(int color, int t, const Partition& alpha);
/// Block crossing [P, Q] -> [Q, P]; requires both thicknesses >= 1.
[[nodiscard]] DiagramOperator thickCrossingOp(ThickEdge p, ThickEdge q);

/// rawDegree adjusted by a boundary constant for each thick word (internal
/// edge shifts plus a thickness-weighted color-inversion count, which evens
/// out the 0/2 degree split of the two adjacent-color crossing directions in
/// the polynomial action); nullopt when the operator is not homogeneous.
/// Equals the sum of the combinatorial generator degrees for every compiled
/// diagram, which is what the degree audit asserts.
[[nodiscard]] std::optional<int> effectiveDegree(const DiagramOperator& op,
                                                 const ThickWord& source,
                                                 const ThickWord& target);

/// Explicit diagram expression tree, compiled on demand. Vertical
/// composition lists factors bottom-to-top.
class ThickDiagram {
 public:
  enum class Kind { identity, schur, crossing, split, merge, horizontal, vertical, scaled };

  [[nodiscard]] static ThickDiagram ident(ThickEdge e);
  [[nodiscard]] static ThickDiagram schur(ThickEdge e, Partition alpha);
  [[nodiscard]] static ThickDiagram crossing(ThickEdge p, ThickEdge q);
  [[nodiscard]] static ThickDiagram split(int color, int a, int b);
  [[nodiscard]] static ThickDiagram merge(int color, int a, int b);
  [[nodiscard]] static ThickDiagram horizontal(std::vector<ThickDiagram> children);
  [[nodiscard]] static ThickDiagram vertical(std::vector<ThickDiagram> children);
  [[nodiscard]] static ThickDiagram scaled(long factor, ThickDiagram child);

  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] ThickWord source() const;
  [[nodiscard]] ThickWord target() const;
  /// Sum of generator degrees: labels 2|alpha|, same-color crossing -2pq,
  /// adjacent-color crossing +pq, split/merge -ab.
  [[nodiscard]] int combinatorialDegree() const;
  [[nodiscard]] std::string str() const;

  [[nodiscard]] const std::vector<ThickDiagram>& children() const { return children_; }
  [[nodiscard]] const ThickEdge& edgeP() const { return p_; }
  [[nodiscard]] const ThickEdge& edgeQ() const { return q_; }
  [[nodiscard]] const Partition& label() const { return label_; }
  [[nodiscard]] long factor() const { return factor_; }

 private:
  ThickDiagram() = default;
  Kind kind_ = Kind::identity;
  ThickEdge p_{};
  ThickEdge q_{};
  Partition label_;
  long factor_ = 1;
  std::vector<ThickDiagram> children_;
};

/// Compile a diagram tree to its operator; throws on interface mismatches.
[[nodiscard]] DiagramOperator compileThick(const ThickDiagram& d);

}  // namespace qsl3

#endif  // QSL3_THICK_HPP
