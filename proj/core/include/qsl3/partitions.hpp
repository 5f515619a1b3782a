#ifndef QSL3_PARTITIONS_HPP
#define QSL3_PARTITIONS_HPP

/// Integer partitions constrained to boxes, conjugation and box
/// complementation, Littlewood-Richardson coefficients by direct tableau
/// enumeration, and exact Schur polynomial evaluation.

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsl3/mpoly.hpp"

namespace qsl3 {

/// A partition: weakly decreasing positive parts. Trailing zeros are
/// dropped on construction, so equality is equality of values.
class Partition {
 public:
  Partition() = default;  // the empty partition
  explicit Partition(std::vector<int> parts);

  [[nodiscard]] const std::vector<int>& parts() const { return parts_; }
  /// |alpha|, the sum of the parts.
  [[nodiscard]] int size() const;
  [[nodiscard]] int numParts() const { return static_cast<int>(parts_.size()); }
  [[nodiscard]] bool empty() const { return parts_.empty(); }
  /// The i-th part (0-based), with 0 beyond the last part.
  [[nodiscard]] int part(int i) const;
  /// Membership in P(rows, cols): at most `rows` parts, each <= cols.
  [[nodiscard]] bool fitsInBox(int rows, int cols) const;
  /// Containment beta <= alpha part-wise.
  [[nodiscard]] bool contains(const Partition& inner) const;

  auto operator<=>(const Partition&) const = default;

  /// "(3,1,1)"; the empty partition renders as "()".
  [[nodiscard]] std::string str() const;
  [[nodiscard]] static std::optional<Partition> parse(std::string_view text);

 private:
  std::vector<int> parts_;
};

/// Conjugate (transpose) partition.
[[nodiscard]] Partition conjugate(const Partition& alpha);

/// Box complement: for alpha in P(a,b), the conjugate of
/// (b - alpha_a, ..., b - alpha_1); lies in P(b,a). Throws
/// std::invalid_argument when alpha does not fit in the a x b box.
[[nodiscard]] Partition hat(const Partition& alpha, int a, int b);

/// All partitions in the a x b box (at most a parts, each <= b), in a
/// deterministic order; includes the empty partition. |P(a,b)| = C(a+b,a).
[[nodiscard]] std::vector<Partition> enumerate(int a, int b);

/// All partitions of n that fit in the rows x cols box.
[[nodiscard]] std::vector<Partition> partitionsOfSizeInBox(int n, int rows, int cols);

/// Littlewood-Richardson coefficient c^gamma_{alpha,beta}, by enumeration of
/// column-strict skew tableaux of shape gamma/alpha and content beta whose
/// reverse reading word is a lattice word. Zero on any size or containment
/// mismatch.
[[nodiscard]] long long lrCoefficient(const Partition& gamma, const Partition& alpha,
                                      const Partition& beta);

/// Iterated coefficient: the multiplicity of pi_beta in the product
/// prod_i pi_{parts[i]}.
[[nodiscard]] long long multiLR(const std::vector<Partition>& parts, const Partition& beta);

/// Expansion of the skew Schur function gamma/alpha: beta -> c^gamma_{alpha,beta}.
[[nodiscard]] std::map<Partition, long long> skewSchurExpand(const Partition& gamma,
                                                             const Partition& alpha);

/// Expansion of the product pi_mu * pi_alpha: nu -> c^nu_{mu,alpha}.
[[nodiscard]] std::map<Partition, long long> multiplyExpand(const Partition& mu,
                                                            const Partition& alpha);

/// The Schur polynomial pi_alpha(x_1..x_numVars), evaluated exactly by
/// semistandard-tableau enumeration; the zero polynomial when alpha has
/// more than numVars parts.
[[nodiscard]] MPoly schurPolynomialEval(const Partition& alpha, int numVars);

/// The skew Schur polynomial pi_{gamma/alpha}(x_1..x_numVars).
[[nodiscard]] MPoly skewSchurPolynomialEval(const Partition& gamma, const Partition& alpha,
                                            int numVars);

}  // namespace qsl3

#endif  // QSL3_PARTITIONS_HPP
