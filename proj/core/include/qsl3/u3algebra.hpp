#ifndef QSL3_U3ALGEBRA_HPP
#define QSL3_U3ALGEBRA_HPP

/// Words in two-colored divided powers, rewriting onto the canonical basis
/// of three-letter dominant words, and the q-shuffle embedding that serves
/// as the independent correctness oracle for the rewriting.

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsl3/qlaurent.hpp"

namespace qsl3 {

/// E_i^(a) E_i^(b) = [a+b choose a] E_i^(a+b): returns (a+b, qbinom(a+b,a)).
[[nodiscard]] std::pair<int, LaurentPoly> mergeSameColor(int a, int b);

/// A word in divided powers: list of (color in {1,2}, exponent >= 1) with
/// adjacent letters of distinct colors. The empty word is the unit.
class Monomial {
 public:
  Monomial() = default;

  /// Normalize an arbitrary letter list: drop zero exponents and merge
  /// same-color neighbors, returning the merged word and the accumulated
  /// quantum-binomial factor.
  [[nodiscard]] static std::pair<Monomial, LaurentPoly> fromLetters(
      const std::vector<std::pair<int, int>>& letters);

  [[nodiscard]] const std::vector<std::pair<int, int>>& letters() const { return letters_; }
  [[nodiscard]] bool empty() const { return letters_.empty(); }
  [[nodiscard]] int length() const { return static_cast<int>(letters_.size()); }
  [[nodiscard]] int exponentSum() const;

  auto operator<=>(const Monomial&) const = default;

  /// Letter syntax, e.g. "1^2 2^1"; the unit renders as "1^0".
  [[nodiscard]] std::string str() const;

 private:
  friend class CanonicalElem;
  std::vector<std::pair<int, int>> letters_;  // validated by fromLetters
};

/// A canonical-basis element E_other^(a) E_lead^(b) E_other^(c) with
/// b >= a+c. On the boundary b = a+c the two color presentations coincide
/// in the algebra; the stored representative uses lead = 1.
class CanonicalElem {
 public:
  /// Unit element (a=b=c=0).
  CanonicalElem() = default;

  /// Normalizing constructor; requires b >= a+c >= 0 and lead in {1,2}.
  [[nodiscard]] static CanonicalElem make(int lead, int a, int b, int c);
  /// Classify a word as canonical; nullopt when the word (of any length) is
  /// not of dominant three-letter form.
  [[nodiscard]] static std::optional<CanonicalElem> fromWord(const Monomial& word);

  [[nodiscard]] int lead() const { return lead_; }
  [[nodiscard]] int a() const { return a_; }
  [[nodiscard]] int b() const { return b_; }
  [[nodiscard]] int c() const { return c_; }
  /// The stored representative word.
  [[nodiscard]] Monomial word() const;

  auto operator<=>(const CanonicalElem&) const = default;

  [[nodiscard]] std::string str() const { return word().str(); }

 private:
  int lead_ = 1;
  int a_ = 0, b_ = 0, c_ = 0;
};

/// A finite formal sum of terms with LaurentPoly coefficients. Zero
/// coefficients are never stored.
template <class Term>
class LinComb {
 public:
  LinComb() = default;
  explicit LinComb(const Term& t) { terms_.emplace(t, LaurentPoly(1)); }
  LinComb(const Term& t, const LaurentPoly& coeff) { add(t, coeff); }

  void add(const Term& t, const LaurentPoly& coeff) {
    if (coeff.isZero()) return;
    auto [it, inserted] = terms_.try_emplace(t, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.isZero()) terms_.erase(it);
    }
  }
  LinComb& operator+=(const LinComb& rhs) {
    for (const auto& [t, c] : rhs.terms_) add(t, c);
    return *this;
  }
  [[nodiscard]] friend LinComb operator+(LinComb a, const LinComb& b) {
    a += b;
    return a;
  }
  LinComb& scale(const LaurentPoly& f) {
    if (f.isZero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [t, c] : terms_) c *= f;
    return *this;
  }

  [[nodiscard]] bool isZero() const { return terms_.empty(); }
  [[nodiscard]] const std::map<Term, LaurentPoly>& terms() const { return terms_; }
  bool operator==(const LinComb&) const = default;

 private:
  std::map<Term, LaurentPoly> terms_;
};

/// Formal sums over raw words and over canonical elements.
using AlgElem = LinComb<Monomial>;
using CanonExpansion = LinComb<CanonicalElem>;

/// The three-letter rewriting identity: for b <= a+c,
///   E_lead^(a) E_other^(b) E_lead^(c)
///     = sum_{p+r=b, p<=c, r<=a} [a+c-b choose c-p] E_other^(p) E_lead^(a+c) E_other^(r).
/// `lead` is the outer color of the input window. Throws on b > a+c.
[[nodiscard]] AlgElem serreRewrite(int a, int b, int c, int lead);

/// Rewrite a formal sum onto the canonical basis. Linear, idempotent, and
/// certified against the q-shuffle oracle in the test suite.
[[nodiscard]] CanonExpansion canonicalize(const AlgElem& v);
[[nodiscard]] CanonExpansion canonicalize(const Monomial& word);

/// Re-embed a canonical expansion as a word-level sum.
[[nodiscard]] AlgElem canonicalToAlg(const CanonExpansion& v);

/// Product in the algebra: concatenate words, then canonicalize.
[[nodiscard]] CanonExpansion multiply(const AlgElem& u, const AlgElem& v);

/// sum_{r=0}^{m} (-1)^r q^{±(m-n-1)r} E_lead^(m-r) E_other^(n) E_lead^(r),
/// canonicalized; identically zero for m > n > 0. Throws otherwise.
[[nodiscard]] CanonExpansion higherSerreSum(int m, int n, Sign sign, int lead);

/// Variant of canonicalize that picks the rightmost rewritable window
/// first; used by the confluence smoke test only.
[[nodiscard]] CanonExpansion canonicalizeRightmost(const Monomial& word);

namespace shuffle {

/// The q-shuffle oracle: an injective algebra map into the shuffle algebra
/// on color letters. Words map to Z[q,q^{-1}]-combinations of color strings.
using Word = std::vector<int>;
using ShuffleElem = LinComb<Word>;

/// Shuffle product with the braiding q^{(a+|u|)·b} on the pairing
/// 1·1 = 2·2 = 2, 1·2 = 2·1 = -1.
[[nodiscard]] ShuffleElem shuffleProduct(const ShuffleElem& u, const ShuffleElem& v);

/// Image of a word of divided powers; uses exact division by [a]! for the
/// divided-power normalization. Asserts once, on first use, that the
/// quantum Serre element maps to zero (oracle calibration).
[[nodiscard]] ShuffleElem shuffleImage(const Monomial& word);
[[nodiscard]] ShuffleElem shuffleImage(const AlgElem& v);
[[nodiscard]] ShuffleElem shuffleImage(const CanonExpansion& v);

}  // namespace shuffle

}  // namespace qsl3

#endif  // QSL3_U3ALGEBRA_HPP
