#ifndef QSL3_U3CATEGORY_HPP
#define QSL3_U3CATEGORY_HPP

/// Graded objects (formal direct sums of shifted words), decomposition into
/// the indecomposable summands, decategorification onto the algebra, and
/// the degree spectra underlying the indecomposability analysis.

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "qsl3/u3algebra.hpp"

namespace qsl3 {

/// One direct summand: a word with a grading shift.
struct Summand {
  Monomial word;
  int shift = 0;
  auto operator<=>(const Summand&) const = default;
};

/// A formal finite direct sum, as a multiset of summands (order-insensitive;
/// the zero object is the empty multiset).
class GradedObject {
 public:
  GradedObject() = default;
  GradedObject(const Monomial& word, int shift) { add(word, shift); }

  void add(const Monomial& word, int shift, long long multiplicity = 1);
  GradedObject& operator+=(const GradedObject& rhs);

  [[nodiscard]] bool isZero() const { return summands_.empty(); }
  [[nodiscard]] const std::map<Summand, long long>& summands() const { return summands_; }
  bool operator==(const GradedObject&) const = default;

  [[nodiscard]] std::string str() const;

 private:
  std::map<Summand, long long> summands_;  // summand -> multiplicity >= 1
};

/// An indecomposable object: a canonical-basis element with a shift.
struct Indecomposable {
  CanonicalElem canonical;
  int shift = 0;
  auto operator<=>(const Indecomposable&) const = default;
  [[nodiscard]] std::string str() const;
};

/// Multiset of indecomposables with multiplicities.
using IndecompSum = std::map<Indecomposable, long long>;

/// E_color^(a) E_color^(b) {t} decomposes as
/// ⊕_{α in P(a,b)} E_color^(a+b) {t + 2|α| - ab}.
[[nodiscard]] GradedObject decomposePair(int color, int a, int b, int t);

/// E_lead^(a) E_other^(b) E_lead^(c) {t} with b <= a+c decomposes as
/// ⊕_{p+r=b, p<=c, r<=a} ⊕_{α in P(c-p, a-r)}
///   E_other^(p) E_lead^(a+c) E_other^(r) {t + 2|α| - (c-p)(a-r)}.
/// Throws on b > a+c (the object is already indecomposable).
[[nodiscard]] GradedObject decomposeTriple(int a, int b, int c, int lead, int t);

/// Fully decompose an object into indecomposables. Order-independent.
[[nodiscard]] IndecompSum normalizeObject(const GradedObject& x);

/// K0 map: each summand word {t} goes to q^t times the word.
[[nodiscard]] AlgElem decategorify(const GradedObject& x);
[[nodiscard]] AlgElem decategorify(const IndecompSum& x);

/// The multiset {2(c-y)(b-a-y) : y = 0..c} of dotless standard-form
/// endomorphism degrees of E_1^(a) E_2^(b) E_1^(c); for b >= a+c exactly
/// one entry is zero.
[[nodiscard]] std::vector<int> endoDotlessDegrees(int a, int b, int c);

/// Degree -ax-ay-cx-cy-2xy+b(x+y) of the crossing-type dotless diagram;
/// >= x^2+y^2 whenever b >= a+c+x+y.
[[nodiscard]] int crossHomDegree(int a, int b, int c, int x, int y);

/// Degree (p-c)^2 of the minimal mixed-color diagram; zero iff p = c.
[[nodiscard]] int mixedHomDegree(int a, int c, int p);

}  // namespace qsl3

#endif  // QSL3_U3CATEGORY_HPP
