#ifndef QSL3_QLAURENT_HPP
#define QSL3_QLAURENT_HPP

/// Exact Laurent polynomials in one variable q with arbitrary-precision
/// integer coefficients, plus the balanced quantum combinatorics built on
/// them: quantum integers [n], factorials [n]!, binomial coefficients and
/// the alternating binomial sums that vanish identically.

#include <gmpxx.h>

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace qsl3 {

/// Sign selector for q-exponent conventions that come in mirror pairs.
enum class Sign { plus, minus };

/// A Laurent polynomial sum_e c_e q^e over Z, stored sparsely.
/// Invariant: no zero coefficient is ever stored, so comparison of the
/// underlying maps is exact equality of values.
class LaurentPoly {
 public:
  /// The zero polynomial.
  LaurentPoly() = default;
  /// Constant polynomial.
  explicit LaurentPoly(long value);
  explicit LaurentPoly(const mpz_class& value);

  /// c * q^exp.
  [[nodiscard]] static LaurentPoly monomial(const mpz_class& coeff, int exp);
  /// q^exp.
  [[nodiscard]] static LaurentPoly q(int exp = 1);

  [[nodiscard]] bool isZero() const { return terms_.empty(); }
  [[nodiscard]] bool isOne() const;
  /// True iff every stored coefficient is positive (no zeros are stored).
  [[nodiscard]] bool isNonnegative() const;
  /// Coefficient of q^exp (zero if absent).
  [[nodiscard]] const mpz_class& coeff(int exp) const;
  /// Lowest / highest exponent with nonzero coefficient; requires nonzero.
  [[nodiscard]] int minExp() const;
  [[nodiscard]] int maxExp() const;
  [[nodiscard]] const std::map<int, mpz_class>& terms() const { return terms_; }

  /// The bar involution q -> q^{-1}.
  [[nodiscard]] LaurentPoly barInvolution() const;
  /// True iff invariant under the bar involution.
  [[nodiscard]] bool isBarSymmetric() const;
  /// Substitute q = 1 (sum of coefficients).
  [[nodiscard]] mpz_class evalAtOne() const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  [[nodiscard]] friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    a += b;
    return a;
  }
  [[nodiscard]] friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    a -= b;
    return a;
  }
  [[nodiscard]] friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  [[nodiscard]] LaurentPoly operator-() const;
  /// Multiply by c * q^exp in place (cheap shift-and-scale).
  LaurentPoly& mulMonomial(const mpz_class& coeff, int exp);

  bool operator==(const LaurentPoly& rhs) const = default;
  std::strong_ordering operator<=>(const LaurentPoly& rhs) const;

  /// Exact division; nullopt if rhs is zero or does not divide exactly.
  [[nodiscard]] std::optional<LaurentPoly> divideExact(const LaurentPoly& rhs) const;

  /// Render as e.g. "q^4 + q^2 + 2 + q^-2 + q^-4" (descending exponents,
  /// explicit signs, coefficient 1 elided on powers of q). Zero is "0".
  [[nodiscard]] std::string str() const;
  /// Parse the str() format back; nullopt on malformed input.
  [[nodiscard]] static std::optional<LaurentPoly> parse(std::string_view text);

 private:
  void insert(int exp, const mpz_class& coeff);
  std::map<int, mpz_class> terms_;
};

/// Balanced quantum integer [n] = q^{n-1} + q^{n-3} + ... + q^{-(n-1)};
/// [0] = 0 and [-n] = -[n].
[[nodiscard]] LaurentPoly qint(int n);

/// Quantum factorial [n]! = [n][n-1]...[1]; requires n >= 0.
[[nodiscard]] LaurentPoly qfact(int n);

/// Balanced quantum binomial coefficient [n choose k], computed by the
/// Pascal-type recurrence; total: returns 0 outside 0 <= k <= n.
[[nodiscard]] LaurentPoly qbinom(int n, int k);

/// sum_{k=0}^{N} (-1)^k q^{±(N-1)k} [N choose k]; equals 0 for all N >= 1
/// and 1 for N = 0.
[[nodiscard]] LaurentPoly alternatingBinomialSum(int N, Sign sign);

/// Free-function form matching the predicate used throughout reports.
[[nodiscard]] inline bool isNonnegative(const LaurentPoly& p) { return p.isNonnegative(); }

}  // namespace qsl3

#endif  // QSL3_QLAURENT_HPP
