#ifndef QSL3_MPOLY_HPP
#define QSL3_MPOLY_HPP

/// Sparse multivariate polynomials in x_1..x_n over arbitrary-precision
/// integers. Shared by the symmetric-function layer (Schur polynomial
/// evaluation) and the diagram-operator engine (divided-difference
/// coefficients).

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qsl3 {

class MPoly {
 public:
  /// Zero polynomial in nvars variables.
  explicit MPoly(int nvars = 0) : nvars_(nvars) {}

  [[nodiscard]] static MPoly constant(int nvars, const mpz_class& c);
  [[nodiscard]] static MPoly one(int nvars) { return constant(nvars, 1); }
  /// The variable x_index (0-based index).
  [[nodiscard]] static MPoly var(int nvars, int index);
  /// c * prod_i x_i^{exps[i]}; exps must have size nvars.
  [[nodiscard]] static MPoly monomial(std::vector<int> exps, const mpz_class& c);

  [[nodiscard]] int nvars() const { return nvars_; }
  [[nodiscard]] bool isZero() const { return terms_.empty(); }
  [[nodiscard]] bool isOne() const;
  [[nodiscard]] const std::map<std::vector<int>, mpz_class>& terms() const { return terms_; }

  MPoly& operator+=(const MPoly& rhs);
  MPoly& operator-=(const MPoly& rhs);
  [[nodiscard]] friend MPoly operator+(MPoly a, const MPoly& b) {
    a += b;
    return a;
  }
  [[nodiscard]] friend MPoly operator-(MPoly a, const MPoly& b) {
    a -= b;
    return a;
  }
  [[nodiscard]] friend MPoly operator*(const MPoly& a, const MPoly& b);
  [[nodiscard]] MPoly operator-() const;
  MPoly& scale(const mpz_class& c);

  bool operator==(const MPoly& rhs) const = default;

  /// Rename variables: x_i -> x_{perm[i]} (perm is a bijection, 0-based).
  [[nodiscard]] MPoly renameVars(const std::vector<int>& perm) const;
  /// Reindex into a wider variable set: x_i -> x_{i+offset} among newNvars.
  [[nodiscard]] MPoly embed(int newNvars, int offset) const;
  /// Substitute x_i := x_j.
  [[nodiscard]] MPoly identifyVars(int i, int j) const;
  /// Exact division by (x_i - x_j); nullopt when not divisible.
  [[nodiscard]] std::optional<MPoly> divideByLinearDiff(int i, int j) const;

  /// Total degree of each monomial is identical iff homogeneous; the common
  /// degree is returned (0 for the zero polynomial by convention).
  [[nodiscard]] bool isHomogeneous(int* degree = nullptr) const;
  [[nodiscard]] int totalDegree() const;

  /// Evaluate at integer arguments (for randomized sanity probes in tests).
  [[nodiscard]] mpz_class evalAt(const std::vector<mpz_class>& point) const;

  /// Diagnostic rendering, e.g. "x1^2*x2 - 3*x3".
  [[nodiscard]] std::string str() const;

 private:
  void insert(const std::vector<int>& exps, const mpz_class& c);
  int nvars_;
  std::map<std::vector<int>, mpz_class> terms_;
};

}  // namespace qsl3

#endif  // QSL3_MPOLY_HPP
