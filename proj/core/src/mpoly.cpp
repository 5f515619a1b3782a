#include "qsl3/mpoly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qsl3 {

MPoly MPoly::constant(int nvars, const mpz_class& c) {
  MPoly p(nvars);
  if (c != 0) p.terms_.emplace(std::vector<int>(nvars, 0), c);
  return p;
}

MPoly MPoly::var(int nvars, int index) {
  if (index < 0 || index >= nvars) throw std::out_of_range("MPoly::var index");
  std::vector<int> e(nvars, 0);
  e[index] = 1;
  return monomial(std::move(e), 1);
}

MPoly MPoly::monomial(std::vector<int> exps, const mpz_class& c) {
  MPoly p(static_cast<int>(exps.size()));
  if (c != 0) p.terms_.emplace(std::move(exps), c);
  return p;
}

bool MPoly::isOne() const {
  if (terms_.size() != 1) return false;
  const auto& [e, c] = *terms_.begin();
  if (c != 1) return false;
  for (int x : e) {
    if (x != 0) return false;
  }
  return true;
}

void MPoly::insert(const std::vector<int>& exps, const mpz_class& c) {
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(exps, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

MPoly& MPoly::operator+=(const MPoly& rhs) {
  if (nvars_ != rhs.nvars_) throw std::invalid_argument("MPoly: nvars mismatch");
  for (const auto& [e, c] : rhs.terms_) insert(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& rhs) {
  if (nvars_ != rhs.nvars_) throw std::invalid_argument("MPoly: nvars mismatch");
  for (const auto& [e, c] : rhs.terms_) insert(e, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("MPoly: nvars mismatch");
  MPoly r(a.nvars_);
  std::vector<int> e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      r.insert(e, ca * cb);
    }
  }
  return r;
}

MPoly MPoly::operator-() const {
  MPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MPoly& MPoly::scale(const mpz_class& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

MPoly MPoly::renameVars(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != nvars_)
    throw std::invalid_argument("MPoly::renameVars size");
  MPoly r(nvars_);
  std::vector<int> e(nvars_);
  for (const auto& [exps, c] : terms_) {
    std::fill(e.begin(), e.end(), 0);
    for (int i = 0; i < nvars_; ++i) e[perm[i]] = exps[i];
    r.terms_.emplace(e, c);
  }
  return r;
}

MPoly MPoly::embed(int newNvars, int offset) const {
  if (offset < 0 || offset + nvars_ > newNvars)
    throw std::invalid_argument("MPoly::embed range");
  MPoly r(newNvars);
  std::vector<int> e(newNvars, 0);
  for (const auto& [exps, c] : terms_) {
    std::fill(e.begin(), e.end(), 0);
    for (int i = 0; i < nvars_; ++i) e[i + offset] = exps[i];
    r.terms_.emplace(e, c);
  }
  return r;
}

MPoly MPoly::identifyVars(int i, int j) const {
  MPoly r(nvars_);
  std::vector<int> e;
  for (const auto& [exps, c] : terms_) {
    e = exps;
    e[j] += e[i];
    e[i] = 0;
    r.insert(e, c);
  }
  return r;
}

std::optional<MPoly> MPoly::divideByLinearDiff(int i, int j) const {
  // The remainder modulo (x_i - x_j) is the substitution x_i := x_j, so
  // divisibility is a single cancellation pass. When it holds, pairing each
  // term c*m*x_i^k*x_j^l against the substituted value and telescoping
  // x_i^k - x_j^k = (x_i - x_j) * sum_a x_i^a x_j^(k-1-a) yields the
  // quotient term by term with no long division.
  if (isZero()) return MPoly(nvars_);
  MPoly rem(nvars_);
  std::vector<int> e;
  for (const auto& [exps, c] : terms_) {
    e = exps;
    e[j] += e[i];
    e[i] = 0;
    rem.insert(e, c);
  }
  if (!rem.isZero()) return std::nullopt;
  MPoly quot(nvars_);
  for (const auto& [exps, c] : terms_) {
    const int k = exps[i];
    if (k == 0) continue;  // cancels against x_j-side partners
    e = exps;
    for (int a = k - 1; a >= 0; --a) {
      e[i] = a;
      e[j] = exps[j] + (k - 1 - a);
      quot.insert(e, c);
    }
  }
  return quot;
}

bool MPoly::isHomogeneous(int* degree) const {
  int deg = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    int d = std::accumulate(e.begin(), e.end(), 0);
    if (first) {
      deg = d;
      first = false;
    } else if (d != deg) {
      return false;
    }
  }
  if (degree != nullptr) *degree = deg;
  return true;
}

int MPoly::totalDegree() const {
  int deg = 0;
  for (const auto& [e, c] : terms_) deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0));
  return deg;
}

mpz_class MPoly::evalAt(const std::vector<mpz_class>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("MPoly::evalAt arity");
  mpz_class total = 0;
  for (const auto& [e, c] : terms_) {
    mpz_class t = c;
    for (int i = 0; i < nvars_; ++i) {
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    }
    total += t;
  }
  return total;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    mpz_class mag = c < 0 ? mpz_class(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool wroteVar = false;
    std::ostringstream mono;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (wroteVar) mono << "*";
      mono << "x" << (i + 1);
      if (e[i] != 1) mono << "^" << e[i];
      wroteVar = true;
    }
    if (!wroteVar) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << "*";
      out << mono.str();
    }
  }
  return out.str();
}

}  // namespace qsl3
