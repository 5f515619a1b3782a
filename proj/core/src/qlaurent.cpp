#include "qsl3/qlaurent.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qsl3 {

LaurentPoly::LaurentPoly(long value) {
  if (value != 0) terms_[0] = value;
}

LaurentPoly::LaurentPoly(const mpz_class& value) {
  if (value != 0) terms_[0] = value;
}

LaurentPoly LaurentPoly::monomial(const mpz_class& coeff, int exp) {
  LaurentPoly p;
  if (coeff != 0) p.terms_[exp] = coeff;
  return p;
}

LaurentPoly LaurentPoly::q(int exp) { return monomial(1, exp); }

bool LaurentPoly::isOne() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

bool LaurentPoly::isNonnegative() const {
  for (const auto& [exp, c] : terms_) {
    if (c < 0) return false;
  }
  return true;
}

const mpz_class& LaurentPoly::coeff(int exp) const {
  static const mpz_class kZero = 0;
  auto it = terms_.find(exp);
  return it == terms_.end() ? kZero : it->second;
}

int LaurentPoly::minExp() const {
  if (terms_.empty()) throw std::logic_error("minExp of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::maxExp() const {
  if (terms_.empty()) throw std::logic_error("maxExp of zero polynomial");
  return terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::barInvolution() const {
  LaurentPoly r;
  for (const auto& [exp, c] : terms_) r.terms_[-exp] = c;
  return r;
}

bool LaurentPoly::isBarSymmetric() const { return *this == barInvolution(); }

mpz_class LaurentPoly::evalAtOne() const {
  mpz_class s = 0;
  for (const auto& [exp, c] : terms_) s += c;
  return s;
}

void LaurentPoly::insert(int exp, const mpz_class& coeff) {
  auto it = terms_.find(exp);
  if (it == terms_.end()) {
    if (coeff != 0) terms_.emplace(exp, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [exp, c] : rhs.terms_) insert(exp, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [exp, c] : rhs.terms_) insert(exp, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.insert(ea + eb, ca * cb);
  }
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [exp, c] : terms_) r.terms_[exp] = -c;
  return r;
}

LaurentPoly& LaurentPoly::mulMonomial(const mpz_class& coeff, int exp) {
  if (coeff == 0) {
    terms_.clear();
    return *this;
  }
  std::map<int, mpz_class> shifted;
  for (auto& [e, c] : terms_) shifted.emplace(e + exp, c * coeff);
  terms_ = std::move(shifted);
  return *this;
}

std::strong_ordering LaurentPoly::operator<=>(const LaurentPoly& rhs) const {
  auto it = terms_.begin();
  auto jt = rhs.terms_.begin();
  for (; it != terms_.end() && jt != rhs.terms_.end(); ++it, ++jt) {
    if (it->first != jt->first) return it->first <=> jt->first;
    if (int c = cmp(it->second, jt->second); c != 0)
      return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (it != terms_.end()) return std::strong_ordering::greater;
  if (jt != rhs.terms_.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

std::optional<LaurentPoly> LaurentPoly::divideExact(const LaurentPoly& rhs) const {
  if (rhs.isZero()) return std::nullopt;
  if (isZero()) return LaurentPoly();
  LaurentPoly rem = *this;
  LaurentPoly quot;
  const int quotMinExp = minExp() - rhs.minExp();
  const mpz_class& lead = rhs.terms_.rbegin()->second;
  while (!rem.isZero()) {
    int t = rem.maxExp() - rhs.maxExp();
    if (t < quotMinExp) return std::nullopt;
    mpz_class c = rem.terms_.rbegin()->second / lead;
    if (c * lead != rem.terms_.rbegin()->second) return std::nullopt;
    LaurentPoly step = monomial(c, t);
    quot += step;
    rem -= step * rhs;
  }
  return quot;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const int exp = it->first;
    mpz_class c = it->second;
    const bool negative = c < 0;
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    mpz_class mag = negative ? mpz_class(-c) : c;
    if (exp == 0) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str();
      out << "q";
      if (exp != 1) out << "^" << exp;
    }
  }
  return out.str();
}

namespace {

// One additive term of the textual form: [coefficient][q[^exponent]].
bool parseTerm(std::string_view body, bool negative, LaurentPoly* acc) {
  if (body.empty()) return false;
  std::size_t pos = 0;
  std::string digits;
  while (pos < body.size() && std::isdigit(static_cast<unsigned char>(body[pos]))) {
    digits.push_back(body[pos]);
    ++pos;
  }
  mpz_class coeff = digits.empty() ? mpz_class(1) : mpz_class(digits);
  int exp = 0;
  if (pos < body.size()) {
    if (body[pos] != 'q') return false;
    ++pos;
    exp = 1;
    if (pos < body.size()) {
      if (body[pos] != '^') return false;
      ++pos;
      bool expNeg = false;
      if (pos < body.size() && (body[pos] == '-' || body[pos] == '+')) {
        expNeg = body[pos] == '-';
        ++pos;
      }
      std::string expDigits;
      while (pos < body.size() && std::isdigit(static_cast<unsigned char>(body[pos]))) {
        expDigits.push_back(body[pos]);
        ++pos;
      }
      if (expDigits.empty() || pos != body.size()) return false;
      exp = std::stoi(expDigits);
      if (expNeg) exp = -exp;
    }
  } else if (digits.empty()) {
    return false;
  }
  if (negative) coeff = -coeff;
  *acc += LaurentPoly::monomial(coeff, exp);
  return true;
}

}  // namespace

std::optional<LaurentPoly> LaurentPoly::parse(std::string_view text) {
  // Strip whitespace; separators are the +/- signs at top level. The only
  // other '-' in the grammar follows '^' inside an exponent.
  std::string s;
  s.reserve(text.size());
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) return std::nullopt;
  if (s == "0") return LaurentPoly();
  LaurentPoly acc;
  std::size_t pos = 0;
  bool negative = false;
  if (s[0] == '-') {
    negative = true;
    pos = 1;
  } else if (s[0] == '+') {
    pos = 1;
  }
  std::string body;
  bool afterCaret = false;
  for (; pos <= s.size(); ++pos) {
    const bool atEnd = pos == s.size();
    char ch = atEnd ? '\0' : s[pos];
    if (!atEnd && (ch == '+' || ch == '-') && !afterCaret) {
      if (!parseTerm(body, negative, &acc)) return std::nullopt;
      body.clear();
      negative = ch == '-';
      continue;
    }
    if (atEnd) {
      if (!parseTerm(body, negative, &acc)) return std::nullopt;
      break;
    }
    afterCaret = ch == '^';
    body.push_back(ch);
  }
  return acc;
}

LaurentPoly qint(int n) {
  if (n == 0) return LaurentPoly();
  if (n < 0) return -qint(-n);
  LaurentPoly r;
  for (int e = n - 1; e >= -(n - 1); e -= 2) r += LaurentPoly::q(e);
  return r;
}

LaurentPoly qfact(int n) {
  if (n < 0) throw std::invalid_argument("qfact: negative argument");
  LaurentPoly r(1);
  for (int i = 2; i <= n; ++i) r *= qint(i);
  return r;
}

LaurentPoly qbinom(int n, int k) {
  if (k < 0 || k > n || n < 0) return LaurentPoly();
  static std::map<std::pair<int, int>, LaurentPoly> cache;
  if (k == 0 || k == n) return LaurentPoly(1);
  auto key = std::make_pair(n, k);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  // Balanced Pascal recurrence: [n,k] = q^k [n-1,k] + q^{-(n-k)} [n-1,k-1].
  LaurentPoly r = qbinom(n - 1, k);
  r.mulMonomial(1, k);
  LaurentPoly s = qbinom(n - 1, k - 1);
  s.mulMonomial(1, -(n - k));
  r += s;
  cache.emplace(key, r);
  return r;
}

LaurentPoly alternatingBinomialSum(int N, Sign sign) {
  if (N < 0) throw std::invalid_argument("alternatingBinomialSum: negative N");
  const int dir = sign == Sign::plus ? 1 : -1;
  LaurentPoly acc;
  for (int k = 0; k <= N; ++k) {
    LaurentPoly term = qbinom(N, k);
    term.mulMonomial(k % 2 == 0 ? 1 : -1, dir * (N - 1) * k);
    acc += term;
  }
  return acc;
}

}  // namespace qsl3
