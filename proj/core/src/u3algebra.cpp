#include "qsl3/u3algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qsl3 {

std::pair<int, LaurentPoly> mergeSameColor(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("mergeSameColor: negative exponent");
  return {a + b, qbinom(a + b, a)};
}

std::pair<Monomial, LaurentPoly> Monomial::fromLetters(
    const std::vector<std::pair<int, int>>& letters) {
  Monomial word;
  LaurentPoly coeff(1);
  for (const auto& [color, exp] : letters) {
    if (color != 1 && color != 2) throw std::invalid_argument("Monomial: color must be 1 or 2");
    if (exp < 0) throw std::invalid_argument("Monomial: negative exponent");
    if (exp == 0) continue;
    if (!word.letters_.empty() && word.letters_.back().first == color) {
      auto [merged, factor] = mergeSameColor(word.letters_.back().second, exp);
      word.letters_.back().second = merged;
      coeff *= factor;
    } else {
      word.letters_.emplace_back(color, exp);
    }
  }
  return {word, coeff};
}

int Monomial::exponentSum() const {
  int s = 0;
  for (const auto& [color, exp] : letters_) s += exp;
  return s;
}

std::string Monomial::str() const {
  if (letters_.empty()) return "1^0";
  std::ostringstream out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i > 0) out << " ";
    out << letters_[i].first << "^" << letters_[i].second;
  }
  return out.str();
}

CanonicalElem CanonicalElem::make(int lead, int a, int b, int c) {
  if (lead != 1 && lead != 2) throw std::invalid_argument("CanonicalElem: lead must be 1 or 2");
  if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("CanonicalElem: negative exponent");
  if (b < a + c) throw std::invalid_argument("CanonicalElem: requires b >= a+c");
  CanonicalElem e;
  if (b == a + c && lead == 2) {
    // Boundary identification: the two presentations are equal; store lead 1.
    e.lead_ = 1;
    e.a_ = c;
    e.b_ = b;
    e.c_ = a;
  } else {
    e.lead_ = lead;
    e.a_ = a;
    e.b_ = b;
    e.c_ = c;
  }
  if (e.b_ == 0) e.lead_ = 1;  // the unit has a single stored form
  return e;
}

std::optional<CanonicalElem> CanonicalElem::fromWord(const Monomial& word) {
  const auto& ls = word.letters();
  switch (ls.size()) {
    case 0:
      return make(1, 0, 0, 0);
    case 1:
      return make(ls[0].first, 0, ls[0].second, 0);
    case 2: {
      const auto [i, x] = ls[0];
      const auto [j, y] = ls[1];
      if (y >= x) return make(j, x, y, 0);
      return make(i, 0, x, y);
    }
    case 3: {
      const auto [i, x] = ls[0];
      const auto [j, y] = ls[1];
      const auto z = ls[2].second;
      if (y >= x + z) return make(j, x, y, z);
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

Monomial CanonicalElem::word() const {
  const int other = 3 - lead_;
  auto [w, coeff] = Monomial::fromLetters({{other, a_}, {lead_, b_}, {other, c_}});
  return w;
}

AlgElem serreRewrite(int a, int b, int c, int lead) {
  if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("serreRewrite: negative exponent");
  if (b > a + c) throw std::invalid_argument("serreRewrite: requires b <= a+c");
  if (lead != 1 && lead != 2) throw std::invalid_argument("serreRewrite: lead must be 1 or 2");
  const int other = 3 - lead;
  AlgElem out;
  for (int p = std::max(0, b - a); p <= std::min(c, b); ++p) {
    const int r = b - p;
    auto [word, factor] = Monomial::fromLetters({{other, p}, {lead, a + c}, {other, r}});
    LaurentPoly coeff = qbinom(a + c - b, c - p);
    coeff *= factor;
    out.add(word, coeff);
  }
  return out;
}

namespace {

enum class Scan { leftmost, rightmost };

CanonExpansion canonicalizeWord(const Monomial& word, Scan scan,
                                std::map<Monomial, CanonExpansion>* cache) {
  if (auto it = cache->find(word); it != cache->end()) return it->second;
  CanonExpansion result;
  if (auto canon = CanonicalElem::fromWord(word)) {
    result = CanonExpansion(*canon);
  } else {
    const auto& ls = word.letters();
    const int n = static_cast<int>(ls.size());
    // A rewritable window is three consecutive letters (i,x)(j,y)(i,z) with
    // y < x+z. One always exists here: fromWord failed, so either the word
    // has length 3 with a strict window, or length >= 4, where two adjacent
    // windows cannot both be dominant.
    int t = -1;
    if (scan == Scan::leftmost) {
      for (int k = 0; k + 2 < n; ++k) {
        if (ls[k + 1].second < ls[k].second + ls[k + 2].second) {
          t = k;
          break;
        }
      }
    } else {
      for (int k = n - 3; k >= 0; --k) {
        if (ls[k + 1].second < ls[k].second + ls[k + 2].second) {
          t = k;
          break;
        }
      }
    }
    if (t < 0) throw std::logic_error("canonicalize: no rewritable window found");
    AlgElem replaced = serreRewrite(ls[t].second, ls[t + 1].second, ls[t + 2].second, ls[t].first);
    for (const auto& [mid, coeff] : replaced.terms()) {
      std::vector<std::pair<int, int>> spliced(ls.begin(), ls.begin() + t);
      spliced.insert(spliced.end(), mid.letters().begin(), mid.letters().end());
      spliced.insert(spliced.end(), ls.begin() + t + 3, ls.end());
      auto [next, factor] = Monomial::fromLetters(spliced);
      CanonExpansion sub = canonicalizeWord(next, scan, cache);
      sub.scale(coeff * factor);
      result += sub;
    }
  }
  cache->emplace(word, result);
  return result;
}

std::map<Monomial, CanonExpansion>& leftmostCache() {
  static std::map<Monomial, CanonExpansion> cache;
  return cache;
}

}  // namespace

CanonExpansion canonicalize(const Monomial& word) {
  return canonicalizeWord(word, Scan::leftmost, &leftmostCache());
}

CanonExpansion canonicalizeRightmost(const Monomial& word) {
  std::map<Monomial, CanonExpansion> cache;  // deliberately unshared
  return canonicalizeWord(word, Scan::rightmost, &cache);
}

CanonExpansion canonicalize(const AlgElem& v) {
  CanonExpansion out;
  for (const auto& [word, coeff] : v.terms()) {
    CanonExpansion part = canonicalize(word);
    part.scale(coeff);
    out += part;
  }
  return out;
}

AlgElem canonicalToAlg(const CanonExpansion& v) {
  AlgElem out;
  for (const auto& [elem, coeff] : v.terms()) out.add(elem.word(), coeff);
  return out;
}

CanonExpansion multiply(const AlgElem& u, const AlgElem& v) {
  AlgElem product;
  for (const auto& [wu, cu] : u.terms()) {
    for (const auto& [wv, cv] : v.terms()) {
      std::vector<std::pair<int, int>> concat = wu.letters();
      concat.insert(concat.end(), wv.letters().begin(), wv.letters().end());
      auto [word, factor] = Monomial::fromLetters(concat);
      product.add(word, cu * cv * factor);
    }
  }
  return canonicalize(product);
}

CanonExpansion higherSerreSum(int m, int n, Sign sign, int lead) {
  if (!(m > n && n > 0)) throw std::invalid_argument("higherSerreSum: requires m > n > 0");
  if (lead != 1 && lead != 2) throw std::invalid_argument("higherSerreSum: lead must be 1 or 2");
  const int other = 3 - lead;
  const int dir = sign == Sign::plus ? 1 : -1;
  AlgElem acc;
  for (int r = 0; r <= m; ++r) {
    auto [word, factor] = Monomial::fromLetters({{lead, m - r}, {other, n}, {lead, r}});
    LaurentPoly coeff = LaurentPoly::q(dir * (m - n - 1) * r);
    if (r % 2 == 1) coeff = -coeff;
    acc.add(word, coeff * factor);
  }
  return canonicalize(acc);
}

}  // namespace qsl3
