#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "qsl3/u3algebra.hpp"

namespace qsl3::shuffle {

namespace {

/// Symmetrized Cartan pairing on colors {1,2}: i·i = 2, i·j = -1.
int pairing(int i, int j) { return i == j ? 2 : -1; }

int pairingWithWord(const Word& u, int b) {
  int s = 0;
  for (int a : u) s += pairing(a, b);
  return s;
}

ShuffleElem shuffleWords(const Word& u, const Word& v) {
  static std::map<std::pair<Word, Word>, ShuffleElem> cache;
  if (u.empty()) return ShuffleElem(v);
  if (v.empty()) return ShuffleElem(u);
  auto key = std::make_pair(u, v);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  // (a u') sh (b v') = a (u' sh b v') + q^{(a u')·b} b (u sh v').
  const Word uTail(u.begin() + 1, u.end());
  const Word vTail(v.begin() + 1, v.end());
  ShuffleElem out;
  {
    ShuffleElem left = shuffleWords(uTail, v);
    for (const auto& [w, c] : left.terms()) {
      Word prefixed;
      prefixed.reserve(w.size() + 1);
      prefixed.push_back(u.front());
      prefixed.insert(prefixed.end(), w.begin(), w.end());
      out.add(prefixed, c);
    }
  }
  {
    ShuffleElem right = shuffleWords(u, vTail);
    const LaurentPoly braid = LaurentPoly::q(pairingWithWord(u, v.front()));
    for (const auto& [w, c] : right.terms()) {
      Word prefixed;
      prefixed.reserve(w.size() + 1);
      prefixed.push_back(v.front());
      prefixed.insert(prefixed.end(), w.begin(), w.end());
      out.add(prefixed, c * braid);
    }
  }
  cache.emplace(std::move(key), out);
  return out;
}

ShuffleElem dividedPowerImage(int color, int exp) {
  static std::map<std::pair<int, int>, ShuffleElem> cache;
  auto key = std::make_pair(color, exp);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  ShuffleElem acc{Word{}};
  const ShuffleElem letter{Word{color}};
  for (int k = 0; k < exp; ++k) acc = shuffleProduct(acc, letter);
  // Divided power: divide the shuffle power by [exp]! exactly.
  const LaurentPoly denom = qfact(exp);
  ShuffleElem normalized;
  for (const auto& [w, c] : acc.terms()) {
    auto q = c.divideExact(denom);
    if (!q) throw std::logic_error("shuffle oracle: [a]! does not divide the shuffle power");
    normalized.add(w, *q);
  }
  cache.emplace(std::move(key), normalized);
  return normalized;
}

ShuffleElem imageOfWord(const Monomial& word) {
  static std::map<Monomial, ShuffleElem> cache;
  if (auto it = cache.find(word); it != cache.end()) return it->second;
  ShuffleElem acc{Word{}};
  for (const auto& [color, exp] : word.letters())
    acc = shuffleProduct(acc, dividedPowerImage(color, exp));
  cache.emplace(word, acc);
  return acc;
}

/// One-time oracle calibration: the quantum Serre element must map to zero.
void calibrateOnce() {
  static std::once_flag flag;
  std::call_once(flag, [] {
    auto [w1, c1] = Monomial::fromLetters({{1, 2}, {2, 1}});
    auto [w2, c2] = Monomial::fromLetters({{2, 1}, {1, 2}});
    auto [w3, c3] = Monomial::fromLetters({{1, 1}, {2, 1}, {1, 1}});
    ShuffleElem total = imageOfWord(w1);
    total += imageOfWord(w2);
    ShuffleElem cross = imageOfWord(w3);
    cross.scale(-LaurentPoly(1));
    total += cross;
    if (!total.isZero())
      throw std::logic_error("shuffle oracle: Serre element does not map to zero");
  });
}

}  // namespace

ShuffleElem shuffleProduct(const ShuffleElem& u, const ShuffleElem& v) {
  ShuffleElem out;
  for (const auto& [wu, cu] : u.terms()) {
    for (const auto& [wv, cv] : v.terms()) {
      ShuffleElem part = shuffleWords(wu, wv);
      part.scale(cu * cv);
      out += part;
    }
  }
  return out;
}

ShuffleElem shuffleImage(const Monomial& word) {
  calibrateOnce();
  return imageOfWord(word);
}

ShuffleElem shuffleImage(const AlgElem& v) {
  ShuffleElem out;
  for (const auto& [word, coeff] : v.terms()) {
    ShuffleElem part = shuffleImage(word);
    part.scale(coeff);
    out += part;
  }
  return out;
}

ShuffleElem shuffleImage(const CanonExpansion& v) { return shuffleImage(canonicalToAlg(v)); }

}  // namespace qsl3::shuffle
