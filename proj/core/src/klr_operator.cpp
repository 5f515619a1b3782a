#include "qsl3/klr.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qsl3 {

Perm identityPerm(int n) {
  Perm w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i;
  return w;
}

bool isIdentityPerm(const Perm& w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] != static_cast<int>(i)) return false;
  return true;
}

Perm composePerm(const Perm& w, const Perm& v) {
  if (w.size() != v.size()) throw std::invalid_argument("composePerm: size mismatch");
  Perm u(v.size());
  for (std::size_t s = 0; s < v.size(); ++s) u[s] = w[static_cast<std::size_t>(v[s])];
  return u;
}

int permSign(const Perm& w) {
  int inv = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

std::vector<int> reducedWordByDescents(Perm v) {
  std::vector<int> word;
  const std::size_t n = v.size();
  while (!isIdentityPerm(v)) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (v[i] > v[i + 1]) {
        word.push_back(static_cast<int>(i));
        std::swap(v[i], v[i + 1]);
        break;
      }
    }
  }
  return word;
}

namespace {

MPoly linearDiff(int nvars, int i, int j) {
  return MPoly::var(nvars, i) - MPoly::var(nvars, j);
}

}  // namespace

RationalCoeff::RationalCoeff(MPoly numerator, std::map<std::pair<int, int>, int> denominator)
    : num_(std::move(numerator)) {
  for (const auto& [key, mult] : denominator) {
    if (mult < 0) throw std::invalid_argument("RationalCoeff: negative multiplicity");
    if (mult == 0) continue;
    auto [i, j] = key;
    if (i == j) throw std::invalid_argument("RationalCoeff: degenerate factor");
    if (i > j) {
      std::swap(i, j);
      if (mult % 2 != 0) num_ = -num_;
    }
    den_[{i, j}] += mult;
  }
  reduce();
}

RationalCoeff RationalCoeff::inverseLinear(int nvars, int i, int j) {
  if (i < 0 || j < 0 || i >= nvars || j >= nvars || i == j)
    throw std::invalid_argument("RationalCoeff::inverseLinear indices");
  MPoly num = MPoly::one(nvars);
  if (i > j) {
    std::swap(i, j);
    num = -num;
  }
  return RationalCoeff(std::move(num), {{{i, j}, 1}});
}

std::optional<MPoly> RationalCoeff::asPolynomial() const {
  if (den_.empty()) return num_;
  return std::nullopt;
}

void RationalCoeff::reduce() {
  if (num_.isZero()) {
    den_.clear();
    return;
  }
  // A nonzero monomial has no (x_i - x_j) factor.
  if (num_.terms().size() == 1) return;
  for (auto it = den_.begin(); it != den_.end();) {
    const auto [i, j] = it->first;
    while (it->second > 0) {
      auto quot = num_.divideByLinearDiff(i, j);
      if (!quot) break;
      num_ = std::move(*quot);
      --it->second;
    }
    it = (it->second == 0) ? den_.erase(it) : std::next(it);
  }
}

void RationalCoeff::addNoReduce(const RationalCoeff& rhs) {
  if (rhs.isZero()) return;
  if (isZero()) {
    *this = rhs;
    return;
  }
  if (nvars() != rhs.nvars()) throw std::invalid_argument("RationalCoeff: nvars mismatch");
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
    if (num_.isZero()) den_.clear();
    return;
  }
  std::map<std::pair<int, int>, int> lcm = den_;
  for (const auto& [key, mult] : rhs.den_) {
    auto [it, inserted] = lcm.try_emplace(key, mult);
    if (!inserted) it->second = std::max(it->second, mult);
  }
  // Assemble each side's missing cofactor as one small polynomial before
  // touching the (typically much larger) numerators.
  MPoly cofA = MPoly::one(nvars());
  MPoly cofB = MPoly::one(nvars());
  for (const auto& [key, mult] : lcm) {
    const auto myIt = den_.find(key);
    const auto rhsIt = rhs.den_.find(key);
    const int extraA = mult - (myIt == den_.end() ? 0 : myIt->second);
    const int extraB = mult - (rhsIt == rhs.den_.end() ? 0 : rhsIt->second);
    if (extraA == 0 && extraB == 0) continue;
    const MPoly lin = linearDiff(nvars(), key.first, key.second);
    for (int k = 0; k < extraA; ++k) cofA = cofA * lin;
    for (int k = 0; k < extraB; ++k) cofB = cofB * lin;
  }
  if (!cofA.isOne()) num_ = num_ * cofA;
  if (cofB.isOne()) {
    num_ += rhs.num_;
  } else {
    num_ += rhs.num_ * cofB;
  }
  den_ = std::move(lcm);
  if (num_.isZero()) den_.clear();
}

RationalCoeff RationalCoeff::timesNoReduce(const RationalCoeff& a, const RationalCoeff& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("RationalCoeff: nvars mismatch");
  RationalCoeff r(a.num_ * b.num_);
  if (r.num_.isZero()) return r;
  r.den_ = a.den_;
  for (const auto& [key, mult] : b.den_) r.den_[key] += mult;
  return r;
}

RationalCoeff& RationalCoeff::operator+=(const RationalCoeff& rhs) {
  addNoReduce(rhs);
  reduce();
  return *this;
}

RationalCoeff operator*(const RationalCoeff& a, const RationalCoeff& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("RationalCoeff: nvars mismatch");
  std::map<std::pair<int, int>, int> den = a.den_;
  for (const auto& [key, mult] : b.den_) den[key] += mult;
  return RationalCoeff(a.num_ * b.num_, std::move(den));
}

RationalCoeff RationalCoeff::operator-() const {
  RationalCoeff r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalCoeff& RationalCoeff::scalePoly(const MPoly& p) {
  num_ = num_ * p;
  reduce();
  return *this;
}

RationalCoeff& RationalCoeff::scaleInt(long c) {
  num_.scale(c);
  if (num_.isZero()) den_.clear();
  return *this;
}

RationalCoeff RationalCoeff::renamed(const Perm& perm) const {
  RationalCoeff r(num_.renameVars(perm));
  for (const auto& [key, mult] : den_) {
    int i = perm[static_cast<std::size_t>(key.first)];
    int j = perm[static_cast<std::size_t>(key.second)];
    if (i > j) {
      std::swap(i, j);
      if (mult % 2 != 0) r.num_ = -r.num_;
    }
    r.den_[{i, j}] += mult;
  }
  // Renaming a reduced fraction stays reduced; no further reduction needed.
  return r;
}

RationalCoeff RationalCoeff::embedded(int newNvars, int offset) const {
  RationalCoeff r(num_.embed(newNvars, offset));
  for (const auto& [key, mult] : den_)
    r.den_[{key.first + offset, key.second + offset}] = mult;
  return r;
}

std::optional<int> RationalCoeff::homogeneousDegree() const {
  int deg = 0;
  if (!num_.isHomogeneous(&deg)) return std::nullopt;
  int denomDeg = 0;
  for (const auto& [key, mult] : den_) denomDeg += mult;
  return deg - denomDeg;
}

std::string RationalCoeff::str() const {
  std::ostringstream out;
  const bool wrapNum = !den_.empty() && num_.terms().size() > 1;
  if (wrapNum) out << "(";
  out << num_.str();
  if (wrapNum) out << ")";
  if (!den_.empty()) {
    out << " / ";
    bool first = true;
    for (const auto& [key, mult] : den_) {
      if (!first) out << "*";
      first = false;
      out << "(x" << (key.first + 1) << "-x" << (key.second + 1) << ")";
      if (mult != 1) out << "^" << mult;
    }
  }
  return out.str();
}

DiagramOperator::DiagramOperator(ColorSeq source, ColorSeq target)
    : source_(std::move(source)), target_(std::move(target)) {
  if (source_.size() != target_.size())
    throw std::invalid_argument("DiagramOperator: strand count mismatch");
  ColorSeq a = source_;
  ColorSeq b = target_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) throw std::invalid_argument("DiagramOperator: color multiset mismatch");
}

DiagramOperator DiagramOperator::identity(const ColorSeq& colors) {
  DiagramOperator op(colors, colors);
  op.addTerm(identityPerm(static_cast<int>(colors.size())),
             RationalCoeff::one(static_cast<int>(colors.size())));
  return op;
}

void DiagramOperator::addTerm(const Perm& w, const RationalCoeff& q) {
  if (w.size() != source_.size()) throw std::invalid_argument("addTerm: bijection size");
  if (q.nvars() != strands()) throw std::invalid_argument("addTerm: coefficient arity");
  for (std::size_t s = 0; s < w.size(); ++s) {
    if (w[s] < 0 || w[s] >= strands() || source_[s] != target_[static_cast<std::size_t>(w[s])])
      throw std::invalid_argument("addTerm: bijection does not preserve colors");
  }
  if (q.isZero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, q);
    return;
  }
  it->second += q;
  if (it->second.isZero()) terms_.erase(it);
}

DiagramOperator& DiagramOperator::operator+=(const DiagramOperator& rhs) {
  if (source_ != rhs.source_ || target_ != rhs.target_)
    throw std::invalid_argument("DiagramOperator: boundary mismatch in sum");
  for (const auto& [w, q] : rhs.terms_) addTerm(w, q);
  return *this;
}

DiagramOperator& DiagramOperator::operator-=(const DiagramOperator& rhs) {
  if (source_ != rhs.source_ || target_ != rhs.target_)
    throw std::invalid_argument("DiagramOperator: boundary mismatch in difference");
  for (const auto& [w, q] : rhs.terms_) addTerm(w, -q);
  return *this;
}

DiagramOperator DiagramOperator::operator-() const {
  DiagramOperator r(source_, target_);
  for (const auto& [w, q] : terms_) r.terms_.emplace(w, -q);
  return r;
}

DiagramOperator& DiagramOperator::scale(long c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, q] : terms_) q.scaleInt(c);
  return *this;
}

DiagramOperator& DiagramOperator::scalePoly(const MPoly& p) {
  if (p.isZero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, q] : terms_) q.scalePoly(p);
  return *this;
}

RationalCoeff DiagramOperator::apply(const MPoly& f) const {
  if (f.nvars() != strands()) throw std::invalid_argument("apply: arity mismatch");
  RationalCoeff out(strands());
  for (const auto& [w, q] : terms_) {
    RationalCoeff moved(f.renameVars(w));
    out.addNoReduce(RationalCoeff::timesNoReduce(q, moved));
  }
  out.reduce();
  return out;
}

std::string DiagramOperator::str() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < source_.size(); ++i) out << source_[i];
  out << " -> ";
  for (std::size_t i = 0; i < target_.size(); ++i) out << target_[i];
  out << "]";
  if (terms_.empty()) {
    out << " 0";
    return out.str();
  }
  for (const auto& [w, q] : terms_) {
    out << "\n  (";
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i > 0) out << " ";
      out << w[i];
    }
    out << ") : " << q.str();
  }
  return out.str();
}

DiagramOperator compose(const DiagramOperator& f, const DiagramOperator& g) {
  if (g.target() != f.source())
    throw std::invalid_argument("compose: interface mismatch");
  DiagramOperator r(g.source(), f.target());
  // Accumulate the pairwise products per composed bijection without
  // canonicalizing, then reduce every slot once: dense operators funnel
  // hundreds of products into each slot, and reducing the partial sums
  // after each one is quadratic in the accumulated numerator size.
  std::map<Perm, RationalCoeff> slots;
  Perm u(static_cast<std::size_t>(f.strands()));
  for (const auto& [w, qw] : f.terms()) {
    for (const auto& [v, pv] : g.terms()) {
      RationalCoeff prod = RationalCoeff::timesNoReduce(qw, pv.renamed(w));
      if (prod.isZero()) continue;
      for (std::size_t s = 0; s < v.size(); ++s) u[s] = w[static_cast<std::size_t>(v[s])];
      auto it = slots.find(u);
      if (it == slots.end()) {
        slots.emplace(u, std::move(prod));
      } else {
        it->second.addNoReduce(prod);
      }
    }
  }
  for (auto it = slots.begin(); it != slots.end();) {
    it->second.reduce();
    it = it->second.isZero() ? slots.erase(it) : std::next(it);
  }
  // Color preservation of every slot follows from the two factors, so the
  // reduced slots are valid terms as they stand.
  r.terms_ = std::move(slots);
  return r;
}

DiagramOperator tensor(const DiagramOperator& f, const DiagramOperator& g) {
  const int nf = f.strands();
  const int ng = g.strands();
  const int n = nf + ng;
  ColorSeq source = f.source();
  source.insert(source.end(), g.source().begin(), g.source().end());
  ColorSeq target = f.target();
  target.insert(target.end(), g.target().begin(), g.target().end());
  DiagramOperator r(std::move(source), std::move(target));
  Perm u(static_cast<std::size_t>(n));
  for (const auto& [w, qw] : f.terms()) {
    const RationalCoeff qwWide = qw.embedded(n, 0);
    for (const auto& [v, pv] : g.terms()) {
      for (int s = 0; s < nf; ++s) u[static_cast<std::size_t>(s)] = w[static_cast<std::size_t>(s)];
      for (int s = 0; s < ng; ++s)
        u[static_cast<std::size_t>(nf + s)] = nf + v[static_cast<std::size_t>(s)];
      // The factors live in disjoint variable blocks and each block's
      // denominator factors are prime there, so the product of two reduced
      // coefficients is reduced; the block bijections also juxtapose
      // injectively, making every slot fresh.
      r.terms_.emplace(u, RationalCoeff::timesNoReduce(qwWide, pv.embedded(n, nf)));
    }
  }
  return r;
}

DiagramOperator dotOp(const ColorSeq& colors, int k) {
  const int n = static_cast<int>(colors.size());
  if (k < 1 || k > n) throw std::out_of_range("dotOp strand index");
  DiagramOperator op(colors, colors);
  op.addTerm(identityPerm(n), RationalCoeff(MPoly::var(n, k - 1)));
  return op;
}

DiagramOperator crossingOp(const ColorSeq& colors, int k) {
  const int n = static_cast<int>(colors.size());
  if (k < 1 || k >= n) throw std::out_of_range("crossingOp strand index");
  const int i = k - 1;
  const int ci = colors[static_cast<std::size_t>(i)];
  const int cj = colors[static_cast<std::size_t>(i + 1)];
  ColorSeq target = colors;
  std::swap(target[static_cast<std::size_t>(i)], target[static_cast<std::size_t>(i + 1)]);
  DiagramOperator op(colors, target);
  Perm s = identityPerm(n);
  std::swap(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(i + 1)]);
  if (ci == cj) {
    const RationalCoeff inv = RationalCoeff::inverseLinear(n, i, i + 1);
    op.addTerm(identityPerm(n), inv);
    op.addTerm(s, -inv);
  } else if (ci == 1 && cj == 2) {
    op.addTerm(s, RationalCoeff::one(n));
  } else if (ci == 2 && cj == 1) {
    op.addTerm(s, RationalCoeff(MPoly::var(n, i) + MPoly::var(n, i + 1)));
  } else {
    throw std::invalid_argument("crossingOp: colors must be 1 or 2");
  }
  return op;
}

std::optional<int> rawDegree(const DiagramOperator& op) {
  if (op.isZero()) return 0;
  std::optional<int> deg;
  for (const auto& [w, q] : op.terms()) {
    const auto d = q.homogeneousDegree();
    if (!d) return std::nullopt;
    if (!deg) {
      deg = *d;
    } else if (*deg != *d) {
      return std::nullopt;
    }
  }
  return 2 * *deg;
}

}  // namespace qsl3
