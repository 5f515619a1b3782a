#include "qsl3/thick.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace qsl3 {

ColorSeq explode(const ThickWord& word) {
  ColorSeq out;
  for (const ThickEdge& e : word) {
    if (e.thickness < 0) throw std::invalid_argument("explode: negative thickness");
    for (int i = 0; i < e.thickness; ++i) out.push_back(e.color);
  }
  return out;
}

DiagramOperator idempotentE(int color, int n) {
  if (color != 1 && color != 2) throw std::invalid_argument("idempotentE: color");
  if (n < 0) throw std::invalid_argument("idempotentE: thickness");
  static std::map<std::pair<int, int>, DiagramOperator> cache;
  static std::mutex mutex;
  const std::pair<int, int> key{color, n};
  {
    std::scoped_lock lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const ColorSeq colors(static_cast<std::size_t>(n), color);
  DiagramOperator op(colors, colors);
  // Antisymmetrization form: term w has coefficient sgn(w) x^delta / Delta
  // with delta = (n-1, n-2, ..., 0) and Delta the product of all (x_i - x_j).
  std::vector<int> delta(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) delta[static_cast<std::size_t>(i)] = n - 1 - i;
  std::map<std::pair<int, int>, int> denom;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) denom[{i, j}] = 1;
  Perm w = identityPerm(n);
  do {
    MPoly num = MPoly::monomial(delta, permSign(w));
    op.addTerm(w, RationalCoeff(std::move(num), denom));
  } while (std::next_permutation(w.begin(), w.end()));
  std::scoped_lock lock(mutex);
  return cache.try_emplace(key, std::move(op)).first->second;
}

DiagramOperator idOn(const ThickWord& word) {
  DiagramOperator acc = DiagramOperator::identity({});
  for (const ThickEdge& e : word) acc = tensor(acc, idempotentE(e.color, e.thickness));
  return acc;
}

namespace {

/// Composition of same-color elementary crossings realizing the divided
/// difference of v (0-based one-line form), applied under nothing else.
DiagramOperator demazureOf(const ColorSeq& colors, const Perm& v) {
  DiagramOperator acc = DiagramOperator::identity(colors);
  for (int pos : reducedWordByDescents(v)) acc = compose(crossingOp(colors, pos + 1), acc);
  return acc;
}

/// One-line permutation moving the first p strands past the remaining q.
Perm blockSwapPerm(int p, int q) {
  Perm v(static_cast<std::size_t>(p + q));
  for (int i = 0; i < p; ++i) v[static_cast<std::size_t>(i)] = q + i;
  for (int i = p; i < p + q; ++i) v[static_cast<std::size_t>(i)] = i - p;
  return v;
}

}  // namespace

DiagramOperator splitOp(int color, int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("splitOp: thickness >= 1 required");
  static std::map<std::tuple<int, int, int>, DiagramOperator> cache;
  static std::mutex mutex;
  const std::tuple<int, int, int> key{color, a, b};
  {
    std::scoped_lock lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const ColorSeq colors(static_cast<std::size_t>(a + b), color);
  // v sends the first b positions past the last a, so that the divided
  // difference of v separates the block into an (a, b)-shuffle component.
  Perm v(static_cast<std::size_t>(a + b));
  for (int i = 0; i < b; ++i) v[static_cast<std::size_t>(i)] = a + i;
  for (int i = b; i < a + b; ++i) v[static_cast<std::size_t>(i)] = i - b;
  DiagramOperator op = compose(demazureOf(colors, v), idempotentE(color, a + b));
  op = compose(tensor(idempotentE(color, a), idempotentE(color, b)), op);
  std::scoped_lock lock(mutex);
  return cache.try_emplace(key, std::move(op)).first->second;
}

DiagramOperator mergeOp(int color, int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("mergeOp: thickness >= 1 required");
  static std::map<std::tuple<int, int, int>, DiagramOperator> cache;
  static std::mutex mutex;
  const std::tuple<int, int, int> key{color, a, b};
  {
    std::scoped_lock lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  DiagramOperator op = compose(idempotentE(color, a + b),
                               tensor(idempotentE(color, a), idempotentE(color, b)));
  std::scoped_lock lock(mutex);
  return cache.try_emplace(key, std::move(op)).first->second;
}

DiagramOperator schurLabelOp(int color, int t, const Partition& alpha) {
  if (t < 1) throw std::invalid_argument("schurLabelOp: thickness >= 1 required");
  static std::map<std::tuple<int, int, Partition>, DiagramOperator> cache;
  static std::mutex mutex;
  const std::tuple<int, int, Partition> key{color, t, alpha};
  {
    std::scoped_lock lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  DiagramOperator decorated = idempotentE(color, t);
  decorated.scalePoly(schurPolynomialEval(alpha, t));
  DiagramOperator op = compose(idempotentE(color, t), decorated);
  std::scoped_lock lock(mutex);
  return cache.try_emplace(key, std::move(op)).first->second;
}

DiagramOperator thickCrossingOp(ThickEdge p, ThickEdge q) {
  if (p.thickness < 1 || q.thickness < 1)
    throw std::invalid_argument("thickCrossingOp: thickness >= 1 required");
  static std::map<std::pair<ThickEdge, ThickEdge>, DiagramOperator> cache;
  static std::mutex mutex;
  const std::pair<ThickEdge, ThickEdge> key{p, q};
  {
    std::scoped_lock lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  // Braid the first block past the second one elementary crossing at a
  // time, tracking the color sequence as strands move.
  ColorSeq colors = explode({p, q});
  DiagramOperator acc = DiagramOperator::identity(colors);
  for (int pos : reducedWordByDescents(blockSwapPerm(p.thickness, q.thickness))) {
    acc = compose(crossingOp(acc.target(), pos + 1), acc);
  }
  acc = compose(acc, tensor(idempotentE(p.color, p.thickness),
                            idempotentE(q.color, q.thickness)));
  acc = compose(tensor(idempotentE(q.color, q.thickness),
                       idempotentE(p.color, p.thickness)),
                acc);
  std::scoped_lock lock(mutex);
  return cache.try_emplace(key, std::move(acc)).first->second;
}

namespace {

/// Boundary grading constant of a thick word: the internal shifts of its
/// edges plus a color-inversion count. The polynomial action splits the
/// degree of the two adjacent-color crossing directions as 0 and 2 rather
/// than 1 and 1; grading each word by the number of out-of-order color
/// pairs (weighted by thickness) restores per-generator homogeneity. The
/// correction telescopes under composition and, because operators preserve
/// the color multiset, is additive under tensoring.
int boundaryShift(const ThickWord& word) {
  int shift = 0;
  for (std::size_t k = 0; k < word.size(); ++k) {
    shift += internalShift(word[k].thickness);
    for (std::size_t l = k + 1; l < word.size(); ++l) {
      if (word[k].color > word[l].color) shift += word[k].thickness * word[l].thickness;
    }
  }
  return shift;
}

}  // namespace

std::optional<int> effectiveDegree(const DiagramOperator& op, const ThickWord& source,
                                   const ThickWord& target) {
  const auto raw = rawDegree(op);
  if (!raw) return std::nullopt;
  return *raw + boundaryShift(target) - boundaryShift(source);
}

ThickDiagram ThickDiagram::ident(ThickEdge e) {
  ThickDiagram d;
  d.kind_ = Kind::identity;
  d.p_ = e;
  return d;
}

ThickDiagram ThickDiagram::schur(ThickEdge e, Partition alpha) {
  ThickDiagram d;
  d.kind_ = Kind::schur;
  d.p_ = e;
  d.label_ = std::move(alpha);
  return d;
}

ThickDiagram ThickDiagram::crossing(ThickEdge p, ThickEdge q) {
  ThickDiagram d;
  d.kind_ = Kind::crossing;
  d.p_ = p;
  d.q_ = q;
  return d;
}

ThickDiagram ThickDiagram::split(int color, int a, int b) {
  ThickDiagram d;
  d.kind_ = Kind::split;
  d.p_ = {color, a};
  d.q_ = {color, b};
  return d;
}

ThickDiagram ThickDiagram::merge(int color, int a, int b) {
  ThickDiagram d;
  d.kind_ = Kind::merge;
  d.p_ = {color, a};
  d.q_ = {color, b};
  return d;
}

ThickDiagram ThickDiagram::horizontal(std::vector<ThickDiagram> children) {
  ThickDiagram d;
  d.kind_ = Kind::horizontal;
  d.children_ = std::move(children);
  return d;
}

ThickDiagram ThickDiagram::vertical(std::vector<ThickDiagram> children) {
  if (children.empty()) throw std::invalid_argument("vertical composition needs a factor");
  ThickDiagram d;
  d.kind_ = Kind::vertical;
  d.children_ = std::move(children);
  return d;
}

ThickDiagram ThickDiagram::scaled(long factor, ThickDiagram child) {
  ThickDiagram d;
  d.kind_ = Kind::scaled;
  d.factor_ = factor;
  d.children_.push_back(std::move(child));
  return d;
}

ThickWord ThickDiagram::source() const {
  switch (kind_) {
    case Kind::identity:
    case Kind::schur:
      return {p_};
    case Kind::crossing:
      return {p_, q_};
    case Kind::split:
      return {{p_.color, p_.thickness + q_.thickness}};
    case Kind::merge:
      return {p_, q_};
    case Kind::horizontal: {
      ThickWord w;
      for (const auto& c : children_) {
        ThickWord cw = c.source();
        w.insert(w.end(), cw.begin(), cw.end());
      }
      return w;
    }
    case Kind::vertical:
      return children_.front().source();
    case Kind::scaled:
      return children_.front().source();
  }
  throw std::logic_error("unreachable");
}

ThickWord ThickDiagram::target() const {
  switch (kind_) {
    case Kind::identity:
    case Kind::schur:
      return {p_};
    case Kind::crossing:
      return {q_, p_};
    case Kind::split:
      return {p_, q_};
    case Kind::merge:
      return {{p_.color, p_.thickness + q_.thickness}};
    case Kind::horizontal: {
      ThickWord w;
      for (const auto& c : children_) {
        ThickWord cw = c.target();
        w.insert(w.end(), cw.begin(), cw.end());
      }
      return w;
    }
    case Kind::vertical:
      return children_.back().target();
    case Kind::scaled:
      return children_.front().target();
  }
  throw std::logic_error("unreachable");
}

int ThickDiagram::combinatorialDegree() const {
  switch (kind_) {
    case Kind::identity:
      return 0;
    case Kind::schur:
      return 2 * static_cast<int>(label_.size());
    case Kind::crossing:
      return (p_.color == q_.color ? -2 : 1) * p_.thickness * q_.thickness;
    case Kind::split:
    case Kind::merge:
      return -p_.thickness * q_.thickness;
    case Kind::horizontal:
    case Kind::vertical: {
      int total = 0;
      for (const auto& c : children_) total += c.combinatorialDegree();
      return total;
    }
    case Kind::scaled:
      return children_.front().combinatorialDegree();
  }
  throw std::logic_error("unreachable");
}

std::string ThickDiagram::str() const {
  std::ostringstream out;
  switch (kind_) {
    case Kind::identity:
      out << "(id " << p_.color << " " << p_.thickness << ")";
      break;
    case Kind::schur: {
      out << "(schur " << p_.color << " " << p_.thickness << " (";
      bool first = true;
      for (int part : label_.parts()) {
        if (!first) out << " ";
        first = false;
        out << part;
      }
      out << "))";
      break;
    }
    case Kind::crossing:
      out << "(cross " << p_.color << " " << p_.thickness << " " << q_.color << " "
          << q_.thickness << ")";
      break;
    case Kind::split:
      out << "(split " << p_.color << " " << p_.thickness << " " << q_.thickness << ")";
      break;
    case Kind::merge:
      out << "(merge " << p_.color << " " << p_.thickness << " " << q_.thickness << ")";
      break;
    case Kind::horizontal:
    case Kind::vertical: {
      out << (kind_ == Kind::horizontal ? "(h" : "(v");
      for (const auto& c : children_) out << " " << c.str();
      out << ")";
      break;
    }
    case Kind::scaled:
      out << "(scale " << factor_ << " " << children_.front().str() << ")";
      break;
  }
  return out.str();
}

DiagramOperator compileThick(const ThickDiagram& d) {
  switch (d.kind()) {
    case ThickDiagram::Kind::identity:
      return idOn({d.edgeP()});
    case ThickDiagram::Kind::schur:
      return schurLabelOp(d.edgeP().color, d.edgeP().thickness, d.label());
    case ThickDiagram::Kind::crossing:
      return thickCrossingOp(d.edgeP(), d.edgeQ());
    case ThickDiagram::Kind::split:
      return splitOp(d.edgeP().color, d.edgeP().thickness, d.edgeQ().thickness);
    case ThickDiagram::Kind::merge:
      return mergeOp(d.edgeP().color, d.edgeP().thickness, d.edgeQ().thickness);
    case ThickDiagram::Kind::horizontal: {
      DiagramOperator acc = DiagramOperator::identity({});
      for (const auto& c : d.children()) acc = tensor(acc, compileThick(c));
      return acc;
    }
    case ThickDiagram::Kind::vertical: {
      DiagramOperator acc = compileThick(d.children().front());
      for (std::size_t i = 1; i < d.children().size(); ++i)
        acc = compose(compileThick(d.children()[i]), acc);
      return acc;
    }
    case ThickDiagram::Kind::scaled: {
      DiagramOperator acc = compileThick(d.children().front());
      acc.scale(d.factor());
      return acc;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace qsl3
