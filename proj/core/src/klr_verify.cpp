#include "qsl3/verify.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "qsl3/klr.hpp"

namespace qsl3 {

namespace {

// ---------------------------------------------------------------------------
// Formatting helpers
// ---------------------------------------------------------------------------

std::string brief(const DiagramOperator& op) {
  std::string s = op.str();
  constexpr std::size_t kLimit = 400;
  if (s.size() > kLimit) {
    s.resize(kLimit);
    s += " ...";
  }
  return s;
}

std::string diffBrief(const DiagramOperator& lhs, const DiagramOperator& rhs) {
  return "lhs = " + brief(lhs) + " ; rhs = " + brief(rhs);
}

std::string seqStr(const ColorSeq& colors) {
  std::string s;
  for (int c : colors) s += static_cast<char>('0' + c);
  return s;
}

// ---------------------------------------------------------------------------
// Lenient thick builders: thickness-0 edges are silently dropped, so layer
// constructions stay uniform at boundary parameters.
// ---------------------------------------------------------------------------

DiagramOperator splitW(int color, int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("splitW: negative thickness");
  if (a == 0 && b == 0) return DiagramOperator::identity({});
  if (a == 0 || b == 0) return idempotentE(color, a + b);
  return splitOp(color, a, b);
}

DiagramOperator mergeW(int color, int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("mergeW: negative thickness");
  if (a == 0 && b == 0) return DiagramOperator::identity({});
  if (a == 0 || b == 0) return idempotentE(color, a + b);
  return mergeOp(color, a, b);
}

DiagramOperator crossW(ThickEdge p, ThickEdge q) {
  if (p.thickness == 0 && q.thickness == 0) return DiagramOperator::identity({});
  if (p.thickness == 0) return idempotentE(q.color, q.thickness);
  if (q.thickness == 0) return idempotentE(p.color, p.thickness);
  return thickCrossingOp(p, q);
}

DiagramOperator schurW(int color, int t, const Partition& alpha) {
  if (t == 0) {
    if (!alpha.empty())
      throw std::invalid_argument("schurW: label on an absent edge");
    return DiagramOperator::identity({});
  }
  return schurLabelOp(color, t, alpha);
}

DiagramOperator hstack(const std::vector<DiagramOperator>& parts) {
  DiagramOperator acc = DiagramOperator::identity({});
  for (const auto& p : parts) acc = tensor(acc, p);
  return acc;
}

/// Vertical composition, factors listed bottom to top.
DiagramOperator vstack(const std::vector<DiagramOperator>& layers) {
  if (layers.empty()) throw std::invalid_argument("vstack: no layers");
  DiagramOperator acc = layers.front();
  for (std::size_t i = 1; i < layers.size(); ++i) acc = compose(layers[i], acc);
  return acc;
}

ThickWord trimmed(ThickWord word) {
  std::erase_if(word, [](const ThickEdge& e) { return e.thickness == 0; });
  return word;
}

DiagramOperator zeroOp(const ThickWord& source, const ThickWord& target) {
  return DiagramOperator(explode(source), explode(target));
}

DiagramOperator mulPoly(const ColorSeq& colors, const MPoly& p) {
  DiagramOperator op = DiagramOperator::identity(colors);
  op.scalePoly(p);
  return op;
}

MPoly varPow(int nvars, int i, int d) {
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(i)] = d;
  return MPoly::monomial(std::move(e), 1);
}

// ---------------------------------------------------------------------------
// Local relation checks on thin strands
// ---------------------------------------------------------------------------

std::vector<ColorSeq> allColorSeqs(int len) {
  std::vector<ColorSeq> out;
  ColorSeq cur(static_cast<std::size_t>(len), 1);
  std::function<void(int)> rec = [&](int i) {
    if (i == len) {
      out.push_back(cur);
      return;
    }
    for (int c = 1; c <= 2; ++c) {
      cur[static_cast<std::size_t>(i)] = c;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

void checkEqual(Report* report, const std::string& check, const std::string& params,
                const DiagramOperator& lhs, const DiagramOperator& rhs) {
  const bool ok = lhs == rhs;
  report->add(check, params, ok, ok ? std::nullopt : std::optional(diffBrief(lhs, rhs)));
}

void checkPairRelations(const ColorSeq& colors, int k, Report* report) {
  const int n = static_cast<int>(colors.size());
  const int i = k - 1;
  const DiagramOperator X = crossingOp(colors, k);
  std::ostringstream ps;
  ps << "colors=" << seqStr(colors) << " k=" << k;
  const std::string params = ps.str();
  if (colors[static_cast<std::size_t>(i)] == colors[static_cast<std::size_t>(i + 1)]) {
    checkEqual(report, "relations.double-crossing", params, compose(X, X),
               DiagramOperator(colors, colors));
    const DiagramOperator id = DiagramOperator::identity(colors);
    for (int d = 1; d <= 3; ++d) {
      // sum_{r+s=d-1} x_k^r x_{k+1}^s
      MPoly straighten(n);
      for (int r = 0; r + 1 <= d; ++r) straighten += varPow(n, i, r) * varPow(n, i + 1, d - 1 - r);
      const DiagramOperator expected = mulPoly(colors, straighten);
      const DiagramOperator dotL = mulPoly(colors, varPow(n, i, d));
      const DiagramOperator dotR = mulPoly(colors, varPow(n, i + 1, d));
      std::ostringstream pd;
      pd << params << " d=" << d;
      checkEqual(report, "relations.dot-migration", pd.str(),
                 compose(dotL, X) - compose(X, dotR), expected);
      checkEqual(report, "relations.dot-migration-mirror", pd.str(),
                 compose(X, dotL) - compose(dotR, X), expected);
    }
  } else {
    const DiagramOperator back = crossingOp(X.target(), k);
    checkEqual(report, "relations.r2-adjacent", params, compose(back, X),
               dotOp(colors, k) + dotOp(colors, k + 1));
    checkEqual(report, "relations.dot-slide", params + " side=left",
               compose(X, dotOp(colors, k)), compose(dotOp(X.target(), k + 1), X));
    checkEqual(report, "relations.dot-slide", params + " side=right",
               compose(X, dotOp(colors, k + 1)), compose(dotOp(X.target(), k), X));
  }
}

void checkTripleRelations(const ColorSeq& colors, int k, Report* report) {
  const DiagramOperator X1 = crossingOp(colors, k);
  const DiagramOperator X2 = compose(crossingOp(X1.target(), k + 1), X1);
  const DiagramOperator lhs = compose(crossingOp(X2.target(), k), X2);
  const DiagramOperator Y1 = crossingOp(colors, k + 1);
  const DiagramOperator Y2 = compose(crossingOp(Y1.target(), k), Y1);
  const DiagramOperator rhs = compose(crossingOp(Y2.target(), k + 1), Y2);
  const int c1 = colors[static_cast<std::size_t>(k - 1)];
  const int c2 = colors[static_cast<std::size_t>(k)];
  const int c3 = colors[static_cast<std::size_t>(k + 1)];
  std::ostringstream ps;
  ps << "colors=" << seqStr(colors) << " k=" << k;
  if (c1 == c3 && c1 != c2) {
    checkEqual(report, "relations.braid-adjacent", ps.str(), lhs,
               rhs + DiagramOperator::identity(colors));
  } else if (c1 == c2 && c2 == c3) {
    checkEqual(report, "relations.braid-same", ps.str(), lhs, rhs);
  } else {
    checkEqual(report, "relations.braid-mixed", ps.str(), lhs, rhs);
  }
}

// ---------------------------------------------------------------------------
// Thick identity builders
// ---------------------------------------------------------------------------

DiagramOperator thickR3Lhs(int i, int j, int a, int b, int c) {
  return vstack({
      hstack({crossW({i, a}, {j, c}), idempotentE(i, b)}),
      hstack({idempotentE(j, c), crossW({i, a}, {i, b})}),
      hstack({crossW({j, c}, {i, b}), idempotentE(i, a)}),
  });
}

DiagramOperator thickR3Rhs(int i, int j, int a, int b, int c) {
  DiagramOperator acc = zeroOp({{i, a}, {j, c}, {i, b}}, {{i, b}, {j, c}, {i, a}});
  const int kMax = std::min({a, b, c});
  for (int k = 0; k <= kMax; ++k) {
    const int A = a - k;
    const int B = b - k;
    const int C = c - k;
    const Partition box(std::vector<int>(static_cast<std::size_t>(k), C));
    const auto side = enumerate(k, C);
    for (const Partition& alpha : side) {
      for (const Partition& beta : side) {
        for (const Partition& gamma : side) {
          const long long coeff = multiLR({alpha, beta, gamma}, box);
          if (coeff == 0) continue;
          DiagramOperator term = vstack({
              hstack({splitW(i, k, A), idempotentE(j, c), splitW(i, B, k)}),
              hstack({schurW(i, k, alpha), idempotentE(i, A), schurW(j, c, conjugate(gamma)),
                      idempotentE(i, B), schurW(i, k, beta)}),
              hstack({idempotentE(i, k), idempotentE(i, A), crossW({j, c}, {i, B}),
                      idempotentE(i, k)}),
              hstack({idempotentE(i, k), crossW({i, A}, {i, B}), idempotentE(j, c),
                      idempotentE(i, k)}),
              hstack({idempotentE(i, k), idempotentE(i, B), crossW({i, A}, {j, c}),
                      idempotentE(i, k)}),
              hstack({mergeW(i, k, B), idempotentE(j, c), mergeW(i, A, k)}),
          });
          term.scale(coeff);
          acc += term;
        }
      }
    }
  }
  return acc;
}

}  // namespace

// ---------------------------------------------------------------------------
// Local relations suite
// ---------------------------------------------------------------------------

Report verifyLocalRelations(int maxLen) {
  if (maxLen < 2) throw std::invalid_argument("verifyLocalRelations: maxLen >= 2 required");
  Report report;
  for (int len = 2; len <= maxLen; ++len) {
    for (const ColorSeq& colors : allColorSeqs(len)) {
      for (int k = 1; k < len; ++k) checkPairRelations(colors, k, &report);
      for (int k = 1; k + 1 < len; ++k) checkTripleRelations(colors, k, &report);
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Thick relations suite
// ---------------------------------------------------------------------------

Report verifyThickRelations(int maxThickness) {
  if (maxThickness < 1)
    throw std::invalid_argument("verifyThickRelations: thickness >= 1 required");
  const int mt = maxThickness;
  Report report;

  // Projector idempotency.
  for (int color : {1, 2}) {
    for (int a = 1; a <= 4; ++a) {
      const DiagramOperator e = idempotentE(color, a);
      std::ostringstream ps;
      ps << "color=" << color << " a=" << a;
      checkEqual(&report, "thick.projector-idempotent", ps.str(), compose(e, e), e);
    }
  }

  // The projector on three strands agrees with both composite realizations
  // built from distinct reduced words of the longest permutation.
  {
    const ColorSeq c3(3, 1);
    const auto viaWord = [&](const std::vector<int>& word) {
      DiagramOperator acc = DiagramOperator::identity(c3);
      for (int pos : word) acc = compose(crossingOp(c3, pos), acc);
      acc.scalePoly(MPoly::monomial({2, 1, 0}, 1));
      return acc;
    };
    checkEqual(&report, "thick.projector-reduced-word", "a=3 word=121", viaWord({1, 2, 1}),
               idempotentE(1, 3));
    checkEqual(&report, "thick.projector-reduced-word", "a=3 word=212", viaWord({2, 1, 2}),
               idempotentE(1, 3));
  }

  // Coassociativity of splitters.
  for (int a = 1; a <= mt; ++a) {
    for (int b = 1; b <= mt; ++b) {
      for (int c = 1; c <= mt; ++c) {
        const DiagramOperator lhs =
            compose(tensor(splitOp(1, a, b), idempotentE(1, c)), splitOp(1, a + b, c));
        const DiagramOperator rhs =
            compose(tensor(idempotentE(1, a), splitOp(1, b, c)), splitOp(1, a, b + c));
        std::ostringstream ps;
        ps << "a=" << a << " b=" << b << " c=" << c;
        checkEqual(&report, "thick.coassociativity", ps.str(), lhs, rhs);
      }
    }
  }

  // Pitchfork slides of a split (and of a merge) through a crossing.
  for (const auto& [i, j] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}}) {
    for (int a = 1; a <= mt; ++a) {
      for (int b = 1; b <= mt; ++b) {
        for (int c = 1; c <= mt; ++c) {
          std::ostringstream ps;
          ps << "colors=" << i << j << " a=" << a << " b=" << b << " c=" << c;
          const DiagramOperator splitLhs =
              compose(tensor(idempotentE(j, c), splitOp(i, a, b)),
                      thickCrossingOp({i, a + b}, {j, c}));
          const DiagramOperator splitRhs = vstack({
              tensor(splitOp(i, a, b), idempotentE(j, c)),
              tensor(idempotentE(i, a), thickCrossingOp({i, b}, {j, c})),
              tensor(thickCrossingOp({i, a}, {j, c}), idempotentE(i, b)),
          });
          checkEqual(&report, "thick.pitchfork-split", ps.str(), splitLhs, splitRhs);

          const DiagramOperator mergeLhs =
              compose(thickCrossingOp({j, c}, {i, a + b}),
                      tensor(idempotentE(j, c), mergeOp(i, a, b)));
          const DiagramOperator mergeRhs = vstack({
              tensor(thickCrossingOp({j, c}, {i, a}), idempotentE(i, b)),
              tensor(idempotentE(i, a), thickCrossingOp({j, c}, {i, b})),
              tensor(mergeOp(i, a, b), idempotentE(j, c)),
          });
          checkEqual(&report, "thick.pitchfork-merge", ps.str(), mergeLhs, mergeRhs);
        }
      }
    }
  }

  // Opening a merge-then-split bubble into a crossing between the blocks.
  for (int a = 1; a <= mt; ++a) {
    for (int b = 1; b <= mt; ++b) {
      for (int x = 1; x <= mt; ++x) {
        const DiagramOperator lhs = compose(splitOp(1, b + x, a), mergeOp(1, a + x, b));
        const DiagramOperator rhs = vstack({
            tensor(splitOp(1, x, a), idempotentE(1, b)),
            tensor(idempotentE(1, x), thickCrossingOp({1, a}, {1, b})),
            tensor(mergeOp(1, x, b), idempotentE(1, a)),
        });
        std::ostringstream ps;
        ps << "a=" << a << " b=" << b << " x=" << x;
        checkEqual(&report, "thick.opening", ps.str(), lhs, rhs);
      }
    }
  }

  // Decorated digon evaluation: only the complementary label survives.
  for (int a = 1; a <= mt; ++a) {
    for (int b = 1; b <= mt; ++b) {
      for (const Partition& alpha : enumerate(a, b)) {
        for (const Partition& beta : enumerate(b, a)) {
          const DiagramOperator lhs = vstack({
              splitOp(1, a, b),
              tensor(schurLabelOp(1, a, alpha), schurLabelOp(1, b, beta)),
              mergeOp(1, a, b),
          });
          DiagramOperator want = zeroOp({{1, a + b}}, {{1, a + b}});
          if (beta == hat(alpha, a, b)) {
            want = idempotentE(1, a + b);
            if (beta.size() % 2 != 0) want.scale(-1);
          }
          std::ostringstream ps;
          ps << "a=" << a << " b=" << b << " alpha=" << alpha.str() << " beta=" << beta.str();
          checkEqual(&report, "thick.digon", ps.str(), lhs, want);
        }
      }
    }
  }

  // Digon with an overfull label on one branch collapses to a single label.
  {
    const DiagramOperator lhs = vstack({
        splitOp(1, 1, 1),
        tensor(schurLabelOp(1, 1, Partition({2})), idempotentE(1, 1)),
        mergeOp(1, 1, 1),
    });
    checkEqual(&report, "thick.digon-overfull", "a=1 b=1 alpha=(2)", lhs,
               schurLabelOp(1, 2, Partition({1})));
  }

  // Two labels on one branch of a digon give a skew label on the merged edge.
  for (int a = 1; a <= mt; ++a) {
    for (int b = 1; b <= mt; ++b) {
      for (const Partition& psi : enumerate(a, b)) {
        std::vector<int> innerParts;
        for (int k = 0; k < a; ++k) innerParts.push_back(b - psi.part(a - 1 - k));
        const Partition inner(innerParts);
        for (const Partition& gamma : enumerate(a, b + 2)) {
          const DiagramOperator lhs = vstack({
              splitOp(1, a, b),
              tensor(compose(schurLabelOp(1, a, gamma), schurLabelOp(1, a, psi)),
                     idempotentE(1, b)),
              mergeOp(1, a, b),
          });
          DiagramOperator want = idempotentE(1, a + b);
          want.scalePoly(skewSchurPolynomialEval(gamma, inner, a + b));
          want = compose(idempotentE(1, a + b), want);
          std::ostringstream ps;
          ps << "a=" << a << " b=" << b << " gamma=" << gamma.str() << " psi=" << psi.str();
          checkEqual(&report, "thick.digon-skew", ps.str(), lhs, want);
        }
      }
    }
  }

  // Double block crossing resolves into complementary label pairs.
  for (const auto& [i, j] : std::vector<std::pair<int, int>>{{1, 2}, {2, 1}}) {
    for (int a = 1; a <= mt; ++a) {
      for (int b = 1; b <= mt; ++b) {
        const DiagramOperator lhs =
            compose(thickCrossingOp({j, b}, {i, a}), thickCrossingOp({i, a}, {j, b}));
        DiagramOperator rhs = zeroOp({{i, a}, {j, b}}, {{i, a}, {j, b}});
        for (const Partition& alpha : enumerate(a, b)) {
          rhs += tensor(schurLabelOp(i, a, alpha), schurLabelOp(j, b, hat(alpha, a, b)));
        }
        std::ostringstream ps;
        ps << "colors=" << i << j << " a=" << a << " b=" << b;
        checkEqual(&report, "thick.r2", ps.str(), lhs, rhs);
      }
    }
  }

  // Block braid move with label-resolved correction terms.
  for (const auto& [i, j] : std::vector<std::pair<int, int>>{{1, 2}, {2, 1}}) {
    for (int a = 1; a <= mt; ++a) {
      for (int b = 1; b <= mt; ++b) {
        for (int c = 1; c <= mt; ++c) {
          std::ostringstream ps;
          ps << "colors=" << i << j << " a=" << a << " b=" << b << " c=" << c;
          checkEqual(&report, "thick.r3", ps.str(), thickR3Lhs(i, j, a, b, c),
                     thickR3Rhs(i, j, a, b, c));
        }
      }
    }
  }

  // Degree audit: compiled degree must match the combinatorial count.
  {
    std::vector<ThickDiagram> audits;
    for (int a = 1; a <= mt; ++a) {
      for (int b = 1; b <= mt; ++b) {
        audits.push_back(ThickDiagram::split(1, a, b));
        audits.push_back(ThickDiagram::merge(1, a, b));
        for (const auto& [i, j] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}}) {
          audits.push_back(ThickDiagram::crossing({i, a}, {j, b}));
        }
      }
    }
    for (int t = 1; t <= mt + 1; ++t) {
      for (const Partition& alpha : enumerate(t, 2)) {
        audits.push_back(ThickDiagram::schur({1, t}, alpha));
      }
    }
    for (const ThickDiagram& d : audits) {
      const auto eff = effectiveDegree(compileThick(d), d.source(), d.target());
      const bool ok = eff.has_value() && *eff == d.combinatorialDegree();
      std::ostringstream ce;
      if (!ok) {
        ce << "expected " << d.combinatorialDegree() << ", compiled "
           << (eff ? std::to_string(*eff) : std::string("inhomogeneous"));
      }
      report.add("thick.degree-audit", d.str(), ok,
                 ok ? std::nullopt : std::optional(ce.str()));
    }
  }

  return report;
}

// ---------------------------------------------------------------------------
// Triple-word basis morphisms
// ---------------------------------------------------------------------------

std::vector<TripleLabel> admissibleTripleLabels(int a, int b, int c) {
  std::vector<TripleLabel> out;
  for (int p = std::max(0, b - a); p <= std::min(b, c); ++p) {
    const int r = b - p;
    for (const Partition& alpha : enumerate(c - p, a - r)) out.push_back({p, alpha});
  }
  return out;
}

namespace {

void validateTripleLabel(int a, int b, int c, int p, const Partition& alpha) {
  if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("triple: negative thickness");
  if (p < std::max(0, b - a) || p > std::min(b, c))
    throw std::invalid_argument("triple: inadmissible splitting index");
  if (!alpha.fitsInBox(c - p, a - (b - p)))
    throw std::invalid_argument("triple: label outside its box");
}

using TripleKey = std::tuple<int, int, int, int, Partition>;

}  // namespace

DiagramOperator lambdaOp(int a, int b, int c, int p, const Partition& alpha) {
  validateTripleLabel(a, b, c, p, alpha);
  static std::map<TripleKey, DiagramOperator> cache;
  static std::mutex mutex;
  const TripleKey key{a, b, c, p, alpha};
  {
    std::scoped_lock lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const int r = b - p;
  DiagramOperator op = vstack({
      hstack({idempotentE(2, p), splitW(1, a + c - p, p), idempotentE(2, r)}),
      hstack({crossW({2, p}, {1, a + c - p}), crossW({1, p}, {2, r})}),
      hstack({idempotentE(1, a + c - p), mergeW(2, p, r), idempotentE(1, p)}),
      hstack({splitW(1, a, c - p), idempotentE(2, b), idempotentE(1, p)}),
      hstack({idempotentE(1, a), schurW(1, c - p, alpha), idempotentE(2, b),
              idempotentE(1, p)}),
      hstack({idempotentE(1, a), crossW({1, c - p}, {2, b}), idempotentE(1, p)}),
      hstack({idempotentE(1, a), idempotentE(2, b), mergeW(1, c - p, p)}),
  });
  if ((r * (a + c - r) + alpha.size()) % 2 != 0) op.scale(-1);
  std::scoped_lock lock(mutex);
  return cache.try_emplace(key, std::move(op)).first->second;
}

DiagramOperator sigmaOp(int a, int b, int c, int p, const Partition& alpha) {
  validateTripleLabel(a, b, c, p, alpha);
  static std::map<TripleKey, DiagramOperator> cache;
  static std::mutex mutex;
  const TripleKey key{a, b, c, p, alpha};
  {
    std::scoped_lock lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const int r = b - p;
  const Partition hatAlpha = hat(alpha, c - p, a - r);
  DiagramOperator op = vstack({
      hstack({splitW(1, r, a - r), idempotentE(2, b), idempotentE(1, c)}),
      hstack({idempotentE(1, r), schurW(1, a - r, hatAlpha), idempotentE(2, b),
              idempotentE(1, c)}),
      hstack({idempotentE(1, r), crossW({1, a - r}, {2, b}), idempotentE(1, c)}),
      hstack({idempotentE(1, r), idempotentE(2, b), mergeW(1, a - r, c)}),
      hstack({idempotentE(1, r), splitW(2, p, r), idempotentE(1, a + c - r)}),
      hstack({crossW({1, r}, {2, p}), crossW({2, r}, {1, a + c - r})}),
      hstack({idempotentE(2, p), mergeW(1, r, a + c - r), idempotentE(2, r)}),
  });
  std::scoped_lock lock(mutex);
  return cache.try_emplace(key, std::move(op)).first->second;
}

Report verifySigmaLambda(int a, int b, int c) {
  Report report;
  const auto labels = admissibleTripleLabels(a, b, c);
  const ThickWord tripleWord = trimmed({{1, a}, {2, b}, {1, c}});
  for (const auto& [p, alpha] : labels) {
    const int r = b - p;
    const ThickWord sourceWord = trimmed({{2, p}, {1, a + c}, {2, r}});
    const int expected = 2 * alpha.size() - (c - p) * (a - r);
    std::ostringstream ps;
    ps << "a=" << a << " b=" << b << " c=" << c << " p=" << p << " alpha=" << alpha.str();
    const auto lamDeg =
        effectiveDegree(lambdaOp(a, b, c, p, alpha), sourceWord, tripleWord);
    const bool lamOk = lamDeg && *lamDeg == expected;
    report.add("lemma.lambda-degree", ps.str(), lamOk,
               lamOk ? std::nullopt
                     : std::optional(lamDeg ? "degree " + std::to_string(*lamDeg)
                                            : std::string("inhomogeneous")));
    const auto sigDeg =
        effectiveDegree(sigmaOp(a, b, c, p, alpha), tripleWord, sourceWord);
    const bool sigOk = sigDeg && *sigDeg == -expected;
    report.add("lemma.sigma-degree", ps.str(), sigOk,
               sigOk ? std::nullopt
                     : std::optional(sigDeg ? "degree " + std::to_string(*sigDeg)
                                            : std::string("inhomogeneous")));
  }
  for (const auto& [p, alpha] : labels) {
    for (const auto& [p2, alpha2] : labels) {
      const DiagramOperator comp =
          compose(sigmaOp(a, b, c, p2, alpha2), lambdaOp(a, b, c, p, alpha));
      const bool same = (p == p2 && alpha == alpha2);
      const ThickWord inWord = trimmed({{2, p}, {1, a + c}, {2, b - p}});
      const DiagramOperator want =
          same ? idOn(inWord)
               : zeroOp(inWord, trimmed({{2, p2}, {1, a + c}, {2, b - p2}}));
      std::ostringstream ps;
      ps << "a=" << a << " b=" << b << " c=" << c << " p=" << p << " alpha=" << alpha.str()
         << " p'=" << p2 << " alpha'=" << alpha2.str();
      checkEqual(&report, "lemma.sigma-lambda", ps.str(), comp, want);
    }
  }
  return report;
}

Report verifyIdempotents(int a, int b, int c) {
  Report report;
  const auto labels = admissibleTripleLabels(a, b, c);
  const ThickWord tripleWord = trimmed({{1, a}, {2, b}, {1, c}});
  std::vector<DiagramOperator> projectors;
  projectors.reserve(labels.size());
  for (const auto& [p, alpha] : labels) {
    projectors.push_back(
        compose(lambdaOp(a, b, c, p, alpha), sigmaOp(a, b, c, p, alpha)));
  }
  const auto paramsFor = [&](std::size_t idx) {
    std::ostringstream ps;
    ps << "a=" << a << " b=" << b << " c=" << c << " p=" << labels[idx].p
       << " alpha=" << labels[idx].alpha.str();
    return ps.str();
  };
  for (std::size_t i = 0; i < projectors.size(); ++i) {
    checkEqual(&report, "idem.idempotent", paramsFor(i),
               compose(projectors[i], projectors[i]), projectors[i]);
    for (std::size_t j = 0; j < projectors.size(); ++j) {
      if (i == j) continue;
      checkEqual(&report, "idem.orthogonal", paramsFor(i) + " x " + paramsFor(j),
                 compose(projectors[i], projectors[j]), zeroOp(tripleWord, tripleWord));
    }
  }
  DiagramOperator sum = zeroOp(tripleWord, tripleWord);
  for (const auto& e : projectors) sum += e;
  std::ostringstream ps;
  ps << "a=" << a << " b=" << b << " c=" << c << " count=" << projectors.size();
  checkEqual(&report, "idem.complete", ps.str(), sum, idOn(tripleWord));
  return report;
}

// ---------------------------------------------------------------------------
// Alternating complex
// ---------------------------------------------------------------------------

ThickWord complexObject(int a, int b, int i) {
  if (i < 0 || i > a) throw std::invalid_argument("complexObject: index out of range");
  return trimmed({{1, a - i}, {2, b}, {1, i}});
}

namespace {

/// Peel one thin strand off the left block, carry it right across the middle
/// block, and absorb it into the right block. Maps object i to object i+1.
DiagramOperator rightwardShape(int a, int b, int i, bool dots, int signExp) {
  const int left = a - i - 1;
  const int d = a - b - 1;
  std::vector<DiagramOperator> layers;
  layers.push_back(hstack({splitW(1, left, 1), idempotentE(2, b), idempotentE(1, i)}));
  layers.push_back(
      hstack({idempotentE(1, left), crossW({1, 1}, {2, b}), idempotentE(1, i)}));
  if (dots) {
    layers.push_back(hstack({idempotentE(1, left), idempotentE(2, b),
                             schurLabelOp(1, 1, Partition({d})), idempotentE(1, i)}));
  }
  layers.push_back(hstack({idempotentE(1, left), idempotentE(2, b), mergeW(1, 1, i)}));
  DiagramOperator op = vstack(layers);
  if (signExp % 2 != 0) op.scale(-1);
  return op;
}

/// The mirror image: peel off the right block, carry left, absorb into the
/// left block. Maps object i+1 to object i.
DiagramOperator leftwardShape(int a, int b, int i, bool dots, int signExp) {
  const int left = a - i - 1;
  const int d = a - b - 1;
  std::vector<DiagramOperator> layers;
  layers.push_back(hstack({idempotentE(1, left), idempotentE(2, b), splitW(1, 1, i)}));
  layers.push_back(
      hstack({idempotentE(1, left), crossW({2, b}, {1, 1}), idempotentE(1, i)}));
  if (dots) {
    layers.push_back(hstack({idempotentE(1, left), schurLabelOp(1, 1, Partition({d})),
                             idempotentE(2, b), idempotentE(1, i)}));
  }
  layers.push_back(hstack({mergeW(1, left, 1), idempotentE(2, b), idempotentE(1, i)}));
  DiagramOperator op = vstack(layers);
  if (signExp % 2 != 0) op.scale(-1);
  return op;
}

void validateComplexParams(int a, int b, int i) {
  if (a <= b || b < 1) throw std::invalid_argument("complex: requires a > b >= 1");
  if (i < 0 || i >= a) throw std::invalid_argument("complex: differential index");
}

}  // namespace

DiagramOperator complexDifferential(int a, int b, int i, bool reversed) {
  validateComplexParams(a, b, i);
  if (!reversed) return rightwardShape(a, b, i, /*dots=*/false, /*signExp=*/0);
  return leftwardShape(a, b, i, /*dots=*/false, /*signExp=*/0);
}

DiagramOperator complexHomotopy(int a, int b, int i, bool reversed) {
  validateComplexParams(a, b, i);
  if (!reversed) return leftwardShape(a, b, i, /*dots=*/true, a - 1 - i);
  return rightwardShape(a, b, i, /*dots=*/true, a - 1 - i);
}

Report verifyComplexNullHomotopy(int a, int b, bool reversed) {
  if (a <= b || b < 1)
    throw std::invalid_argument("verifyComplexNullHomotopy: requires a > b >= 1");
  Report report;
  const auto params = [&](int i) {
    std::ostringstream ps;
    ps << "a=" << a << " b=" << b << " i=" << i << (reversed ? " reversed" : "");
    return ps.str();
  };

  std::vector<DiagramOperator> d;
  std::vector<DiagramOperator> h;
  for (int i = 0; i < a; ++i) {
    d.push_back(complexDifferential(a, b, i, reversed));
    h.push_back(complexHomotopy(a, b, i, reversed));
  }

  for (int i = 0; i < a; ++i) {
    const ThickWord lo = complexObject(a, b, i);
    const ThickWord hi = complexObject(a, b, i + 1);
    const auto dDeg = reversed ? effectiveDegree(d[static_cast<std::size_t>(i)], hi, lo)
                               : effectiveDegree(d[static_cast<std::size_t>(i)], lo, hi);
    const bool dOk = dDeg && *dDeg == b - a + 1;
    report.add("complex.d-degree", params(i), dOk,
               dOk ? std::nullopt
                   : std::optional(dDeg ? "degree " + std::to_string(*dDeg)
                                        : std::string("inhomogeneous")));
    const auto hDeg = reversed ? effectiveDegree(h[static_cast<std::size_t>(i)], lo, hi)
                               : effectiveDegree(h[static_cast<std::size_t>(i)], hi, lo);
    const bool hOk = hDeg && *hDeg == a - b - 1;
    report.add("complex.h-degree", params(i), hOk,
               hOk ? std::nullopt
                   : std::optional(hDeg ? "degree " + std::to_string(*hDeg)
                                        : std::string("inhomogeneous")));
  }

  for (int i = 0; i + 1 < a; ++i) {
    const DiagramOperator dd = reversed
                                   ? compose(d[static_cast<std::size_t>(i)],
                                             d[static_cast<std::size_t>(i + 1)])
                                   : compose(d[static_cast<std::size_t>(i + 1)],
                                             d[static_cast<std::size_t>(i)]);
    const ThickWord from = complexObject(a, b, reversed ? i + 2 : i);
    const ThickWord to = complexObject(a, b, reversed ? i : i + 2);
    checkEqual(&report, "complex.dd-zero", params(i), dd, zeroOp(from, to));
  }

  if (!reversed) {
    checkEqual(&report, "complex.contraction-end", params(0), compose(h[0], d[0]),
               idOn(complexObject(a, b, 0)));
    for (int i = 1; i < a; ++i) {
      const DiagramOperator sum =
          compose(h[static_cast<std::size_t>(i)], d[static_cast<std::size_t>(i)]) +
          compose(d[static_cast<std::size_t>(i - 1)], h[static_cast<std::size_t>(i - 1)]);
      checkEqual(&report, "complex.contraction", params(i), sum,
                 idOn(complexObject(a, b, i)));
    }
    checkEqual(&report, "complex.contraction-end", params(a),
               compose(d[static_cast<std::size_t>(a - 1)], h[static_cast<std::size_t>(a - 1)]),
               idOn(complexObject(a, b, a)));
  } else {
    checkEqual(&report, "complex.contraction-end", params(0), compose(d[0], h[0]),
               idOn(complexObject(a, b, 0)));
    for (int i = 0; i + 1 < a; ++i) {
      const DiagramOperator sum =
          compose(h[static_cast<std::size_t>(i)], d[static_cast<std::size_t>(i)]) +
          compose(d[static_cast<std::size_t>(i + 1)], h[static_cast<std::size_t>(i + 1)]);
      checkEqual(&report, "complex.contraction", params(i + 1), sum,
                 idOn(complexObject(a, b, i + 1)));
    }
    checkEqual(&report, "complex.contraction-end", params(a),
               compose(h[static_cast<std::size_t>(a - 1)], d[static_cast<std::size_t>(a - 1)]),
               idOn(complexObject(a, b, a)));
  }

  return report;
}

}  // namespace qsl3
