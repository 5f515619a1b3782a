#include "qsl3/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qsl3 {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("Partition: negative part");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
  return (i >= 0 && i < numParts()) ? parts_[i] : 0;
}

bool Partition::fitsInBox(int rows, int cols) const {
  return numParts() <= rows && (parts_.empty() || parts_[0] <= cols);
}

bool Partition::contains(const Partition& inner) const {
  if (inner.numParts() > numParts()) return false;
  for (int i = 0; i < inner.numParts(); ++i) {
    if (inner.parts_[i] > parts_[i]) return false;
  }
  return true;
}

std::string Partition::str() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out << ",";
    out << parts_[i];
  }
  out << ")";
  return out.str();
}

std::optional<Partition> Partition::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') return std::nullopt;
  std::string body = s.substr(1, s.size() - 2);
  std::vector<int> parts;
  if (!body.empty()) {
    std::istringstream in(body);
    std::string tok;
    while (std::getline(in, tok, ',')) {
      if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) {
            return std::isdigit(c);
          }))
        return std::nullopt;
      parts.push_back(std::stoi(tok));
    }
    if (!body.empty() && body.back() == ',') return std::nullopt;
  }
  try {
    return Partition(std::move(parts));
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

Partition conjugate(const Partition& alpha) {
  if (alpha.empty()) return Partition();
  std::vector<int> out(alpha.parts()[0], 0);
  for (int j = 0; j < alpha.parts()[0]; ++j) {
    int count = 0;
    for (int p : alpha.parts()) {
      if (p >= j + 1) ++count;
    }
    out[j] = count;
  }
  return Partition(std::move(out));
}

Partition hat(const Partition& alpha, int a, int b) {
  if (a < 0 || b < 0 || !alpha.fitsInBox(a, b))
    throw std::invalid_argument("hat: partition does not fit the box");
  std::vector<int> complement(a, 0);
  for (int k = 0; k < a; ++k) complement[k] = b - alpha.part(a - 1 - k);
  return conjugate(Partition(std::move(complement)));
}

namespace {

void enumerateRec(int maxPart, int partsLeft, std::vector<int>* current,
                  std::vector<Partition>* out) {
  out->emplace_back(*current);
  if (partsLeft == 0) return;
  for (int p = maxPart; p >= 1; --p) {
    current->push_back(p);
    enumerateRec(p, partsLeft - 1, current, out);
    current->pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("enumerate: negative box");
  std::vector<Partition> out;
  std::vector<int> current;
  // Emit each prefix exactly once: the recursion adds parts in weakly
  // decreasing order, so every partition in the box appears exactly once.
  enumerateRec(b, a, &current, &out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Partition> partitionsOfSizeInBox(int n, int rows, int cols) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> current;
  std::function<void(int, int, int)> rec = [&](int remaining, int maxPart, int partsLeft) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    if (partsLeft == 0) return;
    for (int p = std::min(maxPart, remaining); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p, partsLeft - 1);
      current.pop_back();
    }
  };
  rec(n, cols, rows);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

/// Shared enumeration core for skew column-strict fillings of gamma/alpha
/// with entries in 1..maxEntry. `lattice` additionally enforces the
/// Littlewood-Richardson lattice-word condition (cells visited rows top to
/// bottom, right to left within a row, which is exactly the reverse reading
/// word). `contentBound` caps the multiplicity of each entry (empty = no cap).
/// Calls `done` with the content vector for every completed filling.
void enumerateSkewFillings(const Partition& gamma, const Partition& alpha, int maxEntry,
                           bool lattice, const std::vector<int>& contentBound,
                           const std::function<void(const std::vector<int>&)>& done) {
  const int rows = gamma.numParts();
  struct Cell {
    int row, col;
  };
  std::vector<Cell> cells;
  for (int r = 0; r < rows; ++r) {
    for (int c = gamma.part(r) - 1; c >= alpha.part(r); --c) cells.push_back({r, c});
  }
  // entry[r][c] for the filled part; 0 = unfilled.
  std::vector<std::vector<int>> entry(rows);
  for (int r = 0; r < rows; ++r) entry[r].assign(gamma.part(r), 0);
  std::vector<int> content(maxEntry, 0);

  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == cells.size()) {
      done(content);
      return;
    }
    const auto [r, c] = cells[idx];
    // Row constraint: weakly increasing left to right; the right neighbor is
    // already filled in our order.
    int hi = maxEntry;
    if (c + 1 < gamma.part(r)) hi = std::min(hi, entry[r][c + 1]);
    // Column constraint: strictly increasing downward; the cell above is
    // already filled whenever it belongs to the skew shape.
    int lo = 1;
    if (r > 0 && c < gamma.part(r - 1) && c >= alpha.part(r - 1)) lo = entry[r - 1][c] + 1;
    // Inside a skew shape a cell above that is absent (cut out by alpha)
    // imposes nothing; but if the cell above exists and is unfilled, our
    // visiting order guarantees that cannot happen.
    for (int v = lo; v <= hi; ++v) {
      if (!contentBound.empty() && content[v - 1] + 1 > contentBound[v - 1]) continue;
      if (lattice && v >= 2 && content[v - 1] + 1 > content[v - 2]) continue;
      entry[r][c] = v;
      ++content[v - 1];
      rec(idx + 1);
      --content[v - 1];
      entry[r][c] = 0;
    }
  };
  rec(0);
}

}  // namespace

long long lrCoefficient(const Partition& gamma, const Partition& alpha, const Partition& beta) {
  if (gamma.size() != alpha.size() + beta.size()) return 0;
  if (!gamma.contains(alpha)) return 0;
  const int m = beta.numParts();
  if (m == 0) return gamma == alpha ? 1 : 0;
  long long count = 0;
  std::vector<int> bound(beta.parts().begin(), beta.parts().end());
  enumerateSkewFillings(gamma, alpha, m, /*lattice=*/true, bound,
                        [&](const std::vector<int>& content) {
                          for (int i = 0; i < m; ++i) {
                            if (content[i] != beta.part(i)) return;
                          }
                          ++count;
                        });
  return count;
}

std::map<Partition, long long> multiplyExpand(const Partition& mu, const Partition& alpha) {
  std::map<Partition, long long> out;
  const int n = mu.size() + alpha.size();
  const int rows = mu.numParts() + alpha.numParts();
  const int cols = mu.part(0) + alpha.part(0);
  for (const Partition& nu : partitionsOfSizeInBox(n, rows, cols)) {
    if (!nu.contains(mu)) continue;
    long long c = lrCoefficient(nu, mu, alpha);
    if (c != 0) out.emplace(nu, c);
  }
  return out;
}

long long multiLR(const std::vector<Partition>& parts, const Partition& beta) {
  std::map<Partition, long long> acc;
  acc.emplace(Partition(), 1);
  for (const Partition& alpha : parts) {
    std::map<Partition, long long> next;
    for (const auto& [mu, coeff] : acc) {
      for (const auto& [nu, c] : multiplyExpand(mu, alpha)) next[nu] += coeff * c;
    }
    acc = std::move(next);
  }
  auto it = acc.find(beta);
  return it == acc.end() ? 0 : it->second;
}

std::map<Partition, long long> skewSchurExpand(const Partition& gamma, const Partition& alpha) {
  std::map<Partition, long long> out;
  if (!gamma.contains(alpha)) return out;
  const int n = gamma.size() - alpha.size();
  for (const Partition& beta : partitionsOfSizeInBox(n, gamma.numParts(), gamma.part(0))) {
    long long c = lrCoefficient(gamma, alpha, beta);
    if (c != 0) out.emplace(beta, c);
  }
  return out;
}

MPoly skewSchurPolynomialEval(const Partition& gamma, const Partition& alpha, int numVars) {
  MPoly acc(numVars);
  if (!gamma.contains(alpha)) return acc;
  // Column-strict fillings need entries strictly increasing down columns;
  // any column of height > numVars kills every filling.
  enumerateSkewFillings(gamma, alpha, numVars, /*lattice=*/false, {},
                        [&](const std::vector<int>& content) {
                          acc += MPoly::monomial(content, 1);
                        });
  return acc;
}

MPoly schurPolynomialEval(const Partition& alpha, int numVars) {
  if (alpha.numParts() > numVars) return MPoly(numVars);
  return skewSchurPolynomialEval(alpha, Partition(), numVars);
}

}  // namespace qsl3
