#include "qsl3/textio.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "qsl3/partitions.hpp"

namespace qsl3 {

namespace {

// ---------------------------------------------------------------------------
// Expression grammar
// ---------------------------------------------------------------------------

struct ParsedTerm {
  LaurentPoly coeff;
  std::vector<std::pair<int, int>> letters;  // (color, exponent)
  int shift = 0;
  std::size_t position = 0;  // where the term started, for diagnostics
};

class Cursor {
 public:
  explicit Cursor(const std::string& src) : src_(src) {}

  void skipWs() {
    while (cur_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[cur_]))) ++cur_;
  }
  [[nodiscard]] bool eof() const { return cur_ >= src_.size(); }
  [[nodiscard]] char peek() const { return eof() ? '\0' : src_[cur_]; }
  [[nodiscard]] std::size_t pos() const { return cur_; }
  char take() { return src_[cur_++]; }
  void expect(char c, const std::string& what) {
    if (eof() || src_[cur_] != c) throw ParseError(cur_, what);
    ++cur_;
  }
  [[nodiscard]] const std::string& src() const { return src_; }

  long long takeUInt() {
    if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError(cur_, "unsigned integer");
    long long value = 0;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (take() - '0');
      if (value > 1000000) throw ParseError(cur_, "integer within range");
    }
    return value;
  }

  long long takeInt() {
    bool negative = false;
    if (peek() == '-' || peek() == '+') negative = (take() == '-');
    const long long value = takeUInt();
    return negative ? -value : value;
  }

 private:
  const std::string& src_;
  std::size_t cur_ = 0;
};

ParsedTerm parseTerm(Cursor& in) {
  ParsedTerm term;
  term.coeff = LaurentPoly(1);
  in.skipWs();
  term.position = in.pos();
  if (in.peek() == '(') {
    in.take();
    const std::size_t start = in.pos();
    const std::size_t close = in.src().find(')', start);
    if (close == std::string::npos) throw ParseError(in.pos(), "')'");
    const std::string literal = in.src().substr(start, close - start);
    const auto parsed = LaurentPoly::parse(literal);
    if (!parsed) throw ParseError(start, "Laurent polynomial literal");
    term.coeff = *parsed;
    while (in.pos() < close + 1) in.take();
  }
  bool sawLetter = false;
  while (true) {
    in.skipWs();
    const char c = in.peek();
    if (c != '1' && c != '2') break;
    in.take();
    in.expect('^', "'^'");
    const int exponent = static_cast<int>(in.takeUInt());
    term.letters.emplace_back(c - '0', exponent);
    sawLetter = true;
  }
  if (!sawLetter) throw ParseError(in.pos(), "letter ('1'|'2')^uint");
  in.skipWs();
  if (in.peek() == '{') {
    in.take();
    in.skipWs();
    const long long shift = in.takeInt();
    in.skipWs();
    in.expect('}', "'}'");
    term.shift = static_cast<int>(shift);
  }
  return term;
}

/// Parse a full expression into raw terms. A lone "0" yields no terms.
std::vector<ParsedTerm> parseTerms(const std::string& src) {
  Cursor in(src);
  in.skipWs();
  if (in.peek() == '0') {
    in.take();
    in.skipWs();
    if (!in.eof()) throw ParseError(in.pos(), "end of input");
    return {};
  }
  std::vector<ParsedTerm> terms;
  terms.push_back(parseTerm(in));
  while (true) {
    in.skipWs();
    if (in.eof()) break;
    if (in.peek() == '+') {
      in.take();
    } else if (in.peek() == '(') {
      in.take();
      in.expect('+', "separator '+' or '(+)'");
      in.expect(')', "separator '+' or '(+)'");
    } else {
      throw ParseError(in.pos(), "separator '+' or '(+)'");
    }
    terms.push_back(parseTerm(in));
  }
  return terms;
}

/// Object-level view of a letter list: merging a same-color neighbor pair
/// E^(a) E^(t) contributes one summand per partition in the a-by-t box, with
/// shift offset 2|alpha| - a*t.
std::vector<std::pair<Monomial, int>> objectWordAlternatives(
    const std::vector<std::pair<int, int>>& letters) {
  std::vector<std::pair<std::vector<std::pair<int, int>>, int>> parts{{{}, 0}};
  for (const auto& [color, t] : letters) {
    if (t == 0) continue;
    std::vector<std::pair<std::vector<std::pair<int, int>>, int>> next;
    for (const auto& [word, offset] : parts) {
      if (!word.empty() && word.back().first == color) {
        const int a = word.back().second;
        for (const Partition& alpha : enumerate(a, t)) {
          auto merged = word;
          merged.back().second = a + t;
          next.emplace_back(std::move(merged), offset + 2 * alpha.size() - a * t);
        }
      } else {
        auto extended = word;
        extended.emplace_back(color, t);
        next.emplace_back(std::move(extended), offset);
      }
    }
    parts = std::move(next);
  }
  std::vector<std::pair<Monomial, int>> out;
  out.reserve(parts.size());
  for (const auto& [word, offset] : parts) {
    out.emplace_back(Monomial::fromLetters(word).first, offset);
  }
  return out;
}

}  // namespace

AlgElem parseAlgebraExpression(const std::string& src) {
  AlgElem out;
  for (const ParsedTerm& term : parseTerms(src)) {
    const auto [word, factor] = Monomial::fromLetters(term.letters);
    LaurentPoly coeff = term.coeff;
    coeff *= factor;
    out.add(word, coeff);
  }
  return out;
}

GradedObject parseObjectExpression(const std::string& src) {
  GradedObject out;
  for (const ParsedTerm& term : parseTerms(src)) {
    const auto alternatives = objectWordAlternatives(term.letters);
    for (const auto& [exp, coeff] : term.coeff.terms()) {
      if (coeff < 0)
        throw ParseError(term.position, "nonnegative object coefficient");
      if (!coeff.fits_slong_p())
        throw ParseError(term.position, "object multiplicity within range");
      const long long mult = coeff.get_si();
      for (const auto& [word, offset] : alternatives) {
        out.add(word, term.shift + exp + offset, mult);
      }
    }
  }
  return out;
}

std::string printAlgebra(const AlgElem& value) {
  if (value.isZero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [word, coeff] : value.terms()) {
    if (!first) out << " + ";
    first = false;
    if (!coeff.isOne()) out << "(" << coeff.str() << ") ";
    out << word.str();
  }
  return out.str();
}

std::string printCanonical(const CanonExpansion& value) {
  if (value.isZero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [elem, coeff] : value.terms()) {
    if (!first) out << " + ";
    first = false;
    if (!coeff.isOne()) out << "(" << coeff.str() << ") ";
    out << elem.str();
  }
  return out.str();
}

std::string printObject(const GradedObject& value) { return value.str(); }

std::string printIndecomposables(const IndecompSum& value) {
  if (value.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [indec, mult] : value) {
    for (long long i = 0; i < mult; ++i) {
      if (!first) out << " (+) ";
      first = false;
      out << indec.str();
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Diagram S-expressions
// ---------------------------------------------------------------------------

namespace {

std::string takeSymbol(Cursor& in) {
  in.skipWs();
  std::string sym;
  while (!in.eof() && std::isalpha(static_cast<unsigned char>(in.peek()))) sym += in.take();
  if (sym.empty()) throw ParseError(in.pos(), "diagram head symbol");
  return sym;
}

int takeColor(Cursor& in) {
  in.skipWs();
  const std::size_t at = in.pos();
  const long long c = in.takeInt();
  if (c != 1 && c != 2) throw ParseError(at, "color 1 or 2");
  return static_cast<int>(c);
}

int takeSmallInt(Cursor& in) {
  in.skipWs();
  return static_cast<int>(in.takeInt());
}

Partition takePartition(Cursor& in) {
  in.skipWs();
  in.expect('(', "'(' opening a partition");
  std::vector<int> parts;
  while (true) {
    in.skipWs();
    if (in.peek() == ')') {
      in.take();
      break;
    }
    parts.push_back(takeSmallInt(in));
  }
  return Partition(parts);
}

ThickDiagram parseDiagramNode(Cursor& in) {
  in.skipWs();
  in.expect('(', "'(' opening a diagram");
  const std::string head = takeSymbol(in);
  ThickDiagram result = [&]() {
    if (head == "id") {
      const int color = takeColor(in);
      const int t = takeSmallInt(in);
      return ThickDiagram::ident({color, t});
    }
    if (head == "schur") {
      const int color = takeColor(in);
      const int t = takeSmallInt(in);
      Partition alpha = takePartition(in);
      return ThickDiagram::schur({color, t}, std::move(alpha));
    }
    if (head == "cross") {
      const int c1 = takeColor(in);
      const int t1 = takeSmallInt(in);
      const int c2 = takeColor(in);
      const int t2 = takeSmallInt(in);
      return ThickDiagram::crossing({c1, t1}, {c2, t2});
    }
    if (head == "split" || head == "merge") {
      const int color = takeColor(in);
      const int a = takeSmallInt(in);
      const int b = takeSmallInt(in);
      return head == "split" ? ThickDiagram::split(color, a, b)
                             : ThickDiagram::merge(color, a, b);
    }
    if (head == "h" || head == "v") {
      std::vector<ThickDiagram> children;
      while (true) {
        in.skipWs();
        if (in.peek() == ')') break;
        children.push_back(parseDiagramNode(in));
      }
      return head == "h" ? ThickDiagram::horizontal(std::move(children))
                         : ThickDiagram::vertical(std::move(children));
    }
    if (head == "scale") {
      in.skipWs();
      const long long k = in.takeInt();
      ThickDiagram child = parseDiagramNode(in);
      return ThickDiagram::scaled(static_cast<long>(k), std::move(child));
    }
    throw ParseError(in.pos(), "diagram head in {id, schur, cross, split, merge, h, v, scale}");
  }();
  in.skipWs();
  in.expect(')', "')'");
  return result;
}

}  // namespace

ThickDiagram parseThickDiagram(const std::string& src) {
  Cursor in(src);
  ThickDiagram d = parseDiagramNode(in);
  in.skipWs();
  if (!in.eof()) throw ParseError(in.pos(), "end of input");
  return d;
}

}  // namespace qsl3
