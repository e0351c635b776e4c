#include "evenpoint/poly_io.hpp"

#include <cctype>
#include <map>

#include "evenpoint/errors.hpp"

namespace evenpoint {
namespace {

// Sparse bivariate polynomial keyed by (deg var, deg y).
using Terms = std::map<std::pair<int, int>, Fe>;

class Parser {
 public:
  Parser(const FiniteField& field, std::string_view text, char var, bool allow_y)
      : F_(field), text_(text), var_(var), allow_y_(allow_y) {}

  Terms parse_all() {
    Terms result = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void add_into(Terms& acc, const Terms& t, bool negate) {
    for (const auto& [k, c] : t) {
      Fe v = negate ? F_.neg(c) : c;
      auto [it, inserted] = acc.emplace(k, v);
      if (!inserted) it->second = F_.add(it->second, v);
      if (it->second.v == 0) acc.erase(it);
    }
  }

  Terms multiply(const Terms& a, const Terms& b) {
    Terms out;
    for (const auto& [ka, ca] : a) {
      for (const auto& [kb, cb] : b) {
        Terms single{{{ka.first + kb.first, ka.second + kb.second}, F_.mul(ca, cb)}};
        add_into(out, single, false);
      }
    }
    return out;
  }

  Terms expr() {
    Terms acc;
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    add_into(acc, term(), negate);
    while (true) {
      const char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      add_into(acc, term(), c == '-');
    }
    return acc;
  }

  bool starts_factor(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '[' || c == '(' || c == var_ ||
           (allow_y_ && c == 'y');
  }

  Terms term() {
    Terms acc = factor();
    while (true) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc = multiply(acc, factor());
      } else if (starts_factor(c)) {
        acc = multiply(acc, factor());
      } else {
        break;
      }
    }
    return acc;
  }

  int exponent() {
    if (peek() != '^') return 1;
    ++pos_;
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    if (pos_ - start > 6) fail("exponent too large");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  Terms factor() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Terms inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      const int e = exponent();
      Terms out{{{0, 0}, F_.one()}};
      for (int i = 0; i < e; ++i) out = multiply(out, inner);
      return out;
    }
    if (c == var_) {
      ++pos_;
      return Terms{{{exponent(), 0}, F_.one()}};
    }
    if (allow_y_ && c == 'y') {
      ++pos_;
      return Terms{{{0, exponent()}, F_.one()}};
    }
    if (c == '[') {
      const std::size_t start = pos_;
      const std::size_t close = text_.find(']', pos_);
      if (close == std::string_view::npos) fail("unterminated field literal");
      pos_ = close + 1;
      return constant(F_.parse(text_.substr(start, close + 1 - start)));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ - start > 18) fail("coefficient literal too long");
      return constant(F_.parse(text_.substr(start, pos_ - start)));
    }
    if (c == '\0') fail("unexpected end of input");
    if (std::isalpha(static_cast<unsigned char>(c))) fail("unknown variable '" + std::string(1, c) + "'");
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  Terms constant(Fe c) const {
    if (c.v == 0) return {};
    return Terms{{{0, 0}, c}};
  }

  const FiniteField& F_;
  std::string_view text_;
  std::size_t pos_ = 0;
  char var_;
  bool allow_y_;
};

std::string format_terms(const FiniteField& F, const std::vector<std::pair<int, Fe>>& desc, char var) {
  std::string out;
  for (const auto& [k, c] : desc) {
    if (!out.empty()) out += '+';
    if (k == 0) {
      out += F.format(c);
      continue;
    }
    if (c != F.one()) out += F.format(c) + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string format_poly(const PolyRing& ring, const Poly& p) {
  std::vector<std::pair<int, Fe>> desc;
  for (int i = p.degree(); i >= 0; --i) {
    if (p.coeff(i).v != 0) desc.emplace_back(i, p.coeff(i));
  }
  return format_terms(ring.field(), desc, ring.variable());
}

Poly parse_poly(const PolyRing& ring, std::string_view text) {
  Parser parser(ring.field(), text, ring.variable(), false);
  const Terms terms = parser.parse_all();
  int degree = -1;
  for (const auto& [k, c] : terms) degree = std::max(degree, k.first);
  std::vector<Fe> coeffs(degree + 1, Fe{});
  for (const auto& [k, c] : terms) coeffs[k.first] = c;
  return Poly(std::move(coeffs));
}

RationalFunction parse_rational(const PolyRing& ring, std::string_view text) {
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == '/' && depth == 0) {
      Poly num = parse_poly(ring, text.substr(0, i));
      Poly den;
      try {
        den = parse_poly(ring, text.substr(i + 1));
      } catch (const ParseError& e) {
        throw ParseError("invalid denominator", i + 1 + e.position());
      }
      if (den.is_zero()) throw MathError("zero denominator");
      return RationalFunction(ring, std::move(num), std::move(den));
    }
  }
  return RationalFunction(ring, parse_poly(ring, text));
}

std::string format_rational(const PolyRing& ring, const RationalFunction& r) {
  if (r.den() == ring.one()) return format_poly(ring, r.num());
  return "(" + format_poly(ring, r.num()) + ")/(" + format_poly(ring, r.den()) + ")";
}

std::pair<Poly, Poly> parse_curve_poly(const PolyRing& ring, std::string_view text, const Poly& f) {
  Parser parser(ring.field(), text, ring.variable(), true);
  const Terms terms = parser.parse_all();
  Poly a, b;
  // y^(2k+e) = f^k * y^e.
  for (const auto& [k, c] : terms) {
    Poly term = ring.monomial(c, k.first);
    for (int i = 0; i < k.second / 2; ++i) term = ring.mul(term, f);
    if (k.second % 2 == 0) {
      a = ring.add(a, term);
    } else {
      b = ring.add(b, term);
    }
  }
  return {a, b};
}

std::string format_curve_poly(const PolyRing& ring, const Poly& a, const Poly& b) {
  if (b.is_zero()) return format_poly(ring, a);
  std::string y_part;
  if (b == ring.one()) {
    y_part = "y";
  } else if (b.degree() == 0 || [&] {
               int nonzero = 0;
               for (auto c : b.coeffs()) nonzero += c.v != 0;
               return nonzero == 1;
             }()) {
    y_part = format_poly(ring, b) + "*y";
  } else {
    y_part = "(" + format_poly(ring, b) + ")*y";
  }
  if (a.is_zero()) return y_part;
  return format_poly(ring, a) + "+" + y_part;
}

}  // namespace evenpoint
