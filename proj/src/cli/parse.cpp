#include "modring/cli/parse.hpp"

#include <cctype>
#include <vector>

namespace modring::cli {

namespace {

enum class Tok { Number, Var, Plus, Minus, Star, Slash, Caret, End };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
};

const char* describe(Tok kind) {
  switch (kind) {
    case Tok::Number: return "number";
    case Tok::Var: return "variable";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Slash: return "'/'";
    case Tok::Caret: return "'^'";
    case Tok::End: return "end of input";
  }
  return "?";
}

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const auto ch = static_cast<unsigned char>(s[i]);
    if (std::isspace(ch)) {
      ++i;
    } else if (std::isdigit(ch)) {
      const std::size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::Number, start, std::string(s.substr(start, i - start))});
    } else if (std::isalpha(ch)) {
      const std::size_t start = i;
      while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) ++i;
      const std::string word(s.substr(start, i - start));
      if (word != "a" && word != "b" && word != "c" && word != "alpha" && word != "beta" && word != "gamma")
        throw ParseError(start, "unknown variable '" + word + "', expected one of a, b, c, alpha, beta, gamma");
      out.push_back({Tok::Var, start, word});
    } else {
      Tok kind;
      switch (ch) {
        case '+': kind = Tok::Plus; break;
        case '-': kind = Tok::Minus; break;
        case '*': kind = Tok::Star; break;
        case '/': kind = Tok::Slash; break;
        case '^': kind = Tok::Caret; break;
        default: throw ParseError(i, std::string("unexpected character '") + s[i] + "'");
      }
      out.push_back({kind, i, std::string(1, s[i])});
      ++i;
    }
  }
  out.push_back({Tok::End, s.size(), {}});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Polynomial poly() {
    if (peek().kind == Tok::End) throw ParseError(peek().pos, "empty input, expected a term");
    std::vector<Term> terms;
    bool negative = accept(Tok::Minus);
    if (!negative) accept(Tok::Plus);
    for (;;) {
      Term t = term();
      if (negative) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      if (accept(Tok::Plus)) {
        negative = false;
      } else if (accept(Tok::Minus)) {
        negative = true;
      } else {
        break;
      }
    }
    expect(Tok::End, "'+', '-' or end of input");
    return Polynomial::from_terms(std::move(terms));
  }

 private:
  Term term() {
    if (peek().kind == Tok::Number) {
      Rational coeff = number();
      if (accept(Tok::Slash)) {
        const Token& d = peek();
        Integer den = Integer(expect(Tok::Number, "denominator").text, 10);
        if (den == 0) throw ParseError(d.pos, "zero denominator");
        coeff = make_rational(coeff.get_num(), den);
      }
      Monomial m{};
      if (accept(Tok::Star)) m = factors();
      return {m, coeff};
    }
    if (peek().kind == Tok::Var) return {factors(), 1};
    throw ParseError(peek().pos, std::string("expected coefficient or variable, found ") + describe(peek().kind));
  }

  Monomial factors() {
    Monomial m = factor();
    while (accept(Tok::Star)) m = m * factor();
    return m;
  }

  Monomial factor() {
    const std::string& name = expect(Tok::Var, "variable").text;
    std::uint32_t e = 1;
    if (accept(Tok::Caret)) {
      const Token& t = peek();
      const Integer v(expect(Tok::Number, "exponent").text, 10);
      if (!v.fits_uint_p() || v > 1000000) throw ParseError(t.pos, "exponent too large");
      e = static_cast<std::uint32_t>(v.get_ui());
    }
    if (name == "a" || name == "alpha") return {e, 0, 0};
    if (name == "b" || name == "beta") return {0, e, 0};
    return {0, 0, e};
  }

  Rational number() { return Rational(Integer(expect(Tok::Number, "number").text, 10)); }

  const Token& peek() const { return toks_[i_]; }

  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++i_;
    return true;
  }

  const Token& expect(Tok kind, const char* what) {
    if (peek().kind != kind)
      throw ParseError(peek().pos, std::string("expected ") + what + ", found " + describe(peek().kind));
    return toks_[i_++];
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view text) { return Parser(lex(text)).poly(); }

Monomial parse_monomial(std::string_view text) {
  const Polynomial p = parse_poly(text);
  if (p.size() != 1 || p.leading_coeff() != 1) throw ParseError(0, "expected a single monomial with coefficient 1");
  return p.leading_monomial();
}

}  // namespace modring::cli
