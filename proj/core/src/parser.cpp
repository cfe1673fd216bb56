#include "gwbez/parser.hpp"

#include <cctype>
#include <cstddef>

#include "gwbez/errors.hpp"

namespace gwbez {

namespace {

struct Token {
  enum Kind { Int, Var, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };
  Kind kind = End;
  std::size_t pos = 0;
  mpz_class value;  // Int
  int var = 0;      // Var: index k of "xk"
};

std::vector<Token> tokenize(const std::string& text, bool affine) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    Token t;
    t.pos = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      t.kind = Token::Int;
      t.value = mpz_class(text.substr(i, j - i));
      i = j;
      out.push_back(t);
      continue;
    }
    if (c == 'x' && i + 1 < n && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
      if (i + 2 < n && std::isdigit(static_cast<unsigned char>(text[i + 2])))
        throw SyntaxError("variable index has more than one digit", i);
      t.kind = Token::Var;
      t.var = text[i + 1] - '0';
      i += 2;
      out.push_back(t);
      continue;
    }
    if (c == 'x' || c == 'y' || c == 'z') {
      if (!affine)
        throw SyntaxError("homogeneous input uses x0..x9 only", i);
      t.kind = Token::Var;
      t.var = (c == 'x') ? 1 : (c == 'y' ? 2 : 3);
      ++i;
      out.push_back(t);
      continue;
    }
    switch (c) {
      case '+': t.kind = Token::Plus; break;
      case '-': t.kind = Token::Minus; break;
      case '*': t.kind = Token::Star; break;
      case '^': t.kind = Token::Caret; break;
      case '/': t.kind = Token::Slash; break;
      case '(': t.kind = Token::LParen; break;
      case ')': t.kind = Token::RParen; break;
      default:
        throw SyntaxError(std::string("unexpected character '") + c + "'", i);
    }
    ++i;
    out.push_back(t);
  }
  Token end;
  end.kind = Token::End;
  end.pos = n;
  out.push_back(end);
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, int nvars, bool affine)
      : toks_(std::move(toks)), nvars_(nvars), affine_(affine) {}

  Poly<Rat> run() {
    Poly<Rat> r = expr();
    if (cur().kind != Token::End)
      throw SyntaxError("unexpected trailing input", cur().pos);
    return r;
  }

 private:
  const Token& cur() const { return toks_[i_]; }
  void advance() { ++i_; }

  Poly<Rat> expr() {
    Poly<Rat> acc = term();
    while (cur().kind == Token::Plus || cur().kind == Token::Minus) {
      bool minus = cur().kind == Token::Minus;
      advance();
      Poly<Rat> rhs = term();
      acc = minus ? acc - rhs : acc + rhs;
    }
    return acc;
  }

  Poly<Rat> term() {
    Poly<Rat> acc = unary();
    while (cur().kind == Token::Star) {
      advance();
      acc = acc * unary();
    }
    return acc;
  }

  Poly<Rat> unary() {
    if (cur().kind == Token::Minus) {
      advance();
      return -unary();
    }
    return power();
  }

  Poly<Rat> power() {
    Poly<Rat> base = atom();
    if (cur().kind != Token::Caret) return base;
    std::size_t cpos = cur().pos;
    advance();
    if (cur().kind != Token::Int)
      throw SyntaxError("exponent must be a nonnegative integer literal", cur().pos);
    mpz_class e = cur().value;
    advance();
    if (cur().kind == Token::Caret)
      throw SyntaxError("chained '^' needs parentheses", cur().pos);
    if (e > 4096) throw SyntaxError("exponent too large", cpos);
    Poly<Rat> acc = Poly<Rat>::constant(nvars_, Rat(1));
    for (long k = e.get_si(); k > 0; --k) acc = acc * base;
    return acc;
  }

  Poly<Rat> atom() {
    const Token& t = cur();
    switch (t.kind) {
      case Token::Int: {
        mpz_class num = t.value;
        advance();
        if (cur().kind == Token::Slash) {
          advance();
          if (cur().kind != Token::Int)
            throw SyntaxError("'/' joins two integer literals", cur().pos);
          mpz_class den = cur().value;
          if (den == 0) throw SyntaxError("zero denominator", cur().pos);
          advance();
          return Poly<Rat>::constant(nvars_, Rat(num, den));
        }
        return Poly<Rat>::constant(nvars_, Rat(num));
      }
      case Token::Var: {
        int idx = affine_ ? t.var - 1 : t.var;
        if (affine_ && t.var == 0)
          throw SyntaxError("x0 is not an affine variable", t.pos);
        if (idx >= nvars_)
          throw SyntaxError("variable index out of range for this mode", t.pos);
        advance();
        return Poly<Rat>::variable(nvars_, idx, Rat(1));
      }
      case Token::LParen: {
        advance();
        Poly<Rat> inner = expr();
        if (cur().kind != Token::RParen)
          throw SyntaxError("expected ')'", cur().pos);
        advance();
        return inner;
      }
      default:
        throw SyntaxError("expected a literal, variable or '('", t.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  int nvars_;
  bool affine_;
};

std::string term_text(const Poly<Rat>::Expo& e, int nvars, bool affine) {
  std::vector<std::string> names = variable_names(nvars, affine);
  std::string out;
  for (int i = 0; i < nvars; ++i) {
    if (e[static_cast<std::size_t>(i)] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[static_cast<std::size_t>(i)];
    if (e[static_cast<std::size_t>(i)] > 1)
      out += "^" + std::to_string(e[static_cast<std::size_t>(i)]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace

ParsedPoly parse_affine(const std::string& text) {
  if (text.empty()) throw SyntaxError("empty input", 0);
  std::vector<Token> toks = tokenize(text, true);
  int maxvar = 2;
  for (const auto& t : toks)
    if (t.kind == Token::Var && t.var > maxvar) maxvar = t.var;
  Parser p(std::move(toks), maxvar, true);
  return {text, p.run()};
}

ParsedPoly parse_homogeneous(const std::string& text, long n, long d) {
  if (text.empty()) throw SyntaxError("empty input", 0);
  if (n < 1 || n > 9) throw DimensionMismatch("projective dimension out of range");
  std::vector<Token> toks = tokenize(text, false);
  for (const auto& t : toks)
    if (t.kind == Token::Var && t.var > n)
      throw SyntaxError("variable index exceeds the projective dimension", t.pos);
  Parser p(std::move(toks), static_cast<int>(n) + 1, false);
  ParsedPoly out{text, p.run()};
  long deg = -1;
  if (!out.poly.is_homogeneous(&deg)) {
    long d0 = -1;
    for (const auto& [e, c] : out.poly.terms()) {
      long s = 0;
      for (auto v : e) s += v;
      if (d0 == -1) d0 = s;
      if (s != d0)
        throw NotHomogeneous("terms of unequal degree, e.g. " +
                             term_text(e, static_cast<int>(n) + 1, false));
    }
  }
  if (d >= 0 && !out.poly.terms().empty() && deg != d)
    throw NotHomogeneous("total degree " + std::to_string(deg) + ", expected " +
                         std::to_string(d));
  return out;
}

Fp rat_to_fp(const Rat& c, long p) {
  mpz_class num = c.num(), den = c.den();
  long nm = static_cast<long>(mpz_fdiv_ui(num.get_mpz_t(), static_cast<unsigned long>(p)));
  long dm = static_cast<long>(mpz_fdiv_ui(den.get_mpz_t(), static_cast<unsigned long>(p)));
  return Fp(nm, p) / Fp(dm, p);
}

Poly<Fp> poly_to_fp(const Poly<Rat>& f, long p) {
  return f.map_coeffs([&](const Rat& c) { return rat_to_fp(c, p); });
}

std::vector<std::string> variable_names(int nvars, bool affine) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(nvars));
  for (int i = 0; i < nvars; ++i) {
    if (affine && i < 3) {
      const char* base[] = {"x", "y", "z"};
      names.push_back(base[i]);
    } else {
      names.push_back("x" + std::to_string(affine ? i + 1 : i));
    }
  }
  return names;
}

}  // namespace gwbez
