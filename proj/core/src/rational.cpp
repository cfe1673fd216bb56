#include "gwbez/rational.hpp"

#include <ostream>

#include "gwbez/errors.hpp"
#include "gwbez/intfactor.hpp"

namespace gwbez {

Rat::Rat(long num, long den) : v_(num, den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  v_.canonicalize();
}

Rat::Rat(const mpz_class& num, const mpz_class& den) : v_(num, den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  v_.canonicalize();
}

Rat::Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

Rat Rat::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(mpz_class(text));
    mpz_class num(text.substr(0, slash));
    mpz_class den(text.substr(slash + 1));
    return Rat(num, den);
  } catch (const std::invalid_argument&) {
    throw SyntaxError("malformed rational literal '" + text + "'", 0);
  }
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw DivisionByZero("rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rat Rat::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  return Rat(mpq_class(1) / v_);
}

std::string Rat::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rat& q) {
  return os << q.str();
}

long valuation2(const Rat& q) {
  if (q.is_zero()) throw ZeroInput("2-adic valuation of zero");
  return valuation(q.num(), 2) - valuation(q.den(), 2);
}

long valuation_p(const Rat& q, long p) {
  if (q.is_zero()) throw ZeroInput("p-adic valuation of zero");
  return valuation(q.num(), p) - valuation(q.den(), p);
}

mpz_class square_class(const Rat& q) {
  if (q.is_zero()) throw ZeroInput("square class of zero");
  // a/b and a*b agree modulo squares.
  return squarefree_part(q.num() * q.den());
}

}  // namespace gwbez
