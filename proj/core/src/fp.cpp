#include "gwbez/fp.hpp"

#include <ostream>

#include "gwbez/errors.hpp"
#include "gwbez/intfactor.hpp"

namespace gwbez {

namespace {

void require_same(const Fp& a, const Fp& b) {
  if (a.modulus() != b.modulus())
    throw MismatchedParents("prime field elements with different moduli");
}

}  // namespace

long check_odd_prime(long p) {
  if (p == 2) throw EvenPrime("characteristic 2 is not supported");
  if (p < 2 || p >= (1L << 31) || !is_prime(mpz_class(p)))
    throw NotPrime("modulus " + std::to_string(p) + " is not an odd prime below 2^31");
  return p;
}

Fp::Fp(long v, long p) : p_(p) {
  // One primality test per modulus change keeps element construction cheap.
  static thread_local long validated = 0;
  if (p != validated) validated = check_odd_prime(p);
  v_ = v % p;
  if (v_ < 0) v_ += p;
}

Fp& Fp::operator+=(const Fp& o) {
  require_same(*this, o);
  v_ += o.v_;
  if (v_ >= p_) v_ -= p_;
  return *this;
}

Fp& Fp::operator-=(const Fp& o) {
  require_same(*this, o);
  v_ -= o.v_;
  if (v_ < 0) v_ += p_;
  return *this;
}

Fp& Fp::operator*=(const Fp& o) {
  require_same(*this, o);
  v_ = static_cast<long>((static_cast<__int128>(v_) * o.v_) % p_);
  return *this;
}

Fp& Fp::operator/=(const Fp& o) {
  require_same(*this, o);
  return *this *= o.inverse();
}

Fp Fp::inverse() const {
  if (v_ == 0) throw DivisionByZero("inverse of zero in prime field");
  // Extended Euclid on (v, p).
  long a = v_, b = p_, x0 = 1, x1 = 0;
  while (b != 0) {
    long q = a / b;
    long t = a - q * b; a = b; b = t;
    t = x0 - q * x1; x0 = x1; x1 = t;
  }
  return Fp(x0, p_);
}

int Fp::euler_symbol() const {
  if (v_ == 0) return 0;
  return legendre_symbol(mpz_class(v_), p_);
}

std::ostream& operator<<(std::ostream& os, const Fp& a) {
  return os << a.value();
}

}  // namespace gwbez
