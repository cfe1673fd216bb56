#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace gwbez {

/// Checks that p is an odd prime below 2^31 and returns it.  Every entry
/// point creating prime field elements funnels through this.
long check_odd_prime(long p);

/// Element of the prime field of odd order p.  The modulus travels with the
/// value; mixing moduli throws MismatchedParents.  Representatives live in
/// [0, p).
class Fp {
 public:
  Fp() : v_(0), p_(0) {}  // null element, usable only as a placeholder
  Fp(long v, long p);

  long value() const { return v_; }
  long modulus() const { return p_; }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_, 0); }
  Fp& operator+=(const Fp& o);
  Fp& operator-=(const Fp& o);
  Fp& operator*=(const Fp& o);
  Fp& operator/=(const Fp& o);

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }

  friend bool operator==(const Fp& a, const Fp& b) {
    return a.v_ == b.v_ && a.p_ == b.p_;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  Fp inverse() const;

  /// Euler criterion: 1 for nonzero squares, -1 otherwise, 0 for zero.
  int euler_symbol() const;

  std::string str() const { return std::to_string(v_); }

 private:
  Fp(long v, long p, int) : v_(v), p_(p) {}  // trusted, no reduction
  long v_;
  long p_;
};

std::ostream& operator<<(std::ostream& os, const Fp& a);

}  // namespace gwbez
