#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "gwbez/fp.hpp"
#include "gwbez/rational.hpp"

namespace gwbez {

// Generic hooks used by the templated polynomial and linear algebra code.
// Elements are self describing: zero_like / one_like / int_like clone the
// field context (modulus, extension parent) from an existing element.

/// Fallback for any element type exposing a member test; the concrete
/// overloads below stay preferred where they exist.
template <class T>
auto is_zero(const T& a) -> decltype(a.is_zero()) {
  return a.is_zero();
}

template <class T>
auto inverse(const T& a) -> decltype(a.inverse()) {
  return a.inverse();
}

inline Rat zero_like(const Rat&) { return Rat(0); }
inline Rat one_like(const Rat&) { return Rat(1); }
inline Rat int_like(const Rat&, long n) { return Rat(n); }
inline bool is_zero(const Rat& a) { return a.is_zero(); }
inline Rat inverse(const Rat& a) { return a.inverse(); }
inline std::string elem_str(const Rat& a) { return a.str(); }

inline Fp zero_like(const Fp& a) { return Fp(0, a.modulus()); }
inline Fp one_like(const Fp& a) { return Fp(1, a.modulus()); }
inline Fp int_like(const Fp& a, long n) { return Fp(n, a.modulus()); }
inline bool is_zero(const Fp& a) { return a.is_zero(); }
inline Fp inverse(const Fp& a) { return a.inverse(); }
inline std::string elem_str(const Fp& a) { return a.str(); }

/// Field size for finite fields; extension types overload recursively.
inline mpz_class field_card(const Fp& a) { return mpz_class(a.modulus()); }

/// Field characteristic; 0 in characteristic zero.
inline long field_char(const Rat&) { return 0; }
inline long field_char(const Fp& a) { return a.modulus(); }

/// Image of an arbitrary-precision integer, for counts too large for
/// int_like (multinomial coefficients and the like).
template <class K>
K big_int_like(const K& sample, const mpz_class& n) {
  const long base_bits = 30;
  const long base = 1L << base_bits;
  mpz_class m = abs(n);
  K acc = zero_like(sample);
  const K base_elem = int_like(sample, base);
  std::vector<long> digits;
  while (m != 0) {
    mpz_class r = m % base;
    digits.push_back(r.get_si());
    m /= base;
  }
  for (auto it = digits.rbegin(); it != digits.rend(); ++it)
    acc = acc * base_elem + int_like(sample, *it);
  if (n < 0) acc = -acc;
  return acc;
}

}  // namespace gwbez
