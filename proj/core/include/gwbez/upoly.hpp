#pragma once

#include <gmpxx.h>

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "gwbez/errors.hpp"
#include "gwbez/field_traits.hpp"

namespace gwbez {

/// Dense univariate polynomial, coefficients low to high, no trailing
/// zeros.  The zero polynomial is the empty vector and has degree -1.
template <class K>
using UPoly = std::vector<K>;

namespace up {

template <class K>
void normalize(UPoly<K>& f) {
  while (!f.empty() && is_zero(f.back())) f.pop_back();
}

template <class K>
long degree(const UPoly<K>& f) {
  return static_cast<long>(f.size()) - 1;
}

template <class K>
bool is_zero_poly(const UPoly<K>& f) {
  return f.empty();
}

template <class K>
const K& lead(const UPoly<K>& f) {
  if (f.empty()) throw ZeroInput("leading coefficient of the zero polynomial");
  return f.back();
}

template <class K>
K coeff_or_zero(const UPoly<K>& f, std::size_t i, const K& sample) {
  return i < f.size() ? f[i] : zero_like(sample);
}

template <class K>
UPoly<K> add(const UPoly<K>& a, const UPoly<K>& b) {
  UPoly<K> r = a.size() >= b.size() ? a : b;
  const UPoly<K>& s = a.size() >= b.size() ? b : a;
  for (std::size_t i = 0; i < s.size(); ++i) r[i] += s[i];
  normalize(r);
  return r;
}

template <class K>
UPoly<K> neg(UPoly<K> a) {
  for (K& c : a) c = -c;
  return a;
}

template <class K>
UPoly<K> sub(const UPoly<K>& a, const UPoly<K>& b) {
  return add(a, neg(b));
}

template <class K>
UPoly<K> mul(const UPoly<K>& a, const UPoly<K>& b) {
  if (a.empty() || b.empty()) return {};
  UPoly<K> r(a.size() + b.size() - 1, zero_like(a[0]));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  normalize(r);
  return r;
}

template <class K>
UPoly<K> scale(UPoly<K> a, const K& c) {
  if (is_zero(c)) return {};
  for (K& x : a) x *= c;
  return a;
}

/// Quotient and remainder; the divisor must be nonzero.
template <class K>
std::pair<UPoly<K>, UPoly<K>> divrem(UPoly<K> a, const UPoly<K>& b) {
  if (b.empty()) throw DivisionByZero("polynomial division by zero");
  if (a.size() < b.size()) return {UPoly<K>{}, std::move(a)};
  K linv = inverse(b.back());
  UPoly<K> q(a.size() - b.size() + 1, zero_like(b.back()));
  for (long i = static_cast<long>(a.size()) - static_cast<long>(b.size()); i >= 0; --i) {
    K c = a[i + b.size() - 1] * linv;
    if (is_zero(c)) continue;
    q[i] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= c * b[j];
  }
  normalize(a);
  normalize(q);
  return {std::move(q), std::move(a)};
}

template <class K>
UPoly<K> rem(const UPoly<K>& a, const UPoly<K>& b) {
  return divrem(a, b).second;
}

/// Exact quotient; throws if the division leaves a remainder.
template <class K>
UPoly<K> exact_div(const UPoly<K>& a, const UPoly<K>& b) {
  auto [q, r] = divrem(a, b);
  if (!r.empty()) throw ZeroInput("exact polynomial division left a remainder");
  return q;
}

template <class K>
UPoly<K> make_monic(UPoly<K> f) {
  if (f.empty()) throw ZeroInput("cannot normalize the zero polynomial");
  K linv = inverse(f.back());
  for (K& c : f) c *= linv;
  return f;
}

/// Monic gcd by the Euclidean algorithm; gcd(0, 0) is 0.
template <class K>
UPoly<K> gcd(UPoly<K> a, UPoly<K> b) {
  while (!b.empty()) {
    UPoly<K> r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  return make_monic(std::move(a));
}

/// Returns (g, s, t) with s*a + t*b = g, g the monic gcd.
template <class K>
std::array<UPoly<K>, 3> extended_gcd(UPoly<K> a, UPoly<K> b) {
  const K sample = !a.empty() ? a[0] : (!b.empty() ? b[0] : throw ZeroInput("extended gcd of zeros"));
  UPoly<K> s0{one_like(sample)}, s1{}, t0{}, t1{one_like(sample)};
  while (!b.empty()) {
    auto [q, r] = divrem(a, b);
    a = std::move(b);
    b = std::move(r);
    UPoly<K> s2 = sub(s0, mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
    UPoly<K> t2 = sub(t0, mul(q, t1));
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (a.empty()) return {a, s0, t0};
  K linv = inverse(a.back());
  for (K& c : a) c *= linv;
  for (K& c : s0) c *= linv;
  for (K& c : t0) c *= linv;
  return {a, s0, t0};
}

template <class K>
UPoly<K> derivative(const UPoly<K>& f) {
  if (f.size() <= 1) return {};
  UPoly<K> r(f.size() - 1, zero_like(f[0]));
  for (std::size_t i = 1; i < f.size(); ++i)
    r[i - 1] = f[i] * int_like(f[0], static_cast<long>(i));
  normalize(r);
  return r;
}

/// Horner evaluation.  The point type may be a field extension of K as long
/// as K * P and P + P are defined.
template <class K, class P>
P eval(const UPoly<K>& f, const P& x) {
  P acc = zero_like(x);
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i] * one_like(x);
  return acc;
}

template <class K>
UPoly<K> mul_mod(const UPoly<K>& a, const UPoly<K>& b, const UPoly<K>& m) {
  return rem(mul(a, b), m);
}

/// a^e mod m with an arbitrary precision exponent e >= 0.
template <class K>
UPoly<K> pow_mod(const UPoly<K>& a, const mpz_class& e, const UPoly<K>& m) {
  if (m.empty()) throw DivisionByZero("pow_mod with zero modulus");
  UPoly<K> base = rem(a, m);
  UPoly<K> acc{one_like(m.back())};
  for (long bit = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; bit >= 0; --bit) {
    acc = mul_mod(acc, acc, m);
    if (mpz_tstbit(e.get_mpz_t(), bit)) acc = mul_mod(acc, base, m);
  }
  return acc;
}

/// True when the printed form needs parentheses inside a product or sum:
/// any '+', ' ' or a '-' beyond the leading sign.
inline bool compound_str(const std::string& c) {
  for (std::size_t k = (!c.empty() && c[0] == '-') ? 1 : 0; k < c.size(); ++k)
    if (c[k] == '+' || c[k] == '-' || c[k] == ' ') return true;
  return false;
}

template <class K>
std::string to_string(const UPoly<K>& f, const std::string& var) {
  if (f.empty()) return "0";
  std::string out;
  for (std::size_t i = f.size(); i-- > 0;) {
    if (is_zero(f[i])) continue;
    std::string c = elem_str(f[i]);
    bool paren = compound_str(c);
    bool negative = !paren && !c.empty() && c[0] == '-';
    std::string mag = negative ? c.substr(1) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (paren) mag = "(" + c + ")";
    if (i == 0) {
      out += mag;
    } else {
      if (mag != "1") out += mag + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace up
}  // namespace gwbez
