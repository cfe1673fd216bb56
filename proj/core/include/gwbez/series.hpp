#pragma once

#include <algorithm>
#include <vector>

#include "gwbez/errors.hpp"
#include "gwbez/field_traits.hpp"
#include "gwbez/poly.hpp"
#include "gwbez/upoly.hpp"

namespace gwbez {

/// Power series truncated at x^precision (inclusive).  Arithmetic results
/// carry the smaller precision of the operands.
template <class K>
class TruncatedSeries {
 public:
  TruncatedSeries(long precision, const K& sample)
      : c_(precision + 1, zero_like(sample)) {
    if (precision < 0) throw InsufficientPrecision("series precision must be >= 0");
  }

  static TruncatedSeries from_upoly(const UPoly<K>& f, long precision, const K& sample) {
    TruncatedSeries s(precision, sample);
    for (std::size_t i = 0; i < f.size() && i <= static_cast<std::size_t>(precision); ++i)
      s.c_[i] = f[i];
    return s;
  }

  long precision() const { return static_cast<long>(c_.size()) - 1; }
  const K& operator[](std::size_t i) const { return c_.at(i); }
  void set(std::size_t i, const K& v) { c_.at(i) = v; }
  const K& sample() const { return c_[0]; }

  /// Index of the first nonzero coefficient, or -1 when none up to the
  /// precision.
  long order() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!gwbez::is_zero(c_[i])) return static_cast<long>(i);
    return -1;
  }

  TruncatedSeries truncated(long precision) const {
    TruncatedSeries r(precision, c_[0]);
    for (long i = 0; i <= precision && i <= this->precision(); ++i) r.c_[i] = c_[i];
    return r;
  }

  TruncatedSeries operator-() const {
    TruncatedSeries r = *this;
    for (K& v : r.c_) v = -v;
    return r;
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    long p = std::min(a.precision(), b.precision());
    TruncatedSeries r(p, a.c_[0]);
    for (long i = 0; i <= p; ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
  }

  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    long p = std::min(a.precision(), b.precision());
    TruncatedSeries r(p, a.c_[0]);
    for (long i = 0; i <= p; ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    long p = std::min(a.precision(), b.precision());
    TruncatedSeries r(p, a.c_[0]);
    for (long i = 0; i <= p; ++i)
      for (long j = 0; i + j <= p; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    return r;
  }

  friend TruncatedSeries operator*(const K& s, const TruncatedSeries& a) {
    TruncatedSeries r = a;
    for (K& v : r.c_) v = s * v;
    return r;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.c_ == b.c_;
  }

  /// Multiplicative inverse; the constant term must be a unit.
  TruncatedSeries inverse() const {
    if (gwbez::is_zero(c_[0]))
      throw DivisionByZero("series inverse needs a unit constant term");
    TruncatedSeries r(precision(), c_[0]);
    K u = gwbez::inverse(c_[0]);
    r.c_[0] = u;
    for (long k = 1; k <= precision(); ++k) {
      K acc = zero_like(c_[0]);
      for (long i = 1; i <= k; ++i) acc += c_[i] * r.c_[k - i];
      r.c_[k] = -(u * acc);
    }
    return r;
  }

 private:
  std::vector<K> c_;  // coefficient i of x^i, size precision + 1
};

/// g(x, Y(x)) for a bivariate polynomial g (variables x = 0, y = 1),
/// truncated to the precision of Y.
template <class K>
TruncatedSeries<K> series_of_bivariate(const Poly<K>& g, const TruncatedSeries<K>& Y) {
  if (g.nvars() != 2) throw DimensionMismatch("expected a bivariate polynomial");
  const K sample = Y.sample();
  long p = Y.precision();
  long dy = g.degree_in(1);
  TruncatedSeries<K> acc(p, sample);
  for (long j = dy; j >= 0; --j) {
    acc = acc * Y;
    UPoly<K> cj = g.coeff_of(1, static_cast<std::uint32_t>(j)).to_upoly(0);
    acc = acc + TruncatedSeries<K>::from_upoly(cj, p, sample);
  }
  return acc;
}

/// Unique power series G with G(0) = 0 and g(x, G(x)) = 0 mod x^(N+1).
/// Requires g(0,0) = 0 and an invertible y-derivative at the origin.
template <class K>
TruncatedSeries<K> hensel_series_root(const Poly<K>& g, long N) {
  if (g.nvars() != 2) throw DimensionMismatch("expected a bivariate polynomial");
  if (g.is_zero()) throw ZeroInput("zero polynomial has no isolated branch");
  const K sample = g.terms().begin()->second;
  const K zero = zero_like(sample);
  std::vector<K> origin{zero, zero};
  if (!gwbez::is_zero(g.eval(origin)))
    throw NotHenselian("the curve does not pass through the origin");
  Poly<K> gy = g.derivative(1);
  if (gwbez::is_zero(gy.eval(origin)))
    throw NotHenselian("y-derivative vanishes at the origin");

  TruncatedSeries<K> G(N, sample);
  // Newton iteration at full precision; each pass doubles the number of
  // correct coefficients, starting from one.
  long passes = 1;
  while ((1L << passes) < N + 2) ++passes;
  for (long it = 0; it <= passes; ++it) {
    TruncatedSeries<K> val = series_of_bivariate(g, G);
    TruncatedSeries<K> der = series_of_bivariate(gy, G);
    G = G - val * der.inverse();
  }
  if (series_of_bivariate(g, G).order() != -1)
    throw NotHenselian("Newton iteration failed to converge");
  return G;
}

}  // namespace gwbez
