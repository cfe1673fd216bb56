#pragma once

// Resultants and gcds for curves in two affine variables.  Bivariate
// polynomials are handled as univariate polynomials in y whose coefficients
// live in K[x]; determinants over that ring use fraction-free elimination so
// every division is exact.

#include <utility>
#include <vector>

#include "gwbez/errors.hpp"
#include "gwbez/field_traits.hpp"
#include "gwbez/linalg.hpp"
#include "gwbez/poly.hpp"
#include "gwbez/upoly.hpp"

namespace gwbez {

// Coefficient vector in y, each entry a polynomial in x.  Index j holds the
// coefficient of y^j.
template <class K>
using YxPoly = std::vector<UPoly<K>>;

template <class K>
void yx_normalize(YxPoly<K>& a) {
  while (!a.empty() && up::is_zero_poly(a.back())) a.pop_back();
}

template <class K>
long yx_degree(const YxPoly<K>& a) {
  return static_cast<long>(a.size()) - 1;
}

template <class K>
YxPoly<K> yx_from_poly(const Poly<K>& f) {
  if (f.nvars() != 2) throw DimensionMismatch("expected a polynomial in x and y");
  YxPoly<K> a;
  long dy = f.degree_in(1);
  for (long j = 0; j <= dy; ++j)
    a.push_back(f.coeff_of(1, static_cast<std::uint32_t>(j)).to_upoly(0));
  yx_normalize(a);
  return a;
}

template <class K>
Poly<K> yx_to_poly(const YxPoly<K>& a) {
  Poly<K> f(2);
  for (std::size_t j = 0; j < a.size(); ++j)
    for (std::size_t i = 0; i < a[j].size(); ++i)
      if (!gwbez::is_zero(a[j][i]))
        f.add_term({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)}, a[j][i]);
  return f;
}

/// Determinant by the Bareiss scheme; entries stay polynomial because each
/// division by the previous pivot is exact.  Returns the zero polynomial for
/// a singular matrix.
template <class K>
UPoly<K> bareiss_det(std::vector<std::vector<UPoly<K>>> m, const K& sample) {
  const std::size_t n = m.size();
  UPoly<K> one{one_like(sample)};
  if (n == 0) return one;
  for (const auto& row : m)
    if (row.size() != n) throw DimensionMismatch("determinant of a non-square matrix");
  UPoly<K> prev = one;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (up::is_zero_poly(m[k][k])) {
      std::size_t piv = k + 1;
      while (piv < n && up::is_zero_poly(m[piv][k])) ++piv;
      if (piv == n) return UPoly<K>{};
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        UPoly<K> t = up::sub(up::mul(m[i][j], m[k][k]), up::mul(m[i][k], m[k][j]));
        m[i][j] = up::exact_div(t, prev);
      }
      m[i][k] = UPoly<K>{};
    }
    prev = m[k][k];
  }
  UPoly<K> d = m[n - 1][n - 1];
  if (sign < 0) d = up::neg(d);
  return d;
}

/// Sylvester matrix of f and g with respect to y.  The first deg_y(g) rows
/// carry the coefficients of f from the leading one down; the remaining
/// deg_y(f) rows carry those of g.
template <class K>
std::vector<std::vector<UPoly<K>>> sylvester_matrix_y(const Poly<K>& f, const Poly<K>& g) {
  YxPoly<K> a = yx_from_poly(f), b = yx_from_poly(g);
  if (a.empty() || b.empty()) throw ZeroInput("resultant of a zero polynomial");
  const long m = yx_degree(a), n = yx_degree(b);
  const std::size_t sz = static_cast<std::size_t>(m + n);
  std::vector<std::vector<UPoly<K>>> M(sz, std::vector<UPoly<K>>(sz));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j <= m; ++j) M[i][i + j] = a[m - j];
  for (long i = 0; i < m; ++i)
    for (long j = 0; j <= n; ++j) M[n + i][i + j] = b[n - j];
  return M;
}

/// Res_y(f, g) as a polynomial in x.
template <class K>
UPoly<K> resultant_y(const Poly<K>& f, const Poly<K>& g) {
  YxPoly<K> a = yx_from_poly(f), b = yx_from_poly(g);
  if (a.empty() || b.empty()) throw ZeroInput("resultant of a zero polynomial");
  const K one = one_like(f.terms().begin()->second);
  if (yx_degree(a) + yx_degree(b) == 0) return UPoly<K>{one};
  return bareiss_det(sylvester_matrix_y(f, g), one);
}

/// Resultant of two univariate polynomials over a field.
template <class K>
K resultant(const UPoly<K>& f, const UPoly<K>& g) {
  if (up::is_zero_poly(f) || up::is_zero_poly(g))
    throw ZeroInput("resultant of a zero polynomial");
  const long m = up::degree(f), n = up::degree(g);
  const K sample = f[0];
  if (m + n == 0) return one_like(sample);
  Matrix<K> M(static_cast<std::size_t>(m + n),
              std::vector<K>(static_cast<std::size_t>(m + n), zero_like(sample)));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j <= m; ++j) M[i][i + j] = f[m - j];
  for (long i = 0; i < m; ++i)
    for (long j = 0; j <= n; ++j) M[n + i][i + j] = g[n - j];
  return det(M);
}

template <class K>
UPoly<K> yx_content(const YxPoly<K>& a) {
  UPoly<K> c;
  for (const auto& ci : a) c = up::gcd(c, ci);
  return c;
}

template <class K>
YxPoly<K> yx_primitive(YxPoly<K> a) {
  yx_normalize(a);
  if (a.empty()) return a;
  UPoly<K> c = yx_content(a);
  for (auto& ci : a) ci = up::exact_div(ci, c);
  return a;
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a reduced modulo b, all
/// arithmetic inside K[x].  Requires deg a >= deg b and b nonzero.
template <class K>
YxPoly<K> yx_prem(YxPoly<K> a, const YxPoly<K>& b) {
  if (b.empty()) throw DivisionByZero("pseudo-remainder by zero");
  const long db = yx_degree(b);
  const UPoly<K>& lb = b.back();
  long e = yx_degree(a) - db + 1;
  while (!a.empty() && yx_degree(a) >= db) {
    const long da = yx_degree(a);
    UPoly<K> la = a.back();
    for (auto& c : a) c = up::mul(c, lb);
    for (long j = 0; j <= db; ++j)
      a[da - db + j] = up::sub(a[da - db + j], up::mul(la, b[j]));
    yx_normalize(a);
    --e;
  }
  for (long i = 0; i < e; ++i)
    for (auto& c : a) c = up::mul(c, lb);
  return a;
}

/// Gcd in K[x, y] via the primitive remainder sequence.  The result is
/// normalized so its leading coefficient with respect to y is monic in x.
template <class K>
Poly<K> bivariate_gcd(const Poly<K>& f, const Poly<K>& g) {
  YxPoly<K> a = yx_from_poly(f), b = yx_from_poly(g);
  if (a.empty() && b.empty()) throw ZeroInput("gcd of two zero polynomials");
  const K one = one_like((a.empty() ? b : a).back().back());
  UPoly<K> cont = up::gcd(yx_content(a), yx_content(b));
  a = yx_primitive(std::move(a));
  b = yx_primitive(std::move(b));
  if (yx_degree(a) < yx_degree(b)) std::swap(a, b);
  while (!b.empty() && yx_degree(b) > 0) {
    YxPoly<K> r = yx_primitive(yx_prem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  if (!b.empty()) a = YxPoly<K>{UPoly<K>{one}};  // coprime once b drops to a unit
  for (auto& c : a) c = up::mul(c, cont);
  K scale = gwbez::inverse(up::lead(a.back()));
  for (auto& c : a) c = up::scale(c, scale);
  return yx_to_poly(a);
}

/// True when the affine curves f = 0 and g = 0 share a component.
template <class K>
bool curves_share_component(const Poly<K>& f, const Poly<K>& g) {
  if (f.is_zero() || g.is_zero()) throw ZeroInput("zero polynomial is not a curve");
  return bivariate_gcd(f, g).total_degree() > 0;
}

}  // namespace gwbez
