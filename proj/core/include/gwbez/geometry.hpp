#pragma once

// Projective hypersurfaces, the twisted affine charts, and the Jacobian
// data feeding local degree computations.  Chart ell of P^n drops the
// coordinate x_ell; the remaining coordinates keep their original order and
// the x0 slot picks up the sign (-1)^ell.

#include <string>
#include <vector>

#include "gwbez/errors.hpp"
#include "gwbez/field_traits.hpp"
#include "gwbez/linalg.hpp"
#include "gwbez/poly.hpp"

namespace gwbez {

/// Nonzero homogeneous polynomial of degree >= 1 on P^n.
template <class K>
class HomogeneousPoly {
 public:
  explicit HomogeneousPoly(Poly<K> F) : F_(std::move(F)) {
    if (F_.is_zero()) throw ZeroInput("a hypersurface needs a nonzero polynomial");
    if (F_.nvars() < 2) throw DimensionMismatch("projective space needs at least two coordinates");
    long d = -1;
    if (!F_.is_homogeneous(&d)) throw NotHomogeneous("terms of unequal total degree");
    if (d < 1) throw NotHomogeneous("a hypersurface has degree at least one");
    degree_ = d;
  }

  int n() const { return F_.nvars() - 1; }
  long degree() const { return degree_; }
  const Poly<K>& poly() const { return F_; }

 private:
  Poly<K> F_;
  long degree_;
};

/// F restricted to the twisted chart: x_ell = 1, the other coordinates become
/// the affine variables in index order, and the x0 slot is negated for odd ell.
template <class K>
Poly<K> dehomogenize_twisted(const HomogeneousPoly<K>& F, int chart) {
  const int n = F.n();
  if (chart < 0 || chart > n) throw IndexOutOfRange("chart index out of range");
  const bool twist = (chart % 2 == 1);
  Poly<K> f(n);
  for (const auto& [e, c] : F.poly().terms()) {
    typename Poly<K>::Expo e2;
    e2.reserve(n);
    for (int j = 0; j <= n; ++j)
      if (j != chart) e2.push_back(e[j]);
    K c2 = c;
    if (twist && e[0] % 2 == 1) c2 = -c2;
    f.add_term(e2, c2);
  }
  return f;
}

/// Inverse of dehomogenize_twisted on terms of total degree <= d.  Only the
/// untwisted chart (even ell) reproduces F exactly; tests use chart 0.
template <class K>
HomogeneousPoly<K> homogenize(const Poly<K>& f, int chart, long d) {
  const int n = f.nvars();
  if (chart < 0 || chart > n) throw IndexOutOfRange("chart index out of range");
  const bool twist = (chart % 2 == 1);
  Poly<K> F(n + 1);
  for (const auto& [e, c] : f.terms()) {
    long t = 0;
    for (auto x : e) t += x;
    if (t > d) throw NotHomogeneous("affine degree exceeds the target degree");
    typename Poly<K>::Expo e2;
    e2.reserve(n + 1);
    int pos = 0;
    for (int j = 0; j <= n; ++j) {
      if (j == chart) e2.push_back(static_cast<std::uint32_t>(d - t));
      else e2.push_back(e[pos++]);
    }
    K c2 = c;
    if (twist && e2[0] % 2 == 1) c2 = -c2;
    F.add_term(e2, c2);
  }
  return HomogeneousPoly<K>(std::move(F));
}

/// Lowest index with a nonzero projective coordinate.
template <class P>
int lowest_nonzero_chart(const std::vector<P>& proj) {
  for (std::size_t j = 0; j < proj.size(); ++j)
    if (!gwbez::is_zero(proj[j])) return static_cast<int>(j);
  throw ZeroInput("all projective coordinates vanish");
}

/// Twisted chart coordinates of a projective point; requires proj[chart] != 0.
template <class P>
std::vector<P> chart_coords(const std::vector<P>& proj, int chart) {
  const int n = static_cast<int>(proj.size()) - 1;
  if (chart < 0 || chart > n) throw IndexOutOfRange("chart index out of range");
  if (gwbez::is_zero(proj[chart]))
    throw ChartMismatch("the point leaves this chart");
  P inv = gwbez::inverse(proj[chart]);
  std::vector<P> out;
  out.reserve(n);
  for (int j = 0; j <= n; ++j) {
    if (j == chart) continue;
    P c = proj[j] * inv;
    if (j == 0 && chart % 2 == 1) c = -c;
    out.push_back(c);
  }
  return out;
}

/// Gradient of an affine polynomial at a point with coordinates in a field P
/// containing the coefficients.
template <class K, class P>
std::vector<P> gradient(const Poly<K>& f, const std::vector<P>& at) {
  if (static_cast<int>(at.size()) != f.nvars())
    throw DimensionMismatch("point dimension does not match the variable count");
  std::vector<P> g;
  g.reserve(f.nvars());
  for (int j = 0; j < f.nvars(); ++j) g.push_back(f.derivative(j).eval(at));
  return g;
}

/// Signed volume spanned by n vectors of length n: the determinant of the
/// matrix with the vectors as rows.
template <class P>
P cross_product_volume(const std::vector<std::vector<P>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) throw DimensionMismatch("no vectors given");
  for (const auto& r : rows)
    if (r.size() != n) throw DimensionMismatch("vectors must have length equal to their count");
  Matrix<P> M(n, std::vector<P>(n, zero_like(rows[0][0])));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) M[i][j] = rows[i][j];
  return det(M);
}

/// Determinant of the matrix of partial derivatives of a square system,
/// evaluated at the point.
template <class K, class P>
P jacobian_det(const std::vector<Poly<K>>& fs, const std::vector<P>& at) {
  const std::size_t n = fs.size();
  if (n == 0) throw DimensionMismatch("empty system");
  if (at.size() != n) throw DimensionMismatch("system is not square at this point");
  std::vector<std::vector<P>> rows;
  rows.reserve(n);
  for (const auto& f : fs) {
    if (static_cast<std::size_t>(f.nvars()) != n)
      throw DimensionMismatch("system is not square");
    rows.push_back(gradient(f, at));
  }
  return cross_product_volume(rows);
}

/// Parity data deciding whether the Euler identity applies.
struct OrientabilityReport {
  long n = 0;
  std::vector<long> degrees;
  long N = 0;          // -n - 1 + sum of degrees
  bool orientable = false;
  std::string divisor_note;  // nonempty exactly when N is odd

  std::string str() const;
};

OrientabilityReport orientability(long n, const std::vector<long>& degrees);

}  // namespace gwbez
