#pragma once

// Local degree of a zero of a polynomial system, valued in the
// Grothendieck-Witt group of the base field.  Three routes: the trace form
// of the Jacobian at a simple zero, the closed form for a univariate
// monomial, and the power-series reduction for a plane-curve intersection
// of higher multiplicity at a rational point.

#include <optional>
#include <string>
#include <vector>

#include "gwbez/errors.hpp"
#include "gwbez/extension.hpp"
#include "gwbez/geometry.hpp"
#include "gwbez/gw.hpp"
#include "gwbez/linalg.hpp"
#include "gwbez/poly.hpp"
#include "gwbez/series.hpp"
#include "gwbez/trace_form.hpp"

namespace gwbez {

enum class DegreeMethod { Transverse, Series, ClosedForm };
std::string method_name(DegreeMethod m);

struct LocalDegreeResult {
  GWElement degree = GWElement::make_q({});
  long multiplicity = 0;
  std::string unit;  // odd-rank unit of the closed form; empty when rank is even
  DegreeMethod method = DegreeMethod::ClosedForm;
  bool char_warning = false;  // series reduction ran in positive characteristic
};

/// Diagonal entries of the local degree at the origin of x -> a*x^d:
/// (d-1)/2 hyperbolic pairs plus <a> for odd d, d/2 pairs for even d.
template <class K>
std::vector<K> monomial_degree_diag(const K& a, long d) {
  if (gwbez::is_zero(a)) throw ZeroCoefficient("monomial needs a nonzero coefficient");
  if (d < 1) throw ZeroInput("monomial degree must be at least one");
  std::vector<K> diag;
  diag.reserve(d);
  const K one = one_like(a);
  for (long i = 0; i < d / 2; ++i) {
    diag.push_back(one);
    diag.push_back(-one);
  }
  if (d % 2 == 1) diag.push_back(a);
  return diag;
}

/// Rank-d bilinear form of k[x]/(a*x^d) on the basis 1, x, ..., x^(d-1):
/// the Hankel matrix with a on the antidiagonal.  Serves as an independent
/// oracle for the closed form above.
template <class K>
Matrix<K> hankel_form(const K& a, long n) {
  if (gwbez::is_zero(a)) throw ZeroUnit("Hankel form needs a nonzero unit");
  if (n < 1) throw ZeroInput("Hankel form needs positive rank");
  Matrix<K> m = make_matrix(n, n, a);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) m[i][j] = (i + j == n - 1) ? a : zero_like(a);
  return m;
}

template <class K>
std::vector<K> hankel_oracle_diag(const K& a, long n) {
  return gram_diagonalize(hankel_form(a, n));
}

/// Outcome of composing f with the branch of g through the origin.
template <class K>
struct SeriesReduction {
  TruncatedSeries<K> G;         // branch: g(x, G(x)) = 0, G(0) = 0
  TruncatedSeries<K> composed;  // f(x, G(x))
  long n;                       // order of the first nonzero coefficient
  K a_n;                        // that coefficient
};

/// Composes f with the branch of g and locates the leading coefficient.
/// Precision starts just above the product of the total degrees and doubles
/// when the composed series vanishes entirely, which past a few rounds can
/// only mean a shared component.
template <class K>
SeriesReduction<K> series_reduce(const Poly<K>& f, const Poly<K>& g) {
  if (f.nvars() != 2 || g.nvars() != 2)
    throw DimensionMismatch("series reduction works on two plane curves");
  if (f.is_zero() || g.is_zero()) throw ZeroInput("zero polynomial is not a curve");
  const K sample = f.terms().begin()->second;
  const std::vector<K> origin{zero_like(sample), zero_like(sample)};
  if (!gwbez::is_zero(f.eval(origin)) || !gwbez::is_zero(g.eval(origin)))
    throw NotHenselian("both curves must pass through the origin");
  long N = f.total_degree() * g.total_degree() + 1;
  for (int round = 0; round <= 4; ++round) {
    TruncatedSeries<K> G = hensel_series_root(g, N);
    TruncatedSeries<K> composed = series_of_bivariate(f, G);
    long n = composed.order();
    if (n >= 0) return SeriesReduction<K>{G, composed, n, composed[n]};
    N *= 2;
  }
  throw PrecisionExhausted(
      "composed series vanishes to high order; the curves likely share a component");
}

namespace detail {

// Adds to acc every way of writing `sum` as `parts` parts of size >= u,
// weighted by the multinomial count and the product of branch coefficients.
template <class K>
void branch_partition_sum(const TruncatedSeries<K>& G, long u, long parts, long sum,
                          const mpz_class& count, const K& prod, K& acc) {
  if (sum == 0) {
    if (parts == 0) acc += big_int_like(acc, count) * prod;
    return;
  }
  if (parts <= 0 || u > sum || parts > sum) return;
  K pw = one_like(acc);
  for (long t = 0; t * u <= sum && t <= parts; ++t) {
    if (t > 0) {
      if (gwbez::is_zero(G[u])) break;
      pw = pw * G[u];
    }
    mpz_class choose;
    mpz_bin_uiui(choose.get_mpz_t(), static_cast<unsigned long>(parts),
                 static_cast<unsigned long>(t));
    branch_partition_sum(G, u + 1, parts - t, sum - t * u, count * choose, prod * pw, acc);
  }
}

}  // namespace detail

/// Coefficient of x^m in G(x)^j for a branch with G(0) = 0, summed over
/// partitions of m into exactly j positive parts with multinomial weights.
template <class K>
K branch_power_coeff(const TruncatedSeries<K>& G, long j, long m) {
  if (m > G.precision()) throw InsufficientPrecision("branch not expanded far enough");
  if (!gwbez::is_zero(G[0])) throw NotHenselian("branch must vanish at the origin");
  K acc = zero_like(G[0]);
  if (j == 0) return m == 0 ? one_like(G[0]) : acc;
  if (m < j) return acc;
  detail::branch_partition_sum(G, 1L, j, m, mpz_class(1), one_like(G[0]), acc);
  return acc;
}

/// Coefficient of x^n in f(x, G(x)) assembled from the coefficients of f
/// and of the branch, without composing the series.  Cross-checked against
/// the composed series in the tests.
template <class K>
K composed_coefficient(const Poly<K>& f, const TruncatedSeries<K>& G, long n) {
  if (f.nvars() != 2) throw DimensionMismatch("expected a polynomial in x and y");
  if (n < 0 || n > G.precision())
    throw InsufficientPrecision("requested order beyond the branch precision");
  K acc = zero_like(G[0]);
  const long dy = f.degree_in(1);
  for (long j = 0; j <= dy; ++j) {
    UPoly<K> fj = f.coeff_of(1, static_cast<std::uint32_t>(j)).to_upoly(0);
    for (std::size_t i = 0; i < fj.size() && static_cast<long>(i) <= n; ++i) {
      if (gwbez::is_zero(fj[i])) continue;
      acc += fj[i] * branch_power_coeff(G, j, n - static_cast<long>(i));
    }
  }
  return acc;
}

template <class K>
Poly<K> swap_xy(const Poly<K>& f) {
  if (f.nvars() != 2) throw DimensionMismatch("expected a polynomial in x and y");
  Poly<K> r(2);
  for (const auto& [e, c] : f.terms()) r.add_term({e[1], e[0]}, c);
  return r;
}

/// Shifts the origin to the given rational point: returns x -> f(x + at).
template <class K>
Poly<K> translate_to_origin(const Poly<K>& f, const std::vector<K>& at) {
  if (static_cast<int>(at.size()) != f.nvars())
    throw DimensionMismatch("shift vector length does not match the variable count");
  Poly<K> r = f;
  for (int i = 0; i < f.nvars(); ++i) {
    if (gwbez::is_zero(at[i])) continue;
    Poly<K> repl = Poly<K>::variable(f.nvars(), i, one_like(at[i])) +
                   Poly<K>::constant(f.nvars(), at[i]);
    r = r.substitute(i, repl);
  }
  return r;
}

template <class K>
struct SeriesDegree {
  std::vector<K> diag;  // diagonal entries of the local degree
  long n = 0;           // intersection multiplicity at the origin
};

/// Local degree at the origin of the section (f, g) by series reduction.
/// The reduction needs a unit y-derivative on the second component; the
/// other three arrangements (swapping the components and/or the variables)
/// are tried in turn, each contributing the sign of its coordinate change.
template <class K>
SeriesDegree<K> series_degree(const Poly<K>& f, const Poly<K>& g) {
  if (f.is_zero() || g.is_zero()) throw ZeroInput("zero polynomial is not a curve");
  const K sample = f.terms().begin()->second;
  const std::vector<K> origin{zero_like(sample), zero_like(sample)};
  const auto unit_dy = [&](const Poly<K>& h) {
    return !gwbez::is_zero(h.derivative(1).eval(origin));
  };

  // Arrangements, in order: identity; component swap; variable swap; both.
  Poly<K> fsw = swap_xy(f), gsw = swap_xy(g);
  int sign = 1;
  const Poly<K>* lead = nullptr;
  const Poly<K>* hens = nullptr;
  if (unit_dy(g)) {
    lead = &f; hens = &g; sign = 1;
  } else if (unit_dy(f)) {
    lead = &g; hens = &f; sign = -1;
  } else if (unit_dy(gsw)) {
    lead = &fsw; hens = &gsw; sign = -1;
  } else if (unit_dy(fsw)) {
    lead = &gsw; hens = &fsw; sign = 1;
  } else {
    throw NotHenselian("every partial derivative vanishes at the point");
  }

  SeriesReduction<K> red = series_reduce(*lead, *hens);
  K scale = hens->derivative(1).eval(origin);
  if (sign < 0) scale = -scale;
  SeriesDegree<K> out;
  out.diag = monomial_degree_diag(red.a_n, red.n);
  for (K& d : out.diag) d = scale * d;
  out.n = red.n;
  return out;
}

/// Trace form of the Jacobian of a square system at a simple zero with
/// coordinates in the extension E; diagonal entries over the base field.
template <class K>
std::vector<K> transverse_degree_diag(const std::vector<Poly<K>>& fs,
                                      const ExtFieldPtr<K>& E,
                                      const std::vector<ExtElem<K>>& at) {
  for (const auto& c : at)
    if (!same_field(c.field(), E))
      throw MismatchedParents("point coordinates live in a different field");
  ExtElem<K> J = jacobian_det(fs, at);
  if (J.is_zero()) throw ZeroJacobian("Jacobian vanishes; the zero is not simple");
  return trace_form(E, J);
}

/// Concatenated trace forms of several rank-one forms over E.
template <class K>
std::vector<K> trace_diag(const ExtFieldPtr<K>& E, const std::vector<ExtElem<K>>& entries) {
  std::vector<K> out;
  for (const auto& b : entries) {
    std::vector<K> t = trace_form(E, b);
    out.insert(out.end(), t.begin(), t.end());
  }
  return out;
}

// Drivers producing tagged group elements over the two base fields.
LocalDegreeResult local_degree_transverse(const std::vector<Poly<Rat>>& fs,
                                          const ExtFieldPtr<Rat>& E,
                                          const std::vector<ExtElem<Rat>>& at);
LocalDegreeResult local_degree_transverse(const std::vector<Poly<Fp>>& fs,
                                          const ExtFieldPtr<Fp>& E,
                                          const std::vector<ExtElem<Fp>>& at);
LocalDegreeResult local_degree_series(const Poly<Rat>& f, const Poly<Rat>& g);
LocalDegreeResult local_degree_series(const Poly<Fp>& f, const Poly<Fp>& g);
LocalDegreeResult local_degree_monomial(const Rat& a, long d);
LocalDegreeResult local_degree_monomial(const Fp& a, long d);

}  // namespace gwbez
