#pragma once

// Complete intersection-point finding for pairs of plane curves.  Affine
// points come from a resultant in a sheared frame, one residue field per
// irreducible factor; points on the line x0 = 0 are solved directly.  Every
// returned list passes the multiplicity audit against the product of the
// curve degrees.

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gwbez/errors.hpp"
#include "gwbez/extension.hpp"
#include "gwbez/factor.hpp"
#include "gwbez/geometry.hpp"
#include "gwbez/local_degree.hpp"
#include "gwbez/poly.hpp"
#include "gwbez/resultant.hpp"

namespace gwbez {

template <class K>
struct IntersectionPoint {
  int chart = 0;
  ExtFieldPtr<K> residue_field;    // k[a]/(m); degree 1 marks a rational point
  std::vector<ExtElem<K>> coords;  // chart-local coordinates, both in k(p)
  long multiplicity = 1;           // dim over the base field
  bool transverse = false;
  bool on_divisor_x0 = false;

  long field_degree() const { return residue_field->degree(); }
};

/// Two plane curves with no common component, neither containing the line
/// x0 = 0.
template <class K>
class CurvePair {
 public:
  CurvePair(HomogeneousPoly<K> F, HomogeneousPoly<K> G)
      : F_(std::move(F)), G_(std::move(G)) {
    if (F_.n() != 2 || G_.n() != 2)
      throw DimensionMismatch("curve pairs live in the projective plane");
    if (vanishes_on_x0(F_) || vanishes_on_x0(G_))
      throw DegenerateCurve("curve contains the line x0 = 0");
    if (curves_share_component(dehomogenize_twisted(F_, 0), dehomogenize_twisted(G_, 0)))
      throw CommonComponent("curves share a component");
  }

  const HomogeneousPoly<K>& F() const { return F_; }
  const HomogeneousPoly<K>& G() const { return G_; }
  long dF() const { return F_.degree(); }
  long dG() const { return G_.degree(); }

 private:
  static bool vanishes_on_x0(const HomogeneousPoly<K>& H) {
    for (const auto& [e, c] : H.poly().terms())
      if (e[0] == 0) return false;
    return true;
  }

  HomogeneousPoly<K> F_, G_;
};

// Factorization entry point shared by both base fields; the seed feeds the
// probabilistic splitting over a prime field and is ignored over Q.
inline UFactor<Rat> factor_in_base(const UPoly<Rat>& f, std::uint64_t) {
  return univariate_factor(f);
}
inline UFactor<Fp> factor_in_base(const UPoly<Fp>& f, std::uint64_t seed) {
  return univariate_factor(f, seed);
}

/// Order of the intersection at a point with coordinates in E, together
/// with the transversality flag.  Chart-local curves f, g over the base.
template <class K>
std::pair<long, bool> local_order(const Poly<K>& f, const Poly<K>& g,
                                  const ExtFieldPtr<K>& E,
                                  const std::vector<ExtElem<K>>& at) {
  ExtElem<K> J = jacobian_det(std::vector<Poly<K>>{f, g}, at);
  if (!J.is_zero()) return {1, true};
  auto embed = [&](const K& c) { return E->embed(c); };
  Poly<ExtElem<K>> fe = translate_to_origin(f.map_coeffs(embed), at);
  Poly<ExtElem<K>> ge = translate_to_origin(g.map_coeffs(embed), at);
  SeriesDegree<ExtElem<K>> sd = series_degree(fe, ge);
  return {sd.n, false};
}

/// Order of f(x, G(x)) at a rational chart-0 point of the pair; equals the
/// intersection multiplicity there.
template <class K>
long multiplicity_at(const CurvePair<K>& pair, const std::vector<K>& at) {
  Poly<K> f = translate_to_origin(dehomogenize_twisted(pair.F(), 0), at);
  Poly<K> g = translate_to_origin(dehomogenize_twisted(pair.G(), 0), at);
  return series_degree(f, g).n;
}

template <class K>
bool is_transverse(const CurvePair<K>& pair, const IntersectionPoint<K>& p) {
  std::vector<Poly<K>> fs{dehomogenize_twisted(pair.F(), p.chart),
                          dehomogenize_twisted(pair.G(), p.chart)};
  return !jacobian_det(fs, p.coords).is_zero();
}

template <class K>
std::string point_sort_key(const IntersectionPoint<K>& p) {
  std::string s = std::to_string(p.chart) + "|" + poly_sort_key(p.residue_field->modulus());
  for (const auto& c : p.coords) s += "|" + c.str();
  return s;
}

namespace detail {

// x1 -> x1 + c * x2 on a chart-0 affine polynomial.
template <class K>
Poly<K> shear_affine(const Poly<K>& f, long c, const K& sample) {
  if (c == 0) return f;
  Poly<K> repl = Poly<K>::variable(2, 0, one_like(sample)) +
                 Poly<K>::constant(2, int_like(sample, c)) * Poly<K>::variable(2, 1, one_like(sample));
  return f.substitute(0, repl);
}

template <class K>
UPoly<ExtElem<K>> specialize_x(const Poly<K>& f, const ExtFieldPtr<K>& E,
                               const ExtElem<K>& alpha) {
  YxPoly<K> rows = yx_from_poly(f);
  UPoly<ExtElem<K>> out;
  out.reserve(rows.size());
  for (const auto& cj : rows) out.push_back(up::eval(cj, alpha));
  up::normalize(out);
  return out;
}

// Exact membership check of a point on both chart-local curves.
template <class K>
void check_on_curves(const Poly<K>& f, const Poly<K>& g,
                     const std::vector<ExtElem<K>>& at) {
  if (!f.eval(at).is_zero() || !g.eval(at).is_zero())
    throw IncompletePointSet("computed point does not lie on both curves");
}

// Membership check plus multiplicity and transversality.  A point where
// every partial derivative vanishes defeats the series reduction in any
// frame, so the pipeline reports the shear as exhausted.
template <class K>
void fill_local(IntersectionPoint<K>& p, const Poly<K>& f, const Poly<K>& g) {
  check_on_curves(f, g, p.coords);
  try {
    auto [n, tv] = local_order(f, g, p.residue_field, p.coords);
    p.multiplicity = n * p.residue_field->degree();
    p.transverse = tv;
  } catch (const NotHenselian&) {
    throw ShearExhausted("both curves are singular at a common point");
  }
}

}  // namespace detail

/// All intersection points of the pair, over every residue field, sorted by
/// (chart, minimal polynomial, coordinates).  The sum of multiplicities is
/// checked against dF * dG before returning.
template <class K>
std::vector<IntersectionPoint<K>> find_intersections(const CurvePair<K>& pair,
                                                     std::uint64_t seed = 0) {
  const K one = one_like(pair.F().poly().terms().begin()->second);
  const K zero = zero_like(one);
  const long dF = pair.dF(), dG = pair.dG();
  std::vector<IntersectionPoint<K>> points;

  // Points on the line x0 = 0, located on the parametrization [0 : 1 : t]
  // plus the single remaining point [0 : 0 : 1].
  Poly<K> BF = pair.F().poly().substitute_const(0, zero);
  Poly<K> BG = pair.G().poly().substitute_const(0, zero);
  UPoly<K> hF = BF.substitute_const(1, one).to_upoly(2);
  UPoly<K> hG = BG.substitute_const(1, one).to_upoly(2);
  UPoly<K> hcom = up::gcd(hF, hG);
  if (up::degree(hcom) > 0) {
    UFactor<K> fac = factor_in_base(hcom, seed);
    for (const auto& [m, e] : fac.factors) {
      ExtFieldPtr<K> E = ExtensionField<K>::make(m);
      IntersectionPoint<K> p;
      p.chart = 1;
      p.residue_field = E;
      p.coords = {E->zero(), E->gen()};
      p.on_divisor_x0 = true;
      detail::fill_local(p, dehomogenize_twisted(pair.F(), 1),
                         dehomogenize_twisted(pair.G(), 1));
      points.push_back(std::move(p));
    }
  }
  {
    // [0:0:1] lies on a curve exactly when its x2-pure coefficient vanishes.
    auto corner = [&](const Poly<K>& B, long d) {
      return gwbez::is_zero(B.coeff({0u, 0u, static_cast<std::uint32_t>(d)}, one));
    };
    if (corner(BF, dF) && corner(BG, dG)) {
      ExtFieldPtr<K> E = ExtensionField<K>::make(UPoly<K>{zero, one});
      IntersectionPoint<K> p;
      p.chart = 2;
      p.residue_field = E;
      p.coords = {E->zero(), E->zero()};
      p.on_divisor_x0 = true;
      detail::fill_local(p, dehomogenize_twisted(pair.F(), 2),
                         dehomogenize_twisted(pair.G(), 2));
      points.push_back(std::move(p));
    }
  }
  long infinity_mult = 0;
  for (const auto& p : points) infinity_mult += p.multiplicity;

  // Affine points, from a sheared frame where the resultant in y behaves.
  const Poly<K> f0 = dehomogenize_twisted(pair.F(), 0);
  const Poly<K> g0 = dehomogenize_twisted(pair.G(), 0);
  const long max_retries = 2 * dF * dG;
  bool done = false;
  for (long attempt = 0; attempt <= max_retries && !done; ++attempt) {
    // c = 0, 1, -1, 2, -2, ...
    const long c = (attempt % 2 == 1) ? (attempt + 1) / 2 : -(attempt / 2);
    Poly<K> fs = detail::shear_affine(f0, c, one);
    Poly<K> gs = detail::shear_affine(g0, c, one);
    if (fs.degree_in(1) != dF || gs.degree_in(1) != dG) continue;

    UPoly<K> R = resultant_y(fs, gs);
    if (up::is_zero_poly(R)) throw CommonComponent("resultant vanishes identically");

    std::vector<IntersectionPoint<K>> affine;
    bool good = true;
    if (up::degree(R) > 0) {
      UFactor<K> fac = factor_in_base(R, seed);
      for (const auto& [m, e] : fac.factors) {
        ExtFieldPtr<K> E = ExtensionField<K>::make(m);
        ExtElem<K> alpha = E->gen();
        UPoly<ExtElem<K>> fy = detail::specialize_x(fs, E, alpha);
        UPoly<ExtElem<K>> gy = detail::specialize_x(gs, E, alpha);
        UPoly<ExtElem<K>> com = up::gcd(fy, gy);
        if (up::degree(com) != 1) {
          good = false;  // conjugate points share this x-coordinate; reshear
          break;
        }
        ExtElem<K> y0 = -com[0];
        IntersectionPoint<K> p;
        p.chart = 0;
        p.residue_field = E;
        // Undo the shear: the found frame has x' = x - c*y.
        p.coords = {alpha + E->embed(int_like(one, c)) * y0, y0};
        detail::fill_local(p, f0, g0);
        affine.push_back(std::move(p));
      }
    }
    if (!good) continue;

    long total = infinity_mult;
    for (const auto& p : affine) total += p.multiplicity;
    if (total != dF * dG)
      throw IncompletePointSet("multiplicity audit failed: found " + std::to_string(total) +
                               ", expected " + std::to_string(dF * dG));
    points.insert(points.end(), std::make_move_iterator(affine.begin()),
                  std::make_move_iterator(affine.end()));
    done = true;
  }
  if (!done) throw ShearExhausted("no shear separated the intersection points");

  std::sort(points.begin(), points.end(),
            [](const IntersectionPoint<K>& a, const IntersectionPoint<K>& b) {
              return point_sort_key(a) < point_sort_key(b);
            });
  return points;
}

extern template std::vector<IntersectionPoint<Rat>> find_intersections(const CurvePair<Rat>&,
                                                                       std::uint64_t);
extern template std::vector<IntersectionPoint<Fp>> find_intersections(const CurvePair<Fp>&,
                                                                      std::uint64_t);

}  // namespace gwbez
