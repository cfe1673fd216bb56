#include "gwbez/verify.hpp"

#include <type_traits>

#include "gwbez/trace_form.hpp"

namespace gwbez {

GWElement expected_euler(FieldTag tag, const std::vector<long>& degrees) {
  OrientabilityReport r = orientability(static_cast<long>(degrees.size()), degrees);
  if (!r.orientable)
    throw NotOrientable("relative line bundle degree " + std::to_string(r.N) + " is odd");
  long prod = 1;
  for (long d : degrees) prod *= d;
  return GWElement::hyperbolic(tag, prod / 2);
}

GWElement euler_number(FieldTag tag, const std::vector<LocalDegreeResult>& degrees,
                       long expected_dim) {
  long total = 0;
  GWElement acc = GWElement::zero(tag);
  for (const auto& d : degrees) {
    total += d.multiplicity;
    acc = gw_add(acc, d.degree);
  }
  if (total != expected_dim)
    throw IncompletePointSet("multiplicities sum to " + std::to_string(total) +
                             ", expected " + std::to_string(expected_dim));
  return acc;
}

namespace {

template <class K>
LocalDegreeResult point_degree_impl(const CurvePair<K>& pair, const IntersectionPoint<K>& p) {
  std::vector<Poly<K>> fs{dehomogenize_twisted(pair.F(), p.chart),
                          dehomogenize_twisted(pair.G(), p.chart)};
  if (p.transverse) return local_degree_transverse(fs, p.residue_field, p.coords);
  if (p.field_degree() == 1) {
    std::vector<K> at;
    at.reserve(p.coords.size());
    for (const auto& c : p.coords) at.push_back(c.scalar_value());
    return local_degree_series(translate_to_origin(fs[0], at), translate_to_origin(fs[1], at));
  }
  const auto& E = p.residue_field;
  auto embed = [&](const K& c) { return E->embed(c); };
  Poly<ExtElem<K>> fe = translate_to_origin(fs[0].map_coeffs(embed), p.coords);
  Poly<ExtElem<K>> ge = translate_to_origin(fs[1].map_coeffs(embed), p.coords);
  SeriesDegree<ExtElem<K>> sd;
  try {
    sd = series_degree(fe, ge);
  } catch (const NotHenselian&) {
    throw NonTransverseNonRational("series reduction impossible at a non-rational point");
  }
  std::vector<K> diag = trace_diag(E, sd.diag);
  LocalDegreeResult r;
  if constexpr (std::is_same_v<K, Fp>) {
    r.degree = GWElement::make_fp(diag.front().modulus(), diag);
    r.char_warning = true;
  } else {
    r.degree = GWElement::make_q(diag);
  }
  r.multiplicity = sd.n * p.field_degree();
  r.method = DegreeMethod::Series;
  return r;
}

template <class K>
VerificationReport verify_main_impl(const CurvePair<K>& pair, std::uint64_t seed,
                                    FieldTag tag) {
  VerificationReport rep;
  rep.orientability = orientability(2, {pair.dF(), pair.dG()});
  std::vector<IntersectionPoint<K>> pts = find_intersections(pair, seed);
  if (!rep.orientability.orientable)
    for (const auto& p : pts)
      if (p.on_divisor_x0)
        throw PointOnDivisor("an intersection point lies on the divisor {x0 = 0}");

  rep.total = GWElement::zero(tag);
  for (const auto& p : pts) {
    PointSummary s;
    s.chart = p.chart;
    s.min_poly = up::to_string(p.residue_field->modulus(), "x");
    for (const auto& c : p.coords) s.coords.push_back(c.str());
    s.field_degree = p.field_degree();
    s.multiplicity = p.multiplicity;
    s.transverse = p.transverse;
    s.on_divisor_x0 = p.on_divisor_x0;
    s.degree = point_degree(pair, p);
    rep.total = gw_add(rep.total, s.degree.degree);
    rep.points.push_back(std::move(s));
  }

  const long prod = pair.dF() * pair.dG();
  if (rep.orientability.orientable) {
    rep.applicable = true;
    rep.expected = GWElement::hyperbolic(tag, prod / 2);
    InvariantVector a = gw_invariants(rep.total);
    InvariantVector b = gw_invariants(rep.expected);
    auto verdict = [&](const char* name, bool ok) {
      rep.verdicts.emplace_back(name, ok ? "pass" : "fail");
    };
    verdict("rank", a.rank == b.rank);
    if (tag.kind == FieldTag::Kind::Q) {
      verdict("signature", a.signature == b.signature);
      verdict("disc", a.disc_q == b.disc_q);
      verdict("d2", a.d2 == b.d2);
      verdict("dp", a.dp == b.dp);
    } else if (tag.kind == FieldTag::Kind::Fp) {
      verdict("disc", a.disc_square == b.disc_square);
    } else {
      verdict("disc", a.disc_parity == b.disc_parity);
    }
    rep.pass = true;
    for (const auto& [name, v] : rep.verdicts)
      if (v != "pass") rep.pass = false;
  } else {
    rep.expected = GWElement::zero(tag);
    std::vector<const char*> names{"rank"};
    if (tag.kind == FieldTag::Kind::Q)
      names.insert(names.end(), {"signature", "disc", "d2", "dp"});
    else
      names.push_back("disc");
    for (const char* n : names) rep.verdicts.emplace_back(n, "n/a");
  }
  return rep;
}

}  // namespace

LocalDegreeResult point_degree(const CurvePair<Rat>& pair, const IntersectionPoint<Rat>& p) {
  return point_degree_impl(pair, p);
}

LocalDegreeResult point_degree(const CurvePair<Fp>& pair, const IntersectionPoint<Fp>& p) {
  return point_degree_impl(pair, p);
}

VerificationReport verify_main(const CurvePair<Rat>& pair, std::uint64_t seed) {
  return verify_main_impl(pair, seed, FieldTag::Q());
}

VerificationReport verify_main(const CurvePair<Fp>& pair, std::uint64_t seed) {
  long p = pair.F().poly().terms().begin()->second.modulus();
  return verify_main_impl(pair, seed, FieldTag::prime(p));
}

std::string VerificationReport::str() const {
  std::string out = orientability.str() + "\n";
  for (const auto& p : points) {
    out += "point chart " + std::to_string(p.chart) + ", k(p) by " + p.min_poly + ", at (";
    for (std::size_t i = 0; i < p.coords.size(); ++i)
      out += (i ? ", " : "") + p.coords[i];
    out += "), mult " + std::to_string(p.multiplicity);
    out += p.transverse ? ", transverse" : ", non-transverse";
    if (p.on_divisor_x0) out += ", at infinity";
    out += ": " + p.degree.degree.str() + " [" + method_name(p.degree.method) + "]";
    if (p.degree.char_warning) out += " (char p heuristic)";
    out += "\n";
  }
  out += "total    " + total.str() + "\n";
  if (applicable) {
    out += "expected " + expected.str() + "\n";
    for (const auto& [name, v] : verdicts) out += name + ": " + v + "\n";
    out += pass ? "IDENTITY HOLDS\n" : "IDENTITY FAILS\n";
  } else {
    out += "Euler identity not applicable (not relatively orientable)\n";
  }
  return out;
}

long crossing_sign(const GWElement& degree) {
  long s = gw_signature(degree);
  if (s > gw_rank(degree) || s < -gw_rank(degree))
    throw DegenerateForm("signature exceeds rank");
  return s;
}

CrossingTally verify_over_R(const VerificationReport& rep) {
  if (rep.total.tag().kind != FieldTag::Kind::Q)
    throw UnsupportedField("real crossing counts need rational input");
  CrossingTally t;
  for (const auto& p : rep.points) {
    long s = crossing_sign(p.degree.degree);
    if (s > 0)
      t.positive += s;
    else if (s < 0)
      t.negative += -s;
    else
      t.zero_contribution += 1;
  }
  return t;
}

int fq_positivity(const ExtElem<Fp>& a) {
  if (a.is_zero()) throw ZeroElement("positivity of zero is undefined");
  return euler_sign(a);
}

FqReport verify_over_Fq(const CurvePair<Fp>& pair, std::uint64_t seed) {
  const long q = pair.F().poly().terms().begin()->second.modulus();
  std::vector<IntersectionPoint<Fp>> pts = find_intersections(pair, seed);
  FqReport out;
  GWElement total = GWElement::zero(FieldTag::prime(q));
  for (const auto& p : pts) {
    if (!p.transverse)
      throw NonTransverseOverFq("finite field theorem needs transverse intersections");
    std::vector<Poly<Fp>> fs{dehomogenize_twisted(pair.F(), p.chart),
                             dehomogenize_twisted(pair.G(), p.chart)};
    ExtElem<Fp> J = jacobian_det(fs, p.coords);
    int sign = fq_positivity(J);
    bool even_b = (p.field_degree() % 2 == 0);
    if (sign > 0)
      (even_b ? out.tally.pos_even : out.tally.pos_odd) += 1;
    else
      (even_b ? out.tally.neg_even : out.tally.neg_odd) += 1;
    total = gw_add(total, point_degree(pair, p).degree);
  }
  const long half = pair.dF() * pair.dG() / 2;
  out.case_even = (half % 2 == 0) || (q % 4 == 1);
  out.parity_ok = (out.tally.statistic() % 2) == (out.case_even ? 0 : 1);
  GWElement expected = GWElement::hyperbolic(FieldTag::prime(q), half);
  out.disc_ok = gw_disc_square_fp(total) == gw_disc_square_fp(expected);
  return out;
}

GWElement laurent_trace_form(long m, bool gen_unit) {
  if (m < 1) throw ZeroInput("extension degree must be positive");
  UPoly<RatFunc> mod(static_cast<std::size_t>(m) + 1, RatFunc());
  mod[0] = RatFunc(Rat(-1)) * RatFunc::t();
  mod[static_cast<std::size_t>(m)] = RatFunc(Rat(1));
  ExtFieldPtr<RatFunc> E = ExtensionField<RatFunc>::make(mod, "s");
  ExtElem<RatFunc> u = gen_unit ? E->gen() : E->one();
  return GWElement::make_ct(trace_form(E, u));
}

GWElement laurent_expected(long m, bool gen_unit) {
  if (m < 1) throw ZeroInput("extension degree must be positive");
  std::vector<RatFunc> diag;
  if (gen_unit) {
    diag.assign(static_cast<std::size_t>(m), RatFunc::t());
  } else {
    diag.assign(static_cast<std::size_t>(m) - 1, RatFunc::t());
    diag.push_back(RatFunc(Rat(1)));
  }
  return GWElement::make_ct(diag);
}

QConditions verify_over_Q(const VerificationReport& rep) {
  if (rep.total.tag().kind != FieldTag::Kind::Q)
    throw UnsupportedField("residue conditions need rational input");
  QConditions out;
  out.signature_sum = gw_signature(rep.total);
  out.sign_ok = (out.signature_sum == 0);
  out.d2_sum = witt_residue_2(rep.total);
  out.d2_ok = (out.d2_sum == 0);
  out.residues_ok = true;
  for (long p : residue_prime_support(rep.total.q_diag())) {
    QConditions::PrimeCheck pc;
    pc.p = p;
    pc.mod4 = static_cast<int>(p % 4);
    pc.residue = witt_residue_p(rep.total, p);
    pc.ok = pc.residue.is_zero();
    if (!pc.ok) out.residues_ok = false;
    out.primes.push_back(pc);
  }
  out.pass = out.sign_ok && out.d2_ok && out.residues_ok;
  return out;
}

LineConicReport line_conic_constraints(const Rat& Js, const Rat& Jt) {
  if (Js.is_zero() || Jt.is_zero()) throw ZeroElement("Jacobian values must be nonzero");
  LineConicReport out;
  out.sign_s = Js.sign();
  out.sign_t = Jt.sign();
  out.signs_opposed = (out.sign_s * out.sign_t == -1);
  out.v2_match = ((valuation2(Js) - valuation2(Jt)) % 2 == 0);
  GWElement sum = GWElement::make_q({Js, Jt});
  out.residues_match = true;
  for (long p : residue_prime_support(sum.q_diag()))
    if (!witt_residue_p(sum, p).is_zero()) out.residues_match = false;
  out.consistent = gw_equal(sum, GWElement::hyperbolic(FieldTag::Q(), 1));
  return out;
}

}  // namespace gwbez
