#include <doctest.h>

#include <string>
#include <vector>

#include "gwbez/verify.hpp"
#include "test_util.hpp"

using namespace gwbez;
using testutil::fppair;
using testutil::qpair;

namespace {

const char* kCubic = "x0^2*x2 - x1^3";
const char* kConic = "x1^2 + x2^2 - 2*x0^2";

}  // namespace

TEST_CASE("expected sum is a stack of hyperbolic planes") {
  GWElement e = expected_euler(FieldTag::Q(), {2, 3});
  CHECK(gw_equal(e, GWElement::hyperbolic(FieldTag::Q(), 3)));
  CHECK(expected_euler(FieldTag::Q(), {1, 2}).rank() == 2);
  CHECK(expected_euler(FieldTag::prime(7), {2, 3}).rank() == 6);
  CHECK_THROWS_AS(expected_euler(FieldTag::Q(), {2, 2}), NotOrientable);
  CHECK_THROWS_AS(expected_euler(FieldTag::Q(), {1, 1}), NotOrientable);
}

TEST_CASE("euler number audits the total multiplicity") {
  std::vector<LocalDegreeResult> degs{local_degree_monomial(Rat(1), 3),
                                      local_degree_monomial(Rat(-5), 1)};
  GWElement total = euler_number(FieldTag::Q(), degs, 4);
  CHECK(total.rank() == 4);
  CHECK_THROWS_AS(euler_number(FieldTag::Q(), degs, 5), IncompletePointSet);
}

TEST_CASE("main identity holds for the conic and cubic") {
  CurvePair<Rat> pair = qpair(kCubic, kConic);
  VerificationReport rep = verify_main(pair);
  CHECK(rep.orientability.orientable);
  CHECK(rep.applicable);
  CHECK(rep.pass);
  REQUIRE(rep.points.size() == 3);
  CHECK(gw_equal(rep.total, GWElement::hyperbolic(FieldTag::Q(), 3)));
  CHECK(gw_equal(rep.expected, rep.total));
  REQUIRE(rep.verdicts.size() == 5);
  for (const auto& [name, v] : rep.verdicts) CHECK(v == "pass");
  CHECK(rep.verdicts[0].first == "rank");
  CHECK(rep.verdicts[4].first == "dp");
  for (const auto& p : rep.points) {
    CHECK(p.degree.method == DegreeMethod::Transverse);
    CHECK(p.degree.multiplicity == p.multiplicity);
  }
  CHECK(rep.str().find("IDENTITY HOLDS") != std::string::npos);
}

TEST_CASE("non-orientable pairs are reported, not asserted") {
  // circle against an ellipse: four points forming one quartic orbit
  CurvePair<Rat> pair = qpair("x1^2 + x2^2 - x0^2", "x1^2 + 4*x2^2 - 2*x0^2");
  VerificationReport rep = verify_main(pair);
  CHECK_FALSE(rep.orientability.orientable);
  CHECK_FALSE(rep.applicable);
  CHECK_FALSE(rep.pass);
  REQUIRE(rep.points.size() == 1);
  CHECK(rep.points[0].field_degree == 4);
  CHECK(rep.points[0].multiplicity == 4);
  CHECK(rep.expected.is_zero_form());
  for (const auto& [name, v] : rep.verdicts) CHECK(v == "n/a");
  CHECK(rep.str().find("not applicable") != std::string::npos);

  // a non-orientable pair meeting on the divisor is refused outright
  CHECK_THROWS_AS(verify_main(qpair("x0*x2 - x1^2", "x1*x2 - x0^2")), PointOnDivisor);
}

TEST_CASE("prime field identity") {
  VerificationReport rep = verify_main(fppair(kCubic, kConic, 7));
  CHECK(rep.applicable);
  CHECK(rep.pass);
  REQUIRE(rep.verdicts.size() == 2);
  CHECK(rep.verdicts[0].first == "rank");
  CHECK(rep.verdicts[1].first == "disc");
  CHECK(gw_equal(rep.total, GWElement::hyperbolic(FieldTag::prime(7), 3)));
}

TEST_CASE("real crossings cancel in pairs") {
  VerificationReport rep = verify_main(qpair(kCubic, kConic));
  CrossingTally t = verify_over_R(rep);
  CHECK(t.positive == 1);
  CHECK(t.negative == 1);
  CHECK(t.zero_contribution == 1);  // the quartic point has signature zero
  CHECK(t.balanced());

  CHECK(crossing_sign(GWElement::make_q({Rat(2)})) == 1);
  CHECK(crossing_sign(GWElement::make_q({Rat(-7)})) == -1);
  CHECK(crossing_sign(GWElement::hyperbolic(FieldTag::Q(), 2)) == 0);

  VerificationReport fp_rep = verify_main(fppair(kCubic, kConic, 7));
  CHECK_THROWS_AS(verify_over_R(fp_rep), UnsupportedField);
}

TEST_CASE("finite field tallies") {
  // line against the conic over F_5: one negative point of even degree
  FqReport rep = verify_over_Fq(fppair("x0 + x1 + x2", kConic, 5));
  CHECK(rep.tally.pos_even == 0);
  CHECK(rep.tally.pos_odd == 0);
  CHECK(rep.tally.neg_even == 1);
  CHECK(rep.tally.neg_odd == 0);
  CHECK(rep.tally.statistic() == 0);
  CHECK(rep.case_even);  // q = 1 mod 4
  CHECK(rep.parity_ok);
  CHECK(rep.disc_ok);
  CHECK(rep.pass());

  // conic and cubic over F_7: odd case, statistic comes out odd
  FqReport odd = verify_over_Fq(fppair(kCubic, kConic, 7));
  CHECK_FALSE(odd.case_even);
  CHECK(odd.tally.statistic() % 2 == 1);
  CHECK(odd.pass());

  // tangential contact defeats the finite field theorem
  CHECK_THROWS_AS(verify_over_Fq(fppair("x0*x2 - x1^2", "x2", 5)),
                  NonTransverseOverFq);
}

TEST_CASE("laurent tower trace forms match their closed forms") {
  for (long m = 1; m <= 8; ++m) {
    CHECK(gw_equal(laurent_trace_form(m, false), laurent_expected(m, false)));
    CHECK(gw_equal(laurent_trace_form(m, true), laurent_expected(m, true)));
  }
  CHECK(laurent_expected(4, true).rank() == 4);
  CHECK(gw_disc_parity_ct(laurent_expected(3, false)) == 0);
  CHECK(gw_disc_parity_ct(laurent_expected(3, true)) == 1);
  CHECK_THROWS_AS(laurent_trace_form(0, false), ZeroInput);
}

TEST_CASE("rational residue conditions") {
  VerificationReport rep = verify_main(qpair(kCubic, kConic));
  QConditions qc = verify_over_Q(rep);
  CHECK(qc.pass);
  CHECK(qc.sign_ok);
  CHECK(qc.signature_sum == 0);
  CHECK(qc.d2_ok);
  CHECK(qc.d2_sum == 0);
  CHECK(qc.residues_ok);
  for (const auto& pc : qc.primes) {
    CHECK(pc.ok);
    CHECK(pc.residue.is_zero());
    CHECK((pc.mod4 == 1 || pc.mod4 == 3));
  }

  // corrupting the total breaks exactly the advertised conditions
  VerificationReport fake;
  fake.total = GWElement::make_q({Rat(1), Rat(1)});
  QConditions bad = verify_over_Q(fake);
  CHECK_FALSE(bad.sign_ok);
  CHECK_FALSE(bad.pass);
  fake.total = GWElement::make_q({Rat(2), Rat(-1)});
  QConditions d2bad = verify_over_Q(fake);
  CHECK(d2bad.sign_ok);
  CHECK_FALSE(d2bad.d2_ok);
  fake.total = GWElement::make_q({Rat(3), Rat(-1)});
  QConditions pbad = verify_over_Q(fake);
  CHECK(pbad.sign_ok);
  CHECK(pbad.d2_ok);
  CHECK_FALSE(pbad.residues_ok);
  REQUIRE(pbad.primes.size() == 1);
  CHECK(pbad.primes[0].p == 3);

  VerificationReport fp_rep = verify_main(fppair(kCubic, kConic, 7));
  CHECK_THROWS_AS(verify_over_Q(fp_rep), UnsupportedField);
}

TEST_CASE("line conic jacobian constraints") {
  LineConicReport ok = line_conic_constraints(Rat(6), Rat(-6));
  CHECK(ok.signs_opposed);
  CHECK(ok.v2_match);
  CHECK(ok.residues_match);
  CHECK(ok.consistent);

  LineConicReport ok2 = line_conic_constraints(Rat(2), Rat(-8));
  CHECK(ok2.consistent);  // <2> + <-8> = <2> + <-2>

  LineConicReport v2bad = line_conic_constraints(Rat(6), Rat(-3));
  CHECK(v2bad.signs_opposed);
  CHECK_FALSE(v2bad.v2_match);
  CHECK_FALSE(v2bad.consistent);

  LineConicReport resbad = line_conic_constraints(Rat(3), Rat(-5));
  CHECK(resbad.signs_opposed);
  CHECK(resbad.v2_match);
  CHECK_FALSE(resbad.residues_match);
  CHECK_FALSE(resbad.consistent);

  LineConicReport samesign = line_conic_constraints(Rat(1), Rat(1));
  CHECK_FALSE(samesign.signs_opposed);
  CHECK_FALSE(samesign.consistent);

  CHECK_THROWS_AS(line_conic_constraints(Rat(0), Rat(1)), ZeroElement);
}

TEST_CASE("higher contact at a conjugate pair") {
  // parabola against a curve osculating it above x = +-sqrt(2)
  CurvePair<Rat> pair =
      qpair("x0*x2 - x1^2", "x0^3*x2 + x1^4 - 5*x0^2*x1^2 + 4*x0^4");
  auto pts = find_intersections(pair);
  REQUIRE(pts.size() == 2);
  // sorted order puts the affine tangency (chart 0) first, the corner last
  const auto& tangency = pts[0];
  CHECK(tangency.chart == 0);
  CHECK(tangency.field_degree() == 2);
  CHECK(tangency.multiplicity == 4);
  CHECK_FALSE(tangency.transverse);
  LocalDegreeResult r = point_degree(pair, tangency);
  CHECK(r.method == DegreeMethod::Series);
  CHECK(r.multiplicity == 4);
  CHECK(gw_equal(r.degree, GWElement::hyperbolic(FieldTag::Q(), 2)));

  const auto& corner = pts[1];
  CHECK(corner.chart == 2);
  CHECK(corner.on_divisor_x0);
  CHECK(corner.multiplicity == 4);
}

TEST_CASE("series reduction refuses a doubly singular conjugate point") {
  CurvePair<Rat> pair = qpair("x2^2*x0^4 - (x1^2 - 2*x0^2)^3",
                              "x2^2*x0^4 - 2*(x1^2 - 2*x0^2)^3");
  ExtFieldPtr<Rat> E = ExtensionField<Rat>::make(UPoly<Rat>{Rat(-2), Rat(0), Rat(1)});
  IntersectionPoint<Rat> p;
  p.chart = 0;
  p.residue_field = E;
  p.coords = {E->gen(), E->zero()};
  p.transverse = false;
  CHECK_THROWS_AS(point_degree(pair, p), NonTransverseNonRational);
}
