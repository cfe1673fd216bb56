#include <doctest.h>

#include <random>
#include <vector>

#include "gwbez/gw.hpp"
#include "gwbez/ratfunc.hpp"

using namespace gwbez;

namespace {

GWElement q1(const Rat& a) { return GWElement::make_q({a}); }
GWElement f1(long p, long a) { return GWElement::make_fp(p, {Fp(a, p)}); }

Rat nonzero_rat(std::mt19937_64& rng) {
  for (;;) {
    long n = static_cast<long>(rng() % 19) - 9;
    long d = static_cast<long>(rng() % 9) + 1;
    if (n != 0) return Rat(n, d);
  }
}

}  // namespace

TEST_CASE("square factors drop out") {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 40; ++i) {
    Rat a = nonzero_rat(rng), b = nonzero_rat(rng);
    CHECK(gw_equal(q1(a * b * b), q1(a)));
  }
  for (long p : {5L, 7L, 13L})
    for (long a = 1; a < p; ++a)
      for (long b = 1; b < p; ++b)
        CHECK(gw_equal(f1(p, a * b * b), f1(p, a)));
}

TEST_CASE("rank one products multiply entries") {
  std::mt19937_64 rng(102);
  for (int i = 0; i < 40; ++i) {
    Rat a = nonzero_rat(rng), b = nonzero_rat(rng);
    CHECK(gw_equal(gw_mul(q1(a), q1(b)), q1(a * b)));
  }
  // bilinearity on a rank two times rank one case
  GWElement x = GWElement::make_q({Rat(1), Rat(-2)});
  CHECK(gw_equal(gw_mul(x, q1(Rat(3))),
                 GWElement::make_q({Rat(3), Rat(-6)})));
}

TEST_CASE("two term addition law") {
  std::mt19937_64 rng(103);
  for (int i = 0; i < 60; ++i) {
    Rat a = nonzero_rat(rng), b = nonzero_rat(rng);
    if ((a + b).is_zero()) continue;
    GWElement lhs = gw_add(q1(a), q1(b));
    GWElement rhs = gw_add(q1(a + b), q1(a * b * (a + b)));
    CHECK(gw_equal(lhs, rhs));
  }
  for (long p : {5L, 7L})
    for (long a = 1; a < p; ++a)
      for (long b = 1; b < p; ++b) {
        if ((a + b) % p == 0) continue;
        GWElement lhs = gw_add(f1(p, a), f1(p, b));
        GWElement rhs = gw_add(f1(p, a + b), f1(p, a * b * (a + b)));
        CHECK(gw_equal(lhs, rhs));
      }
}

TEST_CASE("opposite pairs are hyperbolic") {
  GWElement H = GWElement::hyperbolic(FieldTag::Q(), 1);
  for (Rat a : {Rat(5), Rat(1, 3), Rat(-7), Rat(30)})
    CHECK(gw_equal(gw_add(q1(a), q1(-a)), H));
  GWElement H7 = GWElement::hyperbolic(FieldTag::prime(7), 1);
  for (long a = 1; a < 7; ++a)
    CHECK(gw_equal(gw_add(f1(7, a), f1(7, 7 - a)), H7));
  CHECK(GWElement::hyperbolic(FieldTag::Q(), 3).rank() == 6);
  CHECK(GWElement::hyperbolic(FieldTag::Q(), 0).is_zero_form());
}

TEST_CASE("frozen rational invariants") {
  GWElement x = GWElement::make_q({Rat(1), Rat(-2), Rat(3)});
  InvariantVector iv = gw_invariants(x);
  CHECK(iv.rank == 3);
  REQUIRE(iv.signature.has_value());
  CHECK(*iv.signature == 1);
  REQUIRE(iv.disc_q.has_value());
  CHECK(*iv.disc_q == -6);
  REQUIRE(iv.d2.has_value());
  CHECK(*iv.d2 == 1);  // v_2(-6) is odd
  REQUIRE(iv.dp.count(3) == 1);
  CHECK(iv.dp.at(3).a == 1);
  CHECK(iv.dp.at(3).b == 0);
  CHECK(iv.dp.count(2) == 0);  // 2 never enters the odd prime map
  CHECK(residue_prime_support({Rat(1), Rat(-2), Rat(3)}) == std::set<long>{3});
  CHECK(residue_prime_support({Rat(1, 3), Rat(50)}) == std::set<long>{2, 3});

  // discriminant is reduced to a signed squarefree integer
  CHECK(gw_disc_q(GWElement::make_q({Rat(8)})) == 2);
  CHECK(gw_disc_q(GWElement::make_q({Rat(-4)})) == -1);
  CHECK(gw_disc_q(GWElement::make_q({Rat(1, 2)})) == 2);
  CHECK(gw_signature(GWElement::make_q({Rat(-1), Rat(-2)})) == -2);
}

TEST_CASE("second residue maps") {
  CHECK(witt_residue_2(GWElement::make_q({Rat(2)})) == 1);
  CHECK(witt_residue_2(GWElement::make_q({Rat(1), Rat(1)})) == 0);
  CHECK(witt_residue_2(GWElement::make_q({Rat(6), Rat(3)})) == 1);  // disc 18 ~ 2

  // residue at 3 of single entries
  CHECK(witt_residue_p(Rat(1, 3), 3).a == 1);   // unit 1, odd valuation
  CHECK(witt_residue_p(Rat(12), 3).a == 1);     // 12 = 4 * 3, unit residue 1
  CHECK(witt_residue_p(Rat(6), 3).a == 3);      // unit residue 2, a non-square
  CHECK(witt_residue_p(Rat(4), 3).is_zero());   // even valuation
  CHECK_THROWS_AS(witt_residue_p(Rat(0), 3), ZeroElement);

  GWElement x = GWElement::make_q({Rat(3), Rat(12), Rat(5)});
  CHECK(witt_residue_p(x, 3).a == 2);
  CHECK(witt_residue_p(x, 5).a == 1);
  CHECK(witt_residue_p(x, 7).is_zero());
}

TEST_CASE("prime field Witt groups") {
  // p = 3 mod 4: cyclic of order four generated by <1>
  WittFpClass g = WittFpClass::from_unit(7, 1);
  CHECK(g.a == 1);
  WittFpClass s = g + g + g + g;
  CHECK(s.is_zero());
  CHECK_FALSE((g + g).is_zero());
  // <1> + <-1> dies: -1 is a non-residue when p = 3 mod 4
  CHECK((WittFpClass::from_unit(7, 1) + WittFpClass::from_unit(7, -1)).is_zero());
  CHECK(WittFpClass::from_unit(7, -1).a == 3);

  // p = 1 mod 4: Klein four group with coordinates <1>, <r>
  WittFpClass u = WittFpClass::from_unit(5, 1);
  WittFpClass v = WittFpClass::from_unit(5, -1);
  CHECK(u.nonresidue == 2);
  CHECK((u + u).is_zero());
  CHECK((v + v).is_zero());
  CHECK_FALSE((u + v).is_zero());
  CHECK(u.a == 1);
  CHECK(u.b == 0);
  CHECK(v.b == 1);

  CHECK_THROWS_AS(WittFpClass::from_unit(7, 0), ZeroElement);
  CHECK_THROWS_AS(u += g, MismatchedField);
}

TEST_CASE("prime field forms compare through rank and discriminant") {
  CHECK(gw_equal(f1(7, 3), f1(7, 5)));  // both non-squares
  CHECK(gw_equal(f1(7, 1), f1(7, 2)));  // both squares
  CHECK_FALSE(gw_equal(f1(7, 1), f1(7, 3)));
  CHECK_FALSE(gw_equal(f1(7, 1), GWElement::make_fp(7, {Fp(1, 7), Fp(1, 7)})));
  CHECK(gw_disc_square_fp(GWElement::make_fp(7, {Fp(3, 7), Fp(5, 7)})));
  InvariantVector iv = gw_invariants(f1(7, 3));
  CHECK(iv.rank == 1);
  REQUIRE(iv.disc_square.has_value());
  CHECK_FALSE(*iv.disc_square);
  CHECK_FALSE(iv.signature.has_value());
}

TEST_CASE("laurent model") {
  RatFunc t = RatFunc::t();
  CHECK(ct_classify(RatFunc(Rat(5))) == 0);
  CHECK(ct_classify(t) == 1);
  CHECK(ct_classify(t * t) == 0);
  CHECK(ct_classify(t * t * t * RatFunc(Rat(-2, 3))) == 1);
  CHECK(ct_classify(RatFunc({Rat(1)}, {Rat(0), Rat(1)})) == 1);  // 1/t
  CHECK_THROWS_AS(ct_classify(RatFunc(Rat(0))), ZeroElement);

  GWElement x = GWElement::make_ct({t, t});
  CHECK(gw_rank(x) == 2);
  CHECK(gw_disc_parity_ct(x) == 0);
  CHECK(gw_equal(x, GWElement::make_ct({RatFunc(Rat(1)), RatFunc(Rat(1))})));
  GWElement y = GWElement::make_ct({t, RatFunc(Rat(1))});
  CHECK(gw_disc_parity_ct(y) == 1);
  CHECK_FALSE(gw_equal(x, y));
  CHECK(gw_equal(gw_add(GWElement::make_ct({t}), GWElement::make_ct({-t})),
                 GWElement::hyperbolic(FieldTag::Ct(), 1)));
  InvariantVector iv = gw_invariants(y);
  REQUIRE(iv.disc_parity.has_value());
  CHECK(*iv.disc_parity == 1);
}

TEST_CASE("construction and comparison guard rails") {
  CHECK_THROWS_AS(GWElement::make_q({Rat(0)}), ZeroElement);
  CHECK_THROWS_AS(GWElement::make_fp(7, {Fp(0, 7)}), ZeroElement);
  CHECK_THROWS_AS(GWElement::make_fp(7, {Fp(1, 5)}), MismatchedField);
  CHECK_THROWS_AS(gw_add(q1(Rat(1)), f1(7, 1)), MismatchedField);
  CHECK_THROWS_AS(gw_equal(q1(Rat(1)), f1(7, 1)), MismatchedField);
  CHECK_THROWS_AS(GWElement::hyperbolic(FieldTag::Q(), -1), ZeroInput);
  CHECK_THROWS_AS(FieldTag::prime(9), NotPrime);
  CHECK_THROWS_AS(FieldTag::prime(2), EvenPrime);
  // zero forms of matching tags are equal
  CHECK(gw_equal(GWElement::zero(FieldTag::Q()), GWElement::zero(FieldTag::Q())));
}

TEST_CASE("string presentations stay stable") {
  CHECK(GWElement::hyperbolic(FieldTag::Q(), 2).str() == "2*H");
  CHECK(GWElement::make_q({Rat(8), Rat(-2)}).str() == "H");
  CHECK(GWElement::make_q({Rat(1), Rat(-2), Rat(3)}).str() == "<1> + <-2> + <3>");
  // -1 is a non-residue mod 7, so <1> + <3> is a hyperbolic plane there
  CHECK(GWElement::make_fp(7, {Fp(1, 7), Fp(3, 7)}).str() == "H");
  CHECK(GWElement::make_fp(5, {Fp(1, 5), Fp(2, 5)}).str() == "<1> + <2>");
  CHECK(GWElement::make_ct({RatFunc::t(), RatFunc(Rat(2))}).str() == "<1> + <t>");
  CHECK(FieldTag::Q().str() == "Q");
  CHECK(FieldTag::prime(7).str() == "Fp:7");
  CHECK(FieldTag::Ct().str() == "Ct");
}
