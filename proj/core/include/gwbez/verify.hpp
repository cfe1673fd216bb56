#pragma once

// Global check that the local degrees sum to (dF*dG/2) hyperbolic copies,
// plus the specialized views: real crossing tallies, finite field parity
// counts, the formal Laurent extensions, and the rational residue audit.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gwbez/geometry.hpp"
#include "gwbez/gw.hpp"
#include "gwbez/intersect.hpp"
#include "gwbez/local_degree.hpp"

namespace gwbez {

/// (prod d_i / 2) copies of the hyperbolic form; NotOrientable when the
/// relative line bundle degree is odd.
GWElement expected_euler(FieldTag tag, const std::vector<long>& degrees);

/// Sum of local degrees after the multiplicity audit against the expected
/// total dimension.
GWElement euler_number(FieldTag tag, const std::vector<LocalDegreeResult>& degrees,
                       long expected_dim);

/// Local degree of one intersection point: trace form of the Jacobian at
/// transverse points, series expansion after base change otherwise.
LocalDegreeResult point_degree(const CurvePair<Rat>& pair, const IntersectionPoint<Rat>& p);
LocalDegreeResult point_degree(const CurvePair<Fp>& pair, const IntersectionPoint<Fp>& p);

/// Field-independent view of one point for reports and serialization.
struct PointSummary {
  int chart = 0;
  std::string min_poly;
  std::vector<std::string> coords;
  long field_degree = 1;
  long multiplicity = 1;
  bool transverse = false;
  bool on_divisor_x0 = false;
  LocalDegreeResult degree;
};

struct VerificationReport {
  OrientabilityReport orientability;
  bool applicable = false;  // the identity is asserted only when orientable
  std::vector<PointSummary> points;
  GWElement total = GWElement::make_q({});
  GWElement expected = GWElement::make_q({});
  std::vector<std::pair<std::string, std::string>> verdicts;  // name -> pass/fail/n/a
  bool pass = false;

  std::string str() const;
};

VerificationReport verify_main(const CurvePair<Rat>& pair, std::uint64_t seed = 0);
VerificationReport verify_main(const CurvePair<Fp>& pair, std::uint64_t seed = 0);

/// Signed crossing count of the real picture.  Conjugate pairs and even
/// order points contribute zero; a real point of higher residue degree can
/// carry several crossings of one sign.
struct CrossingTally {
  long positive = 0;
  long negative = 0;
  long zero_contribution = 0;  // points contributing no signed crossing

  bool balanced() const { return positive == negative; }
};

/// Signature of a local degree; bounded by the rank in absolute value.
long crossing_sign(const GWElement& degree);

/// Tally over a rational verification report; UnsupportedField otherwise.
CrossingTally verify_over_R(const VerificationReport& rep);

/// Euler criterion sign of a nonzero element of F_{q^b}.
int fq_positivity(const ExtElem<Fp>& a);

struct FqTally {
  long pos_even = 0, pos_odd = 0;  // positive points, split by parity of b
  long neg_even = 0, neg_odd = 0;

  // The quantity whose parity the finite field theorem constrains.
  long statistic() const { return pos_even + neg_odd; }
};

struct FqReport {
  FqTally tally;
  bool case_even = false;  // dF*dG/2 even, or q = 1 mod 4
  bool parity_ok = false;
  bool disc_ok = false;  // disc(total) against disc(expected)

  bool pass() const { return parity_ok && disc_ok; }
};

/// Finite field theorem check; every point must be transverse
/// (NonTransverseOverFq otherwise).
FqReport verify_over_Fq(const CurvePair<Fp>& pair, std::uint64_t seed = 0);

/// Trace form class of Ct[s]/(s^m - t) twisted by 1 or by s.
GWElement laurent_trace_form(long m, bool gen_unit);
/// The matching closed form: (m-1)<t> + <1>, or m<t> when twisted by s.
GWElement laurent_expected(long m, bool gen_unit);

/// The four residue conditions on a rational total: zero signature, even
/// second residue at 2, vanishing residue at every odd prime of the
/// support (Z/4 for p = 3 mod 4, coordinate pair for p = 1 mod 4).
struct QConditions {
  struct PrimeCheck {
    long p = 0;
    int mod4 = 0;
    WittFpClass residue;
    bool ok = false;
  };

  long signature_sum = 0;
  int d2_sum = 0;
  std::vector<PrimeCheck> primes;
  bool sign_ok = false;
  bool d2_ok = false;
  bool residues_ok = false;
  bool pass = false;
};

QConditions verify_over_Q(const VerificationReport& rep);

/// Consistency constraints on the pair of Jacobians of a line meeting a
/// conic in two rational points: opposite signs, matching 2-adic valuation
/// parity, cancelling odd residues.  Consistent exactly when
/// <J_s> + <J_t> is hyperbolic.
struct LineConicReport {
  int sign_s = 0, sign_t = 0;
  bool signs_opposed = false;
  bool v2_match = false;
  bool residues_match = false;
  bool consistent = false;
};

LineConicReport line_conic_constraints(const Rat& Js, const Rat& Jt);

}  // namespace gwbez
