#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "gwbez/errors.hpp"
#include "gwbez/extension.hpp"
#include "gwbez/fp.hpp"
#include "gwbez/ratfunc.hpp"
#include "gwbez/rational.hpp"

namespace gwbez {

/// Base field of a quadratic form: the rationals, a prime field of odd
/// order, or the formal Laurent model (rational functions in t where every
/// nonzero leading coefficient counts as a square).
struct FieldTag {
  enum class Kind { Q, Fp, Ct };
  Kind kind = Kind::Q;
  long p = 0;  // modulus when kind == Fp

  static FieldTag Q() { return {Kind::Q, 0}; }
  static FieldTag prime(long p) { return {Kind::Fp, check_odd_prime(p)}; }
  static FieldTag Ct() { return {Kind::Ct, 0}; }

  friend bool operator==(const FieldTag& a, const FieldTag& b) {
    return a.kind == b.kind && a.p == b.p;
  }
  std::string str() const;
};

/// Element of the Witt group of a prime field.  For p = 3 mod 4 the group
/// is Z/4 generated by <1>; for p = 1 mod 4 it is Z/2 x Z/2 with
/// coordinates counting <1> and <r>, r the least positive non-residue.
struct WittFpClass {
  long p = 0;
  long nonresidue = 0;  // r, only meaningful for p = 1 mod 4
  int a = 0;            // Z/4 value, or the <1> coordinate
  int b = 0;            // the <r> coordinate

  static WittFpClass zero(long p);
  /// Class of a rank one form whose entry has the given Euler sign.
  static WittFpClass from_unit(long p, int euler_sign);

  WittFpClass& operator+=(const WittFpClass& o);
  friend WittFpClass operator+(WittFpClass x, const WittFpClass& y) { return x += y; }
  bool is_zero() const { return a == 0 && b == 0; }
  friend bool operator==(const WittFpClass& x, const WittFpClass& y) {
    return x.p == y.p && x.a == y.a && x.b == y.b;
  }
  std::string str() const;
};

/// Complete invariant set deciding equality of diagonal forms.  Which
/// entries are populated depends on the field: rank always; signature,
/// disc_q, d2 and dp over the rationals; disc_square over a prime field;
/// disc_parity for the Laurent model.
struct InvariantVector {
  long rank = 0;
  std::optional<long> signature;
  std::optional<mpz_class> disc_q;
  std::optional<int> d2;
  std::optional<bool> disc_square;
  std::optional<int> disc_parity;
  std::map<long, WittFpClass> dp;  // nonzero residues only, keyed by prime

  friend bool operator==(const InvariantVector& x, const InvariantVector& y);
  std::string str() const;
};

/// Formal sum of rank one forms <d_1> + ... + <d_n> over a tagged field.
/// Entries are exact nonzero field elements; equality of classes is decided
/// through the invariant vector, never through the raw entries.
class GWElement {
 public:
  static GWElement make_q(std::vector<Rat> diag);
  static GWElement make_fp(long p, std::vector<Fp> diag);
  static GWElement make_ct(std::vector<RatFunc> diag);
  static GWElement zero(FieldTag tag);
  /// n copies of the hyperbolic form <1> + <-1>.
  static GWElement hyperbolic(FieldTag tag, long copies);

  const FieldTag& tag() const { return tag_; }
  long rank() const;
  bool is_zero_form() const { return rank() == 0; }

  const std::vector<Rat>& q_diag() const;
  const std::vector<Fp>& fp_diag() const;
  const std::vector<RatFunc>& ct_diag() const;

  /// Readable presentation "k*H + <a> + ..." with square class reduced
  /// remainder entries; Laurent entries print as <1> / <t> counts.
  std::string str() const;

 private:
  FieldTag tag_;
  std::variant<std::vector<Rat>, std::vector<Fp>, std::vector<RatFunc>> diag_;
};

GWElement gw_add(const GWElement& x, const GWElement& y);
GWElement gw_mul(const GWElement& x, const GWElement& y);

long gw_rank(const GWElement& x);
/// Signature of the real realization; rational entries only.
long gw_signature(const GWElement& x);
/// Discriminant as a signed squarefree integer (rational entries).
mpz_class gw_disc_q(const GWElement& x);
/// Discriminant square class over a prime field.
bool gw_disc_square_fp(const GWElement& x);
/// Number of <t> summands mod 2 in the Laurent model.
int gw_disc_parity_ct(const GWElement& x);

/// Odd primes at which some diagonal entry has nonzero valuation.
std::set<long> residue_prime_support(const std::vector<Rat>& diag);

/// Second residue map at 2: valuation parity of the discriminant.
int witt_residue_2(const GWElement& x);
/// Second residue map at an odd prime, valued in the Witt group of the
/// residue field.
WittFpClass witt_residue_p(const GWElement& x, long p);
WittFpClass witt_residue_p(const Rat& entry, long p);

InvariantVector gw_invariants(const GWElement& x);
bool gw_equal(const GWElement& x, const GWElement& y);

/// Square class of a Laurent entry: 0 for <1>, 1 for <t>.
int ct_classify(const RatFunc& g);

/// Euler criterion sign in a finite field of odd order.
inline int euler_sign(const Fp& a) { return a.euler_symbol(); }

template <class K>
int euler_sign(const ExtElem<K>& a) {
  if (a.is_zero()) return 0;
  mpz_class e = (field_card(a) - 1) / 2;
  ExtElem<K> r = a.pow(e);
  if (r == one_like(a)) return 1;
  if (r == -one_like(a)) return -1;
  throw UnsupportedField("Euler criterion returned a non-sign value");
}

/// Discriminant square class test for a diagonal form over any finite
/// field presented as extension elements.
template <class K>
bool diag_disc_is_square(const std::vector<K>& diag) {
  if (diag.empty()) throw ZeroInput("empty diagonal has no discriminant");
  K prod = diag[0];
  for (std::size_t i = 1; i < diag.size(); ++i) prod = prod * diag[i];
  int s = euler_sign(prod);
  if (s == 0) throw DegenerateForm("diagonal entry is zero");
  return s == 1;
}

}  // namespace gwbez
