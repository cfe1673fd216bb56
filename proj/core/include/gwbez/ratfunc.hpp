#pragma once

#include <string>
#include <utility>

#include "gwbez/errors.hpp"
#include "gwbez/rational.hpp"
#include "gwbez/upoly.hpp"

namespace gwbez {

/// Rational function in one variable t over the rationals, stored as a
/// reduced fraction with monic denominator.  Used as the coefficient field
/// for the formal Laurent series model.
class RatFunc {
 public:
  RatFunc() : num_{}, den_{Rat(1)} {}
  RatFunc(const Rat& c) : num_{}, den_{Rat(1)} {  // NOLINT: implicit by design
    if (!c.is_zero()) num_ = {c};
  }
  RatFunc(UPoly<Rat> num, UPoly<Rat> den);

  static RatFunc from_poly(UPoly<Rat> p) { return RatFunc(std::move(p), {Rat(1)}); }
  static RatFunc t() { return from_poly({Rat(0), Rat(1)}); }

  const UPoly<Rat>& num() const { return num_; }
  const UPoly<Rat>& den() const { return den_; }
  bool is_zero() const { return num_.empty(); }
  bool is_one() const { return den_.size() == 1 && num_.size() == 1 && num_[0] == den_[0]; }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc inverse() const;

  /// Order of vanishing at t = 0; poles give negative values.
  long t_valuation() const;

  /// Coefficient of t^valuation in the expansion at t = 0.
  Rat leading_coeff() const;

  std::string str() const;

 private:
  void reduce();
  UPoly<Rat> num_, den_;
};

inline RatFunc zero_like(const RatFunc&) { return RatFunc(); }
inline RatFunc one_like(const RatFunc&) { return RatFunc(Rat(1)); }
inline RatFunc int_like(const RatFunc&, long n) { return RatFunc(Rat(n)); }
inline bool is_zero(const RatFunc& a) { return a.is_zero(); }
inline RatFunc inverse(const RatFunc& a) { return a.inverse(); }
inline std::string elem_str(const RatFunc& a) { return a.str(); }
inline long field_char(const RatFunc&) { return 0; }

/// Irreducibility certificate for extensions of the rational function
/// field: only polynomials that are Eisenstein at t are accepted.
void verify_irreducible(const UPoly<RatFunc>& f);

}  // namespace gwbez
