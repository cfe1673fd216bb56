#include "gwbez/ratfunc.hpp"

namespace gwbez {

RatFunc::RatFunc(UPoly<Rat> num, UPoly<Rat> den)
    : num_(std::move(num)), den_(std::move(den)) {
  up::normalize(num_);
  up::normalize(den_);
  if (den_.empty()) throw DivisionByZero("rational function with zero denominator");
  reduce();
}

void RatFunc::reduce() {
  if (num_.empty()) {
    den_ = {Rat(1)};
    return;
  }
  UPoly<Rat> g = up::gcd(num_, den_);
  if (up::degree(g) > 0) {
    num_ = up::exact_div(num_, g);
    den_ = up::exact_div(den_, g);
  }
  Rat lead = den_.back();
  if (!lead.is_one()) {
    Rat inv = lead.inverse();
    for (Rat& c : num_) c *= inv;
    for (Rat& c : den_) c *= inv;
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  for (Rat& c : r.num_) c = -c;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  num_ = up::add(up::mul(num_, o.den_), up::mul(o.num_, den_));
  den_ = up::mul(den_, o.den_);
  reduce();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
  num_ = up::sub(up::mul(num_, o.den_), up::mul(o.num_, den_));
  den_ = up::mul(den_, o.den_);
  reduce();
  return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  num_ = up::mul(num_, o.num_);
  den_ = up::mul(den_, o.den_);
  reduce();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw DivisionByZero("rational function division by zero");
  num_ = up::mul(num_, o.den_);
  den_ = up::mul(den_, o.num_);
  if (den_.empty()) throw DivisionByZero("rational function division by zero");
  reduce();
  return *this;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of the zero rational function");
  return RatFunc(den_, num_);
}

long RatFunc::t_valuation() const {
  if (is_zero()) throw ZeroInput("t-adic valuation of zero");
  auto trailing = [](const UPoly<Rat>& f) {
    long i = 0;
    while (f[i].is_zero()) ++i;
    return i;
  };
  return trailing(num_) - trailing(den_);
}

Rat RatFunc::leading_coeff() const {
  if (is_zero()) throw ZeroInput("leading coefficient of zero");
  auto first = [](const UPoly<Rat>& f) {
    long i = 0;
    while (f[i].is_zero()) ++i;
    return f[i];
  };
  return first(num_) / first(den_);
}

std::string RatFunc::str() const {
  std::string n = up::to_string(num_, "t");
  if (den_.size() == 1 && den_[0].is_one()) return n;
  std::string d = up::to_string(den_, "t");
  return "(" + n + ")/(" + d + ")";
}

void verify_irreducible(const UPoly<RatFunc>& f) {
  // Eisenstein at t: every lower coefficient has positive t-valuation and
  // the constant term has valuation exactly 1.
  long n = up::degree(f);
  if (n < 1) throw ZeroInput("minimal polynomial must have positive degree");
  if (n == 1) return;
  if (f[0].is_zero() || f[0].t_valuation() != 1)
    throw UnsupportedCoefficientField(
        "irreducibility over the Laurent model needs an Eisenstein certificate at t");
  for (long i = 1; i < n; ++i)
    if (!f[i].is_zero() && f[i].t_valuation() < 1)
      throw UnsupportedCoefficientField(
          "irreducibility over the Laurent model needs an Eisenstein certificate at t");
}

}  // namespace gwbez
