#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gwbez/errors.hpp"
#include "gwbez/field_traits.hpp"
#include "gwbez/upoly.hpp"

namespace gwbez {

/// Sparse multivariate polynomial over a field K.  Terms are keyed by
/// exponent vectors of fixed length nvars(); zero coefficients are never
/// stored, so the term map is a canonical representation.
template <class K>
class Poly {
 public:
  using Expo = std::vector<std::uint32_t>;

  explicit Poly(int nvars = 0) : nvars_(nvars) {}

  static Poly constant(int nvars, const K& c) {
    Poly r(nvars);
    if (!gwbez::is_zero(c)) r.terms_[Expo(nvars, 0)] = c;
    return r;
  }

  static Poly variable(int nvars, int i, const K& one) {
    if (i < 0 || i >= nvars) throw IndexOutOfRange("variable index out of range");
    Poly r(nvars);
    Expo e(nvars, 0);
    e[i] = 1;
    r.terms_[e] = one;
    return r;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Expo, K>& terms() const { return terms_; }

  void add_term(const Expo& e, const K& c) {
    if (static_cast<int>(e.size()) != nvars_)
      throw DimensionMismatch("exponent vector length does not match variable count");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (!gwbez::is_zero(c)) terms_.emplace(e, c);
    } else {
      it->second += c;
      if (gwbez::is_zero(it->second)) terms_.erase(it);
    }
  }

  K coeff(const Expo& e, const K& sample) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? zero_like(sample) : it->second;
  }

  long total_degree() const {
    long d = -1;
    for (const auto& [e, c] : terms_) {
      long s = 0;
      for (auto x : e) s += x;
      if (s > d) d = s;
    }
    return d;
  }

  long degree_in(int var) const {
    long d = -1;
    for (const auto& [e, c] : terms_)
      if (static_cast<long>(e[var]) > d) d = e[var];
    return d;
  }

  bool is_homogeneous(long* degree_out = nullptr) const {
    long d = -1;
    for (const auto& [e, c] : terms_) {
      long s = 0;
      for (auto x : e) s += x;
      if (d == -1) d = s;
      else if (s != d) return false;
    }
    if (degree_out) *degree_out = d;
    return true;
  }

  Poly operator-() const {
    Poly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  Poly& operator-=(const Poly& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_vars(b);
    Poly r(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Expo e(ea);
        for (int i = 0; i < a.nvars_; ++i) e[i] += eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }

  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly& operator*=(const K& c) {
    if (gwbez::is_zero(c)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
  }

  friend Poly operator*(Poly a, const K& c) { return a *= c; }
  friend Poly operator*(const K& c, Poly a) { return a *= c; }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Evaluation at a point whose coordinates live in a (possibly larger)
  /// field P with K * P defined.  Powers are cached per variable.
  template <class P>
  P eval(const std::vector<P>& x) const {
    if (static_cast<int>(x.size()) != nvars_)
      throw DimensionMismatch("evaluation point has wrong dimension");
    P zero = x.empty() ? P() : zero_like(x[0]);
    if (nvars_ == 0)
      throw DimensionMismatch("evaluation of a polynomial in zero variables requires a sample");
    std::vector<std::vector<P>> pw(nvars_);
    for (int i = 0; i < nvars_; ++i) pw[i].push_back(one_like(x[0]));
    P acc = zero;
    for (const auto& [e, c] : terms_) {
      P t = one_like(x[0]);
      for (int i = 0; i < nvars_; ++i) {
        while (pw[i].size() <= e[i]) pw[i].push_back(pw[i].back() * x[i]);
        if (e[i] > 0) t = t * pw[i][e[i]];
      }
      acc = acc + c * t;
    }
    return acc;
  }

  Poly derivative(int var) const {
    if (var < 0 || var >= nvars_) throw IndexOutOfRange("derivative variable out of range");
    Poly r(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Expo e2(e);
      e2[var] -= 1;
      r.add_term(e2, c * int_like(c, e[var]));
    }
    return r;
  }

  /// Coefficient of var^k, as a polynomial in all nvars variables with
  /// var-exponent zero.
  Poly coeff_of(int var, std::uint32_t k) const {
    Poly r(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[var] != k) continue;
      Expo e2(e);
      e2[var] = 0;
      r.terms_[e2] = c;
    }
    return r;
  }

  /// Substitutes a polynomial for one variable (Horner in that variable).
  Poly substitute(int var, const Poly& repl) const {
    check_vars(repl);
    long d = degree_in(var);
    if (d < 0) return *this;
    Poly acc = coeff_of(var, static_cast<std::uint32_t>(d));
    for (long k = d - 1; k >= 0; --k)
      acc = acc * repl + coeff_of(var, static_cast<std::uint32_t>(k));
    return acc;
  }

  /// Substitutes a constant for one variable.
  Poly substitute_const(int var, const K& value) const {
    return substitute(var, constant(nvars_, value));
  }

  /// Removes a variable that no longer occurs; remaining variables keep
  /// their relative order.
  Poly remove_var(int var) const {
    if (degree_in(var) > 0) throw DimensionMismatch("variable still occurs, cannot remove");
    Poly r(nvars_ - 1);
    for (const auto& [e, c] : terms_) {
      Expo e2;
      e2.reserve(nvars_ - 1);
      for (int i = 0; i < nvars_; ++i)
        if (i != var) e2.push_back(e[i]);
      r.terms_[e2] = c;
    }
    return r;
  }

  /// Inserts a fresh variable (exponent zero everywhere) at position var.
  Poly insert_var(int var) const {
    Poly r(nvars_ + 1);
    for (const auto& [e, c] : terms_) {
      Expo e2;
      e2.reserve(nvars_ + 1);
      for (int i = 0; i < var; ++i) e2.push_back(e[i]);
      e2.push_back(0);
      for (int i = var; i < nvars_; ++i) e2.push_back(e[i]);
      r.terms_[e2] = c;
    }
    return r;
  }

  /// Applies a coefficient map, e.g. embedding into an extension field.
  template <class F>
  auto map_coeffs(F&& fn) const {
    using K2 = decltype(fn(std::declval<const K&>()));
    Poly<K2> r(nvars_);
    for (const auto& [e, c] : terms_) {
      K2 c2 = fn(c);
      if (!gwbez::is_zero(c2)) r.set_term_unchecked(e, c2);
    }
    return r;
  }

  /// Dense univariate view; every term must be a power of the given var.
  UPoly<K> to_upoly(int var) const {
    UPoly<K> r;
    for (const auto& [e, c] : terms_) {
      for (int i = 0; i < nvars_; ++i)
        if (i != var && e[i] != 0)
          throw VariableAbsent("polynomial is not univariate in the requested variable");
      if (r.size() <= e[var]) r.resize(e[var] + 1, zero_like(c));
      r[e[var]] = c;
    }
    up::normalize(r);
    return r;
  }

  static Poly from_upoly(const UPoly<K>& f, int nvars, int var) {
    Poly r(nvars);
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (gwbez::is_zero(f[i])) continue;
      Expo e(nvars, 0);
      e[var] = static_cast<std::uint32_t>(i);
      r.terms_[e] = f[i];
    }
    return r;
  }

  /// Canonical printing: terms in descending lexicographic exponent order.
  std::string str(const std::vector<std::string>& names) const {
    if (static_cast<int>(names.size()) != nvars_)
      throw DimensionMismatch("variable name list has wrong length");
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      std::string c = elem_str(it->second);
      bool paren = up::compound_str(c);
      bool neg = !paren && !c.empty() && c[0] == '-';
      std::string mag = paren ? "(" + c + ")" : (neg ? c.substr(1) : c);
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      std::string vars;
      for (int i = 0; i < nvars_; ++i) {
        if (it->first[i] == 0) continue;
        if (!vars.empty()) vars += "*";
        vars += names[i];
        if (it->first[i] > 1) vars += "^" + std::to_string(it->first[i]);
      }
      if (vars.empty()) {
        out += mag;
      } else if (mag == "1") {
        out += vars;
      } else {
        out += mag + "*" + vars;
      }
    }
    return out;
  }

  // Used by map_coeffs on the target instantiation.
  void set_term_unchecked(const Expo& e, const K& c) { terms_[e] = c; }

 private:
  void check_vars(const Poly& o) const {
    if (nvars_ != o.nvars_)
      throw DimensionMismatch("polynomials over different variable sets");
  }

  int nvars_;
  std::map<Expo, K> terms_;
};

}  // namespace gwbez
