#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gwbez/errors.hpp"
#include "gwbez/field_traits.hpp"
#include "gwbez/upoly.hpp"

namespace gwbez {

template <class K>
class ExtElem;

// Irreducibility gate used by ExtensionField constructors.  Concrete
// overloads for the rational and rational function bases live in
// factor.hpp / ratfunc.hpp; the generic finite field test is in factor.hpp.
template <class K>
void verify_irreducible(const UPoly<K>& f);

/// Simple field extension K[x]/(m), m monic irreducible.  Degree 1 is the
/// base field presented as an extension.  Elements reference their field
/// through a shared_ptr; fields compare equal when their moduli do.
template <class K>
class ExtensionField : public std::enable_shared_from_this<ExtensionField<K>> {
 public:
  static std::shared_ptr<const ExtensionField> make(UPoly<K> min_poly,
                                                    std::string gen_name = "a") {
    if (up::degree(min_poly) < 1)
      throw ZeroInput("extension minimal polynomial must have degree >= 1");
    if (!gwbez::is_zero(min_poly.back() - one_like(min_poly.back())))
      throw NotMonic("extension minimal polynomial must be monic");
    verify_irreducible(min_poly);
    return std::shared_ptr<const ExtensionField>(
        new ExtensionField(std::move(min_poly), std::move(gen_name)));
  }

  long degree() const { return up::degree(modulus_); }
  const UPoly<K>& modulus() const { return modulus_; }
  const std::string& gen_name() const { return gen_name_; }

  /// A base field element carrying this field's coefficient context.
  K base_sample() const { return modulus_.back(); }

  ExtElem<K> zero() const;
  ExtElem<K> one() const;
  ExtElem<K> gen() const;
  ExtElem<K> embed(const K& c) const;
  ExtElem<K> from_coeffs(UPoly<K> c) const;

 private:
  ExtensionField(UPoly<K> m, std::string g)
      : modulus_(std::move(m)), gen_name_(std::move(g)) {}

  UPoly<K> modulus_;
  std::string gen_name_;
};

template <class K>
using ExtFieldPtr = std::shared_ptr<const ExtensionField<K>>;

template <class K>
bool same_field(const ExtFieldPtr<K>& a, const ExtFieldPtr<K>& b) {
  return a.get() == b.get() || a->modulus() == b->modulus();
}

/// Element of a simple extension, represented by its coefficient vector of
/// degree below the field degree.
template <class K>
class ExtElem {
 public:
  ExtElem() = default;
  ExtElem(ExtFieldPtr<K> field, UPoly<K> coeffs)
      : field_(std::move(field)), c_(std::move(coeffs)) {
    up::normalize(c_);
    if (up::degree(c_) >= field_->degree())
      c_ = up::rem(c_, field_->modulus());
  }

  const ExtFieldPtr<K>& field() const { return field_; }
  const UPoly<K>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  /// True when the element lies in the image of the base field.
  bool is_scalar() const { return c_.size() <= 1; }
  K scalar_value() const {
    if (c_.empty()) return zero_like(field_->base_sample());
    if (c_.size() > 1) throw NonRationalPoint("element is not in the base field");
    return c_[0];
  }

  ExtElem operator-() const { return trusted(field_, up::neg(c_)); }

  ExtElem& operator+=(const ExtElem& o) {
    check(o);
    c_ = up::add(c_, o.c_);
    return *this;
  }
  ExtElem& operator-=(const ExtElem& o) {
    check(o);
    c_ = up::sub(c_, o.c_);
    return *this;
  }
  ExtElem& operator*=(const ExtElem& o) {
    check(o);
    c_ = up::rem(up::mul(c_, o.c_), field_->modulus());
    return *this;
  }
  ExtElem& operator/=(const ExtElem& o) { return *this *= o.inverse(); }

  friend ExtElem operator+(ExtElem a, const ExtElem& b) { return a += b; }
  friend ExtElem operator-(ExtElem a, const ExtElem& b) { return a -= b; }
  friend ExtElem operator*(ExtElem a, const ExtElem& b) { return a *= b; }
  friend ExtElem operator/(ExtElem a, const ExtElem& b) { return a /= b; }

  // Mixed scalar arithmetic with the base field.
  friend ExtElem operator*(const K& c, const ExtElem& a) {
    return trusted_norm(a.field_, up::scale(a.c_, c));
  }
  friend ExtElem operator*(const ExtElem& a, const K& c) { return c * a; }
  friend ExtElem operator+(const ExtElem& a, const K& c) {
    return a + a.field_->embed(c);
  }

  friend bool operator==(const ExtElem& a, const ExtElem& b) {
    if (!a.field_ || !b.field_) return !a.field_ && !b.field_;
    return same_field(a.field_, b.field_) && a.c_ == b.c_;
  }
  friend bool operator!=(const ExtElem& a, const ExtElem& b) { return !(a == b); }

  ExtElem inverse() const {
    if (c_.empty()) throw DivisionByZero("inverse of zero in extension field");
    auto [g, s, t] = up::extended_gcd(c_, field_->modulus());
    if (up::degree(g) != 0)
      throw NotIrreducible("extension modulus is not irreducible");
    return trusted_norm(field_, s);
  }

  ExtElem pow(const mpz_class& e) const {
    if (e < 0) return inverse().pow(-e);
    ExtElem acc = field_->one();
    for (long bit = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; bit >= 0; --bit) {
      acc *= acc;
      if (mpz_tstbit(e.get_mpz_t(), bit)) acc *= *this;
    }
    if (e == 0) return field_->one();
    return acc;
  }

  std::string str() const {
    return up::to_string(c_, field_ ? field_->gen_name() : "a");
  }

 private:
  static ExtElem trusted(ExtFieldPtr<K> f, UPoly<K> c) {
    ExtElem e;
    e.field_ = std::move(f);
    e.c_ = std::move(c);
    return e;
  }
  static ExtElem trusted_norm(ExtFieldPtr<K> f, UPoly<K> c) {
    up::normalize(c);
    return trusted(std::move(f), std::move(c));
  }
  void check(const ExtElem& o) const {
    if (!field_ || !o.field_ || !same_field(field_, o.field_))
      throw MismatchedParents("extension elements from different fields");
  }

  ExtFieldPtr<K> field_;
  UPoly<K> c_;
};

template <class K>
ExtElem<K> ExtensionField<K>::zero() const {
  return ExtElem<K>(this->shared_from_this(), UPoly<K>{});
}
template <class K>
ExtElem<K> ExtensionField<K>::one() const {
  return ExtElem<K>(this->shared_from_this(), UPoly<K>{one_like(base_sample())});
}
template <class K>
ExtElem<K> ExtensionField<K>::gen() const {
  if (degree() == 1) {
    // x = -m0 in a degree one extension.
    return ExtElem<K>(this->shared_from_this(), UPoly<K>{-modulus_[0]});
  }
  return ExtElem<K>(this->shared_from_this(),
                    UPoly<K>{zero_like(base_sample()), one_like(base_sample())});
}
template <class K>
ExtElem<K> ExtensionField<K>::embed(const K& c) const {
  return ExtElem<K>(this->shared_from_this(), UPoly<K>{c});
}
template <class K>
ExtElem<K> ExtensionField<K>::from_coeffs(UPoly<K> c) const {
  return ExtElem<K>(this->shared_from_this(), std::move(c));
}

// Field trait hooks.
template <class K>
ExtElem<K> zero_like(const ExtElem<K>& a) {
  return a.field()->zero();
}
template <class K>
ExtElem<K> one_like(const ExtElem<K>& a) {
  return a.field()->one();
}
template <class K>
ExtElem<K> int_like(const ExtElem<K>& a, long n) {
  return a.field()->embed(int_like(a.field()->base_sample(), n));
}
template <class K>
bool is_zero(const ExtElem<K>& a) {
  return a.is_zero();
}
template <class K>
ExtElem<K> inverse(const ExtElem<K>& a) {
  return a.inverse();
}
template <class K>
std::string elem_str(const ExtElem<K>& a) {
  return a.str();
}
template <class K>
mpz_class field_card(const ExtElem<K>& a) {
  mpz_class base = field_card(a.field()->base_sample());
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(),
             static_cast<unsigned long>(a.field()->degree()));
  return out;
}
template <class K>
long field_char(const ExtElem<K>& a) {
  return field_char(a.field()->base_sample());
}

/// Trace of the multiplication by b operator on the power basis.
template <class K>
K ext_trace(const ExtElem<K>& b) {
  const auto& F = b.field();
  const long d = F->degree();
  K acc = zero_like(F->base_sample());
  ExtElem<K> cur = b;  // b * gen^i, advanced by one power per step
  for (long i = 0; i < d; ++i) {
    acc += up::coeff_or_zero(cur.coeffs(), i, F->base_sample());
    if (i + 1 < d) cur *= F->gen();
  }
  return acc;
}

/// Determinant of the multiplication by b operator (the field norm).
template <class K>
K ext_norm(const ExtElem<K>& b) {
  const auto& F = b.field();
  const long d = F->degree();
  // Columns of the multiplication matrix.
  std::vector<UPoly<K>> cols;
  ExtElem<K> cur = b;
  for (long i = 0; i < d; ++i) {
    cols.push_back(cur.coeffs());
    if (i + 1 < d) cur *= F->gen();
  }
  // Gaussian elimination over the base field.
  K sample = F->base_sample();
  std::vector<std::vector<K>> m(d, std::vector<K>(d, zero_like(sample)));
  for (long j = 0; j < d; ++j)
    for (std::size_t i = 0; i < cols[j].size(); ++i) m[i][j] = cols[j][i];
  K det = one_like(sample);
  for (long col = 0; col < d; ++col) {
    long piv = -1;
    for (long r = col; r < d; ++r)
      if (!gwbez::is_zero(m[r][col])) {
        piv = r;
        break;
      }
    if (piv < 0) return zero_like(sample);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    K pinv = inverse(m[col][col]);
    for (long r = col + 1; r < d; ++r) {
      if (gwbez::is_zero(m[r][col])) continue;
      K f = m[r][col] * pinv;
      for (long c2 = col; c2 < d; ++c2) m[r][c2] -= f * m[col][c2];
    }
  }
  return det;
}

/// Uniform element of a finite extension, one base draw per coefficient.
template <class K, class Rng>
ExtElem<K> random_element(const ExtElem<K>& sample, Rng& rng) {
  const auto& F = sample.field();
  UPoly<K> c;
  c.reserve(F->degree());
  for (long i = 0; i < F->degree(); ++i)
    c.push_back(random_element(F->base_sample(), rng));
  return F->from_coeffs(std::move(c));
}

/// All elements of a finite field, in a deterministic order.
inline std::vector<Fp> all_field_elements(const Fp& sample) {
  std::vector<Fp> out;
  out.reserve(sample.modulus());
  for (long v = 0; v < sample.modulus(); ++v) out.emplace_back(v, sample.modulus());
  return out;
}

template <class K>
std::vector<ExtElem<K>> all_field_elements(const ExtElem<K>& sample) {
  const auto& F = sample.field();
  std::vector<K> base = all_field_elements(F->base_sample());
  std::vector<ExtElem<K>> out{F->zero()};
  std::vector<UPoly<K>> partial{UPoly<K>{}};
  for (long i = 0; i < F->degree(); ++i) {
    std::vector<UPoly<K>> next;
    next.reserve(partial.size() * base.size());
    for (const auto& b : base)
      for (const auto& p : partial) {
        UPoly<K> c = p;
        c.resize(i + 1, zero_like(F->base_sample()));
        c[i] = b;
        next.push_back(std::move(c));
      }
    partial = std::move(next);
  }
  out.clear();
  out.reserve(partial.size());
  for (auto& c : partial) out.push_back(F->from_coeffs(std::move(c)));
  return out;
}

}  // namespace gwbez
