#include "gwbez/gw.hpp"

#include <algorithm>
#include <set>

#include "gwbez/intfactor.hpp"

namespace gwbez {

std::string FieldTag::str() const {
  switch (kind) {
    case Kind::Q: return "Q";
    case Kind::Fp: return "Fp:" + std::to_string(p);
    case Kind::Ct: return "Ct";
  }
  return "?";
}

GWElement GWElement::make_q(std::vector<Rat> diag) {
  for (const auto& d : diag)
    if (d.is_zero()) throw ZeroElement("diagonal entries must be nonzero");
  GWElement x;
  x.tag_ = FieldTag::Q();
  x.diag_ = std::move(diag);
  return x;
}

GWElement GWElement::make_fp(long p, std::vector<Fp> diag) {
  FieldTag tag = FieldTag::prime(p);
  for (const auto& d : diag) {
    if (d.modulus() != p) throw MismatchedField("entry modulus differs from the field tag");
    if (d.is_zero()) throw ZeroElement("diagonal entries must be nonzero");
  }
  GWElement x;
  x.tag_ = tag;
  x.diag_ = std::move(diag);
  return x;
}

GWElement GWElement::make_ct(std::vector<RatFunc> diag) {
  for (const auto& d : diag)
    if (d.is_zero()) throw ZeroElement("diagonal entries must be nonzero");
  GWElement x;
  x.tag_ = FieldTag::Ct();
  x.diag_ = std::move(diag);
  return x;
}

GWElement GWElement::zero(FieldTag tag) {
  switch (tag.kind) {
    case FieldTag::Kind::Q: return make_q({});
    case FieldTag::Kind::Fp: return make_fp(tag.p, {});
    case FieldTag::Kind::Ct: return make_ct({});
  }
  throw UnsupportedField("unknown field tag");
}

GWElement GWElement::hyperbolic(FieldTag tag, long copies) {
  if (copies < 0) throw ZeroInput("negative number of hyperbolic copies");
  switch (tag.kind) {
    case FieldTag::Kind::Q: {
      std::vector<Rat> d;
      for (long i = 0; i < copies; ++i) {
        d.emplace_back(1);
        d.emplace_back(-1);
      }
      return make_q(std::move(d));
    }
    case FieldTag::Kind::Fp: {
      std::vector<Fp> d;
      for (long i = 0; i < copies; ++i) {
        d.emplace_back(1, tag.p);
        d.emplace_back(-1, tag.p);
      }
      return make_fp(tag.p, std::move(d));
    }
    case FieldTag::Kind::Ct: {
      std::vector<RatFunc> d;
      for (long i = 0; i < copies; ++i) {
        d.emplace_back(Rat(1));
        d.emplace_back(Rat(-1));
      }
      return make_ct(std::move(d));
    }
  }
  throw UnsupportedField("unknown field tag");
}

long GWElement::rank() const {
  return std::visit([](const auto& v) { return static_cast<long>(v.size()); }, diag_);
}

const std::vector<Rat>& GWElement::q_diag() const {
  if (tag_.kind != FieldTag::Kind::Q) throw MismatchedField("not a rational form");
  return std::get<std::vector<Rat>>(diag_);
}
const std::vector<Fp>& GWElement::fp_diag() const {
  if (tag_.kind != FieldTag::Kind::Fp) throw MismatchedField("not a prime field form");
  return std::get<std::vector<Fp>>(diag_);
}
const std::vector<RatFunc>& GWElement::ct_diag() const {
  if (tag_.kind != FieldTag::Kind::Ct) throw MismatchedField("not a Laurent model form");
  return std::get<std::vector<RatFunc>>(diag_);
}

GWElement gw_add(const GWElement& x, const GWElement& y) {
  if (!(x.tag() == y.tag())) throw MismatchedField("sum of forms over different fields");
  switch (x.tag().kind) {
    case FieldTag::Kind::Q: {
      auto d = x.q_diag();
      d.insert(d.end(), y.q_diag().begin(), y.q_diag().end());
      return GWElement::make_q(std::move(d));
    }
    case FieldTag::Kind::Fp: {
      auto d = x.fp_diag();
      d.insert(d.end(), y.fp_diag().begin(), y.fp_diag().end());
      return GWElement::make_fp(x.tag().p, std::move(d));
    }
    case FieldTag::Kind::Ct: {
      auto d = x.ct_diag();
      d.insert(d.end(), y.ct_diag().begin(), y.ct_diag().end());
      return GWElement::make_ct(std::move(d));
    }
  }
  throw UnsupportedField("unknown field tag");
}

GWElement gw_mul(const GWElement& x, const GWElement& y) {
  if (!(x.tag() == y.tag())) throw MismatchedField("product of forms over different fields");
  switch (x.tag().kind) {
    case FieldTag::Kind::Q: {
      std::vector<Rat> d;
      for (const auto& a : x.q_diag())
        for (const auto& b : y.q_diag()) d.push_back(a * b);
      return GWElement::make_q(std::move(d));
    }
    case FieldTag::Kind::Fp: {
      std::vector<Fp> d;
      for (const auto& a : x.fp_diag())
        for (const auto& b : y.fp_diag()) d.push_back(a * b);
      return GWElement::make_fp(x.tag().p, std::move(d));
    }
    case FieldTag::Kind::Ct: {
      std::vector<RatFunc> d;
      for (const auto& a : x.ct_diag())
        for (const auto& b : y.ct_diag()) d.push_back(a * b);
      return GWElement::make_ct(std::move(d));
    }
  }
  throw UnsupportedField("unknown field tag");
}

long gw_rank(const GWElement& x) { return x.rank(); }

long gw_signature(const GWElement& x) {
  long s = 0;
  for (const auto& d : x.q_diag()) s += d.sign();
  return s;
}

mpz_class gw_disc_q(const GWElement& x) {
  const auto& diag = x.q_diag();
  if (diag.empty()) throw ZeroInput("empty form has no discriminant");
  Rat prod(1);
  for (const auto& d : diag) prod *= d;
  return square_class(prod);
}

bool gw_disc_square_fp(const GWElement& x) {
  const auto& diag = x.fp_diag();
  if (diag.empty()) throw ZeroInput("empty form has no discriminant");
  Fp prod(1, x.tag().p);
  for (const auto& d : diag) prod *= d;
  return prod.euler_symbol() == 1;
}

int gw_disc_parity_ct(const GWElement& x) {
  const auto& diag = x.ct_diag();
  if (diag.empty()) throw ZeroInput("empty form has no discriminant");
  long parity = 0;
  for (const auto& d : diag) parity += d.t_valuation();
  return static_cast<int>(((parity % 2) + 2) % 2);
}

int witt_residue_2(const GWElement& x) {
  long v = 0;
  for (const auto& d : x.q_diag()) v += valuation2(d);
  return static_cast<int>(((v % 2) + 2) % 2);
}

WittFpClass witt_residue_p(const GWElement& x, long p) {
  WittFpClass acc = WittFpClass::zero(p);
  for (const auto& d : x.q_diag()) acc += witt_residue_p(d, p);
  return acc;
}

std::set<long> residue_prime_support(const std::vector<Rat>& diag) {
  std::set<long> primes;
  for (const auto& d : diag) {
    for (const auto& [q, e] : factor_integer(abs(d.num())))
      if (q != 2 && q.fits_slong_p()) primes.insert(q.get_si());
    for (const auto& [q, e] : factor_integer(d.den()))
      if (q != 2 && q.fits_slong_p()) primes.insert(q.get_si());
  }
  return primes;
}

InvariantVector gw_invariants(const GWElement& x) {
  InvariantVector inv;
  inv.rank = x.rank();
  switch (x.tag().kind) {
    case FieldTag::Kind::Q: {
      inv.signature = gw_signature(x);
      if (inv.rank > 0) {
        inv.disc_q = gw_disc_q(x);
        inv.d2 = witt_residue_2(x);
        for (long p : residue_prime_support(x.q_diag())) {
          WittFpClass c = witt_residue_p(x, p);
          if (!c.is_zero()) inv.dp.emplace(p, c);
        }
      }
      break;
    }
    case FieldTag::Kind::Fp:
      if (inv.rank > 0) inv.disc_square = gw_disc_square_fp(x);
      break;
    case FieldTag::Kind::Ct:
      if (inv.rank > 0) inv.disc_parity = gw_disc_parity_ct(x);
      break;
  }
  return inv;
}

bool operator==(const InvariantVector& x, const InvariantVector& y) {
  if (x.rank != y.rank) return false;
  if (x.signature != y.signature) return false;
  if (x.disc_q != y.disc_q) return false;
  if (x.d2 != y.d2) return false;
  if (x.disc_square != y.disc_square) return false;
  if (x.disc_parity != y.disc_parity) return false;
  // dp holds nonzero classes only, so equality is plain map equality.
  return x.dp == y.dp;
}

std::string InvariantVector::str() const {
  std::string s = "rank=" + std::to_string(rank);
  if (signature) s += " sig=" + std::to_string(*signature);
  if (disc_q) s += " disc=" + disc_q->get_str();
  if (d2) s += " d2=" + std::to_string(*d2);
  if (disc_square) s += std::string(" disc=") + (*disc_square ? "square" : "nonsquare");
  if (disc_parity) s += " disc=<t^" + std::to_string(*disc_parity) + ">";
  for (const auto& [p, c] : dp) s += " d" + std::to_string(p) + "=[" + c.str() + "]";
  return s;
}

bool gw_equal(const GWElement& x, const GWElement& y) {
  if (!(x.tag() == y.tag()))
    throw MismatchedField("comparison of forms over different fields");
  return gw_invariants(x) == gw_invariants(y);
}

int ct_classify(const RatFunc& g) {
  if (g.is_zero()) throw ZeroElement("square class of zero");
  long v = g.t_valuation();
  return static_cast<int>(((v % 2) + 2) % 2);
}

std::string GWElement::str() const {
  if (rank() == 0) return "0";
  switch (tag_.kind) {
    case FieldTag::Kind::Q: {
      std::vector<mpz_class> rest;
      for (const auto& d : q_diag()) rest.push_back(square_class(d));
      long h = 0;
      for (std::size_t i = 0; i < rest.size(); ++i) {
        for (std::size_t j = i + 1; j < rest.size(); ++j) {
          if (squarefree_part(rest[i] * rest[j]) == -1) {
            rest.erase(rest.begin() + j);
            rest.erase(rest.begin() + i);
            ++h;
            --i;
            break;
          }
        }
      }
      std::string out;
      if (h > 0) out = (h == 1 ? "H" : std::to_string(h) + "*H");
      for (const auto& r : rest) out += (out.empty() ? "<" : " + <") + r.get_str() + ">";
      return out;
    }
    case FieldTag::Kind::Fp: {
      long p = tag_.p;
      int neg_one = legendre_symbol(mpz_class(-1), p);
      std::vector<int> rest;
      for (const auto& d : fp_diag()) rest.push_back(d.euler_symbol());
      long h = 0;
      for (std::size_t i = 0; i < rest.size(); ++i) {
        for (std::size_t j = i + 1; j < rest.size(); ++j) {
          if (rest[i] * rest[j] == neg_one) {
            rest.erase(rest.begin() + j);
            rest.erase(rest.begin() + i);
            ++h;
            --i;
            break;
          }
        }
      }
      std::string out;
      if (h > 0) out = (h == 1 ? "H" : std::to_string(h) + "*H");
      for (int s : rest) {
        std::string u = s == 1 ? "1" : std::to_string(least_nonresidue(p));
        out += (out.empty() ? "<" : " + <") + u + ">";
      }
      return out;
    }
    case FieldTag::Kind::Ct: {
      long ones = 0, ts = 0;
      for (const auto& d : ct_diag()) (ct_classify(d) == 0 ? ones : ts) += 1;
      std::string out;
      if (ones > 0) out = (ones == 1 ? "<1>" : std::to_string(ones) + "*<1>");
      if (ts > 0) {
        if (!out.empty()) out += " + ";
        out += (ts == 1 ? "<t>" : std::to_string(ts) + "*<t>");
      }
      return out;
    }
  }
  throw UnsupportedField("unknown field tag");
}

}  // namespace gwbez
