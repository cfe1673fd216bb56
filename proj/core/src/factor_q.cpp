#include <algorithm>
#include <vector>

#include "gwbez/factor.hpp"
#include "gwbez/intfactor.hpp"

namespace gwbez {

namespace {

using QP = UPoly<Rat>;
using ZP = std::vector<mpz_class>;  // dense integer polynomial, low to high

void znormalize(ZP& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

long zdeg(const ZP& f) { return static_cast<long>(f.size()) - 1; }

ZP zadd(const ZP& a, const ZP& b) {
  ZP r = a;
  if (r.size() < b.size()) r.resize(b.size(), mpz_class(0));
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  znormalize(r);
  return r;
}

ZP zsub(const ZP& a, const ZP& b) {
  ZP r = a;
  if (r.size() < b.size()) r.resize(b.size(), mpz_class(0));
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  znormalize(r);
  return r;
}

ZP zmul(const ZP& a, const ZP& b) {
  if (a.empty() || b.empty()) return {};
  ZP r(a.size() + b.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  znormalize(r);
  return r;
}

ZP zmod(ZP f, const mpz_class& m) {
  for (auto& c : f) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  znormalize(f);
  return f;
}

// Representatives in (-m/2, m/2].
ZP zbalance(ZP f, const mpz_class& m) {
  mpz_class half = m / 2;
  for (auto& c : f) {
    mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  znormalize(f);
  return f;
}

// Division by a monic divisor with coefficients reduced mod m.
std::pair<ZP, ZP> zdivrem_monic_mod(ZP a, const ZP& b, const mpz_class& m) {
  a = zmod(std::move(a), m);
  if (a.size() < b.size()) return {ZP{}, std::move(a)};
  ZP q(a.size() - b.size() + 1, mpz_class(0));
  for (long i = static_cast<long>(a.size()) - static_cast<long>(b.size()); i >= 0; --i) {
    mpz_class c = a[i + b.size() - 1];
    if (c == 0) continue;
    q[i] = c;
    for (std::size_t j = 0; j < b.size(); ++j) {
      a[i + j] -= c * b[j];
      mpz_mod(a[i + j].get_mpz_t(), a[i + j].get_mpz_t(), m.get_mpz_t());
    }
  }
  znormalize(a);
  znormalize(q);
  return {std::move(q), std::move(a)};
}

// Exact division in Z[x] by a monic divisor; false when a remainder is left.
bool zdiv_exact_monic(const ZP& a, const ZP& b, ZP& quot) {
  ZP r = a;
  if (r.size() < b.size()) return false;
  ZP q(r.size() - b.size() + 1, mpz_class(0));
  for (long i = static_cast<long>(r.size()) - static_cast<long>(b.size()); i >= 0; --i) {
    mpz_class c = r[i + b.size() - 1];
    if (c == 0) continue;
    q[i] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] -= c * b[j];
  }
  znormalize(r);
  if (!r.empty()) return false;
  znormalize(q);
  quot = std::move(q);
  return true;
}

mpz_class zcontent(const ZP& f) {
  mpz_class g = 0;
  for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZP zprimitive(ZP f) {
  mpz_class c = zcontent(f);
  if (c == 0) return f;
  if (f.back() < 0) c = -c;
  for (auto& x : f) x /= c;
  return f;
}

UPoly<Fp> to_fp(const ZP& f, long p) {
  UPoly<Fp> r;
  r.reserve(f.size());
  for (const auto& c : f) {
    mpz_class m = c % p;
    r.emplace_back(m.get_si(), p);
  }
  up::normalize(r);
  return r;
}

ZP from_fp(const UPoly<Fp>& f) {
  ZP r;
  r.reserve(f.size());
  for (const auto& c : f) r.emplace_back(c.value());
  znormalize(r);
  return r;
}

// Factorization with Bezout data mod m: f = g*h, s*g + t*h = 1, h monic.
struct HenselPair {
  ZP g, h, s, t;
};

// One quadratic lifting step, from modulus m to m2 = m^2.
HenselPair hensel_step(const ZP& f, const HenselPair& in, const mpz_class& m2) {
  ZP e = zmod(zsub(f, zmul(in.g, in.h)), m2);
  auto [q, r] = zdivrem_monic_mod(zmul(in.s, e), in.h, m2);
  ZP g2 = zmod(zadd(in.g, zadd(zmul(in.t, e), zmul(q, in.g))), m2);
  ZP h2 = zmod(zadd(in.h, r), m2);
  ZP b = zmod(zsub(zadd(zmul(in.s, g2), zmul(in.t, h2)), ZP{1}), m2);
  auto [c, d] = zdivrem_monic_mod(zmul(in.s, b), h2, m2);
  ZP s2 = zmod(zsub(in.s, d), m2);
  ZP t2 = zmod(zsub(in.t, zadd(zmul(in.t, b), zmul(c, g2))), m2);
  return {std::move(g2), std::move(h2), std::move(s2), std::move(t2)};
}

// Lifts f = prod(factors) from mod p to mod P (binary splitting tree).
// f is monic with exact integer coefficients; factors are monic mod p.
void lift_tree(const ZP& f, const std::vector<UPoly<Fp>>& factors, std::size_t lo,
               std::size_t hi, long p, const mpz_class& P, std::vector<ZP>& out) {
  if (hi - lo == 1) {
    out.push_back(zmod(f, P));
    return;
  }
  std::size_t mid = lo + (hi - lo) / 2;
  UPoly<Fp> G{Fp(1, p)}, H{Fp(1, p)};
  for (std::size_t i = lo; i < mid; ++i) G = up::mul(G, factors[i]);
  for (std::size_t i = mid; i < hi; ++i) H = up::mul(H, factors[i]);
  auto [one, s, t] = up::extended_gcd(G, H);
  if (up::degree(one) != 0)
    throw ZeroInput("modular factors are not coprime");
  HenselPair pair{from_fp(G), from_fp(H), from_fp(s), from_fp(t)};
  mpz_class m(p);
  while (m < P) {
    mpz_class m2 = m * m;
    pair = hensel_step(f, pair, m2);
    m = m2;
  }
  pair.g = zmod(pair.g, P);
  pair.h = zmod(pair.h, P);
  if (zmod(zsub(f, zmul(pair.g, pair.h)), P) != ZP{})
    throw PrecisionExhausted("Hensel lifting failed to reach the target modulus");
  lift_tree(pair.g, factors, lo, mid, p, P, out);
  lift_tree(pair.h, factors, mid, hi, p, P, out);
}

// Zassenhaus for a monic squarefree integer polynomial; returns monic
// irreducible integer factors.
std::vector<ZP> zassenhaus_monic(const ZP& f) {
  long n = zdeg(f);
  if (n <= 1) return {f};

  // A prime keeping f squarefree; the leading coefficient 1 never drops.
  long p = 0;
  std::vector<UPoly<Fp>> modular;
  for (long cand = 3; cand < 10000; cand += 2) {
    if (!is_prime(mpz_class(cand))) continue;
    UPoly<Fp> fbar = to_fp(f, cand);
    if (up::degree(fbar) != n) continue;
    if (up::degree(up::gcd(fbar, up::derivative(fbar))) != 0) continue;
    p = cand;
    UFactor<Fp> mf = univariate_factor(fbar, 1);
    modular.clear();
    modular.reserve(mf.factors.size());
    for (auto& [poly, mult] : mf.factors) modular.push_back(poly);
    break;
  }
  if (p == 0) throw PrecisionExhausted("no usable prime for modular factorization");
  if (modular.size() == 1) return {f};

  // Landau-Mignotte style bound: factor coefficients of a monic f are
  // bounded by 2^n * l2norm(f).
  mpz_class norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  mpz_class bound = (root + 1) << static_cast<unsigned long>(n);
  mpz_class P(p);
  while (P <= 2 * bound) P *= p;

  std::vector<ZP> lifted;
  lift_tree(f, modular, 0, modular.size(), p, P, lifted);

  // Subset recombination.
  std::vector<std::size_t> pool(lifted.size());
  for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i;
  std::vector<ZP> out;
  ZP fcur = f;
  std::size_t s = 1;
  while (2 * s <= pool.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      ZP cand{1};
      for (std::size_t i : idx) cand = zmul(cand, lifted[pool[i]]);
      cand = zbalance(std::move(cand), P);
      bool ok = true;
      if (!fcur.empty() && cand[0] != 0 && fcur[0] != 0)
        ok = mpz_divisible_p(fcur[0].get_mpz_t(), cand[0].get_mpz_t()) != 0;
      ZP quot;
      if (ok && zdiv_exact_monic(fcur, cand, quot)) {
        out.push_back(cand);
        fcur = std::move(quot);
        std::vector<std::size_t> rest;
        for (std::size_t i = 0, j = 0; i < pool.size(); ++i) {
          if (j < idx.size() && idx[j] == i) { ++j; continue; }
          rest.push_back(pool[i]);
        }
        pool = std::move(rest);
        found = true;
        break;
      }
      // Next size-s combination of pool positions.
      long k = static_cast<long>(s) - 1;
      while (k >= 0 && idx[k] == pool.size() - s + k) --k;
      if (k < 0) break;
      ++idx[k];
      for (std::size_t j = k + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (zdeg(fcur) > 0) out.push_back(fcur);
  return out;
}

// Irreducible primitive integer factors of a primitive squarefree integer
// polynomial with positive leading coefficient.
std::vector<ZP> factor_primitive_squarefree(const ZP& g) {
  long n = zdeg(g);
  if (n <= 1) return {g};
  mpz_class L = g.back();
  if (L == 1) return zassenhaus_monic(g);
  // Monic transform ghat(x) = L^(n-1) g(x/L); roots are scaled by L.
  ZP ghat(g.size());
  ghat[n] = 1;
  mpz_class pw = 1;
  for (long i = n - 1; i >= 0; --i) {
    ghat[i] = g[i] * pw;
    pw *= L;
  }
  std::vector<ZP> monic_factors = zassenhaus_monic(ghat);
  std::vector<ZP> out;
  out.reserve(monic_factors.size());
  for (const auto& h : monic_factors) {
    ZP back(h.size());
    mpz_class q = 1;
    for (std::size_t i = 0; i < h.size(); ++i) {
      back[i] = h[i] * q;
      q *= L;
    }
    out.push_back(zprimitive(std::move(back)));
  }
  return out;
}

// Yun squarefree decomposition of a monic rational polynomial.
std::vector<std::pair<QP, int>> yun_squarefree(const QP& f) {
  std::vector<std::pair<QP, int>> parts;
  QP fp = up::derivative(f);
  QP g = up::gcd(f, fp);
  QP c = up::exact_div(f, g);
  QP d = up::sub(up::exact_div(fp, g), up::derivative(c));
  int i = 1;
  while (up::degree(c) > 0) {
    QP a = up::gcd(c, d);
    if (up::degree(a) > 0) parts.emplace_back(a, i);
    c = up::exact_div(c, a);
    d = up::sub(up::exact_div(d, a), up::derivative(c));
    ++i;
  }
  return parts;
}

}  // namespace

UFactor<Rat> univariate_factor(const UPoly<Rat>& f) {
  if (f.empty()) throw ZeroInput("cannot factor the zero polynomial");
  UFactor<Rat> result{f.back(), {}};
  if (up::degree(f) == 0) return result;
  QP monic = up::make_monic(f);
  for (const auto& [part, mult] : yun_squarefree(monic)) {
    // Clear denominators and take the primitive part.
    mpz_class M = 1;
    for (const auto& c : part) mpz_lcm(M.get_mpz_t(), M.get_mpz_t(), c.den().get_mpz_t());
    ZP g(part.size());
    for (std::size_t i = 0; i < part.size(); ++i) {
      Rat scaled = part[i] * Rat(M);
      g[i] = scaled.num();
    }
    g = zprimitive(std::move(g));
    for (const auto& h : factor_primitive_squarefree(g)) {
      QP hq(h.size());
      Rat lead{h.back()};
      for (std::size_t i = 0; i < h.size(); ++i) hq[i] = Rat(h[i]) / lead;
      result.factors.emplace_back(std::move(hq), mult);
    }
  }
  sort_factors(result.factors);
  return result;
}

void verify_irreducible(const UPoly<Rat>& f) {
  UFactor<Rat> fac = univariate_factor(f);
  if (fac.factors.size() != 1 || fac.factors[0].second != 1)
    throw NotIrreducible("polynomial is reducible over the rationals");
}

}  // namespace gwbez
