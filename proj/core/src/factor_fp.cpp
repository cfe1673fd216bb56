#include <map>
#include <random>

#include "gwbez/factor.hpp"

namespace gwbez {

namespace {

using P = UPoly<Fp>;

bool is_one(const P& f) { return f.size() == 1 && f[0].is_one(); }

// f with vanishing derivative is a polynomial in x^p; over the prime field
// the p-th root just contracts exponents.
P pth_root(const P& f, long p) {
  P r;
  for (std::size_t i = 0; i < f.size(); i += p) r.push_back(f[i]);
  up::normalize(r);
  return r;
}

// Exponent -> product of monic squarefree coprime polynomials.
void squarefree_decompose(const P& f, long mult, std::map<long, P>& out) {
  long p = f.empty() ? 0 : f[0].modulus();
  if (up::degree(f) < 1) return;
  P fp = up::derivative(f);
  if (fp.empty()) {
    squarefree_decompose(pth_root(f, p), mult * p, out);
    return;
  }
  P d = up::gcd(f, fp);
  P w = up::exact_div(f, d);
  long i = 1;
  while (!is_one(w)) {
    P y = up::gcd(w, d);
    P z = up::exact_div(w, y);
    if (!is_one(z)) {
      auto it = out.find(mult * i);
      if (it == out.end()) out.emplace(mult * i, z);
      else it->second = up::mul(it->second, z);
    }
    w = std::move(y);
    d = up::exact_div(d, w);
    ++i;
  }
  if (!is_one(d)) squarefree_decompose(d, mult * p, out);
}

// Distinct degree splitting of a monic squarefree polynomial.
std::vector<std::pair<P, long>> distinct_degree(const P& f) {
  std::vector<std::pair<P, long>> out;
  long p = f[0].modulus();
  P cur = f;
  P x{Fp(0, p), Fp(1, p)};
  P frob = x;
  long d = 0;
  while (up::degree(cur) > 0) {
    ++d;
    if (up::degree(cur) < 2 * d) {
      out.emplace_back(cur, up::degree(cur));
      break;
    }
    frob = up::pow_mod(frob, mpz_class(p), cur);
    P g = up::gcd(up::sub(frob, x), cur);
    if (up::degree(g) > 0) {
      out.emplace_back(g, d);
      cur = up::exact_div(cur, g);
      frob = up::rem(frob, cur);
    }
  }
  return out;
}

// Equal degree splitting, Cantor-Zassenhaus.  f monic squarefree, all
// irreducible factors of degree d.
void equal_degree(const P& f, long d, std::mt19937_64& rng, std::vector<P>& out) {
  if (up::degree(f) == d) {
    out.push_back(f);
    return;
  }
  long p = f[0].modulus();
  mpz_class e;
  mpz_pow_ui(e.get_mpz_t(), mpz_class(p).get_mpz_t(), static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  for (;;) {
    P a;
    for (long i = 0; i < up::degree(f); ++i)
      a.push_back(random_element(f[0], rng));
    up::normalize(a);
    if (up::degree(a) < 1) continue;
    P g = up::gcd(a, f);
    if (up::degree(g) > 0 && up::degree(g) < up::degree(f)) {
      equal_degree(g, d, rng, out);
      equal_degree(up::exact_div(f, g), d, rng, out);
      return;
    }
    P b = up::pow_mod(a, e, f);
    b = up::sub(b, P{Fp(1, p)});
    g = up::gcd(b, f);
    if (up::degree(g) > 0 && up::degree(g) < up::degree(f)) {
      equal_degree(g, d, rng, out);
      equal_degree(up::exact_div(f, g), d, rng, out);
      return;
    }
  }
}

}  // namespace

UFactor<Fp> univariate_factor(const UPoly<Fp>& f, std::uint64_t seed) {
  if (f.empty()) throw ZeroInput("cannot factor the zero polynomial");
  check_odd_prime(f[0].modulus());
  UFactor<Fp> result{f.back(), {}};
  if (up::degree(f) == 0) return result;
  P monic = up::make_monic(f);
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 1);
  std::map<long, P> parts;
  squarefree_decompose(monic, 1, parts);
  for (const auto& [mult, part] : parts) {
    for (const auto& [sub, d] : distinct_degree(part)) {
      std::vector<P> irred;
      equal_degree(sub, d, rng, irred);
      for (auto& h : irred)
        result.factors.emplace_back(std::move(h), static_cast<int>(mult));
    }
  }
  sort_factors(result.factors);
  return result;
}

void verify_irreducible(const UPoly<Fp>& f) {
  if (!is_irreducible_finite(f))
    throw NotIrreducible("polynomial is reducible over the prime field");
}

}  // namespace gwbez
