#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gwbez/errors.hpp"
#include "gwbez/fp.hpp"
#include "gwbez/rational.hpp"
#include "gwbez/upoly.hpp"

namespace gwbez {

/// Factorization of a nonzero univariate polynomial over a field:
/// unit * product of monic irreducible factors^multiplicity.
/// Factors are sorted by degree, then by a deterministic coefficient key.
template <class K>
struct UFactor {
  K unit;
  std::vector<std::pair<UPoly<K>, int>> factors;
};

/// Rational coefficients: squarefree decomposition, then Zassenhaus
/// (factor modulo a good prime, Hensel lift, subset recombination).
UFactor<Rat> univariate_factor(const UPoly<Rat>& f);

/// Prime field coefficients: squarefree decomposition, distinct degree
/// splitting, then equal degree splitting with a seeded generator.
UFactor<Fp> univariate_factor(const UPoly<Fp>& f, std::uint64_t seed = 0);

/// Deterministic irreducibility test over a finite field of odd order:
/// x^(q^n) = x mod f together with gcd checks at the maximal subfields.
template <class K>
bool is_irreducible_finite(UPoly<K> f) {
  long n = up::degree(f);
  if (n < 1) return false;
  f = up::make_monic(std::move(f));
  if (n == 1) return true;
  const K one = f.back();
  UPoly<K> x{zero_like(one), one};
  mpz_class q = field_card(one);
  mpz_class e;
  mpz_pow_ui(e.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(n));
  if (up::pow_mod(x, e, f) != x) return false;
  for (long l = 2, m = n; l <= m; ++l) {
    if (m % l != 0) continue;
    while (m % l == 0) m /= l;
    mpz_pow_ui(e.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(n / l));
    UPoly<K> h = up::sub(up::pow_mod(x, e, f), x);
    if (up::degree(up::gcd(h, f)) != 0) return false;
  }
  return true;
}

// Irreducibility gates for extension field construction.  The unqualified
// primary template covers finite fields; exact overloads cover the
// characteristic zero bases.
void verify_irreducible(const UPoly<Rat>& f);
void verify_irreducible(const UPoly<Fp>& f);

template <class K>
void verify_irreducible(const UPoly<K>& f) {
  if (!is_irreducible_finite(f))
    throw NotIrreducible("polynomial is reducible over the finite base field");
}

inline Fp random_element(const Fp& sample, std::mt19937_64& rng) {
  return Fp(static_cast<long>(rng() % static_cast<std::uint64_t>(sample.modulus())),
            sample.modulus());
}

/// Monic irreducible polynomial of the requested degree over a finite
/// field, found by seeded random search.
template <class K>
UPoly<K> find_irreducible(const K& sample, long degree, std::uint64_t seed) {
  if (degree < 1) throw ZeroInput("irreducible search needs degree >= 1");
  if (degree == 1) return UPoly<K>{zero_like(sample), one_like(sample)};
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);
  for (int tries = 0; tries < 100000; ++tries) {
    UPoly<K> f;
    f.reserve(degree + 1);
    for (long i = 0; i < degree; ++i) f.push_back(random_element(sample, rng));
    f.push_back(one_like(sample));
    if (is_irreducible_finite(f)) return f;
  }
  throw PrecisionExhausted("no irreducible polynomial found; search budget exhausted");
}

/// Deterministic sort key: degree, then length prefixed coefficient
/// strings from the leading coefficient down.
template <class K>
std::string poly_sort_key(const UPoly<K>& f) {
  std::string key = std::to_string(f.size());
  key += '|';
  for (std::size_t i = f.size(); i-- > 0;) {
    std::string c = elem_str(f[i]);
    key += std::to_string(c.size()) + ':' + c + ';';
  }
  return key;
}

template <class K>
void sort_factors(std::vector<std::pair<UPoly<K>, int>>& factors) {
  std::sort(factors.begin(), factors.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return poly_sort_key(a.first) < poly_sort_key(b.first);
  });
}

}  // namespace gwbez
