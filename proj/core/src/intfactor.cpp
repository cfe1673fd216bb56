#include "gwbez/intfactor.hpp"

#include <stdexcept>

#include "gwbez/errors.hpp"

namespace gwbez {

namespace {

constexpr unsigned long kTrialBound = 1000000;

// Pollard-Brent with a deterministic sequence of polynomial offsets.
// Precondition: n odd composite, no prime factor below kTrialBound.
mpz_class pollard_brent(const mpz_class& n) {
  for (unsigned long c = 1;; ++c) {
    mpz_class x = 2, y = 2, d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      mpz_class diff = x > y ? x - y : y - x;
      if (diff == 0) break;  // cycle without factor, retry with next c
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != 1 && d != n) return d;
  }
}

void factor_into(const mpz_class& n, std::map<mpz_class, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  mpz_class d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

bool is_prime(const mpz_class& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::map<mpz_class, unsigned> factor_integer(const mpz_class& n) {
  if (n <= 0) throw ZeroInput("factor_integer expects a positive integer");
  std::map<mpz_class, unsigned> out;
  mpz_class m = n;
  for (unsigned long d = 2; d <= kTrialBound && m > 1; d += (d == 2 ? 1 : 2)) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
      unsigned e = 0;
      while (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
        m /= static_cast<unsigned long>(d);
        ++e;
      }
      out[mpz_class(d)] = e;
    }
    // Once d^2 > m the remainder is prime or 1.
    if (mpz_class(d) * d > m) break;
  }
  if (m > 1) factor_into(m, out);
  return out;
}

mpz_class squarefree_part(const mpz_class& n) {
  if (n == 0) return 0;
  mpz_class a = abs(n);
  mpz_class sf = 1;
  for (const auto& [p, e] : factor_integer(a))
    if (e % 2 == 1) sf *= p;
  return n < 0 ? -sf : sf;
}

long valuation(const mpz_class& n, const mpz_class& p) {
  if (n == 0) throw ZeroInput("valuation of zero is undefined");
  if (p < 2) throw ZeroInput("valuation base must be >= 2");
  long v = 0;
  mpz_class m = abs(n);
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    m /= p;
    ++v;
  }
  return v;
}

int legendre_symbol(const mpz_class& a, long p) {
  if (p == 2) throw EvenPrime("legendre symbol requires an odd prime");
  mpz_class r;
  mpz_class pz(p);
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), pz.get_mpz_t());
  if (r == 0) return 0;
  return mpz_legendre(r.get_mpz_t(), pz.get_mpz_t());
}

long least_nonresidue(long p) {
  if (p == 2) throw EvenPrime("non-residues exist only for odd primes");
  for (long r = 2;; ++r)
    if (legendre_symbol(mpz_class(r), p) == -1) return r;
}

}  // namespace gwbez
