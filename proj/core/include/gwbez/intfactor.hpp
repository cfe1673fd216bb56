#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <vector>

namespace gwbez {

/// Deterministic primality decision for the integer sizes handled here.
bool is_prime(const mpz_class& n);

/// Prime factorization of n > 0, sorted by prime.  Trial division up to
/// 10^6, then recursive Pollard-Brent splitting.
std::map<mpz_class, unsigned> factor_integer(const mpz_class& n);

/// Product of the primes with odd exponent in |n|, carrying the sign of n.
/// squarefree_part(0) is 0.
mpz_class squarefree_part(const mpz_class& n);

/// p-adic valuation of n != 0.
long valuation(const mpz_class& n, const mpz_class& p);

/// Smallest positive quadratic non-residue modulo an odd prime p.
long least_nonresidue(long p);

/// Euler criterion: 1 if a is a nonzero square mod p, -1 if a nonzero
/// non-square, 0 if p divides a.
int legendre_symbol(const mpz_class& a, long p);

}  // namespace gwbez
