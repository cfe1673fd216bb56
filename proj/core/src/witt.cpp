#include "gwbez/gw.hpp"
#include "gwbez/intfactor.hpp"

namespace gwbez {

WittFpClass WittFpClass::zero(long p) {
  check_odd_prime(p);
  WittFpClass c;
  c.p = p;
  if (p % 4 == 1) c.nonresidue = least_nonresidue(p);
  return c;
}

WittFpClass WittFpClass::from_unit(long p, int euler_sign) {
  WittFpClass c = zero(p);
  if (euler_sign == 0) throw ZeroElement("Witt class of a zero unit");
  if (p % 4 == 3) {
    // <1> generates Z/4; a non-square is congruent to <-1> = 3 <1>.
    c.a = euler_sign > 0 ? 1 : 3;
  } else {
    c.a = euler_sign > 0 ? 1 : 0;
    c.b = euler_sign > 0 ? 0 : 1;
  }
  return c;
}

WittFpClass& WittFpClass::operator+=(const WittFpClass& o) {
  if (p != o.p) throw MismatchedField("Witt classes at different primes");
  if (p % 4 == 3) {
    a = (a + o.a) % 4;
  } else {
    a = (a + o.a) % 2;
    b = (b + o.b) % 2;
  }
  return *this;
}

std::string WittFpClass::str() const {
  if (p % 4 == 3) return std::to_string(a) + "*<1>";
  return std::to_string(a) + "*<1> + " + std::to_string(b) + "*<" +
         std::to_string(nonresidue) + ">";
}

WittFpClass witt_residue_p(const Rat& entry, long p) {
  check_odd_prime(p);
  if (entry.is_zero()) throw ZeroElement("residue of a zero entry");
  long v = valuation_p(entry, p);
  if (v % 2 == 0) return WittFpClass::zero(p);
  mpz_class a = entry.num(), b = entry.den();
  while (mpz_divisible_ui_p(a.get_mpz_t(), p)) a /= p;
  while (mpz_divisible_ui_p(b.get_mpz_t(), p)) b /= p;
  int sign = legendre_symbol(a, p) * legendre_symbol(b, p);
  return WittFpClass::from_unit(p, sign);
}

}  // namespace gwbez
