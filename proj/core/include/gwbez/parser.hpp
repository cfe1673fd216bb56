#pragma once

// Text front-end for polynomials.  Integer and rational literals,
// variables x0..x9 with affine aliases x, y, z, operators + - * ^ and
// parentheses; ^ binds tighter than *.

#include <string>
#include <vector>

#include "gwbez/fp.hpp"
#include "gwbez/poly.hpp"
#include "gwbez/rational.hpp"

namespace gwbez {

struct ParsedPoly {
  std::string source;
  Poly<Rat> poly;
};

/// Affine parse: x1..x9 map to variable indices 0..8, x/y/z alias x1/x2/x3;
/// x0 is rejected.  The result has at least two variables.
ParsedPoly parse_affine(const std::string& text);

/// Homogeneous parse in x0..xn.  Checks homogeneity, and the total degree
/// when d >= 0; offending terms are reported through NotHomogeneous.
ParsedPoly parse_homogeneous(const std::string& text, long n, long d = -1);

/// Coefficient reduction mod p; DivisionByZero when a denominator is
/// divisible by p.
Poly<Fp> poly_to_fp(const Poly<Rat>& f, long p);

Fp rat_to_fp(const Rat& c, long p);

/// Canonical names x0..xn, or x, y, ... in affine mode.  Printing with
/// these names round-trips through the parser.
std::vector<std::string> variable_names(int nvars, bool affine);

}  // namespace gwbez
