#pragma once

#include <vector>

#include "gwbez/extension.hpp"
#include "gwbez/linalg.hpp"

namespace gwbez {

/// Gram matrix of the scaled trace pairing (u, v) -> Tr(beta * u * v) on
/// the power basis 1, a, ..., a^(d-1).
template <class K>
Matrix<K> trace_form_gram(const ExtFieldPtr<K>& E, const ExtElem<K>& beta) {
  if (beta.is_zero()) throw ZeroElement("trace form needs a nonzero scaling unit");
  if (!same_field(beta.field(), E))
    throw MismatchedParents("scaling unit lives in a different field");
  const long d = E->degree();
  // beta * a^e for e = 0 .. 2d-2.
  std::vector<ExtElem<K>> pw;
  pw.reserve(2 * d - 1);
  pw.push_back(beta);
  for (long e = 1; e <= 2 * d - 2; ++e) pw.push_back(pw.back() * E->gen());
  Matrix<K> m = make_matrix(d, d, E->base_sample());
  for (long i = 0; i < d; ++i)
    for (long j = i; j < d; ++j) {
      K v = ext_trace(pw[i + j]);
      m[i][j] = v;
      m[j][i] = v;
    }
  return m;
}

/// Diagonal entries of the scaled trace form over the base field.
template <class K>
std::vector<K> trace_form(const ExtFieldPtr<K>& E, const ExtElem<K>& beta) {
  return gram_diagonalize(trace_form_gram(E, beta));
}

}  // namespace gwbez
