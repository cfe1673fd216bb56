#pragma once

// Sturm sequences over the rationals: exact root counting, isolation into
// disjoint intervals, bisection refinement, and sign determination at an
// isolated algebraic number.  No floating point anywhere.

#include <utility>
#include <vector>

#include "gwbez/rational.hpp"
#include "gwbez/upoly.hpp"

namespace gwbez {

int upoly_sign_at(const UPoly<Rat>& f, const Rat& x);

/// An isolating interval: exact root when lo == hi, otherwise an open
/// interval containing exactly one root, with nonzero values at both ends.
using RootInterval = std::pair<Rat, Rat>;

class SturmChain {
 public:
  /// Builds the chain of the squarefree part; ZeroInput on the zero
  /// polynomial.
  explicit SturmChain(const UPoly<Rat>& f);

  const UPoly<Rat>& squarefree() const { return f_; }
  long degree() const;

  /// Number of distinct real roots in (a, b].
  long count(const Rat& a, const Rat& b) const;
  long count_all() const;

  /// Strictly exceeds the absolute value of every real root.
  Rat root_bound() const;

  /// Disjoint isolating intervals in increasing order, one per real root.
  std::vector<RootInterval> isolate() const;

  /// Bisects until hi - lo < width (exact roots are returned unchanged).
  RootInterval refine(RootInterval iv, const Rat& width) const;

 private:
  long changes_at(const Rat& x) const;
  void split(const Rat& a, const Rat& b, std::vector<RootInterval>& out) const;

  UPoly<Rat> f_;
  std::vector<UPoly<Rat>> chain_;
};

/// Exact sign of g at the root isolated by (chain, iv).
int sign_at_root(const SturmChain& chain, RootInterval iv, const UPoly<Rat>& g);

}  // namespace gwbez
