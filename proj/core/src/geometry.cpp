#include "gwbez/geometry.hpp"

namespace gwbez {

OrientabilityReport orientability(long n, const std::vector<long>& degrees) {
  if (n < 1) throw DimensionMismatch("ambient dimension must be positive");
  if (degrees.size() != static_cast<std::size_t>(n))
    throw DimensionMismatch("need exactly n hypersurface degrees on P^n");
  OrientabilityReport r;
  r.n = n;
  r.degrees = degrees;
  long sum = 0;
  for (long d : degrees) {
    if (d < 1) throw ZeroInput("hypersurface degrees must be at least one");
    sum += d;
  }
  r.N = sum - n - 1;
  r.orientable = (r.N % 2 == 0);
  if (!r.orientable)
    r.divisor_note = "computations are relative to the divisor {x0 = 0}";
  return r;
}

std::string OrientabilityReport::str() const {
  std::string s = "N=" + std::to_string(N);
  s += orientable ? ", relatively orientable" : ", not relatively orientable";
  if (!divisor_note.empty()) s += " (" + divisor_note + ")";
  return s;
}

}  // namespace gwbez
