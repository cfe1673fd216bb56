#include "gwbez/intersect.hpp"

namespace gwbez {

template std::vector<IntersectionPoint<Rat>> find_intersections(const CurvePair<Rat>&,
                                                                std::uint64_t);
template std::vector<IntersectionPoint<Fp>> find_intersections(const CurvePair<Fp>&,
                                                               std::uint64_t);

}  // namespace gwbez
