#pragma once

// SVG picture of two affine curve traces with their real intersection
// points.  The traces come from sign-change marching squares on a sample
// grid; every label is computed exactly and the raster step never feeds
// back into the mathematics.

#include <cstdint>
#include <string>

#include "gwbez/intersect.hpp"
#include "gwbez/rational.hpp"

namespace gwbez {

struct PlotSpec {
  Rat xmin = Rat(-2), xmax = Rat(2);
  Rat ymin = Rat(-2), ymax = Rat(2);
  long samples = 160;    // grid resolution per axis
  bool annotate = true;  // crossing sign labels
};

/// Deterministic SVG 1.1 document; EmptyWindow on a degenerate window,
/// ZeroInput when samples < 16.
std::string render_svg(const CurvePair<Rat>& pair, const PlotSpec& spec,
                       std::uint64_t seed = 0);

}  // namespace gwbez
