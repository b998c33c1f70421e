#pragma once

#include <stdexcept>
#include <vector>

#include "strokeforge/ordering.hpp"
#include "strokeforge/raster_io.hpp"

namespace strokeforge {

class EmptyForegroundError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Draws each stroke as 1-px Bresenham segments between consecutive samples
/// (rounded to the nearest pixel). Single-sample strokes become one dot.
/// Nothing is drawn across pen lifts; off-canvas parts are clipped.
BinaryImage render_online(const OnlineSequence& seq, int width, int height);

/// Exact squared Euclidean distance from every pixel to the nearest
/// foreground pixel (row-major). Requires a non-empty foreground.
std::vector<double> squared_distance_transform(const BinaryImage& img);

struct ChamferDistances {
  double mean_ab = 0.0;
  double mean_ba = 0.0;
  double max_ab = 0.0;
  double max_ba = 0.0;
};

/// Directed nearest-foreground distances between two same-size masks.
/// Throws std::invalid_argument on a size mismatch and EmptyForegroundError
/// when either mask has no foreground.
ChamferDistances chamfer(const BinaryImage& a, const BinaryImage& b);

}  // namespace strokeforge
