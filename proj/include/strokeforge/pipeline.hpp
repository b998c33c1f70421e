#pragma once

#include "strokeforge/ordering.hpp"
#include "strokeforge/raster_io.hpp"
#include "strokeforge/resample.hpp"
#include "strokeforge/skeleton_graph.hpp"

namespace strokeforge {

enum class ResampleMethod { max_accel, constant_velocity, none };

struct ResampleOptions {
  ResampleMethod method = ResampleMethod::max_accel;
  ResampleParams params = ResampleParams::make(3.0);
  double speed = 3.0;  // constant_velocity only
  unsigned jobs = 1;
};

/// Resamples every stroke, in parallel when jobs > 1. Output order matches input.
std::vector<SampledStroke> resample_all(const StrokeSet& strokes, const ResampleOptions& options);

/// vectorize -> resample -> order on an already-skeletonized mask.
OnlineSequence online_from_skeleton(const BinaryImage& skeleton, const ResampleOptions& options);

}  // namespace strokeforge
