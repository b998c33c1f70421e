#include "strokeforge/pipeline.hpp"

#include "strokeforge/parallel.hpp"

namespace strokeforge {

std::vector<SampledStroke> resample_all(const StrokeSet& strokes, const ResampleOptions& options) {
  std::vector<SampledStroke> out(strokes.strokes.size());
  parallel_for(out.size(), options.jobs, [&](std::size_t i) {
    const Stroke& s = strokes.strokes[i];
    switch (options.method) {
      case ResampleMethod::max_accel:
        out[i] = max_accel_resample(s, options.params);
        break;
      case ResampleMethod::constant_velocity:
        out[i] = constant_velocity_resample(s, options.speed);
        break;
      case ResampleMethod::none:
        out[i] = SampledStroke{s.points, false};
        break;
    }
  });
  return out;
}

OnlineSequence online_from_skeleton(const BinaryImage& skeleton, const ResampleOptions& options) {
  return order_strokes(resample_all(vectorize(skeleton), options));
}

}  // namespace strokeforge
