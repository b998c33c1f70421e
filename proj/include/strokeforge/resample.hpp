#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "strokeforge/geometry.hpp"
#include "strokeforge/skeleton_graph.hpp"

namespace strokeforge {

/// Dynamics parameters, all in pixel units.
///   max_accel          bound on |v_{k+1} - v_k| (strict)
///   presample_spacing  arc-length spacing of candidate points, default max_accel / 3
///   reach_threshold    max deviation of skipped points from a chord (strict),
///                      default 3 * presample_spacing
struct ResampleParams {
  double max_accel = 3.0;
  double presample_spacing = 1.0;
  double reach_threshold = 3.0;

  /// Throws std::invalid_argument unless all three values are finite and > 0.
  static ResampleParams make(double max_accel, std::optional<double> spacing = std::nullopt,
                             std::optional<double> reach = std::nullopt);
  void validate() const;
};

struct SampledStroke {
  std::vector<Point> samples;
  /// Set when no trajectory met the terminal condition and the presampled
  /// points were emitted instead.
  bool fallback = false;

  friend bool operator==(const SampledStroke&, const SampledStroke&) = default;
};

/// Points at arc length 0, d, 2d, ..., L with d = L / ceil(L / spacing).
/// Endpoints are kept exactly.
Stroke presample_constant(const Stroke& s, double spacing);

/// Forward reachability between points of a presampled stroke.
class ReachMatrix {
 public:
  explicit ReachMatrix(std::size_t n) : n_(n), cells_(n * n, 0) {}

  std::size_t size() const { return n_; }
  bool operator()(std::size_t from, std::size_t to) const { return cells_[from * n_ + to] != 0; }
  void set(std::size_t from, std::size_t to, bool v) { cells_[from * n_ + to] = v ? 1 : 0; }

 private:
  std::size_t n_;
  std::vector<std::uint8_t> cells_;
};

/// True iff every point from..to lies closer than `threshold` to the line
/// through points[from] and points[to]. Requires from < to.
bool reachable(const std::vector<Point>& points, std::size_t from, std::size_t to, double threshold);

/// Entry (i, j) is set iff j > i and reachable(points, i, j, threshold).
ReachMatrix reachability(const Stroke& s, double threshold);

/// Maximum-acceleration resampling. The stroke is presampled, then the fewest
/// steps from the first to the last point are found over states (point,
/// incoming velocity) with start velocity 0 and a halting final step
/// (|0 - v_last| < max_accel). Every step must be reachable and change the
/// velocity by less than max_accel. Ties go to the lowest predecessor index.
SampledStroke max_accel_resample(const Stroke& s, const ResampleParams& params);

/// Arc-length sampling every `speed` pixels; the final endpoint is always kept.
SampledStroke constant_velocity_resample(const Stroke& s, double speed);

/// Polyline arc length.
double arc_length(const std::vector<Point>& points);

}  // namespace strokeforge
