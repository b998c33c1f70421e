#pragma once

// Independent reference computations used to derive and cross-check expected
// values. Nothing here calls into the code paths being verified.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "strokeforge/geometry.hpp"
#include "strokeforge/raster_io.hpp"

namespace strokeforge::testing {

/// Breadth-first search over every (point index, velocity vector) state of a
/// presampled stroke. Returns the fewest steps from (first, 0) to a final
/// state whose velocity can be halted (|v| < accel), or nullopt.
std::optional<std::size_t> brute_force_min_steps(const std::vector<Point>& presampled, double accel,
                                                 double threshold);

/// Checks a sample sequence against the acceleration bound, including the
/// zero start velocity and the halting final step.
bool satisfies_accel_bound(const std::vector<Point>& samples, double accel);

struct BruteChamfer {
  double mean_ab, mean_ba, max_ab, max_ba;
};
/// O(|A| |B|) nearest-neighbour chamfer.
BruteChamfer brute_force_chamfer(const BinaryImage& a, const BinaryImage& b);

/// Textbook Zhang-Suen on an ASCII grid ('#' = ink), outside = background.
std::vector<std::string> naive_zhang_suen(std::vector<std::string> grid);

/// Between-class variance for each threshold t (class 0 = values < t), by
/// direct summation over the histogram. Entries with an empty class are -1.
std::array<double, 257> otsu_variance_table(const std::array<std::uint64_t, 256>& hist);

}  // namespace strokeforge::testing
