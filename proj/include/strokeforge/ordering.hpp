#pragma once

#include <optional>
#include <vector>

#include "strokeforge/geometry.hpp"
#include "strokeforge/resample.hpp"

namespace strokeforge {

/// Strokes in writing order; a pen lift separates consecutive strokes and
/// samples are one time step apart.
struct OnlineSequence {
  std::vector<SampledStroke> strokes;
  friend bool operator==(const OnlineSequence&, const OnlineSequence&) = default;
};

struct DeltaTriplet {
  double dx = 0.0;
  double dy = 0.0;
  bool pen_lift = false;  // set on the last sample of every stroke
  friend bool operator==(const DeltaTriplet&, const DeltaTriplet&) = default;
};

struct DeltaSequence {
  Point origin;
  std::vector<DeltaTriplet> triplets;
  friend bool operator==(const DeltaSequence&, const DeltaSequence&) = default;
};

/// Mean of the samples; the left-to-right sort key.
Point stroke_mean(const SampledStroke& s);

/// Orients a stroke to start at its left-most endpoint (tie: upper one).
/// Closed strokes keep their start.
SampledStroke orient(SampledStroke s);

/// Stable sort by (mean x, mean y, input index) after orienting each stroke.
/// Throws ContractViolation on an empty stroke.
OnlineSequence order_strokes(std::vector<SampledStroke> strokes);

/// Displacements from the previous sample (the first one from `origin`, by
/// default the first sample itself). Deltas are chosen so that summing them
/// from the origin in double precision reproduces every sample bit for bit
/// whenever some double delta can (always for coordinates on a common dyadic
/// grid, e.g. pixel positions). Otherwise each reconstructed sample is within
/// one ulp of the larger of it and its predecessor; errors do not accumulate.
DeltaSequence to_deltas(const OnlineSequence& seq, std::optional<Point> origin = std::nullopt);

/// Inverse of to_deltas. Fallback flags are not carried by deltas.
OnlineSequence from_deltas(const DeltaSequence& deltas);

}  // namespace strokeforge
