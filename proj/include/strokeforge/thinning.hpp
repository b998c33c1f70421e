#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "strokeforge/raster_io.hpp"

namespace strokeforge {

/// Zhang-Suen two-subiteration thinning, iterated until no pixel is deleted.
/// Once it stalls, pixels of remaining full 2x2 blocks (left where diagonal
/// strokes cross) are removed when their Yokoi connectivity number is 1, and
/// Zhang-Suen resumes. Pixels outside the image count as background.
BinaryImage thin(const BinaryImage& img);

/// Binarize then thin; the naive offline-to-skeleton mapping.
BinaryImage skeletonize(const GrayImage& img, const BinarizeMethod& method);

struct PairEntry {
  std::string source;                   // input file name
  std::string original;                 // output file name, relative to the output directory
  std::optional<std::string> skeleton;  // absent for skipped inputs
  bool ok = false;
  std::string reason;                   // decode/I/O message when skipped
};

struct PairManifest {
  std::vector<PairEntry> entries;

  std::size_t pair_count() const;
  std::size_t skipped_count() const;
};

/// For every *.png in `input_dir` (sorted by file name) writes
/// `<stem>_original.png` and `<stem>_skeleton.png` into `output_dir`, plus
/// `manifest.json`. Unreadable inputs are recorded as skipped. Files are
/// processed on up to `jobs` threads; the manifest order never depends on it.
PairManifest generate_training_pairs(const std::filesystem::path& input_dir,
                                     const std::filesystem::path& output_dir,
                                     const BinarizeMethod& method,
                                     unsigned jobs = 1);

}  // namespace strokeforge
