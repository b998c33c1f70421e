#include "strokeforge/thinning.hpp"

#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

namespace strokeforge {

namespace {

// Neighbours P2..P9, clockwise starting north.
constexpr std::array<std::pair<int, int>, 8> kRing = {{
    {0, -1}, {1, -1}, {1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1},
}};

// One Zhang-Suen subiteration; returns the number of deleted pixels.
std::size_t subiteration(BinaryImage& img, bool first_pass) {
  std::vector<std::pair<int, int>> doomed;
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      if (!img.at(x, y)) continue;

      std::array<int, 8> p{};
      int count = 0;
      for (std::size_t k = 0; k < kRing.size(); ++k) {
        p[k] = img.at_or_background(x + kRing[k].first, y + kRing[k].second) ? 1 : 0;
        count += p[k];
      }
      if (count < 2 || count > 6) continue;

      int transitions = 0;
      for (std::size_t k = 0; k < 8; ++k)
        if (p[k] == 0 && p[(k + 1) % 8] == 1) ++transitions;
      if (transitions != 1) continue;

      // p[0]=P2 (N), p[2]=P4 (E), p[4]=P6 (S), p[6]=P8 (W)
      const bool keep = first_pass ? (p[0] * p[2] * p[4] != 0 || p[2] * p[4] * p[6] != 0)
                                   : (p[0] * p[2] * p[6] != 0 || p[0] * p[4] * p[6] != 0);
      if (!keep) doomed.emplace_back(x, y);
    }
  }
  for (auto [x, y] : doomed) img.set(x, y, false);
  return doomed.size();
}

// Yokoi 8-connectivity number; 1 means deleting the pixel keeps local topology.
int connectivity_number(const BinaryImage& img, int x, int y) {
  // E, NE, N, NW, W, SW, S, SE, counter-clockwise.
  constexpr std::array<std::pair<int, int>, 8> kCcw = {{
      {1, 0}, {1, -1}, {0, -1}, {-1, -1}, {-1, 0}, {-1, 1}, {0, 1}, {1, 1},
  }};
  std::array<int, 8> bg{};
  for (std::size_t k = 0; k < 8; ++k) bg[k] = img.at_or_background(x + kCcw[k].first, y + kCcw[k].second) ? 0 : 1;
  int n = 0;
  for (std::size_t k = 0; k < 8; k += 2) n += bg[k] - bg[k] * bg[(k + 1) % 8] * bg[(k + 2) % 8];
  return n;
}

bool full_block_at(const BinaryImage& img, int x, int y) {
  return img.at_or_background(x, y) && img.at_or_background(x + 1, y) && img.at_or_background(x, y + 1) &&
         img.at_or_background(x + 1, y + 1);
}

// Zhang-Suen leaves 2x2 blocks where diagonal strokes cross. Removes block
// pixels that are simple, one at a time in row-major order.
std::size_t clear_blocks(BinaryImage& img) {
  std::size_t deleted = 0;
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      if (!img.at(x, y)) continue;
      const bool in_block = full_block_at(img, x - 1, y - 1) || full_block_at(img, x, y - 1) ||
                            full_block_at(img, x - 1, y) || full_block_at(img, x, y);
      if (in_block && connectivity_number(img, x, y) == 1) {
        img.set(x, y, false);
        ++deleted;
      }
    }
  }
  return deleted;
}

}  // namespace

BinaryImage thin(const BinaryImage& img) {
  BinaryImage out = img;
  const std::size_t cap = static_cast<std::size_t>(img.width()) * static_cast<std::size_t>(img.height());
  for (std::size_t pass = 0;; ++pass) {
    if (pass > cap) throw std::logic_error("thinning failed to converge");
    std::size_t deleted = subiteration(out, true) + subiteration(out, false);
    if (deleted == 0) deleted = clear_blocks(out);
    if (deleted == 0) break;
  }
  return out;
}

BinaryImage skeletonize(const GrayImage& img, const BinarizeMethod& method) { return thin(binarize(img, method)); }

}  // namespace strokeforge
