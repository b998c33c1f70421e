#include "strokeforge/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>

namespace strokeforge {

namespace {

void plot(BinaryImage& img, std::int64_t x, std::int64_t y) {
  if (x < 0 || y < 0 || x >= img.width() || y >= img.height()) return;
  img.set(static_cast<int>(x), static_cast<int>(y), true);
}

// Liang-Barsky clip of a -> b against [lo_x, hi_x] x [lo_y, hi_y].
std::optional<std::pair<Point, Point>> clip(Point a, Point b, double lo_x, double hi_x, double lo_y, double hi_y) {
  double t0 = 0.0;
  double t1 = 1.0;
  const Point d = b - a;
  const double p[4] = {-d.x, d.x, -d.y, d.y};
  const double q[4] = {a.x - lo_x, hi_x - a.x, a.y - lo_y, hi_y - a.y};
  for (int k = 0; k < 4; ++k) {
    if (p[k] == 0.0) {
      if (q[k] < 0.0) return std::nullopt;
      continue;
    }
    const double r = q[k] / p[k];
    if (p[k] < 0.0) t0 = std::max(t0, r);
    else t1 = std::min(t1, r);
  }
  if (t0 > t1) return std::nullopt;
  return std::make_pair(t0 > 0.0 ? a + d * t0 : a, t1 < 1.0 ? a + d * t1 : b);
}

// Rounded endpoints beyond this are clipped first instead of walked.
constexpr double kWalkLimit = 1 << 20;

void draw_segment(BinaryImage& img, Point a, Point b) {
  if (!std::isfinite(a.x) || !std::isfinite(a.y) || !std::isfinite(b.x) || !std::isfinite(b.y)) return;
  const auto near = [](Point p) { return std::abs(p.x) <= kWalkLimit && std::abs(p.y) <= kWalkLimit; };
  if (!near(a) || !near(b)) {
    // One pixel of margin so that rounding at the border stays close to the unclipped line.
    const auto clipped = clip(a, b, -1.0, img.width(), -1.0, img.height());
    if (!clipped) return;
    a = clipped->first;
    b = clipped->second;
  }

  std::int64_t x0 = std::llround(a.x);
  std::int64_t y0 = std::llround(a.y);
  const std::int64_t x1 = std::llround(b.x);
  const std::int64_t y1 = std::llround(b.y);

  const std::int64_t dx = std::llabs(x1 - x0);
  const std::int64_t dy = -std::llabs(y1 - y0);
  const std::int64_t sx = x0 < x1 ? 1 : -1;
  const std::int64_t sy = y0 < y1 ? 1 : -1;
  std::int64_t err = dx + dy;
  while (true) {
    plot(img, x0, y0);
    if (x0 == x1 && y0 == y1) break;
    const std::int64_t e2 = 2 * err;
    if (e2 >= dy) {
      err += dy;
      x0 += sx;
    }
    if (e2 <= dx) {
      err += dx;
      y0 += sy;
    }
  }
}

}  // namespace

BinaryImage render_online(const OnlineSequence& seq, int width, int height) {
  BinaryImage img(width, height);
  for (const auto& stroke : seq.strokes) {
    const auto& s = stroke.samples;
    if (s.size() == 1) draw_segment(img, s[0], s[0]);
    for (std::size_t k = 1; k < s.size(); ++k) draw_segment(img, s[k - 1], s[k]);
  }
  return img;
}

namespace {

constexpr double kFar = 1e20;

// Lower envelope of parabolas (Felzenszwalb & Huttenlocher), in place.
void transform_1d(std::vector<double>& f) {
  const std::size_t n = f.size();
  std::vector<double> d(n);
  std::vector<std::size_t> v(n);
  std::vector<double> z(n + 1);
  std::size_t k = 0;
  v[0] = 0;
  z[0] = -kFar;
  z[1] = kFar;
  for (std::size_t q = 1; q < n; ++q) {
    auto intersect = [&](std::size_t p) {
      const double qd = static_cast<double>(q);
      const double pd = static_cast<double>(p);
      return ((f[q] + qd * qd) - (f[p] + pd * pd)) / (2.0 * qd - 2.0 * pd);
    };
    double s = intersect(v[k]);
    while (s <= z[k]) {
      --k;
      s = intersect(v[k]);
    }
    ++k;
    v[k] = q;
    z[k] = s;
    z[k + 1] = kFar;
  }
  k = 0;
  for (std::size_t q = 0; q < n; ++q) {
    while (z[k + 1] < static_cast<double>(q)) ++k;
    const double diff = static_cast<double>(q) - static_cast<double>(v[k]);
    d[q] = diff * diff + f[v[k]];
  }
  f = std::move(d);
}

}  // namespace

std::vector<double> squared_distance_transform(const BinaryImage& img) {
  if (img.empty()) throw EmptyForegroundError("distance transform of an empty mask");
  const auto w = static_cast<std::size_t>(img.width());
  const auto h = static_cast<std::size_t>(img.height());
  std::vector<double> grid(w * h);
  for (std::size_t y = 0; y < h; ++y)
    for (std::size_t x = 0; x < w; ++x)
      grid[y * w + x] = img.at(static_cast<int>(x), static_cast<int>(y)) ? 0.0 : kFar;

  std::vector<double> line(h);
  for (std::size_t x = 0; x < w; ++x) {
    for (std::size_t y = 0; y < h; ++y) line[y] = grid[y * w + x];
    transform_1d(line);
    for (std::size_t y = 0; y < h; ++y) grid[y * w + x] = line[y];
  }
  line.resize(w);
  for (std::size_t y = 0; y < h; ++y) {
    std::copy_n(grid.begin() + static_cast<std::ptrdiff_t>(y * w), w, line.begin());
    transform_1d(line);
    std::copy_n(line.begin(), w, grid.begin() + static_cast<std::ptrdiff_t>(y * w));
  }
  return grid;
}

namespace {

std::pair<double, double> directed(const BinaryImage& from, const std::vector<double>& to_dt) {
  double sum = 0.0;
  double worst = 0.0;
  std::size_t count = 0;
  for (int y = 0; y < from.height(); ++y) {
    for (int x = 0; x < from.width(); ++x) {
      if (!from.at(x, y)) continue;
      const double d = std::sqrt(to_dt[static_cast<std::size_t>(y) * static_cast<std::size_t>(from.width()) +
                                       static_cast<std::size_t>(x)]);
      sum += d;
      worst = std::max(worst, d);
      ++count;
    }
  }
  return {sum / static_cast<double>(count), worst};
}

}  // namespace

ChamferDistances chamfer(const BinaryImage& a, const BinaryImage& b) {
  if (a.width() != b.width() || a.height() != b.height())
    throw std::invalid_argument("chamfer requires images of equal size");
  if (a.empty() || b.empty()) throw EmptyForegroundError("chamfer requires foreground in both images");

  const auto dt_a = squared_distance_transform(a);
  const auto dt_b = squared_distance_transform(b);
  const auto [mean_ab, max_ab] = directed(a, dt_b);
  const auto [mean_ba, max_ba] = directed(b, dt_a);
  return {mean_ab, mean_ba, max_ab, max_ba};
}

}  // namespace strokeforge
