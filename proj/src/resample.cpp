#include "strokeforge/resample.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

namespace strokeforge {

namespace {

void require_positive(double v, const char* name) {
  if (!std::isfinite(v) || v <= 0.0) throw std::invalid_argument(std::string(name) + " must be finite and > 0");
}

std::vector<double> cumulative_lengths(const std::vector<Point>& pts) {
  std::vector<double> cum(pts.size(), 0.0);
  for (std::size_t i = 1; i < pts.size(); ++i) cum[i] = cum[i - 1] + distance(pts[i - 1], pts[i]);
  return cum;
}

// Samples the polyline at increasing arc-length positions.
class ArcWalker {
 public:
  explicit ArcWalker(const std::vector<Point>& pts) : pts_(pts), cum_(cumulative_lengths(pts)) {}

  double length() const { return cum_.back(); }

  Point at(double s) {
    while (seg_ + 2 < pts_.size() && cum_[seg_ + 1] < s) ++seg_;
    const double len = cum_[seg_ + 1] - cum_[seg_];
    const double f = len > 0.0 ? std::clamp((s - cum_[seg_]) / len, 0.0, 1.0) : 0.0;
    return pts_[seg_] + (pts_[seg_ + 1] - pts_[seg_]) * f;
  }

 private:
  const std::vector<Point>& pts_;
  std::vector<double> cum_;
  std::size_t seg_ = 0;
};

}  // namespace

ResampleParams ResampleParams::make(double max_accel, std::optional<double> spacing, std::optional<double> reach) {
  require_positive(max_accel, "max acceleration");
  ResampleParams p;
  p.max_accel = max_accel;
  p.presample_spacing = spacing.value_or(max_accel / 3.0);
  // With both defaults the threshold is exactly a, not 3 * (a / 3) rounded.
  p.reach_threshold = reach.value_or(spacing ? 3.0 * *spacing : max_accel);
  p.validate();
  return p;
}

void ResampleParams::validate() const {
  require_positive(max_accel, "max acceleration");
  require_positive(presample_spacing, "presample spacing");
  require_positive(reach_threshold, "reach threshold");
}

double arc_length(const std::vector<Point>& points) {
  double total = 0.0;
  for (std::size_t i = 1; i < points.size(); ++i) total += distance(points[i - 1], points[i]);
  return total;
}

Stroke presample_constant(const Stroke& s, double spacing) {
  require_positive(spacing, "presample spacing");
  if (s.points.empty()) throw std::invalid_argument("cannot presample an empty stroke");
  if (s.points.size() == 1) return s;

  ArcWalker walker(s.points);
  const double total = walker.length();
  if (total == 0.0) return Stroke{{s.points.front()}};

  const auto intervals = static_cast<std::size_t>(std::ceil(total / spacing));
  const double step = total / static_cast<double>(intervals);
  Stroke out;
  out.points.reserve(intervals + 1);
  out.points.push_back(s.points.front());
  for (std::size_t k = 1; k < intervals; ++k) out.points.push_back(walker.at(static_cast<double>(k) * step));
  out.points.push_back(s.points.back());
  return out;
}

bool reachable(const std::vector<Point>& points, std::size_t from, std::size_t to, double threshold) {
  // Endpoints lie on their own line; only the points strictly between can deviate.
  for (std::size_t k = from + 1; k < to; ++k)
    if (!(distance_to_line(points[k], points[from], points[to]) < threshold)) return false;
  return threshold > 0.0;
}

ReachMatrix reachability(const Stroke& s, double threshold) {
  const std::size_t n = s.points.size();
  ReachMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) m.set(i, j, reachable(s.points, i, j, threshold));
  return m;
}

SampledStroke max_accel_resample(const Stroke& s, const ResampleParams& params) {
  params.validate();
  if (s.points.empty()) throw std::invalid_argument("cannot resample an empty stroke");

  const std::vector<Point> pts = presample_constant(s, params.presample_spacing).points;
  const std::size_t n = pts.size();
  if (n == 1) return {pts, false};

  const double a = params.max_accel;
  constexpr std::size_t kStart = std::numeric_limits<std::size_t>::max();
  constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

  struct Entry {
    std::size_t steps = kUnreached;
    std::size_t from_source = kStart;  // predecessor state is (source, from_source)
  };
  // states[j] maps source index i to the best path reaching j from i, i.e. with
  // incoming velocity pts[j] - pts[i]. Node 0 holds the single rest state.
  std::vector<std::map<std::size_t, Entry>> states(n);
  states[0][kStart] = Entry{0, kStart};

  std::vector<std::vector<std::int8_t>> reach_cache(n);
  auto is_reachable = [&](std::size_t i, std::size_t j) {
    auto& row = reach_cache[i];
    if (row.empty()) row.assign(n, -1);
    if (row[j] < 0) row[j] = reachable(pts, i, j, params.reach_threshold) ? 1 : 0;
    return row[j] == 1;
  };

  for (std::size_t i = 0; i + 1 < n; ++i) {
    // Map iteration is ascending in source index with kStart last; node 0 has only kStart.
    for (const auto& [source, entry] : states[i]) {
      const Point v = source == kStart ? Point{} : pts[i] - pts[source];
      const double reach_radius = norm(v) + a;
      for (std::size_t j = i + 1; j < n; ++j) {
        const Point step = pts[j] - pts[i];
        if (!(norm(step) < reach_radius)) continue;
        if (!(norm(step - v) < a)) continue;
        if (!is_reachable(i, j)) continue;
        Entry& target = states[j][i];
        if (entry.steps + 1 < target.steps) target = Entry{entry.steps + 1, source};
      }
    }
  }

  // The pen halts after the last sample: |0 - v_last| < a.
  std::size_t best_source = kUnreached;
  std::size_t best_steps = kUnreached;
  for (const auto& [source, entry] : states[n - 1]) {
    if (!(norm(pts[n - 1] - pts[source]) < a)) continue;
    if (entry.steps < best_steps) {
      best_steps = entry.steps;
      best_source = source;
    }
  }
  if (best_source == kUnreached) return {pts, true};

  std::vector<Point> samples;
  std::size_t node = n - 1;
  std::size_t source = best_source;
  while (true) {
    samples.push_back(pts[node]);
    if (source == kStart) break;
    const std::size_t prev_source = states[node].at(source).from_source;
    node = source;
    source = prev_source;
  }
  std::reverse(samples.begin(), samples.end());
  return {std::move(samples), false};
}

SampledStroke constant_velocity_resample(const Stroke& s, double speed) {
  require_positive(speed, "speed");
  if (s.points.empty()) throw std::invalid_argument("cannot resample an empty stroke");
  if (s.points.size() == 1) return {s.points, false};

  ArcWalker walker(s.points);
  const double total = walker.length();
  const double eps = 1e-9 * std::max(1.0, total);

  SampledStroke out;
  out.samples.push_back(s.points.front());
  for (std::size_t k = 1;; ++k) {
    const double at = static_cast<double>(k) * speed;
    if (at >= total - eps) break;
    out.samples.push_back(walker.at(at));
  }
  out.samples.push_back(s.points.back());
  return out;
}

}  // namespace strokeforge
