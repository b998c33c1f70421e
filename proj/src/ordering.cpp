#include "strokeforge/ordering.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace strokeforge {

Point stroke_mean(const SampledStroke& s) {
  Point sum{};
  for (Point p : s.samples) sum = sum + p;
  return sum * (1.0 / static_cast<double>(s.samples.size()));
}

SampledStroke orient(SampledStroke s) {
  if (s.samples.size() < 2 || s.samples.front() == s.samples.back()) return s;
  const Point a = s.samples.front();
  const Point b = s.samples.back();
  if (b.x < a.x || (b.x == a.x && b.y < a.y)) std::reverse(s.samples.begin(), s.samples.end());
  return s;
}

OnlineSequence order_strokes(std::vector<SampledStroke> strokes) {
  for (const auto& s : strokes)
    if (s.samples.empty()) throw ContractViolation("order_strokes received an empty stroke");

  std::vector<Point> means;
  means.reserve(strokes.size());
  for (const auto& s : strokes) means.push_back(stroke_mean(s));

  std::vector<std::size_t> order(strokes.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
    if (means[l].x != means[r].x) return means[l].x < means[r].x;
    return means[l].y < means[r].y;
  });

  OnlineSequence out;
  out.strokes.reserve(strokes.size());
  for (std::size_t i : order) out.strokes.push_back(orient(std::move(strokes[i])));
  return out;
}

namespace {

// Smallest-magnitude adjustment of `to - from` such that from + delta == to in
// double arithmetic, when one exists nearby.
double exact_delta(double from, double to) {
  double delta = to - from;
  for (int tries = 0; tries < 64 && from + delta != to; ++tries) {
    const double towards = (from + delta < to) ? INFINITY : -INFINITY;
    delta = std::nextafter(delta, towards);
  }
  return delta;
}

}  // namespace

DeltaSequence to_deltas(const OnlineSequence& seq, std::optional<Point> origin) {
  DeltaSequence out;
  if (seq.strokes.empty()) {
    out.origin = origin.value_or(Point{});
    return out;
  }
  out.origin = origin.value_or(seq.strokes.front().samples.front());

  Point cursor = out.origin;
  for (const auto& stroke : seq.strokes) {
    for (std::size_t k = 0; k < stroke.samples.size(); ++k) {
      const Point p = stroke.samples[k];
      DeltaTriplet t{exact_delta(cursor.x, p.x), exact_delta(cursor.y, p.y), k + 1 == stroke.samples.size()};
      cursor = {cursor.x + t.dx, cursor.y + t.dy};
      out.triplets.push_back(t);
    }
  }
  return out;
}

OnlineSequence from_deltas(const DeltaSequence& deltas) {
  OnlineSequence out;
  Point cursor = deltas.origin;
  SampledStroke current;
  for (const auto& t : deltas.triplets) {
    cursor = {cursor.x + t.dx, cursor.y + t.dy};
    current.samples.push_back(cursor);
    if (t.pen_lift) {
      out.strokes.push_back(std::move(current));
      current = {};
    }
  }
  // A trailing stroke without a pen lift is still a stroke.
  if (!current.samples.empty()) out.strokes.push_back(std::move(current));
  return out;
}

}  // namespace strokeforge
