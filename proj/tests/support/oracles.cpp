#include "oracles.hpp"

#include <cmath>
#include <deque>
#include <map>
#include <tuple>

namespace strokeforge::testing {

namespace {

double line_distance(double px, double py, double ax, double ay, double bx, double by) {
  const double ux = bx - ax;
  const double uy = by - ay;
  const double len2 = ux * ux + uy * uy;
  if (len2 == 0.0) return std::sqrt((px - ax) * (px - ax) + (py - ay) * (py - ay));
  // Foot of the perpendicular, then its distance.
  const double s = ((px - ax) * ux + (py - ay) * uy) / len2;
  const double fx = ax + s * ux;
  const double fy = ay + s * uy;
  return std::sqrt((px - fx) * (px - fx) + (py - fy) * (py - fy));
}

}  // namespace

std::optional<std::size_t> brute_force_min_steps(const std::vector<Point>& pts, double accel, double threshold) {
  const std::size_t n = pts.size();
  if (n == 1) return 0;

  auto reach = [&](std::size_t i, std::size_t j) {
    double worst = 0.0;
    for (std::size_t k = i; k <= j; ++k)
      worst = std::max(worst, line_distance(pts[k].x, pts[k].y, pts[i].x, pts[i].y, pts[j].x, pts[j].y));
    return worst < threshold;
  };

  using State = std::tuple<std::size_t, double, double>;
  std::map<State, std::size_t> dist;
  std::deque<State> queue;
  const State start{0, 0.0, 0.0};
  dist[start] = 0;
  queue.push_back(start);

  std::optional<std::size_t> best;
  while (!queue.empty()) {
    const auto [i, vx, vy] = queue.front();
    queue.pop_front();
    const std::size_t d = dist[{i, vx, vy}];
    if (i == n - 1 && std::hypot(vx, vy) < accel) {
      best = best ? std::min(*best, d) : d;
      continue;
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      const double wx = pts[j].x - pts[i].x;
      const double wy = pts[j].y - pts[i].y;
      if (!(std::hypot(wx - vx, wy - vy) < accel)) continue;
      if (!reach(i, j)) continue;
      const State next{j, wx, wy};
      if (dist.emplace(next, d + 1).second) queue.push_back(next);
    }
  }
  return best;
}

bool satisfies_accel_bound(const std::vector<Point>& s, double accel) {
  double vx = 0.0;
  double vy = 0.0;
  for (std::size_t k = 1; k < s.size(); ++k) {
    const double wx = s[k].x - s[k - 1].x;
    const double wy = s[k].y - s[k - 1].y;
    if (!(std::hypot(wx - vx, wy - vy) < accel)) return false;
    vx = wx;
    vy = wy;
  }
  return std::hypot(vx, vy) < accel;
}

BruteChamfer brute_force_chamfer(const BinaryImage& a, const BinaryImage& b) {
  auto pixels = [](const BinaryImage& img) {
    std::vector<std::pair<int, int>> out;
    for (int y = 0; y < img.height(); ++y)
      for (int x = 0; x < img.width(); ++x)
        if (img.at(x, y)) out.emplace_back(x, y);
    return out;
  };
  auto directed = [](const auto& from, const auto& to) {
    double sum = 0.0;
    double worst = 0.0;
    for (auto [x, y] : from) {
      double best = INFINITY;
      for (auto [u, v] : to) best = std::min(best, std::hypot(double(x - u), double(y - v)));
      sum += best;
      worst = std::max(worst, best);
    }
    return std::pair{sum / double(from.size()), worst};
  };
  const auto pa = pixels(a);
  const auto pb = pixels(b);
  const auto [mab, xab] = directed(pa, pb);
  const auto [mba, xba] = directed(pb, pa);
  return {mab, mba, xab, xba};
}

std::vector<std::string> naive_zhang_suen(std::vector<std::string> g) {
  const int h = static_cast<int>(g.size());
  const int w = h ? static_cast<int>(g[0].size()) : 0;
  auto ink = [&](int x, int y) { return x >= 0 && y >= 0 && x < w && y < h && g[y][x] == '#'; };

  bool changed = true;
  while (changed) {
    changed = false;
    for (int step = 0; step < 2; ++step) {
      std::vector<std::pair<int, int>> remove;
      for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
          if (!ink(x, y)) continue;
          const int p2 = ink(x, y - 1), p3 = ink(x + 1, y - 1), p4 = ink(x + 1, y), p5 = ink(x + 1, y + 1);
          const int p6 = ink(x, y + 1), p7 = ink(x - 1, y + 1), p8 = ink(x - 1, y), p9 = ink(x - 1, y - 1);
          const int b = p2 + p3 + p4 + p5 + p6 + p7 + p8 + p9;
          const int a = (!p2 && p3) + (!p3 && p4) + (!p4 && p5) + (!p5 && p6) + (!p6 && p7) + (!p7 && p8) +
                        (!p8 && p9) + (!p9 && p2);
          const bool c = step == 0 ? (p2 * p4 * p6 == 0 && p4 * p6 * p8 == 0) : (p2 * p4 * p8 == 0 && p2 * p6 * p8 == 0);
          if (b >= 2 && b <= 6 && a == 1 && c) remove.emplace_back(x, y);
        }
      for (auto [x, y] : remove) g[y][x] = '.';
      if (!remove.empty()) changed = true;
    }
  }
  for (auto& row : g)
    for (auto& c : row)
      if (c != '#') c = '.';
  return g;
}

std::array<double, 257> otsu_variance_table(const std::array<std::uint64_t, 256>& hist) {
  std::array<double, 257> table{};
  for (int t = 0; t <= 256; ++t) {
    double n0 = 0, s0 = 0, n1 = 0, s1 = 0;
    for (int v = 0; v < 256; ++v) {
      if (v < t) {
        n0 += double(hist[v]);
        s0 += double(v) * double(hist[v]);
      } else {
        n1 += double(hist[v]);
        s1 += double(v) * double(hist[v]);
      }
    }
    if (n0 == 0 || n1 == 0) {
      table[t] = -1.0;
      continue;
    }
    const double n = n0 + n1;
    const double m0 = s0 / n0;
    const double m1 = s1 / n1;
    table[t] = (n0 / n) * (n1 / n) * (m0 - m1) * (m0 - m1);
  }
  return table;
}

}  // namespace strokeforge::testing
