#include "strokeforge/skeleton_graph.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace strokeforge {

std::size_t PixelGraph::add_node(Point p) {
  positions_.push_back(p);
  adjacency_.emplace_back();
  return positions_.size() - 1;
}

void PixelGraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= node_count() || v >= node_count()) throw std::out_of_range("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("self-loop on node " + std::to_string(u));
  auto insert_sorted = [](std::vector<std::size_t>& list, std::size_t x) {
    auto it = std::lower_bound(list.begin(), list.end(), x);
    if (it == list.end() || *it != x) list.insert(it, x);
  };
  insert_sorted(adjacency_[u], v);
  insert_sorted(adjacency_[v], u);
}

void PixelGraph::remove_edge(std::size_t u, std::size_t v) {
  auto erase_sorted = [](std::vector<std::size_t>& list, std::size_t x) {
    auto it = std::lower_bound(list.begin(), list.end(), x);
    if (it != list.end() && *it == x) list.erase(it);
  };
  erase_sorted(adjacency_.at(u), v);
  erase_sorted(adjacency_.at(v), u);
}

bool PixelGraph::has_edge(std::size_t u, std::size_t v) const {
  const auto& list = adjacency_.at(u);
  return std::binary_search(list.begin(), list.end(), v);
}

std::size_t PixelGraph::edge_count() const {
  std::size_t sum = 0;
  for (const auto& list : adjacency_) sum += list.size();
  return sum / 2;
}

std::size_t PixelGraph::max_degree() const {
  std::size_t best = 0;
  for (const auto& list : adjacency_) best = std::max(best, list.size());
  return best;
}

std::vector<PixelGraph::Edge> PixelGraph::edges() const {
  std::vector<Edge> out;
  for (std::size_t u = 0; u < node_count(); ++u)
    for (std::size_t v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::vector<std::vector<std::size_t>> PixelGraph::components() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(node_count(), false);
  for (std::size_t start = 0; start < node_count(); ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> comp;
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (std::size_t v : adjacency_[u]) {
        if (!seen[v]) {
          seen[v] = true;
          stack.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

PixelGraph build_graph(const BinaryImage& img) {
  PixelGraph g;
  std::vector<std::size_t> id(static_cast<std::size_t>(img.width()) * static_cast<std::size_t>(img.height()),
                              static_cast<std::size_t>(-1));
  auto slot = [&](int x, int y) -> std::size_t& {
    return id[static_cast<std::size_t>(y) * static_cast<std::size_t>(img.width()) + static_cast<std::size_t>(x)];
  };

  for (int y = 0; y < img.height(); ++y)
    for (int x = 0; x < img.width(); ++x)
      if (img.at(x, y)) slot(x, y) = g.add_node({static_cast<double>(x), static_cast<double>(y)});

  // Half of the 8-neighbourhood; the other half is covered from the other side.
  constexpr std::array<std::pair<int, int>, 4> kForward = {{{1, 0}, {-1, 1}, {0, 1}, {1, 1}}};
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      if (!img.at(x, y)) continue;
      for (auto [dx, dy] : kForward)
        if (img.at_or_background(x + dx, y + dy)) g.add_edge(slot(x, y), slot(x + dx, y + dy));
    }
  }
  return g;
}

namespace {

struct DisjointSet {
  std::vector<std::size_t> parent;

  explicit DisjointSet(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }
};

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

}  // namespace

PixelGraph collapse_clusters(const PixelGraph& g) {
  using Triangle = std::array<std::size_t, 3>;
  std::vector<Triangle> triangles;
  for (std::size_t u = 0; u < g.node_count(); ++u)
    for (std::size_t v : g.neighbors(u))
      if (v > u)
        for (std::size_t w : g.neighbors(v))
          if (w > v && g.has_edge(u, w)) triangles.push_back({u, v, w});
  if (triangles.empty()) return g;

  // Triangles sharing an edge belong to the same cluster.
  DisjointSet sets(triangles.size());
  std::map<PixelGraph::Edge, std::size_t> edge_triangle;
  for (std::size_t t = 0; t < triangles.size(); ++t) {
    const auto [a, b, c] = triangles[t];
    for (PixelGraph::Edge e : {PixelGraph::Edge{a, b}, PixelGraph::Edge{a, c}, PixelGraph::Edge{b, c}}) {
      auto [it, inserted] = edge_triangle.emplace(e, t);
      if (!inserted) sets.unite(it->second, t);
    }
  }

  // Clusters in order of their first triangle (roots are minimal indices).
  std::map<std::size_t, std::set<std::size_t>> cluster_nodes;
  for (std::size_t t = 0; t < triangles.size(); ++t)
    for (std::size_t n : triangles[t]) cluster_nodes[sets.find(t)].insert(n);

  std::vector<std::size_t> merged_into(g.node_count(), kNone);  // cluster slot of removed nodes
  std::vector<Point> merged_positions;
  std::map<std::size_t, std::size_t> cluster_slot;               // cluster root -> merged slot
  for (const auto& [root, nodes] : cluster_nodes) {
    std::vector<std::size_t> interior;
    for (std::size_t n : nodes) {
      if (merged_into[n] != kNone) continue;
      const auto& nb = g.neighbors(n);
      if (std::all_of(nb.begin(), nb.end(), [&](std::size_t m) { return nodes.count(m) > 0; })) interior.push_back(n);
    }
    if (interior.empty()) continue;

    Point mean{};
    for (std::size_t n : interior) mean = mean + g.position(n);
    mean = mean * (1.0 / static_cast<double>(interior.size()));

    const std::size_t slot = merged_positions.size();
    merged_positions.push_back(mean);
    cluster_slot[root] = slot;
    for (std::size_t n : interior) merged_into[n] = slot;
  }
  if (merged_positions.empty()) return g;

  // Remaining nodes keep their relative order; merged nodes follow.
  PixelGraph out;
  std::vector<std::size_t> remap(g.node_count(), kNone);
  for (std::size_t n = 0; n < g.node_count(); ++n)
    if (merged_into[n] == kNone) remap[n] = out.add_node(g.position(n));
  std::vector<std::size_t> merged_id;
  for (Point p : merged_positions) merged_id.push_back(out.add_node(p));
  for (std::size_t n = 0; n < g.node_count(); ++n)
    if (merged_into[n] != kNone) remap[n] = merged_id[merged_into[n]];

  auto touches_merged = [&](std::size_t n, std::size_t slot) {
    const auto& nb = g.neighbors(n);
    return std::any_of(nb.begin(), nb.end(), [&](std::size_t m) { return merged_into[m] == slot; });
  };

  for (const auto& [u, v] : g.edges()) {
    const std::size_t nu = remap[u];
    const std::size_t nv = remap[v];
    if (nu == nv) continue;
    if (merged_into[u] == kNone && merged_into[v] == kNone) {
      auto tri = edge_triangle.find({u, v});
      if (tri != edge_triangle.end()) {
        auto slot = cluster_slot.find(sets.find(tri->second));
        if (slot != cluster_slot.end() && touches_merged(u, slot->second) && touches_merged(v, slot->second))
          continue;
      }
    }
    out.add_edge(nu, nv);
  }
  return out;
}

PixelGraph split_junctions(const PixelGraph& g) {
  if (g.max_degree() <= 2) return g;

  PixelGraph out;
  for (std::size_t n = 0; n < g.node_count(); ++n) out.add_node(g.position(n));

  // endpoint[n][k] is the node standing in for n on its k-th incident edge.
  std::vector<std::vector<std::size_t>> endpoint(g.node_count());
  for (std::size_t n = 0; n < g.node_count(); ++n) {
    const std::size_t deg = g.degree(n);
    if (deg <= 2) {
      endpoint[n].assign(deg, n);
      continue;
    }
    endpoint[n].push_back(n);
    for (std::size_t k = 1; k < deg; ++k) endpoint[n].push_back(out.add_node(g.position(n)));
  }

  auto slot_of = [&](std::size_t n, std::size_t other) {
    const auto& nb = g.neighbors(n);
    return static_cast<std::size_t>(std::lower_bound(nb.begin(), nb.end(), other) - nb.begin());
  };
  for (const auto& [u, v] : g.edges()) out.add_edge(endpoint[u][slot_of(u, v)], endpoint[v][slot_of(v, u)]);
  return out;
}

PixelGraph split_cycles(const PixelGraph& g) {
  if (g.max_degree() > 2) throw ContractViolation("split_cycles requires max degree <= 2");

  PixelGraph out = g;
  for (const auto& comp : g.components()) {
    if (comp.size() < 3) continue;
    if (!std::all_of(comp.begin(), comp.end(), [&](std::size_t n) { return g.degree(n) == 2; })) continue;

    std::size_t top = comp.front();
    for (std::size_t n : comp) {
      const Point p = g.position(n);
      const Point best = g.position(top);
      if (p.y < best.y || (p.y == best.y && p.x < best.x)) top = n;
    }
    // The lower-index neighbour stays attached; the other edge moves to the copy.
    const std::size_t moved = g.neighbors(top)[1];
    const std::size_t copy = out.add_node(g.position(top));
    out.remove_edge(top, moved);
    out.add_edge(copy, moved);
  }
  return out;
}

StrokeSet extract_strokes(const PixelGraph& g) {
  if (g.max_degree() > 2) throw ContractViolation("extract_strokes requires max degree <= 2");

  StrokeSet out;
  for (const auto& comp : g.components()) {
    if (comp.size() == 1) {
      out.strokes.push_back({{g.position(comp.front())}});
      continue;
    }
    auto start = std::find_if(comp.begin(), comp.end(), [&](std::size_t n) { return g.degree(n) == 1; });
    if (start == comp.end()) throw ContractViolation("extract_strokes found an uncut cycle");

    Stroke stroke;
    std::size_t prev = kNone;
    std::size_t cur = *start;
    while (true) {
      const Point p = g.position(cur);
      if (stroke.points.empty() || stroke.points.back() != p) stroke.points.push_back(p);
      std::size_t next = kNone;
      for (std::size_t m : g.neighbors(cur))
        if (m != prev) next = m;
      if (next == kNone) break;
      prev = cur;
      cur = next;
    }
    out.strokes.push_back(std::move(stroke));
  }
  return out;
}

StrokeSet vectorize(const BinaryImage& img) {
  return extract_strokes(split_cycles(split_junctions(collapse_clusters(build_graph(img)))));
}

}  // namespace strokeforge
