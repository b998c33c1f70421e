#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "strokeforge/geometry.hpp"
#include "strokeforge/raster_io.hpp"

namespace strokeforge {

/// Raised when a stage receives a graph that violates its precondition,
/// which means the stages were run out of order.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Undirected simple graph with positioned nodes. Node identity is the index;
/// several nodes may share a position after splitting.
class PixelGraph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  std::size_t add_node(Point p);
  /// Adds {u, v}. Self-loops are rejected, duplicates ignored.
  void add_edge(std::size_t u, std::size_t v);
  void remove_edge(std::size_t u, std::size_t v);
  bool has_edge(std::size_t u, std::size_t v) const;

  std::size_t node_count() const { return positions_.size(); }
  std::size_t edge_count() const;
  Point position(std::size_t i) const { return positions_.at(i); }
  const std::vector<Point>& positions() const { return positions_; }
  /// Sorted ascending.
  const std::vector<std::size_t>& neighbors(std::size_t i) const { return adjacency_.at(i); }
  std::size_t degree(std::size_t i) const { return adjacency_.at(i).size(); }
  std::size_t max_degree() const;
  /// All edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  /// Connected components, each sorted ascending, ordered by their smallest node.
  std::vector<std::vector<std::size_t>> components() const;

 private:
  std::vector<Point> positions_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

struct Stroke {
  std::vector<Point> points;

  /// True for strokes produced by cutting a cycle: first and last coincide.
  bool closed() const { return points.size() > 1 && points.front() == points.back(); }
  friend bool operator==(const Stroke&, const Stroke&) = default;
};

struct StrokeSet {
  std::vector<Stroke> strokes;
  friend bool operator==(const StrokeSet&, const StrokeSet&) = default;
};

/// One node per foreground pixel (row-major order), one edge per 8-adjacent pair.
PixelGraph build_graph(const BinaryImage& img);

/// Collapses pixel clusters (triangles joined through shared edges). The nodes of a
/// cluster with no neighbours outside it are replaced by one node at their mean
/// position; edges into them are rewired to that node. Cluster edges between two
/// remaining nodes that both attach to the merged node are dropped, so the
/// merged node carries the cluster's connectivity.
PixelGraph collapse_clusters(const PixelGraph& g);

/// Every node of degree k > 2 becomes k co-located copies, one per incident edge.
PixelGraph split_junctions(const PixelGraph& g);

/// Cuts every simple-cycle component at its upmost node (min y, then min x)
/// by duplicating the node and moving one of its edges to the copy.
/// Requires max degree <= 2.
PixelGraph split_cycles(const PixelGraph& g);

/// Walks every path component from its lower-index endpoint.
/// Throws ContractViolation on degree > 2 or a remaining cycle.
StrokeSet extract_strokes(const PixelGraph& g);

/// build_graph -> collapse_clusters -> split_junctions -> split_cycles -> extract_strokes
StrokeSet vectorize(const BinaryImage& img);

}  // namespace strokeforge
