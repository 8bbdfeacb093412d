#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace diffnet {

using NodeId = std::int32_t;
using Component = std::vector<NodeId>;

/// Simple directed graph on nodes [0, n). Parallel edges collapse on
/// construction; self-loops are rejected. Adjacency lists are sorted.
class DirectedGraph {
 public:
  DirectedGraph() = default;
  DirectedGraph(std::size_t node_count, std::span<const std::pair<NodeId, NodeId>> edges);

  std::size_t node_count() const { return out_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const NodeId> out_neighbors(NodeId v) const { return out_[v]; }
  std::span<const NodeId> in_neighbors(NodeId v) const { return in_[v]; }
  /// Union of in- and out-neighbours (undirected simple projection).
  std::span<const NodeId> neighbors(NodeId v) const { return undirected_[v]; }

  bool has_edge(NodeId u, NodeId v) const;

 private:
  std::vector<std::vector<NodeId>> out_;
  std::vector<std::vector<NodeId>> in_;
  std::vector<std::vector<NodeId>> undirected_;
  std::size_t edge_count_ = 0;
};

// Components come back with sorted members, ordered by smallest member.

std::vector<Component> strongly_connected_components(const DirectedGraph& g);
std::vector<Component> weakly_connected_components(const DirectedGraph& g);

/// Largest of `components`; ties go to the one listed first, which for the
/// ordering above is the one holding the smallest node id.
const Component& largest_component(const std::vector<Component>& components);

/// Longest undirected shortest path inside `nodes`. Throws Invariant when
/// `nodes` does not induce a connected subgraph.
std::int64_t diameter_undirected(const DirectedGraph& g, std::span<const NodeId> nodes);

/// Mean ordered-pair undirected distance inside `nodes`; 0 for a single node.
/// Throws Invariant when `nodes` does not induce a connected subgraph.
double structural_virality(const DirectedGraph& g, std::span<const NodeId> nodes);

/// Mean local clustering over all nodes of the undirected projection.
double average_clustering(const DirectedGraph& g);

/// Largest k whose k-core (total degree in + out) is nonempty.
std::int64_t main_kcore_number(const DirectedGraph& g);

/// Core number of every node, total-degree variant.
std::vector<std::int64_t> core_numbers(const DirectedGraph& g);

/// |E| / (|V|(|V|-1)); 0 for fewer than two nodes.
double density(const DirectedGraph& g);

}  // namespace diffnet
