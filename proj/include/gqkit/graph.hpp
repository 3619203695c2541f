#pragma once

#include <utility>
#include <vector>

namespace gqkit {

/// Simple undirected graph with sorted adjacency lists.
struct Graph {
  int n = 0;
  std::vector<std::vector<int>> adj;

  Graph() = default;
  explicit Graph(int vertices) : n(vertices), adj(vertices) {}

  /// Duplicate edges are merged; loops are rejected.
  static Graph from_edges(int vertices, const std::vector<std::pair<int, int>>& edges);
  static Graph cycle(int vertices);

  bool has_edge(int u, int v) const;
  long long edge_count() const;
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
};

struct GraphMetrics {
  bool connected = false;
  /// -1 when disconnected.
  int diameter = -1;
  /// -1 when acyclic.
  int girth = -1;
  /// Distinct vertex degrees, ascending.
  std::vector<int> valencies;
};

/// Exact diameter and girth by breadth-first search from every vertex.
GraphMetrics graph_metrics(const Graph& g);

}  // namespace gqkit
