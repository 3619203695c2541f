#include "gqkit/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace gqkit {

Graph Graph::from_edges(int vertices, const std::vector<std::pair<int, int>>& edges) {
  Graph g(vertices);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertices || v >= vertices) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loops are not supported");
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& a : g.adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return g;
}

Graph Graph::cycle(int vertices) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < vertices; ++i) edges.emplace_back(i, (i + 1) % vertices);
  return from_edges(vertices, edges);
}

bool Graph::has_edge(int u, int v) const { return std::binary_search(adj[u].begin(), adj[u].end(), v); }

long long Graph::edge_count() const {
  long long total = 0;
  for (const auto& a : adj) total += static_cast<long long>(a.size());
  return total / 2;
}

GraphMetrics graph_metrics(const Graph& g) {
  GraphMetrics m;
  std::set<int> degrees;
  for (int v = 0; v < g.n; ++v) degrees.insert(g.degree(v));
  m.valencies.assign(degrees.begin(), degrees.end());
  if (g.n == 0) return m;

  m.connected = true;
  int diameter = 0;
  int girth = -1;
  std::vector<int> dist(g.n), parent(g.n);
  std::vector<int> queue(g.n);
  for (int root = 0; root < g.n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    int head = 0, tail = 0;
    queue[tail++] = root;
    while (head < tail) {
      const int u = queue[head++];
      for (int w : g.adj[u]) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue[tail++] = w;
        } else if (w != parent[u]) {
          // Non-tree edge closes a closed walk of this length through the root;
          // the minimum over all roots is the girth.
          const int len = dist[u] + dist[w] + 1;
          if (girth < 0 || len < girth) girth = len;
        }
      }
    }
    if (tail < g.n) m.connected = false;
    for (int v = 0; v < g.n; ++v) diameter = std::max(diameter, dist[v]);
  }
  m.diameter = m.connected ? diameter : -1;
  m.girth = girth;
  return m;
}

}  // namespace gqkit
