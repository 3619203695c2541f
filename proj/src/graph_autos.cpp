#include "gqkit/permgroup.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>

namespace gqkit {

namespace {

// Ordered partition stored as a vertex array split into position ranges.
struct Partition {
  std::vector<int> lab;       // position -> vertex
  std::vector<int> pos;       // vertex -> position
  std::vector<int> cell_of;   // vertex -> start of its cell
  std::vector<int> cell_end;  // start -> one past the end, valid at cell starts
  int n_cells = 0;

  bool discrete() const { return n_cells == static_cast<int>(lab.size()); }

  int first_nonsingleton() const {
    for (int s = 0; s < static_cast<int>(lab.size()); s = cell_end[s])
      if (cell_end[s] - s > 1) return s;
    return -1;
  }
};

struct Trace {
  std::uint64_t hash = 1469598103934665603ull;
  int n_cells = 0;
  bool operator==(const Trace&) const = default;
};

void mix(std::uint64_t& h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  h *= 1099511628211ull;
}

class Searcher {
public:
  Searcher(const Graph& g, long long budget) : g_(g), budget_(budget), count_(g.n, 0) {}

  Partition initial(const std::vector<std::vector<int>>& classes) {
    const int n = g_.n;
    Partition p;
    p.lab.reserve(n);
    p.pos.assign(n, -1);
    p.cell_of.assign(n, -1);
    p.cell_end.assign(n, 0);
    std::vector<char> seen(n, 0);
    for (const auto& cls : classes) {
      if (cls.empty()) continue;
      const int start = static_cast<int>(p.lab.size());
      for (int v : cls) {
        if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("color classes must partition the vertices");
        seen[v] = 1;
        p.pos[v] = static_cast<int>(p.lab.size());
        p.lab.push_back(v);
        p.cell_of[v] = start;
      }
      p.cell_end[start] = static_cast<int>(p.lab.size());
      ++p.n_cells;
    }
    if (static_cast<int>(p.lab.size()) != n) throw std::invalid_argument("color classes must partition the vertices");
    return p;
  }

  // Refines to the coarsest equitable partition below p, starting from the queued splitters.
  Trace refine(Partition& p, std::deque<int> queue) {
    if (++nodes_ > budget_) throw resource_error("automorphism search exceeded the node budget");
    const int n = g_.n;
    std::vector<char> queued(n, 0);
    for (int s : queue) queued[s] = 1;
    Trace tr;
    std::vector<int> touched_vertices;
    std::vector<int> touched_cells;
    while (!queue.empty()) {
      const int s = queue.front();
      queue.pop_front();
      queued[s] = 0;
      const int e = p.cell_end[s];
      touched_vertices.clear();
      for (int i = s; i < e; ++i) {
        for (int w : g_.adj[p.lab[i]]) {
          if (count_[w]++ == 0) touched_vertices.push_back(w);
        }
      }
      touched_cells.clear();
      for (int w : touched_vertices) touched_cells.push_back(p.cell_of[w]);
      std::sort(touched_cells.begin(), touched_cells.end());
      touched_cells.erase(std::unique(touched_cells.begin(), touched_cells.end()), touched_cells.end());
      mix(tr.hash, static_cast<std::uint64_t>(s) * 31 + touched_cells.size());
      for (int c : touched_cells) {
        const int ce = p.cell_end[c];
        if (ce - c == 1) {
          mix(tr.hash, static_cast<std::uint64_t>(count_[p.lab[c]]));
          continue;
        }
        std::stable_sort(p.lab.begin() + c, p.lab.begin() + ce,
                         [&](int a, int b) { return count_[a] < count_[b]; });
        std::vector<int> starts{c};
        for (int i = c + 1; i < ce; ++i)
          if (count_[p.lab[i]] != count_[p.lab[i - 1]]) starts.push_back(i);
        for (int i = c; i < ce; ++i) p.pos[p.lab[i]] = i;
        mix(tr.hash, static_cast<std::uint64_t>(c) << 20 | starts.size());
        for (std::size_t k = 0; k < starts.size(); ++k) {
          const int a = starts[k];
          const int b = k + 1 < starts.size() ? starts[k + 1] : ce;
          mix(tr.hash, static_cast<std::uint64_t>(count_[p.lab[a]]) << 32 | static_cast<std::uint64_t>(b - a));
        }
        if (starts.size() == 1) continue;
        p.n_cells += static_cast<int>(starts.size()) - 1;
        for (std::size_t k = 0; k < starts.size(); ++k) {
          const int a = starts[k];
          const int b = k + 1 < starts.size() ? starts[k + 1] : ce;
          p.cell_end[a] = b;
          for (int i = a; i < b; ++i) p.cell_of[p.lab[i]] = a;
        }
        if (queued[c]) {
          for (std::size_t k = 1; k < starts.size(); ++k) {
            queue.push_back(starts[k]);
            queued[starts[k]] = 1;
          }
        } else {
          std::size_t largest = 0;
          for (std::size_t k = 1; k < starts.size(); ++k)
            if (p.cell_end[starts[k]] - starts[k] > p.cell_end[starts[largest]] - starts[largest]) largest = k;
          for (std::size_t k = 0; k < starts.size(); ++k) {
            if (k == largest) continue;
            queue.push_back(starts[k]);
            queued[starts[k]] = 1;
          }
        }
      }
      for (int w : touched_vertices) count_[w] = 0;
    }
    tr.n_cells = p.n_cells;
    mix(tr.hash, static_cast<std::uint64_t>(p.n_cells));
    return tr;
  }

  // Moves v to the front of its cell as a singleton and refines.
  Trace individualize(Partition& p, int v) {
    const int c = p.cell_of[v];
    const int e = p.cell_end[c];
    const int u = p.lab[c];
    std::swap(p.lab[c], p.lab[p.pos[v]]);
    p.pos[u] = p.pos[v];
    p.pos[v] = c;
    p.cell_end[c] = c + 1;
    p.cell_end[c + 1] = e;
    for (int i = c + 1; i < e; ++i) p.cell_of[p.lab[i]] = c + 1;
    ++p.n_cells;
    return refine(p, std::deque<int>{c});
  }

  bool is_automorphism(const std::vector<int>& gamma) const {
    for (int u = 0; u < g_.n; ++u)
      for (int v : g_.adj[u])
        if (u < v && !g_.has_edge(gamma[u], gamma[v])) return false;
    return true;
  }

  // Leaf of the first path and its per-level data.
  std::vector<Partition> path;
  std::vector<Trace> traces;
  std::vector<int> path_choice;

  // DFS below p at the given depth, looking for a leaf whose map from the first leaf is an automorphism.
  bool search_equivalent(const Partition& p, std::size_t depth, std::vector<int>& gamma) {
    if (p.discrete()) {
      const Partition& zeta = path.back();
      for (int i = 0; i < g_.n; ++i) gamma[zeta.lab[i]] = p.lab[i];
      return is_automorphism(gamma);
    }
    const int c = p.first_nonsingleton();
    for (int i = c; i < p.cell_end[c]; ++i) {
      Partition q = p;
      const Trace tr = individualize(q, p.lab[i]);
      if (depth + 1 >= traces.size() || !(tr == traces[depth + 1])) continue;
      if (search_equivalent(q, depth + 1, gamma)) return true;
    }
    return false;
  }

  long long nodes() const { return nodes_; }

private:
  const Graph& g_;
  long long budget_;
  long long nodes_ = 0;
  std::vector<int> count_;
};

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

PermGroup graph_autos(const Graph& graph, const std::vector<std::vector<int>>& color_classes, long long node_budget) {
  const int n = graph.n;
  if (n == 0) return PermGroup::trivial(0);
  Searcher s(graph, node_budget);
  Partition root = s.initial(color_classes);
  std::deque<int> all;
  for (int c = 0; c < n; c = root.cell_end[c]) all.push_back(c);
  const Trace root_trace = s.refine(root, all);

  s.path.push_back(root);
  s.traces.push_back(root_trace);
  while (!s.path.back().discrete()) {
    Partition q = s.path.back();
    const int c = q.first_nonsingleton();
    const int v = q.lab[c];
    s.path_choice.push_back(v);
    s.traces.push_back(s.individualize(q, v));
    s.path.push_back(std::move(q));
  }

  std::vector<Permutation> gens;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<int> gamma(n);
  for (int level = static_cast<int>(s.path_choice.size()) - 1; level >= 0; --level) {
    const Partition& p = s.path[level];
    const int v = s.path_choice[level];
    const int c = p.first_nonsingleton();
    for (int i = c; i < p.cell_end[c]; ++i) {
      const int w = p.lab[i];
      if (find_root(parent, w) == find_root(parent, v)) continue;
      Partition q = p;
      const Trace tr = s.individualize(q, w);
      if (!(tr == s.traces[level + 1])) continue;
      if (!s.search_equivalent(q, level + 1, gamma)) continue;
      Permutation g(gamma);
      for (int x = 0; x < n; ++x) {
        const int a = find_root(parent, x), b = find_root(parent, g(x));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
      gens.push_back(std::move(g));
    }
  }
  return PermGroup(n, std::move(gens));
}

PermGroup graph_autos(const Graph& graph, long long node_budget) {
  std::vector<int> all(graph.n);
  std::iota(all.begin(), all.end(), 0);
  return graph_autos(graph, std::vector<std::vector<int>>{all}, node_budget);
}

}  // namespace gqkit
