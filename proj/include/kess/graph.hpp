#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kess {

using Vertex = int;

/// Sorted, duplicate-free list of vertex ids of some host graph.
using VertexSet = std::vector<Vertex>;

/// Undirected edge, normalized so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  friend auto operator<=>(const Edge &, const Edge &) = default;
  friend bool operator==(const Edge &, const Edge &) = default;
};

class GraphError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Equality is (order, edge set) equality. Adjacency lists are kept sorted
/// so that every traversal visits vertices in ascending id.
class Graph {
public:
  Graph() = default;

  /// Builds a graph from an arbitrary edge list. Duplicates collapse;
  /// self-loops and out-of-range endpoints throw GraphError.
  Graph(int n, std::span<const std::pair<int, int>> edge_list) : n_(n) {
    if (n < 0)
      throw GraphError("negative vertex count " + std::to_string(n));
    edges_.reserve(edge_list.size());
    for (auto [a, b] : edge_list) {
      const std::string pair =
          "(" + std::to_string(a) + "," + std::to_string(b) + ")";
      if (a == b)
        throw GraphError("self-loop " + pair);
      if (a < 0 || b < 0 || a >= n || b >= n)
        throw GraphError("endpoint out of range in " + pair + " for n=" +
                         std::to_string(n));
      edges_.emplace_back(a, b);
    }
    finish();
  }

  Graph(int n, std::initializer_list<std::pair<int, int>> edge_list)
      : Graph(n, std::span<const std::pair<int, int>>(edge_list.begin(),
                                                      edge_list.size())) {}

  /// Trusted constructor for already-validated edges (any order, no loops).
  static Graph from_edges(int n, std::vector<Edge> edges) {
    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.finish();
    return g;
  }

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge> &edges() const { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

  bool adjacent(Vertex a, Vertex b) const {
    const auto &row = adj_[a];
    return std::binary_search(row.begin(), row.end(), b);
  }

  bool contains(Vertex v) const { return v >= 0 && v < n_; }

  friend bool operator==(const Graph &a, const Graph &b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

private:
  void finish() {
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    adj_.assign(static_cast<std::size_t>(n_), {});
    for (const Edge &e : edges_) {
      adj_[e.u].push_back(e.v);
      adj_[e.v].push_back(e.u);
    }
    for (auto &row : adj_)
      std::sort(row.begin(), row.end());
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

inline Graph build_graph(int n, std::span<const std::pair<int, int>> edges) {
  return Graph(n, edges);
}

inline Graph build_graph(int n,
                         std::initializer_list<std::pair<int, int>> edges) {
  return Graph(n, edges);
}

/// Subgraph together with the map from its ids back to the host's ids.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_original;
};

inline InducedSubgraph induced_subgraph(const Graph &g, const VertexSet &keep) {
  std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i)
    local[keep[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const Edge &e : g.edges())
    if (local[e.u] >= 0 && local[e.v] >= 0)
      edges.emplace_back(local[e.u], local[e.v]);
  return {Graph::from_edges(static_cast<int>(keep.size()), std::move(edges)),
          keep};
}

/// All-pairs shortest path lengths; unreachable pairs have no value.
class DistanceMatrix {
public:
  static constexpr int kUnreachable = -1;

  explicit DistanceMatrix(int n)
      : n_(n), d_(static_cast<std::size_t>(n) * n, kUnreachable) {}

  int order() const { return n_; }

  std::optional<int> at(Vertex u, Vertex v) const {
    int d = d_[index(u, v)];
    if (d == kUnreachable)
      return std::nullopt;
    return d;
  }

  bool reachable(Vertex u, Vertex v) const {
    return d_[index(u, v)] != kUnreachable;
  }

  /// True when u and v are connected by a path of length at most k.
  bool within(Vertex u, Vertex v, int k) const {
    int d = d_[index(u, v)];
    return d != kUnreachable && d <= k;
  }

  void set(Vertex u, Vertex v, int d) { d_[index(u, v)] = d; }

private:
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * n_ + v;
  }

  int n_;
  std::vector<int> d_;
};

inline std::vector<int> bfs_distances(const Graph &g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()),
                        DistanceMatrix::kUnreachable);
  std::queue<Vertex> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    Vertex u = frontier.front();
    frontier.pop();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == DistanceMatrix::kUnreachable) {
        dist[w] = dist[u] + 1;
        frontier.push(w);
      }
    }
  }
  return dist;
}

inline DistanceMatrix distances(const Graph &g) {
  DistanceMatrix m(g.order());
  for (Vertex s = 0; s < g.order(); ++s) {
    auto row = bfs_distances(g, s);
    for (Vertex t = 0; t < g.order(); ++t)
      m.set(s, t, row[t]);
  }
  return m;
}

/// Second power: joins every pair at distance one or two. Pairs in different
/// components stay non-adjacent.
inline Graph square(const Graph &g) {
  std::vector<Edge> edges(g.edges());
  for (Vertex mid = 0; mid < g.order(); ++mid) {
    auto nb = g.neighbors(mid);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        edges.emplace_back(nb[i], nb[j]);
  }
  return Graph::from_edges(g.order(), std::move(edges));
}

inline VertexSet pendant_vertices(const Graph &g) {
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 1)
      out.push_back(v);
  return out;
}

inline VertexSet isolated_vertices(const Graph &g) {
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0)
      out.push_back(v);
  return out;
}

/// Length of a shortest cycle, or the explicit acyclic variant for forests.
class Girth {
public:
  static Girth acyclic() { return Girth(); }
  static Girth cycle(int length) { return Girth(length); }

  bool is_acyclic() const { return !length_.has_value(); }
  int length() const { return length_.value(); }

  /// A forest has girth at least k for every k.
  bool at_least(int k) const { return is_acyclic() || *length_ >= k; }

  friend bool operator==(const Girth &, const Girth &) = default;

private:
  Girth() = default;
  explicit Girth(int length) : length_(length) {}

  std::optional<int> length_;
};

inline Girth girth(const Graph &g) {
  int best = -1;
  const int n = g.order();
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::queue<Vertex> frontier;
    dist[root] = 0;
    frontier.push(root);
    while (!frontier.empty()) {
      Vertex u = frontier.front();
      frontier.pop();
      if (best >= 0 && 2 * dist[u] >= best)
        break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          frontier.push(w);
        } else if (parent[u] != w) {
          int len = dist[u] + dist[w] + 1;
          if (best < 0 || len < best)
            best = len;
        }
      }
    }
  }
  return best < 0 ? Girth::acyclic() : Girth::cycle(best);
}

/// Connected components ordered by their smallest vertex id.
inline std::vector<InducedSubgraph> components(const Graph &g) {
  std::vector<InducedSubgraph> out;
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s])
      continue;
    VertexSet members;
    std::vector<Vertex> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      members.push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(induced_subgraph(g, members));
  }
  return out;
}

inline bool is_connected(const Graph &g) {
  if (g.order() == 0)
    return true;
  auto d = bfs_distances(g, 0);
  return std::none_of(d.begin(), d.end(),
                      [](int x) { return x == DistanceMatrix::kUnreachable; });
}

inline bool is_complete(const Graph &g) {
  const auto n = static_cast<std::size_t>(g.order());
  return g.size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

inline bool is_forest(const Graph &g) { return girth(g).is_acyclic(); }

inline bool is_tree(const Graph &g) {
  return g.order() >= 1 && is_connected(g) &&
         g.size() == static_cast<std::size_t>(g.order() - 1);
}

inline VertexSet closed_neighborhood(const Graph &g, Vertex v) {
  VertexSet out(g.neighbors(v).begin(), g.neighbors(v).end());
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

/// G - N[v], relabeled to 0..n'-1.
inline InducedSubgraph delete_closed_neighborhood(const Graph &g, Vertex v) {
  if (!g.contains(v))
    throw GraphError("invalid vertex id " + std::to_string(v) + " for n=" +
                     std::to_string(g.order()));
  auto closed = closed_neighborhood(g, v);
  VertexSet keep;
  for (Vertex u = 0; u < g.order(); ++u)
    if (!std::binary_search(closed.begin(), closed.end(), u))
      keep.push_back(u);
  return induced_subgraph(g, keep);
}

inline InducedSubgraph delete_vertex(const Graph &g, Vertex v) {
  if (!g.contains(v))
    throw GraphError("invalid vertex id " + std::to_string(v));
  VertexSet keep;
  for (Vertex u = 0; u < g.order(); ++u)
    if (u != v)
      keep.push_back(u);
  return induced_subgraph(g, keep);
}

inline bool is_cycle_of_length(const Graph &g, int k) {
  if (g.order() != k || k < 3 || !is_connected(g))
    return false;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) != 2)
      return false;
  return true;
}

inline bool is_stable_in(const Graph &g, const VertexSet &s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j]))
        return false;
  return true;
}

inline bool is_clique_in(const Graph &g, const VertexSet &s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.adjacent(s[i], s[j]))
        return false;
  return true;
}

// Named families used throughout tests and generators.
namespace named {

inline Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i)
    e.emplace_back(i, i + 1);
  return Graph::from_edges(n, std::move(e));
}

inline Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, std::move(e));
}

inline Graph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      e.emplace_back(i, j);
  return Graph::from_edges(n, std::move(e));
}

inline Graph empty(int n) { return Graph::from_edges(n, {}); }

/// K_{1,leaves} with center 0.
inline Graph star(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i)
    e.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, std::move(e));
}

/// Triangle 0-1-2 with pendant vertex 3 attached to 0.
inline Graph triangle_with_pendant() {
  return Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
}

/// Disjoint union; the second graph's ids are shifted by a.order().
inline Graph disjoint_union(const Graph &a, const Graph &b) {
  std::vector<Edge> e(a.edges());
  for (const Edge &x : b.edges())
    e.emplace_back(x.u + a.order(), x.v + a.order());
  return Graph::from_edges(a.order() + b.order(), std::move(e));
}

/// Attaches one new pendant vertex to every vertex of g.
inline Graph corona(const Graph &g) {
  std::vector<Edge> e(g.edges());
  for (Vertex v = 0; v < g.order(); ++v)
    e.emplace_back(v, v + g.order());
  return Graph::from_edges(2 * g.order(), std::move(e));
}

} // namespace named

} // namespace kess
