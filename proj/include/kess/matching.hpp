#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <vector>

#include "kess/graph.hpp"

namespace kess {

/// Set of pairwise non-incident edges of a host graph, sorted.
using Matching = std::vector<Edge>;

struct MatchingResult {
  int value = 0;
  Matching witness;
};

inline bool is_matching_in(const Graph &g, const Matching &m) {
  std::vector<bool> used(static_cast<std::size_t>(g.order()), false);
  for (const Edge &e : m) {
    if (!g.contains(e.u) || !g.contains(e.v) || !g.adjacent(e.u, e.v))
      return false;
    if (used[e.u] || used[e.v])
      return false;
    used[e.u] = used[e.v] = true;
  }
  return true;
}

namespace detail {

// Edmonds' blossom algorithm: BFS for an augmenting path from each free
// vertex, contracting odd cycles on the fly. O(n^3).
class BlossomMatcher {
public:
  explicit BlossomMatcher(const Graph &g)
      : g_(g), n_(g.order()), match_(n_, -1), parent_(n_), base_(n_),
        used_(n_), blossom_(n_) {}

  std::vector<int> run() {
    // Greedy start keeps the witness deterministic and saves BFS rounds.
    for (Vertex v = 0; v < n_; ++v) {
      if (match_[v] != -1)
        continue;
      for (Vertex w : g_.neighbors(v)) {
        if (match_[w] == -1) {
          match_[v] = w;
          match_[w] = v;
          break;
        }
      }
    }
    for (Vertex v = 0; v < n_; ++v) {
      if (match_[v] != -1)
        continue;
      Vertex end = find_path(v);
      while (end != -1) {
        Vertex pv = parent_[end];
        Vertex ppv = match_[pv];
        match_[end] = pv;
        match_[pv] = end;
        end = ppv;
      }
    }
    return match_;
  }

private:
  Vertex lca(Vertex a, Vertex b) {
    std::vector<bool> seen(n_, false);
    for (;;) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == -1)
        break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b])
        return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  Vertex find_path(Vertex root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    std::iota(base_.begin(), base_.end(), 0);
    used_[root] = true;
    std::queue<Vertex> q;
    q.push(root);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || match_[v] == to)
          continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          Vertex cur = lca(v, to);
          std::fill(blossom_.begin(), blossom_.end(), false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (Vertex i = 0; i < n_; ++i) {
            if (blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = true;
                q.push(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1)
            return to;
          used_[match_[to]] = true;
          q.push(match_[to]);
        }
      }
    }
    return -1;
  }

  const Graph &g_;
  int n_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<bool> used_;
  std::vector<bool> blossom_;
};

} // namespace detail

/// Maximum matching in a general graph. Polynomial, no budget needed.
inline MatchingResult mu(const Graph &g) {
  auto mate = detail::BlossomMatcher(g).run();
  MatchingResult r;
  for (Vertex v = 0; v < g.order(); ++v)
    if (mate[v] > v)
      r.witness.emplace_back(v, mate[v]);
  r.value = static_cast<int>(r.witness.size());
  return r;
}

inline bool has_perfect_matching(const Graph &g) {
  return 2 * mu(g).value == g.order();
}

/// Number of perfect matchings, by recursion on the lowest unmatched vertex.
/// Exponential; meant for small graphs.
inline std::uint64_t count_perfect_matchings(const Graph &g) {
  if (g.order() % 2 != 0)
    return 0;
  std::vector<bool> used(static_cast<std::size_t>(g.order()), false);
  auto rec = [&](auto &&self, Vertex from) -> std::uint64_t {
    while (from < g.order() && used[from])
      ++from;
    if (from == g.order())
      return 1;
    used[from] = true;
    std::uint64_t total = 0;
    for (Vertex w : g.neighbors(from)) {
      if (used[w])
        continue;
      used[w] = true;
      total += self(self, from + 1);
      used[w] = false;
    }
    used[from] = false;
    return total;
  };
  return rec(rec, 0);
}

} // namespace kess
