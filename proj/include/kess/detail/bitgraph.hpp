#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "kess/graph.hpp"

namespace kess::detail {

using Mask = std::uint64_t;

inline constexpr int kMaxBitOrder = 64;

inline constexpr Mask bit(Vertex v) { return Mask{1} << v; }

inline constexpr Mask low_mask(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline int popcount(Mask m) { return std::popcount(m); }

inline Vertex lowest(Mask m) { return std::countr_zero(m); }

inline VertexSet to_set(Mask m) {
  VertexSet out;
  out.reserve(static_cast<std::size_t>(popcount(m)));
  while (m) {
    out.push_back(lowest(m));
    m &= m - 1;
  }
  return out;
}

inline Mask to_mask(const VertexSet &s) {
  Mask m = 0;
  for (Vertex v : s)
    m |= bit(v);
  return m;
}

template <typename F> void for_each_bit(Mask m, F &&f) {
  while (m) {
    f(lowest(m));
    m &= m - 1;
  }
}

/// Adjacency as 64-bit rows; the exponential solvers all run on this.
struct BitGraph {
  int n = 0;
  Mask all = 0;
  std::vector<Mask> nbr;

  explicit BitGraph(const Graph &g) : n(g.order()), all(low_mask(g.order())) {
    if (g.order() > kMaxBitOrder)
      throw std::domain_error("exact solvers support at most " +
                              std::to_string(kMaxBitOrder) +
                              " vertices, got " + std::to_string(g.order()));
    nbr.assign(static_cast<std::size_t>(n), 0);
    for (const Edge &e : g.edges()) {
      nbr[e.u] |= bit(e.v);
      nbr[e.v] |= bit(e.u);
    }
  }

  Mask closed(Vertex v) const { return nbr[v] | bit(v); }
};

} // namespace kess::detail
