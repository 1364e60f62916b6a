#pragma once

#include <cstdint>
#include <istream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "kess/graph.hpp"
#include "kess/io/graph6.hpp"
#include "kess/matching.hpp"
#include "kess/stable.hpp"

namespace kess {

/// A reproducible stream of graphs. Random kinds draw everything from `seed`.
struct GraphFamily {
  enum class Kind {
    exhaustive,   // every labeled graph on n vertices, n in [n_min, n_max]
    all_trees,    // every labeled tree (Pruefer enumeration)
    random_gnp,   // G(n, p)
    random_trees, // uniform labeled trees via random Pruefer sequences
    random_ke,    // connected Koenig-Egervary graphs by rejection
    graph6_lines, // externally supplied graph6 strings
  };

  Kind kind = Kind::exhaustive;
  int n_min = 1;
  int n_max = 1;
  double p = 0.5;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  /// Graphs that fail the filter are not counted as checked.
  bool connected_only = false;
  std::vector<std::string> lines;

  static GraphFamily exhaustive(int n_lo, int n_hi) {
    GraphFamily f;
    f.kind = Kind::exhaustive;
    f.n_min = n_lo;
    f.n_max = n_hi;
    return f;
  }
  static GraphFamily all_trees(int n_lo, int n_hi) {
    GraphFamily f = exhaustive(n_lo, n_hi);
    f.kind = Kind::all_trees;
    return f;
  }
  static GraphFamily random_gnp(int n_lo, int n_hi, double p,
                                std::size_t count, std::uint64_t seed) {
    GraphFamily f = exhaustive(n_lo, n_hi);
    f.kind = Kind::random_gnp;
    f.p = p;
    f.count = count;
    f.seed = seed;
    return f;
  }
  static GraphFamily random_trees(int n_lo, int n_hi, std::size_t count,
                                  std::uint64_t seed) {
    GraphFamily f = random_gnp(n_lo, n_hi, 0, count, seed);
    f.kind = Kind::random_trees;
    return f;
  }
  static GraphFamily random_ke(int n_lo, int n_hi, std::size_t count,
                               std::uint64_t seed) {
    GraphFamily f = random_gnp(n_lo, n_hi, 0, count, seed);
    f.kind = Kind::random_ke;
    return f;
  }
  static GraphFamily graph6(std::vector<std::string> lines) {
    GraphFamily f;
    f.kind = Kind::graph6_lines;
    f.lines = std::move(lines);
    return f;
  }

  GraphFamily &connected(bool on = true) {
    connected_only = on;
    return *this;
  }

  std::string describe() const {
    auto range = [&] {
      return n_min == n_max ? std::to_string(n_min)
                            : std::to_string(n_min) + "-" +
                                  std::to_string(n_max);
    };
    std::string s;
    switch (kind) {
    case Kind::exhaustive:
      s = "exhaustive:" + range();
      break;
    case Kind::all_trees:
      s = "alltrees:" + range();
      break;
    case Kind::random_gnp: {
      std::ostringstream p_text;
      p_text << p;
      s = "gnp:" + range() + ":" + p_text.str() + ":" + std::to_string(count);
      break;
    }
    case Kind::random_trees:
      s = "trees:" + range() + ":" + std::to_string(count);
      break;
    case Kind::random_ke:
      s = "ke:" + range() + ":" + std::to_string(count);
      break;
    case Kind::graph6_lines:
      s = "graph6:" + std::to_string(lines.size());
      break;
    }
    if (kind == Kind::random_gnp || kind == Kind::random_trees ||
        kind == Kind::random_ke)
      s += "@seed=" + std::to_string(seed);
    if (connected_only)
      s += "+connected";
    return s;
  }
};

namespace detail {

class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

  int between(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  /// Uniform in [0, 1) with 53 random bits.
  double unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

private:
  std::mt19937_64 engine_;
};

inline std::uint64_t pair_count(int n) {
  return static_cast<std::uint64_t>(n) * (n > 0 ? n - 1 : 0) / 2;
}

inline std::uint64_t labeled_tree_count(int n) {
  if (n <= 2)
    return 1;
  std::uint64_t c = 1;
  for (int i = 0; i < n - 2; ++i)
    c *= static_cast<std::uint64_t>(n);
  return c;
}

} // namespace detail

/// Labeled graph number `code` on n vertices: bit k of `code` selects the
/// k-th vertex pair in graph6 order (0,1) (0,2) (1,2) (0,3) ...
inline Graph labeled_graph(int n, std::uint64_t code) {
  std::vector<Edge> edges;
  int k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k)
      if ((code >> k) & 1)
        edges.emplace_back(i, j);
  return Graph::from_edges(n, std::move(edges));
}

/// Tree encoded by a Pruefer sequence of length n-2 over 0..n-1.
inline Graph tree_from_pruefer(int n, const std::vector<int> &seq) {
  if (n <= 1)
    return named::empty(n);
  if (static_cast<int>(seq.size()) != n - 2)
    throw std::invalid_argument("Pruefer sequence must have length n-2");
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int x : seq) {
    if (x < 0 || x >= n)
      throw std::invalid_argument("Pruefer entry out of range");
    ++degree[x];
  }
  std::vector<Edge> edges;
  // Pointer walk: O(n) decode.
  int ptr = 0;
  while (degree[ptr] != 1)
    ++ptr;
  int leaf = ptr;
  for (int x : seq) {
    edges.emplace_back(leaf, x);
    if (--degree[x] == 1 && x < ptr) {
      leaf = x;
    } else {
      ++ptr;
      while (degree[ptr] != 1)
        ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n - 1);
  return Graph::from_edges(n, std::move(edges));
}

/// Tree number `index` in base-n enumeration of Pruefer sequences.
inline Graph labeled_tree(int n, std::uint64_t index) {
  std::vector<int> seq(static_cast<std::size_t>(n > 2 ? n - 2 : 0));
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    *it = static_cast<int>(index % static_cast<std::uint64_t>(n));
    index /= static_cast<std::uint64_t>(n);
  }
  return tree_from_pruefer(n, seq);
}

inline Graph random_gnp_graph(int n, double p, detail::Rng &rng) {
  std::vector<Edge> edges;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i)
      if (rng.unit() < p)
        edges.emplace_back(i, j);
  return Graph::from_edges(n, std::move(edges));
}

inline Graph random_tree(int n, detail::Rng &rng) {
  std::vector<int> seq(static_cast<std::size_t>(n > 2 ? n - 2 : 0));
  for (int &x : seq)
    x = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
  return tree_from_pruefer(n, seq);
}

namespace detail {

// Half the draws are plain G(n, p); the other half hang pendants on a random
// core and sprinkle extra edges, which is where square-stable KE graphs live.
inline Graph random_ke_candidate(int n, Rng &rng) {
  static constexpr double kDensities[] = {0.2, 0.3, 0.5};
  if (rng.below(2) == 0)
    return random_gnp_graph(n, kDensities[rng.below(3)], rng);
  const int core = (n + 1) / 2;
  const int hanging = n - core;
  Graph base = random_gnp_graph(core, kDensities[rng.below(3)], rng);
  std::vector<Edge> edges(base.edges());
  std::vector<int> hosts(static_cast<std::size_t>(core));
  for (int i = 0; i < core; ++i)
    hosts[i] = i;
  for (int i = core - 1; i > 0; --i)
    std::swap(hosts[i], hosts[rng.below(static_cast<std::uint64_t>(i + 1))]);
  const double extra = rng.below(2) == 0 ? 0.0 : 0.15;
  for (int k = 0; k < hanging; ++k) {
    Vertex leaf = core + k;
    edges.emplace_back(hosts[k], leaf);
    for (Vertex v = 0; v < core; ++v)
      if (v != hosts[k] && rng.unit() < extra)
        edges.emplace_back(v, leaf);
  }
  return Graph::from_edges(n, std::move(edges));
}

} // namespace detail

/// Random-access view over a family's graphs.
class FamilyStream {
public:
  explicit FamilyStream(const GraphFamily &f) : family_(f) {
    if (f.n_min < 0 || f.n_max < f.n_min)
      throw std::invalid_argument("invalid order range " +
                                  std::to_string(f.n_min) + ".." +
                                  std::to_string(f.n_max));
    switch (f.kind) {
    case GraphFamily::Kind::exhaustive:
      if (f.n_max > 11)
        throw std::invalid_argument("exhaustive enumeration supports n <= 11");
      for (int n = f.n_min; n <= f.n_max; ++n)
        push_block(n, std::uint64_t{1} << detail::pair_count(n));
      break;
    case GraphFamily::Kind::all_trees:
      if (f.n_max > 14)
        throw std::invalid_argument("tree enumeration supports n <= 14");
      for (int n = std::max(f.n_min, 1); n <= f.n_max; ++n)
        push_block(n, detail::labeled_tree_count(n));
      break;
    case GraphFamily::Kind::random_gnp:
    case GraphFamily::Kind::random_trees:
    case GraphFamily::Kind::random_ke:
      materialize_random();
      break;
    case GraphFamily::Kind::graph6_lines:
      for (std::size_t i = 0; i < f.lines.size(); ++i) {
        try {
          graphs_.push_back(decode_graph6(f.lines[i]));
        } catch (const Graph6Error &e) {
          throw std::invalid_argument("graph6 line " + std::to_string(i + 1) +
                                      ": " + e.what());
        }
      }
      break;
    }
  }

  std::uint64_t size() const {
    return blocks_.empty() ? graphs_.size() : total_;
  }

  Graph at(std::uint64_t index) const {
    if (blocks_.empty())
      return graphs_.at(index);
    for (const Block &b : blocks_) {
      if (index < b.count)
        return family_.kind == GraphFamily::Kind::exhaustive
                   ? labeled_graph(b.n, index)
                   : labeled_tree(b.n, index);
      index -= b.count;
    }
    throw std::out_of_range("family index");
  }

  const GraphFamily &family() const { return family_; }

private:
  struct Block {
    int n;
    std::uint64_t count;
  };

  void push_block(int n, std::uint64_t count) {
    blocks_.push_back({n, count});
    total_ += count;
  }

  void materialize_random() {
    const auto &f = family_;
    if (f.kind == GraphFamily::Kind::random_gnp && !(f.p >= 0 && f.p <= 1))
      throw std::invalid_argument("edge probability must lie in [0, 1]");
    if (f.n_max > detail::kMaxBitOrder)
      throw std::invalid_argument("random orders above 64 are not supported");
    detail::Rng rng(f.seed);
    graphs_.reserve(f.count);
    std::uint64_t attempts = 0;
    while (graphs_.size() < f.count) {
      int n = rng.between(f.n_min, f.n_max);
      switch (f.kind) {
      case GraphFamily::Kind::random_gnp:
        graphs_.push_back(random_gnp_graph(n, f.p, rng));
        break;
      case GraphFamily::Kind::random_trees:
        graphs_.push_back(random_tree(n, rng));
        break;
      default: {
        if (++attempts > 1000 * (f.count + 10))
          throw std::runtime_error("random_ke: acceptance rate too low");
        Graph g = detail::random_ke_candidate(n, rng);
        if (n >= 1 && is_connected(g) &&
            alpha(g, SolverBudget::unlimited()).value + mu(g).value == n)
          graphs_.push_back(std::move(g));
        break;
      }
      }
    }
  }

  GraphFamily family_;
  std::vector<Block> blocks_;
  std::uint64_t total_ = 0;
  std::vector<Graph> graphs_;
};

/// Every graph of the family in stream order, after the connectivity filter.
inline std::vector<Graph> generate(const GraphFamily &family) {
  FamilyStream stream(family);
  std::vector<Graph> out;
  for (std::uint64_t i = 0; i < stream.size(); ++i) {
    Graph g = stream.at(i);
    if (!family.connected_only || is_connected(g))
      out.push_back(std::move(g));
  }
  return out;
}

inline std::vector<std::string> read_graph6_lines(std::istream &in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    if (line.rfind(">>graph6<<", 0) == 0)
      line.erase(0, 10);
    if (!line.empty())
      lines.push_back(line);
  }
  return lines;
}

} // namespace kess
