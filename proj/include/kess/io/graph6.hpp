#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kess/graph.hpp"

namespace kess {

/// Malformed graph6 input. `offset` is the byte position of the problem.
class Graph6Error : public std::runtime_error {
public:
  Graph6Error(const std::string &what, std::size_t offset)
      : std::runtime_error("graph6: " + what + " at byte " +
                           std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

namespace graph6 {

inline constexpr std::uint64_t kMaxOrder = 68719476735ULL; // 2^36 - 1
inline constexpr char kBias = 63;

namespace detail {

inline void put_order(std::string &out, std::uint64_t n) {
  auto put_bits = [&](int groups) {
    for (int g = groups - 1; g >= 0; --g)
      out.push_back(static_cast<char>(((n >> (6 * g)) & 0x3F) + kBias));
  };
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    put_bits(3);
  } else {
    out += "~~";
    put_bits(6);
  }
}

inline int sextet(std::string_view s, std::size_t at) {
  unsigned char c = static_cast<unsigned char>(s[at]);
  if (c < 63 || c > 126)
    throw Graph6Error("byte " + std::to_string(c) + " outside 63..126", at);
  return c - 63;
}

} // namespace detail

/// graph6 text (no header, no newline) of g.
inline std::string encode(const Graph &g) {
  const auto n = static_cast<std::uint64_t>(g.order());
  if (n > kMaxOrder)
    throw std::length_error("graph6: order exceeds format maximum");
  std::string out;
  detail::put_order(out, n);
  // Upper triangle, column by column: x(0,1) x(0,2) x(1,2) x(0,3) ...
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < g.order(); ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0)
    out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

/// Inverse of encode. Padding bits in the last byte are ignored, as in
/// nauty's reader.
inline Graph decode(std::string_view s) {
  if (s.empty())
    throw Graph6Error("empty input", 0);
  std::size_t pos = 0;
  std::uint64_t n = 0;
  if (s[0] != '~') {
    n = static_cast<std::uint64_t>(detail::sextet(s, 0));
    pos = 1;
  } else {
    int groups = 3;
    pos = 1;
    if (s.size() > 1 && s[1] == '~') {
      groups = 6;
      pos = 2;
    }
    if (s.size() < pos + groups)
      throw Graph6Error("truncated order field", s.size());
    for (int k = 0; k < groups; ++k)
      n = (n << 6) | static_cast<std::uint64_t>(detail::sextet(s, pos + k));
    pos += static_cast<std::size_t>(groups);
  }
  if (n > static_cast<std::uint64_t>(INT32_MAX))
    throw Graph6Error("order " + std::to_string(n) + " too large", 0);
  const auto pairs = n * (n > 0 ? n - 1 : 0) / 2;
  const std::size_t need = static_cast<std::size_t>((pairs + 5) / 6);
  if (s.size() < pos + need)
    throw Graph6Error("adjacency data too short: expected " +
                          std::to_string(need) + " bytes",
                      s.size());
  if (s.size() > pos + need)
    throw Graph6Error("trailing bytes", pos + need);

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (Vertex j = 1; j < static_cast<Vertex>(n); ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      int byte = detail::sextet(s, pos + static_cast<std::size_t>(k / 6));
      if ((byte >> (5 - k % 6)) & 1)
        edges.emplace_back(i, j);
    }
  }
  for (std::size_t b = pos; b < s.size(); ++b)
    detail::sextet(s, b);
  return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

} // namespace graph6

inline std::string encode_graph6(const Graph &g) { return graph6::encode(g); }
inline Graph decode_graph6(std::string_view s) { return graph6::decode(s); }

} // namespace kess
