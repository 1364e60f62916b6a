#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kess/graph.hpp"

namespace kess {

class EdgeListError : public std::runtime_error {
public:
  EdgeListError(const std::string &what, int line)
      : std::runtime_error("edge list line " + std::to_string(line) + ": " +
                           what),
        line_(line) {}

  int line() const { return line_; }

private:
  int line_;
};

/// Parses "n m" followed by m lines "u v". Blank lines and lines starting
/// with '#' are skipped; line numbers count every physical line.
inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;

  auto next = [&](std::vector<long long> &fields) -> bool {
    while (std::getline(in, raw)) {
      ++line;
      std::size_t first = raw.find_first_not_of(" \t\r");
      if (first == std::string::npos || raw[first] == '#')
        continue;
      std::istringstream ls(raw);
      fields.clear();
      std::string tok;
      while (ls >> tok) {
        try {
          std::size_t used = 0;
          long long v = std::stoll(tok, &used);
          if (used != tok.size())
            throw std::invalid_argument(tok);
          fields.push_back(v);
        } catch (const std::logic_error &) {
          throw EdgeListError("not an integer: '" + tok + "'", line);
        }
      }
      return true;
    }
    return false;
  };

  std::vector<long long> f;
  if (!next(f))
    throw EdgeListError("missing header 'n m'", line + 1);
  if (f.size() != 2)
    throw EdgeListError("header needs exactly 2 fields, got " +
                            std::to_string(f.size()),
                        line);
  if (f[0] < 0 || f[1] < 0 || f[0] > INT32_MAX)
    throw EdgeListError("header values out of range", line);
  const int n = static_cast<int>(f[0]);
  const long long m = f[1];

  std::vector<std::pair<int, int>> edges;
  for (long long k = 0; k < m; ++k) {
    if (!next(f))
      throw EdgeListError("expected " + std::to_string(m) + " edges, got " +
                              std::to_string(k),
                          line + 1);
    if (f.size() != 2)
      throw EdgeListError("edge needs exactly 2 fields, got " +
                              std::to_string(f.size()),
                          line);
    if (f[0] < 0 || f[1] < 0 || f[0] >= n || f[1] >= n)
      throw EdgeListError("endpoint out of range 0.." + std::to_string(n - 1),
                          line);
    if (f[0] == f[1])
      throw EdgeListError("self-loop", line);
    edges.emplace_back(static_cast<int>(f[0]), static_cast<int>(f[1]));
  }
  if (next(f))
    throw EdgeListError("unexpected content after the last edge", line);
  return build_graph(n, edges);
}

inline std::string format_edge_list(const Graph &g) {
  std::string out =
      std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const Edge &e : g.edges())
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

} // namespace kess
