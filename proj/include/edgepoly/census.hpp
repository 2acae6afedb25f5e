#pragma once

#include <cstdint>
#include <map>

#include "edgepoly/graph.hpp"

namespace edgepoly {

/// Induced-subgraph statistics of a graph H (typically a complement).
struct Census {
  std::int64_t edge_count = 0;
  std::int64_t sum_deg_sq = 0;
  std::int64_t k3 = 0;   // triangles
  std::int64_t a = 0;    // induced paths of length 3 on 4 vertices
  std::int64_t b = 0;    // induced 4-cycles
  std::int64_t c = 0;    // induced P3 plus one isolated vertex
  std::int64_t psi = 0;  // induced paths of length 2

  friend bool operator==(const Census&, const Census&) = default;
};

/// Pattern of the graph induced on four vertices, for the subsets counted
/// by Census::a, ::b and ::c.
enum class FourPattern : std::uint8_t { other, path3, cycle4, path2_plus_isolated };

/// Classifies a 6-bit edge mask over four vertices 0..3 with bit order
/// {01, 02, 03, 12, 13, 23}.
FourPattern classify_four(unsigned mask);

Census census(const Graph& h);

std::int64_t triangle_count(const Graph& h);
std::map<Edge, std::int64_t> triangles_per_edge(const Graph& h);

/// Direct triple scan for the induced 2-path count. Test oracle; d <= 64.
std::int64_t psi_bruteforce(const Graph& h);

}  // namespace edgepoly
