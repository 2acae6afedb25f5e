#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "edgepoly/graph.hpp"
#include "edgepoly/integer.hpp"

namespace edgepoly {

enum class SearchMode { exhaustive, bipartite_local, anneal };

std::string to_string(SearchMode mode);

struct SearchReport {
  std::size_t d = 0;
  SearchMode mode = SearchMode::exhaustive;
  Int128 best_eps = 0;
  /// Graphs attaining best_eps, sorted by edge set, deduplicated, at most
  /// kMaxIncumbents.
  std::vector<Graph> incumbents;
  std::uint64_t evaluated = 0;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, std::string>> parameters;
  /// Best score of each restart or chain, in index order (heuristic modes).
  std::vector<Int128> chain_best;

  /// Only exhaustive reports give mu_d itself; heuristic ones a lower bound.
  bool exact() const { return mode == SearchMode::exhaustive; }

  static constexpr std::size_t kMaxIncumbents = 16;
};

/// Scores all 2^C(d,2) labeled graphs on d vertices (edgeless skipped).
/// 3 <= d <= 7, or d = 8 with allow_slow.
SearchReport exhaustive(std::size_t d, bool allow_slow = false);

/// Edge-bitmask index of the pair (u, v), u < v, in lexicographic order.
std::size_t pair_index(std::size_t d, Vertex u, Vertex v);
Graph graph_from_mask(std::size_t d, std::uint64_t mask);

struct LocalSearchOptions {
  std::uint64_t seed = 1;
  std::size_t restarts = 20;
  std::size_t max_steps = 10000;  // improving moves per restart
  /// Complements (bipartite graphs on d vertices) used as extra starts.
  std::vector<Graph> warm_starts;
};

/// Steepest-ascent hill climbing over graphs whose complement is bipartite.
/// Moves: toggle a cross pair of the complement, or migrate one vertex to
/// the other side (dropping its complement edges). Requires d >= 6.
SearchReport bipartite_local(std::size_t d, const LocalSearchOptions& options);

struct AnnealSchedule {
  double t_start = 50.0;
  double t_end = 0.5;
  std::size_t steps = 20000;  // geometric cooling over this many moves
};

struct AnnealOptions {
  std::uint64_t seed = 1;
  AnnealSchedule schedule;
  std::size_t chains = 1;
  std::vector<Graph> warm_starts;  // extra chains from these complements
};

/// Metropolis annealing over the same state space as bipartite_local.
SearchReport anneal(std::size_t d, const AnnealOptions& options);

}  // namespace edgepoly
