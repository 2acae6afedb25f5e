#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace edgepoly {

// Vertices are 0-indexed in the library API. Text I/O and JSON use 1..d.
using Vertex = std::uint32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;  // u < v

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable labeled simple graph on vertices 0..d-1.
///
/// Adjacency is stored as d fixed-width bitset rows. Use GraphBuilder to
/// construct or modify; every operation in this header returns a new value.
class Graph {
 public:
  static constexpr std::size_t kMaxVertices = 4096;

  Graph() = default;
  explicit Graph(std::size_t d);  // edgeless

  static Graph from_edges(std::size_t d, std::span<const Edge> edges);

  std::size_t order() const { return d_; }
  std::size_t words_per_row() const { return words_; }
  std::size_t edge_count() const { return edges_; }

  bool adjacent(Vertex u, Vertex v) const {
    return (bits_[u * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }
  std::span<const std::uint64_t> row(Vertex u) const {
    return {bits_.data() + u * words_, words_};
  }
  std::size_t degree(Vertex u) const;
  std::vector<std::size_t> degrees() const;

  /// Edges in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;

  std::size_t d_ = 0;
  std::size_t words_ = 0;
  std::size_t edges_ = 0;
  std::vector<std::uint64_t> bits_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t d);
  explicit GraphBuilder(const Graph& g);

  std::size_t order() const { return g_.d_; }
  bool has_edge(Vertex u, Vertex v) const;
  /// Throws std::invalid_argument on loops or out-of-range vertices.
  GraphBuilder& add_edge(Vertex u, Vertex v);
  GraphBuilder& remove_edge(Vertex u, Vertex v);
  GraphBuilder& toggle_edge(Vertex u, Vertex v);

  Graph build() const { return g_; }

 private:
  void check(Vertex u, Vertex v) const;
  void flip(Vertex u, Vertex v);

  Graph g_;
};

enum class Family { complete, complete_bipartite, cycle, path, empty };

/// K_d, K_{m,n} (parts {0..m-1} and {m..m+n-1}), C_n, P_n, or the edgeless
/// graph. `b` is only read for complete_bipartite.
Graph make_named(Family family, std::size_t a, std::size_t b = 0);

Graph complete(std::size_t d);
Graph complete_bipartite(std::size_t m, std::size_t n);
Graph cycle(std::size_t n);
Graph path(std::size_t n);
Graph empty(std::size_t d);

Graph complement(const Graph& g);

/// Removes the edges of h, mapped through `embedding` (h vertex -> g vertex),
/// from g. The vertex count of g is unchanged.
Graph subtract(const Graph& g, const Graph& h, std::span<const Vertex> embedding);
Graph subtract(const Graph& g, const Graph& h);  // identity embedding

/// Graph on |vertices| vertices induced by `vertices`, relabeled in order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Same vertex count as g, keeping only edges with both ends in `block`.
Graph edges_within(const Graph& g, std::span<const Vertex> block);

struct Components {
  std::vector<std::vector<Vertex>> blocks;  // ordered by smallest vertex
  std::vector<bool> nonempty;               // block carries at least one edge

  std::vector<std::vector<Vertex>> nonempty_blocks() const;
};

Components connected_components(const Graph& g);

struct Bipartition {
  std::vector<Vertex> first;
  std::vector<Vertex> second;
};

/// BFS 2-coloring; each component's lowest vertex goes to `first`.
std::optional<Bipartition> is_bipartite(const Graph& g);

/// The 20-vertex graph whose complement is the 70-edge bipartite graph
/// listed alongside the value 4203.
Graph fixture_g_prime();

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(what + ", line " + std::to_string(line)), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Edge-list text: first line d, then one "i j" per line (1 <= i < j <= d).
/// Lines starting with '#' are comments. Duplicate edges are rejected.
Graph parse_edge_list(std::string_view text);
std::string serialize(const Graph& g);

}  // namespace edgepoly
