#include "edgepoly/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <deque>
#include <sstream>

namespace edgepoly {

namespace {

std::size_t words_for(std::size_t d) { return (d + 63) / 64; }

void check_order(std::size_t d) {
  if (d == 0) throw std::invalid_argument("graph must have at least one vertex");
  if (d > Graph::kMaxVertices)
    throw std::invalid_argument("graph order exceeds " + std::to_string(Graph::kMaxVertices));
}

}  // namespace

Graph::Graph(std::size_t d) : d_(d), words_(words_for(d)), bits_(d * words_for(d), 0) {
  check_order(d);
}

Graph Graph::from_edges(std::size_t d, std::span<const Edge> edges) {
  GraphBuilder b(d);
  for (const auto& e : edges) {
    if (b.has_edge(e.u, e.v)) throw std::invalid_argument("duplicate edge");
    b.add_edge(e.u, e.v);
  }
  return b.build();
}

std::size_t Graph::degree(Vertex u) const {
  std::size_t n = 0;
  for (auto w : row(u)) n += std::popcount(w);
  return n;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> out(d_);
  for (Vertex u = 0; u < d_; ++u) out[u] = degree(u);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_);
  for (Vertex u = 0; u < d_; ++u) {
    auto r = row(u);
    for (std::size_t w = (u + 1) >> 6; w < words_; ++w) {
      std::uint64_t bits = r[w];
      if (w == ((u + 1) >> 6)) bits &= ~std::uint64_t{0} << ((u + 1) & 63);
      while (bits) {
        const auto v = static_cast<Vertex>(w * 64 + std::countr_zero(bits));
        out.push_back({u, v});
        bits &= bits - 1;
      }
    }
  }
  return out;
}

GraphBuilder::GraphBuilder(std::size_t d) : g_(d) {}
GraphBuilder::GraphBuilder(const Graph& g) : g_(g) {}

void GraphBuilder::check(Vertex u, Vertex v) const {
  if (u >= g_.d_ || v >= g_.d_) throw std::invalid_argument("vertex out of range");
  if (u == v) throw std::invalid_argument("loops are not allowed");
}

void GraphBuilder::flip(Vertex u, Vertex v) {
  g_.bits_[u * g_.words_ + (v >> 6)] ^= std::uint64_t{1} << (v & 63);
  g_.bits_[v * g_.words_ + (u >> 6)] ^= std::uint64_t{1} << (u & 63);
}

bool GraphBuilder::has_edge(Vertex u, Vertex v) const {
  check(u, v);
  return g_.adjacent(u, v);
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (!has_edge(u, v)) {
    flip(u, v);
    ++g_.edges_;
  }
  return *this;
}

GraphBuilder& GraphBuilder::remove_edge(Vertex u, Vertex v) {
  if (has_edge(u, v)) {
    flip(u, v);
    --g_.edges_;
  }
  return *this;
}

GraphBuilder& GraphBuilder::toggle_edge(Vertex u, Vertex v) {
  return has_edge(u, v) ? remove_edge(u, v) : add_edge(u, v);
}

Graph complete(std::size_t d) { return complement(Graph(d)); }

Graph complete_bipartite(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw std::invalid_argument("complete bipartite parts must be non-empty");
  GraphBuilder b(m + n);
  for (Vertex i = 0; i < m; ++i)
    for (Vertex j = 0; j < n; ++j) b.add_edge(i, static_cast<Vertex>(m + j));
  return b.build();
}

Graph cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (Vertex i = 0; i < n; ++i) b.add_edge(i, static_cast<Vertex>((i + 1) % n));
  return b.build();
}

Graph path(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return b.build();
}

Graph empty(std::size_t d) { return Graph(d); }

Graph make_named(Family family, std::size_t a, std::size_t b) {
  switch (family) {
    case Family::complete: return complete(a);
    case Family::complete_bipartite: return complete_bipartite(a, b);
    case Family::cycle: return cycle(a);
    case Family::path: return path(a);
    case Family::empty: return empty(a);
  }
  throw std::invalid_argument("unknown family");
}

Graph complement(const Graph& g) {
  GraphBuilder b(g.order());
  const auto d = static_cast<Vertex>(g.order());
  for (Vertex u = 0; u < d; ++u)
    for (Vertex v = u + 1; v < d; ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  return b.build();
}

Graph subtract(const Graph& g, const Graph& h, std::span<const Vertex> embedding) {
  if (embedding.size() != h.order())
    throw std::invalid_argument("embedding must map every vertex of h");
  std::vector<bool> used(g.order(), false);
  for (auto v : embedding) {
    if (v >= g.order()) throw std::invalid_argument("embedding target out of range");
    if (used[v]) throw std::invalid_argument("embedding is not injective");
    used[v] = true;
  }
  GraphBuilder b(g);
  for (const auto& e : h.edges()) {
    const Vertex u = embedding[e.u], v = embedding[e.v];
    if (!g.adjacent(u, v)) throw std::invalid_argument("edge of h is not an edge of g");
    b.remove_edge(u, v);
  }
  return b.build();
}

Graph subtract(const Graph& g, const Graph& h) {
  std::vector<Vertex> id(h.order());
  for (Vertex i = 0; i < id.size(); ++i) id[i] = i;
  return subtract(g, h, id);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  GraphBuilder b(vertices.size());
  for (Vertex i = 0; i < vertices.size(); ++i)
    for (Vertex j = i + 1; j < vertices.size(); ++j)
      if (g.adjacent(vertices[i], vertices[j])) b.add_edge(i, j);
  return b.build();
}

Graph edges_within(const Graph& g, std::span<const Vertex> block) {
  GraphBuilder b(g.order());
  for (std::size_t i = 0; i < block.size(); ++i)
    for (std::size_t j = i + 1; j < block.size(); ++j)
      if (g.adjacent(block[i], block[j])) b.add_edge(block[i], block[j]);
  return b.build();
}

std::vector<std::vector<Vertex>> Components::nonempty_blocks() const {
  std::vector<std::vector<Vertex>> out;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (nonempty[i]) out.push_back(blocks[i]);
  return out;
}

Components connected_components(const Graph& g) {
  Components out;
  const auto d = static_cast<Vertex>(g.order());
  std::vector<bool> seen(d, false);
  for (Vertex s = 0; s < d; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> block{s};
    seen[s] = true;
    for (std::size_t head = 0; head < block.size(); ++head) {
      const Vertex u = block[head];
      for (Vertex v = 0; v < d; ++v)
        if (!seen[v] && g.adjacent(u, v)) {
          seen[v] = true;
          block.push_back(v);
        }
    }
    std::sort(block.begin(), block.end());
    out.nonempty.push_back(block.size() > 1);
    out.blocks.push_back(std::move(block));
  }
  return out;
}

std::optional<Bipartition> is_bipartite(const Graph& g) {
  const auto d = static_cast<Vertex>(g.order());
  std::vector<int> color(d, -1);
  for (Vertex s = 0; s < d; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (Vertex v = 0; v < d; ++v) {
        if (!g.adjacent(u, v)) continue;
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition parts;
  for (Vertex v = 0; v < d; ++v) (color[v] == 0 ? parts.first : parts.second).push_back(v);
  return parts;
}

Graph fixture_g_prime() {
  // 1-indexed edges of the complement, parts {1..10} and {11..20}.
  static constexpr std::uint8_t kComplement[70][2] = {
      {1, 12},  {1, 14},  {1, 15},  {1, 16},  {1, 18},  {1, 19},  {1, 20},  {2, 11},  {2, 12},
      {2, 13},  {2, 15},  {2, 17},  {2, 19},  {2, 20},  {3, 11},  {3, 12},  {3, 13},  {3, 14},
      {3, 15},  {3, 16},  {3, 18},  {4, 14},  {4, 15},  {4, 16},  {4, 17},  {4, 18},  {4, 19},
      {4, 20},  {5, 11},  {5, 12},  {5, 13},  {5, 15},  {5, 17},  {5, 18},  {5, 20},  {6, 12},
      {6, 16},  {6, 17},  {6, 18},  {6, 19},  {6, 20},  {7, 11},  {7, 12},  {7, 13},  {7, 14},
      {7, 16},  {7, 17},  {7, 19},  {8, 11},  {8, 12},  {8, 13},  {8, 14},  {8, 15},  {8, 18},
      {8, 19},  {8, 20},  {9, 11},  {9, 14},  {9, 15},  {9, 16},  {9, 17},  {9, 18},  {9, 19},
      {10, 11}, {10, 13}, {10, 15}, {10, 16}, {10, 18}, {10, 19}, {10, 20},
  };
  GraphBuilder h(20);
  for (const auto& e : kComplement) h.add_edge(e[0] - 1u, e[1] - 1u);
  return complement(h.build());
}

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

std::vector<std::string_view> fields(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const auto start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

std::optional<long long> to_int(std::string_view s) {
  long long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<GraphBuilder> builder;
  long long d = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const auto line = trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    for (char c : line)
      if (static_cast<unsigned char>(c) > 127) throw ParseError("non-ASCII input", line_no);
    const auto f = fields(line);
    if (!builder) {
      const auto n = f.size() == 1 ? to_int(f[0]) : std::nullopt;
      if (!n || *n < 1 || *n > static_cast<long long>(Graph::kMaxVertices))
        throw ParseError("expected vertex count", line_no);
      d = *n;
      builder.emplace(static_cast<std::size_t>(d));
      continue;
    }
    if (f.size() != 2) throw ParseError("expected two vertices", line_no);
    const auto i = to_int(f[0]), j = to_int(f[1]);
    if (!i || !j) throw ParseError("malformed vertex", line_no);
    if (*i < 1 || *j < 1 || *i > d || *j > d) throw ParseError("vertex out of range", line_no);
    if (*i >= *j) throw ParseError("expected i < j", line_no);
    const auto u = static_cast<Vertex>(*i - 1), v = static_cast<Vertex>(*j - 1);
    if (builder->has_edge(u, v)) throw ParseError("duplicate edge", line_no);
    builder->add_edge(u, v);
  }
  if (!builder) throw ParseError("missing vertex count", line_no);
  return builder->build();
}

std::string serialize(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (const auto& e : g.edges()) out << e.u + 1 << ' ' << e.v + 1 << '\n';
  return out.str();
}

}  // namespace edgepoly
