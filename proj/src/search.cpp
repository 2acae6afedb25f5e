#include "edgepoly/search.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "edgepoly/epsilon.hpp"
#include "edgepoly/parallel.hpp"
#include "edgepoly/random.hpp"

namespace edgepoly {

std::string to_string(SearchMode mode) {
  switch (mode) {
    case SearchMode::exhaustive: return "exhaustive";
    case SearchMode::bipartite_local: return "bipartite_local";
    case SearchMode::anneal: return "anneal";
  }
  return "unknown";
}

std::size_t pair_index(std::size_t d, Vertex u, Vertex v) {
  // Pairs (0,1), (0,2), ..., (0,d-1), (1,2), ...
  return u * (2 * d - u - 1) / 2 + (v - u - 1);
}

Graph graph_from_mask(std::size_t d, std::uint64_t mask) {
  GraphBuilder b(d);
  std::size_t bit = 0;
  for (Vertex u = 0; u < d; ++u)
    for (Vertex v = u + 1; v < d; ++v, ++bit)
      if (mask >> bit & 1u) b.add_edge(u, v);
  return b.build();
}

namespace {

// Scores a graph on at most 8 vertices given as an edge bitmask.
std::int64_t score_small(std::size_t d, std::uint64_t mask) {
  std::array<std::uint8_t, 8> rows{};
  std::array<std::uint8_t, 28> eu{}, ev{};
  int count = 0;
  std::size_t bit = 0;
  for (unsigned u = 0; u < d; ++u)
    for (unsigned v = u + 1; v < d; ++v, ++bit)
      if (mask >> bit & 1u) {
        rows[u] |= static_cast<std::uint8_t>(1u << v);
        rows[v] |= static_cast<std::uint8_t>(1u << u);
        eu[count] = static_cast<std::uint8_t>(u);
        ev[count] = static_cast<std::uint8_t>(v);
        ++count;
      }
  std::int64_t eps = 0;
  for (int x = 0; x < count; ++x) {
    const unsigned i = eu[x], j = ev[x];
    const unsigned ri = rows[i], rj = rows[j];
    for (int y = x + 1; y < count; ++y) {
      const unsigned k = eu[y], l = ev[y];
      if (i == k || i == l || j == k || j == l) {
        ++eps;
        continue;
      }
      const bool cyc = ((ri >> k & 1u) && (rj >> l & 1u)) || ((ri >> l & 1u) && (rj >> k & 1u));
      eps += !cyc;
    }
  }
  return eps;
}

bool edges_less(const Graph& a, const Graph& b) { return a.edges() < b.edges(); }

// Keeps the best score and up to kMaxIncumbents distinct graphs reaching it.
struct Incumbents {
  std::optional<Int128> best;
  std::vector<Graph> graphs;

  void offer(Int128 score, const Graph& g) {
    if (best && score < *best) return;
    if (!best || score > *best) {
      best = score;
      graphs.clear();
    }
    if (std::find(graphs.begin(), graphs.end(), g) != graphs.end()) return;
    graphs.push_back(g);
    std::sort(graphs.begin(), graphs.end(), edges_less);
    if (graphs.size() > SearchReport::kMaxIncumbents) graphs.pop_back();
  }

  void merge(const Incumbents& other) {
    if (!other.best) return;
    for (const auto& g : other.graphs) offer(*other.best, g);
  }
};

void recheck(const SearchReport& r) {
  for (const auto& g : r.incumbents)
    if (epsilon_direct(g).epsilon != r.best_eps) throw std::logic_error("incumbent does not re-score to best_eps");
}

// Complement-bipartite search state: side[v] in {0,1}, complement edges
// only between sides.
struct BipartiteState {
  std::vector<std::uint8_t> side;
  GraphBuilder complement_edges;

  explicit BipartiteState(std::size_t d) : side(d, 0), complement_edges(d) {}

  std::size_t order() const { return side.size(); }

  void toggle(Vertex u, Vertex v) { complement_edges.toggle_edge(u, v); }

  void migrate(Vertex v) {
    for (Vertex u = 0; u < order(); ++u)
      if (u != v && complement_edges.has_edge(u, v)) complement_edges.remove_edge(u, v);
    side[v] ^= 1u;
  }

  std::vector<Edge> cross_pairs() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex v = u + 1; v < order(); ++v)
        if (side[u] != side[v]) out.push_back({u, v});
    return out;
  }

  Graph graph() const { return complement(complement_edges.build()); }
};

Int128 score(const BipartiteState& s) { return epsilon_from_complement(s.complement_edges.build()); }

BipartiteState random_state(std::size_t d, SplitMix64& rng) {
  BipartiteState s(d);
  for (auto& x : s.side) x = static_cast<std::uint8_t>(rng.next() >> 63);
  const double density = rng.uniform();
  for (const auto& e : s.cross_pairs())
    if (rng.uniform() < density) s.toggle(e.u, e.v);
  return s;
}

BipartiteState warm_state(const Graph& h) {
  const auto parts = is_bipartite(h);
  if (!parts) throw std::invalid_argument("warm start complement is not bipartite");
  BipartiteState s(h.order());
  for (auto v : parts->second) s.side[v] = 1;
  for (const auto& e : h.edges()) s.toggle(e.u, e.v);
  return s;
}

void check_warm_starts(std::size_t d, const std::vector<Graph>& warm) {
  for (const auto& h : warm)
    if (h.order() != d) throw std::invalid_argument("warm start has the wrong order");
}

struct ChainResult {
  Incumbents top;
  std::uint64_t evaluated = 0;
};

ChainResult climb(BipartiteState state, SplitMix64& rng, std::size_t max_steps) {
  ChainResult out;
  Int128 current = score(state);
  ++out.evaluated;
  for (std::size_t step = 0; step < max_steps; ++step) {
    // Neighbor encoding: [0, cross) toggles, then d migrations.
    const auto cross = state.cross_pairs();
    const std::size_t moves = cross.size() + state.order();
    Int128 best = current;
    std::size_t chosen = moves, ties = 0;
    for (std::size_t mv = 0; mv < moves; ++mv) {
      BipartiteState next = state;
      if (mv < cross.size())
        next.toggle(cross[mv].u, cross[mv].v);
      else
        next.migrate(static_cast<Vertex>(mv - cross.size()));
      const Int128 s = score(next);
      ++out.evaluated;
      if (s > best) {
        best = s;
        chosen = mv;
        ties = 1;
      } else if (s == best && chosen != moves && rng.below(++ties) == 0) {
        chosen = mv;
      }
    }
    if (chosen == moves) break;
    if (chosen < cross.size())
      state.toggle(cross[chosen].u, cross[chosen].v);
    else
      state.migrate(static_cast<Vertex>(chosen - cross.size()));
    current = best;
  }
  out.top.offer(current, state.graph());
  return out;
}

SearchReport collect(std::size_t d, SearchMode mode, std::uint64_t seed, const std::vector<ChainResult>& chains) {
  Incumbents all;
  SearchReport r;
  r.d = d;
  r.mode = mode;
  r.seed = seed;
  for (const auto& c : chains) {
    all.merge(c.top);
    r.evaluated += c.evaluated;
    r.chain_best.push_back(c.top.best.value_or(0));
  }
  r.best_eps = all.best.value_or(0);
  r.incumbents = all.graphs;
  recheck(r);
  return r;
}

}  // namespace

SearchReport exhaustive(std::size_t d, bool allow_slow) {
  if (d < 3 || d > 8) throw std::invalid_argument("exhaustive search supports 3 <= d <= 8");
  if (d == 8 && !allow_slow) throw std::invalid_argument("d = 8 requires allow_slow");
  const std::size_t pairs = d * (d - 1) / 2;
  const std::uint64_t total = std::uint64_t{1} << pairs;

  // Fixed block count so the partition does not depend on the worker count.
  const std::size_t blocks = std::min<std::uint64_t>(total, 1024);
  struct Block {
    std::int64_t best = -1;
    std::vector<std::uint64_t> masks;  // ascending
  };
  std::vector<Block> results(blocks);
  parallel_for(blocks, [&](std::size_t b) {
    const std::uint64_t begin = std::max<std::uint64_t>(1, total * b / blocks), end = total * (b + 1) / blocks;
    Block blk;
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      const std::int64_t s = score_small(d, mask);
      if (s < blk.best) continue;
      if (s > blk.best) {
        blk.best = s;
        blk.masks.clear();
      }
      if (blk.masks.size() < SearchReport::kMaxIncumbents) blk.masks.push_back(mask);
    }
    results[b] = std::move(blk);
  });

  std::int64_t best = -1;
  std::vector<std::uint64_t> masks;
  for (const auto& blk : results) {
    if (blk.best < best) continue;
    if (blk.best > best) {
      best = blk.best;
      masks.clear();
    }
    masks.insert(masks.end(), blk.masks.begin(), blk.masks.end());
  }
  masks.resize(std::min(masks.size(), SearchReport::kMaxIncumbents));

  SearchReport r;
  r.d = d;
  r.mode = SearchMode::exhaustive;
  r.best_eps = best;
  r.evaluated = total - 1;
  for (auto m : masks) r.incumbents.push_back(graph_from_mask(d, m));
  r.parameters = {{"allow_slow", allow_slow ? "true" : "false"}};
  recheck(r);
  return r;
}

SearchReport bipartite_local(std::size_t d, const LocalSearchOptions& options) {
  if (d < 6) throw std::invalid_argument("bipartite_local needs d >= 6");
  check_warm_starts(d, options.warm_starts);
  const std::size_t warm = options.warm_starts.size();
  std::vector<ChainResult> chains(warm + options.restarts);
  parallel_for(chains.size(), [&](std::size_t i) {
    auto rng = SplitMix64::stream(options.seed, i);
    BipartiteState start = i < warm ? warm_state(options.warm_starts[i]) : random_state(d, rng);
    chains[i] = climb(std::move(start), rng, options.max_steps);
  });
  SearchReport r = collect(d, SearchMode::bipartite_local, options.seed, chains);
  r.parameters = {{"restarts", std::to_string(options.restarts)},
                  {"max_steps", std::to_string(options.max_steps)},
                  {"warm_starts", std::to_string(warm)}};
  return r;
}

SearchReport anneal(std::size_t d, const AnnealOptions& options) {
  if (d < 6) throw std::invalid_argument("anneal needs d >= 6");
  const auto& sch = options.schedule;
  if (!(sch.t_start > 0) || !(sch.t_end > 0)) throw std::invalid_argument("temperatures must be positive");
  if (sch.steps == 0) throw std::invalid_argument("schedule needs at least one step");
  check_warm_starts(d, options.warm_starts);
  const std::size_t warm = options.warm_starts.size();
  std::vector<ChainResult> chains(warm + options.chains);

  parallel_for(chains.size(), [&](std::size_t i) {
    auto rng = SplitMix64::stream(options.seed, i);
    BipartiteState state = i < warm ? warm_state(options.warm_starts[i]) : random_state(d, rng);
    ChainResult out;
    Int128 current = score(state);
    ++out.evaluated;
    out.top.offer(current, state.graph());
    const double ratio = sch.steps > 1 ? std::log(sch.t_end / sch.t_start) / static_cast<double>(sch.steps - 1) : 0.0;
    for (std::size_t step = 0; step < sch.steps; ++step) {
      const double t = sch.t_start * std::exp(ratio * static_cast<double>(step));
      const auto cross = state.cross_pairs();
      const std::uint64_t mv = rng.below(cross.size() + d);
      BipartiteState next = state;
      if (mv < cross.size())
        next.toggle(cross[mv].u, cross[mv].v);
      else
        next.migrate(static_cast<Vertex>(mv - cross.size()));
      const Int128 s = score(next);
      ++out.evaluated;
      const double delta = static_cast<double>(s - current);
      if (delta >= 0 || rng.uniform() < std::exp(delta / t)) {
        state = std::move(next);
        current = s;
        if (out.top.best && current >= *out.top.best) out.top.offer(current, state.graph());
      }
    }
    chains[i] = std::move(out);
  });

  SearchReport r = collect(d, SearchMode::anneal, options.seed, chains);
  r.parameters = {{"t_start", std::to_string(sch.t_start)},
                  {"t_end", std::to_string(sch.t_end)},
                  {"steps", std::to_string(sch.steps)},
                  {"chains", std::to_string(options.chains)},
                  {"warm_starts", std::to_string(warm)}};
  return r;
}

}  // namespace edgepoly
