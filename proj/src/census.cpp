#include "edgepoly/census.hpp"

#include <array>
#include <bit>
#include <vector>

#include "edgepoly/parallel.hpp"

namespace edgepoly {

namespace {

// Pair slots of the 6-bit mask, in bit order.
constexpr std::array<std::array<int, 2>, 6> kSlots{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

constexpr FourPattern classify_impl(unsigned mask) {
  std::array<int, 4> deg{};
  int edges = 0;
  for (int s = 0; s < 6; ++s)
    if (mask >> s & 1u) {
      ++deg[kSlots[s][0]];
      ++deg[kSlots[s][1]];
      ++edges;
    }
  std::array<int, 4> hist{};  // vertices per degree 0..3
  for (int v : deg) ++hist[v];
  if (edges == 3 && hist[1] == 2 && hist[2] == 2) return FourPattern::path3;
  if (edges == 4 && hist[2] == 4) return FourPattern::cycle4;
  if (edges == 2 && hist[0] == 1 && hist[1] == 2 && hist[2] == 1)
    return FourPattern::path2_plus_isolated;
  return FourPattern::other;
}

constexpr std::array<FourPattern, 64> kPatternTable = [] {
  std::array<FourPattern, 64> t{};
  for (unsigned m = 0; m < 64; ++m) t[m] = classify_impl(m);
  return t;
}();

struct Abc {
  std::int64_t a = 0, b = 0, c = 0;
};

void tally(Abc& acc, unsigned mask) {
  switch (kPatternTable[mask]) {
    case FourPattern::path3: ++acc.a; break;
    case FourPattern::cycle4: ++acc.b; break;
    case FourPattern::path2_plus_isolated: ++acc.c; break;
    case FourPattern::other: break;
  }
}

Abc four_subsets(const Graph& h) {
  const auto d = static_cast<Vertex>(h.order());
  // Partition by smallest vertex; fixed chunk count keeps the reduction
  // independent of the worker count.
  std::vector<Abc> partial(d);
  const auto body = [&](std::size_t first, std::size_t last) {
    for (auto i = static_cast<Vertex>(first); i < last; ++i) {
      Abc acc;
      for (Vertex j = i + 1; j < d; ++j) {
        const unsigned mij = h.adjacent(i, j);
        for (Vertex k = j + 1; k < d; ++k) {
          const unsigned mijk = mij | h.adjacent(i, k) << 1 | h.adjacent(j, k) << 3;
          for (Vertex l = k + 1; l < d; ++l) {
            const unsigned mask = mijk | h.adjacent(i, l) << 2 | h.adjacent(j, l) << 4 |
                                  h.adjacent(k, l) << 5;
            tally(acc, mask);
          }
        }
      }
      partial[i] = acc;
    }
  };
  if (d >= 48)
    parallel_chunks(d, body);
  else
    body(0, d);
  Abc total;
  for (const auto& p : partial) {
    total.a += p.a;
    total.b += p.b;
    total.c += p.c;
  }
  return total;
}

std::int64_t common_neighbors(const Graph& h, Vertex u, Vertex v) {
  std::int64_t n = 0;
  auto ru = h.row(u), rv = h.row(v);
  for (std::size_t w = 0; w < ru.size(); ++w) n += std::popcount(ru[w] & rv[w]);
  return n;
}

}  // namespace

FourPattern classify_four(unsigned mask) { return kPatternTable[mask & 63u]; }

std::int64_t triangle_count(const Graph& h) {
  std::int64_t sum = 0;
  for (const auto& e : h.edges()) sum += common_neighbors(h, e.u, e.v);
  return sum / 3;
}

std::map<Edge, std::int64_t> triangles_per_edge(const Graph& h) {
  std::map<Edge, std::int64_t> out;
  for (const auto& e : h.edges()) out.emplace(e, common_neighbors(h, e.u, e.v));
  return out;
}

Census census(const Graph& h) {
  Census c;
  c.edge_count = static_cast<std::int64_t>(h.edge_count());
  std::int64_t centered_pairs = 0;
  for (Vertex v = 0; v < h.order(); ++v) {
    const auto deg = static_cast<std::int64_t>(h.degree(v));
    c.sum_deg_sq += deg * deg;
    centered_pairs += deg * (deg - 1) / 2;
  }
  c.k3 = triangle_count(h);
  // Each triangle closes three 2-paths; every other 2-path is induced.
  c.psi = centered_pairs - 3 * c.k3;
  const auto abc = four_subsets(h);
  c.a = abc.a;
  c.b = abc.b;
  c.c = abc.c;
  return c;
}

std::int64_t psi_bruteforce(const Graph& h) {
  if (h.order() > 64) throw std::invalid_argument("psi_bruteforce is limited to d <= 64");
  const auto d = static_cast<Vertex>(h.order());
  std::int64_t n = 0;
  for (Vertex center = 0; center < d; ++center)
    for (Vertex i = 0; i < d; ++i)
      for (Vertex k = i + 1; k < d; ++k) {
        if (i == center || k == center) continue;
        if (h.adjacent(i, center) && h.adjacent(center, k) && !h.adjacent(i, k)) ++n;
      }
  return n;
}

}  // namespace edgepoly
