#include "edgepoly/epsilon.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "edgepoly/census.hpp"
#include "edgepoly/parallel.hpp"

namespace edgepoly {

namespace {

void require_edges(const Graph& g) {
  if (g.edge_count() == 0) throw std::invalid_argument("epsilon needs a graph with at least one edge");
}

Int128 exact_quarter(Int128 scaled) {
  if (scaled % 4 != 0) throw std::logic_error("closed form is not integral: " + to_string(scaled));
  return scaled / 4;
}

}  // namespace

EpsilonBreakdown epsilon_direct(const Graph& g) {
  require_edges(g);
  const auto edges = g.edges();
  const std::size_t count = edges.size();

  struct Partial {
    Int128 shared = 0, disjoint_ok = 0;
  };
  // One slot per first-edge index; summing in index order is exact and
  // independent of the worker count.
  std::vector<Partial> partial(count);
  parallel_chunks(count, [&](std::size_t first, std::size_t last) {
    for (std::size_t x = first; x < last; ++x) {
      const auto [i, j] = edges[x];
      std::int64_t shared = 0, ok = 0;
      for (std::size_t y = x + 1; y < count; ++y) {
        const auto [k, l] = edges[y];
        if (i == k || i == l || j == k || j == l) {
          ++shared;
          continue;
        }
        // Given ij and kl, a 4-cycle on {i,j,k,l} needs one of the two
        // crossing matchings.
        const bool cyc = (g.adjacent(i, k) && g.adjacent(j, l)) || (g.adjacent(i, l) && g.adjacent(j, k));
        ok += !cyc;
      }
      partial[x] = {shared, ok};
    }
  });

  EpsilonBreakdown out;
  for (const auto& p : partial) {
    out.shared += p.shared;
    out.disjoint_ok += p.disjoint_ok;
  }
  out.epsilon = out.shared + out.disjoint_ok;
  return out;
}

Int128 epsilon_from_complement(const Graph& h) {
  const auto c = census(h);
  const Int128 d = static_cast<Int128>(h.order());
  const Int128 induced = Int128{c.a} + c.b + c.c;

  Int128 by_vertex = 0;
  for (Vertex v = 0; v < h.order(); ++v) by_vertex += binom2(d - 1 - static_cast<Int128>(h.degree(v)));
  const Int128 first = by_vertex + induced;

  const Int128 twice = 2 * epsilon_complete(h.order()) + c.sum_deg_sq - 2 * (2 * d - 3) * c.edge_count;
  if (twice % 2 != 0) throw std::logic_error("degree form is not integral");
  const Int128 second = twice / 2 + induced;

  if (first != second)
    throw std::logic_error("complement-census forms disagree: " + to_string(first) + " vs " + to_string(second));
  return first;
}

Int128 epsilon_via_complement(const Graph& g) {
  require_edges(g);
  return epsilon_from_complement(complement(g));
}

Int128 epsilon_by_components(const Graph& g) {
  require_edges(g);
  const Graph h = complement(g);
  const Int128 full = epsilon_complete(g.order());
  Int128 deficit = 0;
  for (const auto& block : connected_components(h).nonempty_blocks())
    deficit += full - epsilon_via_complement(complement(edges_within(h, block)));
  return full - deficit;
}

Int128 epsilon_complete(std::size_t d) {
  const Int128 n = static_cast<Int128>(d);
  return d < 3 ? 0 : n * (n - 1) * (n - 2) / 2;
}

Int128 epsilon_complete_bipartite(std::size_t m, std::size_t n) {
  const Int128 a = static_cast<Int128>(m), b = static_cast<Int128>(n);
  return a * b * (a + b - 2) / 2;
}

Int128 LinearForm::evaluate(std::size_t d) const {
  if (d < anchor_d) throw std::invalid_argument("linear form is only valid for d >= anchor");
  return slope * (static_cast<Int128>(d) - static_cast<Int128>(anchor_d)) + anchor_value;
}

LinearForm epsilon_linear(const Graph& h) {
  if (h.edge_count() == 0) return {0, h.order(), 0};
  const auto c = census(h);
  LinearForm f;
  f.slope = Int128{c.psi} - 2 * Int128{c.edge_count};
  f.anchor_d = h.order();
  f.anchor_value = epsilon_from_complement(h) - epsilon_complete(h.order());
  return f;
}

Int128 closed_kd_minus_kmn(std::size_t d, std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw std::invalid_argument("part sizes must be positive");
  if (m + n > d) throw std::invalid_argument("m + n exceeds d");
  const Int128 D = static_cast<Int128>(d), M = static_cast<Int128>(m), N = static_cast<Int128>(n);
  const Int128 scaled = 4 * epsilon_complete(d) + 2 * M * N * (M + N - 6) * D -
                        M * N * (3 * M * N + 2 * M * M + 2 * N * N - 5 * M - 5 * N - 13);
  return exact_quarter(scaled);
}

Int128 closed_two_bipartite(std::size_t d, std::int64_t a_num, std::int64_t a_den) {
  if (a_den <= 0 || a_num < 0 || 2 * a_num > a_den) throw std::invalid_argument("a must lie in [0, 1/2]");
  if (d % 2 != 0) throw std::invalid_argument("d must be even");
  const Int128 scaled = static_cast<Int128>(a_num) * static_cast<Int128>(d);
  if (scaled % a_den != 0) throw std::invalid_argument("a*d is not an integer");
  const auto first = static_cast<std::size_t>(scaled / a_den);
  const std::size_t second = d / 2 - first;

  const Int128 full = epsilon_complete(d);
  Int128 deficit = 0;
  for (const auto s : {first, second})
    if (s > 0) deficit += full - closed_kd_minus_kmn(d, s, s);
  return full - deficit;
}

double g_of_a(double a) {
  if (a < 0 || a > 0.5) throw std::invalid_argument("a must lie in [0, 1/2]");
  return (((-3.5 * a + 3.5) * a - 1.125) * a + 0.125) * a + 1.0 / 64;
}

Rational g_of_a(const Rational& a) {
  if (a < Rational{0} || Rational{1, 2} < a) throw std::invalid_argument("a must lie in [0, 1/2]");
  const Rational a2 = a * a, a3 = a2 * a, a4 = a3 * a;
  return Rational{-7, 2} * a4 + Rational{7, 2} * a3 - Rational{9, 8} * a2 + Rational{1, 8} * a + Rational{1, 64};
}

GMaximum g_argmax() {
  GMaximum m;
  m.a_low = (7 - std::sqrt(21.0)) / 28;
  m.a_high = (7 + std::sqrt(21.0)) / 28;
  m.value = g_of_a(m.a_low);
  return m;
}

Rational triangle_upper_bound(const Graph& g) {
  if (g.order() < 3) throw std::invalid_argument("bound needs d >= 3");
  const Graph h = complement(g);
  const Int128 d = static_cast<Int128>(g.order());
  const Int128 e = static_cast<Int128>(h.edge_count());
  const Int128 k3 = triangle_count(h);
  return Rational{7 * epsilon_complete(g.order()) + (d * d - 16 * d + 29) * e - 3 * (d - 8) * k3, 7};
}

ComponentOptimum max_complete_bipartite_components(std::size_t d) {
  if (d < 3 || d > 40) throw std::invalid_argument("d must lie in [3, 40]");
  const Int128 full = epsilon_complete(d);

  struct Piece {
    std::size_t m, n;
    Int128 gain;
  };
  std::vector<Piece> pieces;  // lexicographic (m, n), m <= n
  for (std::size_t m = 1; 2 * m <= d; ++m)
    for (std::size_t n = m; m + n <= d; ++n) pieces.push_back({m, n, closed_kd_minus_kmn(d, m, n) - full});

  // best[budget][k]: max total gain using pieces with index >= k within
  // the vertex budget (stopping is always allowed, gain 0).
  const std::size_t np = pieces.size();
  std::vector<std::vector<Int128>> best(d + 1, std::vector<Int128>(np + 1, 0));
  for (std::size_t budget = 0; budget <= d; ++budget)
    for (std::size_t k = np; k-- > 0;) {
      Int128 v = best[budget][k + 1];
      const auto& p = pieces[k];
      if (p.m + p.n <= budget) v = std::max(v, p.gain + best[budget - p.m - p.n][k]);
      best[budget][k] = v;
    }

  ComponentOptimum out;
  out.value = full + best[d][0];
  // Greedy reconstruction: stop when nothing more is gained, otherwise take
  // the smallest piece that keeps the optimum.
  std::size_t budget = d, k = 0;
  Int128 remaining = best[d][0];
  while (remaining != 0) {
    for (std::size_t j = k; j < np; ++j) {
      const auto& p = pieces[j];
      if (p.m + p.n <= budget && p.gain + best[budget - p.m - p.n][j] == remaining) {
        out.parts.emplace_back(p.m, p.n);
        remaining -= p.gain;
        budget -= p.m + p.n;
        k = j;
        break;
      }
    }
  }
  return out;
}

}  // namespace edgepoly
