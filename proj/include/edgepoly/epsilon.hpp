#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "edgepoly/graph.hpp"
#include "edgepoly/integer.hpp"

namespace edgepoly {

/// Count of 1-faces of the edge polytope, split by how the two polytope
/// vertices (graph edges) relate: sharing an endpoint, or disjoint with no
/// 4-cycle on their four endpoints.
struct EpsilonBreakdown {
  Int128 shared = 0;
  Int128 disjoint_ok = 0;
  Int128 epsilon = 0;
};

/// Pairwise criterion over all unordered edge pairs. Requires >= 1 edge.
EpsilonBreakdown epsilon_direct(const Graph& g);

/// Count from the complement census (two algebraically equal forms, both
/// evaluated and cross-checked). Requires >= 1 edge.
Int128 epsilon_via_complement(const Graph& g);

/// Sum of per-component deficits of the complement. Requires >= 1 edge.
Int128 epsilon_by_components(const Graph& g);

/// The complement-census count with H given directly; defined for any H,
/// and 0 when K_d - H is edgeless.
Int128 epsilon_from_complement(const Graph& h);

Int128 epsilon_complete(std::size_t d);
Int128 epsilon_complete_bipartite(std::size_t m, std::size_t n);

/// phi(d) = eps(K_d - H) - eps(K_d) for d >= anchor_d.
struct LinearForm {
  Int128 slope = 0;
  std::size_t anchor_d = 0;
  Int128 anchor_value = 0;

  Int128 evaluate(std::size_t d) const;
};

/// Edgeless h yields the zero form.
LinearForm epsilon_linear(const Graph& h);

Int128 closed_kd_minus_kmn(std::size_t d, std::size_t m, std::size_t n);

/// eps(K_d - K_{ad,ad} - K_{(d/2-ad),(d/2-ad)}) with a = a_num / a_den.
Int128 closed_two_bipartite(std::size_t d, std::int64_t a_num, std::int64_t a_den);

/// Leading d^4 coefficient of the two-block family as a function of a.
double g_of_a(double a);
Rational g_of_a(const Rational& a);

struct GMaximum {
  double a_low = 0;   // (7 - sqrt 21) / 28
  double a_high = 0;  // (7 + sqrt 21) / 28
  double value = 0;   // g at either point, 9/448
};
GMaximum g_argmax();

/// eps(K_d) + (d^2 - 16d + 29)/7 |E(H)| - 3(d - 8)/7 k3(H), H the complement.
/// Never below epsilon_direct(g). Requires d >= 3.
Rational triangle_upper_bound(const Graph& g);

struct ComponentOptimum {
  Int128 value = 0;
  std::vector<std::pair<std::size_t, std::size_t>> parts;  // sorted (m <= n)
};

/// Best eps(K_d - disjoint union of K_{m_i,n_i}) over all part-size
/// multisets; ties resolved to the lexicographically smallest sorted list.
ComponentOptimum max_complete_bipartite_components(std::size_t d);

}  // namespace edgepoly
