#include "edgepoly/random.hpp"

#include <cmath>
#include <stdexcept>

#include "edgepoly/epsilon.hpp"
#include "edgepoly/parallel.hpp"

namespace edgepoly {

std::uint64_t SplitMix64::mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

SplitMix64 SplitMix64::stream(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(mix(seed) ^ mix(index + kStreamOffset));
}

std::uint64_t SplitMix64::next() {
  state_ += kGamma;
  return mix(state_);
}

double SplitMix64::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t SplitMix64::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("below(0)");
  // Rejection sampling keeps the draw exactly uniform.
  const std::uint64_t limit = max() - max() % n;
  std::uint64_t x;
  do x = next();
  while (x >= limit);
  return x % n;
}

Graph gnp_graph(std::size_t d, double p, SplitMix64& rng) {
  GraphBuilder b(d);
  for (Vertex u = 0; u < d; ++u)
    for (Vertex v = u + 1; v < d; ++v)
      if (rng.uniform() < p) b.add_edge(u, v);
  return b.build();
}

void validate(const RandomModelSpec& spec) {
  if (!(spec.p > 0 && spec.p < 1)) throw std::invalid_argument("p must lie in (0, 1)");
  if (spec.samples == 0) throw std::invalid_argument("samples must be positive");
  switch (spec.kind) {
    case ModelKind::gnp:
      if (spec.d < 3) throw std::invalid_argument("d must be at least 3");
      break;
    case ModelKind::subgraph_p:
      if (!spec.host) throw std::invalid_argument("subgraph_p needs a host graph");
      if (spec.host->order() < 3) throw std::invalid_argument("d must be at least 3");
      if (spec.d != 0 && spec.d != spec.host->order())
        throw std::invalid_argument("d does not match the host graph");
      break;
    case ModelKind::complement_bipartite:
      if (spec.d < 4 || spec.d % 2 != 0) throw std::invalid_argument("complement_bipartite needs even d >= 4");
      break;
  }
}

Graph sample(const RandomModelSpec& spec, std::size_t index) {
  validate(spec);
  if (index >= spec.samples) throw std::invalid_argument("sample index out of range");
  auto rng = SplitMix64::stream(spec.seed, index);
  switch (spec.kind) {
    case ModelKind::gnp:
      return gnp_graph(spec.d, spec.p, rng);
    case ModelKind::subgraph_p: {
      GraphBuilder b(spec.host->order());
      for (const auto& e : spec.host->edges())
        if (rng.uniform() < spec.p) b.add_edge(e.u, e.v);
      return b.build();
    }
    case ModelKind::complement_bipartite: {
      GraphBuilder b(complete(spec.d));
      const auto m = static_cast<Vertex>(spec.d / 2);
      for (Vertex u = 0; u < m; ++u)
        for (Vertex v = m; v < 2 * m; ++v)
          if (rng.uniform() < spec.p) b.remove_edge(u, v);
      return b.build();
    }
  }
  throw std::invalid_argument("unknown model");
}

EstimateReport monte_carlo(const RandomModelSpec& spec) {
  validate(spec);
  if (spec.samples < 2) throw std::invalid_argument("monte_carlo needs at least 2 samples");
  std::vector<double> values(spec.samples);
  parallel_for(spec.samples, [&](std::size_t i) {
    const Graph g = sample(spec, i);
    values[i] = g.edge_count() == 0 ? 0.0 : static_cast<double>(epsilon_direct(g).epsilon);
  });

  // Sequential in index order: identical for any worker count.
  const auto n = static_cast<double>(values.size());
  double sum = 0;
  for (double v : values) sum += v;
  const double mean = sum / n;
  double ss = 0;
  for (double v : values) ss += (v - mean) * (v - mean);

  EstimateReport r;
  r.samples = spec.samples;
  r.mean = mean;
  r.std_error = std::sqrt(ss / (n - 1)) / std::sqrt(n);
  const std::size_t d = spec.kind == ModelKind::subgraph_p ? spec.host->order() : spec.d;
  r.normalized = mean / std::pow(static_cast<double>(d), 4);
  if (spec.kind == ModelKind::complement_bipartite) r.exact_expectation = exact_expected_epsilon_cb(spec.d, spec.p);
  return r;
}

double exact_expected_epsilon_cb(std::size_t d, double p) {
  if (d < 4 || d % 2 != 0) throw std::invalid_argument("d must be even and at least 4");
  if (!(p > 0 && p < 1)) throw std::invalid_argument("p must lie in (0, 1)");
  const double m = static_cast<double>(d / 2);
  const double q = 1 - p;  // a cross pair survives in the complement-of-random graph
  const double pairs_m = m * (m - 1) / 2;
  // Shared endpoint: three centers/partner layouts.
  const double shared = m * (m - 1) * (m - 2) + 2 * m * m * (m - 1) * q + m * m * (m - 1) * q * q;
  // Disjoint: one edge inside each part, no crossing matching survives.
  const double both_inside = pairs_m * pairs_m * std::pow(1 - q * q, 2);
  // Disjoint: one cross edge, one edge inside the far part.
  const double one_cross = m * m * (m - 1) * (m - 2) * q * p * p;
  return shared + both_inside + one_cross;
}

double cb_leading_coefficient(double p) {
  if (!(p >= 0 && p <= 1)) throw std::invalid_argument("p must lie in [0, 1]");
  return p * p * (p * p - 8 * p + 8) / 64;
}

std::vector<std::pair<double, double>> coefficient_curve(const std::vector<double>& p_grid) {
  std::vector<std::pair<double, double>> out;
  out.reserve(p_grid.size());
  for (double p : p_grid) out.emplace_back(p, cb_leading_coefficient(p));
  return out;
}

}  // namespace edgepoly
