#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "edgepoly/graph.hpp"

namespace edgepoly {

/// SplitMix64. Streams for sample `index` of seed `seed` start from
/// state = mix(seed) ^ mix(index + kStreamOffset), so every sample is a pure
/// function of (seed, index).
class SplitMix64 {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;
  static constexpr std::uint64_t kStreamOffset = 0xD1B54A32D192ED03ull;

  explicit SplitMix64(std::uint64_t state) : state_(state) {}
  static SplitMix64 stream(std::uint64_t seed, std::uint64_t index);
  static std::uint64_t mix(std::uint64_t z);

  std::uint64_t next();
  /// Uniform on [0, 1) with 53 bits: (next() >> 11) * 2^-53.
  double uniform();
  /// Uniform integer on [0, n).
  std::uint64_t below(std::uint64_t n);

  // UniformRandomBitGenerator interface.
  using result_type = std::uint64_t;
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }
  result_type operator()() { return next(); }

 private:
  std::uint64_t state_;
};

/// One G(d, p) draw consuming C(d,2) uniforms in lexicographic pair order.
Graph gnp_graph(std::size_t d, double p, SplitMix64& rng);

enum class ModelKind { gnp, subgraph_p, complement_bipartite };

struct RandomModelSpec {
  ModelKind kind = ModelKind::gnp;
  std::size_t d = 0;
  double p = 0.5;
  std::optional<Graph> host;  // subgraph_p only
  std::uint64_t seed = 0;
  std::size_t samples = 1;
};

/// Throws std::invalid_argument when the model parameters are inconsistent.
void validate(const RandomModelSpec& spec);

Graph sample(const RandomModelSpec& spec, std::size_t index);

struct EstimateReport {
  double mean = 0;
  double std_error = 0;
  std::size_t samples = 0;
  double normalized = 0;  // mean / d^4
  std::optional<double> exact_expectation;
};

/// Mean edge-polytope edge count over spec.samples draws. Edgeless draws
/// score 0.
EstimateReport monte_carlo(const RandomModelSpec& spec);

/// Exact expectation of eps(K_d - G(K_{d/2,d/2}, p)), d even.
double exact_expected_epsilon_cb(std::size_t d, double p);

/// d^4 coefficient of the expectation above: p^2 (p^2 - 8p + 8) / 64.
double cb_leading_coefficient(double p);

std::vector<std::pair<double, double>> coefficient_curve(const std::vector<double>& p_grid);

}  // namespace edgepoly
