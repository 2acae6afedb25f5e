#include "edgepoly/verify.hpp"

#include <cmath>
#include <exception>
#include <functional>
#include <sstream>

#include "edgepoly/epsilon.hpp"
#include "edgepoly/random.hpp"
#include "edgepoly/search.hpp"

namespace edgepoly {

namespace {

struct Outcome {
  std::string expected;
  std::string actual;
  bool passed;
};

ClaimResult run(std::string id, std::string description, const std::function<Outcome()>& check) {
  ClaimResult r{std::move(id), std::move(description), "", "", false};
  try {
    auto o = check();
    r.expected = std::move(o.expected);
    r.actual = std::move(o.actual);
    r.passed = o.passed;
  } catch (const std::exception& e) {
    r.actual = std::string("error: ") + e.what();
  }
  return r;
}

Graph kd_minus_kmn(std::size_t d, std::size_t m, std::size_t n) {
  std::vector<Vertex> embed(m + n);
  for (Vertex i = 0; i < embed.size(); ++i) embed[i] = i;
  return subtract(complete(d), complete_bipartite(m, n), embed);
}

}  // namespace

std::vector<ClaimResult> verify_claims() {
  std::vector<ClaimResult> out;

  out.push_back(run("1", "exhaustive d=3..7: K_d is the unique maximizer", [] {
    std::ostringstream actual;
    bool ok = true;
    for (std::size_t d = 3; d <= 7; ++d) {
      const auto r = exhaustive(d);
      const bool unique = r.incumbents.size() == 1 && r.incumbents.front() == complete(d);
      ok = ok && unique && r.best_eps == epsilon_complete(d);
      actual << (d > 3 ? " " : "") << "mu_" << d << "=" << to_string(r.best_eps) << (unique ? "" : "(not unique K_d)");
    }
    return Outcome{"mu_d = d(d-1)(d-2)/2, sole incumbent K_d", actual.str(), ok};
  }));

  out.push_back(run("2", "closed forms eps(K_d), eps(K_{m,n}) match direct count, d <= 12", [] {
    std::size_t mismatches = 0, checked = 0;
    for (std::size_t d = 3; d <= 12; ++d, ++checked)
      mismatches += epsilon_direct(complete(d)).epsilon != epsilon_complete(d);
    for (std::size_t m = 1; m <= 12; ++m)
      for (std::size_t n = m; m + n <= 12; ++n) {
        if (m + n < 3) continue;
        ++checked;
        mismatches += epsilon_direct(complete_bipartite(m, n)).epsilon != epsilon_complete_bipartite(m, n);
      }
    return Outcome{"0 mismatches", std::to_string(mismatches) + " mismatches in " + std::to_string(checked),
                   mismatches == 0};
  }));

  out.push_back(run("3", "d=14: ties with K_14 among complete-bipartite removals", [] {
    const bool direct = epsilon_direct(kd_minus_kmn(14, 4, 5)).epsilon == 1092 &&
                        epsilon_direct(kd_minus_kmn(14, 5, 5)).epsilon == 1092;
    std::ostringstream ties;
    bool exceeded = false;
    for (std::size_t m = 1; m <= 7; ++m)
      for (std::size_t n = m; m + n <= 14; ++n) {
        const auto v = closed_kd_minus_kmn(14, m, n);
        if (v == 1092) ties << "(" << m << "," << n << ")";
        exceeded = exceeded || v > 1092;
      }
    const std::string t = ties.str();
    return Outcome{"(4,5)(5,5), none above 1092", t + (exceeded ? ", exceeded" : ""),
                   direct && !exceeded && t == "(4,5)(5,5)"};
  }));

  out.push_back(run("4", "eps(K_15 - K_{5,5}) = eps(K_15) + 50", [] {
    const auto v = epsilon_direct(kd_minus_kmn(15, 5, 5)).epsilon;
    return Outcome{"1415", to_string(v), v == 1415 && closed_kd_minus_kmn(15, 5, 5) == 1415};
  }));

  out.push_back(run("5", "20-vertex fixture and complete-bipartite-component optimum", [] {
    const auto g = epsilon_direct(fixture_g_prime()).epsilon;
    const auto best = max_complete_bipartite_components(20).value;
    return Outcome{"(4203, 4176)", "(" + to_string(g) + ", " + to_string(best) + ")", g == 4203 && best == 4176};
  }));

  out.push_back(run("6", "triangle upper bound dominates eps on 1000 seeded graphs, 5 <= d <= 20", [] {
    std::size_t violations = 0, equal_nonempty = 0;
    for (std::uint64_t i = 0; i < 1000; ++i) {
      auto rng = SplitMix64::stream(0xB0B, i);
      const std::size_t d = 5 + rng.below(16);
      const Graph g = gnp_graph(d, 0.5 + 0.5 * rng.uniform(), rng);
      if (g.edge_count() == 0) continue;
      const Rational bound = triangle_upper_bound(g);
      const Rational eps{epsilon_direct(g).epsilon};
      violations += bound < eps;
      equal_nonempty += bound == eps && g.edge_count() != d * (d - 1) / 2;
    }
    return Outcome{"0 violations, equality only for K_d",
                   std::to_string(violations) + " violations, " + std::to_string(equal_nonempty) + " other equalities",
                   violations == 0 && equal_nonempty == 0};
  }));

  out.push_back(run("7", "Monte Carlo matches exact expectation, d=60, p=3-sqrt5, 200 samples", [] {
    RandomModelSpec spec;
    spec.kind = ModelKind::complement_bipartite;
    spec.d = 60;
    spec.p = 3 - std::sqrt(5.0);
    spec.seed = 42;
    spec.samples = 200;
    const auto r = monte_carlo(spec);
    const double gap = std::abs(r.mean - *r.exact_expectation);
    std::ostringstream actual;
    actual << "mean " << r.mean << ", exact " << *r.exact_expectation << ", " << gap / r.std_error << " sigma";
    return Outcome{"|mean - exact| <= 4 sigma", actual.str(), gap <= 4 * r.std_error};
  }));

  return out;
}

}  // namespace edgepoly
