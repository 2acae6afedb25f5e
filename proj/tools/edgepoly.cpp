// edgepoly: edge counts of edge polytopes from the command line.
//
// Every verb prints one JSON object on stdout (verify and search print one
// JSON line per claim / report). Input errors exit 1 with a one-line
// diagnostic on stderr; verify exits 2 when a claim fails.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "edgepoly/census.hpp"
#include "edgepoly/epsilon.hpp"
#include "edgepoly/graph.hpp"
#include "edgepoly/parallel.hpp"
#include "edgepoly/random.hpp"
#include "edgepoly/search.hpp"
#include "edgepoly/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace edgepoly;

json json_int(Int128 v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return to_string(v);
}

json edge_list(const Graph& g) {
  json out = json::array();
  for (const auto& e : g.edges()) out.push_back({e.u + 1, e.v + 1});
  return out;
}

struct FamilyArgs {
  std::string family;
  std::size_t d = 0, m = 0, n = 0;
};

void add_family_flags(CLI::App* cmd, FamilyArgs& f) {
  cmd->add_option("--family", f.family, "kd | kmn | cycle | path | empty | kd-minus-kmn");
  cmd->add_option("--d", f.d, "vertex count (kd, empty, kd-minus-kmn)");
  cmd->add_option("--m", f.m, "first part size (kmn, kd-minus-kmn)");
  cmd->add_option("--n", f.n, "second part size, or size of cycle/path");
}

Graph build_family(const FamilyArgs& f) {
  if (f.family == "kd") return complete(f.d);
  if (f.family == "kmn") return complete_bipartite(f.m, f.n);
  if (f.family == "cycle") return cycle(f.n);
  if (f.family == "path") return path(f.n);
  if (f.family == "empty") return empty(f.d);
  if (f.family == "kd-minus-kmn") {
    if (f.m + f.n > f.d) throw std::invalid_argument("m + n exceeds d");
    std::vector<Vertex> embed(f.m + f.n);
    for (Vertex i = 0; i < embed.size(); ++i) embed[i] = i;
    return subtract(complete(f.d), complete_bipartite(f.m, f.n), embed);
  }
  throw std::invalid_argument("unknown family: " + f.family);
}

Graph read_graph(const std::string& file) {
  std::string text;
  if (file.empty() || file == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot open " + file);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return parse_edge_list(text);
}

struct GraphInput {
  std::string file;
  FamilyArgs family;

  Graph load() const { return family.family.empty() ? read_graph(file) : build_family(family); }
};

void add_graph_input(CLI::App* cmd, GraphInput& in) {
  cmd->add_option("file", in.file, "edge-list file, '-' or omitted for stdin");
  add_family_flags(cmd, in.family);
}

double parse_probability(const std::string& token) {
  if (token == "1/sqrt3") return 1 / std::sqrt(3.0);
  if (token == "3-sqrt5") return 3 - std::sqrt(5.0);
  std::size_t used = 0;
  const double p = std::stod(token, &used);
  if (used != token.size()) throw std::invalid_argument("malformed probability: " + token);
  return p;
}

std::pair<std::int64_t, std::int64_t> parse_fraction(const std::string& token) {
  const auto slash = token.find('/');
  if (slash == std::string::npos) return {std::stoll(token), 1};
  return {std::stoll(token.substr(0, slash)), std::stoll(token.substr(slash + 1))};
}

json report_json(const SearchReport& r) {
  json params = json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  json inc = json::array();
  for (const auto& g : r.incumbents) inc.push_back(edge_list(complement(g)));
  return json{{"d", r.d},
              {"mode", to_string(r.mode)},
              {"best_eps", json_int(r.best_eps)},
              {"exact", r.exact()},
              {"meaning", r.exact() ? "mu_d" : "lower bound for mu_d"},
              {"evaluated", r.evaluated},
              {"seed", r.seed},
              {"parameters", params},
              {"incumbent_complements", inc}};
}

void print_search_table(const SearchReport& r) {
  std::cout << "mode        d   best_eps  eps(K_d)  evaluated   incumbents\n"
            << std::left << std::setw(12) << to_string(r.mode).substr(0, 11) << std::setw(4) << r.d << std::setw(10)
            << to_string(r.best_eps) << std::setw(10) << to_string(epsilon_complete(r.d)) << std::setw(12)
            << r.evaluated << r.incumbents.size() << "\n"
            << (r.exact() ? "best_eps is mu_d\n" : "best_eps is a lower bound for mu_d\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge counts of edge polytopes of finite simple graphs"};
  app.require_subcommand(1, 1);
  std::size_t threads = 0;
  app.add_option("--threads", threads, "worker threads (default: EDGEPOLY_THREADS or all cores)");

  GraphInput eps_in;
  std::string eps_method = "direct";
  auto* eps_cmd = app.add_subcommand("eps", "count edges of the edge polytope");
  add_graph_input(eps_cmd, eps_in);
  eps_cmd->add_option("--method", eps_method, "direct | complement | components")
      ->check(CLI::IsMember({"direct", "complement", "components"}));

  GraphInput census_in;
  bool census_of_complement = false;
  auto* census_cmd = app.add_subcommand("census", "induced-subgraph census of the input graph");
  add_graph_input(census_cmd, census_in);
  census_cmd->add_flag("--complement", census_of_complement, "census the complement instead");

  GraphInput bound_in;
  auto* bound_cmd = app.add_subcommand("bound", "triangle-weighted upper bound as an exact fraction");
  add_graph_input(bound_cmd, bound_in);

  std::string closed_form = "kd-minus-kmn", closed_a = "0";
  std::size_t closed_d = 0, closed_m = 0, closed_n = 0;
  auto* closed_cmd = app.add_subcommand("closed", "closed-form counts");
  closed_cmd->add_option("--form", closed_form, "kd-minus-kmn | two-bipartite | components")
      ->check(CLI::IsMember({"kd-minus-kmn", "two-bipartite", "components"}));
  closed_cmd->add_option("--d", closed_d)->required();
  closed_cmd->add_option("--m", closed_m);
  closed_cmd->add_option("--n", closed_n);
  closed_cmd->add_option("--a", closed_a, "block fraction for two-bipartite, e.g. 1/4");

  std::string model = "gnp", prob = "0.5";
  std::size_t rd = 0, samples = 100;
  std::uint64_t rseed = 1;
  auto* random_cmd = app.add_subcommand("random", "Monte Carlo estimate of eps for a random model");
  random_cmd->add_option("--model", model, "gnp | cb")->check(CLI::IsMember({"gnp", "cb"}));
  random_cmd->add_option("--d", rd)->required();
  random_cmd->add_option("--p", prob, "probability; accepts 1/sqrt3 and 3-sqrt5");
  random_cmd->add_option("--samples", samples);
  random_cmd->add_option("--seed", rseed);

  std::string mode = "bipartite_local";
  std::size_t sd = 0, restarts = 20, steps = 0;
  std::uint64_t sseed = 1;
  double t_start = 50.0, t_end = 0.5;
  bool allow_slow = false, pretty = false, no_warm = false, progress = false;
  auto* search_cmd = app.add_subcommand("search", "search for graphs maximizing eps");
  search_cmd->add_option("--d", sd)->required();
  search_cmd->add_option("--mode", mode, "exhaustive | bipartite_local | anneal")
      ->check(CLI::IsMember({"exhaustive", "bipartite_local", "anneal"}));
  search_cmd->add_option("--seed", sseed);
  search_cmd->add_option("--restarts", restarts, "restarts (local) or chains (anneal)");
  search_cmd->add_option("--steps", steps, "max improving moves (local) or schedule length (anneal)");
  search_cmd->add_option("--t-start", t_start);
  search_cmd->add_option("--t-end", t_end);
  search_cmd->add_flag("--allow-slow", allow_slow, "permit exhaustive d = 8");
  search_cmd->add_flag("--no-warm-start", no_warm, "do not seed d = 20 with the 4203 fixture");
  search_cmd->add_flag("--pretty", pretty, "append a human summary table");
  search_cmd->add_flag("--progress", progress, "emit one JSON line per restart/chain before the report");

  bool verify_pretty = false;
  auto* verify_cmd = app.add_subcommand("verify", "re-derive every headline value");
  verify_cmd->add_flag("--pretty", verify_pretty);

  FamilyArgs gen_family;
  std::string fixture;
  auto* gen_cmd = app.add_subcommand("gen", "print a graph in edge-list format");
  add_family_flags(gen_cmd, gen_family);
  gen_cmd->add_option("--fixture", fixture, "g_prime");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  if (threads == 0)
    if (const char* env = std::getenv("EDGEPOLY_THREADS")) threads = std::strtoull(env, nullptr, 10);
  set_thread_count(threads);

  try {
    if (*eps_cmd) {
      const Graph g = eps_in.load();
      if (eps_method == "direct") {
        const auto b = epsilon_direct(g);
        std::cout << json{{"epsilon", json_int(b.epsilon)},
                          {"shared", json_int(b.shared)},
                          {"disjoint_ok", json_int(b.disjoint_ok)}}
                  << "\n";
      } else {
        const Int128 v = eps_method == "complement" ? epsilon_via_complement(g) : epsilon_by_components(g);
        std::cout << json{{"epsilon", json_int(v)}, {"method", eps_method}} << "\n";
      }
    } else if (*census_cmd) {
      Graph h = census_in.load();
      if (census_of_complement) h = complement(h);
      const auto c = census(h);
      std::cout << json{{"edge_count", c.edge_count}, {"sum_deg_sq", c.sum_deg_sq}, {"k3", c.k3},
                        {"a", c.a}, {"b", c.b}, {"c", c.c}, {"psi", c.psi}}
                << "\n";
    } else if (*bound_cmd) {
      const auto r = triangle_upper_bound(bound_in.load());
      std::cout << json{{"bound_num", json_int(r.num)}, {"bound_den", json_int(r.den)}} << "\n";
    } else if (*closed_cmd) {
      if (closed_form == "kd-minus-kmn") {
        std::cout << json{{"epsilon", json_int(closed_kd_minus_kmn(closed_d, closed_m, closed_n))}} << "\n";
      } else if (closed_form == "two-bipartite") {
        const auto [num, den] = parse_fraction(closed_a);
        std::cout << json{{"epsilon", json_int(closed_two_bipartite(closed_d, num, den))}} << "\n";
      } else {
        const auto best = max_complete_bipartite_components(closed_d);
        json parts = json::array();
        for (const auto& [m, n] : best.parts) parts.push_back({m, n});
        std::cout << json{{"epsilon", json_int(best.value)}, {"parts", parts}} << "\n";
      }
    } else if (*random_cmd) {
      RandomModelSpec spec;
      spec.kind = model == "cb" ? ModelKind::complement_bipartite : ModelKind::gnp;
      spec.d = rd;
      spec.p = parse_probability(prob);
      spec.samples = samples;
      spec.seed = rseed;
      const auto r = monte_carlo(spec);
      json out{{"model", model}, {"d", rd},           {"p", spec.p},
               {"seed", rseed},  {"mean", r.mean},     {"std_error", r.std_error},
               {"samples", r.samples}, {"normalized", r.normalized}};
      out["exact_expectation"] = r.exact_expectation ? json(*r.exact_expectation) : json(nullptr);
      std::cout << out << "\n";
    } else if (*search_cmd) {
      std::vector<Graph> warm;
      if (sd == 20 && !no_warm) warm.push_back(complement(fixture_g_prime()));
      SearchReport r;
      if (mode == "exhaustive") {
        r = exhaustive(sd, allow_slow);
      } else if (mode == "bipartite_local") {
        LocalSearchOptions opt;
        opt.seed = sseed;
        opt.restarts = restarts;
        if (steps > 0) opt.max_steps = steps;
        opt.warm_starts = warm;
        r = bipartite_local(sd, opt);
      } else {
        AnnealOptions opt;
        opt.seed = sseed;
        opt.chains = restarts;
        opt.schedule = {t_start, t_end, steps > 0 ? steps : AnnealSchedule{}.steps};
        opt.warm_starts = warm;
        r = anneal(sd, opt);
      }
      if (progress)
        for (std::size_t i = 0; i < r.chain_best.size(); ++i)
          std::cout << json{{"chain", i}, {"best_eps", json_int(r.chain_best[i])}} << "\n";
      std::cout << report_json(r) << "\n";
      if (pretty) print_search_table(r);
    } else if (*verify_cmd) {
      const auto claims = verify_claims();
      bool all = true;
      for (const auto& c : claims) {
        all = all && c.passed;
        std::cout << json{{"claim", c.id}, {"description", c.description}, {"expected", c.expected},
                          {"actual", c.actual}, {"pass", c.passed}}
                  << "\n";
      }
      if (verify_pretty)
        for (const auto& c : claims)
          std::cout << (c.passed ? "PASS " : "FAIL ") << c.id << "  " << c.description << "\n"
                    << "       expected " << c.expected << "\n       actual   " << c.actual << "\n";
      return all ? 0 : 2;
    } else if (*gen_cmd) {
      if (!fixture.empty()) {
        if (fixture != "g_prime") throw std::invalid_argument("unknown fixture: " + fixture);
        std::cout << serialize(fixture_g_prime());
      } else {
        std::cout << serialize(build_family(gen_family));
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
