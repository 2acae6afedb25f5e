#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <sstream>
#include <vector>

#include <json.hpp>

#include "cli_runner.hpp"
#include "edgepoly/graph.hpp"

using edgepoly::testing::run_cli;
using nlohmann::json;

TEST_CASE("eps on a named family") {
  const auto r = run_cli("edgepoly eps --family kd --d 14");
  REQUIRE(r.exit_code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["epsilon"] == 1092);
  CHECK(j["shared"] == 1092);
  CHECK(j["disjoint_ok"] == 0);
}

TEST_CASE("gen piped into eps") {
  const auto r = run_cli("edgepoly gen --fixture g_prime | edgepoly eps");
  REQUIRE(r.exit_code == 0);
  CHECK(json::parse(r.out)["epsilon"] == 4203);
  for (const char* method : {"complement", "components"}) {
    const auto m = run_cli(std::string("edgepoly gen --fixture g_prime | edgepoly eps --method ") + method);
    CHECK(json::parse(m.out)["epsilon"] == 4203);
  }
}

TEST_CASE("gen output") {
  const auto kmn = edgepoly::parse_edge_list(run_cli("edgepoly gen --family kmn --m 5 --n 5").out);
  CHECK(kmn.order() == 10);
  CHECK(kmn.edge_count() == 25);
  const auto gp = edgepoly::parse_edge_list(run_cli("edgepoly gen --fixture g_prime").out);
  CHECK(gp.order() == 20);
  CHECK(gp.edge_count() == 120);
  const auto kd = edgepoly::parse_edge_list(run_cli("edgepoly gen --family kd-minus-kmn --d 14 --m 4 --n 5").out);
  CHECK(kd.edge_count() == 71);
  CHECK(run_cli("edgepoly gen --fixture unknown").exit_code == 1);
  CHECK(run_cli("edgepoly gen --family nope --d 3").exit_code == 1);
}

TEST_CASE("input errors exit 1 with a one-line diagnostic") {
  const auto r = run_cli("printf '5\\n1 2\\n2 7\\n' | edgepoly eps");
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("vertex out of range, line 3") != std::string::npos);
  CHECK(r.err.find('\n') == r.err.size() - 1);
  CHECK(run_cli("edgepoly eps --family kd --d 14 --unknown-flag").exit_code == 1);
  CHECK(run_cli("edgepoly eps /nonexistent/file").exit_code == 1);
  CHECK(run_cli("edgepoly eps --family empty --d 4").exit_code == 1);
  CHECK(run_cli("edgepoly closed --d 8 --m 5 --n 5").exit_code == 1);
  CHECK(run_cli("edgepoly search --d 8 --mode exhaustive").exit_code == 1);
  CHECK(run_cli("edgepoly").exit_code == 1);
}

TEST_CASE("census, bound and closed") {
  const auto c = json::parse(run_cli("edgepoly census --family cycle --n 4").out);
  CHECK(c["b"] == 1);
  CHECK(c["psi"] == 4);
  CHECK(c["edge_count"] == 4);
  const auto cc = json::parse(run_cli("edgepoly census --complement --family kd-minus-kmn --d 6 --m 2 --n 2").out);
  CHECK(cc["b"] == 1);
  CHECK(cc["c"] == 8);

  const auto b = json::parse(run_cli("edgepoly gen --family kd-minus-kmn --d 14 --m 1 --n 1 | edgepoly bound").out);
  CHECK(b["bound_num"] == 1092 * 7 + 1);
  CHECK(b["bound_den"] == 7);

  CHECK(json::parse(run_cli("edgepoly closed --d 15 --m 5 --n 5").out)["epsilon"] == 1415);
  CHECK(json::parse(run_cli("edgepoly closed --form components --d 20").out)["epsilon"] == 4176);
}

TEST_CASE("random accepts the literal probability tokens") {
  const auto r = json::parse(run_cli("edgepoly random --model cb --d 20 --p 3-sqrt5 --samples 20 --seed 4").out);
  CHECK(r["p"].get<double>() == doctest::Approx(0.7639320225002102));
  CHECK(r["samples"] == 20);
  CHECK_FALSE(r["exact_expectation"].is_null());
  const auto g = json::parse(run_cli("edgepoly random --model gnp --d 12 --p 1/sqrt3 --samples 5").out);
  CHECK(g["exact_expectation"].is_null());
  CHECK(run_cli("edgepoly random --model cb --d 21 --p 0.5").exit_code == 1);
  CHECK(run_cli("edgepoly random --d 12 --p 2").exit_code == 1);
}

TEST_CASE("search reports label heuristic results as lower bounds") {
  const auto ex = json::parse(run_cli("edgepoly search --d 5 --mode exhaustive").out);
  CHECK(ex["best_eps"] == 30);
  CHECK(ex["exact"] == true);
  const auto loc = json::parse(run_cli("edgepoly search --d 20 --restarts 2 --seed 3").out);
  CHECK(loc["exact"] == false);
  CHECK(loc["best_eps"].get<int>() >= 4203);
  CHECK(loc["meaning"] == "lower bound for mu_d");

  const auto prog = run_cli("edgepoly search --d 10 --restarts 3 --progress").out;
  std::vector<json> lines;
  std::istringstream in(prog);
  for (std::string line; std::getline(in, line);) lines.push_back(json::parse(line));
  REQUIRE(lines.size() == 4);
  CHECK(lines[0]["chain"] == 0);
  CHECK(lines[3]["mode"] == "bipartite_local");
}

TEST_CASE("seeded commands are byte-identical across thread counts") {
  for (const std::string cmd :
       {"random --model cb --d 40 --p 3-sqrt5 --samples 30 --seed 9", "search --d 12 --restarts 5 --seed 2",
        "search --d 12 --mode anneal --restarts 3 --steps 3000 --seed 2", "search --d 6 --mode exhaustive"}) {
    const auto one = run_cli("edgepoly --threads 1 " + cmd);
    const auto many = run_cli("edgepoly --threads 4 " + cmd);
    const auto env = run_cli("EDGEPOLY_THREADS=3 edgepoly " + cmd);
    REQUIRE(one.exit_code == 0);
    CHECK(one.out == many.out);
    CHECK(one.out == env.out);
  }
}

TEST_CASE("verify passes") {
  const auto r = run_cli("edgepoly verify");
  CHECK(r.exit_code == 0);
  std::size_t lines = 0;
  for (char ch : r.out) lines += ch == '\n';
  CHECK(lines == 7);
}
