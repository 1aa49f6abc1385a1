#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "graphforge/cot.hpp"
#include "graphforge/graph.hpp"
#include "graphforge/solve.hpp"

using namespace graphforge;

namespace {

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1});
  return make_graph(n, false, false, std::move(edges));
}

}  // namespace

TEST_CASE("er generator matches spec bounds and determinism") {
  ErSpec spec{10, 0.3, false, std::nullopt};
  auto a = generate_er(spec, 42);
  auto b = generate_er(spec, 42);
  CHECK(a == b);
  CHECK(a.n == 10);
  CHECK_THROWS_AS(generate_er(ErSpec{5, 0.3, false, std::nullopt}, 1), ConfigError);
  CHECK_THROWS_AS(generate_er(ErSpec{10, 1.5, false, std::nullopt}, 1), ConfigError);
}

TEST_CASE("er statistics: mean edge count within 3 sigma") {
  // binomial with m = C(20,2) = 190 trials at p = 0.25
  const int reps = 10000;
  const double p = 0.25;
  const double m = 190.0;
  long long total = 0;
  for (int i = 0; i < reps; ++i) {
    total += generate_er(ErSpec{20, p, false, std::nullopt}, 1000 + i).edge_count();
  }
  double mean = static_cast<double>(total) / reps;
  double expect = m * p;                      // 47.5
  double sigma = std::sqrt(m * p * (1 - p));  // per draw
  double se = sigma / std::sqrt(static_cast<double>(reps));
  CHECK(std::abs(mean - expect) < 3 * se);
}

TEST_CASE("representation round trip, all kinds") {
  for (int i = 0; i < 50; ++i) {
    bool directed = i % 2 == 1;
    bool weighted = i % 3 == 0;
    ErSpec spec{6 + (i % 10), 0.15 + 0.05 * (i % 5), directed,
                weighted ? std::optional<std::pair<long long, long long>>({1, 10})
                         : std::nullopt};
    auto g = generate_er(spec, 7000 + i);
    for (auto kind : {RepresentationKind::edge_list, RepresentationKind::adjacency_list,
                      RepresentationKind::adjacency_matrix}) {
      auto text = render_representation(g, kind);
      ParseHints hints;
      hints.directed = g.directed;
      hints.weighted = g.weighted;
      auto back = parse_representation(text, kind, hints);
      CHECK(back == g);
    }
  }
}

TEST_CASE("pinned edge list surface forms") {
  auto g1 = make_graph(2, false, false, {{0, 1, 1}});
  CHECK(render_representation(g1, RepresentationKind::edge_list) ==
        "The nodes are numbered from 0 to 1, and the edges are: (0, 1).");
  auto g2 = make_graph(7, true, true, {{0, 6, 5}});
  auto text = render_representation(g2, RepresentationKind::edge_list);
  CHECK(text.find("(0->6,5)") != std::string::npos);
  auto g3 = make_graph(6, false, false, {});
  CHECK(render_representation(g3, RepresentationKind::adjacency_list) ==
        "{0: [], 1: [], 2: [], 3: [], 4: [], 5: []}");
}

TEST_CASE("parse error carries byte offset") {
  try {
    parse_representation("The nodes are numbered from 0 to 3, and the edges are: (0, x).",
                         RepresentationKind::edge_list);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset > 0);
  }
}

TEST_CASE("solve cycle on a triangle") {
  auto g = make_graph(6, false, false, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  ProblemInstance inst{TaskKind::cycle_detection, g, std::monostate{},
                       RepresentationKind::edge_list};
  auto solved = solve(inst);
  CHECK(std::get<bool>(solved.answer.v));
  REQUIRE(solved.witnesses.size() == 1);
  CHECK(validate_witness(inst, solved.answer, solved.witnesses[0]).ok);
}

TEST_CASE("hamilton path on a path graph") {
  auto g = path_graph(6);
  ProblemInstance inst{TaskKind::hamilton_path, g, std::monostate{},
                       RepresentationKind::edge_list};
  auto solved = solve(inst);
  CHECK(std::get<bool>(solved.answer.v));
  auto w = std::get<PathWitness>(solved.witnesses.at(0));
  CHECK(w.nodes == std::vector<int>{0, 1, 2, 3, 4, 5});
}
