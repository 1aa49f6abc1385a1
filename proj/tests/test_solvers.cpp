#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "golden_graphs.hpp"
#include "graphforge/solve.hpp"

using namespace graphforge;

TEST_CASE("golden: cycle example answers Yes with a valid cycle") {
  ProblemInstance inst{TaskKind::cycle_detection, golden::cycle_example(), std::monostate{},
                       RepresentationKind::edge_list};
  auto solved = solve(inst);
  CHECK(std::get<bool>(solved.answer.v));
  REQUIRE(!solved.witnesses.empty());
  CHECK(validate_witness(inst, solved.answer, solved.witnesses[0]).ok);
  // ascending DFS finds the same cycle the worked example names
  auto w = std::get<PathWitness>(solved.witnesses[0]);
  CHECK(w.nodes == std::vector<int>{0, 1, 2, 9, 0});
}

TEST_CASE("golden: shortest path 13 -> 14 has weight 23") {
  ProblemInstance inst{TaskKind::shortest_path, golden::shortest_path_example(),
                       PairParam{13, 14}, RepresentationKind::edge_list};
  auto solved = solve(inst);
  CHECK(std::get<long long>(solved.answer.v) == 23);
  auto w = std::get<PathWitness>(solved.witnesses.at(0));
  CHECK(w.nodes == std::vector<int>{13, 17, 16, 7, 14});
  CHECK(validate_witness(inst, solved.answer, solved.witnesses[0]).ok);
}

TEST_CASE("golden: bipartite example answers No") {
  ProblemInstance inst{TaskKind::bipartite_check, golden::bipartite_example(), std::monostate{},
                       RepresentationKind::edge_list};
  auto solved = solve(inst);
  CHECK_FALSE(std::get<bool>(solved.answer.v));
  REQUIRE(!solved.witnesses.empty());
  CHECK(validate_witness(inst, solved.answer, solved.witnesses[0]).ok);
}

TEST_CASE("golden: star matching has size 1 with pair (0, 1)") {
  ProblemInstance inst{TaskKind::maximum_matching, golden::matching_example(),
                       MatchingParam{{0}}, RepresentationKind::adjacency_list};
  auto solved = solve(inst);
  CHECK(std::get<long long>(solved.answer.v) == 1);
  auto pairs = std::get<PairList>(solved.witnesses.at(0));
  CHECK(pairs.pairs == std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("golden: no directed path means zero flow") {
  ProblemInstance inst{TaskKind::maximum_flow, golden::flow_example(), PairParam{0, 5},
                       RepresentationKind::edge_list};
  auto solved = solve(inst);
  CHECK(std::get<long long>(solved.answer.v) == 0);
}

TEST_CASE("single edge flow equals its capacity") {
  auto g = make_graph(6, true, true, {{0, 5, 7}});
  ProblemInstance inst{TaskKind::maximum_flow, g, PairParam{0, 5},
                       RepresentationKind::edge_list};
  auto solved = solve(inst);
  CHECK(std::get<long long>(solved.answer.v) == 7);
  CHECK(validate_witness(inst, solved.answer, solved.witnesses.at(0)).ok);
}

TEST_CASE("golden: collaboration network maximum clique") {
  ProblemInstance inst{TaskKind::maximum_clique, golden::clique_example(), std::monostate{},
                       RepresentationKind::edge_list};
  auto solved = solve(inst);
  CHECK(std::get<long long>(solved.answer.v) == 5);
  auto members = std::get<NodeSet>(solved.witnesses.at(0));
  CHECK(members.nodes == std::vector<int>{0, 1, 3, 5, 7});
}

TEST_CASE("golden: knowledge graph diameter is 4 with the named path") {
  ProblemInstance inst{TaskKind::diameter, golden::diameter_example(), std::monostate{},
                       RepresentationKind::edge_list};
  auto solved = solve(inst);
  CHECK(std::get<long long>(solved.answer.v) == 4);
  auto w = std::get<PathWitness>(solved.witnesses.at(0));
  CHECK(w.nodes == std::vector<int>{2, 3, 4, 0, 6});
}

TEST_CASE("topological sort of a chain is unique") {
  auto g = make_graph(4, true, false, {{0, 1}, {1, 2}, {2, 3}});
  ProblemInstance inst{TaskKind::topological_sort, g, std::monostate{},
                       RepresentationKind::edge_list};
  auto solved = solve(inst);
  CHECK(std::get<NodeSeq>(solved.answer.v).nodes == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("topological sort rejects cyclic input with a witness cycle") {
  auto g = make_graph(6, true, false, {{0, 1}, {1, 2}, {2, 0}});
  ProblemInstance inst{TaskKind::topological_sort, g, std::monostate{},
                       RepresentationKind::edge_list};
  try {
    solve(inst);
    FAIL("expected PreconditionError");
  } catch (const PreconditionError& e) {
    REQUIRE(e.witness_nodes.size() >= 4);
    CHECK(e.witness_nodes.front() == e.witness_nodes.back());
    // the witness must be a real directed cycle
    for (std::size_t i = 0; i + 1 < e.witness_nodes.size(); ++i) {
      CHECK(g.has_edge(e.witness_nodes[i], e.witness_nodes[i + 1]));
    }
  }
}

TEST_CASE("BFS from a star center visits ascending") {
  auto g = make_graph(6, false, false, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  ProblemInstance inst{TaskKind::graph_traversal, g, TraversalParam{0, TraversalMode::bfs},
                       RepresentationKind::edge_list};
  auto solved = solve(inst);
  CHECK(std::get<NodeSeq>(solved.answer.v).nodes == std::vector<int>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("jaccard of a node with itself is 1") {
  auto g = make_graph(6, false, false, {{0, 1}, {0, 2}});
  ProblemInstance inst{TaskKind::jaccard, g, PairParam{0, 0}, RepresentationKind::edge_list};
  auto solved = solve(inst);
  CHECK(std::get<Rational>(solved.answer.v) == Rational{1, 1});
}

TEST_CASE("degree of an isolated node is 0") {
  auto g = make_graph(6, false, false, {{1, 2}});
  ProblemInstance inst{TaskKind::degree_counting, g, NodeParam{0},
                       RepresentationKind::edge_list};
  CHECK(std::get<long long>(solve(inst).answer.v) == 0);
}

TEST_CASE("clustering coefficient inside K4 is 1") {
  auto g = make_graph(6, false, false, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  ProblemInstance inst{TaskKind::clustering_coefficient, g, NodeParam{0},
                       RepresentationKind::edge_list};
  CHECK(std::get<Rational>(solve(inst).answer.v) == Rational{1, 1});
}

TEST_CASE("MST of a tree is the tree itself") {
  auto g = make_graph(6, false, true, {{0, 1, 3}, {1, 2, 4}, {1, 3, 2}, {3, 4, 9}, {0, 5, 1}});
  ProblemInstance inst{TaskKind::minimum_spanning_tree, g, std::monostate{},
                       RepresentationKind::edge_list};
  auto solved = solve(inst);
  CHECK(std::get<long long>(solved.answer.v) == 19);
  CHECK(std::get<EdgeSet>(solved.witnesses.at(0)).edges.size() == 5);
}

TEST_CASE("planarity: K5 is not planar, K4 is") {
  std::vector<Edge> k5;
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) k5.push_back({i, j});
  }
  auto g5 = make_graph(5, false, false, k5);
  ProblemInstance i5{TaskKind::planarity, g5, std::monostate{}, RepresentationKind::edge_list};
  CHECK_FALSE(std::get<bool>(solve(i5).answer.v));

  std::vector<Edge> k4;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) k4.push_back({i, j});
  }
  auto g4 = make_graph(4, false, false, k4);
  ProblemInstance i4{TaskKind::planarity, g4, std::monostate{}, RepresentationKind::edge_list};
  CHECK(std::get<bool>(solve(i4).answer.v));
}

TEST_CASE("disconnected diameter answers the infinite sentinel") {
  auto g = make_graph(6, false, false, {{0, 1}, {2, 3}});
  ProblemInstance inst{TaskKind::diameter, g, std::monostate{}, RepresentationKind::edge_list};
  auto solved = solve(inst);
  CHECK(std::get<Sentinel>(solved.answer.v).text == "infinite");
}

TEST_CASE("unreachable shortest path answers the sentinel") {
  auto g = make_graph(6, false, true, {{0, 1, 2}, {2, 3, 5}});
  ProblemInstance inst{TaskKind::shortest_path, g, PairParam{0, 3},
                       RepresentationKind::edge_list};
  CHECK(std::get<Sentinel>(solve(inst).answer.v).text == "unreachable");
}

TEST_CASE("triangle-free graph answers No triangle") {
  auto g = make_graph(6, false, false, {{0, 1}, {1, 2}, {2, 3}});
  Graph gw = make_graph(6, false, false, g.edges, {5, 3, 7, 1, 2, 8});
  ProblemInstance inst{TaskKind::maximum_triangle_sum, gw, std::monostate{},
                       RepresentationKind::edge_list};
  CHECK(std::get<Sentinel>(solve(inst).answer.v).text == "No triangle");
}

TEST_CASE("SCC: DAG gives singletons, directed cycle merges") {
  auto dag = make_graph(6, true, false, {{0, 1}, {1, 2}});
  ProblemInstance i1{TaskKind::strongly_connected_components, dag, std::monostate{},
                     RepresentationKind::edge_list};
  auto parts = std::get<ComponentList>(solve(i1).answer.v);
  CHECK(parts.groups.size() == 6);

  auto cyc = make_graph(6, true, false, {{0, 1}, {1, 2}, {2, 0}});
  ProblemInstance i2{TaskKind::strongly_connected_components, cyc, std::monostate{},
                     RepresentationKind::edge_list};
  auto parts2 = std::get<ComponentList>(solve(i2).answer.v);
  CHECK(parts2.groups.front() == std::vector<int>{0, 1, 2});
}

TEST_CASE("pagerank: cycle graph ties break to node 0, star center wins") {
  std::vector<Edge> c6;
  for (int i = 0; i < 6; ++i) c6.push_back({i, (i + 1) % 6});
  for (auto& e : c6) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  auto cyc = make_graph(6, false, false, c6);
  ProblemInstance i1{TaskKind::pagerank, cyc, PagerankParam{}, RepresentationKind::edge_list};
  auto s1 = solve(i1);
  CHECK(std::get<long long>(s1.answer.v) == 0);
  for (double x : s1.pagerank_scores) CHECK(std::abs(x - s1.pagerank_scores[0]) < 1e-9);

  auto star = make_graph(6, false, false, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  ProblemInstance i2{TaskKind::pagerank, star, PagerankParam{}, RepresentationKind::edge_list};
  CHECK(std::get<long long>(solve(i2).answer.v) == 0);
}

TEST_CASE("pagerank mass converges to N without dangling nodes") {
  std::vector<Edge> c8;
  for (int i = 0; i < 8; ++i) c8.push_back({i, (i + 1) % 8});
  for (auto& e : c8) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  auto g = make_graph(8, false, false, c8);
  ProblemInstance inst{TaskKind::pagerank, g, PagerankParam{}, RepresentationKind::edge_list};
  auto solved = solve(inst);
  double mass = 0;
  for (double x : solved.pagerank_scores) mass += x;
  CHECK(std::abs(mass - 8.0) < 1e-6);
}

TEST_CASE("matching rejects intra-partition edges with a witness") {
  auto g = make_graph(4, false, false, {{0, 1}, {0, 2}});
  ProblemInstance inst{TaskKind::maximum_matching, g, MatchingParam{{0, 1}},
                       RepresentationKind::adjacency_list};
  try {
    solve(inst);
    FAIL("expected PreconditionError");
  } catch (const PreconditionError& e) {
    CHECK(e.witness_nodes == std::vector<int>{0, 1});
  }
}

TEST_CASE("family dispatch rejects foreign tasks") {
  auto g = make_graph(6, false, false, {{0, 1}});
  ProblemInstance inst{TaskKind::pagerank, g, PagerankParam{}, RepresentationKind::edge_list};
  CHECK_THROWS_AS(solve_boolean(inst), DispatchError);
  inst.task = TaskKind::cycle_detection;
  inst.params = std::monostate{};
  CHECK_THROWS_AS(solve_flow(inst), DispatchError);
}

TEST_CASE("witness enumeration: antichain admits exactly 3 of 6 orders") {
  auto g = make_graph(3, true, false, {});
  ProblemInstance inst{TaskKind::topological_sort, g, std::monostate{},
                       RepresentationKind::edge_list};
  Rng rng(1);
  auto ws = enumerate_witnesses(inst, 3, rng);
  REQUIRE(ws.size() == 3);
  std::set<std::vector<int>> distinct;
  for (const auto& w : ws) distinct.insert(std::get<PathWitness>(w).nodes);
  CHECK(distinct.size() == 3);
}

TEST_CASE("witness enumeration: diamond yields both equal-weight paths") {
  auto g = make_graph(6, false, true, {{0, 1, 1}, {0, 2, 1}, {1, 3, 1}, {2, 3, 1}});
  ProblemInstance inst{TaskKind::shortest_path, g, PairParam{0, 3},
                       RepresentationKind::edge_list};
  Rng rng(1);
  auto ws = enumerate_witnesses(inst, 3, rng);
  REQUIRE(ws.size() == 2);
  CHECK(std::get<PathWitness>(ws[0]).nodes == std::vector<int>{0, 1, 3});
  CHECK(std::get<PathWitness>(ws[1]).nodes == std::vector<int>{0, 2, 3});
}

TEST_CASE("witness enumeration: lone cycle gives exactly one witness") {
  auto g = make_graph(6, false, false, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}});
  ProblemInstance inst{TaskKind::cycle_detection, g, std::monostate{},
                       RepresentationKind::edge_list};
  Rng rng(1);
  auto ws = enumerate_witnesses(inst, 3, rng);
  CHECK(ws.size() == 1);
}
