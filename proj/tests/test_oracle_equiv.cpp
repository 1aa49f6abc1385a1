#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "graphforge/instance_gen.hpp"
#include "oracle.hpp"

using namespace graphforge;

namespace {

GenConfig small_config(TaskKind task) {
  GenConfig cfg;
  cfg.n_min = 6;
  cfg.n_max = (task == TaskKind::minimum_spanning_tree) ? 7 : 8;
  cfg.np_hard_n_max = cfg.n_max;
  cfg.search_n_max = cfg.n_max;
  cfg.density_schedule = {0.15, 0.3};
  return cfg;
}

// Euler's trail oracle is bounded to 14 edges; redraw denser instances.
ProblemInstance draw_small(TaskKind task, std::uint64_t seed) {
  GenConfig cfg = small_config(task);
  for (int bump = 0;; ++bump) {
    auto inst = make_instance(task, cfg, seed + 7919ull * bump);
    if (task == TaskKind::euler_path && inst.graph.edge_count() > 14) continue;
    return inst;
  }
}

}  // namespace

TEST_CASE("solver answers match the brute-force oracle on random small instances") {
  const int kPerTask = 60;
  for (TaskKind task : all_tasks()) {
    CAPTURE(task_name(task));
    for (int i = 0; i < kPerTask; ++i) {
      auto inst = draw_small(task, derive_seed(0xabcdef, "oracle", task_name(task),
                                               static_cast<std::uint64_t>(i)));
      CAPTURE(i);
      auto solved = solve(inst);
      auto reason = oracle::check(inst, solved);
      if (!reason.empty()) {
        CAPTURE(reason);
        CAPTURE(render_representation(inst.graph, RepresentationKind::edge_list));
        FAIL("oracle disagreement on task ", task_name(task), " instance ", i, ": ", reason);
      }
    }
  }
}

TEST_CASE("boolean tasks agree with the oracle on every tiny graph") {
  // exhaustive edge subsets on 3, 4 and 5 nodes
  for (int n : {3, 4, 5}) {
    int pairs = n * (n - 1) / 2;
    for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
      std::vector<Edge> edges;
      int k = 0;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++k) {
          if ((mask >> k) & 1u) edges.push_back({i, j});
        }
      }
      auto g = make_graph(n, false, false, edges);
      for (TaskKind task : {TaskKind::cycle_detection, TaskKind::bipartite_check,
                            TaskKind::euler_path, TaskKind::hamilton_path,
                            TaskKind::planarity}) {
        ProblemInstance inst{task, g, std::monostate{}, RepresentationKind::edge_list};
        auto solved = solve(inst);
        auto reason = oracle::check(inst, solved);
        if (!reason.empty()) {
          CAPTURE(task_name(task));
          CAPTURE(n);
          CAPTURE(mask);
          FAIL("oracle disagreement: ", reason);
        }
      }
    }
  }
}

TEST_CASE("oracle refuses oversized instances") {
  GenConfig cfg;
  cfg.n_min = 12;
  cfg.n_max = 12;
  auto inst = make_instance(TaskKind::cycle_detection, cfg, 5);
  CHECK_THROWS_AS(oracle::answer(inst), oracle::OracleRefusal);
}
