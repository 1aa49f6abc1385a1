#pragma once

#include <cstdint>

#include "graphforge/task.hpp"

namespace graphforge {

// Knobs for random instance construction. Defaults follow the shipped
// configuration: sizes 6..40, densities drawn from {0.15, 0.3, 0.5}, integer
// weights 1..10, and a size cap for the backtracking-heavy tasks so no
// instance ever approaches the solver budgets.
struct GenConfig {
  int n_min = 6;
  int n_max = 40;
  std::vector<double> density_schedule{0.15, 0.3, 0.5};
  long long weight_min = 1;
  long long weight_max = 10;
  int np_hard_n_max = 12;    // hamilton_path
  int search_n_max = 24;     // maximum_clique and friends
  int retry_budget = 50;     // connected/DAG resampling attempts
  // representation mix, cumulative over {edge_list, adjacency_list, matrix}
  double p_edge_list = 0.5;
  double p_adjacency_list = 0.8;  // cumulative
  // The code-sample pipeline pins the directedness coin (cycle, edge_check,
  // traversal, pagerank draw it otherwise) and the rendered representation so
  // every instance matches its code template's parser.
  std::optional<bool> coin_directed;
  std::optional<RepresentationKind> force_representation;
};

// Deterministic random instance for a task: same (task, config, seed) in,
// same instance out. Throws ConfigError when the retry budget cannot satisfy
// a structural requirement (e.g. connectivity at the drawn density).
ProblemInstance make_instance(TaskKind task, const GenConfig& config, std::uint64_t seed);

}  // namespace graphforge
