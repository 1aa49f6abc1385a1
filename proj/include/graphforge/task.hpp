#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "graphforge/answer.hpp"
#include "graphforge/graph.hpp"

namespace graphforge {

enum class TaskKind {
  cycle_detection,
  bipartite_check,
  connectivity,
  edge_check,
  euler_path,
  hamilton_path,
  planarity,
  topological_sort,
  graph_traversal,
  neighbor,
  predecessor,
  common_neighbors,
  degree_counting,
  jaccard,
  clustering_coefficient,
  shortest_path,
  diameter,
  minimum_spanning_tree,
  maximum_flow,
  maximum_clique,
  maximum_triangle_sum,
  strongly_connected_components,
  pagerank,
  maximum_matching,
};

constexpr int kTaskCount = 24;

const char* task_name(TaskKind task);
std::optional<TaskKind> task_from_name(const std::string& name);
std::vector<TaskKind> all_tasks();

// How the final answer of a sample is shaped, which drives rendering and the
// answer-extraction grammar.
enum class AnswerForm {
  decision,     // final "[Yes]" / "[No]"
  integer,      // "Answer: 23" (sentinels render as their text)
  fraction4,    // "Answer: 0.3333"
  node,         // "Answer: 5" (a single node, label-aware)
  node_seq,     // "Answer: [0, 1, 2]"
  node_set,     // "Answer: [0, 2, 5]"
  edge_set,     // "Answer: [(0, 1), (2, 3)]"
  pair_list,    // "Answer: [(0, 1), (2, 5)]"
  components,   // "Answer: [[0, 1], [2]]"
};

AnswerForm task_answer_form(TaskKind task);

struct TaskInfo {
  TaskKind task;
  const char* answer_type;  // human description for the catalog
  const char* algorithm;    // reference solver choice
  bool needs_directed;      // solver precondition
  bool needs_undirected;
  bool needs_edge_weights;
  bool needs_node_weights;
  const char* note;  // catalog footnotes ("" when none)
};

const TaskInfo& task_info(TaskKind task);

enum class TraversalMode { bfs, dfs };

struct PairParam {
  int u = -1;
  int v = -1;
  friend bool operator==(const PairParam&, const PairParam&) = default;
};

struct NodeParam {
  int u = -1;
  friend bool operator==(const NodeParam&, const NodeParam&) = default;
};

struct TraversalParam {
  int start = 0;
  TraversalMode mode = TraversalMode::bfs;
  friend bool operator==(const TraversalParam&, const TraversalParam&) = default;
};

struct MatchingParam {
  std::vector<int> left;  // declared left partition, sorted
  friend bool operator==(const MatchingParam&, const MatchingParam&) = default;
};

struct PagerankParam {
  double alpha = 0.85;
  int max_iter = 100;
  friend bool operator==(const PagerankParam&, const PagerankParam&) = default;
};

using TaskParams =
    std::variant<std::monostate, PairParam, NodeParam, TraversalParam, MatchingParam,
                 PagerankParam>;

struct ProblemInstance {
  TaskKind task = TaskKind::cycle_detection;
  Graph graph;
  TaskParams params;
  RepresentationKind representation = RepresentationKind::edge_list;

  friend bool operator==(const ProblemInstance&, const ProblemInstance&) = default;
};

struct SolvedInstance {
  AnswerValue answer;
  std::vector<Witness> witnesses;  // <= 3 distinct, each validator-checked
  std::vector<Phrase> steps;       // non-empty for every solver run
  std::vector<double> pagerank_scores;  // auxiliary, pagerank only
  bool pagerank_dangling = false;       // literal-formula deviation marker
};

}  // namespace graphforge
