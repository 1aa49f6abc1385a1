#include <algorithm>
#include <array>

#include "graphforge/solve.hpp"
#include "solver_util.hpp"

namespace graphforge {

namespace {

struct TaskTableEntry {
  TaskKind task;
  const char* name;
  AnswerForm form;
  TaskInfo info;
};

constexpr std::array<TaskTableEntry, kTaskCount> kTaskTable = {{
    {TaskKind::cycle_detection, "cycle_detection", AnswerForm::decision,
     {TaskKind::cycle_detection, "Yes/No + cycle witness", "iterative DFS with parent tracking",
      false, false, false, false, ""}},
    {TaskKind::bipartite_check, "bipartite_check", AnswerForm::decision,
     {TaskKind::bipartite_check, "Yes/No + 2-coloring or odd cycle", "BFS 2-coloring", false,
      false, false, false, ""}},
    {TaskKind::connectivity, "connectivity", AnswerForm::decision,
     {TaskKind::connectivity, "Yes/No + path witness", "BFS from the source", false, false,
      false, false, ""}},
    {TaskKind::edge_check, "edge_check", AnswerForm::decision,
     {TaskKind::edge_check, "Yes/No + the edge itself", "adjacency scan", false, false, false,
      false, ""}},
    {TaskKind::euler_path, "euler_path", AnswerForm::decision,
     {TaskKind::euler_path, "Yes/No + Euler walk", "degree parity + Hierholzer walk", false,
      true, false, false, "undirected form only"}},
    {TaskKind::hamilton_path, "hamilton_path", AnswerForm::decision,
     {TaskKind::hamilton_path, "Yes/No + Hamilton path", "backtracking with connectivity pruning",
      false, true, false, false, ""}},
    {TaskKind::planarity, "planarity", AnswerForm::decision,
     {TaskKind::planarity, "Yes/No (no embedding witness)", "left-right criterion", false, true,
      false, false, ""}},
    {TaskKind::topological_sort, "topological_sort", AnswerForm::node_seq,
     {TaskKind::topological_sort, "node ordering", "Kahn with a min-id heap", true, false, false,
      false, ""}},
    {TaskKind::graph_traversal, "graph_traversal", AnswerForm::node_seq,
     {TaskKind::graph_traversal, "visit order", "BFS/DFS with ascending-id tie-break", false,
      false, false, false, ""}},
    {TaskKind::neighbor, "neighbor", AnswerForm::node_set,
     {TaskKind::neighbor, "node set", "adjacency row", false, false, false, false, ""}},
    {TaskKind::predecessor, "predecessor", AnswerForm::node_set,
     {TaskKind::predecessor, "node set", "in-adjacency row", true, false, false, false, ""}},
    {TaskKind::common_neighbors, "common_neighbors", AnswerForm::node_set,
     {TaskKind::common_neighbors, "node set", "adjacency row intersection", false, false, false,
      false, ""}},
    {TaskKind::degree_counting, "degree_counting", AnswerForm::integer,
     {TaskKind::degree_counting, "integer", "adjacency row sum", false, false, false, false,
      "out-degree on directed graphs"}},
    {TaskKind::jaccard, "jaccard", AnswerForm::fraction4,
     {TaskKind::jaccard, "exact fraction (4-place decimal)", "neighbor set intersection/union",
      false, true, false, false, "empty union defined as 0"}},
    {TaskKind::clustering_coefficient, "clustering_coefficient", AnswerForm::fraction4,
     {TaskKind::clustering_coefficient, "exact fraction (4-place decimal)",
      "triangle count over neighbor pairs", false, true, false, false,
      "degree < 2 defined as 0"}},
    {TaskKind::shortest_path, "shortest_path", AnswerForm::integer,
     {TaskKind::shortest_path, "path weight + path witness", "Dijkstra", false, false, true,
      false, "unreachable target answers \"unreachable\""}},
    {TaskKind::diameter, "diameter", AnswerForm::integer,
     {TaskKind::diameter, "eccentricity bound + witness path", "all-pairs BFS/Dijkstra", false,
      true, false, false, "disconnected graphs answer \"infinite\""}},
    {TaskKind::minimum_spanning_tree, "minimum_spanning_tree", AnswerForm::integer,
     {TaskKind::minimum_spanning_tree, "total weight + edge set", "Kruskal with union-find",
      false, true, true, false, "requires a connected graph"}},
    {TaskKind::maximum_flow, "maximum_flow", AnswerForm::integer,
     {TaskKind::maximum_flow, "flow value + augmenting paths", "Edmonds-Karp", true, false, true,
      false, ""}},
    {TaskKind::maximum_clique, "maximum_clique", AnswerForm::node_set,
     {TaskKind::maximum_clique, "clique size + members", "branch and bound, greedy-coloring bound",
      false, true, false, false, ""}},
    {TaskKind::maximum_triangle_sum, "maximum_triangle_sum", AnswerForm::integer,
     {TaskKind::maximum_triangle_sum, "best node-weight sum + triangle",
      "edge iteration with common-neighbor scan", false, true, false, true,
      "triangle-free graphs answer \"No triangle\""}},
    {TaskKind::strongly_connected_components, "strongly_connected_components",
     AnswerForm::components,
     {TaskKind::strongly_connected_components, "node partition", "Tarjan", true, false, false,
      false, ""}},
    {TaskKind::pagerank, "pagerank", AnswerForm::node,
     {TaskKind::pagerank, "argmax node (scores kept)", "power iteration, alpha=0.85, 100 iters",
      false, false, false, false, "dangling mass redistributed uniformly"}},
    {TaskKind::maximum_matching, "maximum_matching", AnswerForm::pair_list,
     {TaskKind::maximum_matching, "matching size + pairs", "augmenting paths (ascending order)",
      false, true, false, false, "table-only task: appears in examples, not the task sections"}},
}};

const TaskTableEntry& entry(TaskKind task) {
  for (const auto& e : kTaskTable) {
    if (e.task == task) return e;
  }
  throw DispatchError("unknown task kind");
}

}  // namespace

const char* task_name(TaskKind task) { return entry(task).name; }

std::optional<TaskKind> task_from_name(const std::string& name) {
  for (const auto& e : kTaskTable) {
    if (name == e.name) return e.task;
  }
  return std::nullopt;
}

std::vector<TaskKind> all_tasks() {
  std::vector<TaskKind> out;
  out.reserve(kTaskCount);
  for (const auto& e : kTaskTable) out.push_back(e.task);
  return out;
}

AnswerForm task_answer_form(TaskKind task) { return entry(task).form; }

const TaskInfo& task_info(TaskKind task) { return entry(task).info; }

SolvedInstance solve(const ProblemInstance& instance) {
  switch (instance.task) {
    case TaskKind::cycle_detection:
    case TaskKind::bipartite_check:
    case TaskKind::connectivity:
    case TaskKind::edge_check:
    case TaskKind::euler_path:
    case TaskKind::hamilton_path:
    case TaskKind::planarity:
      return solve_boolean(instance);
    case TaskKind::topological_sort:
    case TaskKind::graph_traversal:
      return solve_ordering(instance);
    case TaskKind::neighbor:
    case TaskKind::predecessor:
    case TaskKind::common_neighbors:
    case TaskKind::degree_counting:
    case TaskKind::jaccard:
    case TaskKind::clustering_coefficient:
      return solve_local(instance);
    case TaskKind::shortest_path:
    case TaskKind::diameter:
    case TaskKind::minimum_spanning_tree:
      return solve_path_opt(instance);
    case TaskKind::maximum_flow:
      return solve_flow(instance);
    case TaskKind::maximum_clique:
    case TaskKind::maximum_triangle_sum:
      return solve_np_search(instance);
    case TaskKind::strongly_connected_components:
      return solve_components(instance);
    case TaskKind::pagerank:
      return solve_pagerank(instance);
    case TaskKind::maximum_matching:
      return solve_matching(instance);
  }
  throw DispatchError("unknown task kind");
}

namespace detail {

std::vector<int> bfs_undirected(const Graph& g, int start) {
  std::vector<int> dist(static_cast<std::size_t>(g.n), -1);
  std::vector<int> queue{start};
  dist[static_cast<std::size_t>(start)] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    auto visit = [&](int w) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        queue.push_back(w);
      }
    };
    for (int w : g.adj[static_cast<std::size_t>(v)]) visit(w);
    if (g.directed) {
      for (int w : g.in_adj[static_cast<std::size_t>(v)]) visit(w);
    }
  }
  return dist;
}

std::vector<int> bfs_directed(const Graph& g, int start) {
  std::vector<int> dist(static_cast<std::size_t>(g.n), -1);
  std::vector<int> queue{start};
  dist[static_cast<std::size_t>(start)] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (int w : g.adj[static_cast<std::size_t>(v)]) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

bool non_isolated_connected(const Graph& g) {
  int root = -1;
  for (int v = 0; v < g.n; ++v) {
    if (g.degree(v) > 0 || (g.directed && !g.in_adj[static_cast<std::size_t>(v)].empty())) {
      root = v;
      break;
    }
  }
  if (root < 0) return true;
  auto dist = bfs_undirected(g, root);
  for (int v = 0; v < g.n; ++v) {
    bool isolated =
        g.adj[static_cast<std::size_t>(v)].empty() &&
        (!g.directed || g.in_adj[static_cast<std::size_t>(v)].empty());
    if (!isolated && dist[static_cast<std::size_t>(v)] < 0) return false;
  }
  return true;
}

bool graph_connected_undirected(const Graph& g) {
  if (g.n == 0) return true;
  auto dist = bfs_undirected(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::vector<int> undirected_neighbors(const Graph& g, int v) {
  if (!g.directed) return g.adj[static_cast<std::size_t>(v)];
  std::vector<int> out = g.adj[static_cast<std::size_t>(v)];
  out.insert(out.end(), g.in_adj[static_cast<std::size_t>(v)].begin(),
             g.in_adj[static_cast<std::size_t>(v)].end());
  return sorted_unique(std::move(out));
}

}  // namespace detail

}  // namespace graphforge
