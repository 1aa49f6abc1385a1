#include <algorithm>
#include <queue>

#include "graphforge/solve.hpp"
#include "solver_util.hpp"

namespace graphforge {

namespace {

Phrase node_list_phrase(const std::vector<int>& nodes) {
  Phrase ph;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i) ph.pieces.push_back(lit(", "));
    ph.pieces.push_back(node_ref(nodes[i]));
  }
  if (nodes.empty()) ph.pieces.push_back(lit("(none)"));
  return ph;
}

Phrase cat(Phrase a, const Phrase& b) {
  a.pieces.insert(a.pieces.end(), b.pieces.begin(), b.pieces.end());
  return a;
}

// --- topological sort -------------------------------------------------------

SolvedInstance solve_topological(const ProblemInstance& inst) {
  const Graph& g = inst.graph;
  if (!g.directed) throw PreconditionError("topological_sort requires a directed graph");
  SolvedInstance out;
  std::vector<int> indeg(static_cast<std::size_t>(g.n), 0);
  for (const auto& e : g.edges) ++indeg[static_cast<std::size_t>(e.v)];
  {
    Phrase ph = phrase("In-degrees: ");
    for (int v = 0; v < g.n; ++v) {
      if (v) ph.pieces.push_back(lit(", "));
      ph = cat(std::move(ph), phrase(node_ref(v), ": ", num(indeg[static_cast<std::size_t>(v)])));
    }
    ph.pieces.push_back(lit("."));
    out.steps.push_back(ph);
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = 0; v < g.n; ++v) {
    if (indeg[static_cast<std::size_t>(v)] == 0) ready.push(v);
  }
  std::vector<int> order;
  auto indeg_work = indeg;
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    order.push_back(v);
    Phrase ph = phrase("Node ", node_ref(v), " has in-degree 0; place it next.");
    std::vector<int> unlocked;
    for (int w : g.adj[static_cast<std::size_t>(v)]) {
      if (--indeg_work[static_cast<std::size_t>(w)] == 0) {
        ready.push(w);
        unlocked.push_back(w);
      }
    }
    if (!unlocked.empty()) {
      ph = cat(std::move(ph), cat(phrase(" Removing it frees: "), node_list_phrase(unlocked)));
      ph.pieces.push_back(lit("."));
    }
    out.steps.push_back(ph);
  }
  if (static_cast<int>(order.size()) != g.n) {
    // The leftover nodes contain a cycle; chase predecessors to exhibit one.
    std::vector<bool> placed(static_cast<std::size_t>(g.n), false);
    for (int v : order) placed[static_cast<std::size_t>(v)] = true;
    int cur = 0;
    while (placed[static_cast<std::size_t>(cur)]) ++cur;
    std::vector<int> trail;
    std::vector<int> seen_at(static_cast<std::size_t>(g.n), -1);
    while (seen_at[static_cast<std::size_t>(cur)] < 0) {
      seen_at[static_cast<std::size_t>(cur)] = static_cast<int>(trail.size());
      trail.push_back(cur);
      for (int w : g.in_adj[static_cast<std::size_t>(cur)]) {
        if (!placed[static_cast<std::size_t>(w)]) {
          cur = w;
          break;
        }
      }
    }
    std::vector<int> cyc(trail.begin() + seen_at[static_cast<std::size_t>(cur)], trail.end());
    std::reverse(cyc.begin(), cyc.end());  // predecessor chase runs against arc direction
    auto cycle = detail::normalize_cycle(cyc, true);
    throw PreconditionError("topological_sort requires a DAG; found a cycle",
                            std::move(cycle));
  }
  out.steps.push_back(phrase("All nodes are placed and every edge points forward."));
  out.answer = AnswerValue{NodeSeq{order}};
  out.witnesses.push_back(PathWitness{order});
  return out;
}

// --- traversal ---------------------------------------------------------------

SolvedInstance solve_traversal(const ProblemInstance& inst) {
  const Graph& g = inst.graph;
  const auto& p = std::get<TraversalParam>(inst.params);
  SolvedInstance out;
  std::vector<bool> seen(static_cast<std::size_t>(g.n), false);
  std::vector<int> order;
  if (p.mode == TraversalMode::bfs) {
    out.steps.push_back(phrase("Breadth-first search from node ", node_ref(p.start),
                               ", taking smaller node ids first."));
    std::vector<int> queue{p.start};
    seen[static_cast<std::size_t>(p.start)] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      order.push_back(v);
      std::vector<int> added;
      for (int w : g.adj[static_cast<std::size_t>(v)]) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          queue.push_back(w);
          added.push_back(w);
        }
      }
      Phrase ph = phrase("Visit node ", node_ref(v), ".");
      if (!added.empty()) {
        ph = cat(std::move(ph), cat(phrase(" Enqueue: "), node_list_phrase(added)));
        ph.pieces.push_back(lit("."));
      }
      out.steps.push_back(ph);
    }
  } else {
    out.steps.push_back(phrase("Depth-first search from node ", node_ref(p.start),
                               ", taking smaller node ids first."));
    std::vector<int> stack{p.start};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (seen[static_cast<std::size_t>(v)]) continue;
      seen[static_cast<std::size_t>(v)] = true;
      order.push_back(v);
      out.steps.push_back(phrase("Visit node ", node_ref(v), "."));
      const auto& row = g.adj[static_cast<std::size_t>(v)];
      for (auto it = row.rbegin(); it != row.rend(); ++it) {
        if (!seen[static_cast<std::size_t>(*it)]) stack.push_back(*it);
      }
    }
  }
  out.steps.push_back(cat(phrase("No unvisited reachable nodes remain; the order is "),
                          node_list_phrase(order)));
  out.steps.back().pieces.push_back(lit("."));
  out.answer = AnswerValue{NodeSeq{order}};
  out.witnesses.push_back(PathWitness{order});
  return out;
}

// --- local queries ------------------------------------------------------------

SolvedInstance solve_neighbor(const ProblemInstance& inst) {
  const Graph& g = inst.graph;
  const auto& p = std::get<NodeParam>(inst.params);
  SolvedInstance out;
  const auto& row = g.adj[static_cast<std::size_t>(p.u)];
  out.steps.push_back(cat(phrase("Scan the edges touching node ", node_ref(p.u),
                                 "; the adjacent nodes are: "),
                          node_list_phrase(row)));
  out.steps.back().pieces.push_back(lit("."));
  out.answer = AnswerValue{NodeSet{row}};
  return out;
}

SolvedInstance solve_predecessor(const ProblemInstance& inst) {
  const Graph& g = inst.graph;
  if (!g.directed) throw PreconditionError("predecessor requires a directed graph");
  const auto& p = std::get<NodeParam>(inst.params);
  SolvedInstance out;
  const auto& row = g.in_adj[static_cast<std::size_t>(p.u)];
  out.steps.push_back(cat(phrase("Collect every node with an edge pointing into node ",
                                 node_ref(p.u), ": "),
                          node_list_phrase(row)));
  out.steps.back().pieces.push_back(lit("."));
  out.answer = AnswerValue{NodeSet{row}};
  return out;
}

SolvedInstance solve_common_neighbors(const ProblemInstance& inst) {
  const Graph& g = inst.graph;
  const auto& p = std::get<PairParam>(inst.params);
  SolvedInstance out;
  const auto& nu = g.adj[static_cast<std::size_t>(p.u)];
  const auto& nv = g.adj[static_cast<std::size_t>(p.v)];
  std::vector<int> common;
  std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(common));
  out.steps.push_back(cat(phrase("Neighbors of node ", node_ref(p.u), ": "), node_list_phrase(nu)));
  out.steps.back().pieces.push_back(lit("."));
  out.steps.push_back(cat(phrase("Neighbors of node ", node_ref(p.v), ": "), node_list_phrase(nv)));
  out.steps.back().pieces.push_back(lit("."));
  out.steps.push_back(cat(phrase("The intersection of the two lists is: "),
                          node_list_phrase(common)));
  out.steps.back().pieces.push_back(lit("."));
  out.answer = AnswerValue{NodeSet{common}};
  return out;
}

SolvedInstance solve_degree(const ProblemInstance& inst) {
  const Graph& g = inst.graph;
  const auto& p = std::get<NodeParam>(inst.params);
  SolvedInstance out;
  const auto& row = g.adj[static_cast<std::size_t>(p.u)];
  out.steps.push_back(cat(phrase(g.directed ? "Out-neighbors of node " : "Neighbors of node ",
                                 node_ref(p.u), ": "),
                          node_list_phrase(row)));
  out.steps.back().pieces.push_back(lit("."));
  out.steps.push_back(phrase("Counting them gives ", num(static_cast<long long>(row.size())),
                             "."));
  out.answer = AnswerValue::integer(static_cast<long long>(row.size()));
  return out;
}

SolvedInstance solve_jaccard(const ProblemInstance& inst) {
  const Graph& g = inst.graph;
  const auto& p = std::get<PairParam>(inst.params);
  SolvedInstance out;
  const auto& nu = g.adj[static_cast<std::size_t>(p.u)];
  const auto& nv = g.adj[static_cast<std::size_t>(p.v)];
  std::vector<int> inter, uni;
  std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(inter));
  std::set_union(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(uni));
  out.steps.push_back(cat(phrase("Neighbors of node ", node_ref(p.u), ": "), node_list_phrase(nu)));
  out.steps.back().pieces.push_back(lit("."));
  out.steps.push_back(cat(phrase("Neighbors of node ", node_ref(p.v), ": "), node_list_phrase(nv)));
  out.steps.back().pieces.push_back(lit("."));
  out.steps.push_back(cat(cat(phrase("Intersection: "), node_list_phrase(inter)),
                          phrase(" (size ", num(static_cast<long long>(inter.size())), ");")));
  out.steps.push_back(cat(cat(phrase("Union: "), node_list_phrase(uni)),
                          phrase(" (size ", num(static_cast<long long>(uni.size())), ").")));
  Rational r = uni.empty() ? Rational{0, 1}
                           : Rational::make(static_cast<long long>(inter.size()),
                                            static_cast<long long>(uni.size()));
  if (uni.empty()) {
    out.steps.push_back(
        phrase("Both neighborhoods are empty; the coefficient is defined as 0."));
  } else {
    out.steps.push_back(phrase("Jaccard coefficient = ",
                               num(static_cast<long long>(inter.size())), "/",
                               num(static_cast<long long>(uni.size())), " = ",
                               rational_to_decimal4(r), "."));
  }
  out.answer = AnswerValue{r};
  return out;
}

SolvedInstance solve_clustering(const ProblemInstance& inst) {
  const Graph& g = inst.graph;
  const auto& p = std::get<NodeParam>(inst.params);
  SolvedInstance out;
  const auto& row = g.adj[static_cast<std::size_t>(p.u)];
  long long k = static_cast<long long>(row.size());
  out.steps.push_back(cat(phrase("Neighbors of node ", node_ref(p.u), ": "),
                          node_list_phrase(row)));
  out.steps.back().pieces.push_back(lit("."));
  if (k < 2) {
    out.steps.push_back(phrase("Fewer than two neighbors admit no triangle; the coefficient "
                               "is defined as 0."));
    out.answer = AnswerValue{Rational{0, 1}};
    return out;
  }
  long long links = 0;
  for (std::size_t i = 0; i < row.size(); ++i) {
    for (std::size_t j = i + 1; j < row.size(); ++j) {
      bool linked = g.has_edge(row[i], row[j]);
      if (linked) ++links;
      out.steps.push_back(phrase("Neighbor pair (", node_ref(row[i]), ", ", node_ref(row[j]),
                                 "): ", linked ? "connected." : "not connected."));
    }
  }
  long long possible = k * (k - 1) / 2;
  Rational r = Rational::make(links, possible);
  out.steps.push_back(phrase("Connected pairs: ", num(links), " out of ", num(possible),
                             ", so the clustering coefficient is ", rational_to_decimal4(r),
                             "."));
  out.answer = AnswerValue{r};
  return out;
}

}  // namespace

SolvedInstance solve_ordering(const ProblemInstance& instance) {
  switch (instance.task) {
    case TaskKind::topological_sort: return solve_topological(instance);
    case TaskKind::graph_traversal: {
      const auto* p = std::get_if<TraversalParam>(&instance.params);
      if (!p || p->start < 0 || p->start >= instance.graph.n) {
        throw PreconditionError("graph_traversal requires a valid start node");
      }
      return solve_traversal(instance);
    }
    default:
      throw DispatchError(std::string("solve_ordering cannot handle task ") +
                          task_name(instance.task));
  }
}

SolvedInstance solve_local(const ProblemInstance& instance) {
  switch (instance.task) {
    case TaskKind::neighbor: return solve_neighbor(instance);
    case TaskKind::predecessor: return solve_predecessor(instance);
    case TaskKind::common_neighbors: return solve_common_neighbors(instance);
    case TaskKind::degree_counting: return solve_degree(instance);
    case TaskKind::jaccard: return solve_jaccard(instance);
    case TaskKind::clustering_coefficient: return solve_clustering(instance);
    default:
      throw DispatchError(std::string("solve_local cannot handle task ") +
                          task_name(instance.task));
  }
}

}  // namespace graphforge
