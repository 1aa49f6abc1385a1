#include <algorithm>
#include <set>

#include "graphforge/solve.hpp"
#include "solver_util.hpp"

namespace graphforge {

namespace {

bool edge_ok(const Graph& g, int a, int b, bool as_undirected) {
  if (as_undirected && g.directed) return g.has_edge(a, b) || g.has_edge(b, a);
  return g.has_edge(a, b);
}

ValidationResult check_nodes_valid(const Graph& g, const std::vector<int>& nodes) {
  for (int v : nodes) {
    if (v < 0 || v >= g.n) {
      return ValidationResult::fail("witness names node " + std::to_string(v) +
                                    " outside the graph");
    }
  }
  return ValidationResult::pass();
}

ValidationResult validate_cycle(const Graph& g, const std::vector<int>& nodes,
                                bool undirected_view) {
  if (nodes.size() < 4) return ValidationResult::fail("cycle must list at least 3 nodes");
  if (nodes.front() != nodes.back()) return ValidationResult::fail("cycle is not closed");
  if (auto r = check_nodes_valid(g, nodes); !r.ok) return r;
  std::set<int> interior(nodes.begin(), nodes.end() - 1);
  if (interior.size() != nodes.size() - 1) {
    return ValidationResult::fail("cycle repeats a node");
  }
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    if (!edge_ok(g, nodes[i], nodes[i + 1], undirected_view)) {
      return ValidationResult::fail("cycle uses a missing edge (" + std::to_string(nodes[i]) +
                                    ", " + std::to_string(nodes[i + 1]) + ")");
    }
  }
  return ValidationResult::pass();
}

ValidationResult validate_simple_path(const Graph& g, const std::vector<int>& nodes,
                                      bool as_undirected) {
  if (nodes.empty()) return ValidationResult::fail("empty path");
  if (auto r = check_nodes_valid(g, nodes); !r.ok) return r;
  std::set<int> uniq(nodes.begin(), nodes.end());
  if (uniq.size() != nodes.size()) return ValidationResult::fail("path repeats a node");
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    if (!edge_ok(g, nodes[i], nodes[i + 1], as_undirected)) {
      return ValidationResult::fail("path uses a missing edge (" + std::to_string(nodes[i]) +
                                    ", " + std::to_string(nodes[i + 1]) + ")");
    }
  }
  return ValidationResult::pass();
}

long long path_weight(const Graph& g, const std::vector<int>& nodes) {
  long long total = 0;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    total += g.edge_weight(nodes[i], nodes[i + 1]);
  }
  return total;
}

}  // namespace

bool witnessable(TaskKind task, const AnswerValue& answer) {
  const bool truthy = std::holds_alternative<bool>(answer.v) && std::get<bool>(answer.v);
  switch (task) {
    case TaskKind::cycle_detection:
    case TaskKind::connectivity:
    case TaskKind::edge_check:
    case TaskKind::euler_path:
    case TaskKind::hamilton_path:
      return truthy;
    case TaskKind::bipartite_check:
      return true;
    case TaskKind::planarity:
    case TaskKind::neighbor:
    case TaskKind::predecessor:
    case TaskKind::common_neighbors:
    case TaskKind::degree_counting:
    case TaskKind::jaccard:
    case TaskKind::clustering_coefficient:
    case TaskKind::strongly_connected_components:
    case TaskKind::pagerank:
      return false;
    case TaskKind::shortest_path:
    case TaskKind::diameter:
    case TaskKind::maximum_triangle_sum:
      return !std::holds_alternative<Sentinel>(answer.v);
    case TaskKind::maximum_flow:
      return std::holds_alternative<long long>(answer.v) && std::get<long long>(answer.v) > 0;
    case TaskKind::topological_sort:
    case TaskKind::graph_traversal:
    case TaskKind::minimum_spanning_tree:
    case TaskKind::maximum_clique:
    case TaskKind::maximum_matching:
      return true;
  }
  return false;
}

ValidationResult validate_witness(const ProblemInstance& instance, const AnswerValue& answer,
                                  const Witness& witness) {
  const Graph& g = instance.graph;
  switch (instance.task) {
    case TaskKind::cycle_detection: {
      if (!std::get<bool>(answer.v)) return ValidationResult::fail("No answers carry no cycle");
      const auto* w = std::get_if<PathWitness>(&witness);
      if (!w) return ValidationResult::fail("cycle witness must be a node sequence");
      return validate_cycle(g, w->nodes, !g.directed);
    }

    case TaskKind::bipartite_check: {
      if (std::get<bool>(answer.v)) {
        const auto* c = std::get_if<ColoringWitness>(&witness);
        if (!c) return ValidationResult::fail("Yes answers need a 2-coloring");
        if (static_cast<int>(c->color.size()) != g.n) {
          return ValidationResult::fail("coloring must cover every node");
        }
        for (int x : c->color) {
          if (x != 0 && x != 1) return ValidationResult::fail("coloring uses a third color");
        }
        for (const auto& e : g.edges) {
          if (c->color[static_cast<std::size_t>(e.u)] == c->color[static_cast<std::size_t>(e.v)]) {
            return ValidationResult::fail("edge (" + std::to_string(e.u) + ", " +
                                          std::to_string(e.v) + ") stays inside one class");
          }
        }
        return ValidationResult::pass();
      }
      const auto* w = std::get_if<PathWitness>(&witness);
      if (!w) return ValidationResult::fail("No answers need an odd cycle");
      if (auto r = validate_cycle(g, w->nodes, true); !r.ok) return r;
      if ((w->nodes.size() - 1) % 2 == 0) {
        return ValidationResult::fail("the witness cycle has even length");
      }
      return ValidationResult::pass();
    }

    case TaskKind::connectivity: {
      if (!std::get<bool>(answer.v)) return ValidationResult::fail("No answers carry no path");
      const auto* w = std::get_if<PathWitness>(&witness);
      if (!w) return ValidationResult::fail("connectivity witness must be a path");
      const auto& p = std::get<PairParam>(instance.params);
      if (w->nodes.empty() || w->nodes.front() != p.u || w->nodes.back() != p.v) {
        return ValidationResult::fail("path endpoints disagree with the query");
      }
      return validate_simple_path(g, w->nodes, !g.directed);
    }

    case TaskKind::edge_check: {
      if (!std::get<bool>(answer.v)) return ValidationResult::fail("No answers carry no edge");
      const auto* w = std::get_if<EdgeWitness>(&witness);
      if (!w) return ValidationResult::fail("edge witness expected");
      const auto& p = std::get<PairParam>(instance.params);
      bool same = (w->u == p.u && w->v == p.v) || (!g.directed && w->u == p.v && w->v == p.u);
      if (!same) return ValidationResult::fail("witness edge is not the queried edge");
      if (!edge_ok(g, w->u, w->v, !g.directed)) {
        return ValidationResult::fail("claimed edge is absent");
      }
      return ValidationResult::pass();
    }

    case TaskKind::euler_path: {
      if (!std::get<bool>(answer.v)) return ValidationResult::fail("No answers carry no walk");
      const auto* w = std::get_if<PathWitness>(&witness);
      if (!w) return ValidationResult::fail("Euler witness must be a walk");
      if (auto r = check_nodes_valid(g, w->nodes); !r.ok) return r;
      if (g.edges.empty()) {
        return w->nodes.size() == 1 ? ValidationResult::pass()
                                    : ValidationResult::fail("edgeless graphs need a trivial walk");
      }
      if (w->nodes.size() != g.edges.size() + 1) {
        return ValidationResult::fail("walk length must be edge count + 1");
      }
      std::set<std::pair<int, int>> used;
      for (std::size_t i = 0; i + 1 < w->nodes.size(); ++i) {
        int a = w->nodes[i], b = w->nodes[i + 1];
        if (!edge_ok(g, a, b, true)) {
          return ValidationResult::fail("walk uses a missing edge");
        }
        if (a > b) std::swap(a, b);
        if (!used.insert({a, b}).second) {
          return ValidationResult::fail("walk repeats an edge");
        }
      }
      return ValidationResult::pass();
    }

    case TaskKind::hamilton_path: {
      if (!std::get<bool>(answer.v)) return ValidationResult::fail("No answers carry no path");
      const auto* w = std::get_if<PathWitness>(&witness);
      if (!w) return ValidationResult::fail("Hamilton witness must be a path");
      if (static_cast<int>(w->nodes.size()) != g.n) {
        return ValidationResult::fail("path must visit every node exactly once");
      }
      return validate_simple_path(g, w->nodes, !g.directed);
    }

    case TaskKind::topological_sort: {
      const auto* w = std::get_if<PathWitness>(&witness);
      if (!w) return ValidationResult::fail("topological witness must be an ordering");
      if (static_cast<int>(w->nodes.size()) != g.n) {
        return ValidationResult::fail("ordering must contain every node");
      }
      std::vector<int> pos(static_cast<std::size_t>(g.n), -1);
      for (std::size_t i = 0; i < w->nodes.size(); ++i) {
        int v = w->nodes[i];
        if (v < 0 || v >= g.n || pos[static_cast<std::size_t>(v)] != -1) {
          return ValidationResult::fail("ordering is not a permutation");
        }
        pos[static_cast<std::size_t>(v)] = static_cast<int>(i);
      }
      for (const auto& e : g.edges) {
        if (pos[static_cast<std::size_t>(e.u)] > pos[static_cast<std::size_t>(e.v)]) {
          return ValidationResult::fail("edge (" + std::to_string(e.u) + ", " +
                                        std::to_string(e.v) + ") points backwards");
        }
      }
      return ValidationResult::pass();
    }

    case TaskKind::graph_traversal: {
      const auto* w = std::get_if<PathWitness>(&witness);
      if (!w) return ValidationResult::fail("traversal witness must be the visit order");
      const auto* ans = std::get_if<NodeSeq>(&answer.v);
      if (!ans || ans->nodes != w->nodes) {
        return ValidationResult::fail("visit order disagrees with the answer");
      }
      return ValidationResult::pass();
    }

    case TaskKind::shortest_path: {
      const auto* w = std::get_if<PathWitness>(&witness);
      if (!w) return ValidationResult::fail("shortest-path witness must be a path");
      const auto& p = std::get<PairParam>(instance.params);
      if (w->nodes.empty() || w->nodes.front() != p.u || w->nodes.back() != p.v) {
        return ValidationResult::fail("path endpoints disagree with the query");
      }
      if (auto r = validate_simple_path(g, w->nodes, false); !r.ok) {
        // undirected graphs store edges canonically; recheck with both sides
        if (auto r2 = validate_simple_path(g, w->nodes, !g.directed); !r2.ok) return r2;
      }
      const auto* total = std::get_if<long long>(&answer.v);
      if (!total) return ValidationResult::fail("answer must be the path weight");
      if (path_weight(g, w->nodes) != *total) {
        return ValidationResult::fail("claimed weight differs from the path's weight sum");
      }
      return ValidationResult::pass();
    }

    case TaskKind::diameter: {
      const auto* w = std::get_if<PathWitness>(&witness);
      if (!w) return ValidationResult::fail("diameter witness must be a path");
      if (auto r = validate_simple_path(g, w->nodes, !g.directed); !r.ok) return r;
      const auto* total = std::get_if<long long>(&answer.v);
      if (!total) return ValidationResult::fail("answer must be the diameter value");
      if (path_weight(g, w->nodes) != *total) {
        return ValidationResult::fail("witness path length differs from the claimed diameter");
      }
      return ValidationResult::pass();
    }

    case TaskKind::minimum_spanning_tree: {
      const auto* w = std::get_if<EdgeSet>(&witness);
      if (!w) return ValidationResult::fail("MST witness must be an edge set");
      if (static_cast<int>(w->edges.size()) != g.n - 1) {
        return ValidationResult::fail("a spanning tree needs n - 1 edges");
      }
      detail::UnionFind uf(g.n);
      long long total = 0;
      for (auto [u, v] : w->edges) {
        if (!edge_ok(g, u, v, true)) return ValidationResult::fail("tree edge is absent");
        if (!uf.unite(u, v)) return ValidationResult::fail("tree edges close a cycle");
        total += g.edge_weight(u, v);
      }
      const auto* ans = std::get_if<long long>(&answer.v);
      if (!ans || total != *ans) {
        return ValidationResult::fail("tree weight differs from the claimed total");
      }
      return ValidationResult::pass();
    }

    case TaskKind::maximum_flow: {
      const auto* w = std::get_if<FlowWitness>(&witness);
      if (!w) return ValidationResult::fail("flow witness must be an augmentation list");
      const auto& p = std::get<PairParam>(instance.params);
      std::vector<std::vector<long long>> residual(
          static_cast<std::size_t>(g.n), std::vector<long long>(static_cast<std::size_t>(g.n), 0));
      for (const auto& e : g.edges) {
        residual[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] += e.w;
      }
      long long total = 0;
      for (const auto& aug : w->augmentations) {
        if (aug.path.size() < 2 || aug.path.front() != p.u || aug.path.back() != p.v) {
          return ValidationResult::fail("augmenting path endpoints are wrong");
        }
        if (aug.bottleneck < 1) return ValidationResult::fail("bottleneck must be positive");
        for (std::size_t i = 0; i + 1 < aug.path.size(); ++i) {
          auto& cap = residual[static_cast<std::size_t>(aug.path[i])]
                              [static_cast<std::size_t>(aug.path[i + 1])];
          if (cap < aug.bottleneck) {
            return ValidationResult::fail("augmentation exceeds residual capacity");
          }
        }
        for (std::size_t i = 0; i + 1 < aug.path.size(); ++i) {
          residual[static_cast<std::size_t>(aug.path[i])][static_cast<std::size_t>(aug.path[i + 1])] -=
              aug.bottleneck;
          residual[static_cast<std::size_t>(aug.path[i + 1])][static_cast<std::size_t>(aug.path[i])] +=
              aug.bottleneck;
        }
        total += aug.bottleneck;
      }
      const auto* ans = std::get_if<long long>(&answer.v);
      if (!ans || total != *ans) {
        return ValidationResult::fail("augmentations do not add up to the claimed flow");
      }
      return ValidationResult::pass();
    }

    case TaskKind::maximum_clique: {
      const auto* w = std::get_if<NodeSet>(&witness);
      if (!w) return ValidationResult::fail("clique witness must be a node set");
      if (auto r = check_nodes_valid(g, w->nodes); !r.ok) return r;
      std::set<int> uniq(w->nodes.begin(), w->nodes.end());
      if (uniq.size() != w->nodes.size()) return ValidationResult::fail("clique repeats a node");
      for (std::size_t i = 0; i < w->nodes.size(); ++i) {
        for (std::size_t j = i + 1; j < w->nodes.size(); ++j) {
          if (!edge_ok(g, w->nodes[i], w->nodes[j], true)) {
            return ValidationResult::fail("clique members " + std::to_string(w->nodes[i]) +
                                          " and " + std::to_string(w->nodes[j]) +
                                          " are not adjacent");
          }
        }
      }
      const auto* ans = std::get_if<long long>(&answer.v);
      if (!ans || static_cast<long long>(w->nodes.size()) != *ans) {
        return ValidationResult::fail("clique size differs from the claimed size");
      }
      return ValidationResult::pass();
    }

    case TaskKind::maximum_triangle_sum: {
      const auto* w = std::get_if<TriangleWitness>(&witness);
      if (!w) return ValidationResult::fail("triangle witness expected");
      if (!(edge_ok(g, w->a, w->b, true) && edge_ok(g, w->a, w->c, true) &&
            edge_ok(g, w->b, w->c, true))) {
        return ValidationResult::fail("the three nodes are not mutually adjacent");
      }
      const auto* ans = std::get_if<long long>(&answer.v);
      long long sum = g.node_weights[static_cast<std::size_t>(w->a)] +
                      g.node_weights[static_cast<std::size_t>(w->b)] +
                      g.node_weights[static_cast<std::size_t>(w->c)];
      if (!ans || sum != *ans) {
        return ValidationResult::fail("triangle weight sum differs from the claimed value");
      }
      return ValidationResult::pass();
    }

    case TaskKind::maximum_matching: {
      const auto* w = std::get_if<PairList>(&witness);
      if (!w) return ValidationResult::fail("matching witness must be a pair list");
      const auto& p = std::get<MatchingParam>(instance.params);
      std::vector<bool> is_left(static_cast<std::size_t>(g.n), false);
      for (int v : p.left) is_left[static_cast<std::size_t>(v)] = true;
      std::set<int> used;
      for (auto [u, v] : w->pairs) {
        if (u < 0 || u >= g.n || v < 0 || v >= g.n) {
          return ValidationResult::fail("pair names an invalid node");
        }
        if (!is_left[static_cast<std::size_t>(u)] || is_left[static_cast<std::size_t>(v)]) {
          return ValidationResult::fail("pair does not run left-to-right across the partition");
        }
        if (!edge_ok(g, u, v, true)) return ValidationResult::fail("matched pair is not an edge");
        if (!used.insert(u).second || !used.insert(v).second) {
          return ValidationResult::fail("matching reuses a node");
        }
      }
      const auto* ans = std::get_if<long long>(&answer.v);
      if (!ans || static_cast<long long>(w->pairs.size()) != *ans) {
        return ValidationResult::fail("pair count differs from the claimed size");
      }
      return ValidationResult::pass();
    }

    default:
      return ValidationResult::fail(std::string(task_name(instance.task)) +
                                    " carries no witness");
  }
}

}  // namespace graphforge
