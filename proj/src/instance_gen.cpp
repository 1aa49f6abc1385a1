#include "graphforge/instance_gen.hpp"

#include <algorithm>

#include "graphforge/solve.hpp"
#include "solver_util.hpp"

namespace graphforge {

namespace {

RepresentationKind draw_representation(const GenConfig& cfg, Rng& rng) {
  double x = rng.uniform();
  if (x < cfg.p_edge_list) return RepresentationKind::edge_list;
  if (x < cfg.p_adjacency_list) return RepresentationKind::adjacency_list;
  return RepresentationKind::adjacency_matrix;
}

int draw_n(const GenConfig& cfg, Rng& rng, int cap) {
  int hi = std::min(cfg.n_max, cap);
  int lo = std::min(cfg.n_min, hi);
  return rng.uniform_int(lo, hi);
}

double draw_p(const GenConfig& cfg, Rng& rng) {
  return cfg.density_schedule[static_cast<std::size_t>(
      rng.uniform_int(0, static_cast<int>(cfg.density_schedule.size()) - 1))];
}

Graph er(const GenConfig& cfg, Rng& rng, int n, double p, bool directed, bool weighted) {
  ErSpec spec;
  spec.n = n;
  spec.p = p;
  spec.directed = directed;
  if (weighted) spec.weight_range = {cfg.weight_min, cfg.weight_max};
  return generate_er(spec, rng.next_u64());
}

Graph connected_er(const GenConfig& cfg, Rng& rng, int n, double p, bool weighted) {
  for (int attempt = 0; attempt < cfg.retry_budget; ++attempt) {
    auto g = er(cfg, rng, n, p, false, weighted);
    if (detail::graph_connected_undirected(g)) return g;
  }
  throw ConfigError("could not draw a connected graph (n=" + std::to_string(n) +
                    ", p=" + std::to_string(p) + ") within the retry budget");
}

Graph dag_er(const GenConfig& cfg, Rng& rng, int n, double p) {
  // ER arcs oriented along a random permutation order: acyclic by construction
  std::vector<int> rank(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) rank[static_cast<std::size_t>(v)] = v;
  rng.shuffle(rank);
  std::vector<Edge> edges;
  Rng flip = rng.fork(11);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!flip.bernoulli(p)) continue;
      bool forward = rank[static_cast<std::size_t>(u)] < rank[static_cast<std::size_t>(v)];
      edges.push_back(forward ? Edge{u, v, 1} : Edge{v, u, 1});
    }
  }
  return make_graph(n, true, false, std::move(edges), {}, {}, false);
}

Graph bipartite_er(const GenConfig& cfg, Rng& rng, int n, double p, std::vector<int>& left) {
  int n_left = rng.uniform_int(1, n - 1);
  left.clear();
  for (int v = 0; v < n_left; ++v) left.push_back(v);
  std::vector<Edge> edges;
  for (int u = 0; u < n_left; ++u) {
    for (int v = n_left; v < n; ++v) {
      if (rng.bernoulli(p)) edges.push_back(Edge{u, v, 1});
    }
  }
  return make_graph(n, false, false, std::move(edges), {}, {}, false);
}

int pick_node(const Graph& g, Rng& rng) { return rng.uniform_int(0, g.n - 1); }

PairParam pick_pair(const Graph& g, Rng& rng) {
  int u = pick_node(g, rng);
  int v = pick_node(g, rng);
  while (v == u) v = pick_node(g, rng);
  return PairParam{u, v};
}

}  // namespace

ProblemInstance make_instance(TaskKind task, const GenConfig& cfg, std::uint64_t seed) {
  Rng rng(seed);
  ProblemInstance inst;
  inst.task = task;
  double p = draw_p(cfg, rng);

  switch (task) {
    case TaskKind::cycle_detection:
    case TaskKind::edge_check: {
      bool directed = cfg.coin_directed ? *cfg.coin_directed : rng.bernoulli(0.5);
      inst.graph = er(cfg, rng, draw_n(cfg, rng, cfg.n_max), p, directed, false);
      if (task == TaskKind::edge_check) inst.params = pick_pair(inst.graph, rng);
      break;
    }
    case TaskKind::bipartite_check:
    case TaskKind::planarity: {
      inst.graph = er(cfg, rng, draw_n(cfg, rng, cfg.n_max), p, false, false);
      break;
    }
    case TaskKind::connectivity: {
      inst.graph = er(cfg, rng, draw_n(cfg, rng, cfg.n_max), p, false, false);
      inst.params = pick_pair(inst.graph, rng);
      break;
    }
    case TaskKind::euler_path: {
      // sparse draws keep Euler walks short and trails checkable
      inst.graph = er(cfg, rng, draw_n(cfg, rng, cfg.n_max), std::min(p, 0.3), false, false);
      break;
    }
    case TaskKind::hamilton_path: {
      inst.graph = er(cfg, rng, draw_n(cfg, rng, cfg.np_hard_n_max), p, false, false);
      break;
    }
    case TaskKind::topological_sort: {
      inst.graph = dag_er(cfg, rng, draw_n(cfg, rng, cfg.n_max), p);
      break;
    }
    case TaskKind::graph_traversal: {
      bool directed = cfg.coin_directed ? *cfg.coin_directed : rng.bernoulli(0.5);
      inst.graph = er(cfg, rng, draw_n(cfg, rng, cfg.n_max), p, directed, false);
      inst.params = TraversalParam{pick_node(inst.graph, rng),
                                   rng.bernoulli(0.5) ? TraversalMode::bfs : TraversalMode::dfs};
      break;
    }
    case TaskKind::neighbor:
    case TaskKind::degree_counting:
    case TaskKind::clustering_coefficient: {
      inst.graph = er(cfg, rng, draw_n(cfg, rng, cfg.n_max), p, false, false);
      inst.params = NodeParam{pick_node(inst.graph, rng)};
      break;
    }
    case TaskKind::predecessor: {
      inst.graph = er(cfg, rng, draw_n(cfg, rng, cfg.n_max), p, true, false);
      inst.params = NodeParam{pick_node(inst.graph, rng)};
      break;
    }
    case TaskKind::common_neighbors:
    case TaskKind::jaccard: {
      inst.graph = er(cfg, rng, draw_n(cfg, rng, cfg.n_max), p, false, false);
      inst.params = pick_pair(inst.graph, rng);
      break;
    }
    case TaskKind::shortest_path: {
      inst.graph = er(cfg, rng, draw_n(cfg, rng, cfg.n_max), p, false, true);
      inst.params = pick_pair(inst.graph, rng);
      break;
    }
    case TaskKind::diameter: {
      inst.graph = connected_er(cfg, rng, draw_n(cfg, rng, cfg.n_max), std::max(p, 0.3), false);
      break;
    }
    case TaskKind::minimum_spanning_tree: {
      inst.graph = connected_er(cfg, rng, draw_n(cfg, rng, cfg.n_max), std::max(p, 0.3), true);
      break;
    }
    case TaskKind::maximum_flow: {
      inst.graph = er(cfg, rng, draw_n(cfg, rng, cfg.n_max), p, true, true);
      inst.params = pick_pair(inst.graph, rng);
      break;
    }
    case TaskKind::maximum_clique: {
      inst.graph = er(cfg, rng, draw_n(cfg, rng, cfg.search_n_max), p, false, false);
      break;
    }
    case TaskKind::maximum_triangle_sum: {
      auto g = er(cfg, rng, draw_n(cfg, rng, cfg.n_max), std::max(p, 0.3), false, false);
      std::vector<long long> weights;
      for (int v = 0; v < g.n; ++v) {
        weights.push_back(cfg.weight_min +
                          rng.uniform_int(0, static_cast<int>(cfg.weight_max - cfg.weight_min)));
      }
      inst.graph = make_graph(g.n, false, false, g.edges, std::move(weights));
      break;
    }
    case TaskKind::strongly_connected_components: {
      inst.graph = er(cfg, rng, draw_n(cfg, rng, cfg.n_max), p, true, false);
      break;
    }
    case TaskKind::pagerank: {
      bool directed = cfg.coin_directed ? *cfg.coin_directed : rng.bernoulli(0.5);
      inst.graph = er(cfg, rng, draw_n(cfg, rng, cfg.n_max), p, directed, false);
      inst.params = PagerankParam{};
      break;
    }
    case TaskKind::maximum_matching: {
      std::vector<int> left;
      inst.graph = bipartite_er(cfg, rng, draw_n(cfg, rng, cfg.n_max), p, left);
      inst.params = MatchingParam{left};
      break;
    }
  }
  if (task == TaskKind::maximum_matching) {
    inst.representation = RepresentationKind::adjacency_list;
  } else if (cfg.force_representation) {
    inst.representation = *cfg.force_representation;
  } else {
    inst.representation = draw_representation(cfg, rng);
  }
  return inst;
}

}  // namespace graphforge
