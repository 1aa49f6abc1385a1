#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <queue>

#include "graphforge/solve.hpp"
#include "graphforge/text.hpp"
#include "solver_util.hpp"

namespace graphforge {

namespace {

Phrase cat(Phrase a, const Phrase& b) {
  a.pieces.insert(a.pieces.end(), b.pieces.begin(), b.pieces.end());
  return a;
}

Phrase seq_phrase(const std::vector<int>& nodes, const char* sep = " -> ") {
  Phrase ph;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i) ph.pieces.push_back(lit(sep));
    ph.pieces.push_back(node_ref(nodes[i]));
  }
  return ph;
}

Phrase set_phrase(const std::vector<int>& nodes) {
  Phrase ph = phrase("{");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i) ph.pieces.push_back(lit(", "));
    ph.pieces.push_back(node_ref(nodes[i]));
  }
  ph.pieces.push_back(lit("}"));
  return ph;
}

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

struct DijkstraResult {
  std::vector<long long> dist;
};

DijkstraResult dijkstra(const Graph& g, int source, bool reversed,
                        std::vector<Phrase>* steps = nullptr) {
  DijkstraResult res;
  res.dist.assign(static_cast<std::size_t>(g.n), kInf);
  res.dist[static_cast<std::size_t>(source)] = 0;
  using Item = std::pair<long long, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  heap.push({0, source});
  std::vector<bool> settled(static_cast<std::size_t>(g.n), false);
  while (!heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    if (settled[static_cast<std::size_t>(v)]) continue;
    settled[static_cast<std::size_t>(v)] = true;
    if (steps && d > 0) {
      steps->push_back(phrase("Settle node ", node_ref(v), " at distance ", num(d), "."));
    }
    const auto& row = (reversed && g.directed) ? g.in_adj[static_cast<std::size_t>(v)]
                                               : g.adj[static_cast<std::size_t>(v)];
    for (int w : row) {
      long long wt = (reversed && g.directed) ? g.edge_weight(w, v) : g.edge_weight(v, w);
      if (res.dist[static_cast<std::size_t>(v)] + wt < res.dist[static_cast<std::size_t>(w)]) {
        res.dist[static_cast<std::size_t>(w)] = res.dist[static_cast<std::size_t>(v)] + wt;
        heap.push({res.dist[static_cast<std::size_t>(w)], w});
        if (steps) {
          steps->push_back(phrase("Relax edge (", node_ref(v), ", ", node_ref(w),
                                  "): distance of ", node_ref(w), " becomes ",
                                  num(res.dist[static_cast<std::size_t>(w)]), "."));
        }
      }
    }
  }
  return res;
}

// Lexicographically smallest path among minimum-weight u->v paths, walked
// through tight edges using forward and backward distance arrays.
std::vector<int> tight_path(const Graph& g, int u, int v, const std::vector<long long>& du,
                            const std::vector<long long>& dv) {
  std::vector<int> path{u};
  long long total = du[static_cast<std::size_t>(v)];
  int cur = u;
  while (cur != v) {
    for (int w : g.adj[static_cast<std::size_t>(cur)]) {
      long long wt = g.edge_weight(cur, w);
      if (du[static_cast<std::size_t>(cur)] + wt == du[static_cast<std::size_t>(w)] &&
          du[static_cast<std::size_t>(w)] + dv[static_cast<std::size_t>(w)] == total) {
        path.push_back(w);
        cur = w;
        break;
      }
    }
  }
  return path;
}

SolvedInstance solve_shortest_path(const ProblemInstance& inst) {
  const Graph& g = inst.graph;
  const auto& p = std::get<PairParam>(inst.params);
  SolvedInstance out;
  out.steps.push_back(phrase("Run Dijkstra's algorithm from node ", node_ref(p.u), "."));
  auto fwd = dijkstra(g, p.u, false, &out.steps);
  if (fwd.dist[static_cast<std::size_t>(p.v)] >= kInf) {
    out.steps.push_back(phrase("Node ", node_ref(p.v),
                               " was never reached, so no path exists."));
    out.answer = AnswerValue::sentinel("unreachable");
    return out;
  }
  auto bwd = dijkstra(g, p.v, true);
  auto path = tight_path(g, p.u, p.v, fwd.dist, bwd.dist);
  long long total = fwd.dist[static_cast<std::size_t>(p.v)];
  out.steps.push_back(cat(phrase("The shortest path is "), seq_phrase(path)) +
                      Phrase{{lit(" with total weight "), num(total), lit(".")}});
  out.answer = AnswerValue::integer(total);
  out.witnesses.push_back(PathWitness{path});
  return out;
}

SolvedInstance solve_diameter(const ProblemInstance& inst) {
  const Graph& g = inst.graph;
  SolvedInstance out;
  long long best = -1;
  int bu = -1, bv = -1;
  std::vector<long long> best_fwd;
  for (int s = 0; s < g.n; ++s) {
    auto d = dijkstra(g, s, false);
    long long ecc = 0;
    int far = s;
    for (int t = 0; t < g.n; ++t) {
      if (d.dist[static_cast<std::size_t>(t)] >= kInf) {
        out.steps.push_back(phrase("Node ", node_ref(t), " is unreachable from node ",
                                   node_ref(s), ", so the diameter is infinite."));
        out.answer = AnswerValue::sentinel("infinite");
        return out;
      }
      if (d.dist[static_cast<std::size_t>(t)] > ecc) {
        ecc = d.dist[static_cast<std::size_t>(t)];
        far = t;
      }
    }
    out.steps.push_back(phrase("Eccentricity of node ", node_ref(s), ": ", num(ecc),
                               " (farthest node ", node_ref(far), ")."));
    if (ecc > best) {
      best = ecc;
      bu = s;
      bv = far;
      best_fwd = d.dist;
    }
  }
  auto bwd = dijkstra(g, bv, true);
  auto path = tight_path(g, bu, bv, best_fwd, bwd.dist);
  out.steps.push_back(cat(phrase("The largest eccentricity is ", num(best),
                                 ", realized by the path "),
                          seq_phrase(path)) +
                      Phrase{{lit(".")}});
  out.answer = AnswerValue::integer(best);
  out.witnesses.push_back(PathWitness{path});
  return out;
}

// --- minimum spanning tree ---------------------------------------------------

using detail::UnionFind;

SolvedInstance solve_mst(const ProblemInstance& inst) {
  const Graph& g = inst.graph;
  if (g.directed) throw PreconditionError("minimum_spanning_tree requires an undirected graph");
  if (!detail::graph_connected_undirected(g)) {
    throw PreconditionError("minimum_spanning_tree requires a connected graph");
  }
  SolvedInstance out;
  auto edges = g.edges;
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.w, a.u, a.v) < std::tie(b.w, b.u, b.v);
  });
  out.steps.push_back(phrase("Sort the ", num(static_cast<long long>(edges.size())),
                             " edges by weight and grow a forest (Kruskal)."));
  UnionFind uf(g.n);
  EdgeSet tree;
  long long total = 0;
  for (const auto& e : edges) {
    if (static_cast<int>(tree.edges.size()) == g.n - 1) break;
    if (uf.unite(e.u, e.v)) {
      tree.edges.emplace_back(e.u, e.v);
      total += e.w;
      out.steps.push_back(phrase("Edge (", node_ref(e.u), ", ", node_ref(e.v), ") with weight ",
                                 num(e.w), " joins two components; take it (total ",
                                 num(total), ")."));
    } else {
      out.steps.push_back(phrase("Edge (", node_ref(e.u), ", ", node_ref(e.v), ") with weight ",
                                 num(e.w), " would close a cycle; skip it."));
    }
  }
  std::sort(tree.edges.begin(), tree.edges.end());
  out.steps.push_back(phrase("The tree spans all ", num(g.n), " nodes with total weight ",
                             num(total), "."));
  out.answer = AnswerValue::integer(total);
  out.witnesses.push_back(tree);
  return out;
}

// --- maximum flow (Edmonds-Karp) ----------------------------------------------

SolvedInstance solve_flow_impl(const ProblemInstance& inst) {
  const Graph& g = inst.graph;
  const auto& p = std::get<PairParam>(inst.params);
  SolvedInstance out;
  const int n = g.n;
  std::vector<std::vector<long long>> residual(
      static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n), 0));
  for (const auto& e : g.edges) {
    residual[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] += e.w;
  }
  out.steps.push_back(phrase("Search for shortest augmenting paths from node ", node_ref(p.u),
                             " to node ", node_ref(p.v), " (Edmonds-Karp)."));
  long long flow = 0;
  FlowWitness witness;
  while (true) {
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    parent[static_cast<std::size_t>(p.u)] = p.u;
    std::vector<int> queue{p.u};
    for (std::size_t head = 0; head < queue.size() && parent[static_cast<std::size_t>(p.v)] < 0;
         ++head) {
      int v = queue[head];
      for (int w = 0; w < n; ++w) {
        if (parent[static_cast<std::size_t>(w)] < 0 &&
            residual[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] > 0) {
          parent[static_cast<std::size_t>(w)] = v;
          queue.push_back(w);
        }
      }
    }
    if (parent[static_cast<std::size_t>(p.v)] < 0) break;
    std::vector<int> path;
    for (int x = p.v; x != p.u; x = parent[static_cast<std::size_t>(x)]) path.push_back(x);
    path.push_back(p.u);
    std::reverse(path.begin(), path.end());
    long long bottleneck = kInf;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      bottleneck = std::min(bottleneck, residual[static_cast<std::size_t>(path[i])]
                                                [static_cast<std::size_t>(path[i + 1])]);
    }
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      residual[static_cast<std::size_t>(path[i])][static_cast<std::size_t>(path[i + 1])] -=
          bottleneck;
      residual[static_cast<std::size_t>(path[i + 1])][static_cast<std::size_t>(path[i])] +=
          bottleneck;
    }
    flow += bottleneck;
    out.steps.push_back(cat(phrase("Augment along "), seq_phrase(path)) +
                        Phrase{{lit(" with bottleneck "), num(bottleneck),
                                lit("; total flow is now "), num(flow), lit(".")}});
    witness.augmentations.push_back({path, bottleneck});
  }
  if (witness.augmentations.empty()) {
    out.steps.push_back(phrase("No augmenting path exists at all, so the maximum flow is 0."));
  } else {
    out.steps.push_back(phrase("No further augmenting path exists; the maximum flow is ",
                               num(flow), "."));
  }
  out.answer = AnswerValue::integer(flow);
  if (!witness.augmentations.empty()) out.witnesses.push_back(witness);
  return out;
}

// --- maximum clique ------------------------------------------------------------

struct CliqueSearch {
  const Graph& g;
  std::vector<int> best;
  std::vector<int> current;
  std::vector<Phrase>* steps;
  int recorded = 0;
  long long budget = 8'000'000;

  CliqueSearch(const Graph& g, std::vector<Phrase>* steps) : g(g), steps(steps) {}

  void note(Phrase ph) {
    if (recorded < 2000) {
      steps->push_back(std::move(ph));
      ++recorded;
    } else if (recorded == 2000) {
      steps->push_back(phrase("(search continues; further branches not narrated)"));
      ++recorded;
    }
  }

  int color_bound(const std::vector<int>& cand) const {
    std::vector<int> colors(cand.size(), -1);
    int used = 0;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      std::vector<bool> taken(static_cast<std::size_t>(used + 1), false);
      for (std::size_t j = 0; j < i; ++j) {
        if (colors[j] >= 0 && g.has_edge(cand[i], cand[j])) {
          if (colors[j] <= used) taken[static_cast<std::size_t>(colors[j])] = true;
        }
      }
      int c = 0;
      while (c < used && taken[static_cast<std::size_t>(c)]) ++c;
      colors[i] = c;
      if (c == used) ++used;
    }
    return used;
  }

  void expand(const std::vector<int>& cand) {
    if (--budget < 0) throw BudgetExceeded("maximum_clique search budget exceeded");
    if (cand.empty()) {
      if (current.size() > best.size()) {
        best = current;
        note(cat(phrase("New best clique of size ",
                        num(static_cast<long long>(best.size())), ": "),
                 set_phrase(best)) +
             Phrase{{lit(".")}});
      }
      return;
    }
    if (current.size() + static_cast<std::size_t>(color_bound(cand)) <= best.size()) {
      note(phrase("Prune: at most ", num(static_cast<long long>(color_bound(cand))),
                  " colors remain, which cannot beat the best clique."));
      return;
    }
    for (std::size_t i = 0; i < cand.size(); ++i) {
      int v = cand[i];
      if (current.size() + (cand.size() - i) <= best.size()) return;
      current.push_back(v);
      std::vector<int> next;
      for (std::size_t j = i + 1; j < cand.size(); ++j) {
        if (g.has_edge(v, cand[j])) next.push_back(cand[j]);
      }
      note(cat(phrase("Extend with node ", node_ref(v), " to "), set_phrase(current)) +
           Phrase{{lit(".")}});
      if (current.size() + next.size() > best.size()) {
        expand(next);
      } else if (current.size() > best.size()) {
        expand(next);
      }
      current.pop_back();
    }
  }
};

SolvedInstance solve_clique(const ProblemInstance& inst) {
  const Graph& g = inst.graph;
  SolvedInstance out;
  out.steps.push_back(phrase(
      "Search cliques by branch and bound, extending with ascending node ids and pruning with "
      "a greedy coloring bound."));
  CliqueSearch search(g, &out.steps);
  std::vector<int> all(static_cast<std::size_t>(g.n));
  for (int v = 0; v < g.n; ++v) all[static_cast<std::size_t>(v)] = v;
  search.expand(all);
  std::sort(search.best.begin(), search.best.end());
  out.steps.push_back(cat(phrase("The search finished; the maximum clique has ",
                                 num(static_cast<long long>(search.best.size())),
                                 " members: "),
                          set_phrase(search.best)) +
                      Phrase{{lit(".")}});
  out.answer = AnswerValue::integer(static_cast<long long>(search.best.size()));
  out.witnesses.push_back(NodeSet{search.best});
  return out;
}

// --- maximum triangle sum --------------------------------------------------------

SolvedInstance solve_triangle_sum(const ProblemInstance& inst) {
  const Graph& g = inst.graph;
  if (!g.has_node_weights()) {
    throw PreconditionError("maximum_triangle_sum requires node weights");
  }
  SolvedInstance out;
  out.steps.push_back(phrase(
      "Enumerate triangles by scanning each edge and the common neighbors of its endpoints."));
  long long best = -1;
  TriangleWitness tw;
  for (const auto& e : g.edges) {
    const auto& nu = g.adj[static_cast<std::size_t>(e.u)];
    const auto& nv = g.adj[static_cast<std::size_t>(e.v)];
    std::vector<int> common;
    std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(),
                          std::back_inserter(common));
    for (int w : common) {
      if (w <= e.v) continue;  // count each triangle once with u < v < w
      long long sum = g.node_weights[static_cast<std::size_t>(e.u)] +
                      g.node_weights[static_cast<std::size_t>(e.v)] +
                      g.node_weights[static_cast<std::size_t>(w)];
      out.steps.push_back(phrase("Triangle (", node_ref(e.u), ", ", node_ref(e.v), ", ",
                                 node_ref(w), ") has weight sum ", num(sum), "."));
      if (sum > best) {
        best = sum;
        tw = TriangleWitness{e.u, e.v, w};
        out.steps.push_back(phrase("This is the best triangle so far."));
      }
    }
  }
  if (best < 0) {
    out.steps.push_back(phrase("No three nodes are mutually adjacent."));
    out.answer = AnswerValue::sentinel("No triangle");
    return out;
  }
  out.steps.push_back(phrase("The largest weight sum is ", num(best), ", from triangle (",
                             node_ref(tw.a), ", ", node_ref(tw.b), ", ", node_ref(tw.c), ")."));
  out.answer = AnswerValue::integer(best);
  out.witnesses.push_back(tw);
  return out;
}

// --- strongly connected components -------------------------------------------------

struct TarjanScc {
  const Graph& g;
  std::vector<int> index, low, stack;
  std::vector<bool> on_stack;
  std::vector<std::vector<int>> components;
  std::vector<Phrase>* steps;
  int counter = 0;

  TarjanScc(const Graph& g, std::vector<Phrase>* steps)
      : g(g),
        index(static_cast<std::size_t>(g.n), -1),
        low(static_cast<std::size_t>(g.n), 0),
        on_stack(static_cast<std::size_t>(g.n), false),
        steps(steps) {}

  void visit(int v) {
    index[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = counter++;
    stack.push_back(v);
    on_stack[static_cast<std::size_t>(v)] = true;
    steps->push_back(phrase("Visit node ", node_ref(v), " (index ",
                            num(index[static_cast<std::size_t>(v)]), ")."));
    for (int w : g.adj[static_cast<std::size_t>(v)]) {
      if (index[static_cast<std::size_t>(w)] < 0) {
        visit(w);
        low[static_cast<std::size_t>(v)] =
            std::min(low[static_cast<std::size_t>(v)], low[static_cast<std::size_t>(w)]);
      } else if (on_stack[static_cast<std::size_t>(w)]) {
        low[static_cast<std::size_t>(v)] =
            std::min(low[static_cast<std::size_t>(v)], index[static_cast<std::size_t>(w)]);
      }
    }
    if (low[static_cast<std::size_t>(v)] == index[static_cast<std::size_t>(v)]) {
      std::vector<int> comp;
      while (true) {
        int w = stack.back();
        stack.pop_back();
        on_stack[static_cast<std::size_t>(w)] = false;
        comp.push_back(w);
        if (w == v) break;
      }
      std::sort(comp.begin(), comp.end());
      steps->push_back(cat(phrase("No node below can reach above node ", node_ref(v),
                                  "; close the component "),
                           set_phrase(comp)) +
                       Phrase{{lit(".")}});
      components.push_back(std::move(comp));
    }
  }
};

SolvedInstance solve_scc(const ProblemInstance& inst) {
  const Graph& g = inst.graph;
  if (!g.directed) {
    throw PreconditionError("strongly_connected_components requires a directed graph");
  }
  SolvedInstance out;
  TarjanScc tarjan(g, &out.steps);
  for (int v = 0; v < g.n; ++v) {
    if (tarjan.index[static_cast<std::size_t>(v)] < 0) tarjan.visit(v);
  }
  auto comps = tarjan.components;
  std::sort(comps.begin(), comps.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  out.steps.push_back(phrase("Every node is assigned; there are ",
                             num(static_cast<long long>(comps.size())), " components."));
  out.answer = AnswerValue{ComponentList{comps}};
  return out;
}

// --- PageRank ------------------------------------------------------------------

SolvedInstance solve_pagerank_impl(const ProblemInstance& inst) {
  const Graph& g = inst.graph;
  const auto& p = std::get<PagerankParam>(inst.params);
  if (!(p.alpha > 0.0 && p.alpha < 1.0)) {
    throw PreconditionError("pagerank requires alpha in (0, 1)");
  }
  if (p.max_iter < 1) throw PreconditionError("pagerank requires max_iter >= 1");
  SolvedInstance out;
  const int n = g.n;
  std::vector<int> outdeg(static_cast<std::size_t>(n), 0);
  bool dangling = false;
  for (int v = 0; v < n; ++v) {
    outdeg[static_cast<std::size_t>(v)] = g.degree(v);
    if (outdeg[static_cast<std::size_t>(v)] == 0) dangling = true;
  }
  out.pagerank_dangling = dangling;
  std::vector<double> pr(static_cast<std::size_t>(n), 1.0 / n);
  out.steps.push_back(phrase("Initialize every score to 1/", num(n),
                             " and iterate PR(v) = (1 - alpha) + alpha * sum(PR(u) / "
                             "OutDegree(u)) over incoming neighbors u."));
  if (dangling) {
    out.steps.push_back(phrase(
        "Nodes without outgoing edges spread their score uniformly over all nodes."));
  }
  int iterations = 0;
  char buf[64];
  for (int it = 1; it <= p.max_iter; ++it) {
    std::vector<double> next(static_cast<std::size_t>(n), 0.0);
    double dangling_mass = 0.0;
    for (int v = 0; v < n; ++v) {
      if (outdeg[static_cast<std::size_t>(v)] == 0) dangling_mass += pr[static_cast<std::size_t>(v)];
    }
    for (int v = 0; v < n; ++v) {
      double sum = 0.0;
      const auto& in = g.directed ? g.in_adj[static_cast<std::size_t>(v)]
                                  : g.adj[static_cast<std::size_t>(v)];
      for (int u : in) sum += pr[static_cast<std::size_t>(u)] / outdeg[static_cast<std::size_t>(u)];
      sum += dangling_mass / n;
      next[static_cast<std::size_t>(v)] = (1.0 - p.alpha) + p.alpha * sum;
    }
    double delta = 0.0;
    for (int v = 0; v < n; ++v) {
      delta = std::max(delta, std::abs(next[static_cast<std::size_t>(v)] -
                                       pr[static_cast<std::size_t>(v)]));
    }
    pr = std::move(next);
    iterations = it;
    std::snprintf(buf, sizeof(buf), "%.6f", delta);
    out.steps.push_back(phrase("Iteration ", num(it), ": largest score change ",
                               std::string(buf), "."));
    if (delta < 1e-12) break;
  }
  int argmax = 0;
  for (int v = 1; v < n; ++v) {
    if (pr[static_cast<std::size_t>(v)] > pr[static_cast<std::size_t>(argmax)]) argmax = v;
  }
  {
    Phrase ph = phrase("Scores after ", num(iterations), " iterations: ");
    for (int v = 0; v < n; ++v) {
      if (v) ph.pieces.push_back(lit(", "));
      std::snprintf(buf, sizeof(buf), "%.6f", pr[static_cast<std::size_t>(v)]);
      ph = cat(std::move(ph), phrase(node_ref(v), ": ", std::string(buf)));
    }
    ph.pieces.push_back(lit("."));
    out.steps.push_back(ph);
  }
  out.steps.push_back(phrase("The largest score belongs to node ", node_ref(argmax),
                             " (ties would go to the smallest id)."));
  out.answer = AnswerValue::integer(argmax);
  out.pagerank_scores = pr;
  return out;
}

// --- maximum matching -------------------------------------------------------------

struct KuhnMatching {
  const Graph& g;
  const std::vector<int>& left;
  std::vector<bool> is_left;
  std::vector<int> match;  // node -> partner or -1
  std::vector<Phrase>* steps;

  KuhnMatching(const Graph& g, const std::vector<int>& left, std::vector<Phrase>* steps)
      : g(g),
        left(left),
        is_left(static_cast<std::size_t>(g.n), false),
        match(static_cast<std::size_t>(g.n), -1),
        steps(steps) {
    for (int v : left) is_left[static_cast<std::size_t>(v)] = true;
  }

  bool augment(int u, std::vector<bool>& visited) {
    for (int w : g.adj[static_cast<std::size_t>(u)]) {
      if (visited[static_cast<std::size_t>(w)]) continue;
      visited[static_cast<std::size_t>(w)] = true;
      steps->push_back(phrase("Consider neighbor ", node_ref(w), " of node ", node_ref(u), "."));
      if (match[static_cast<std::size_t>(w)] < 0) {
        steps->push_back(phrase("Node ", node_ref(w), " is free; match (", node_ref(u), ", ",
                                node_ref(w), ")."));
        match[static_cast<std::size_t>(w)] = u;
        match[static_cast<std::size_t>(u)] = w;
        return true;
      }
      int owner = match[static_cast<std::size_t>(w)];
      steps->push_back(phrase("Node ", node_ref(w), " is taken by node ", node_ref(owner),
                              "; try to re-seat that node."));
      if (augment(owner, visited)) {
        match[static_cast<std::size_t>(w)] = u;
        match[static_cast<std::size_t>(u)] = w;
        steps->push_back(phrase("Re-seating worked; match (", node_ref(u), ", ", node_ref(w),
                                ")."));
        return true;
      }
    }
    return false;
  }
};

SolvedInstance solve_matching_impl(const ProblemInstance& inst) {
  const Graph& g = inst.graph;
  const auto& p = std::get<MatchingParam>(inst.params);
  std::vector<bool> is_left(static_cast<std::size_t>(g.n), false);
  for (int v : p.left) {
    if (v < 0 || v >= g.n) throw PreconditionError("matching left partition names invalid node");
    is_left[static_cast<std::size_t>(v)] = true;
  }
  for (const auto& e : g.edges) {
    if (is_left[static_cast<std::size_t>(e.u)] == is_left[static_cast<std::size_t>(e.v)]) {
      throw PreconditionError("edge does not cross the declared partition", {e.u, e.v});
    }
  }
  SolvedInstance out;
  out.steps.push_back(phrase(
      "Grow the matching with augmenting paths, trying the left nodes in ascending order."));
  KuhnMatching kuhn(g, p.left, &out.steps);
  long long size = 0;
  for (int u : p.left) {
    out.steps.push_back(phrase("Search an augmenting path from node ", node_ref(u), "."));
    std::vector<bool> visited(static_cast<std::size_t>(g.n), false);
    if (kuhn.augment(u, visited)) {
      ++size;
      out.steps.push_back(phrase("Matching size is now ", num(size), "."));
    } else {
      out.steps.push_back(phrase("No augmenting path from node ", node_ref(u),
                                 "; it stays unmatched."));
    }
  }
  PairList pairs;
  for (int u : p.left) {
    if (kuhn.match[static_cast<std::size_t>(u)] >= 0) {
      pairs.pairs.emplace_back(u, kuhn.match[static_cast<std::size_t>(u)]);
    }
  }
  std::sort(pairs.pairs.begin(), pairs.pairs.end());
  {
    Phrase ph = phrase("All left nodes processed; the maximum matching is [");
    for (std::size_t i = 0; i < pairs.pairs.size(); ++i) {
      if (i) ph.pieces.push_back(lit(", "));
      ph = cat(std::move(ph), phrase("(", node_ref(pairs.pairs[i].first), ", ",
                                     node_ref(pairs.pairs[i].second), ")"));
    }
    ph.pieces.push_back(lit("] with size "));
    ph.pieces.push_back(num(size));
    ph.pieces.push_back(lit("."));
    out.steps.push_back(ph);
  }
  out.answer = AnswerValue::integer(size);
  out.witnesses.push_back(pairs);
  return out;
}

}  // namespace

SolvedInstance solve_path_opt(const ProblemInstance& instance) {
  switch (instance.task) {
    case TaskKind::shortest_path: {
      const auto* p = std::get_if<PairParam>(&instance.params);
      if (!p) throw PreconditionError("shortest_path requires query nodes");
      return solve_shortest_path(instance);
    }
    case TaskKind::diameter: return solve_diameter(instance);
    case TaskKind::minimum_spanning_tree: return solve_mst(instance);
    default:
      throw DispatchError(std::string("solve_path_opt cannot handle task ") +
                          task_name(instance.task));
  }
}

SolvedInstance solve_flow(const ProblemInstance& instance) {
  if (instance.task != TaskKind::maximum_flow) {
    throw DispatchError("solve_flow handles maximum_flow only");
  }
  const auto& g = instance.graph;
  if (!g.directed) throw PreconditionError("maximum_flow requires a directed graph");
  const auto* p = std::get_if<PairParam>(&instance.params);
  if (!p || p->u == p->v) throw PreconditionError("maximum_flow requires source != sink");
  return solve_flow_impl(instance);
}

SolvedInstance solve_np_search(const ProblemInstance& instance) {
  switch (instance.task) {
    case TaskKind::maximum_clique:
      if (instance.graph.directed) {
        throw PreconditionError("maximum_clique requires an undirected graph");
      }
      return solve_clique(instance);
    case TaskKind::maximum_triangle_sum:
      if (instance.graph.directed) {
        throw PreconditionError("maximum_triangle_sum requires an undirected graph");
      }
      return solve_triangle_sum(instance);
    default:
      throw DispatchError(std::string("solve_np_search cannot handle task ") +
                          task_name(instance.task));
  }
}

SolvedInstance solve_components(const ProblemInstance& instance) {
  if (instance.task != TaskKind::strongly_connected_components) {
    throw DispatchError("solve_components handles strongly_connected_components only");
  }
  return solve_scc(instance);
}

SolvedInstance solve_pagerank(const ProblemInstance& instance) {
  if (instance.task != TaskKind::pagerank) {
    throw DispatchError("solve_pagerank handles pagerank only");
  }
  if (!std::get_if<PagerankParam>(&instance.params)) {
    throw PreconditionError("pagerank requires alpha/max_iter parameters");
  }
  return solve_pagerank_impl(instance);
}

SolvedInstance solve_matching(const ProblemInstance& instance) {
  if (instance.task != TaskKind::maximum_matching) {
    throw DispatchError("solve_matching handles maximum_matching only");
  }
  if (instance.graph.directed) {
    throw PreconditionError("maximum_matching requires an undirected graph");
  }
  const auto* p = std::get_if<MatchingParam>(&instance.params);
  if (!p || p->left.empty()) {
    throw PreconditionError("maximum_matching requires a declared left partition");
  }
  return solve_matching_impl(instance);
}

}  // namespace graphforge
