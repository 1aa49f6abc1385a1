#include <algorithm>
#include <set>
#include <sstream>

#include "graphforge/solve.hpp"
#include "solver_util.hpp"

namespace graphforge {

namespace {

using detail::normalize_cycle;

// Structural dedupe key; enumeration order already makes output deterministic.
std::string witness_key(const Witness& w) {
  std::ostringstream os;
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, PathWitness>) {
          os << "path:";
          for (int v : x.nodes) os << v << ",";
        } else if constexpr (std::is_same_v<T, ColoringWitness>) {
          os << "color:";
          for (int c : x.color) os << c;
        } else if constexpr (std::is_same_v<T, EdgeWitness>) {
          os << "edge:" << x.u << "," << x.v;
        } else if constexpr (std::is_same_v<T, NodeSet>) {
          os << "set:";
          for (int v : x.nodes) os << v << ",";
        } else if constexpr (std::is_same_v<T, PairList>) {
          os << "pairs:";
          for (auto [a, b] : x.pairs) os << a << "-" << b << ",";
        } else if constexpr (std::is_same_v<T, EdgeSet>) {
          os << "edges:";
          for (auto [a, b] : x.edges) os << a << "-" << b << ",";
        } else if constexpr (std::is_same_v<T, FlowWitness>) {
          os << "flow:";
          for (const auto& aug : x.augmentations) {
            for (int v : aug.path) os << v << ",";
            os << "*" << aug.bottleneck << ";";
          }
        } else if constexpr (std::is_same_v<T, TriangleWitness>) {
          os << "tri:" << x.a << "," << x.b << "," << x.c;
        }
      },
      w);
  return os.str();
}

struct Collector {
  int want;
  std::vector<Witness> out;
  std::set<std::string> seen;

  explicit Collector(int k) : want(k) {}

  bool full() const { return static_cast<int>(out.size()) >= want; }

  void add(Witness w) {
    if (full()) return;
    auto key = witness_key(w);
    if (seen.insert(key).second) out.push_back(std::move(w));
  }
};

constexpr long long kDefaultBudget = 600'000;

// --- simple cycles, lexicographic (smallest-anchor first) -------------------

struct CycleEnum {
  const Graph& g;
  Collector& sink;
  bool odd_only;
  long long budget = kDefaultBudget;
  std::vector<int> path;
  std::vector<bool> on_path;

  CycleEnum(const Graph& g, Collector& sink, bool odd_only)
      : g(g), sink(sink), odd_only(odd_only), on_path(static_cast<std::size_t>(g.n), false) {}

  void run() {
    for (int s = 0; s < g.n && !sink.full() && budget > 0; ++s) {
      path = {s};
      on_path.assign(static_cast<std::size_t>(g.n), false);
      on_path[static_cast<std::size_t>(s)] = true;
      extend(s, s);
    }
  }

  void extend(int anchor, int v) {
    if (sink.full() || --budget < 0) return;
    for (int w : g.adj[static_cast<std::size_t>(v)]) {
      if (sink.full() || budget < 0) return;
      if (w == anchor && path.size() >= 3) {
        if (!g.directed && path[1] > path.back()) continue;  // mirror duplicate
        if (odd_only && path.size() % 2 == 0) continue;
        sink.add(PathWitness{normalize_cycle(path, g.directed)});
        continue;
      }
      if (w <= anchor || on_path[static_cast<std::size_t>(w)]) continue;
      on_path[static_cast<std::size_t>(w)] = true;
      path.push_back(w);
      extend(anchor, w);
      path.pop_back();
      on_path[static_cast<std::size_t>(w)] = false;
    }
    // undirected traversal must also look along incoming arcs
    if (g.directed) return;
  }
};

// --- simple paths between two nodes, lexicographic --------------------------

struct PathEnum {
  const Graph& g;
  Collector& sink;
  int target;
  long long budget = kDefaultBudget;
  std::vector<int> path;
  std::vector<bool> on_path;

  PathEnum(const Graph& g, Collector& sink, int target)
      : g(g), sink(sink), target(target), on_path(static_cast<std::size_t>(g.n), false) {}

  void run(int source) {
    path = {source};
    on_path.assign(static_cast<std::size_t>(g.n), false);
    on_path[static_cast<std::size_t>(source)] = true;
    extend(source);
  }

  void extend(int v) {
    if (sink.full() || --budget < 0) return;
    if (v == target) {
      sink.add(PathWitness{path});
      return;
    }
    for (int w : g.adj[static_cast<std::size_t>(v)]) {
      if (sink.full() || budget < 0) return;
      if (on_path[static_cast<std::size_t>(w)]) continue;
      on_path[static_cast<std::size_t>(w)] = true;
      path.push_back(w);
      extend(w);
      path.pop_back();
      on_path[static_cast<std::size_t>(w)] = false;
    }
  }
};

// --- shortest paths through tight edges --------------------------------------

std::vector<long long> dijkstra_dist(const Graph& g, int source, bool reversed) {
  constexpr long long kInf = std::numeric_limits<long long>::max() / 4;
  std::vector<long long> dist(static_cast<std::size_t>(g.n), kInf);
  dist[static_cast<std::size_t>(source)] = 0;
  std::vector<bool> done(static_cast<std::size_t>(g.n), false);
  for (int round = 0; round < g.n; ++round) {
    int best = -1;
    for (int v = 0; v < g.n; ++v) {
      if (!done[static_cast<std::size_t>(v)] && dist[static_cast<std::size_t>(v)] < kInf &&
          (best < 0 || dist[static_cast<std::size_t>(v)] < dist[static_cast<std::size_t>(best)])) {
        best = v;
      }
    }
    if (best < 0) break;
    done[static_cast<std::size_t>(best)] = true;
    const auto& row = (reversed && g.directed) ? g.in_adj[static_cast<std::size_t>(best)]
                                               : g.adj[static_cast<std::size_t>(best)];
    for (int w : row) {
      long long wt =
          (reversed && g.directed) ? g.edge_weight(w, best) : g.edge_weight(best, w);
      dist[static_cast<std::size_t>(w)] =
          std::min(dist[static_cast<std::size_t>(w)], dist[static_cast<std::size_t>(best)] + wt);
    }
  }
  return dist;
}

struct TightPathEnum {
  const Graph& g;
  Collector& sink;
  int target;
  long long total;
  const std::vector<long long>& du;
  const std::vector<long long>& dv;
  long long budget = kDefaultBudget;
  std::vector<int> path;

  void extend(int v) {
    if (sink.full() || --budget < 0) return;
    if (v == target) {
      sink.add(PathWitness{path});
      return;
    }
    for (int w : g.adj[static_cast<std::size_t>(v)]) {
      if (sink.full() || budget < 0) return;
      long long wt = g.edge_weight(v, w);
      if (du[static_cast<std::size_t>(v)] + wt == du[static_cast<std::size_t>(w)] &&
          du[static_cast<std::size_t>(w)] + dv[static_cast<std::size_t>(w)] == total) {
        path.push_back(w);
        extend(w);
        path.pop_back();
      }
    }
  }
};

// --- linear extensions (topological orders), lexicographic -------------------

struct TopoEnum {
  const Graph& g;
  Collector& sink;
  long long budget = kDefaultBudget;
  std::vector<int> indeg;
  std::vector<int> order;

  TopoEnum(const Graph& g, Collector& sink)
      : g(g), sink(sink), indeg(static_cast<std::size_t>(g.n), 0) {
    for (const auto& e : g.edges) ++indeg[static_cast<std::size_t>(e.v)];
  }

  void extend() {
    if (sink.full() || --budget < 0) return;
    if (static_cast<int>(order.size()) == g.n) {
      sink.add(PathWitness{order});
      return;
    }
    for (int v = 0; v < g.n; ++v) {
      if (sink.full() || budget < 0) return;
      if (indeg[static_cast<std::size_t>(v)] != 0) continue;
      indeg[static_cast<std::size_t>(v)] = -1;  // placed
      for (int w : g.adj[static_cast<std::size_t>(v)]) --indeg[static_cast<std::size_t>(w)];
      order.push_back(v);
      extend();
      order.pop_back();
      for (int w : g.adj[static_cast<std::size_t>(v)]) ++indeg[static_cast<std::size_t>(w)];
      indeg[static_cast<std::size_t>(v)] = 0;
    }
  }
};

// --- Euler walks, lexicographic ----------------------------------------------

struct EulerEnum {
  const Graph& g;
  Collector& sink;
  long long budget = kDefaultBudget;
  std::vector<std::vector<std::pair<int, int>>> rows;  // (neighbor, edge index)
  std::vector<bool> used;
  std::vector<int> walk;

  EulerEnum(const Graph& g, Collector& sink)
      : g(g), sink(sink), rows(static_cast<std::size_t>(g.n)), used(g.edges.size(), false) {
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      const auto& e = g.edges[i];
      rows[static_cast<std::size_t>(e.u)].push_back({e.v, static_cast<int>(i)});
      rows[static_cast<std::size_t>(e.v)].push_back({e.u, static_cast<int>(i)});
    }
    for (auto& row : rows) std::sort(row.begin(), row.end());
  }

  void run() {
    std::vector<int> odd;
    for (int v = 0; v < g.n; ++v) {
      if (rows[static_cast<std::size_t>(v)].size() % 2 == 1) odd.push_back(v);
    }
    std::vector<int> starts;
    if (!odd.empty()) {
      starts = odd;
    } else {
      for (int v = 0; v < g.n; ++v) {
        if (!rows[static_cast<std::size_t>(v)].empty()) starts.push_back(v);
      }
    }
    for (int s : starts) {
      if (sink.full() || budget < 0) return;
      walk = {s};
      extend(s);
    }
  }

  void extend(int v) {
    if (sink.full() || --budget < 0) return;
    if (walk.size() == g.edges.size() + 1) {
      sink.add(PathWitness{walk});
      return;
    }
    for (auto [w, idx] : rows[static_cast<std::size_t>(v)]) {
      if (sink.full() || budget < 0) return;
      if (used[static_cast<std::size_t>(idx)]) continue;
      used[static_cast<std::size_t>(idx)] = true;
      walk.push_back(w);
      extend(w);
      walk.pop_back();
      used[static_cast<std::size_t>(idx)] = false;
    }
  }
};

// --- Hamilton paths, lexicographic --------------------------------------------

struct HamiltonEnum {
  const Graph& g;
  Collector& sink;
  long long budget = kDefaultBudget;
  std::vector<bool> visited;
  std::vector<int> path;

  HamiltonEnum(const Graph& g, Collector& sink)
      : g(g), sink(sink), visited(static_cast<std::size_t>(g.n), false) {}

  void run() {
    for (int s = 0; s < g.n; ++s) {
      if (sink.full() || budget < 0) return;
      visited[static_cast<std::size_t>(s)] = true;
      path = {s};
      extend(s);
      visited[static_cast<std::size_t>(s)] = false;
    }
  }

  void extend(int v) {
    if (sink.full() || --budget < 0) return;
    if (static_cast<int>(path.size()) == g.n) {
      sink.add(PathWitness{path});
      return;
    }
    for (int w : g.adj[static_cast<std::size_t>(v)]) {
      if (sink.full() || budget < 0) return;
      if (visited[static_cast<std::size_t>(w)]) continue;
      visited[static_cast<std::size_t>(w)] = true;
      path.push_back(w);
      extend(w);
      path.pop_back();
      visited[static_cast<std::size_t>(w)] = false;
    }
  }
};

// --- minimum spanning trees ----------------------------------------------------
//
// All MSTs arise from Kruskal with choices inside equal-weight groups, so the
// enumeration branches only there: within a group, every maximal acyclic
// subset of the group's edges (w.r.t. the components entering the group)
// leads to a minimum tree.

struct MstEnum {
  const Graph& g;
  Collector& sink;
  long long budget = kDefaultBudget;
  std::vector<std::vector<Edge>> groups;

  MstEnum(const Graph& g, Collector& sink) : g(g), sink(sink) {
    auto edges = g.edges;
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
      return std::tie(a.w, a.u, a.v) < std::tie(b.w, b.u, b.v);
    });
    for (const auto& e : edges) {
      if (groups.empty() || groups.back().front().w != e.w) groups.push_back({});
      groups.back().push_back(e);
    }
  }

  int max_unions(const std::vector<Edge>& edges, std::size_t from, detail::UnionFind uf) {
    int count = 0;
    for (std::size_t i = from; i < edges.size(); ++i) {
      if (uf.unite(edges[i].u, edges[i].v)) ++count;
    }
    return count;
  }

  void per_group(std::size_t gi, detail::UnionFind uf, std::vector<std::pair<int, int>> chosen) {
    if (sink.full() || --budget < 0) return;
    if (gi == groups.size()) {
      if (static_cast<int>(chosen.size()) == g.n - 1) {
        std::sort(chosen.begin(), chosen.end());
        sink.add(EdgeSet{chosen});
      }
      return;
    }
    const auto& group = groups[gi];
    int need = max_unions(group, 0, uf);
    // enumerate maximal acyclic subsets achieving `need` unions
    struct Frame {
      detail::UnionFind uf;
      std::vector<std::pair<int, int>> chosen;
    };
    within_group(gi, group, 0, need, uf, chosen);
  }

  void within_group(std::size_t gi, const std::vector<Edge>& group, std::size_t idx, int need,
                    detail::UnionFind uf, std::vector<std::pair<int, int>> chosen) {
    if (sink.full() || --budget < 0) return;
    if (need == 0) {
      per_group(gi + 1, uf, chosen);
      return;
    }
    if (idx >= group.size()) return;
    const Edge& e = group[idx];
    auto u_root = uf.find(e.u), v_root = uf.find(e.v);
    if (u_root != v_root) {
      // include e
      auto uf2 = uf;
      uf2.unite(e.u, e.v);
      auto chosen2 = chosen;
      chosen2.emplace_back(e.u, e.v);
      within_group(gi, group, idx + 1, need - 1, uf2, chosen2);
      // exclude e only if the rest of the group still reaches `need`
      if (max_unions(group, idx + 1, uf) == need) {
        within_group(gi, group, idx + 1, need, uf, chosen);
      }
    } else {
      within_group(gi, group, idx + 1, need, uf, chosen);
    }
  }

  void run() { per_group(0, detail::UnionFind(g.n), {}); }
};

// --- maximum flows: branch over shortest augmenting path choices ----------------

struct FlowEnum {
  const Graph& g;
  int source, target;
  Collector& sink;
  long long budget = 40'000;

  void paths_in_residual(const std::vector<std::vector<long long>>& residual,
                         std::vector<std::vector<int>>& out, int limit) {
    // BFS layering, then lexicographic path enumeration along the layers
    const int n = g.n;
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    dist[static_cast<std::size_t>(source)] = 0;
    std::vector<int> queue{source};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      for (int w = 0; w < n; ++w) {
        if (dist[static_cast<std::size_t>(w)] < 0 &&
            residual[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] > 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
          queue.push_back(w);
        }
      }
    }
    if (dist[static_cast<std::size_t>(target)] < 0) return;
    std::vector<int> path{source};
    enumerate_layered(residual, dist, path, out, limit);
  }

  void enumerate_layered(const std::vector<std::vector<long long>>& residual,
                         const std::vector<int>& dist, std::vector<int>& path,
                         std::vector<std::vector<int>>& out, int limit) {
    if (static_cast<int>(out.size()) >= limit) return;
    int v = path.back();
    if (v == target) {
      out.push_back(path);
      return;
    }
    for (int w = 0; w < g.n; ++w) {
      if (static_cast<int>(out.size()) >= limit) return;
      if (residual[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] > 0 &&
          dist[static_cast<std::size_t>(w)] == dist[static_cast<std::size_t>(v)] + 1) {
        path.push_back(w);
        enumerate_layered(residual, dist, path, out, limit);
        path.pop_back();
      }
    }
  }

  void branch(std::vector<std::vector<long long>> residual, FlowWitness partial) {
    if (sink.full() || --budget < 0) return;
    std::vector<std::vector<int>> choices;
    paths_in_residual(residual, choices, 3);
    if (choices.empty()) {
      if (!partial.augmentations.empty()) sink.add(partial);
      return;
    }
    for (const auto& path : choices) {
      if (sink.full() || budget < 0) return;
      auto res2 = residual;
      long long bottleneck = std::numeric_limits<long long>::max();
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        bottleneck = std::min(bottleneck, res2[static_cast<std::size_t>(path[i])]
                                              [static_cast<std::size_t>(path[i + 1])]);
      }
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        res2[static_cast<std::size_t>(path[i])][static_cast<std::size_t>(path[i + 1])] -= bottleneck;
        res2[static_cast<std::size_t>(path[i + 1])][static_cast<std::size_t>(path[i])] += bottleneck;
      }
      auto partial2 = partial;
      partial2.augmentations.push_back({path, bottleneck});
      branch(std::move(res2), std::move(partial2));
    }
  }

  void run() {
    std::vector<std::vector<long long>> residual(
        static_cast<std::size_t>(g.n), std::vector<long long>(static_cast<std::size_t>(g.n), 0));
    for (const auto& e : g.edges) {
      residual[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] += e.w;
    }
    branch(std::move(residual), {});
  }
};

// --- maximum cliques of a known size ------------------------------------------

struct CliqueEnum {
  const Graph& g;
  Collector& sink;
  std::size_t want_size;
  long long budget = kDefaultBudget;
  std::vector<int> current;

  void extend(const std::vector<int>& cand) {
    if (sink.full() || --budget < 0) return;
    if (current.size() == want_size) {
      sink.add(NodeSet{current});
      return;
    }
    if (current.size() + cand.size() < want_size) return;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if (sink.full() || budget < 0) return;
      if (current.size() + (cand.size() - i) < want_size) return;
      int v = cand[i];
      std::vector<int> next;
      for (std::size_t j = i + 1; j < cand.size(); ++j) {
        if (g.has_edge(v, cand[j])) next.push_back(cand[j]);
      }
      current.push_back(v);
      extend(next);
      current.pop_back();
    }
  }

  void run() {
    std::vector<int> all(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v) all[static_cast<std::size_t>(v)] = v;
    extend(all);
  }
};

// --- maximum matchings ------------------------------------------------------------

struct MatchingEnum {
  const Graph& g;
  const std::vector<int>& left;
  Collector& sink;
  long long budget = 40'000;

  int max_matching_size(const std::vector<bool>& banned, int from_index) const {
    // plain Kuhn on the remaining left nodes / unbanned right nodes
    std::vector<int> match(static_cast<std::size_t>(g.n), -1);
    int size = 0;
    for (std::size_t i = static_cast<std::size_t>(from_index); i < left.size(); ++i) {
      int u = left[i];
      if (banned[static_cast<std::size_t>(u)]) continue;
      std::vector<bool> visited(static_cast<std::size_t>(g.n), false);
      if (try_augment(u, banned, visited, match)) ++size;
    }
    return size;
  }

  bool try_augment(int u, const std::vector<bool>& banned, std::vector<bool>& visited,
                   std::vector<int>& match) const {
    for (int w : g.adj[static_cast<std::size_t>(u)]) {
      if (banned[static_cast<std::size_t>(w)] || visited[static_cast<std::size_t>(w)]) continue;
      visited[static_cast<std::size_t>(w)] = true;
      if (match[static_cast<std::size_t>(w)] < 0 ||
          try_augment(match[static_cast<std::size_t>(w)], banned, visited, match)) {
        match[static_cast<std::size_t>(w)] = u;
        return true;
      }
    }
    return false;
  }

  void branch(std::size_t idx, std::vector<bool> banned, std::vector<std::pair<int, int>> pairs,
              int remaining_size) {
    if (sink.full() || --budget < 0) return;
    if (idx == left.size()) {
      if (remaining_size == 0) {
        std::sort(pairs.begin(), pairs.end());
        sink.add(PairList{pairs});
      }
      return;
    }
    int u = left[idx];
    // option: match u with each available neighbor that keeps the optimum
    for (int w : g.adj[static_cast<std::size_t>(u)]) {
      if (sink.full() || budget < 0) return;
      if (banned[static_cast<std::size_t>(w)]) continue;
      auto banned2 = banned;
      banned2[static_cast<std::size_t>(u)] = true;
      banned2[static_cast<std::size_t>(w)] = true;
      if (max_matching_size(banned2, static_cast<int>(idx) + 1) == remaining_size - 1) {
        auto pairs2 = pairs;
        pairs2.emplace_back(u, w);
        branch(idx + 1, std::move(banned2), std::move(pairs2), remaining_size - 1);
      }
    }
    // option: leave u unmatched if the optimum survives
    auto banned3 = banned;
    banned3[static_cast<std::size_t>(u)] = true;
    if (max_matching_size(banned3, static_cast<int>(idx) + 1) == remaining_size) {
      branch(idx + 1, std::move(banned3), std::move(pairs), remaining_size);
    }
  }

  void run(int optimum) {
    branch(0, std::vector<bool>(static_cast<std::size_t>(g.n), false), {}, optimum);
  }
};

}  // namespace

std::vector<Witness> enumerate_witnesses(const ProblemInstance& instance, int max_count,
                                         Rng& rng) {
  (void)rng;  // enumeration is lexicographic; the stream stays for API stability
  if (max_count < 1) return {};
  auto solved = solve(instance);
  if (!witnessable(instance.task, solved.answer)) return {};
  Collector sink(max_count);
  const Graph& g = instance.graph;

  switch (instance.task) {
    case TaskKind::cycle_detection: {
      CycleEnum{g, sink, false}.run();
      break;
    }
    case TaskKind::bipartite_check: {
      if (std::get<bool>(solved.answer.v)) {
        sink.add(solved.witnesses.front());
      } else {
        CycleEnum{g, sink, true}.run();
      }
      break;
    }
    case TaskKind::connectivity: {
      const auto& p = std::get<PairParam>(instance.params);
      PathEnum en{g, sink, p.v};
      en.run(p.u);
      break;
    }
    case TaskKind::edge_check: {
      sink.add(solved.witnesses.front());
      break;
    }
    case TaskKind::euler_path: {
      if (g.edges.empty()) {
        sink.add(solved.witnesses.front());
      } else {
        EulerEnum{g, sink}.run();
      }
      break;
    }
    case TaskKind::hamilton_path: {
      HamiltonEnum{g, sink}.run();
      break;
    }
    case TaskKind::topological_sort: {
      TopoEnum{g, sink}.extend();
      break;
    }
    case TaskKind::graph_traversal: {
      sink.add(solved.witnesses.front());
      break;
    }
    case TaskKind::shortest_path: {
      const auto& p = std::get<PairParam>(instance.params);
      auto du = dijkstra_dist(g, p.u, false);
      auto dv = dijkstra_dist(g, p.v, true);
      TightPathEnum en{g, sink, p.v, std::get<long long>(solved.answer.v), du, dv};
      en.path = {p.u};
      en.extend(p.u);
      break;
    }
    case TaskKind::diameter: {
      long long diam = std::get<long long>(solved.answer.v);
      for (int u = 0; u < g.n && !sink.full(); ++u) {
        auto du = dijkstra_dist(g, u, false);
        for (int v = 0; v < g.n && !sink.full(); ++v) {
          if (u == v || du[static_cast<std::size_t>(v)] != diam) continue;
          if (!g.directed && v < u) continue;  // (u,v) and (v,u) witness the same pair
          auto dv = dijkstra_dist(g, v, true);
          TightPathEnum en{g, sink, v, diam, du, dv};
          en.path = {u};
          en.extend(u);
        }
      }
      break;
    }
    case TaskKind::minimum_spanning_tree: {
      MstEnum{g, sink}.run();
      break;
    }
    case TaskKind::maximum_flow: {
      const auto& p = std::get<PairParam>(instance.params);
      FlowEnum en{g, p.u, p.v, sink};
      en.run();
      break;
    }
    case TaskKind::maximum_clique: {
      CliqueEnum en{g, sink, static_cast<std::size_t>(std::get<long long>(solved.answer.v))};
      en.run();
      break;
    }
    case TaskKind::maximum_triangle_sum: {
      long long best = std::get<long long>(solved.answer.v);
      for (const auto& e : g.edges) {
        if (sink.full()) break;
        const auto& nu = g.adj[static_cast<std::size_t>(e.u)];
        const auto& nv = g.adj[static_cast<std::size_t>(e.v)];
        std::vector<int> common;
        std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(),
                              std::back_inserter(common));
        for (int w : common) {
          if (w <= e.v) continue;
          long long sum = g.node_weights[static_cast<std::size_t>(e.u)] +
                          g.node_weights[static_cast<std::size_t>(e.v)] +
                          g.node_weights[static_cast<std::size_t>(w)];
          if (sum == best) sink.add(TriangleWitness{e.u, e.v, w});
        }
      }
      break;
    }
    case TaskKind::maximum_matching: {
      const auto& p = std::get<MatchingParam>(instance.params);
      MatchingEnum en{g, p.left, sink};
      en.run(static_cast<int>(std::get<long long>(solved.answer.v)));
      break;
    }
    default:
      return {};
  }

  // tripwire: everything returned must validate and agree with the answer
  std::vector<Witness> result;
  for (auto& w : sink.out) {
    if (validate_witness(instance, solved.answer, w).ok) result.push_back(std::move(w));
  }
  return result;
}

}  // namespace graphforge
