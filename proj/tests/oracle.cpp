#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

namespace graphforge::oracle {

namespace {

// Everything below works from the raw edge list or an n*n capacity table,
// never from the Graph adjacency index, to stay independent of the solvers.

struct Mat {
  int n;
  std::vector<long long> w;  // 0 when absent
  explicit Mat(const Graph& g) : n(g.n), w(static_cast<std::size_t>(g.n) * g.n, 0) {
    for (const auto& e : g.edges) {
      at(e.u, e.v) = g.weighted ? e.w : 1;
      if (!g.directed) at(e.v, e.u) = g.weighted ? e.w : 1;
    }
  }
  long long& at(int i, int j) { return w[static_cast<std::size_t>(i) * n + j]; }
  long long at(int i, int j) const { return w[static_cast<std::size_t>(i) * n + j]; }
  bool edge(int i, int j) const { return i != j && at(i, j) != 0; }
};

std::vector<std::vector<bool>> reach_closure(const Mat& m) {
  int n = m.n;
  std::vector<std::vector<bool>> r(static_cast<std::size_t>(n),
                                   std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int i = 0; i < n; ++i) {
    r[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = true;
    for (int j = 0; j < n; ++j) {
      if (m.edge(i, j)) r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
    }
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (!r[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]) continue;
      for (int j = 0; j < n; ++j) {
        if (r[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]) {
          r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
        }
      }
    }
  }
  return r;
}

// all sequences of distinct nodes drawn from `pool`, any length >= 1,
// passed to visit(seq) which returns false to stop
template <class Visit>
bool for_each_sequence(const std::vector<int>& pool, std::vector<int>& seq,
                       std::vector<bool>& used, Visit&& visit) {
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    seq.push_back(pool[i]);
    if (!visit(seq)) return false;
    if (!for_each_sequence(pool, seq, used, visit)) return false;
    seq.pop_back();
    used[i] = false;
  }
  return true;
}

bool has_cycle_exhaustive(const Graph& g) {
  Mat m(g);
  std::vector<int> pool(static_cast<std::size_t>(g.n));
  for (int v = 0; v < g.n; ++v) pool[static_cast<std::size_t>(v)] = v;
  std::vector<int> seq;
  std::vector<bool> used(pool.size(), false);
  bool found = false;
  for_each_sequence(pool, seq, used, [&](const std::vector<int>& s) {
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      if (!m.edge(s[i], s[i + 1])) return true;  // not a path; keep enumerating
    }
    if (s.size() >= 3 && m.edge(s.back(), s.front())) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

bool bipartite_exhaustive(const Graph& g) {
  Mat m(g);
  // force symmetric view
  for (int i = 0; i < g.n; ++i) {
    for (int j = 0; j < g.n; ++j) {
      if (m.edge(i, j)) m.at(j, i) = 1;
    }
  }
  for (unsigned mask = 0; mask < (1u << g.n); ++mask) {
    bool ok = true;
    for (int i = 0; i < g.n && ok; ++i) {
      for (int j = i + 1; j < g.n && ok; ++j) {
        if (m.edge(i, j) && (((mask >> i) & 1u) == ((mask >> j) & 1u))) ok = false;
      }
    }
    if (ok) return true;
  }
  return false;
}

bool euler_path_exhaustive(const Graph& g) {
  if (g.edges.empty()) return true;
  if (g.edges.size() > 14) throw OracleRefusal("euler oracle bound is 14 edges");
  // trail search over edge sequences
  std::size_t m = g.edges.size();
  std::vector<bool> used(m, false);
  // try every starting endpoint
  std::vector<int> starts;
  for (const auto& e : g.edges) {
    starts.push_back(e.u);
    starts.push_back(e.v);
  }
  std::sort(starts.begin(), starts.end());
  starts.erase(std::unique(starts.begin(), starts.end()), starts.end());
  std::function<bool(int, std::size_t)> extend = [&](int at, std::size_t count) {
    if (count == m) return true;
    for (std::size_t i = 0; i < m; ++i) {
      if (used[i]) continue;
      const auto& e = g.edges[i];
      int next = -1;
      if (e.u == at) next = e.v;
      else if (e.v == at) next = e.u;
      else continue;
      used[i] = true;
      if (extend(next, count + 1)) return true;
      used[i] = false;
    }
    return false;
  };
  for (int s : starts) {
    if (extend(s, 0)) return true;
  }
  return false;
}

bool hamilton_exhaustive(const Graph& g) {
  Mat m(g);
  std::vector<int> perm(static_cast<std::size_t>(g.n));
  for (int v = 0; v < g.n; ++v) perm[static_cast<std::size_t>(v)] = v;
  do {
    bool ok = true;
    for (int i = 0; i + 1 < g.n && ok; ++i) {
      if (!m.edge(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(i + 1)]) &&
          !m.edge(perm[static_cast<std::size_t>(i + 1)], perm[static_cast<std::size_t>(i)])) {
        ok = false;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// --- planarity oracle: Kuratowski subdivision search ------------------------

// Is there a path a..b through a given subset of spare vertices (in some
// order), using only edges of the graph and avoiding `blocked`?
bool spare_path_exists(const Mat& m, int a, int b, std::vector<int> spares) {
  std::sort(spares.begin(), spares.end());
  do {
    int cur = a;
    bool ok = true;
    for (int s : spares) {
      if (!m.edge(cur, s)) {
        ok = false;
        break;
      }
      cur = s;
    }
    if (ok && m.edge(cur, b)) return true;
  } while (std::next_permutation(spares.begin(), spares.end()));
  return false;
}

// assign each spare vertex to one of the required paths (or none), then check
// every path realizable with its assigned spares, all internally disjoint
bool subdivision_exists(const Mat& m, const std::vector<std::pair<int, int>>& need,
                        const std::vector<int>& spares) {
  std::size_t k = need.size();
  std::vector<std::size_t> assign(spares.size(), k);  // k = unused
  std::function<bool(std::size_t)> rec = [&](std::size_t idx) -> bool {
    if (idx == spares.size()) {
      std::vector<std::vector<int>> per_path(k);
      for (std::size_t i = 0; i < spares.size(); ++i) {
        if (assign[i] < k) per_path[assign[i]].push_back(spares[i]);
      }
      for (std::size_t p = 0; p < k; ++p) {
        if (!spare_path_exists(m, need[p].first, need[p].second, per_path[p])) return false;
      }
      return true;
    }
    for (std::size_t choice = 0; choice <= k; ++choice) {
      assign[idx] = choice;
      if (rec(idx + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

bool planar_exhaustive(const Graph& g) {
  const int n = g.n;
  long long m_count = static_cast<long long>(g.edges.size());
  if (n >= 3 && m_count > 3LL * n - 6) return false;
  Mat m(g);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (m.edge(i, j)) m.at(j, i) = 1;
    }
  }
  std::vector<int> nodes(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) nodes[static_cast<std::size_t>(v)] = v;

  // K5 subdivisions: choose 5 branch vertices
  {
    std::vector<int> pick;
    std::function<bool(std::size_t)> choose = [&](std::size_t from) -> bool {
      if (pick.size() == 5) {
        std::vector<std::pair<int, int>> need;
        for (std::size_t i = 0; i < 5; ++i) {
          for (std::size_t j = i + 1; j < 5; ++j) need.emplace_back(pick[i], pick[j]);
        }
        std::vector<int> spares;
        for (int v : nodes) {
          if (std::find(pick.begin(), pick.end(), v) == pick.end()) spares.push_back(v);
        }
        return subdivision_exists(m, need, spares);
      }
      for (std::size_t i = from; i < nodes.size(); ++i) {
        pick.push_back(nodes[i]);
        if (choose(i + 1)) return true;
        pick.pop_back();
      }
      return false;
    };
    if (choose(0)) return false;  // K5 subdivision found -> nonplanar
  }

  // K3,3 subdivisions: choose 6 branch vertices and a 3/3 split
  {
    std::vector<int> pick;
    std::function<bool(std::size_t)> choose = [&](std::size_t from) -> bool {
      if (pick.size() == 6) {
        // all ways to split the six into two sides of three
        std::vector<std::vector<int>> splits;
        for (int a = 0; a < 6; ++a) {
          for (int b = a + 1; b < 6; ++b) {
            for (int c = b + 1; c < 6; ++c) {
              if (a == 0) splits.push_back({a, b, c});
            }
          }
        }
        std::vector<int> spares;
        for (int v : nodes) {
          if (std::find(pick.begin(), pick.end(), v) == pick.end()) spares.push_back(v);
        }
        for (const auto& left : splits) {
          std::vector<int> right;
          for (int i = 0; i < 6; ++i) {
            if (std::find(left.begin(), left.end(), i) == left.end()) right.push_back(i);
          }
          std::vector<std::pair<int, int>> need;
          for (int a : left) {
            for (int b : right) need.emplace_back(pick[static_cast<std::size_t>(a)],
                                                  pick[static_cast<std::size_t>(b)]);
          }
          if (subdivision_exists(m, need, spares)) return true;
        }
        return false;
      }
      for (std::size_t i = from; i < nodes.size(); ++i) {
        pick.push_back(nodes[i]);
        if (choose(i + 1)) return true;
        pick.pop_back();
      }
      return false;
    };
    if (choose(0)) return false;  // K3,3 subdivision found -> nonplanar
  }
  return true;
}

// --- exhaustive simple-path optimum -------------------------------------------

long long shortest_exhaustive(const Graph& g, int u, int v) {
  // enumerate every simple path u -> v by extending node sequences
  Mat m(g);
  constexpr long long kInf = -1;
  long long best = kInf;
  std::vector<bool> used(static_cast<std::size_t>(g.n), false);
  used[static_cast<std::size_t>(u)] = true;
  std::function<void(int, long long)> extend = [&](int at, long long weight) {
    if (at == v) {
      if (best < 0 || weight < best) best = weight;
      return;
    }
    for (int w = 0; w < g.n; ++w) {
      if (used[static_cast<std::size_t>(w)] || !m.edge(at, w)) continue;
      used[static_cast<std::size_t>(w)] = true;
      extend(w, weight + m.at(at, w));
      used[static_cast<std::size_t>(w)] = false;
    }
  };
  extend(u, 0);
  return best;  // -1 when unreachable
}

AnswerValue diameter_exhaustive(const Graph& g) {
  long long best = 0;
  for (int u = 0; u < g.n; ++u) {
    for (int v = 0; v < g.n; ++v) {
      if (u == v) continue;
      long long d = shortest_exhaustive(g, u, v);
      if (d < 0) return AnswerValue::sentinel("infinite");
      best = std::max(best, d);
    }
  }
  return AnswerValue::integer(best);
}

AnswerValue mst_exhaustive(const Graph& g) {
  if (g.n > 7) throw OracleRefusal("mst oracle bound is n <= 7");
  const auto& edges = g.edges;
  std::size_t m = edges.size();
  long long best = -1;
  // choose n-1 edges, test spanning-tree-ness by reachability
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> choose = [&](std::size_t from) {
    if (pick.size() == static_cast<std::size_t>(g.n - 1)) {
      // adjacency matrix of just the chosen edges
      Mat mm(g);
      for (auto& x : mm.w) x = 0;
      long long total = 0;
      for (auto i : pick) {
        mm.at(edges[i].u, edges[i].v) = 1;
        mm.at(edges[i].v, edges[i].u) = 1;
        total += g.weighted ? edges[i].w : 1;
      }
      auto reach = reach_closure(mm);
      for (int v = 0; v < g.n; ++v) {
        if (!reach[0][static_cast<std::size_t>(v)]) return;
      }
      if (best < 0 || total < best) best = total;
      return;
    }
    if (from >= m) return;
    for (std::size_t i = from; i < m; ++i) {
      pick.push_back(i);
      choose(i + 1);
      pick.pop_back();
    }
  };
  choose(0);
  if (best < 0) throw OracleRefusal("mst oracle: graph is disconnected");
  return AnswerValue::integer(best);
}

AnswerValue flow_exhaustive(const Graph& g, int s, int t) {
  // min cut over all source-side subsets
  Mat m(g);
  long long best = -1;
  for (unsigned mask = 0; mask < (1u << g.n); ++mask) {
    if (!((mask >> s) & 1u) || ((mask >> t) & 1u)) continue;
    long long cut = 0;
    for (const auto& e : g.edges) {
      if (((mask >> e.u) & 1u) && !((mask >> e.v) & 1u)) cut += e.w;
    }
    if (best < 0 || cut < best) best = cut;
  }
  return AnswerValue::integer(best);
}

AnswerValue clique_exhaustive(const Graph& g) {
  Mat m(g);
  int best = 0;
  for (unsigned mask = 0; mask < (1u << g.n); ++mask) {
    std::vector<int> nodes;
    for (int v = 0; v < g.n; ++v) {
      if ((mask >> v) & 1u) nodes.push_back(v);
    }
    bool ok = true;
    for (std::size_t i = 0; i < nodes.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < nodes.size() && ok; ++j) {
        if (!m.edge(nodes[i], nodes[j]) && !m.edge(nodes[j], nodes[i])) ok = false;
      }
    }
    if (ok) best = std::max(best, static_cast<int>(nodes.size()));
  }
  return AnswerValue::integer(best);
}

AnswerValue triangle_exhaustive(const Graph& g) {
  Mat m(g);
  long long best = -1;
  for (int a = 0; a < g.n; ++a) {
    for (int b = a + 1; b < g.n; ++b) {
      for (int c = b + 1; c < g.n; ++c) {
        if (m.edge(a, b) && m.edge(a, c) && m.edge(b, c)) {
          best = std::max(best, g.node_weights[static_cast<std::size_t>(a)] +
                                    g.node_weights[static_cast<std::size_t>(b)] +
                                    g.node_weights[static_cast<std::size_t>(c)]);
        }
      }
    }
  }
  if (best < 0) return AnswerValue::sentinel("No triangle");
  return AnswerValue::integer(best);
}

AnswerValue scc_exhaustive(const Graph& g) {
  Mat m(g);
  auto reach = reach_closure(m);
  std::vector<int> comp(static_cast<std::size_t>(g.n), -1);
  ComponentList out;
  for (int v = 0; v < g.n; ++v) {
    if (comp[static_cast<std::size_t>(v)] >= 0) continue;
    std::vector<int> group;
    for (int w = 0; w < g.n; ++w) {
      if (reach[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] &&
          reach[static_cast<std::size_t>(w)][static_cast<std::size_t>(v)]) {
        comp[static_cast<std::size_t>(w)] = static_cast<int>(out.groups.size());
        group.push_back(w);
      }
    }
    out.groups.push_back(group);
  }
  return AnswerValue{out};
}

std::vector<long double> pagerank_exhaustive(const Graph& g, double alpha, int max_iter) {
  // same recurrence, different structure: edge-list accumulation in long double
  const int n = g.n;
  std::vector<long double> pr(static_cast<std::size_t>(n), 1.0L / n);
  std::vector<int> outdeg(static_cast<std::size_t>(n), 0);
  for (const auto& e : g.edges) {
    ++outdeg[static_cast<std::size_t>(e.u)];
    if (!g.directed) ++outdeg[static_cast<std::size_t>(e.v)];
  }
  for (int it = 0; it < max_iter; ++it) {
    std::vector<long double> next(static_cast<std::size_t>(n), 0.0L);
    long double dangling = 0.0L;
    for (int v = 0; v < n; ++v) {
      if (outdeg[static_cast<std::size_t>(v)] == 0) dangling += pr[static_cast<std::size_t>(v)];
    }
    for (const auto& e : g.edges) {
      next[static_cast<std::size_t>(e.v)] +=
          pr[static_cast<std::size_t>(e.u)] / outdeg[static_cast<std::size_t>(e.u)];
      if (!g.directed) {
        next[static_cast<std::size_t>(e.u)] +=
            pr[static_cast<std::size_t>(e.v)] / outdeg[static_cast<std::size_t>(e.v)];
      }
    }
    long double max_delta = 0.0L;
    for (int v = 0; v < n; ++v) {
      long double x = (1.0L - alpha) + alpha * (next[static_cast<std::size_t>(v)] + dangling / n);
      max_delta = std::max(max_delta, std::abs(x - pr[static_cast<std::size_t>(v)]));
      next[static_cast<std::size_t>(v)] = x;
    }
    pr = next;
    if (max_delta < 1e-12L) break;
  }
  return pr;
}

AnswerValue matching_exhaustive(const Graph& g) {
  std::size_t m = g.edges.size();
  if (m > 20) throw OracleRefusal("matching oracle bound is 20 edges");
  long long best = 0;
  for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
    std::set<int> used;
    bool ok = true;
    long long size = 0;
    for (std::size_t i = 0; i < m && ok; ++i) {
      if (!((mask >> i) & 1ul)) continue;
      if (!used.insert(g.edges[i].u).second || !used.insert(g.edges[i].v).second) ok = false;
      ++size;
    }
    if (ok) best = std::max(best, size);
  }
  return AnswerValue::integer(best);
}

std::vector<int> traversal_exhaustive(const Graph& g, int start, TraversalMode mode) {
  // independent re-derivation: recursive DFS / plain queue BFS over a matrix
  Mat m(g);
  std::vector<int> order;
  std::vector<bool> seen(static_cast<std::size_t>(g.n), false);
  if (mode == TraversalMode::dfs) {
    std::function<void(int)> rec = [&](int v) {
      seen[static_cast<std::size_t>(v)] = true;
      order.push_back(v);
      for (int w = 0; w < g.n; ++w) {
        if (!seen[static_cast<std::size_t>(w)] && m.edge(v, w)) rec(w);
      }
    };
    rec(start);
  } else {
    std::vector<int> q{start};
    seen[static_cast<std::size_t>(start)] = true;
    for (std::size_t h = 0; h < q.size(); ++h) {
      order.push_back(q[h]);
      for (int w = 0; w < g.n; ++w) {
        if (!seen[static_cast<std::size_t>(w)] && m.edge(q[h], w)) {
          seen[static_cast<std::size_t>(w)] = true;
          q.push_back(w);
        }
      }
    }
  }
  return order;
}

bool topo_order_exists(const Graph& g) {
  Mat m(g);
  std::vector<int> perm(static_cast<std::size_t>(g.n));
  for (int v = 0; v < g.n; ++v) perm[static_cast<std::size_t>(v)] = v;
  do {
    std::vector<int> pos(static_cast<std::size_t>(g.n));
    for (int i = 0; i < g.n; ++i) pos[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
    bool ok = true;
    for (const auto& e : g.edges) {
      if (pos[static_cast<std::size_t>(e.u)] > pos[static_cast<std::size_t>(e.v)]) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

void require_small(const Graph& g) {
  if (g.n > 8) throw OracleRefusal("oracle bound is n <= 8, got n=" + std::to_string(g.n));
}

}  // namespace

AnswerValue answer(const ProblemInstance& inst) {
  const Graph& g = inst.graph;
  require_small(g);
  Mat m(g);
  switch (inst.task) {
    case TaskKind::cycle_detection: return AnswerValue::yes_no(has_cycle_exhaustive(g));
    case TaskKind::bipartite_check: return AnswerValue::yes_no(bipartite_exhaustive(g));
    case TaskKind::connectivity: {
      const auto& p = std::get<PairParam>(inst.params);
      auto r = reach_closure(m);
      return AnswerValue::yes_no(r[static_cast<std::size_t>(p.u)][static_cast<std::size_t>(p.v)]);
    }
    case TaskKind::edge_check: {
      const auto& p = std::get<PairParam>(inst.params);
      return AnswerValue::yes_no(m.edge(p.u, p.v) || (!g.directed && m.edge(p.v, p.u)));
    }
    case TaskKind::euler_path: return AnswerValue::yes_no(euler_path_exhaustive(g));
    case TaskKind::hamilton_path: return AnswerValue::yes_no(hamilton_exhaustive(g));
    case TaskKind::planarity: return AnswerValue::yes_no(planar_exhaustive(g));
    case TaskKind::topological_sort: return AnswerValue::yes_no(topo_order_exists(g));
    case TaskKind::graph_traversal: {
      const auto& p = std::get<TraversalParam>(inst.params);
      return AnswerValue{NodeSeq{traversal_exhaustive(g, p.start, p.mode)}};
    }
    case TaskKind::neighbor: {
      const auto& p = std::get<NodeParam>(inst.params);
      std::vector<int> out;
      for (int w = 0; w < g.n; ++w) {
        if (m.edge(p.u, w) || (!g.directed && m.edge(w, p.u))) out.push_back(w);
      }
      return AnswerValue{NodeSet{out}};
    }
    case TaskKind::predecessor: {
      const auto& p = std::get<NodeParam>(inst.params);
      std::vector<int> out;
      for (int w = 0; w < g.n; ++w) {
        if (m.edge(w, p.u)) out.push_back(w);
      }
      return AnswerValue{NodeSet{out}};
    }
    case TaskKind::common_neighbors: {
      const auto& p = std::get<PairParam>(inst.params);
      std::vector<int> out;
      for (int w = 0; w < g.n; ++w) {
        bool nu = m.edge(p.u, w) || (!g.directed && m.edge(w, p.u));
        bool nv = m.edge(p.v, w) || (!g.directed && m.edge(w, p.v));
        if (nu && nv) out.push_back(w);
      }
      return AnswerValue{NodeSet{out}};
    }
    case TaskKind::degree_counting: {
      const auto& p = std::get<NodeParam>(inst.params);
      long long deg = 0;
      for (int w = 0; w < g.n; ++w) {
        if (m.edge(p.u, w) || (!g.directed && m.edge(w, p.u))) ++deg;
      }
      return AnswerValue::integer(deg);
    }
    case TaskKind::jaccard: {
      const auto& p = std::get<PairParam>(inst.params);
      long long inter = 0, uni = 0;
      for (int w = 0; w < g.n; ++w) {
        bool nu = m.edge(p.u, w) || (!g.directed && m.edge(w, p.u));
        bool nv = m.edge(p.v, w) || (!g.directed && m.edge(w, p.v));
        if (nu && nv) ++inter;
        if (nu || nv) ++uni;
      }
      return AnswerValue{uni == 0 ? Rational{0, 1} : Rational::make(inter, uni)};
    }
    case TaskKind::clustering_coefficient: {
      const auto& p = std::get<NodeParam>(inst.params);
      std::vector<int> nb;
      for (int w = 0; w < g.n; ++w) {
        if (m.edge(p.u, w) || (!g.directed && m.edge(w, p.u))) nb.push_back(w);
      }
      if (nb.size() < 2) return AnswerValue{Rational{0, 1}};
      long long links = 0;
      for (std::size_t i = 0; i < nb.size(); ++i) {
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
          if (m.edge(nb[i], nb[j]) || m.edge(nb[j], nb[i])) ++links;
        }
      }
      return AnswerValue{
          Rational::make(links, static_cast<long long>(nb.size() * (nb.size() - 1) / 2))};
    }
    case TaskKind::shortest_path: {
      const auto& p = std::get<PairParam>(inst.params);
      long long d = shortest_exhaustive(g, p.u, p.v);
      if (d < 0) return AnswerValue::sentinel("unreachable");
      return AnswerValue::integer(d);
    }
    case TaskKind::diameter: return diameter_exhaustive(g);
    case TaskKind::minimum_spanning_tree: return mst_exhaustive(g);
    case TaskKind::maximum_flow: {
      const auto& p = std::get<PairParam>(inst.params);
      return flow_exhaustive(g, p.u, p.v);
    }
    case TaskKind::maximum_clique: return clique_exhaustive(g);
    case TaskKind::maximum_triangle_sum: return triangle_exhaustive(g);
    case TaskKind::strongly_connected_components: return scc_exhaustive(g);
    case TaskKind::pagerank: {
      const auto& p = std::get<PagerankParam>(inst.params);
      auto pr = pagerank_exhaustive(g, p.alpha, p.max_iter);
      int argmax = 0;
      for (int v = 1; v < g.n; ++v) {
        if (pr[static_cast<std::size_t>(v)] > pr[static_cast<std::size_t>(argmax)]) argmax = v;
      }
      return AnswerValue::integer(argmax);
    }
    case TaskKind::maximum_matching: return matching_exhaustive(g);
  }
  throw OracleRefusal("unknown task");
}

std::string check(const ProblemInstance& inst, const SolvedInstance& solved) {
  // witnesses first: every one must validate
  for (const auto& w : solved.witnesses) {
    auto verdict = validate_witness(inst, solved.answer, w);
    if (!verdict.ok) return "witness failed validation: " + verdict.reason;
  }
  switch (inst.task) {
    case TaskKind::topological_sort: {
      // any valid order: the validator is the predicate; existence must agree
      if (!topo_order_exists(inst.graph)) return "oracle says no valid order exists";
      const auto* seq = std::get_if<NodeSeq>(&solved.answer.v);
      if (!seq) return "expected an ordering answer";
      auto verdict = validate_witness(inst, solved.answer, PathWitness{seq->nodes});
      if (!verdict.ok) return "order fails the validity predicate: " + verdict.reason;
      return "";
    }
    case TaskKind::pagerank: {
      const auto& p = std::get<PagerankParam>(inst.params);
      auto pr = pagerank_exhaustive(inst.graph, p.alpha, p.max_iter);
      for (int v = 0; v < inst.graph.n; ++v) {
        if (std::abs(static_cast<double>(pr[static_cast<std::size_t>(v)]) -
                     solved.pagerank_scores[static_cast<std::size_t>(v)]) > 1e-9) {
          return "pagerank score of node " + std::to_string(v) + " off by more than 1e-9";
        }
      }
      auto expect = answer(inst);
      if (!(solved.answer == expect)) return "argmax node differs from oracle";
      return "";
    }
    default: {
      auto expect = answer(inst);
      if (!(solved.answer == expect)) return "answer value differs from oracle";
      return "";
    }
  }
}

}  // namespace graphforge::oracle
