#pragma once

// Internal helpers shared by the solver translation units.

#include <algorithm>
#include <queue>
#include <vector>

#include "graphforge/graph.hpp"

namespace graphforge::detail {

// BFS distances treating edges as undirected regardless of g.directed.
std::vector<int> bfs_undirected(const Graph& g, int start);

// BFS along arc direction (plain adjacency for undirected graphs).
std::vector<int> bfs_directed(const Graph& g, int start);

// Whether the subgraph induced by nodes with degree > 0 is connected
// (vacuously true when there are no edges).
bool non_isolated_connected(const Graph& g);

bool graph_connected_undirected(const Graph& g);

// Undirected neighbor view: for directed graphs, union of out- and
// in-neighbors, ascending.
std::vector<int> undirected_neighbors(const Graph& g, int v);

// Canonical closed form of an open cycle: smallest node first, lex-smaller
// direction for undirected graphs, head repeated at the end.
std::vector<int> normalize_cycle(std::vector<int> cycle, bool directed);

inline std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(b)] = a;
    return true;
  }
};

}  // namespace graphforge::detail
