#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graphforge/rng.hpp"

namespace graphforge {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parse failure in a rendered representation; offset is the byte position of
// the offending token in the input text.
struct ParseError : std::runtime_error {
  std::size_t offset;
  ParseError(const std::string& msg, std::size_t off)
      : std::runtime_error(msg + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

struct IngestError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Edge {
  int u = 0;
  int v = 0;
  long long w = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Node ids are dense integers 0..n-1. Undirected edges are stored canonically
// with u < v; the edge list is sorted by (u, v). Real-world names live only in
// node_labels so relabeled instances keep a single canonical identity.
struct Graph {
  int n = 0;
  bool directed = false;
  bool weighted = false;
  std::vector<Edge> edges;
  std::vector<long long> node_weights;   // empty unless the task uses them
  std::vector<std::string> node_labels;  // empty unless relabeled/ingested

  // Derived adjacency, ascending neighbor order.
  std::vector<std::vector<int>> adj;     // out-neighbors (all neighbors when undirected)
  std::vector<std::vector<int>> in_adj;  // in-neighbors (directed only)

  bool has_edge(int u, int v) const;
  long long edge_weight(int u, int v) const;  // 1 when unweighted
  int degree(int v) const { return static_cast<int>(adj[static_cast<std::size_t>(v)].size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  bool has_labels() const { return !node_labels.empty(); }
  bool has_node_weights() const { return !node_weights.empty(); }
  std::string label(int v) const {
    return has_labels() ? node_labels[static_cast<std::size_t>(v)] : std::to_string(v);
  }

  friend bool operator==(const Graph&, const Graph&) = default;
};

// Validating constructor: rejects self-loops, duplicate edges, out-of-range
// endpoints, non-positive weights, and non-injective label maps. Generated
// graphs must satisfy 6 <= n <= 40; ingested graphs may exceed the bound
// (allow_any_size).
Graph make_graph(int n, bool directed, bool weighted, std::vector<Edge> edges,
                 std::vector<long long> node_weights = {},
                 std::vector<std::string> node_labels = {}, bool allow_any_size = true);

constexpr int kMinGeneratedNodes = 6;
constexpr int kMaxGeneratedNodes = 40;

struct ErSpec {
  int n = 0;
  double p = 0.0;
  bool directed = false;
  std::optional<std::pair<long long, long long>> weight_range;  // inclusive, low >= 1
};

// Erdos-Renyi generator: every candidate pair is included independently with
// probability p under the seeded stream. Pure function of (spec, seed).
Graph generate_er(const ErSpec& spec, std::uint64_t seed);

enum class RepresentationKind { adjacency_matrix, adjacency_list, edge_list };

const char* representation_name(RepresentationKind kind);
std::optional<RepresentationKind> representation_from_name(const std::string& name);

// Rendered surface forms (pinned byte-for-byte; see README for the grammar):
//   edge_list          "The nodes are numbered from 0 to 5, and the edges are:
//                       (0, 1), (0, 2)."  -- undirected; weighted adds a third
//                       component "(0, 1, 7)"; directed uses "(0->1)" /
//                       "(0->1,7)" joined by single spaces.
//   adjacency_list     "{0: [1, 2], 1: [0], 2: [0]}"; weighted entries are
//                       "(v, w)" tuples; directed rows list out-neighbors.
//   adjacency_matrix   n rows of space-separated 0/weight entries; labeled
//                       graphs get a "Nodes: a, b, c" header line.
// Labeled graphs render names in place of ids everywhere.
std::string render_representation(const Graph& g, RepresentationKind kind);

struct ParseHints {
  std::optional<bool> directed;  // empty-edge renders cannot self-describe
  std::optional<bool> weighted;
};

// Inverse of render_representation: parse(render(g, k), k) == g for every
// kind. Hints resolve the rare self-undescribable cases (no edges / an
// all-ones weighted matrix); without hints the parser auto-detects.
Graph parse_representation(const std::string& text, RepresentationKind kind,
                           const ParseHints& hints = {});

// Ingestion file format (UTF-8): line 1 "# directed=true|false
// weighted=true|false", then "u<TAB>v[<TAB>w]" lines; '#' lines are comments.
// Node names map to contiguous ids in first-appearance order and are kept as
// node_labels.
Graph ingest_edge_list_file(const std::string& path);
Graph ingest_edge_list_text(const std::string& text, const std::string& origin = "<text>");

// Seeded BFS subsample from a random root, used to cut ingested graphs down
// to the generation size range. Jumps to a fresh random component if BFS
// exhausts before max_nodes.
Graph bfs_subsample(const Graph& g, int max_nodes, std::uint64_t seed);

}  // namespace graphforge
