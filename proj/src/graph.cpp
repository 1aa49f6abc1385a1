#include "graphforge/graph.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace graphforge {

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n || v >= n || u == v) return false;
  const auto& row = adj[static_cast<std::size_t>(u)];
  return std::binary_search(row.begin(), row.end(), v);
}

long long Graph::edge_weight(int u, int v) const {
  if (!weighted) return has_edge(u, v) ? 1 : 0;
  int a = u, b = v;
  if (!directed && a > b) std::swap(a, b);
  auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(a, b),
                             [](const Edge& e, const std::pair<int, int>& key) {
                               return std::make_pair(e.u, e.v) < key;
                             });
  if (it == edges.end() || it->u != a || it->v != b) return 0;
  return it->w;
}

Graph make_graph(int n, bool directed, bool weighted, std::vector<Edge> edges,
                 std::vector<long long> node_weights, std::vector<std::string> node_labels,
                 bool allow_any_size) {
  if (n < 0) throw GraphError("node count must be non-negative");
  if (!allow_any_size && (n < kMinGeneratedNodes || n > kMaxGeneratedNodes)) {
    throw GraphError("generated graphs must have between 6 and 40 nodes, got n=" +
                     std::to_string(n));
  }
  Graph g;
  g.n = n;
  g.directed = directed;
  // A graph with no edges carries no weight information; normalize so that
  // the weighted flag is meaningful exactly when edges carry weights.
  g.weighted = weighted && !edges.empty();

  for (auto& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw GraphError("edge endpoint out of range: (" + std::to_string(e.u) + ", " +
                       std::to_string(e.v) + ")");
    }
    if (e.u == e.v) throw GraphError("self-loop rejected at node " + std::to_string(e.u));
    if (!directed && e.u > e.v) std::swap(e.u, e.v);
    if (!g.weighted) {
      e.w = 1;
    } else if (e.w < 1) {
      throw GraphError("edge weight must be >= 1: (" + std::to_string(e.u) + ", " +
                       std::to_string(e.v) + ", " + std::to_string(e.w) + ")");
    }
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v) {
      throw GraphError("duplicate edge (" + std::to_string(edges[i].u) + ", " +
                       std::to_string(edges[i].v) + ")");
    }
  }
  g.edges = std::move(edges);

  if (!node_weights.empty()) {
    if (static_cast<int>(node_weights.size()) != n) {
      throw GraphError("node_weights must cover every node");
    }
    for (long long w : node_weights) {
      if (w < 1) throw GraphError("node weight must be >= 1");
    }
    g.node_weights = std::move(node_weights);
  }
  if (!node_labels.empty()) {
    if (static_cast<int>(node_labels.size()) != n) {
      throw GraphError("node_labels must cover every node");
    }
    std::unordered_set<std::string> seen;
    for (const auto& s : node_labels) {
      if (s.empty()) throw GraphError("node label must be non-empty");
      if (!seen.insert(s).second) throw GraphError("node labels must be injective: '" + s + "'");
    }
    g.node_labels = std::move(node_labels);
  }

  g.adj.assign(static_cast<std::size_t>(n), {});
  if (directed) g.in_adj.assign(static_cast<std::size_t>(n), {});
  for (const auto& e : g.edges) {
    g.adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    if (directed) {
      g.in_adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    } else {
      g.adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
  }
  for (auto& row : g.adj) std::sort(row.begin(), row.end());
  for (auto& row : g.in_adj) std::sort(row.begin(), row.end());
  return g;
}

Graph generate_er(const ErSpec& spec, std::uint64_t seed) {
  if (spec.n < kMinGeneratedNodes || spec.n > kMaxGeneratedNodes) {
    throw ConfigError("generate_er: n must be in [6, 40], got n=" + std::to_string(spec.n));
  }
  if (!(spec.p > 0.0 && spec.p < 1.0)) {
    throw ConfigError("generate_er: p must be in (0, 1), got p=" + std::to_string(spec.p));
  }
  if (spec.weight_range) {
    auto [lo, hi] = *spec.weight_range;
    if (lo < 1 || lo > hi) {
      throw ConfigError("generate_er: weight_range requires 1 <= low <= high");
    }
  }
  Rng rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < spec.n; ++u) {
    for (int v = spec.directed ? 0 : u + 1; v < spec.n; ++v) {
      if (u == v) continue;
      if (!rng.bernoulli(spec.p)) continue;
      Edge e{u, v, 1};
      if (spec.weight_range) {
        e.w = spec.weight_range->first +
              rng.uniform_int(0, static_cast<int>(spec.weight_range->second -
                                                  spec.weight_range->first));
      }
      edges.push_back(e);
    }
  }
  return make_graph(spec.n, spec.directed, spec.weight_range.has_value(), std::move(edges), {},
                    {}, false);
}

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Graph ingest_edge_list_text(const std::string& text, const std::string& origin) {
  auto lines = split_lines(text);
  if (lines.empty()) throw IngestError(origin + ": empty file");
  std::string header = trim(lines[0]);
  bool directed = false, weighted = false;
  {
    if (header.rfind("# ", 0) != 0) {
      throw IngestError(origin + ": line 1: expected header '# directed=... weighted=...'");
    }
    std::istringstream hs(header.substr(2));
    std::string tok;
    bool saw_dir = false, saw_w = false;
    while (hs >> tok) {
      if (tok == "directed=true") directed = true, saw_dir = true;
      else if (tok == "directed=false") directed = false, saw_dir = true;
      else if (tok == "weighted=true") weighted = true, saw_w = true;
      else if (tok == "weighted=false") weighted = false, saw_w = true;
      else throw IngestError(origin + ": line 1: unknown header token '" + tok + "'");
    }
    if (!saw_dir || !saw_w) {
      throw IngestError(origin + ": line 1: header must set directed= and weighted=");
    }
  }

  std::vector<std::string> names;
  std::unordered_map<std::string, int> ids;
  auto intern = [&](const std::string& name) {
    auto it = ids.find(name);
    if (it != ids.end()) return it->second;
    int id = static_cast<int>(names.size());
    names.push_back(name);
    ids.emplace(name, id);
    return id;
  };

  std::vector<Edge> edges;
  std::set<std::pair<int, int>> seen;
  std::vector<std::string> problems;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::string raw = lines[i];
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::string cur;
    for (char c : raw) {
      if (c == '\t') {
        fields.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    fields.push_back(cur);
    for (auto& f : fields) f = trim(f);
    const std::string where = "line " + std::to_string(i + 1);
    if (fields.size() < 2 || fields.size() > 3 || fields[0].empty() || fields[1].empty()) {
      problems.push_back(where + ": expected 'u<TAB>v[<TAB>w]'");
      continue;
    }
    if (weighted != (fields.size() == 3)) {
      problems.push_back(where + (weighted ? ": missing weight column" : ": unexpected weight column"));
      continue;
    }
    int u = intern(fields[0]);
    int v = intern(fields[1]);
    if (u == v) {
      problems.push_back(where + ": self-loop '" + fields[0] + "'");
      continue;
    }
    long long w = 1;
    if (weighted) {
      try {
        std::size_t pos = 0;
        w = std::stoll(fields[2], &pos);
        if (pos != fields[2].size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        problems.push_back(where + ": bad weight '" + fields[2] + "'");
        continue;
      }
      if (w < 1) {
        problems.push_back(where + ": weight must be >= 1, got " + std::to_string(w));
        continue;
      }
    }
    int a = u, b = v;
    if (!directed && a > b) std::swap(a, b);
    if (!seen.insert({a, b}).second) {
      problems.push_back(where + ": duplicate edge '" + fields[0] + "' - '" + fields[1] + "'");
      continue;
    }
    edges.push_back(Edge{a, b, w});
  }
  if (!problems.empty()) {
    std::string msg = origin + ": " + std::to_string(problems.size()) + " bad line(s):";
    for (const auto& p : problems) msg += "\n  " + p;
    throw IngestError(msg);
  }
  if (names.empty()) throw IngestError(origin + ": no edges or nodes");
  return make_graph(static_cast<int>(names.size()), directed, weighted, std::move(edges), {},
                    std::move(names));
}

Graph ingest_edge_list_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IngestError(path + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ingest_edge_list_text(ss.str(), path);
}

Graph bfs_subsample(const Graph& g, int max_nodes, std::uint64_t seed) {
  if (max_nodes < 1) throw ConfigError("bfs_subsample: max_nodes must be >= 1");
  if (g.n <= max_nodes) return g;
  Rng rng(seed);
  std::vector<bool> taken(static_cast<std::size_t>(g.n), false);
  std::vector<int> order;
  std::vector<int> queue;
  std::size_t head = 0;
  auto push = [&](int v) {
    if (!taken[static_cast<std::size_t>(v)]) {
      taken[static_cast<std::size_t>(v)] = true;
      queue.push_back(v);
    }
  };
  while (static_cast<int>(order.size()) < max_nodes) {
    if (head == queue.size()) {
      std::vector<int> remaining;
      for (int v = 0; v < g.n; ++v) {
        if (!taken[static_cast<std::size_t>(v)]) remaining.push_back(v);
      }
      push(rng.pick(remaining));
    }
    int v = queue[head++];
    order.push_back(v);
    for (int w : g.adj[static_cast<std::size_t>(v)]) push(w);
    if (g.directed) {
      for (int w : g.in_adj[static_cast<std::size_t>(v)]) push(w);
    }
  }
  std::sort(order.begin(), order.end());
  std::vector<int> remap(static_cast<std::size_t>(g.n), -1);
  for (std::size_t i = 0; i < order.size(); ++i) remap[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const auto& e : g.edges) {
    int u = remap[static_cast<std::size_t>(e.u)];
    int v = remap[static_cast<std::size_t>(e.v)];
    if (u >= 0 && v >= 0) edges.push_back(Edge{u, v, e.w});
  }
  std::vector<long long> nw;
  std::vector<std::string> labels;
  if (g.has_node_weights()) {
    for (int v : order) nw.push_back(g.node_weights[static_cast<std::size_t>(v)]);
  }
  if (g.has_labels()) {
    for (int v : order) labels.push_back(g.node_labels[static_cast<std::size_t>(v)]);
  }
  return make_graph(max_nodes, g.directed, g.weighted, std::move(edges), std::move(nw),
                    std::move(labels));
}

}  // namespace graphforge
