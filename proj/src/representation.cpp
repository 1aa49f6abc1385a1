#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <unordered_map>

#include "graphforge/graph.hpp"

namespace graphforge {

const char* representation_name(RepresentationKind kind) {
  switch (kind) {
    case RepresentationKind::adjacency_matrix: return "adjacency_matrix";
    case RepresentationKind::adjacency_list: return "adjacency_list";
    case RepresentationKind::edge_list: return "edge_list";
  }
  return "?";
}

std::optional<RepresentationKind> representation_from_name(const std::string& name) {
  if (name == "adjacency_matrix") return RepresentationKind::adjacency_matrix;
  if (name == "adjacency_list") return RepresentationKind::adjacency_list;
  if (name == "edge_list") return RepresentationKind::edge_list;
  return std::nullopt;
}

namespace {

std::string join_labels(const Graph& g) {
  std::string out;
  for (int v = 0; v < g.n; ++v) {
    if (v) out += ", ";
    out += g.label(v);
  }
  return out;
}

std::string render_edge_list(const Graph& g) {
  std::string out;
  if (g.has_labels()) {
    out = "The nodes are: " + join_labels(g) + ", and the edges are: ";
  } else {
    out = "The nodes are numbered from 0 to " + std::to_string(g.n - 1) +
          ", and the edges are: ";
  }
  if (g.edges.empty()) return out + "none.";
  bool first = true;
  for (const auto& e : g.edges) {
    if (!first) out += g.directed ? " " : ", ";
    first = false;
    if (g.directed) {
      out += "(" + g.label(e.u) + "->" + g.label(e.v);
      if (g.weighted) out += "," + std::to_string(e.w);
      out += ")";
    } else {
      out += "(" + g.label(e.u) + ", " + g.label(e.v);
      if (g.weighted) out += ", " + std::to_string(e.w);
      out += ")";
    }
  }
  return out + ".";
}

std::string render_adjacency_list(const Graph& g) {
  std::string out = "{";
  for (int v = 0; v < g.n; ++v) {
    if (v) out += ", ";
    out += g.label(v) + ": [";
    const auto& row = g.adj[static_cast<std::size_t>(v)];
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ", ";
      if (g.weighted) {
        out += "(" + g.label(row[i]) + ", " + std::to_string(g.edge_weight(v, row[i])) + ")";
      } else {
        out += g.label(row[i]);
      }
    }
    out += "]";
  }
  return out + "}";
}

std::string render_adjacency_matrix(const Graph& g) {
  std::string out;
  if (g.has_labels()) out = "Nodes: " + join_labels(g) + "\n";
  for (int u = 0; u < g.n; ++u) {
    for (int v = 0; v < g.n; ++v) {
      if (v) out += " ";
      long long w = 0;
      if (u != v && g.has_edge(u, v)) w = g.weighted ? g.edge_weight(u, v) : 1;
      if (!g.directed && u != v && g.has_edge(v, u)) w = g.weighted ? g.edge_weight(v, u) : 1;
      out += std::to_string(w);
    }
    if (u + 1 < g.n) out += "\n";
  }
  return out;
}

// --- parsing ------------------------------------------------------------

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  bool eof() const { return pos >= text.size(); }
  char peek() const { return eof() ? '\0' : text[pos]; }

  void skip_spaces() {
    while (!eof() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r' ||
                      text[pos] == '\n')) {
      ++pos;
    }
  }

  bool try_literal(const std::string& lit) {
    if (text.compare(pos, lit.size(), lit) == 0) {
      pos += lit.size();
      return true;
    }
    return false;
  }

  void expect_literal(const std::string& lit, const std::string& what) {
    if (!try_literal(lit)) throw ParseError("expected " + what, pos);
  }

  long long read_int() {
    std::size_t start = pos;
    if (!eof() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (!eof() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) throw ParseError("expected an integer", start);
    return std::stoll(text.substr(start, pos - start));
  }

  // A node token: everything up to one of the stop characters, trimmed.
  std::string read_name(const std::string& stops) {
    std::size_t start = pos;
    while (!eof() && stops.find(text[pos]) == std::string::npos) ++pos;
    std::size_t end = pos;
    while (end > start && text[end - 1] == ' ') --end;
    if (end == start) throw ParseError("expected a node token", start);
    return text.substr(start, end - start);
  }
};

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

struct NodeInterner {
  std::vector<std::string> names;
  std::unordered_map<std::string, int> ids;
  bool fixed = false;  // when the node list came from a preamble

  int resolve(const std::string& name, std::size_t pos) {
    auto it = ids.find(name);
    if (it != ids.end()) return it->second;
    if (fixed) throw ParseError("unknown node '" + name + "'", pos);
    int id = static_cast<int>(names.size());
    names.push_back(name);
    ids.emplace(name, id);
    return id;
  }
};

// Collapses the label set back to plain ids when the text used 0..n-1 in
// order, so that unlabeled graphs round-trip without a label map.
std::vector<std::string> labels_or_empty(const std::vector<std::string>& names) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] != std::to_string(i)) return names;
  }
  return {};
}

Graph parse_edge_list(const std::string& text, const ParseHints& hints) {
  Cursor c{text};
  c.skip_spaces();
  NodeInterner interner;
  int declared_n = -1;
  bool labeled_preamble = false;
  if (c.try_literal("The nodes are numbered from ")) {
    long long lo = c.read_int();
    c.expect_literal(" to ", "' to '");
    long long hi = c.read_int();
    if (lo != 0 || hi < 0) throw ParseError("node range must start at 0", c.pos);
    declared_n = static_cast<int>(hi) + 1;
    for (int v = 0; v < declared_n; ++v) {
      interner.names.push_back(std::to_string(v));
      interner.ids.emplace(std::to_string(v), v);
    }
    interner.fixed = true;
    c.expect_literal(", and the edges are: ", "', and the edges are: '");
  } else if (c.try_literal("The nodes are: ")) {
    // Node names run to the literal edge marker.
    std::size_t marker = text.find(", and the edges are: ", c.pos);
    if (marker == std::string::npos) {
      throw ParseError("expected ', and the edges are: '", c.pos);
    }
    std::string list = text.substr(c.pos, marker - c.pos);
    std::size_t at = 0;
    while (true) {
      std::size_t comma = list.find(", ", at);
      std::string name = list.substr(at, comma == std::string::npos ? std::string::npos : comma - at);
      if (name.empty()) throw ParseError("empty node name", c.pos + at);
      interner.resolve(name, c.pos + at);
      if (comma == std::string::npos) break;
      at = comma + 2;
    }
    interner.fixed = true;
    labeled_preamble = true;
    declared_n = static_cast<int>(interner.names.size());
    c.pos = marker + std::string(", and the edges are: ").size();
  } else {
    throw ParseError("expected an edge-list preamble", c.pos);
  }

  std::vector<Edge> edges;
  bool any_arrow = false, any_pair = false, any_weight = false, any_plain = false;
  if (c.try_literal("none.")) {
    // no edges
  } else {
    while (true) {
      c.skip_spaces();
      std::size_t open = c.pos;
      c.expect_literal("(", "'('");
      std::string first = c.read_name("->,)");
      int u = interner.resolve(first, open + 1);
      int v = -1;
      long long w = 1;
      bool weighted_edge = false;
      if (c.try_literal("->")) {
        any_arrow = true;
        std::string second = c.read_name(",)");
        v = interner.resolve(second, c.pos);
        if (c.try_literal(",")) {
          w = c.read_int();
          weighted_edge = true;
        }
      } else if (c.try_literal(", ")) {
        any_pair = true;
        std::string second = c.read_name(",)");
        v = interner.resolve(second, c.pos);
        if (c.try_literal(", ")) {
          w = c.read_int();
          weighted_edge = true;
        }
      } else {
        throw ParseError("expected '->' or ', ' inside an edge", c.pos);
      }
      c.expect_literal(")", "')'");
      (weighted_edge ? any_weight : any_plain) = true;
      edges.push_back(Edge{u, v, w});
      c.skip_spaces();
      if (c.try_literal(",")) {
        continue;
      }
      if (c.peek() == '(') continue;
      break;
    }
    c.skip_spaces();
    c.expect_literal(".", "terminating '.'");
  }
  c.skip_spaces();
  if (!c.eof()) throw ParseError("trailing content after edge list", c.pos);
  if (any_arrow && any_pair) throw ParseError("mixed directed and undirected edge forms", 0);
  if (any_weight && any_plain) throw ParseError("mixed weighted and unweighted edge forms", 0);

  bool directed = edges.empty() ? hints.directed.value_or(false) : any_arrow;
  if (!edges.empty() && hints.directed && *hints.directed != directed) {
    throw ParseError("edge forms contradict the directedness hint", 0);
  }
  bool weighted = edges.empty() ? hints.weighted.value_or(false) : any_weight;
  if (!edges.empty() && hints.weighted && *hints.weighted != weighted) {
    throw ParseError("edge forms contradict the weightedness hint", 0);
  }
  int n = declared_n;
  try {
    return make_graph(n, directed, weighted, std::move(edges), {},
                      labeled_preamble ? interner.names : labels_or_empty(interner.names));
  } catch (const GraphError& e) {
    throw ParseError(std::string("inconsistent graph: ") + e.what(), 0);
  }
}

struct AdjRawEntry {
  std::string name;
  std::size_t offset;
  long long w;
  bool weighted;
};

Graph parse_adjacency_list(const std::string& text, const ParseHints& hints) {
  Cursor c{text};
  c.skip_spaces();
  c.expect_literal("{", "'{'");
  std::vector<std::pair<std::string, std::vector<AdjRawEntry>>> rows;
  if (!c.try_literal("}")) {
    while (true) {
      c.skip_spaces();
      std::string key = c.read_name(":");
      c.expect_literal(":", "':' after node");
      c.skip_spaces();
      c.expect_literal("[", "'['");
      std::vector<AdjRawEntry> entries;
      c.skip_spaces();
      if (!c.try_literal("]")) {
        while (true) {
          c.skip_spaces();
          if (c.peek() == '(') {
            c.expect_literal("(", "'('");
            std::size_t at = c.pos;
            std::string name = c.read_name(",)");
            c.expect_literal(",", "',' in weighted entry");
            c.skip_spaces();
            long long w = c.read_int();
            c.expect_literal(")", "')'");
            entries.push_back({name, at, w, true});
          } else {
            std::size_t at = c.pos;
            std::string name = c.read_name(",]");
            entries.push_back({name, at, 1, false});
          }
          c.skip_spaces();
          if (c.try_literal(",")) continue;
          c.expect_literal("]", "']' or ','");
          break;
        }
      }
      rows.emplace_back(key, std::move(entries));
      c.skip_spaces();
      if (c.try_literal(",")) continue;
      c.expect_literal("}", "'}' or ','");
      break;
    }
  }
  c.skip_spaces();
  if (!c.eof()) throw ParseError("trailing content after adjacency list", c.pos);

  // Row keys define the node ids, in row order.
  NodeInterner interner;
  for (const auto& [key, entries] : rows) {
    if (interner.ids.count(key)) throw ParseError("duplicate adjacency row '" + key + "'", 0);
    interner.resolve(key, 0);
  }
  interner.fixed = true;
  int n = static_cast<int>(interner.names.size());

  bool any_weight = false, any_plain = false;
  std::map<std::pair<int, int>, long long> arcs;
  for (const auto& [key, entries] : rows) {
    int u = interner.ids.at(key);
    for (const auto& e : entries) {
      (e.weighted ? any_weight : any_plain) = true;
      int v = interner.resolve(e.name, e.offset);
      if (!arcs.emplace(std::make_pair(u, v), e.w).second) {
        throw ParseError("duplicate neighbor entry", e.offset);
      }
    }
  }
  if (any_weight && any_plain) throw ParseError("mixed weighted and plain entries", 0);
  bool weighted = arcs.empty() ? hints.weighted.value_or(false) : any_weight;

  bool symmetric = true;
  for (const auto& [arc, w] : arcs) {
    auto rev = arcs.find({arc.second, arc.first});
    if (rev == arcs.end() || rev->second != w) {
      symmetric = false;
      break;
    }
  }
  bool directed = hints.directed.value_or(!symmetric);
  if (!directed && !symmetric) {
    throw ParseError("asymmetric adjacency list for an undirected graph", 0);
  }

  std::vector<Edge> edges;
  for (const auto& [arc, w] : arcs) {
    if (directed || arc.first < arc.second) edges.push_back(Edge{arc.first, arc.second, w});
  }
  try {
    return make_graph(n, directed, weighted, std::move(edges), {},
                      labels_or_empty(interner.names));
  } catch (const GraphError& e) {
    throw ParseError(std::string("inconsistent graph: ") + e.what(), 0);
  }
}

Graph parse_adjacency_matrix(const std::string& text, const ParseHints& hints) {
  std::vector<std::string> labels;
  std::size_t body_start = 0;
  if (text.rfind("Nodes: ", 0) == 0) {
    std::size_t eol = text.find('\n');
    if (eol == std::string::npos) throw ParseError("matrix body missing after node header", 7);
    std::string list = text.substr(7, eol - 7);
    std::size_t at = 0;
    while (true) {
      std::size_t comma = list.find(", ", at);
      std::string name = list.substr(at, comma == std::string::npos ? std::string::npos : comma - at);
      if (name.empty()) throw ParseError("empty node name in matrix header", 7 + at);
      labels.push_back(name);
      if (comma == std::string::npos) break;
      at = comma + 2;
    }
    body_start = eol + 1;
  }

  std::vector<std::vector<long long>> m;
  {
    std::istringstream in(text.substr(body_start));
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      std::istringstream ls(line);
      std::vector<long long> row;
      long long x;
      while (ls >> x) row.push_back(x);
      std::string rest;
      if (ls.clear(), ls >> rest) {
        throw ParseError("non-numeric matrix entry '" + rest + "'", body_start);
      }
      if (!row.empty()) m.push_back(std::move(row));
    }
  }
  int n = static_cast<int>(m.size());
  if (n == 0) throw ParseError("empty adjacency matrix", body_start);
  for (const auto& row : m) {
    if (static_cast<int>(row.size()) != n) {
      throw ParseError("adjacency matrix is not square", body_start);
    }
  }
  if (!labels.empty() && static_cast<int>(labels.size()) != n) {
    throw ParseError("node header length disagrees with matrix size", 0);
  }
  for (int i = 0; i < n; ++i) {
    if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] != 0) {
      throw ParseError("nonzero diagonal entry (self-loop)", body_start);
    }
    for (int j = 0; j < n; ++j) {
      if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] < 0) {
        throw ParseError("negative matrix entry", body_start);
      }
    }
  }

  bool symmetric = true;
  long long maxw = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      maxw = std::max(maxw, m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
          m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) {
        symmetric = false;
      }
    }
  }
  bool directed = hints.directed.value_or(!symmetric);
  if (!directed && !symmetric) {
    throw ParseError("asymmetric matrix for an undirected graph", 0);
  }
  bool weighted = hints.weighted.value_or(maxw > 1);

  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = directed ? 0 : i + 1; j < n; ++j) {
      long long w = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (i != j && w != 0) edges.push_back(Edge{i, j, weighted ? w : 1});
    }
  }
  try {
    return make_graph(n, directed, weighted, std::move(edges), {},
                      labels.empty() ? std::vector<std::string>{} : labels);
  } catch (const GraphError& e) {
    throw ParseError(std::string("inconsistent graph: ") + e.what(), 0);
  }
}

}  // namespace

std::string render_representation(const Graph& g, RepresentationKind kind) {
  switch (kind) {
    case RepresentationKind::edge_list: return render_edge_list(g);
    case RepresentationKind::adjacency_list: return render_adjacency_list(g);
    case RepresentationKind::adjacency_matrix: return render_adjacency_matrix(g);
  }
  throw GraphError("unknown representation kind");
}

Graph parse_representation(const std::string& text, RepresentationKind kind,
                           const ParseHints& hints) {
  switch (kind) {
    case RepresentationKind::edge_list: return parse_edge_list(text, hints);
    case RepresentationKind::adjacency_list: return parse_adjacency_list(text, hints);
    case RepresentationKind::adjacency_matrix: return parse_adjacency_matrix(text, hints);
  }
  throw GraphError("unknown representation kind");
}

}  // namespace graphforge
