#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <unordered_map>

#include "graphforge/text.hpp"

namespace graphforge {

std::string rational_to_decimal4(const Rational& r) {
  // round-half-to-even at 4 places, on the exact fraction
  long long num = r.num, den = r.den;
  bool neg = num < 0;
  if (neg) num = -num;
  long long scaled = num * 10000;
  long long q = scaled / den;
  long long rem = scaled % den;
  if (2 * rem > den || (2 * rem == den && (q % 2) == 1)) ++q;
  std::string digits = std::to_string(q);
  while (digits.size() < 5) digits.insert(digits.begin(), '0');
  std::string out = digits.substr(0, digits.size() - 4) + "." + digits.substr(digits.size() - 4);
  return neg ? "-" + out : out;
}

std::string render_phrase(const Phrase& ph, const Graph& g) {
  std::string out;
  for (const auto& piece : ph.pieces) {
    switch (piece.kind) {
      case Piece::Kind::lit: out += piece.lit; break;
      case Piece::Kind::node: out += g.label(piece.node); break;
      case Piece::Kind::num: out += std::to_string(piece.num); break;
    }
  }
  return out;
}

std::string render_node_list(const std::vector<int>& nodes, const Graph& g, const char* open,
                             const char* sep, const char* close) {
  std::string out = open;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i) out += sep;
    out += g.label(nodes[i]);
  }
  return out + close;
}

std::string render_pair_list(const std::vector<std::pair<int, int>>& pairs, const Graph& g) {
  std::string out = "[";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) out += ", ";
    out += "(" + g.label(pairs[i].first) + ", " + g.label(pairs[i].second) + ")";
  }
  return out + "]";
}

namespace {

std::string render_components(const ComponentList& comps, const Graph& g) {
  std::string out = "[";
  for (std::size_t i = 0; i < comps.groups.size(); ++i) {
    if (i) out += ", ";
    out += render_node_list(comps.groups[i], g);
  }
  return out + "]";
}

}  // namespace

std::string render_answer_span(AnswerForm form, const AnswerValue& answer,
                               const Witness* span_witness, const Graph& g) {
  if (const auto* s = std::get_if<Sentinel>(&answer.v)) return s->text;
  switch (form) {
    case AnswerForm::decision:
      return std::get<bool>(answer.v) ? "[Yes]" : "[No]";
    case AnswerForm::integer:
      return std::to_string(std::get<long long>(answer.v));
    case AnswerForm::fraction4:
      return rational_to_decimal4(std::get<Rational>(answer.v));
    case AnswerForm::node:
      return g.label(static_cast<int>(std::get<long long>(answer.v)));
    case AnswerForm::node_seq:
      if (span_witness) {
        return render_node_list(std::get<PathWitness>(*span_witness).nodes, g);
      }
      return render_node_list(std::get<NodeSeq>(answer.v).nodes, g);
    case AnswerForm::node_set:
      if (span_witness) return render_node_list(std::get<NodeSet>(*span_witness).nodes, g);
      return render_node_list(std::get<NodeSet>(answer.v).nodes, g);
    case AnswerForm::edge_set:
      if (span_witness) return render_pair_list(std::get<EdgeSet>(*span_witness).edges, g);
      return render_pair_list(std::get<EdgeSet>(answer.v).edges, g);
    case AnswerForm::pair_list:
      if (span_witness) return render_pair_list(std::get<PairList>(*span_witness).pairs, g);
      return render_pair_list(std::get<PairList>(answer.v).pairs, g);
    case AnswerForm::components:
      return render_components(std::get<ComponentList>(answer.v), g);
  }
  return "";
}

namespace {

std::string trim_copy(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> lines_of(const std::string& text) {
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
  out.push_back(cur);
  return out;
}

}  // namespace

std::optional<std::string> extract_answer_span(const std::string& text, AnswerForm form) {
  if (form == AnswerForm::decision) {
    std::size_t best = std::string::npos;
    std::string span;
    std::size_t at = 0;
    while ((at = text.find('[', at)) != std::string::npos) {
      std::size_t close = text.find(']', at);
      if (close == std::string::npos) break;
      best = at;
      span = text.substr(at, close - at + 1);
      at = close + 1;
    }
    if (best == std::string::npos) return std::nullopt;
    return span;
  }
  auto lines = lines_of(text);
  for (auto it = lines.rbegin(); it != lines.rend(); ++it) {
    std::string line = trim_copy(*it);
    if (line.rfind("Answer:", 0) == 0) {
      std::string span = trim_copy(line.substr(7));
      if (!span.empty()) return span;
      // the payload may sit on the following line ("Answer:\n[(0, 1)]")
      auto fwd = it.base();  // element after the Answer line
      while (fwd != lines.end()) {
        std::string next = trim_copy(*fwd);
        if (!next.empty()) return next;
        ++fwd;
      }
      return std::nullopt;
    }
  }
  // fallback: final numeric or bracketed list literal
  for (auto it = lines.rbegin(); it != lines.rend(); ++it) {
    std::string line = trim_copy(*it);
    if (line.empty()) continue;
    std::size_t open = line.rfind('[');
    if (open != std::string::npos) {
      std::size_t close = line.find(']', open);
      if (close != std::string::npos) return line.substr(open, close - open + 1);
    }
    // last numeric run on the line
    std::size_t end = line.size();
    while (end > 0 && !std::isdigit(static_cast<unsigned char>(line[end - 1]))) --end;
    if (end == 0) return std::nullopt;
    std::size_t begin = end;
    while (begin > 0 && (std::isdigit(static_cast<unsigned char>(line[begin - 1])) ||
                         line[begin - 1] == '.' || line[begin - 1] == '-')) {
      --begin;
    }
    return line.substr(begin, end - begin);
  }
  return std::nullopt;
}

namespace {

std::string squash_ws(const std::string& s) {
  std::string out;
  bool in_ws = false;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      in_ws = true;
      continue;
    }
    if (in_ws && !out.empty()) out += ' ';
    in_ws = false;
    out += c;
  }
  return out;
}

// Splits "[a, b, c]" (or "[(a, b), (c, d)]") into top-level items.
std::optional<std::vector<std::string>> split_bracket_list(const std::string& span) {
  std::string s = trim_copy(span);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') return std::nullopt;
  s = s.substr(1, s.size() - 2);
  std::vector<std::string> items;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      items.push_back(trim_copy(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim_copy(cur).empty()) items.push_back(trim_copy(cur));
  return items;
}

}  // namespace

bool spans_equivalent(AnswerForm form, const std::string& a, const std::string& b) {
  switch (form) {
    case AnswerForm::node_set:
    case AnswerForm::edge_set:
    case AnswerForm::pair_list: {
      auto ia = split_bracket_list(a);
      auto ib = split_bracket_list(b);
      if (!ia || !ib) return squash_ws(a) == squash_ws(b);
      std::vector<std::string> na, nb;
      for (auto& s : *ia) na.push_back(squash_ws(s));
      for (auto& s : *ib) nb.push_back(squash_ws(s));
      std::sort(na.begin(), na.end());
      std::sort(nb.begin(), nb.end());
      return na == nb;
    }
    default:
      return squash_ws(a) == squash_ws(b);
  }
}

namespace {

std::optional<int> resolve_label(const std::string& token, const Graph& g) {
  std::string t = trim_copy(token);
  if (g.has_labels()) {
    for (int v = 0; v < g.n; ++v) {
      if (g.node_labels[static_cast<std::size_t>(v)] == t) return v;
    }
    return std::nullopt;
  }
  if (t.empty()) return std::nullopt;
  for (char c : t) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
  }
  int v = std::stoi(t);
  if (v < 0 || v >= g.n) return std::nullopt;
  return v;
}

}  // namespace

std::optional<std::vector<int>> parse_node_list_span(const std::string& span, const Graph& g) {
  auto items = split_bracket_list(span);
  if (!items) return std::nullopt;
  std::vector<int> out;
  for (const auto& item : *items) {
    auto v = resolve_label(item, g);
    if (!v) return std::nullopt;
    out.push_back(*v);
  }
  return out;
}

std::optional<std::vector<std::pair<int, int>>> parse_pair_list_span(const std::string& span,
                                                                     const Graph& g) {
  auto items = split_bracket_list(span);
  if (!items) return std::nullopt;
  std::vector<std::pair<int, int>> out;
  for (const auto& item : *items) {
    std::string s = trim_copy(item);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') return std::nullopt;
    s = s.substr(1, s.size() - 2);
    std::size_t comma = s.find(',');
    if (comma == std::string::npos) return std::nullopt;
    auto u = resolve_label(s.substr(0, comma), g);
    auto v = resolve_label(s.substr(comma + 1), g);
    if (!u || !v) return std::nullopt;
    out.emplace_back(*u, *v);
  }
  return out;
}

}  // namespace graphforge
