#include <algorithm>
#include <sstream>

#include "graphforge/cot.hpp"

namespace graphforge {

std::string resolve_template(const std::string& templ,
                             const std::vector<std::pair<std::string, std::string>>& slots) {
  std::string out;
  out.reserve(templ.size());
  std::size_t at = 0;
  while (at < templ.size()) {
    std::size_t open = templ.find('{', at);
    if (open == std::string::npos) {
      out.append(templ, at, std::string::npos);
      break;
    }
    std::size_t close = templ.find('}', open);
    if (close == std::string::npos) {
      out.append(templ, at, std::string::npos);
      break;
    }
    out.append(templ, at, open - at);
    std::string name = templ.substr(open + 1, close - open - 1);
    auto it = std::find_if(slots.begin(), slots.end(),
                           [&](const auto& kv) { return kv.first == name; });
    if (it == slots.end()) {
      throw TemplateError("unresolved template slot '{" + name + "}'");
    }
    out += it->second;
    at = close + 1;
  }
  return out;
}

namespace {

std::string format_note(const ProblemInstance& inst) {
  const Graph& g = inst.graph;
  switch (inst.representation) {
    case RepresentationKind::edge_list: {
      if (g.directed && g.weighted) {
        return "In a directed graph, (i->j,k) means that node i and node j are connected with "
               "a directed edge from node i to node j with weight k.";
      }
      if (g.directed) {
        return "In a directed graph, (i->j) means that node i and node j are connected with a "
               "directed edge from node i to node j.";
      }
      if (g.weighted) {
        return "In an undirected graph, (i, j, k) means that node i and node j are connected "
               "with an undirected edge with weight k.";
      }
      return "In an undirected graph, (i, j) means that node i and node j are connected with "
             "an undirected edge.";
    }
    case RepresentationKind::adjacency_list: {
      std::string s = "The graph is given as an adjacency list mapping each node to its ";
      s += g.directed ? "out-neighbors" : "neighbors";
      if (g.weighted) s += ", where an entry (j, k) names the neighbor j and the edge weight k";
      s += ".";
      return s;
    }
    case RepresentationKind::adjacency_matrix: {
      std::string s = "The graph is given as an adjacency matrix in which entry (i, j) is ";
      s += g.weighted ? "the weight of the edge from node i to node j"
                      : "1 when the edge from node i to node j exists";
      s += " and 0 otherwise.";
      return s;
    }
  }
  return "";
}

std::string mode_name(TraversalMode m) {
  return m == TraversalMode::bfs ? "breadth-first search (BFS)" : "depth-first search (DFS)";
}

}  // namespace

std::vector<std::pair<std::string, std::string>> instance_slots(const ProblemInstance& inst) {
  const Graph& g = inst.graph;
  std::vector<std::pair<std::string, std::string>> slots;
  slots.emplace_back("graph", render_representation(g, inst.representation));
  slots.emplace_back("format_note", format_note(inst));
  slots.emplace_back("directed_word", g.directed ? "directed" : "undirected");
  slots.emplace_back("n", std::to_string(g.n));
  if (const auto* p = std::get_if<PairParam>(&inst.params)) {
    slots.emplace_back("u", g.label(p->u));
    slots.emplace_back("v", g.label(p->v));
  }
  if (const auto* p = std::get_if<NodeParam>(&inst.params)) {
    slots.emplace_back("u", g.label(p->u));
  }
  if (const auto* p = std::get_if<TraversalParam>(&inst.params)) {
    slots.emplace_back("start", g.label(p->start));
    slots.emplace_back("mode_name", mode_name(p->mode));
  }
  if (const auto* p = std::get_if<MatchingParam>(&inst.params)) {
    std::string left, right;
    std::vector<bool> is_left(static_cast<std::size_t>(g.n), false);
    for (int v : p->left) is_left[static_cast<std::size_t>(v)] = true;
    for (int v : p->left) {
      if (!left.empty()) left += ", ";
      left += g.label(v);
    }
    for (int v = 0; v < g.n; ++v) {
      if (!is_left[static_cast<std::size_t>(v)]) {
        if (!right.empty()) right += ", ";
        right += g.label(v);
      }
    }
    slots.emplace_back("left_set", "[" + left + "]");
    slots.emplace_back("right_set", "[" + right + "]");
  }
  if (const auto* p = std::get_if<PagerankParam>(&inst.params)) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", p->alpha);
    slots.emplace_back("alpha", buf);
    slots.emplace_back("max_iter", std::to_string(p->max_iter));
  }
  if (g.has_node_weights()) {
    std::string nw = "The node weights are: ";
    for (int v = 0; v < g.n; ++v) {
      if (v) nw += ", ";
      nw += g.label(v) + ": " + std::to_string(g.node_weights[static_cast<std::size_t>(v)]);
    }
    nw += ".";
    slots.emplace_back("node_weights", nw);
  }
  return slots;
}

std::string render_prompt(const ProblemInstance& inst, int template_id) {
  const auto& set = cot_templates(inst.task);
  const auto& templ = set.prompts.at(static_cast<std::size_t>(template_id));
  return resolve_template(templ, instance_slots(inst));
}

namespace {

std::string witness_text(const ProblemInstance& inst, const Witness& w) {
  const Graph& g = inst.graph;
  return std::visit(
      [&](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, PathWitness>) {
          std::string s;
          for (std::size_t i = 0; i < x.nodes.size(); ++i) {
            if (i) s += " -> ";
            s += g.label(x.nodes[i]);
          }
          return s;
        } else if constexpr (std::is_same_v<T, ColoringWitness>) {
          std::vector<int> a, b;
          for (std::size_t i = 0; i < x.color.size(); ++i) {
            (x.color[i] == 0 ? a : b).push_back(static_cast<int>(i));
          }
          return render_node_list(a, g, "{", ", ", "}") + " / " +
                 render_node_list(b, g, "{", ", ", "}");
        } else if constexpr (std::is_same_v<T, EdgeWitness>) {
          return "(" + g.label(x.u) + ", " + g.label(x.v) + ")";
        } else if constexpr (std::is_same_v<T, NodeSet>) {
          return render_node_list(x.nodes, g);
        } else if constexpr (std::is_same_v<T, PairList>) {
          return render_pair_list(x.pairs, g);
        } else if constexpr (std::is_same_v<T, EdgeSet>) {
          return render_pair_list(x.edges, g);
        } else if constexpr (std::is_same_v<T, FlowWitness>) {
          std::string s;
          for (std::size_t i = 0; i < x.augmentations.size(); ++i) {
            if (i) s += "; ";
            const auto& aug = x.augmentations[i];
            for (std::size_t j = 0; j < aug.path.size(); ++j) {
              if (j) s += " -> ";
              s += g.label(aug.path[j]);
            }
            s += " (bottleneck " + std::to_string(aug.bottleneck) + ")";
          }
          return s;
        } else if constexpr (std::is_same_v<T, TriangleWitness>) {
          return "(" + g.label(x.a) + ", " + g.label(x.b) + ", " + g.label(x.c) + ")";
        }
        return "";
      },
      w);
}

std::string value_text(const ProblemInstance& inst, const AnswerValue& answer) {
  const Graph& g = inst.graph;
  if (const auto* s = std::get_if<Sentinel>(&answer.v)) return s->text;
  switch (task_answer_form(inst.task)) {
    case AnswerForm::node:
      return g.label(static_cast<int>(std::get<long long>(answer.v)));
    case AnswerForm::fraction4:
      return rational_to_decimal4(std::get<Rational>(answer.v));
    default:
      if (const auto* i = std::get_if<long long>(&answer.v)) return std::to_string(*i);
      return render_answer_span(task_answer_form(inst.task), answer, nullptr, g);
  }
}

}  // namespace

std::string render_solution(const ProblemInstance& inst, const SolvedInstance& solved,
                            const Witness* witness, int skeleton_id) {
  const auto& set = cot_templates(inst.task);
  const Graph& g = inst.graph;
  std::ostringstream out;
  out << "Let's think step by step:\n\n";

  // narrated steps, capped with head/tail summarization
  const auto& steps = solved.steps;
  auto emit_step = [&](std::size_t i) {
    if (skeleton_id % 2 == 0) {
      out << (i + 1) << ". " << render_phrase(steps[i], g) << "\n";
    } else {
      out << "- " << render_phrase(steps[i], g) << "\n";
    }
  };
  if (steps.size() <= static_cast<std::size_t>(kMaxNarratedSteps)) {
    for (std::size_t i = 0; i < steps.size(); ++i) emit_step(i);
  } else {
    for (std::size_t i = 0; i < 10; ++i) emit_step(i);
    out << "... after " << (steps.size() - 20) << " further steps ...\n";
    for (std::size_t i = steps.size() - 10; i < steps.size(); ++i) emit_step(i);
  }
  out << "\n";

  // conclusion with resolved slots
  const bool is_decision = task_answer_form(inst.task) == AnswerForm::decision;
  const bool negative = is_decision && !std::get<bool>(solved.answer.v);
  const auto& pool = (negative && !set.conclusions_no.empty()) ? set.conclusions_no
                                                               : set.conclusions;
  std::string conclusion = pool.at(static_cast<std::size_t>(skeleton_id) % pool.size());
  auto slots = instance_slots(inst);
  slots.emplace_back("value", value_text(inst, solved.answer));
  slots.emplace_back("witness", witness ? witness_text(inst, *witness) : "");
  out << resolve_template(conclusion, slots) << "\n\n";

  // final answer line per the extraction grammar
  const Witness* span_witness = (set.span == AnswerSpanKind::witness) ? witness : nullptr;
  std::string span = render_answer_span(task_answer_form(inst.task), solved.answer,
                                        span_witness, g);
  if (is_decision) {
    out << span;
  } else {
    out << "Answer: " << span;
  }
  return out.str();
}

std::vector<Sample> synthesize_cot(const ProblemInstance& inst, const SolvedInstance& solved,
                                   int max_witnesses, std::uint64_t seed) {
  Rng rng(seed);
  const auto& set = cot_templates(inst.task);
  int template_id = rng.uniform_int(0, static_cast<int>(set.prompts.size()) - 1);
  int skeleton_id = rng.uniform_int(0, 1);
  std::string prompt = render_prompt(inst, template_id);

  std::vector<const Witness*> picks;
  std::vector<Witness> enumerated;
  if (witnessable(inst.task, solved.answer) && max_witnesses > 1) {
    Rng wrng = rng.fork(1);
    enumerated = enumerate_witnesses(inst, max_witnesses, wrng);
  }
  if (!enumerated.empty()) {
    for (const auto& w : enumerated) picks.push_back(&w);
  } else if (!solved.witnesses.empty()) {
    picks.push_back(&solved.witnesses.front());
  } else {
    picks.push_back(nullptr);
  }

  std::vector<Sample> out;
  int witness_index = 0;
  for (const Witness* w : picks) {
    Sample s;
    s.text = prompt + "\n\n" + render_solution(inst, solved, w, skeleton_id);
    s.meta = {
        {"component", "cot"},
        {"task", task_name(inst.task)},
        {"n_nodes", inst.graph.n},
        {"n_edges", inst.graph.edge_count()},
        {"directed", inst.graph.directed},
        {"representation", representation_name(inst.representation)},
        {"seed", seed},
        {"template_id", template_id},
        {"variant_id", skeleton_id},
        {"witness_index", witness_index++},
    };
    out.push_back(std::move(s));
  }
  return out;
}

ConsistencyVerdict verify_answer_consistency(const std::string& sample_text,
                                             const ProblemInstance& inst,
                                             const SolvedInstance& solved) {
  const auto form = task_answer_form(inst.task);
  const Graph& g = inst.graph;
  auto span = extract_answer_span(sample_text, form);
  if (!span) return {false, "no answer span"};

  const auto& set = cot_templates(inst.task);
  if (set.span == AnswerSpanKind::witness) {
    // the span carries a certificate: re-validate it against the graph
    if (inst.task == TaskKind::maximum_clique) {
      auto nodes = parse_node_list_span(*span, g);
      if (!nodes) return {false, "unparseable clique span"};
      std::sort(nodes->begin(), nodes->end());
      auto verdict = validate_witness(inst, solved.answer, NodeSet{*nodes});
      if (!verdict.ok) return {false, verdict.reason};
      return {true, ""};
    }
    if (inst.task == TaskKind::maximum_matching) {
      auto pairs = parse_pair_list_span(*span, g);
      if (!pairs) return {false, "unparseable matching span"};
      std::sort(pairs->begin(), pairs->end());
      auto verdict = validate_witness(inst, solved.answer, PairList{*pairs});
      if (!verdict.ok) return {false, verdict.reason};
      return {true, ""};
    }
  }

  std::string expected = render_answer_span(form, solved.answer, nullptr, g);
  if (form == AnswerForm::node_seq) {
    // several orderings may be valid; accept any sequence passing the
    // task validator with the canonical answer value
    auto nodes = parse_node_list_span(*span, g);
    if (!nodes) return {false, "unparseable sequence span"};
    if (inst.task == TaskKind::topological_sort) {
      auto verdict = validate_witness(inst, solved.answer, PathWitness{*nodes});
      if (!verdict.ok) return {false, verdict.reason};
      return {true, ""};
    }
    if (*nodes != std::get<NodeSeq>(solved.answer.v).nodes) {
      return {false, "visit order differs from the reference traversal"};
    }
    return {true, ""};
  }
  if (!spans_equivalent(form, *span, expected)) {
    return {false, "answer '" + *span + "' differs from reference '" + expected + "'"};
  }
  return {true, ""};
}

}  // namespace graphforge
