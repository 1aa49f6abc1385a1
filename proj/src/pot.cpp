#include "graphforge/pot.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "graphforge/cot.hpp"
#include "graphforge/subprocess.hpp"
#include "graphforge/text.hpp"

namespace graphforge {

namespace {

const std::vector<std::string>& slot_vocabulary() {
  static const std::vector<std::string> kVocab = {
      "graph_text", "edge_pattern", "u",         "v",
      "start",      "mode_fn",      "alpha",     "max_iter",
      "left_list",  "n",            "node_weights_dict"};
  return kVocab;
}

// Code bodies are legal Python full of braces, so slot resolution is plain
// substring replacement over the registered names only.
std::string resolve_code(const std::string& body,
                         const std::vector<std::pair<std::string, std::string>>& slots) {
  std::string out = body;
  for (const auto& [name, value] : slots) {
    std::string marker = "{" + name + "}";
    std::size_t at = 0;
    while ((at = out.find(marker, at)) != std::string::npos) {
      out.replace(at, marker.size(), value);
      at += value.size();
    }
  }
  for (const auto& name : slot_vocabulary()) {
    std::string marker = "{" + name + "}";
    if (out.find(marker) != std::string::npos) {
      throw TemplateError("unresolved template slot '" + marker + "'");
    }
  }
  return out;
}

std::string edge_pattern(const Graph& g) {
  if (g.directed && g.weighted) return R"(\((\d+)->(\d+),(\d+)\))";
  if (g.directed) return R"(\((\d+)->(\d+)\))";
  if (g.weighted) return R"(\((\d+), (\d+), (\d+)\))";
  return R"(\((\d+), (\d+)\))";
}

std::vector<std::pair<std::string, std::string>> pot_slots(const ProblemInstance& inst) {
  const Graph& g = inst.graph;
  std::vector<std::pair<std::string, std::string>> slots;
  slots.emplace_back("graph_text", render_representation(g, inst.representation));
  slots.emplace_back("edge_pattern", edge_pattern(g));
  slots.emplace_back("n", std::to_string(g.n));
  if (const auto* p = std::get_if<PairParam>(&inst.params)) {
    slots.emplace_back("u", std::to_string(p->u));
    slots.emplace_back("v", std::to_string(p->v));
  }
  if (const auto* p = std::get_if<NodeParam>(&inst.params)) {
    slots.emplace_back("u", std::to_string(p->u));
  }
  if (const auto* p = std::get_if<TraversalParam>(&inst.params)) {
    slots.emplace_back("start", std::to_string(p->start));
    slots.emplace_back("mode_fn", p->mode == TraversalMode::bfs ? "bfs" : "dfs");
  }
  if (const auto* p = std::get_if<MatchingParam>(&inst.params)) {
    std::string left = "[";
    for (std::size_t i = 0; i < p->left.size(); ++i) {
      if (i) left += ", ";
      left += std::to_string(p->left[i]);
    }
    left += "]";
    slots.emplace_back("left_list", left);
  }
  if (const auto* p = std::get_if<PagerankParam>(&inst.params)) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", p->alpha);
    slots.emplace_back("alpha", buf);
    slots.emplace_back("max_iter", std::to_string(p->max_iter));
  }
  if (g.has_node_weights()) {
    std::string dict = "{";
    for (int v = 0; v < g.n; ++v) {
      if (v) dict += ", ";
      dict += std::to_string(v) + ": " +
              std::to_string(g.node_weights[static_cast<std::size_t>(v)]);
    }
    dict += "}";
    slots.emplace_back("node_weights_dict", dict);
  }
  return slots;
}

}  // namespace

std::vector<CodeTemplate> load_pot_bank_dir(const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<CodeTemplate> out;
  for (const auto& f : files) {
    std::ifstream in(f, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    auto parsed = parse_pot_bank_text(ss.str(), f.string());
    out.insert(out.end(), parsed.begin(), parsed.end());
  }
  if (out.empty()) throw BankError(dir + ": no bank entries found");
  return out;
}

const CodeTemplate& pick_pot_template(const std::vector<CodeTemplate>& bank, TaskKind task,
                                      int variant_index) {
  std::vector<const CodeTemplate*> candidates;
  for (const auto& t : bank) {
    if (t.task == task) candidates.push_back(&t);
  }
  if (candidates.empty()) {
    throw BankError(std::string("no code templates for task ") + task_name(task));
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const CodeTemplate* a, const CodeTemplate* b) {
              return a->variant_id < b->variant_id;
            });
  return *candidates[static_cast<std::size_t>(variant_index) % candidates.size()];
}

std::string render_expected_output(TaskKind task, const std::string& rule,
                                   const SolvedInstance& solved, const Graph& g) {
  (void)task;
  if (rule == "yes_no") return std::get<bool>(solved.answer.v) ? "Yes" : "No";
  if (rule == "integer") return std::to_string(std::get<long long>(solved.answer.v));
  if (rule == "integer_or_sentinel") {
    if (const auto* s = std::get_if<Sentinel>(&solved.answer.v)) return s->text;
    return std::to_string(std::get<long long>(solved.answer.v));
  }
  if (rule == "fraction4") return rational_to_decimal4(std::get<Rational>(solved.answer.v));
  if (rule == "count") {
    return std::to_string(std::get<NodeSet>(solved.answer.v).nodes.size());
  }
  if (rule == "node_list") return render_node_list(std::get<NodeSet>(solved.answer.v).nodes, g);
  if (rule == "node_seq") return render_node_list(std::get<NodeSeq>(solved.answer.v).nodes, g);
  if (rule == "components") {
    const auto& comps = std::get<ComponentList>(solved.answer.v);
    std::string out = "[";
    for (std::size_t i = 0; i < comps.groups.size(); ++i) {
      if (i) out += ", ";
      out += render_node_list(comps.groups[i], g);
    }
    return out + "]";
  }
  if (rule == "argmax_node") return std::to_string(std::get<long long>(solved.answer.v));
  if (rule == "clique_size") return std::to_string(std::get<long long>(solved.answer.v));
  if (rule == "pair_list") {
    const auto& pairs = std::get<PairList>(solved.witnesses.at(0));
    return render_pair_list(pairs.pairs, g);
  }
  throw BankError("unknown expected_output_rule '" + rule + "'");
}

Sample render_pot(const ProblemInstance& inst, const SolvedInstance& solved,
                  const CodeTemplate& templ, int prompt_template_id, std::uint64_t seed) {
  if (templ.task != inst.task) {
    throw BankError("code template task does not match the instance");
  }
  std::string prompt = render_prompt(inst, prompt_template_id);
  std::string code = resolve_code(templ.body, pot_slots(inst));
  Sample s;
  s.text = prompt + "\n\n" + code;
  s.meta = {
      {"component", "pot"},
      {"task", task_name(inst.task)},
      {"n_nodes", inst.graph.n},
      {"n_edges", inst.graph.edge_count()},
      {"directed", inst.graph.directed},
      {"representation", representation_name(inst.representation)},
      {"seed", seed},
      {"template_id", prompt_template_id},
      {"variant_id", templ.variant_id},
      {"witness_index", 0},
      {"expected_output",
       render_expected_output(inst.task, templ.expected_output_rule, solved, inst.graph)},
      {"code_offset", prompt.size() + 2},
  };
  return s;
}

namespace {

std::string trim_ws(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool set_valued(TaskKind task) {
  switch (task) {
    case TaskKind::neighbor:
    case TaskKind::predecessor:
    case TaskKind::common_neighbors:
    case TaskKind::maximum_matching:
      return true;
    default:
      return false;
  }
}

}  // namespace

bool pot_output_equivalent(TaskKind task, const std::string& expected,
                           const std::string& actual) {
  if (set_valued(task)) {
    return spans_equivalent(AnswerForm::node_set, trim_ws(expected), trim_ws(actual));
  }
  // whitespace-insensitive comparison
  std::string a = trim_ws(expected), b = trim_ws(actual);
  auto squash = [](const std::string& s) {
    std::string out;
    bool ws = false;
    for (char c : s) {
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        ws = true;
        continue;
      }
      if (ws && !out.empty()) out += ' ';
      ws = false;
      out += c;
    }
    return out;
  };
  return squash(a) == squash(b);
}

ExecVerdict verify_pot_execution(const Sample& sample, const std::string& interpreter_command) {
  ExecVerdict verdict;
  if (interpreter_command.empty()) {
    verdict.status = ExecVerdict::Status::skipped;
    verdict.detail = "no interpreter configured";
    return verdict;
  }
  static std::map<std::string, bool> probe_cache;
  auto probed = [&](const std::string& cmd, const std::string& probe_code) {
    auto it = probe_cache.find(cmd + "\x1f" + probe_code);
    if (it != probe_cache.end()) return it->second;
    auto r = run_command(cmd, probe_code, 15000);
    bool ok = !r.spawn_failed && !r.timed_out && r.exit_code == 0;
    probe_cache.emplace(cmd + "\x1f" + probe_code, ok);
    return ok;
  };
  // the interpreter receives the program on stdin ("python3 -" style)
  const std::string run = interpreter_command + " -";
  if (!probed(run, "print(0)\n")) {
    verdict.status = ExecVerdict::Status::skipped;
    verdict.detail = "interpreter '" + interpreter_command + "' unavailable";
    return verdict;
  }
  const std::string code =
      sample.text.substr(sample.meta.at("code_offset").get<std::size_t>());
  if (code.find("import networkx") != std::string::npos &&
      !probed(run, "import networkx\n")) {
    verdict.status = ExecVerdict::Status::skipped;
    verdict.detail = "networkx unavailable in the interpreter";
    return verdict;
  }
  auto r = run_command(run, code, 10000);
  const std::string expected = sample.meta.at("expected_output").get<std::string>();
  if (r.timed_out) {
    verdict.status = ExecVerdict::Status::fail;
    verdict.detail = "timeout";
    return verdict;
  }
  if (r.spawn_failed || r.exit_code != 0) {
    verdict.status = ExecVerdict::Status::fail;
    verdict.detail = "exit " + std::to_string(r.exit_code) + ": " + r.err.substr(0, 300);
    return verdict;
  }
  auto task = task_from_name(sample.meta.at("task").get<std::string>());
  if (!pot_output_equivalent(task.value(), expected, r.out)) {
    verdict.status = ExecVerdict::Status::fail;
    verdict.detail = "stdout '" + trim_ws(r.out).substr(0, 200) + "' != expected '" +
                     expected + "'";
    return verdict;
  }
  verdict.status = ExecVerdict::Status::pass;
  return verdict;
}

}  // namespace graphforge
