#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graphforge/corpus.hpp"
#include "graphforge/solve.hpp"

namespace graphforge {

// One entry of the code bank. On disk (and embedded) it is a UTF-8 file with
// "key: value" front-matter, a "---" separator, and the code body:
//
//   task: maximum_flow
//   variant_id: 2
//   expected_output_rule: integer
//   ---
//   <python code with {slot} markers>
//
// Recognized slots: {graph_text} {edge_pattern} {u} {v} {start} {mode_fn}
// {alpha} {max_iter} {left_list} {n} {node_weights_dict}.
struct CodeTemplate {
  TaskKind task = TaskKind::cycle_detection;
  int variant_id = 0;
  std::string expected_output_rule;
  std::string body;
};

struct BankError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The bundled bank: two variants per task, one leaning on a graph library
// where its output is contractually deterministic, one from scratch.
const std::vector<CodeTemplate>& pot_bank();

std::vector<CodeTemplate> parse_pot_bank_text(const std::string& text,
                                              const std::string& origin);
std::vector<CodeTemplate> load_pot_bank_dir(const std::string& dir);

const CodeTemplate& pick_pot_template(const std::vector<CodeTemplate>& bank, TaskKind task,
                                      int variant_index);

// How the reference answer maps to the code's printed output.
std::string render_expected_output(TaskKind task, const std::string& rule,
                                   const SolvedInstance& solved, const Graph& g);

// Problem statement + code block; meta carries expected_output.
Sample render_pot(const ProblemInstance& inst, const SolvedInstance& solved,
                  const CodeTemplate& templ, int prompt_template_id, std::uint64_t seed);

// Documented output equivalence: whitespace-insensitive, set-valued answers
// compared as sets.
bool pot_output_equivalent(TaskKind task, const std::string& expected,
                           const std::string& actual);

struct ExecVerdict {
  enum class Status { pass, fail, skipped };
  Status status = Status::skipped;
  std::string detail;
};

// Runs the sample's code under `interpreter_command` (e.g. "python3") with a
// 10-second timeout; pass iff exit 0 and stdout matches expected_output under
// the equivalence above. Empty command, missing interpreter, or a missing
// optional library (import failure probed beforehand) yield skipped.
ExecVerdict verify_pot_execution(const Sample& sample, const std::string& interpreter_command);

}  // namespace graphforge
