#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "graphforge/corpus.hpp"
#include "graphforge/solve.hpp"
#include "graphforge/text.hpp"

namespace graphforge {

// Unresolved "{slot}" marker left in a rendered template.
struct TemplateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Whether a task's final answer span is the answer value or the certificate
// (clique members, matching pairs).
enum class AnswerSpanKind { value, witness };

struct CotTemplateSet {
  // prompt templates: >= 3 phrasings per task, "{slot}"-marked
  std::vector<std::string> prompts;
  // conclusion phrasings: >= 2 per task, paired with the two narration styles
  std::vector<std::string> conclusions;
  // decision tasks word their negative conclusions separately
  std::vector<std::string> conclusions_no;
  AnswerSpanKind span = AnswerSpanKind::value;
};

// The bundled deterministic template bank.
const CotTemplateSet& cot_templates(TaskKind task);

// Resolve "{slot}" markers against instance-derived values; throws
// TemplateError naming the first unresolved slot.
std::string resolve_template(const std::string& templ,
                             const std::vector<std::pair<std::string, std::string>>& slots);

// Instance-derived slot values shared by the synthesizers (graph text, query
// nodes, parameter constants, node-weight table, ...).
std::vector<std::pair<std::string, std::string>> instance_slots(const ProblemInstance& inst);

// Rendered problem statement for (instance, prompt template id).
std::string render_prompt(const ProblemInstance& inst, int template_id);

// The step-narration cap: longer runs narrate the first and last ten steps
// around a summary line.
constexpr int kMaxNarratedSteps = 120;

// Worked solution for one witness (narrates solved.steps in order, states the
// witness, ends with the final answer line).
std::string render_solution(const ProblemInstance& inst, const SolvedInstance& solved,
                            const Witness* witness, int skeleton_id);

// One sample per sampled witness, at most max_witnesses; every sample passes
// verify_answer_consistency by construction.
std::vector<Sample> synthesize_cot(const ProblemInstance& inst, const SolvedInstance& solved,
                                   int max_witnesses, std::uint64_t seed);

struct ConsistencyVerdict {
  bool ok = false;
  std::string reason;
};

// The machine-checkable stand-in for the paper-style verification pass:
// extracts the sample's final answer through the frozen grammar, compares it
// with the reference answer, and re-validates witness-valued spans against
// the graph.
ConsistencyVerdict verify_answer_consistency(const std::string& sample_text,
                                             const ProblemInstance& inst,
                                             const SolvedInstance& solved);

}  // namespace graphforge
