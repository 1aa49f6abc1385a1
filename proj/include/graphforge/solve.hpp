#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "graphforge/rng.hpp"
#include "graphforge/task.hpp"

namespace graphforge {

// Instance routed to a solver family that does not handle its task.
struct DispatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Violated solver precondition (cyclic DAG input, intra-partition edge, ...).
// witness_nodes carries the offending structure when one exists.
struct PreconditionError : std::runtime_error {
  std::vector<int> witness_nodes;
  explicit PreconditionError(const std::string& msg, std::vector<int> witness = {})
      : std::runtime_error(msg), witness_nodes(std::move(witness)) {}
};

// Guard for the NP-hard searches; generator-side size/density caps keep
// instances far below it, so tripping it means a misconfigured pipeline.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dispatch on instance.task. Deterministic: pure function of the instance.
SolvedInstance solve(const ProblemInstance& instance);

// Family entry points; each rejects tasks outside its set with DispatchError.
SolvedInstance solve_boolean(const ProblemInstance& instance);
SolvedInstance solve_ordering(const ProblemInstance& instance);
SolvedInstance solve_local(const ProblemInstance& instance);
SolvedInstance solve_path_opt(const ProblemInstance& instance);
SolvedInstance solve_flow(const ProblemInstance& instance);
SolvedInstance solve_np_search(const ProblemInstance& instance);
SolvedInstance solve_components(const ProblemInstance& instance);
SolvedInstance solve_pagerank(const ProblemInstance& instance);
SolvedInstance solve_matching(const ProblemInstance& instance);

struct ValidationResult {
  bool ok = false;
  std::string reason;

  static ValidationResult pass() { return {true, ""}; }
  static ValidationResult fail(std::string why) { return {false, std::move(why)}; }
};

// Total, solver-independent witness check: a claimed cycle is closed with >= 3
// distinct nodes and existing edges, a claimed path's weight sum equals the
// claimed value, a claimed clique is fully connected, and so on.
ValidationResult validate_witness(const ProblemInstance& instance, const AnswerValue& answer,
                                  const Witness& witness);

// Whether the task/answer combination carries a certificate at all
// (pure-value local queries and negative decisions mostly do not).
bool witnessable(TaskKind task, const AnswerValue& answer);

// Up to max_count pairwise-distinct validator-passing witnesses that share the
// canonical answer value, enumerated in lexicographic order. Fewer are
// returned when fewer exist (or the enumeration budget is hit).
std::vector<Witness> enumerate_witnesses(const ProblemInstance& instance, int max_count,
                                         Rng& rng);

}  // namespace graphforge
