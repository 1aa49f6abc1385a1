#pragma once

// Brute-force oracles: exhaustive-enumeration answers for every task,
// deliberately sharing no code with the solvers they check. Test-only.

#include <stdexcept>

#include "graphforge/solve.hpp"

namespace graphforge::oracle {

struct OracleRefusal : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bounds: n <= 8 (n <= 7 for spanning-tree enumeration, m <= 14 for the
// Euler trail search). Throws OracleRefusal beyond them.
AnswerValue answer(const ProblemInstance& instance);

// Task-aware comparison of a solved instance against the oracle: value
// equality for value answers, validity predicates for any-valid-order
// answers, argmax plus 1e-9 score agreement for pagerank. Also re-validates
// every witness. Returns an empty string on success, a reason otherwise.
std::string check(const ProblemInstance& instance, const SolvedInstance& solved);

}  // namespace graphforge::oracle
