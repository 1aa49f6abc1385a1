#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graphforge/task.hpp"

namespace graphforge {

// Node-aware rendering: node pieces go through g.label() so relabeled
// instances rewrite every mention consistently.
std::string render_phrase(const Phrase& ph, const Graph& g);

std::string render_node_list(const std::vector<int>& nodes, const Graph& g,
                             const char* open = "[", const char* sep = ", ",
                             const char* close = "]");

std::string render_pair_list(const std::vector<std::pair<int, int>>& pairs, const Graph& g);

// Canonical answer span for a sample. Forms whose span is the witness
// (maximum_clique members, maximum_matching pairs, witness-path prompts)
// receive it via span_witness.
std::string render_answer_span(AnswerForm form, const AnswerValue& answer,
                               const Witness* span_witness, const Graph& g);

// The frozen answer-extraction grammar:
//   decision forms  -> the last bracketed token "[...]" in the text
//   all other forms -> the payload of the last "Answer:"-prefixed line,
//                      falling back to the final numeric or bracketed list
//                      literal on the last non-empty line.
std::optional<std::string> extract_answer_span(const std::string& sample_text, AnswerForm form);

// Span comparison used by the verifiers: whitespace-insensitive; set-valued
// forms compare as sets (order-insensitive).
bool spans_equivalent(AnswerForm form, const std::string& a, const std::string& b);

// Parse a rendered span back to node ids (label-aware). Used to re-validate
// witness-valued answers. Returns nullopt on malformed spans.
std::optional<std::vector<int>> parse_node_list_span(const std::string& span, const Graph& g);
std::optional<std::vector<std::pair<int, int>>> parse_pair_list_span(const std::string& span,
                                                                     const Graph& g);

}  // namespace graphforge
