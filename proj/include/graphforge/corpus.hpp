#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace graphforge {

enum class Component { cot, pot, toe, realworld };

const char* component_name(Component c);
std::optional<Component> component_from_name(const std::string& name);

// One corpus document: the training text plus the metadata that makes it
// reproducible and re-verifiable. Serialized one JSON object per line.
struct Sample {
  std::string text;
  nlohmann::json meta;  // schema documented in the README

  std::string to_jsonl() const;
  static Sample from_jsonl(const std::string& line);
};

}  // namespace graphforge
