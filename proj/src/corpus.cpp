#include "graphforge/corpus.hpp"

#include <optional>
#include <stdexcept>

namespace graphforge {

const char* component_name(Component c) {
  switch (c) {
    case Component::cot: return "cot";
    case Component::pot: return "pot";
    case Component::toe: return "toe";
    case Component::realworld: return "realworld";
  }
  return "?";
}

std::optional<Component> component_from_name(const std::string& name) {
  if (name == "cot") return Component::cot;
  if (name == "pot") return Component::pot;
  if (name == "toe") return Component::toe;
  if (name == "realworld") return Component::realworld;
  return std::nullopt;
}

std::string Sample::to_jsonl() const {
  nlohmann::json j{{"text", text}, {"meta", meta}};
  return j.dump();
}

Sample Sample::from_jsonl(const std::string& line) {
  auto j = nlohmann::json::parse(line);
  Sample s;
  s.text = j.at("text").get<std::string>();
  s.meta = j.at("meta");
  return s;
}

}  // namespace graphforge
