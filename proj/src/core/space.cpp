#include "softcvx/space.hpp"

#include "softcvx/error.hpp"

namespace softcvx {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::UnknownParameter: return "UnknownParameter";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::MissingParameter: return "MissingParameter";
    case ErrorCode::SpaceMismatch: return "SpaceMismatch";
    case ErrorCode::InvalidSpace: return "InvalidSpace";
    case ErrorCode::InvalidStructure: return "InvalidStructure";
    case ErrorCode::InvalidOperator: return "InvalidOperator";
    case ErrorCode::InvalidBase: return "InvalidBase";
    case ErrorCode::TableIncomplete: return "TableIncomplete";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::NonTotalAssignment: return "NonTotalAssignment";
    case ErrorCode::DuplicateName: return "DuplicateName";
  }
  return "Unknown";
}

Space::Space(std::vector<std::string> universe, std::vector<std::string> parameters)
    : universe_(std::move(universe)), parameters_(std::move(parameters)) {
  if (universe_.empty()) throw Error(ErrorCode::InvalidSpace, "universe must be nonempty");
  if (parameters_.empty()) throw Error(ErrorCode::InvalidSpace, "parameter list must be nonempty");
  for (std::size_t i = 0; i < universe_.size(); ++i) {
    if (!element_ids_.emplace(universe_[i], i).second)
      throw Error(ErrorCode::DuplicateName, "element '" + universe_[i] + "' declared twice");
  }
  for (std::size_t i = 0; i < parameters_.size(); ++i) {
    if (!parameter_ids_.emplace(parameters_[i], i).second)
      throw Error(ErrorCode::DuplicateName, "parameter '" + parameters_[i] + "' declared twice");
  }
}

SpacePtr Space::make(std::vector<std::string> universe, std::vector<std::string> parameters) {
  return SpacePtr(new Space(std::move(universe), std::move(parameters)));
}

std::optional<std::size_t> Space::element_index(std::string_view name) const {
  auto it = element_ids_.find(std::string(name));
  if (it == element_ids_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Space::parameter_index(std::string_view name) const {
  auto it = parameter_ids_.find(std::string(name));
  if (it == parameter_ids_.end()) return std::nullopt;
  return it->second;
}

std::size_t Space::require_element(std::string_view name) const {
  if (auto id = element_index(name)) return *id;
  throw Error(ErrorCode::UnknownElement, "'" + std::string(name) + "' is not in the universe");
}

std::size_t Space::require_parameter(std::string_view name) const {
  if (auto id = parameter_index(name)) return *id;
  throw Error(ErrorCode::UnknownParameter, "'" + std::string(name) + "' is not a parameter");
}

bool Space::same_as(const Space& other) const noexcept {
  return this == &other || (universe_ == other.universe_ && parameters_ == other.parameters_);
}

void require_same_space(const Space& a, const Space& b) {
  if (!a.same_as(b)) throw Error(ErrorCode::SpaceMismatch, "operands live on different spaces");
}

}  // namespace softcvx
