#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace softcvx {

class Space;
using SpacePtr = std::shared_ptr<const Space>;

/// The ambient pair (universe X, parameter list E).
///
/// A soft set over a space is stored as |X|*|E| membership bits laid out
/// parameter-major: bit `p * |X| + x` is set when element x belongs to the
/// subset assigned to parameter p. The declaration order of elements and
/// parameters fixes that layout, and with it the canonical enumeration and
/// serialization order.
class Space {
 public:
  static SpacePtr make(std::vector<std::string> universe, std::vector<std::string> parameters);

  const std::vector<std::string>& universe() const noexcept { return universe_; }
  const std::vector<std::string>& parameters() const noexcept { return parameters_; }

  std::size_t universe_size() const noexcept { return universe_.size(); }
  std::size_t parameter_count() const noexcept { return parameters_.size(); }
  std::size_t bit_count() const noexcept { return universe_.size() * parameters_.size(); }
  std::size_t word_count() const noexcept { return (bit_count() + 63) / 64; }

  std::size_t bit_index(std::size_t parameter, std::size_t element) const noexcept {
    return parameter * universe_.size() + element;
  }

  std::optional<std::size_t> element_index(std::string_view name) const;
  std::optional<std::size_t> parameter_index(std::string_view name) const;

  /// Throwing lookups (UnknownElement / UnknownParameter).
  std::size_t require_element(std::string_view name) const;
  std::size_t require_parameter(std::string_view name) const;

  /// Structural equality: same element and parameter names in the same order.
  bool same_as(const Space& other) const noexcept;

 private:
  Space(std::vector<std::string> universe, std::vector<std::string> parameters);

  std::vector<std::string> universe_;
  std::vector<std::string> parameters_;
  std::unordered_map<std::string, std::size_t> element_ids_;
  std::unordered_map<std::string, std::size_t> parameter_ids_;
};

/// Throws SpaceMismatch unless both spaces are structurally equal.
void require_same_space(const Space& a, const Space& b);

}  // namespace softcvx
