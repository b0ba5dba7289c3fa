#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "softcvx/space.hpp"

namespace softcvx {

/// A crisp subset of a universe as sorted element indices.
using ElementSet = std::vector<std::size_t>;

/// Order of crisp sets by canonical binary code (element i is bit i).
bool canonical_less(const ElementSet& a, const ElementSet& b) noexcept;

/// A soft set (Omega, E): a total map from the parameters of a space to
/// subsets of its universe. Immutable; equality is parameter-wise set
/// equality over structurally equal spaces.
class SoftSet {
 public:
  /// Takes ownership of the membership words; bits past bit_count() are cleared.
  SoftSet(SpacePtr space, std::vector<std::uint64_t> words);

  static SoftSet null(SpacePtr space);      // Phi_E
  static SoftSet absolute(SpacePtr space);  // X_E

  /// Soft set whose membership bits are the binary digits of `code`.
  /// Requires bit_count() <= 64; codes index the canonical enumeration.
  static SoftSet from_code(SpacePtr space, std::uint64_t code);

  const Space& space() const noexcept { return *space_; }
  const SpacePtr& space_ptr() const noexcept { return space_; }
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  bool contains(std::size_t parameter, std::size_t element) const noexcept;

  /// Elements assigned to `parameter`, in universe order.
  ElementSet slice(std::size_t parameter) const;

  /// Canonical code; requires bit_count() <= 64.
  std::uint64_t code() const;

  bool is_null() const noexcept;
  bool is_absolute() const noexcept;
  std::size_t cardinality() const noexcept;

  friend bool operator==(const SoftSet& a, const SoftSet& b) noexcept;

 private:
  SpacePtr space_;
  std::vector<std::uint64_t> words_;
};

/// Mask of the valid bits of word `w` in a space with `bits` membership bits.
std::uint64_t word_mask(std::size_t bits, std::size_t w) noexcept;

/// Builds a soft set from parameter name -> element names. Every parameter
/// must be present (MissingParameter); unknown names raise UnknownParameter
/// or UnknownElement.
SoftSet make_soft_set(const SpacePtr& space,
                      const std::map<std::string, std::vector<std::string>>& assignment);

SoftSet unite(const SoftSet& a, const SoftSet& b);
SoftSet intersect(const SoftSet& a, const SoftSet& b);
SoftSet complement(const SoftSet& a);
SoftSet difference(const SoftSet& a, const SoftSet& b);
bool is_subset(const SoftSet& a, const SoftSet& b);

/// Text form in parameter order, e.g. `{(e1,∅),(e2,{x2})}`.
std::string to_string(const SoftSet& s);

/// Text form of a crisp element set, e.g. `{x1,x3}` or `∅`.
std::string format_elements(const Space& space, std::span<const std::size_t> elements);

struct SoftSetHash {
  std::size_t operator()(const SoftSet& s) const noexcept;
};

}  // namespace softcvx
