#pragma once

// Crisp (ordinary) convex structures on a finite universe.
//
// Validation here works directly on sorted element lists with the standard
// set algorithms and shares no code with the soft validators, so the two
// can be compared against each other. Hulls go through the soft machinery
// on a one-parameter space.

#include <string>
#include <vector>

#include "softcvx/report.hpp"
#include "softcvx/soft_set.hpp"

namespace softcvx {

struct CrispReport {
  bool valid = true;
  std::vector<std::string> problems;
};

/// Checks that `members` (subsets of {0..universe_size-1}) contain the empty
/// set and the universe and are closed under pairwise intersection. Closure
/// under directed unions holds for any finite family with a greatest member
/// and is not searched.
CrispReport validate_crisp(std::size_t universe_size, const std::vector<ElementSet>& members);

class CrispConvexStructure {
 public:
  /// Throws InvalidStructure when validate_crisp fails.
  CrispConvexStructure(std::vector<std::string> universe, std::vector<ElementSet> members);

  const std::vector<std::string>& universe() const noexcept { return universe_; }
  /// Deduplicated, in canonical code order.
  const std::vector<ElementSet>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(const ElementSet& s) const;

  friend bool operator==(const CrispConvexStructure&, const CrispConvexStructure&) = default;

 private:
  std::vector<std::string> universe_;
  std::vector<ElementSet> members_;
};

/// Least member containing `target`.
ElementSet crisp_hull(const CrispConvexStructure& upsilon, const ElementSet& target);

std::string to_string(const CrispConvexStructure& upsilon);

}  // namespace softcvx
