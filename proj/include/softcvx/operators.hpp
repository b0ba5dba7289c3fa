#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "softcvx/convexity.hpp"
#include "softcvx/report.hpp"

namespace softcvx {

/// Largest |X|*|E| for which operator tables are built.
inline constexpr std::size_t kMaxTableBits = 16;

/// A total map S_E(X) -> S_E(X), stored as one output code per input code
/// in canonical binary-counting order.
class OperatorTable {
 public:
  /// `entries[c]` is the image of the soft set with code c. Throws
  /// TableIncomplete unless there are exactly 2^(|X||E|) entries,
  /// SpaceMismatch if an entry lives elsewhere, BudgetExceeded past
  /// kMaxTableBits.
  OperatorTable(SpacePtr space, const std::vector<SoftSet>& entries);

  static OperatorTable from_codes(SpacePtr space, std::vector<std::uint64_t> codes);
  static OperatorTable tabulate(SpacePtr space, const std::function<SoftSet(const SoftSet&)>& fn);

  static OperatorTable identity(SpacePtr space);
  static OperatorTable constant_null(SpacePtr space);
  static OperatorTable complement_map(SpacePtr space);

  const Space& space() const noexcept { return *space_; }
  const SpacePtr& space_ptr() const noexcept { return space_; }
  std::size_t size() const noexcept { return codes_.size(); }

  std::uint64_t apply_code(std::uint64_t code) const noexcept { return codes_[code]; }
  SoftSet apply(const SoftSet& s) const;
  const std::vector<std::uint64_t>& codes() const noexcept { return codes_; }

  friend bool operator==(const OperatorTable& a, const OperatorTable& b) {
    return a.space_->same_as(*b.space_) && a.codes_ == b.codes_;
  }

 private:
  OperatorTable(SpacePtr space, std::vector<std::uint64_t> codes, bool);

  SpacePtr space_;
  std::vector<std::uint64_t> codes_;
};

/// Tabulates the hull of a structure over every soft set of its space.
OperatorTable tabulate_hull(const SoftConvexStructure& zeta);

/// Hull-operator laws, witnesses labelled:
///   "normalization"  eta(Phi_E) = Phi_E
///   "extensive"      s <= eta(s)
///   "monotone"       a <= b implies eta(a) <= eta(b)
///   "idempotent"     eta(eta(s)) = eta(s)
///   "directed-additive"  eta(union F) = union eta(F) for upward directed F
/// Fast mode checks monotonicity on covering pairs (b = a plus one bit) and
/// derives directed additivity from finite collapse: its violations are
/// exactly the empty family when normalization fails and the directed pairs
/// {a, b} where monotonicity fails. Literal mode checks every comparable
/// pair and every directed subfamily of S_E(X) up to the cap.
ValidationReport validate_hull_operator(const OperatorTable& eta, const ValidationOptions& options = {});

/// c-derived operator laws: "normalization", "monotone",
/// "weak-idempotent" d(d(s) u s) <= d(s) u s, and "directed-additive".
ValidationReport validate_cderived_operator(const OperatorTable& d, const ValidationOptions& options = {});

/// Fixpoints {s : eta(s) = s}. Throws ValidationError(InvalidOperator).
SoftConvexStructure structure_from_hull_operator(const OperatorTable& eta);

/// {s : d(s) <= s}; cross-checked against {d(s) u s}. Throws
/// ValidationError(InvalidOperator).
SoftConvexStructure structure_from_cderived(const OperatorTable& d);

/// The family {d(s) u s : s in S_E(X)}, in order of first appearance.
SoftFamily cderived_image_family(const OperatorTable& d);

/// d(s) u s. Throws ValidationError(InvalidOperator) when d is not c-derived.
SoftSet hull_from_cderived(const OperatorTable& d, const SoftSet& s);

/// The table of s -> d(s) u s.
OperatorTable cderived_hull_table(const OperatorTable& d);

}  // namespace softcvx
