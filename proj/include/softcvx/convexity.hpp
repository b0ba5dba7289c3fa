#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "softcvx/crisp.hpp"
#include "softcvx/report.hpp"
#include "softcvx/soft_family.hpp"

namespace softcvx {

/// Checks the soft convex structure axioms:
///   "1"  Phi_E and X_E are members;
///   "2"  closed under intersections of subfamilies;
///   "3"  closed under unions of upward directed subfamilies.
/// Fast mode checks pairwise intersections and certifies "3" by finite
/// collapse (a finite directed family contains its own union). Literal mode
/// enumerates subfamilies of size 2..cap for both "2" and "3".
ValidationReport validate_structure(const SoftFamily& f, const ValidationOptions& options = {});

/// A family known to satisfy the structure axioms.
class SoftConvexStructure {
 public:
  /// Validates; throws ValidationError(InvalidStructure) with the report.
  static SoftConvexStructure make(SoftFamily members, const ValidationOptions& options = {});

  const SoftFamily& members() const noexcept { return members_; }
  const Space& space() const noexcept { return members_.space(); }
  const SpacePtr& space_ptr() const noexcept { return members_.space_ptr(); }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(const SoftSet& s) const { return members_.contains(s); }

  friend bool operator==(const SoftConvexStructure& a, const SoftConvexStructure& b) {
    return a.members_ == b.members_;
  }

 private:
  explicit SoftConvexStructure(SoftFamily members) : members_(std::move(members)) {}
  friend SoftConvexStructure adopt_structure(SoftFamily members);

  SoftFamily members_;
};

/// Wraps a family whose validity was established by construction. Runs the
/// fast validator and throws std::logic_error if that belief is wrong.
SoftConvexStructure adopt_structure(SoftFamily members);

/// Smallest structure containing f: f plus Phi_E and X_E, closed under
/// pairwise intersection by fixpoint iteration. Keeps f's order and appends
/// new members in discovery order.
SoftConvexStructure close_to_structure(const SoftFamily& f);

/// complement(s) is a member.
bool is_concave(const SoftSet& s, const SoftConvexStructure& zeta);

/// The e-parameter crisp structure {Omega(e) : Omega in zeta}.
CrispConvexStructure slice(const SoftConvexStructure& zeta, std::size_t parameter);
CrispConvexStructure slice(const SoftConvexStructure& zeta, const std::string& parameter);

/// All soft sets whose every slice lies in upsilon (|upsilon|^|E| members).
SoftConvexStructure induced_from_crisp(const CrispConvexStructure& upsilon,
                                       std::vector<std::string> parameters);
/// Only the constant assignments e -> A for A in upsilon.
SoftConvexStructure induced_single_set(const CrispConvexStructure& upsilon,
                                       std::vector<std::string> parameters);

/// Intersection of the members containing s; the least member above s.
SoftSet hull(const SoftConvexStructure& zeta, const SoftSet& s);

/// Per-parameter crisp hulls: result(e) is the hull of s(e) in slice(zeta, e).
/// Holds the slices of one structure so repeated queries do not rebuild them.
class PointwiseHull {
 public:
  explicit PointwiseHull(const SoftConvexStructure& zeta);
  SoftSet operator()(const SoftSet& s) const;

 private:
  SpacePtr space_;
  std::vector<SoftConvexStructure> slices_;  // one-parameter spaces
};

SoftSet pointwise_hull(const SoftConvexStructure& zeta, const SoftSet& s);

}  // namespace softcvx
