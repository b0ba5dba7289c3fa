#pragma once

#include "softcvx/convexity.hpp"
#include "softcvx/report.hpp"

namespace softcvx {

/// Checks the base conditions, witnesses labelled "SCB1", "SCB2", "SCB3".
///
/// Fast mode uses the finite reductions: SCB1 is X_E in beta, SCB2 is every
/// pairwise intersection lying in beta or equal to Phi_E, and SCB3 holds by
/// finite collapse. Literal mode builds U, the unions of upward directed
/// subfamilies of beta of size 0..cap, and checks that X_E is in U, that
/// intersections of subfamilies of size 2..cap are in U, and that unions
/// of directed subfamilies of U of size 2..cap stay in U.
///
/// The empty family fails SCB1.
ValidationReport validate_cbase(const SoftFamily& f, const ValidationOptions& options = {});

class SoftConvexBase {
 public:
  /// Throws ValidationError(InvalidBase).
  static SoftConvexBase make(SoftFamily members, const ValidationOptions& options = {});

  const SoftFamily& members() const noexcept { return members_; }
  const Space& space() const noexcept { return members_.space(); }
  const SpacePtr& space_ptr() const noexcept { return members_.space_ptr(); }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(const SoftSet& s) const { return members_.contains(s); }

 private:
  explicit SoftConvexBase(SoftFamily members) : members_(std::move(members)) {}
  SoftFamily members_;
};

/// Phi_E followed by the members of beta, cross-validated as a structure.
SoftConvexStructure structure_from_cbase(const SoftConvexBase& beta);

/// Unions of every upward directed subfamily of beta with size 0..cap, in
/// discovery order. Equal to beta plus Phi_E for a finite base.
SoftFamily directed_unions(const SoftFamily& beta, std::size_t cap);

}  // namespace softcvx
