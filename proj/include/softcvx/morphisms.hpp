#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "softcvx/bases.hpp"
#include "softcvx/convexity.hpp"
#include "softcvx/operators.hpp"

namespace softcvx {

/// A point map X -> Y lifted to soft sets over a shared parameter list.
class SoftFunctionMap {
 public:
  /// `map[x]` is the index in the codomain universe of the image of x.
  /// Throws SpaceMismatch if the parameter lists differ and UnknownElement
  /// for an out-of-range value.
  SoftFunctionMap(SpacePtr domain, SpacePtr codomain, std::vector<std::size_t> map);

  /// By element names. Throws UnknownElement, or NonTotalAssignment when
  /// some domain element is unmapped.
  static SoftFunctionMap from_names(SpacePtr domain, SpacePtr codomain,
                                    const std::map<std::string, std::string>& map);
  static SoftFunctionMap identity(SpacePtr space);

  const Space& domain() const noexcept { return *domain_; }
  const Space& codomain() const noexcept { return *codomain_; }
  const SpacePtr& domain_ptr() const noexcept { return domain_; }
  const SpacePtr& codomain_ptr() const noexcept { return codomain_; }
  std::size_t operator()(std::size_t x) const noexcept { return map_[x]; }
  const std::vector<std::size_t>& map() const noexcept { return map_; }

 private:
  SpacePtr domain_;
  SpacePtr codomain_;
  std::vector<std::size_t> map_;
};

SoftSet image(const SoftFunctionMap& f, const SoftSet& s);
SoftSet preimage(const SoftFunctionMap& f, const SoftSet& t);
/// g after f. Throws SpaceMismatch unless f's codomain is g's domain.
SoftFunctionMap compose(const SoftFunctionMap& g, const SoftFunctionMap& f);

struct PropertyResult {
  bool holds = true;
  /// The violating input: one soft set, or a directed family for the
  /// family clauses.
  std::vector<SoftSet> witness;
  std::string detail;
};

/// Preimages of members of zy are members of zx.
PropertyResult is_scp(const SoftFunctionMap& f, const SoftConvexStructure& zx,
                      const SoftConvexStructure& zy);
/// Images of members of zx are members of zy.
PropertyResult is_scc(const SoftFunctionMap& f, const SoftConvexStructure& zx,
                      const SoftConvexStructure& zy);
/// f(dx(s)) <= f(s) u dy(f(s)) for every s. Throws
/// ValidationError(InvalidOperator) unless both tables are c-derived.
PropertyResult is_sdp(const SoftFunctionMap& f, const OperatorTable& dx, const OperatorTable& dy);
/// Preimages of members of by are members of bx.
PropertyResult is_sbp(const SoftFunctionMap& f, const SoftConvexBase& bx, const SoftConvexBase& by);

/// The three equivalent characterizations of a preservation property.
/// clauses[0] membership, clauses[1] the directed-family inequality,
/// clauses[2] the single-set hull inequality.
struct EquivalenceReport {
  std::array<PropertyResult, 3> clauses;
  /// Directed families examined for the family clause.
  std::size_t families_checked = 0;
  std::vector<std::string> notes;

  bool agree() const noexcept {
    return clauses[0].holds == clauses[1].holds && clauses[1].holds == clauses[2].holds;
  }
};

/// The family clause runs over every down-set P(s) of the domain lattice
/// plus every upward directed subfamily of the lattice up to `cap` members
/// (skipped with a note when that scan is over budget). Needs tables on
/// both sides.
EquivalenceReport check_scp_equivalence(const SoftFunctionMap& f, const SoftConvexStructure& zx,
                                        const SoftConvexStructure& zy, std::size_t cap = 5);
EquivalenceReport check_scc_equivalence(const SoftFunctionMap& f, const SoftConvexStructure& zx,
                                        const SoftConvexStructure& zy, std::size_t cap = 5);

/// Every total map between the two universes, the first domain element's
/// image varying fastest.
std::vector<SoftFunctionMap> all_functions(const SpacePtr& domain, const SpacePtr& codomain);

}  // namespace softcvx
