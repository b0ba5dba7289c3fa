#include "softcvx/crisp.hpp"

#include <algorithm>
#include <iterator>
#include <set>

#include "softcvx/convexity.hpp"

namespace softcvx {

CrispReport validate_crisp(std::size_t universe_size, const std::vector<ElementSet>& members) {
  CrispReport report;
  auto fail = [&](std::string why) {
    report.valid = false;
    report.problems.push_back(std::move(why));
  };

  const std::set<ElementSet> family(members.begin(), members.end());
  ElementSet everything(universe_size);
  for (std::size_t i = 0; i < universe_size; ++i) everything[i] = i;

  if (!family.count(ElementSet{})) fail("empty set is not a member");
  if (!family.count(everything)) fail("universe is not a member");

  for (auto a = family.begin(); a != family.end(); ++a) {
    for (auto b = std::next(a); b != family.end(); ++b) {
      ElementSet meet;
      std::set_intersection(a->begin(), a->end(), b->begin(), b->end(), std::back_inserter(meet));
      if (!family.count(meet)) fail("intersection of two members is not a member");
    }
  }
  return report;
}

CrispConvexStructure::CrispConvexStructure(std::vector<std::string> universe,
                                           std::vector<ElementSet> members)
    : universe_(std::move(universe)), members_(std::move(members)) {
  for (auto& m : members_) {
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    if (!m.empty() && m.back() >= universe_.size())
      throw Error(ErrorCode::UnknownElement, "crisp member mentions an element outside the universe");
  }
  std::sort(members_.begin(), members_.end(), canonical_less);
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());

  const CrispReport report = validate_crisp(universe_.size(), members_);
  if (!report.valid)
    throw Error(ErrorCode::InvalidStructure, "not a convex structure: " + report.problems.front());
}

bool CrispConvexStructure::contains(const ElementSet& s) const {
  return std::binary_search(members_.begin(), members_.end(), s, canonical_less);
}

namespace {

SoftSet as_one_parameter(const SpacePtr& space, const ElementSet& elements) {
  std::vector<std::uint64_t> words(space->word_count(), 0);
  for (auto x : elements) words[x / 64] |= std::uint64_t{1} << (x % 64);
  return SoftSet(space, std::move(words));
}

}  // namespace

ElementSet crisp_hull(const CrispConvexStructure& upsilon, const ElementSet& target) {
  auto space = Space::make(upsilon.universe(), {"*"});
  SoftFamily members(space);
  for (const auto& m : upsilon.members()) members.insert(as_one_parameter(space, m));
  const SoftConvexStructure zeta = adopt_structure(std::move(members));
  return hull(zeta, as_one_parameter(space, target)).slice(0);
}

std::string to_string(const CrispConvexStructure& upsilon) {
  auto space = Space::make(upsilon.universe(), {"*"});
  std::string out = "{";
  for (std::size_t i = 0; i < upsilon.members().size(); ++i) {
    if (i) out += ',';
    out += format_elements(*space, upsilon.members()[i]);
  }
  return out + "}";
}

}  // namespace softcvx
