#include <cmath>
#include <string>

#include "softcvx/convexity.hpp"

namespace softcvx {
namespace {

constexpr std::size_t kMaxInducedMembers = std::size_t{1} << 20;

SoftSet assemble(const SpacePtr& space, const CrispConvexStructure& upsilon,
                 const std::vector<std::size_t>& choice) {
  std::vector<std::uint64_t> words(space->word_count(), 0);
  for (std::size_t p = 0; p < choice.size(); ++p) {
    for (auto x : upsilon.members()[choice[p]]) {
      const std::size_t bit = space->bit_index(p, x);
      words[bit / 64] |= std::uint64_t{1} << (bit % 64);
    }
  }
  return SoftSet(space, std::move(words));
}

}  // namespace

SoftConvexStructure induced_from_crisp(const CrispConvexStructure& upsilon,
                                       std::vector<std::string> parameters) {
  auto space = Space::make(upsilon.universe(), std::move(parameters));
  const std::size_t base = upsilon.size();
  const std::size_t arity = space->parameter_count();
  if (std::pow(static_cast<double>(base), static_cast<double>(arity)) >
      static_cast<double>(kMaxInducedMembers))
    throw Error(ErrorCode::BudgetExceeded,
                "induced structure would have " + std::to_string(base) + "^" +
                    std::to_string(arity) + " members");

  // Mixed-radix counter over member choices, first parameter fastest.
  SoftFamily members(space);
  std::vector<std::size_t> choice(arity, 0);
  while (true) {
    members.insert(assemble(space, upsilon, choice));
    std::size_t p = 0;
    while (p < arity && ++choice[p] == base) choice[p++] = 0;
    if (p == arity) break;
  }
  return adopt_structure(std::move(members));
}

SoftConvexStructure induced_single_set(const CrispConvexStructure& upsilon,
                                       std::vector<std::string> parameters) {
  auto space = Space::make(upsilon.universe(), std::move(parameters));
  SoftFamily members(space);
  for (std::size_t i = 0; i < upsilon.size(); ++i)
    members.insert(assemble(space, upsilon, std::vector<std::size_t>(space->parameter_count(), i)));
  return adopt_structure(std::move(members));
}

}  // namespace softcvx
