#include <algorithm>
#include <cctype>
#include <map>
#include <random>
#include <set>
#include <string>
#include <thread>

#include "softcvx/combinatorics.hpp"
#include "softcvx/oracle.hpp"

namespace softcvx {
namespace {

constexpr std::size_t kMaxEnumerationBits = 12;
constexpr std::size_t kMaxFilterBits = 4;

// Keeps the members of a closed family sorted by code so that the same
// structure always comes out identical, whatever seed produced it.
SoftConvexStructure canonical(const SpacePtr& space, std::vector<std::uint64_t> codes) {
  std::sort(codes.begin(), codes.end());
  return adopt_structure(SoftFamily::from_codes(space, codes));
}

}  // namespace

void check_budget(const Space& space, const EnumerationBudget& budget) {
  if (space.universe_size() > budget.max_universe || space.parameter_count() > budget.max_parameters)
    throw Error(ErrorCode::BudgetExceeded,
                "space " + std::to_string(space.universe_size()) + "x" +
                    std::to_string(space.parameter_count()) + " exceeds the budget " +
                    std::to_string(budget.max_universe) + "x" + std::to_string(budget.max_parameters));
  if (space.bit_count() > kMaxEnumerationBits)
    throw Error(ErrorCode::BudgetExceeded, "enumeration needs |X|*|E| <= 12");
}

std::vector<SoftSet> enumerate_soft_sets(const SpacePtr& space) {
  if (space->bit_count() > kMaxEnumerationBits)
    throw Error(ErrorCode::BudgetExceeded, "enumeration needs |X|*|E| <= 12");
  std::vector<SoftSet> out;
  const std::uint64_t n = std::uint64_t{1} << space->bit_count();
  out.reserve(n);
  for (std::uint64_t c = 0; c < n; ++c) out.push_back(SoftSet::from_code(space, c));
  return out;
}

StructureEnumeration filter_structures(const SpacePtr& space, std::size_t workers) {
  if (space->bit_count() > kMaxFilterBits)
    throw Error(ErrorCode::BudgetExceeded, "the full family scan needs |X|*|E| <= 4");
  const std::size_t sets = std::size_t{1} << space->bit_count();
  const std::uint64_t families = std::uint64_t{1} << sets;
  workers = std::max<std::size_t>(1, workers);

  // Each worker takes a contiguous block of family codes.
  std::vector<std::vector<std::uint64_t>> found(workers);
  auto scan = [&](std::size_t w) {
    const std::uint64_t lo = families * w / workers;
    const std::uint64_t hi = families * (w + 1) / workers;
    ValidationOptions quick;
    quick.stop_at_first = true;
    std::vector<std::uint64_t> codes;
    for (std::uint64_t fam = lo; fam < hi; ++fam) {
      codes.clear();
      for (std::size_t c = 0; c < sets; ++c)
        if (fam >> c & 1) codes.push_back(c);
      if (validate_structure(SoftFamily::from_codes(space, codes), quick).valid())
        found[w].push_back(fam);
    }
  };
  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(scan, w);
    for (auto& t : pool) t.join();
  }

  StructureEnumeration out;
  out.strategy = Strategy::Filter;
  out.candidates = families;
  std::vector<std::uint64_t> codes;
  for (const auto& block : found) {
    for (auto fam : block) {
      codes.clear();
      for (std::size_t c = 0; c < sets; ++c)
        if (fam >> c & 1) codes.push_back(c);
      out.structures.push_back(adopt_structure(SoftFamily::from_codes(space, codes)));
    }
  }
  return out;
}

StructureEnumeration generate_structures(const SpacePtr& space, const EnumerationBudget& budget) {
  if (space->bit_count() > kMaxEnumerationBits)
    throw Error(ErrorCode::BudgetExceeded, "enumeration needs |X|*|E| <= 12");
  const std::uint64_t sets = std::uint64_t{1} << space->bit_count();
  StructureEnumeration out;
  out.strategy = Strategy::Generator;
  std::set<std::vector<std::uint64_t>> seen;

  auto close_seed = [&](std::span<const std::uint64_t> seed) {
    ++out.candidates;
    const SoftConvexStructure closed = close_to_structure(SoftFamily::from_codes(space, seed));
    std::vector<std::uint64_t> codes = closed.members().codes();
    std::sort(codes.begin(), codes.end());
    if (seen.insert(codes).second) out.structures.push_back(canonical(space, std::move(codes)));
  };

  std::vector<std::uint64_t> seed;
  const std::uint64_t systematic = count_combinations(sets, budget.seed_family_size, 50'000'000);
  if (systematic >= 50'000'000)
    throw Error(ErrorCode::BudgetExceeded, "too many systematic seed families");
  for_each_combination(sets, 0, budget.seed_family_size, [&](std::span<const std::size_t> idx) {
    seed.assign(idx.begin(), idx.end());
    close_seed(seed);
    return true;
  });

  std::mt19937_64 rng(budget.seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, sets - 1);
  std::uniform_int_distribution<std::size_t> size(1, 4);
  for (std::size_t i = 0; i < budget.sample_size; ++i) {
    seed.resize(size(rng));
    for (auto& c : seed) c = pick(rng);
    close_seed(seed);
  }
  return out;
}

StructureEnumeration enumerate_structures(const SpacePtr& space, const EnumerationBudget& budget) {
  check_budget(*space, budget);
  const std::uint64_t sets = std::uint64_t{1} << space->bit_count();
  if (sets <= budget.max_family_bits && space->bit_count() <= kMaxFilterBits)
    return filter_structures(space, budget.workers);
  return generate_structures(space, budget);
}

OperatorTable threshold_operator(const SoftSet& t) {
  const SpacePtr& space = t.space_ptr();
  const std::uint64_t top = word_mask(space->bit_count(), 0);
  const std::uint64_t tc = t.code();
  std::vector<std::uint64_t> codes(std::size_t{1} << space->bit_count());
  for (std::uint64_t c = 0; c < codes.size(); ++c) codes[c] = (c & ~tc) == 0 ? 0 : top;
  return OperatorTable::from_codes(space, std::move(codes));
}

std::string to_string(Property p) {
  switch (p) {
    case Property::SCP: return "scp";
    case Property::SCC: return "scc";
    case Property::SDP: return "sdp";
    case Property::SBP: return "sbp";
  }
  return "?";
}

Property parse_property(const std::string& name) {
  std::string lower = name;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  for (Property p : {Property::SCP, Property::SCC, Property::SDP, Property::SBP})
    if (to_string(p) == lower) return p;
  throw Error(ErrorCode::UnknownName, "unknown property '" + name + "'");
}

}  // namespace softcvx
