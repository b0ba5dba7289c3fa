#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "softcvx/bases.hpp"
#include "softcvx/convexity.hpp"
#include "softcvx/morphisms.hpp"
#include "softcvx/operators.hpp"

namespace softcvx {

struct EnumerationBudget {
  std::size_t max_universe = 3;
  std::size_t max_parameters = 2;
  /// Full family scan while 2^(|X||E|) <= this; generator strategy above.
  std::uint64_t max_family_bits = 16;
  std::size_t subfamily_cap = 5;
  /// Generator strategy: every seed family up to this size is closed,
  std::size_t seed_family_size = 2;
  /// and then this many random seed families.
  std::size_t sample_size = 512;
  std::uint64_t seed = 20240917;
  std::size_t workers = 1;
  /// Structure pairs per space for the morphism checks.
  std::size_t max_structure_pairs = 200;
  /// Literal-mode checks are skipped for instances needing more subfamily
  /// visits than this.
  std::uint64_t literal_limit = 200'000;
};

/// Throws BudgetExceeded if the space is larger than the budget allows.
void check_budget(const Space& space, const EnumerationBudget& budget);

/// All 2^(|X||E|) soft sets in canonical order. Needs |X||E| <= 12.
std::vector<SoftSet> enumerate_soft_sets(const SpacePtr& space);

enum class Strategy { Filter, Generator };

struct StructureEnumeration {
  Strategy strategy = Strategy::Filter;
  /// Candidate families examined (filter) or seeds closed (generator).
  std::uint64_t candidates = 0;
  /// Filter: family-code order. Generator: discovery order. Members are in
  /// canonical code order either way.
  std::vector<SoftConvexStructure> structures;
};

StructureEnumeration enumerate_structures(const SpacePtr& space, const EnumerationBudget& budget);

/// Full scan of all 2^(2^(|X||E|)) families, so |X||E| <= 4 (BudgetExceeded
/// otherwise). Each candidate goes through the fast validator; `workers`
/// threads split the index range and results merge in index order.
StructureEnumeration filter_structures(const SpacePtr& space, std::size_t workers = 1);

/// Closures of seed families, deduplicated.
StructureEnumeration generate_structures(const SpacePtr& space, const EnumerationBudget& budget);

struct CheckTally {
  std::string name;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t skipped = 0;
  std::string first_failure;
};

struct InjectedResult {
  std::string name;
  bool valid = false;
  std::string first_witness;
};

struct SuiteReport {
  std::string space;
  Strategy strategy = Strategy::Filter;
  std::uint64_t candidates = 0;
  std::size_t structures = 0;
  std::size_t functions = 0;
  std::size_t structure_pairs = 0;
  std::vector<CheckTally> checks;
  std::vector<InjectedResult> injected;
  std::vector<std::string> notes;

  std::uint64_t failures() const;
  const CheckTally* find(const std::string& name) const;
};

struct NamedFamily {
  std::string name;
  SoftFamily family;
};

/// Runs every structure-level and function-level check on the space.
/// Structure checks: slice-transport, hull-laws, hull-operator-round-trip,
/// hull-as-cderived, base-round-trip, concavity-laws, pointwise-bound, and
/// the fast/literal agreement checks. Function checks over endomorphisms of
/// X and sampled structure pairs: scp-equivalence, scc-equivalence,
/// sdp-implies-scp, sbp-implies-scp, and composition closure of scp, scc,
/// sdp and sbp.
SuiteReport verify_suite(const SpacePtr& space, const EnumerationBudget& budget,
                         const std::vector<NamedFamily>& injected = {});

std::string to_text(const SuiteReport& report);
std::string to_json(const SuiteReport& report);

enum class Property { SCP, SCC, SDP, SBP };
std::string to_string(Property p);
/// "scp" etc, case-insensitive. Throws UnknownName.
Property parse_property(const std::string& name);

struct CounterexampleSearch {
  SpacePtr space;  // endomorphisms of this space are scanned
  EnumerationBudget budget;
  /// Pin one side. Structures for SCP/SCC, bases for SBP (as families),
  /// operators for SDP.
  std::optional<SoftFamily> fixed_domain_family;
  std::optional<SoftFamily> fixed_codomain_family;
  std::optional<OperatorTable> fixed_domain_operator;
  std::optional<OperatorTable> fixed_codomain_operator;
};

struct Counterexample {
  Property property;
  SoftFunctionMap function;
  /// Structures or bases; empty families for SDP.
  SoftFamily domain_family;
  SoftFamily codomain_family;
  std::optional<OperatorTable> domain_operator;
  std::optional<OperatorTable> codomain_operator;
  PropertyResult result;
};

/// Scans functions, then domain-side candidates, then codomain-side
/// candidates, and returns the first failure. Candidate pools: enumerated
/// structures (SCP, SCC); each structure with and without Phi_E (SBP);
/// hull tables, the constant-Phi_E operator and the threshold operators
/// s -> Phi_E if s <= T else X_E (SDP).
std::optional<Counterexample> find_counterexample(Property property,
                                                  const CounterexampleSearch& search);

/// s -> Phi_E if s <= t, X_E otherwise.
OperatorTable threshold_operator(const SoftSet& t);

}  // namespace softcvx
