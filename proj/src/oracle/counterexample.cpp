#include "softcvx/oracle.hpp"

namespace softcvx {
namespace {

std::vector<SoftFamily> structure_pool(const CounterexampleSearch& s, const std::optional<SoftFamily>& fixed) {
  if (fixed) return {SoftConvexStructure::make(*fixed).members()};
  std::vector<SoftFamily> out;
  for (auto& z : enumerate_structures(s.space, s.budget).structures) out.push_back(z.members());
  return out;
}

std::vector<SoftFamily> base_pool(const CounterexampleSearch& s, const std::optional<SoftFamily>& fixed) {
  if (fixed) return {SoftConvexBase::make(*fixed).members()};
  std::vector<SoftFamily> out;
  for (auto& z : enumerate_structures(s.space, s.budget).structures) {
    SoftFamily without_phi(s.space);
    for (const SoftSet& m : z.members())
      if (!m.is_null()) without_phi.insert(m);
    out.push_back(std::move(without_phi));
    out.push_back(z.members());
  }
  return out;
}

std::vector<OperatorTable> operator_pool(const CounterexampleSearch& s,
                                         const std::optional<OperatorTable>& fixed) {
  if (fixed) {
    ValidationReport r = validate_cderived_operator(*fixed);
    if (!r.valid())
      throw ValidationError(ErrorCode::InvalidOperator, "pinned operator is not c-derived", std::move(r));
    return {*fixed};
  }
  std::vector<OperatorTable> out{OperatorTable::constant_null(s.space)};
  for (auto& z : enumerate_structures(s.space, s.budget).structures) out.push_back(tabulate_hull(z));
  for (const SoftSet& t : enumerate_soft_sets(s.space)) {
    OperatorTable d = threshold_operator(t);
    if (validate_cderived_operator(d).valid()) out.push_back(std::move(d));
  }
  return out;
}

}  // namespace

std::optional<Counterexample> find_counterexample(Property property, const CounterexampleSearch& search) {
  check_budget(*search.space, search.budget);
  const SpacePtr& space = search.space;
  const std::vector<SoftFunctionMap> functions = all_functions(space, space);

  if (property == Property::SDP) {
    const auto xs = operator_pool(search, search.fixed_domain_operator);
    const auto ys = operator_pool(search, search.fixed_codomain_operator);
    for (const auto& f : functions)
      for (const auto& dx : xs)
        for (const auto& dy : ys) {
          PropertyResult r = is_sdp(f, dx, dy);
          if (!r.holds)
            return Counterexample{property, f, SoftFamily(space), SoftFamily(space), dx, dy, std::move(r)};
        }
    return std::nullopt;
  }

  const bool bases = property == Property::SBP;
  const auto xs = bases ? base_pool(search, search.fixed_domain_family)
                        : structure_pool(search, search.fixed_domain_family);
  const auto ys = bases ? base_pool(search, search.fixed_codomain_family)
                        : structure_pool(search, search.fixed_codomain_family);
  std::vector<SoftConvexBase> bx, by;
  std::vector<SoftConvexStructure> zx, zy;
  for (const auto& x : xs) {
    if (bases) bx.push_back(SoftConvexBase::make(x));
    else zx.push_back(SoftConvexStructure::make(x));
  }
  for (const auto& y : ys) {
    if (bases) by.push_back(SoftConvexBase::make(y));
    else zy.push_back(SoftConvexStructure::make(y));
  }
  for (const auto& f : functions) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t j = 0; j < ys.size(); ++j) {
        PropertyResult r = bases                       ? is_sbp(f, bx[i], by[j])
                           : property == Property::SCP ? is_scp(f, zx[i], zy[j])
                                                       : is_scc(f, zx[i], zy[j]);
        if (!r.holds)
          return Counterexample{property, f, xs[i], ys[j], std::nullopt, std::nullopt, std::move(r)};
      }
    }
  }
  return std::nullopt;
}

}  // namespace softcvx
