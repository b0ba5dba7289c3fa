#include "softcvx/morphisms.hpp"

#include <string>

#include "softcvx/combinatorics.hpp"

namespace softcvx {
namespace {

bool sub(std::uint64_t a, std::uint64_t b) { return (a & ~b) == 0; }

void require_shared_parameters(const Space& a, const Space& b) {
  if (a.parameters() != b.parameters())
    throw Error(ErrorCode::SpaceMismatch, "soft functions need identical parameter lists");
}

void set_bit(std::vector<std::uint64_t>& words, std::size_t bit) {
  words[bit / 64] |= std::uint64_t{1} << (bit % 64);
}

// Image of every domain code, for the table-based clause checks.
std::vector<std::uint64_t> image_codes(const SoftFunctionMap& f) {
  const std::size_t n = std::size_t{1} << f.domain().bit_count();
  std::vector<std::uint64_t> out(n);
  for (std::uint64_t c = 0; c < n; ++c)
    out[c] = image(f, SoftSet::from_code(f.domain_ptr(), c)).code();
  return out;
}

std::vector<SoftSet> to_sets(const SpacePtr& space, std::span<const std::uint64_t> codes) {
  std::vector<SoftSet> out;
  for (auto c : codes) out.push_back(SoftSet::from_code(space, c));
  return out;
}

enum class Direction { Preserve, ToConvex };

// Shared driver for the preservation and continuity equivalences. For Preserve the inequalities read
// f(co_X(.)) <= co_Y(f(.)); for ToConvex they are reversed.
EquivalenceReport check_equivalence(const SoftFunctionMap& f, const SoftConvexStructure& zx,
                                    const SoftConvexStructure& zy, std::size_t cap, Direction dir) {
  require_same_space(f.domain(), zx.space());
  require_same_space(f.codomain(), zy.space());
  EquivalenceReport report;
  report.clauses[0] = dir == Direction::Preserve ? is_scp(f, zx, zy) : is_scc(f, zx, zy);

  const OperatorTable cox = tabulate_hull(zx);
  const OperatorTable coy = tabulate_hull(zy);
  const std::vector<std::uint64_t> img = image_codes(f);
  const SpacePtr& dom = f.domain_ptr();
  auto holds = [&](std::uint64_t lhs_forward, std::uint64_t rhs_hulls) {
    return dir == Direction::Preserve ? sub(lhs_forward, rhs_hulls) : sub(rhs_hulls, lhs_forward);
  };

  // clause 3
  for (std::uint64_t c = 0; c < img.size(); ++c) {
    if (holds(img[cox.apply_code(c)], coy.apply_code(img[c]))) continue;
    report.clauses[2] = {false, {SoftSet::from_code(dom, c)}, "hull inequality fails"};
    break;
  }

  // clause 2: f(co_X(union F)) against union of co_Y(f(F_i))
  auto check_family = [&](std::span<const std::uint64_t> family) {
    ++report.families_checked;
    std::uint64_t joined = 0;
    std::uint64_t hulls = 0;
    for (auto c : family) {
      joined |= c;
      hulls |= coy.apply_code(img[c]);
    }
    if (holds(img[cox.apply_code(joined)], hulls)) return true;
    report.clauses[1] = {false, to_sets(dom, family), "directed-family inequality fails"};
    return false;
  };
  std::vector<std::uint64_t> down;
  for (std::uint64_t c = 0; c < img.size() && report.clauses[1].holds; ++c) {
    down.clear();
    for (std::uint64_t s = c;; s = (s - 1) & c) {
      down.push_back(s);
      if (s == 0) break;
    }
    check_family(down);
  }
  if (report.clauses[1].holds) {
    try {
      const DirectedFamilies& fams = lattice_directed_families(dom->bit_count(), cap);
      for (std::size_t i = 0; i < fams.size(); ++i)
        if (!check_family(fams[i])) break;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BudgetExceeded) throw;
      report.notes.push_back("directed subfamilies of the lattice skipped: " + std::string(e.what()));
    }
  }
  return report;
}

}  // namespace

SoftFunctionMap::SoftFunctionMap(SpacePtr domain, SpacePtr codomain, std::vector<std::size_t> map)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), map_(std::move(map)) {
  require_shared_parameters(*domain_, *codomain_);
  if (map_.size() != domain_->universe_size())
    throw Error(ErrorCode::NonTotalAssignment, "point map must cover the domain universe");
  for (auto y : map_)
    if (y >= codomain_->universe_size())
      throw Error(ErrorCode::UnknownElement, "point map value outside the codomain universe");
}

SoftFunctionMap SoftFunctionMap::from_names(SpacePtr domain, SpacePtr codomain,
                                            const std::map<std::string, std::string>& map) {
  std::vector<std::size_t> out(domain->universe_size(), 0);
  std::vector<bool> seen(out.size(), false);
  for (const auto& [x, y] : map) {
    const std::size_t i = domain->require_element(x);
    out[i] = codomain->require_element(y);
    seen[i] = true;
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i])
      throw Error(ErrorCode::NonTotalAssignment,
                  "point map has no value for '" + domain->universe()[i] + "'");
  return SoftFunctionMap(std::move(domain), std::move(codomain), std::move(out));
}

SoftFunctionMap SoftFunctionMap::identity(SpacePtr space) {
  std::vector<std::size_t> map(space->universe_size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = i;
  return SoftFunctionMap(space, space, std::move(map));
}

SoftSet image(const SoftFunctionMap& f, const SoftSet& s) {
  require_same_space(f.domain(), s.space());
  const Space& y = f.codomain();
  std::vector<std::uint64_t> words(y.word_count(), 0);
  for (std::size_t p = 0; p < y.parameter_count(); ++p)
    for (std::size_t x = 0; x < f.domain().universe_size(); ++x)
      if (s.contains(p, x)) set_bit(words, y.bit_index(p, f(x)));
  return SoftSet(f.codomain_ptr(), std::move(words));
}

SoftSet preimage(const SoftFunctionMap& f, const SoftSet& t) {
  require_same_space(f.codomain(), t.space());
  const Space& x = f.domain();
  std::vector<std::uint64_t> words(x.word_count(), 0);
  for (std::size_t p = 0; p < x.parameter_count(); ++p)
    for (std::size_t i = 0; i < x.universe_size(); ++i)
      if (t.contains(p, f(i))) set_bit(words, x.bit_index(p, i));
  return SoftSet(f.domain_ptr(), std::move(words));
}

SoftFunctionMap compose(const SoftFunctionMap& g, const SoftFunctionMap& f) {
  require_same_space(f.codomain(), g.domain());
  std::vector<std::size_t> map(f.domain().universe_size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = g(f(i));
  return SoftFunctionMap(f.domain_ptr(), g.codomain_ptr(), std::move(map));
}

PropertyResult is_scp(const SoftFunctionMap& f, const SoftConvexStructure& zx,
                      const SoftConvexStructure& zy) {
  require_same_space(f.domain(), zx.space());
  require_same_space(f.codomain(), zy.space());
  for (const SoftSet& o : zy.members())
    if (!zx.contains(preimage(f, o))) return {false, {o}, "preimage of a member is not a member"};
  return {};
}

PropertyResult is_scc(const SoftFunctionMap& f, const SoftConvexStructure& zx,
                      const SoftConvexStructure& zy) {
  require_same_space(f.domain(), zx.space());
  require_same_space(f.codomain(), zy.space());
  for (const SoftSet& o : zx.members())
    if (!zy.contains(image(f, o))) return {false, {o}, "image of a member is not a member"};
  return {};
}

PropertyResult is_sdp(const SoftFunctionMap& f, const OperatorTable& dx, const OperatorTable& dy) {
  require_same_space(f.domain(), dx.space());
  require_same_space(f.codomain(), dy.space());
  for (const OperatorTable* d : {&dx, &dy}) {
    ValidationReport r = validate_cderived_operator(*d);
    if (!r.valid())
      throw ValidationError(ErrorCode::InvalidOperator, "not a soft c-derived operator", std::move(r));
  }
  const std::vector<std::uint64_t> img = image_codes(f);
  for (std::uint64_t c = 0; c < img.size(); ++c) {
    const std::uint64_t fs = img[c];
    if (!sub(img[dx.apply_code(c)], fs | dy.apply_code(fs)))
      return {false, {SoftSet::from_code(f.domain_ptr(), c)}, "f(dX(s)) is not below f(s) u dY(f(s))"};
  }
  return {};
}

PropertyResult is_sbp(const SoftFunctionMap& f, const SoftConvexBase& bx, const SoftConvexBase& by) {
  require_same_space(f.domain(), bx.space());
  require_same_space(f.codomain(), by.space());
  for (const SoftSet& o : by.members())
    if (!bx.contains(preimage(f, o)))
      return {false, {o}, "preimage of a base member is not a base member"};
  return {};
}

EquivalenceReport check_scp_equivalence(const SoftFunctionMap& f, const SoftConvexStructure& zx,
                                        const SoftConvexStructure& zy, std::size_t cap) {
  return check_equivalence(f, zx, zy, cap, Direction::Preserve);
}

EquivalenceReport check_scc_equivalence(const SoftFunctionMap& f, const SoftConvexStructure& zx,
                                        const SoftConvexStructure& zy, std::size_t cap) {
  return check_equivalence(f, zx, zy, cap, Direction::ToConvex);
}

std::vector<SoftFunctionMap> all_functions(const SpacePtr& domain, const SpacePtr& codomain) {
  const std::size_t n = domain->universe_size();
  const std::size_t m = codomain->universe_size();
  std::vector<SoftFunctionMap> out;
  std::vector<std::size_t> map(n, 0);
  while (true) {
    out.emplace_back(domain, codomain, map);
    std::size_t i = 0;
    while (i < n && ++map[i] == m) map[i++] = 0;
    if (i == n) break;
  }
  return out;
}

}  // namespace softcvx
