#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "softcvx/combinatorics.hpp"
#include "softcvx/oracle.hpp"

namespace softcvx {
namespace {

bool sub(std::uint64_t a, std::uint64_t b) { return (a & ~b) == 0; }

constexpr std::size_t kLatticeFamilyBits = 4;

class Tallies {
 public:
  explicit Tallies(std::vector<std::string> names) {
    for (auto& n : names) {
      index_[n] = checks_.size();
      CheckTally tally;
      tally.name = std::move(n);
      checks_.push_back(std::move(tally));
    }
  }

  void record(const std::string& name, bool ok, const std::string& what = {}) {
    CheckTally& t = checks_.at(index_.at(name));
    if (ok) {
      ++t.passed;
      return;
    }
    if (t.failed++ == 0) t.first_failure = what;
  }
  void skip(const std::string& name) { ++checks_.at(index_.at(name)).skipped; }

  std::vector<CheckTally> take() { return std::move(checks_); }

 private:
  std::vector<CheckTally> checks_;
  std::map<std::string, std::size_t> index_;
};

std::string codes_text(const SpacePtr& space, std::span<const std::uint64_t> codes) {
  std::string out;
  for (auto c : codes) {
    if (!out.empty()) out += " ";
    out += to_string(SoftSet::from_code(space, c));
  }
  return out;
}

std::string first_witness(const ValidationReport& r) {
  return r.witnesses.empty() ? std::string("no witness") : describe(r.witnesses.front());
}

struct Prepared {
  const SoftConvexStructure* zeta;
  OperatorTable co;
  SoftConvexStructure zeta_d;
  SoftConvexBase beta;       // zeta without Phi_E
  SoftConvexBase beta_full;  // zeta itself
};

// Pairs (a, b) of structure indices, all of them or a seeded sample kept
// in index order.
std::vector<std::pair<std::size_t, std::size_t>> structure_pairs(std::size_t m, std::size_t limit,
                                                                  std::uint64_t seed) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::uint64_t total = static_cast<std::uint64_t>(m) * m;
  if (total <= limit) {
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) out.emplace_back(a, b);
    return out;
  }
  // Floyd's sampling on raw engine output, so the draw does not depend on
  // the standard library's distribution implementations.
  std::mt19937_64 rng(seed);
  std::set<std::uint64_t> chosen;
  for (std::uint64_t j = total - limit; j < total; ++j) {
    const std::uint64_t t = rng() % (j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  for (auto k : chosen) out.emplace_back(k / m, k % m);
  return out;
}

void check_structure(const SpacePtr& space, const EnumerationBudget& budget, const Prepared& prep,
                     Tallies& t) {
  const SoftConvexStructure& zeta = *prep.zeta;
  const std::size_t bits = space->bit_count();
  const std::uint64_t sets = std::uint64_t{1} << bits;
  const std::uint64_t top = sets - 1;
  const OperatorTable& co = prep.co;
  std::vector<std::uint64_t> member_codes = zeta.members().codes();
  std::vector<bool> member(sets, false);
  for (auto c : member_codes) member[c] = true;
  const std::string tag = "structure " + codes_text(space, member_codes) + ": ";

  // slice transport, through the independent crisp validator
  bool slices_ok = true;
  for (std::size_t p = 0; p < space->parameter_count(); ++p)
    slices_ok = slices_ok && validate_crisp(space->universe_size(), parameter_slices(zeta.members(), p)).valid;
  t.record("slice-transport", slices_ok, tag + "a slice is not a crisp convex structure");

  // the six hull laws, with a naive intersection as a second opinion
  std::string law;
  auto fail = [&](const std::string& what) {
    if (law.empty()) law = what;
  };
  if (co.apply_code(0) != 0) fail("normalization");
  for (std::uint64_t c = 0; c < sets; ++c) {
    std::uint64_t naive = top;
    for (auto m : member_codes)
      if (sub(c, m)) naive &= m;
    const std::uint64_t h = co.apply_code(c);
    if (h != naive || hull(zeta, SoftSet::from_code(space, c)).code() != h) fail("hull value");
    if (!sub(c, h)) fail("extensive");
    if (co.apply_code(h) != h) fail("idempotent");
    if (member[c] != (h == c)) fail("fixpoints are the members");
    for (std::uint64_t a = c;; a = (a - 1) & c) {
      if (!sub(co.apply_code(a), h)) fail("monotone");
      // {a, c} is directed with union c
      if ((co.apply_code(a) | h) != h) fail("directed additive (pair)");
      if (a == 0) break;
    }
  }
  if (bits <= kLatticeFamilyBits) {
    const DirectedFamilies& fams = lattice_directed_families(bits, budget.subfamily_cap);
    for (std::size_t i = 0; i < fams.size(); ++i) {
      std::uint64_t joined = 0, hulls = 0;
      for (auto c : fams[i]) {
        joined |= c;
        hulls |= co.apply_code(c);
      }
      if (co.apply_code(joined) != hulls) fail("directed additive");
    }
  }
  t.record("hull-laws", law.empty(), tag + law);

  // fixpoints of the hull table give zeta back, and zeta's hull gives the table back
  {
    bool ok = validate_hull_operator(co).valid();
    if (ok) {
      const SoftConvexStructure back = structure_from_hull_operator(co);
      ok = back == zeta && tabulate_hull(back) == co;
    }
    t.record("hull-operator-round-trip", ok, tag + "hull table does not round-trip");
  }

  {
    bool ok = validate_cderived_operator(co).valid() && prep.zeta_d == zeta &&
              cderived_hull_table(co) == tabulate_hull(prep.zeta_d);
    t.record("hull-as-cderived", ok, tag + "hull table fails as a c-derived operator");
  }

  {
    bool ok = structure_from_cbase(prep.beta) == zeta && structure_from_cbase(prep.beta_full) == zeta &&
              close_to_structure(prep.beta.members()) == zeta;
    t.record("base-round-trip", ok, tag + "base does not regenerate the structure");
    if (count_combinations(prep.beta.size(), budget.subfamily_cap, budget.literal_limit) <
        budget.literal_limit)
      t.record("base-finite-formula", directed_unions(prep.beta.members(), budget.subfamily_cap) == zeta.members(),
               tag + "directed unions differ from beta plus Phi_E");
    else
      t.skip("base-finite-formula");
  }

  // concave sets: complements of members
  {
    std::vector<std::uint64_t> concave;
    std::vector<bool> is_concave_code(sets, false);
    for (auto m : member_codes) {
      concave.push_back(~m & top);
      is_concave_code[~m & top] = true;
    }
    bool ok = is_concave_code[0] && is_concave_code[top];
    for (std::size_t i = 0; i < concave.size() && ok; ++i)
      for (std::size_t j = i + 1; j < concave.size() && ok; ++j)
        ok = is_concave_code[concave[i] | concave[j]];
    std::vector<std::uint64_t> fam;
    if (ok && count_combinations(concave.size(), 3, budget.literal_limit) < budget.literal_limit) {
      for_each_combination(concave.size(), 2, 3, [&](std::span<const std::size_t> idx) {
        fam.clear();
        for (auto i : idx) fam.push_back(concave[i]);
        if (!codes_downward_directed(fam)) return true;
        std::uint64_t meet = top, join = 0;
        for (auto c : fam) {
          meet &= c;
          join |= c;
        }
        ok = is_concave_code[meet] && is_concave_code[join];
        return ok;
      });
    }
    t.record("concavity-laws", ok, tag + "concavity law fails");
  }

  {
    const PointwiseHull pw(zeta);
    bool ok = true;
    for (std::uint64_t c = 0; c < sets && ok; ++c) {
      const std::uint64_t p = pw(SoftSet::from_code(space, c)).code();
      const std::uint64_t h = co.apply_code(c);
      ok = sub(p, h) && ((p == h) == member[p]);
    }
    t.record("pointwise-bound", ok, tag + "pointwise hull bound or its equality case fails");
  }

  ValidationOptions literal;
  literal.mode = CheckMode::Literal;
  literal.cap = budget.subfamily_cap;
  literal.stop_at_first = true;
  if (count_combinations(zeta.size(), budget.subfamily_cap, budget.literal_limit) < budget.literal_limit)
    t.record("structure-mode-agreement", validate_structure(zeta.members(), literal).valid(),
             tag + "literal validation disagrees");
  else
    t.skip("structure-mode-agreement");

  if (count_combinations(zeta.size(), budget.subfamily_cap, budget.literal_limit) < budget.literal_limit)
    t.record("base-mode-agreement",
             validate_cbase(prep.beta.members(), literal).valid() &&
                 validate_cbase(prep.beta_full.members(), literal).valid(),
             tag + "literal base validation disagrees");
  else
    t.skip("base-mode-agreement");

  if (bits <= kLatticeFamilyBits) {
    const bool ok = validate_hull_operator(co, literal).valid() &&
                    validate_cderived_operator(co, literal).valid();
    t.record("operator-mode-agreement", ok, tag + "literal operator validation disagrees");
  } else {
    t.skip("operator-mode-agreement");
  }
}

}  // namespace

std::uint64_t SuiteReport::failures() const {
  std::uint64_t n = 0;
  for (const auto& c : checks) n += c.failed;
  return n;
}

const CheckTally* SuiteReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

SuiteReport verify_suite(const SpacePtr& space, const EnumerationBudget& budget,
                         const std::vector<NamedFamily>& injected) {
  StructureEnumeration en = enumerate_structures(space, budget);
  SuiteReport report;
  {
    std::ostringstream s;
    s << "X={";
    for (std::size_t i = 0; i < space->universe_size(); ++i) s << (i ? "," : "") << space->universe()[i];
    s << "} E={";
    for (std::size_t i = 0; i < space->parameter_count(); ++i)
      s << (i ? "," : "") << space->parameters()[i];
    s << "}";
    report.space = s.str();
  }
  report.strategy = en.strategy;
  report.candidates = en.candidates;
  report.structures = en.structures.size();

  Tallies t({"slice-transport", "hull-laws", "hull-operator-round-trip", "hull-as-cderived",
             "base-round-trip", "base-finite-formula", "concavity-laws", "pointwise-bound",
             "structure-mode-agreement", "base-mode-agreement", "operator-mode-agreement",
             "scp-equivalence", "scc-equivalence", "sdp-implies-scp", "sbp-implies-scp",
             "scp-composition", "scc-composition", "sdp-composition", "sbp-composition"});

  std::vector<Prepared> prepared;
  prepared.reserve(en.structures.size());
  for (const auto& zeta : en.structures) {
    OperatorTable co = tabulate_hull(zeta);
    SoftConvexStructure zd = structure_from_cderived(co);
    SoftFamily without_phi(space);
    for (const SoftSet& s : zeta.members())
      if (!s.is_null()) without_phi.insert(s);
    prepared.push_back({&zeta, co, std::move(zd), SoftConvexBase::make(std::move(without_phi)),
                        SoftConvexBase::make(zeta.members())});
  }
  for (const auto& prep : prepared) check_structure(space, budget, prep, t);

  const std::vector<SoftFunctionMap> functions = all_functions(space, space);
  const auto pairs = structure_pairs(prepared.size(), budget.max_structure_pairs, budget.seed);
  report.functions = functions.size();
  report.structure_pairs = pairs.size();
  if (space->bit_count() > kLatticeFamilyBits)
    report.notes.push_back(
        "directed-family clauses use down-sets only (lattice subfamily scan over budget)");

  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const Prepared& a = prepared[pairs[k].first];
    const Prepared& b = prepared[pairs[k].second];
    const Prepared& c = prepared[pairs[(k + 1) % pairs.size()].second];
    const SoftConvexStructure& za = *a.zeta;
    const SoftConvexStructure& zb = *b.zeta;
    const SoftConvexStructure& zc = *c.zeta;
    for (const SoftFunctionMap& f : functions) {
      std::string tag = "f=[";
      for (std::size_t i = 0; i < f.map().size(); ++i)
        tag += (i ? "," : "") + space->universe()[f(i)];
      tag += "] pair " + std::to_string(pairs[k].first) + "," + std::to_string(pairs[k].second) + ": ";
      const std::size_t cap = space->bit_count() <= kLatticeFamilyBits ? budget.subfamily_cap : 0;

      const EquivalenceReport scp = check_scp_equivalence(f, za, zb, cap);
      t.record("scp-equivalence", scp.agree(), tag + "SCP characterizations disagree");
      const EquivalenceReport scc = check_scc_equivalence(f, za, zb, cap);
      t.record("scc-equivalence", scc.agree(), tag + "SCC characterizations disagree");
      const bool f_scp = scp.clauses[0].holds;
      const bool f_scc = scc.clauses[0].holds;

      const bool f_sdp = is_sdp(f, a.co, b.co).holds;
      t.record("sdp-implies-scp", !f_sdp || is_scp(f, a.zeta_d, b.zeta_d).holds,
               tag + "SDP holds but SCP fails");
      const bool f_sbp = is_sbp(f, a.beta, b.beta).holds;
      const bool f_sbp_full = is_sbp(f, a.beta_full, b.beta_full).holds;
      const bool ok_sbp =
          (!f_sbp || is_scp(f, structure_from_cbase(a.beta), structure_from_cbase(b.beta)).holds) &&
          (!f_sbp_full || is_scp(f, structure_from_cbase(a.beta_full), structure_from_cbase(b.beta_full)).holds);
      t.record("sbp-implies-scp", ok_sbp, tag + "SBP holds but SCP fails");

      for (const SoftFunctionMap& g : functions) {
        const SoftFunctionMap gf = compose(g, f);
        if (f_scp && is_scp(g, zb, zc).holds)
          t.record("scp-composition", is_scp(gf, za, zc).holds, tag + "SCP not closed under composition");
        if (f_scc && is_scc(g, zb, zc).holds)
          t.record("scc-composition", is_scc(gf, za, zc).holds, tag + "SCC not closed under composition");
        if (f_sdp && is_sdp(g, b.co, c.co).holds)
          t.record("sdp-composition", is_sdp(gf, a.co, c.co).holds, tag + "SDP not closed under composition");
        if (f_sbp && is_sbp(g, b.beta, c.beta).holds)
          t.record("sbp-composition", is_sbp(gf, a.beta, c.beta).holds, tag + "SBP not closed under composition");
        if (f_sbp_full && is_sbp(g, b.beta_full, c.beta_full).holds)
          t.record("sbp-composition", is_sbp(gf, a.beta_full, c.beta_full).holds,
                   tag + "SBP not closed under composition");
      }
    }
  }
  report.checks = t.take();

  for (const auto& [name, family] : injected) {
    require_same_space(*space, family.space());
    const ValidationReport r = validate_structure(family);
    report.injected.push_back({name, r.valid(), r.valid() ? std::string() : first_witness(r)});
  }
  return report;
}

}  // namespace softcvx
