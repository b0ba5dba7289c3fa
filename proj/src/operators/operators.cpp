#include "softcvx/operators.hpp"

#include <stdexcept>
#include <string>

#include "softcvx/combinatorics.hpp"
#include "../detail/witness_sink.hpp"

namespace softcvx {
namespace {

void require_table_bits(const Space& space) {
  if (space.bit_count() > kMaxTableBits)
    throw Error(ErrorCode::BudgetExceeded, "operator tables need |X|*|E| <= " +
                                               std::to_string(kMaxTableBits) + ", got " +
                                               std::to_string(space.bit_count()));
}

bool sub(std::uint64_t a, std::uint64_t b) { return (a & ~b) == 0; }

// Laws shared by both operator kinds. Each helper returns false when the
// sink asked to stop.

bool check_normalization(const OperatorTable& t, detail::WitnessSink& sink) {
  if (t.apply_code(0) == 0) return true;
  const auto& sp = t.space_ptr();
  return sink.add({"normalization", {SoftSet::null(sp)}, SoftSet::from_code(sp, t.apply_code(0)),
                   "image of Phi_E is not Phi_E"});
}

bool check_monotone(const OperatorTable& t, const ValidationOptions& options,
                    detail::WitnessSink& sink) {
  const auto& sp = t.space_ptr();
  const std::size_t bits = sp->bit_count();
  const std::uint64_t n = t.size();
  auto report = [&](std::uint64_t a, std::uint64_t b) {
    return sink.add({"monotone", {SoftSet::from_code(sp, a), SoftSet::from_code(sp, b)},
                     SoftSet::from_code(sp, t.apply_code(a)),
                     "a <= b but the image of a is not below the image of b"});
  };
  if (options.mode == CheckMode::Fast) {
    // covering pairs suffice: inclusion is the transitive closure of covers
    for (std::uint64_t b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < bits; ++i) {
        const std::uint64_t bit = std::uint64_t{1} << i;
        if (!(b & bit)) continue;
        const std::uint64_t a = b & ~bit;
        if (!sub(t.apply_code(a), t.apply_code(b))) {
          if (!report(a, b)) return false;
          if (sink.full("monotone")) return true;
        }
      }
    }
    return true;
  }
  for (std::uint64_t b = 0; b < n; ++b) {
    // every submask a of b, including 0 and b itself
    for (std::uint64_t a = b;; a = (a - 1) & b) {
      if (!sub(t.apply_code(a), t.apply_code(b))) {
        if (!report(a, b)) return false;
        if (sink.full("monotone")) return true;
      }
      if (a == 0) break;
    }
  }
  return true;
}

bool check_directed_additive(const OperatorTable& t, const ValidationOptions& options,
                             detail::WitnessSink& sink) {
  const auto& sp = t.space_ptr();
  const std::string law = "directed-additive";
  if (options.mode == CheckMode::Fast) {
    // A finite nonempty directed family contains its union g, so the law is
    // t(g) = union of t(F); with monotonicity that is automatic. What is
    // left: the empty family (normalization) and covering pairs {a, b}
    // where monotonicity fails.
    if (t.apply_code(0) != 0) {
      if (!sink.add({law, {}, SoftSet::from_code(sp, t.apply_code(0)),
                     "empty directed family: image of its union Phi_E is not Phi_E"}))
        return false;
    }
    const std::size_t bits = sp->bit_count();
    for (std::uint64_t b = 0; b < t.size() && !sink.full(law); ++b) {
      for (std::size_t i = 0; i < bits && !sink.full(law); ++i) {
        const std::uint64_t bit = std::uint64_t{1} << i;
        if (!(b & bit)) continue;
        const std::uint64_t a = b & ~bit;
        const std::uint64_t joined = t.apply_code(a) | t.apply_code(b);
        if (joined != t.apply_code(b)) {
          if (!sink.add({law, {SoftSet::from_code(sp, a), SoftSet::from_code(sp, b)},
                         SoftSet::from_code(sp, joined),
                         "directed pair: image of the union differs from the union of images"}))
            return false;
        }
      }
    }
    return true;
  }
  const DirectedFamilies& families = lattice_directed_families(sp->bit_count(), options.cap);
  for (std::size_t i = 0; i < families.size() && !sink.full(law); ++i) {
    const auto fam = families[i];
    std::uint64_t joined = 0;
    std::uint64_t images = 0;
    for (auto c : fam) {
      joined |= c;
      images |= t.apply_code(c);
    }
    if (t.apply_code(joined) != images) {
      std::vector<SoftSet> members;
      for (auto c : fam) members.push_back(SoftSet::from_code(sp, c));
      if (!sink.add({law, std::move(members), SoftSet::from_code(sp, images),
                     "image of the union differs from the union of images"}))
        return false;
    }
  }
  return true;
}

void add_fast_note(const ValidationOptions& options, ValidationReport& report) {
  if (options.mode == CheckMode::Fast)
    report.notes.push_back(
        "directed-additive: reduced by finite collapse to normalization plus monotonicity on "
        "directed pairs");
}

}  // namespace

OperatorTable::OperatorTable(SpacePtr space, std::vector<std::uint64_t> codes, bool)
    : space_(std::move(space)), codes_(std::move(codes)) {}

OperatorTable::OperatorTable(SpacePtr space, const std::vector<SoftSet>& entries)
    : space_(std::move(space)) {
  require_table_bits(*space_);
  const std::size_t n = std::size_t{1} << space_->bit_count();
  if (entries.size() != n)
    throw Error(ErrorCode::TableIncomplete, "operator table needs " + std::to_string(n) +
                                                " entries, got " + std::to_string(entries.size()));
  codes_.reserve(n);
  for (const auto& e : entries) {
    require_same_space(*space_, e.space());
    codes_.push_back(e.code());
  }
}

OperatorTable OperatorTable::from_codes(SpacePtr space, std::vector<std::uint64_t> codes) {
  require_table_bits(*space);
  const std::size_t n = std::size_t{1} << space->bit_count();
  if (codes.size() != n)
    throw Error(ErrorCode::TableIncomplete, "operator table needs " + std::to_string(n) +
                                                " entries, got " + std::to_string(codes.size()));
  const std::uint64_t mask = word_mask(space->bit_count(), 0);
  for (auto& c : codes) c &= mask;
  return OperatorTable(std::move(space), std::move(codes), true);
}

OperatorTable OperatorTable::tabulate(SpacePtr space,
                                      const std::function<SoftSet(const SoftSet&)>& fn) {
  require_table_bits(*space);
  const std::size_t n = std::size_t{1} << space->bit_count();
  std::vector<std::uint64_t> codes(n);
  for (std::uint64_t c = 0; c < n; ++c) {
    const SoftSet out = fn(SoftSet::from_code(space, c));
    require_same_space(*space, out.space());
    codes[c] = out.code();
  }
  return OperatorTable(std::move(space), std::move(codes), true);
}

OperatorTable OperatorTable::identity(SpacePtr space) {
  require_table_bits(*space);
  std::vector<std::uint64_t> codes(std::size_t{1} << space->bit_count());
  for (std::uint64_t c = 0; c < codes.size(); ++c) codes[c] = c;
  return OperatorTable(std::move(space), std::move(codes), true);
}

OperatorTable OperatorTable::constant_null(SpacePtr space) {
  require_table_bits(*space);
  std::vector<std::uint64_t> codes(std::size_t{1} << space->bit_count(), 0);
  return OperatorTable(std::move(space), std::move(codes), true);
}

OperatorTable OperatorTable::complement_map(SpacePtr space) {
  require_table_bits(*space);
  const std::uint64_t mask = word_mask(space->bit_count(), 0);
  std::vector<std::uint64_t> codes(std::size_t{1} << space->bit_count());
  for (std::uint64_t c = 0; c < codes.size(); ++c) codes[c] = ~c & mask;
  return OperatorTable(std::move(space), std::move(codes), true);
}

SoftSet OperatorTable::apply(const SoftSet& s) const {
  require_same_space(*space_, s.space());
  return SoftSet::from_code(space_, codes_[s.code()]);
}

OperatorTable tabulate_hull(const SoftConvexStructure& zeta) {
  const SpacePtr& space = zeta.space_ptr();
  require_table_bits(*space);
  const auto& k = kernels::active();
  const auto view = zeta.members().view();
  const std::uint64_t full = word_mask(space->bit_count(), 0);
  std::vector<std::uint64_t> codes(std::size_t{1} << space->bit_count());
  for (std::uint64_t c = 0; c < codes.size(); ++c) {
    std::uint64_t acc = full;
    k.meet_of_supersets(view, &c, &acc);
    codes[c] = acc;
  }
  return OperatorTable::from_codes(space, std::move(codes));
}

ValidationReport validate_hull_operator(const OperatorTable& eta, const ValidationOptions& options) {
  ValidationReport report;
  detail::WitnessSink sink(report, options);
  const auto& sp = eta.space_ptr();
  const std::uint64_t n = eta.size();

  if (!check_normalization(eta, sink)) return report;
  for (std::uint64_t c = 0; c < n && !sink.full("extensive"); ++c) {
    if (!sub(c, eta.apply_code(c)) &&
        !sink.add({"extensive", {SoftSet::from_code(sp, c)}, SoftSet::from_code(sp, eta.apply_code(c)),
                   "input is not contained in its image"}))
      return report;
  }
  if (!check_monotone(eta, options, sink)) return report;
  for (std::uint64_t c = 0; c < n && !sink.full("idempotent"); ++c) {
    const std::uint64_t once = eta.apply_code(c);
    const std::uint64_t twice = eta.apply_code(once);
    if (once != twice &&
        !sink.add({"idempotent", {SoftSet::from_code(sp, c)}, SoftSet::from_code(sp, twice),
                   "applying the operator twice changes the result"}))
      return report;
  }
  if (!check_directed_additive(eta, options, sink)) return report;
  add_fast_note(options, report);
  return report;
}

ValidationReport validate_cderived_operator(const OperatorTable& d, const ValidationOptions& options) {
  ValidationReport report;
  detail::WitnessSink sink(report, options);
  const auto& sp = d.space_ptr();

  if (!check_normalization(d, sink)) return report;
  if (!check_monotone(d, options, sink)) return report;
  for (std::uint64_t c = 0; c < d.size() && !sink.full("weak-idempotent"); ++c) {
    const std::uint64_t closed = d.apply_code(c) | c;
    if (!sub(d.apply_code(closed), closed) &&
        !sink.add({"weak-idempotent", {SoftSet::from_code(sp, c)},
                   SoftSet::from_code(sp, d.apply_code(closed)),
                   "d(d(s) u s) is not contained in d(s) u s"}))
      return report;
  }
  if (!check_directed_additive(d, options, sink)) return report;
  add_fast_note(options, report);
  return report;
}

SoftConvexStructure structure_from_hull_operator(const OperatorTable& eta) {
  ValidationReport report = validate_hull_operator(eta);
  if (!report.valid())
    throw ValidationError(ErrorCode::InvalidOperator, "not a soft hull operator", std::move(report));
  std::vector<std::uint64_t> fixed;
  for (std::uint64_t c = 0; c < eta.size(); ++c)
    if (eta.apply_code(c) == c) fixed.push_back(c);
  return adopt_structure(SoftFamily::from_codes(eta.space_ptr(), fixed));
}

SoftFamily cderived_image_family(const OperatorTable& d) {
  std::vector<std::uint64_t> images;
  images.reserve(d.size());
  for (std::uint64_t c = 0; c < d.size(); ++c) images.push_back(d.apply_code(c) | c);
  return SoftFamily::from_codes(d.space_ptr(), images);
}

SoftConvexStructure structure_from_cderived(const OperatorTable& d) {
  ValidationReport report = validate_cderived_operator(d);
  if (!report.valid())
    throw ValidationError(ErrorCode::InvalidOperator, "not a soft c-derived operator",
                          std::move(report));
  std::vector<std::uint64_t> closed;
  for (std::uint64_t c = 0; c < d.size(); ++c)
    if (sub(d.apply_code(c), c)) closed.push_back(c);
  SoftFamily family = SoftFamily::from_codes(d.space_ptr(), closed);
  if (!(family == cderived_image_family(d)))
    throw std::logic_error("internal error: {s : d(s) <= s} differs from {d(s) u s}");
  return adopt_structure(std::move(family));
}

SoftSet hull_from_cderived(const OperatorTable& d, const SoftSet& s) {
  require_same_space(d.space(), s.space());
  ValidationOptions quick;
  quick.stop_at_first = true;
  ValidationReport report = validate_cderived_operator(d, quick);
  if (!report.valid())
    throw ValidationError(ErrorCode::InvalidOperator, "not a soft c-derived operator",
                          std::move(report));
  return SoftSet::from_code(d.space_ptr(), d.apply_code(s.code()) | s.code());
}

OperatorTable cderived_hull_table(const OperatorTable& d) {
  std::vector<std::uint64_t> codes(d.size());
  for (std::uint64_t c = 0; c < d.size(); ++c) codes[c] = d.apply_code(c) | c;
  return OperatorTable::from_codes(d.space_ptr(), std::move(codes));
}

}  // namespace softcvx
