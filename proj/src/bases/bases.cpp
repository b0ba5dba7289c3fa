#include "softcvx/bases.hpp"

#include <stdexcept>

#include "softcvx/combinatorics.hpp"
#include "../detail/witness_sink.hpp"

namespace softcvx {
namespace {

std::vector<SoftSet> pick(const SoftFamily& f, std::span<const std::size_t> idx) {
  std::vector<SoftSet> out;
  for (auto i : idx) out.push_back(f[i]);
  return out;
}

bool rows_directed(const SoftFamily& f, std::span<const std::size_t> idx,
                   std::vector<std::uint64_t>& scratch) {
  const std::size_t words = f.space().word_count();
  scratch.clear();
  for (auto i : idx) {
    auto r = f.row(i);
    scratch.insert(scratch.end(), r.begin(), r.end());
  }
  const kernels::FamilyView sub{scratch.data(), idx.size(), words};
  std::vector<std::uint64_t> pair(words);
  const auto& k = kernels::active();
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      for (std::size_t w = 0; w < words; ++w)
        pair[w] = scratch[a * words + w] | scratch[b * words + w];
      if (k.find_superset(sub, pair.data()) == kernels::npos) return false;
    }
  }
  return true;
}

}  // namespace

SoftFamily directed_unions(const SoftFamily& beta, std::size_t cap) {
  SoftFamily out(beta.space_ptr());
  const std::size_t words = beta.space().word_count();
  std::vector<std::uint64_t> scratch, join(words);
  for_each_combination(beta.size(), 0, cap, [&](std::span<const std::size_t> idx) {
    if (!rows_directed(beta, idx, scratch)) return true;
    std::fill(join.begin(), join.end(), 0);
    for (auto i : idx) {
      auto r = beta.row(i);
      for (std::size_t w = 0; w < words; ++w) join[w] |= r[w];
    }
    out.insert_row(join.data());
    return true;
  });
  return out;
}

ValidationReport validate_cbase(const SoftFamily& f, const ValidationOptions& options) {
  ValidationReport report;
  detail::WitnessSink sink(report, options);
  const SpacePtr& space = f.space_ptr();
  const std::size_t words = space->word_count();
  const SoftSet abs = SoftSet::absolute(space);

  if (options.mode == CheckMode::Fast) {
    if (!f.contains(abs) &&
        !sink.add({"SCB1", {}, abs, "X_E is not a member"}))
      return report;
    std::vector<std::uint64_t> meet(words);
    for (std::size_t i = 0; i < f.size() && !sink.full("SCB2"); ++i) {
      for (std::size_t j = i + 1; j < f.size() && !sink.full("SCB2"); ++j) {
        auto a = f.row(i);
        auto b = f.row(j);
        bool empty = true;
        for (std::size_t w = 0; w < words; ++w) {
          meet[w] = a[w] & b[w];
          empty = empty && meet[w] == 0;
        }
        if (empty || f.contains_row(meet.data())) continue;
        if (!sink.add({"SCB2", {f[i], f[j]}, SoftSet(space, meet),
                       "intersection is neither a member nor Phi_E"}))
          return report;
      }
    }
    report.notes.push_back(
        "SCB3: certified by finite collapse (directed unions of beta are beta plus Phi_E)");
    return report;
  }

  const SoftFamily unions = directed_unions(f, options.cap);
  if (!unions.contains(abs) &&
      !sink.add({"SCB1", {}, abs, "X_E is not the union of a directed subfamily"}))
    return report;

  std::vector<std::uint64_t> meet(words), join(words), scratch;
  const bool go_on = for_each_combination(f.size(), 2, options.cap, [&](std::span<const std::size_t> idx) {
    if (sink.full("SCB2")) return false;
    std::fill(meet.begin(), meet.end(), ~std::uint64_t{0});
    for (auto i : idx) {
      auto r = f.row(i);
      for (std::size_t w = 0; w < words; ++w) meet[w] &= r[w];
    }
    for (std::size_t w = 0; w < words; ++w) meet[w] &= word_mask(space->bit_count(), w);
    if (unions.contains_row(meet.data())) return true;
    return sink.add({"SCB2", pick(f, idx), SoftSet(space, meet),
                     "intersection is not the union of a directed subfamily"});
  });
  if (!go_on && sink.stopped()) return report;

  for_each_combination(unions.size(), 2, options.cap, [&](std::span<const std::size_t> idx) {
    if (sink.full("SCB3")) return false;
    if (!rows_directed(unions, idx, scratch)) return true;
    std::fill(join.begin(), join.end(), 0);
    for (auto i : idx) {
      auto r = unions.row(i);
      for (std::size_t w = 0; w < words; ++w) join[w] |= r[w];
    }
    if (unions.contains_row(join.data())) return true;
    return sink.add({"SCB3", pick(unions, idx), SoftSet(space, join),
                     "union of directed expressible sets is not expressible"});
  });
  return report;
}

SoftConvexBase SoftConvexBase::make(SoftFamily members, const ValidationOptions& options) {
  ValidationReport report = validate_cbase(members, options);
  if (!report.valid())
    throw ValidationError(ErrorCode::InvalidBase, "family is not a soft convex base",
                          std::move(report));
  return SoftConvexBase(std::move(members));
}

SoftConvexStructure structure_from_cbase(const SoftConvexBase& beta) {
  SoftFamily out(beta.space_ptr());
  out.insert(SoftSet::null(beta.space_ptr()));
  for (std::size_t i = 0; i < beta.size(); ++i) out.insert_row(beta.members().row(i).data());
  ValidationOptions quick;
  quick.stop_at_first = true;
  ValidationReport report = validate_structure(out, quick);
  if (!report.valid())
    throw ValidationError(ErrorCode::InvalidBase, "base does not generate a structure",
                          std::move(report));
  return adopt_structure(std::move(out));
}

}  // namespace softcvx
