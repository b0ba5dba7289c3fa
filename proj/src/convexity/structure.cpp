#include <stdexcept>

#include "softcvx/combinatorics.hpp"
#include "softcvx/convexity.hpp"
#include "../detail/witness_sink.hpp"

namespace softcvx {
using detail::WitnessSink;

ValidationReport validate_structure(const SoftFamily& f, const ValidationOptions& options) {
  ValidationReport report;
  WitnessSink sink(report, options);
  const SpacePtr& space = f.space_ptr();
  const std::size_t words = space->word_count();

  const SoftSet phi = SoftSet::null(space);
  const SoftSet abs = SoftSet::absolute(space);
  if (!f.contains(phi) && !sink.add({"1", {}, phi, "Phi_E is not a member"})) return report;
  if (!f.contains(abs) && !sink.add({"1", {}, abs, "X_E is not a member"})) return report;

  if (options.mode == CheckMode::Fast) {
    std::vector<std::uint64_t> meet(words);
    for (std::size_t i = 0; i < f.size() && !sink.full("2"); ++i) {
      for (std::size_t j = i + 1; j < f.size() && !sink.full("2"); ++j) {
        auto a = f.row(i);
        auto b = f.row(j);
        for (std::size_t w = 0; w < words; ++w) meet[w] = a[w] & b[w];
        if (f.contains_row(meet.data())) continue;
        if (!sink.add({"2", {f[i], f[j]}, SoftSet(space, meet), "intersection is not a member"}))
          return report;
      }
    }
    report.notes.push_back(
        "3: certified by finite collapse (a finite upward directed family contains its union)");
    return report;
  }

  // Literal: every subfamily of size 2..cap.
  const auto& k = kernels::active();
  std::vector<std::uint64_t> scratch;
  std::vector<std::uint64_t> meet(words), join(words), pair(words);
  auto subfamily = [&](std::span<const std::size_t> idx) {
    std::vector<SoftSet> out;
    for (auto i : idx) out.push_back(f[i]);
    return out;
  };
  for_each_combination(f.size(), 2, options.cap, [&](std::span<const std::size_t> idx) {
    scratch.clear();
    std::fill(meet.begin(), meet.end(), ~std::uint64_t{0});
    std::fill(join.begin(), join.end(), 0);
    for (auto i : idx) {
      auto r = f.row(i);
      scratch.insert(scratch.end(), r.begin(), r.end());
      for (std::size_t w = 0; w < words; ++w) {
        meet[w] &= r[w];
        join[w] |= r[w];
      }
    }
    for (std::size_t w = 0; w < words; ++w) meet[w] &= word_mask(space->bit_count(), w);

    if (!sink.full("2") && !f.contains_row(meet.data())) {
      if (!sink.add({"2", subfamily(idx), SoftSet(space, meet), "intersection is not a member"}))
        return false;
    }

    if (!sink.full("3")) {
      const kernels::FamilyView sub{scratch.data(), idx.size(), words};
      bool directed = true;
      for (std::size_t a = 0; a < idx.size() && directed; ++a) {
        for (std::size_t b = a + 1; b < idx.size() && directed; ++b) {
          for (std::size_t w = 0; w < words; ++w)
            pair[w] = scratch[a * words + w] | scratch[b * words + w];
          directed = k.find_superset(sub, pair.data()) != kernels::npos;
        }
      }
      if (directed && !f.contains_row(join.data())) {
        if (!sink.add({"3", subfamily(idx), SoftSet(space, join),
                       "union of an upward directed subfamily is not a member"}))
          return false;
      }
    }
    return !(sink.full("2") && sink.full("3"));
  });
  return report;
}

SoftConvexStructure SoftConvexStructure::make(SoftFamily members, const ValidationOptions& options) {
  ValidationReport report = validate_structure(members, options);
  if (!report.valid())
    throw ValidationError(ErrorCode::InvalidStructure, "family is not a soft convex structure",
                          std::move(report));
  return SoftConvexStructure(std::move(members));
}

SoftConvexStructure adopt_structure(SoftFamily members) {
  ValidationOptions quick;
  quick.stop_at_first = true;
  if (!validate_structure(members, quick).valid())
    throw std::logic_error("internal error: constructed family is not a soft convex structure");
  return SoftConvexStructure(std::move(members));
}

SoftConvexStructure close_to_structure(const SoftFamily& f) {
  SoftFamily out = f;
  out.insert(SoftSet::null(f.space_ptr()));
  out.insert(SoftSet::absolute(f.space_ptr()));
  const std::size_t words = f.space().word_count();
  std::vector<std::uint64_t> meet(words);
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      auto a = out.row(i);
      auto b = out.row(j);
      for (std::size_t w = 0; w < words; ++w) meet[w] = a[w] & b[w];
      out.insert_row(meet.data());
    }
  }
  return adopt_structure(std::move(out));
}

bool is_concave(const SoftSet& s, const SoftConvexStructure& zeta) {
  return zeta.contains(complement(s));
}

CrispConvexStructure slice(const SoftConvexStructure& zeta, std::size_t parameter) {
  return CrispConvexStructure(zeta.space().universe(), parameter_slices(zeta.members(), parameter));
}

CrispConvexStructure slice(const SoftConvexStructure& zeta, const std::string& parameter) {
  return slice(zeta, zeta.space().require_parameter(parameter));
}

}  // namespace softcvx
