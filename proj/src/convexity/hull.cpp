#include "softcvx/convexity.hpp"

namespace softcvx {

SoftSet hull(const SoftConvexStructure& zeta, const SoftSet& s) {
  require_same_space(zeta.space(), s.space());
  std::vector<std::uint64_t> acc(zeta.space().word_count(), ~std::uint64_t{0});
  kernels::active().meet_of_supersets(zeta.members().view(), s.words().data(), acc.data());
  return SoftSet(zeta.space_ptr(), std::move(acc));
}

PointwiseHull::PointwiseHull(const SoftConvexStructure& zeta) : space_(zeta.space_ptr()) {
  const Space& space = *space_;
  for (std::size_t p = 0; p < space.parameter_count(); ++p) {
    auto one = Space::make(space.universe(), {space.parameters()[p]});
    SoftFamily members(one);
    std::vector<std::uint64_t> words(one->word_count());
    const CrispConvexStructure crisp = slice(zeta, p);
    for (const auto& part : crisp.members()) {
      std::fill(words.begin(), words.end(), 0);
      for (auto x : part) words[x / 64] |= std::uint64_t{1} << (x % 64);
      members.insert_row(words.data());
    }
    slices_.push_back(adopt_structure(std::move(members)));
  }
}

SoftSet PointwiseHull::operator()(const SoftSet& s) const {
  require_same_space(*space_, s.space());
  const std::size_t n = space_->universe_size();
  std::vector<std::uint64_t> out(space_->word_count(), 0);
  for (std::size_t p = 0; p < slices_.size(); ++p) {
    const auto& one = slices_[p].space_ptr();
    std::vector<std::uint64_t> words(one->word_count(), 0);
    for (std::size_t x = 0; x < n; ++x)
      if (s.contains(p, x)) words[x / 64] |= std::uint64_t{1} << (x % 64);
    const SoftSet h = hull(slices_[p], SoftSet(one, std::move(words)));
    for (std::size_t x = 0; x < n; ++x) {
      if (!h.contains(0, x)) continue;
      const std::size_t bit = space_->bit_index(p, x);
      out[bit / 64] |= std::uint64_t{1} << (bit % 64);
    }
  }
  return SoftSet(space_, std::move(out));
}

SoftSet pointwise_hull(const SoftConvexStructure& zeta, const SoftSet& s) {
  return PointwiseHull(zeta)(s);
}

}  // namespace softcvx
