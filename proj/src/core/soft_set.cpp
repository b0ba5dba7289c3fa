#include "softcvx/soft_set.hpp"

#include <bit>

#include "softcvx/error.hpp"

namespace softcvx {

bool canonical_less(const ElementSet& a, const ElementSet& b) noexcept {
  auto ia = a.rbegin();
  auto ib = b.rbegin();
  for (; ia != a.rend() && ib != b.rend(); ++ia, ++ib)
    if (*ia != *ib) return *ia < *ib;
  return ia == a.rend() && ib != b.rend();
}

std::uint64_t word_mask(std::size_t bits, std::size_t w) noexcept {
  const std::size_t lo = w * 64;
  if (bits >= lo + 64) return ~std::uint64_t{0};
  if (bits <= lo) return 0;
  return (std::uint64_t{1} << (bits - lo)) - 1;
}

SoftSet::SoftSet(SpacePtr space, std::vector<std::uint64_t> words)
    : space_(std::move(space)), words_(std::move(words)) {
  const std::size_t n = space_->word_count();
  words_.resize(n, 0);
  for (std::size_t w = 0; w < n; ++w) words_[w] &= word_mask(space_->bit_count(), w);
}

SoftSet SoftSet::null(SpacePtr space) {
  const std::size_t n = space->word_count();
  return SoftSet(std::move(space), std::vector<std::uint64_t>(n, 0));
}

SoftSet SoftSet::absolute(SpacePtr space) {
  const std::size_t n = space->word_count();
  return SoftSet(std::move(space), std::vector<std::uint64_t>(n, ~std::uint64_t{0}));
}

SoftSet SoftSet::from_code(SpacePtr space, std::uint64_t code) {
  if (space->bit_count() > 64)
    throw Error(ErrorCode::BudgetExceeded, "soft-set codes need |X|*|E| <= 64");
  return SoftSet(std::move(space), std::vector<std::uint64_t>{code});
}

bool SoftSet::contains(std::size_t parameter, std::size_t element) const noexcept {
  const std::size_t bit = space_->bit_index(parameter, element);
  return (words_[bit / 64] >> (bit % 64)) & 1U;
}

ElementSet SoftSet::slice(std::size_t parameter) const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < space_->universe_size(); ++x)
    if (contains(parameter, x)) out.push_back(x);
  return out;
}

std::uint64_t SoftSet::code() const {
  if (space_->bit_count() > 64)
    throw Error(ErrorCode::BudgetExceeded, "soft-set codes need |X|*|E| <= 64");
  return words_[0];
}

bool SoftSet::is_null() const noexcept {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

bool SoftSet::is_absolute() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] != word_mask(space_->bit_count(), w)) return false;
  return true;
}

std::size_t SoftSet::cardinality() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool operator==(const SoftSet& a, const SoftSet& b) noexcept {
  return a.space_->same_as(*b.space_) && a.words_ == b.words_;
}

SoftSet make_soft_set(const SpacePtr& space,
                      const std::map<std::string, std::vector<std::string>>& assignment) {
  std::vector<std::uint64_t> words(space->word_count(), 0);
  std::vector<bool> seen(space->parameter_count(), false);
  for (const auto& [param, elements] : assignment) {
    const std::size_t p = space->require_parameter(param);
    seen[p] = true;
    for (const auto& name : elements) {
      const std::size_t bit = space->bit_index(p, space->require_element(name));
      words[bit / 64] |= std::uint64_t{1} << (bit % 64);
    }
  }
  for (std::size_t p = 0; p < seen.size(); ++p) {
    if (!seen[p])
      throw Error(ErrorCode::MissingParameter,
                  "no subset assigned to parameter '" + space->parameters()[p] + "'");
  }
  return SoftSet(space, std::move(words));
}

namespace {

template <class Op>
SoftSet combine(const SoftSet& a, const SoftSet& b, Op op) {
  require_same_space(a.space(), b.space());
  std::vector<std::uint64_t> out(a.words().size());
  for (std::size_t w = 0; w < out.size(); ++w) out[w] = op(a.words()[w], b.words()[w]);
  return SoftSet(a.space_ptr(), std::move(out));
}

}  // namespace

SoftSet unite(const SoftSet& a, const SoftSet& b) {
  return combine(a, b, [](std::uint64_t x, std::uint64_t y) { return x | y; });
}

SoftSet intersect(const SoftSet& a, const SoftSet& b) {
  return combine(a, b, [](std::uint64_t x, std::uint64_t y) { return x & y; });
}

SoftSet difference(const SoftSet& a, const SoftSet& b) {
  return combine(a, b, [](std::uint64_t x, std::uint64_t y) { return x & ~y; });
}

SoftSet complement(const SoftSet& a) {
  std::vector<std::uint64_t> out(a.words().begin(), a.words().end());
  for (auto& w : out) w = ~w;  // constructor trims the padding bits
  return SoftSet(a.space_ptr(), std::move(out));
}

bool is_subset(const SoftSet& a, const SoftSet& b) {
  require_same_space(a.space(), b.space());
  for (std::size_t w = 0; w < a.words().size(); ++w)
    if ((a.words()[w] & ~b.words()[w]) != 0) return false;
  return true;
}

std::string format_elements(const Space& space, std::span<const std::size_t> elements) {
  if (elements.empty()) return "∅";
  std::string out = "{";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i) out += ',';
    out += space.universe()[elements[i]];
  }
  return out + "}";
}

std::string to_string(const SoftSet& s) {
  const Space& space = s.space();
  std::string out = "{";
  for (std::size_t p = 0; p < space.parameter_count(); ++p) {
    if (p) out += ',';
    const auto elems = s.slice(p);
    out += "(" + space.parameters()[p] + "," + format_elements(space, elems) + ")";
  }
  return out + "}";
}

std::size_t SoftSetHash::operator()(const SoftSet& s) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (auto w : s.words()) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

}  // namespace softcvx
