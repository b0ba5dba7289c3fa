#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "softcvx/kernels.hpp"
#include "softcvx/soft_set.hpp"

namespace softcvx {

/// A finite, deduplicated collection of soft sets over one space.
///
/// Members keep insertion order (witness reporting depends on it) and are
/// stored as contiguous membership rows so the scan kernels can run over
/// them directly. Equality is set equality.
class SoftFamily {
 public:
  explicit SoftFamily(SpacePtr space);
  SoftFamily(SpacePtr space, std::span<const SoftSet> members);
  SoftFamily(SpacePtr space, std::initializer_list<SoftSet> members);

  /// Family of the soft sets with the given canonical codes (bit_count() <= 64).
  static SoftFamily from_codes(SpacePtr space, std::span<const std::uint64_t> codes);

  /// Adds s unless a soft-equal member exists. Returns true if added.
  bool insert(const SoftSet& s);
  bool insert_row(const std::uint64_t* words);

  bool contains(const SoftSet& s) const;
  bool contains_row(const std::uint64_t* words) const;
  std::optional<std::size_t> index_of(const SoftSet& s) const;
  std::optional<std::size_t> index_of_row(const std::uint64_t* words) const;

  std::size_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }

  SoftSet operator[](std::size_t i) const;
  std::span<const std::uint64_t> row(std::size_t i) const noexcept {
    return {rows_.data() + i * words_, words_};
  }
  kernels::FamilyView view() const noexcept { return {rows_.data(), count_, words_}; }

  std::vector<SoftSet> members() const;
  /// Canonical codes of the members in member order (bit_count() <= 64).
  std::vector<std::uint64_t> codes() const;

  const Space& space() const noexcept { return *space_; }
  const SpacePtr& space_ptr() const noexcept { return space_; }

  friend bool operator==(const SoftFamily& a, const SoftFamily& b);

  class iterator {
   public:
    using value_type = SoftSet;
    using difference_type = std::ptrdiff_t;
    iterator(const SoftFamily* f, std::size_t i) : family_(f), index_(i) {}
    SoftSet operator*() const { return (*family_)[index_]; }
    iterator& operator++() {
      ++index_;
      return *this;
    }
    bool operator==(const iterator& o) const { return index_ == o.index_; }

   private:
    const SoftFamily* family_;
    std::size_t index_;
  };
  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, count_}; }

 private:
  static constexpr std::size_t kIndexThreshold = 48;
  std::uint64_t row_hash(const std::uint64_t* words) const noexcept;
  void build_index();

  SpacePtr space_;
  std::size_t words_;
  std::size_t count_ = 0;
  std::vector<std::uint64_t> rows_;
  // hash -> member; maintained only once the family outgrows a linear scan
  std::unordered_multimap<std::uint64_t, std::size_t> index_;
};

/// Parameter-wise union; the empty family gives Phi_E.
SoftSet family_union(const SoftFamily& f);
/// Parameter-wise intersection; the empty family gives X_E.
SoftSet family_intersection(const SoftFamily& f);

/// Every pair of members has a member above both. Empty and singleton
/// families are vacuously directed.
bool is_upward_directed(const SoftFamily& f);
/// Every pair of members has a member below both.
bool is_downward_directed(const SoftFamily& f);

/// The family of complements of the members.
SoftFamily complement_each(const SoftFamily& f);

/// The crisp family {Omega(e)} of one parameter, as sorted element lists,
/// deduplicated and ordered by canonical code.
std::vector<ElementSet> parameter_slices(const SoftFamily& f, std::size_t parameter);

}  // namespace softcvx
