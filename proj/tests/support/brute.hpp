#pragma once

// Naive reference model for the tests. Soft sets are vectors of std::set
// (one per parameter) and every axiom is checked by walking subfamilies
// directly. Shares nothing with the library beyond the code numbering:
// bit p*nx + x of a code is "x in s(e_p)".

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

namespace brute {

struct Soft {
  std::vector<std::set<std::size_t>> v;
  friend bool operator==(const Soft&, const Soft&) = default;
  friend auto operator<=>(const Soft&, const Soft&) = default;
};

inline Soft from_code(std::size_t nx, std::size_t ne, std::uint64_t code) {
  Soft s{std::vector<std::set<std::size_t>>(ne)};
  for (std::size_t p = 0; p < ne; ++p)
    for (std::size_t x = 0; x < nx; ++x)
      if (code >> (p * nx + x) & 1) s.v[p].insert(x);
  return s;
}

inline std::uint64_t to_code(const Soft& s, std::size_t nx) {
  std::uint64_t c = 0;
  for (std::size_t p = 0; p < s.v.size(); ++p)
    for (std::size_t x : s.v[p]) c |= std::uint64_t{1} << (p * nx + x);
  return c;
}

inline Soft empty(std::size_t ne) { return Soft{std::vector<std::set<std::size_t>>(ne)}; }

inline Soft full(std::size_t nx, std::size_t ne) {
  Soft s = empty(ne);
  for (auto& e : s.v)
    for (std::size_t x = 0; x < nx; ++x) e.insert(x);
  return s;
}

inline Soft unite(const Soft& a, const Soft& b) {
  Soft r = a;
  for (std::size_t p = 0; p < a.v.size(); ++p) r.v[p].insert(b.v[p].begin(), b.v[p].end());
  return r;
}

inline Soft meet(const Soft& a, const Soft& b) {
  Soft r = empty(a.v.size());
  for (std::size_t p = 0; p < a.v.size(); ++p)
    std::set_intersection(a.v[p].begin(), a.v[p].end(), b.v[p].begin(), b.v[p].end(),
                          std::inserter(r.v[p], r.v[p].end()));
  return r;
}

inline Soft complement(const Soft& a, std::size_t nx) {
  Soft r = empty(a.v.size());
  for (std::size_t p = 0; p < a.v.size(); ++p)
    for (std::size_t x = 0; x < nx; ++x)
      if (!a.v[p].count(x)) r.v[p].insert(x);
  return r;
}

inline bool subset(const Soft& a, const Soft& b) {
  for (std::size_t p = 0; p < a.v.size(); ++p)
    if (!std::includes(b.v[p].begin(), b.v[p].end(), a.v[p].begin(), a.v[p].end())) return false;
  return true;
}

inline bool contains(const std::vector<Soft>& f, const Soft& s) {
  return std::find(f.begin(), f.end(), s) != f.end();
}

inline bool upward_directed(const std::vector<Soft>& f) {
  for (const auto& a : f)
    for (const auto& b : f) {
      bool found = false;
      for (const auto& c : f)
        if (subset(a, c) && subset(b, c)) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  return true;
}

inline bool downward_directed(const std::vector<Soft>& f) {
  for (const auto& a : f)
    for (const auto& b : f) {
      bool found = false;
      for (const auto& c : f)
        if (subset(c, a) && subset(c, b)) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  return true;
}

/// Structure axioms checked over every subfamily (2^|f| of them).
inline bool is_structure(const std::vector<Soft>& f, std::size_t nx, std::size_t ne) {
  if (!contains(f, empty(ne)) || !contains(f, full(nx, ne))) return false;
  const std::size_t k = f.size();
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << k); ++m) {
    std::vector<Soft> sub;
    Soft in = full(nx, ne), un = empty(ne);
    for (std::size_t i = 0; i < k; ++i)
      if (m >> i & 1) {
        sub.push_back(f[i]);
        in = meet(in, f[i]);
        un = unite(un, f[i]);
      }
    if (!contains(f, in)) return false;
    if (upward_directed(sub) && !contains(f, un)) return false;
  }
  return true;
}

/// The same axioms for a finite family reduced to pairs (all directed
/// families have a top member). Used where 2^|f| is too large.
inline bool is_structure_pairwise(const std::vector<Soft>& f, std::size_t nx, std::size_t ne) {
  if (!contains(f, empty(ne)) || !contains(f, full(nx, ne))) return false;
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j)
      if (!contains(f, meet(f[i], f[j]))) return false;
  return true;
}

inline Soft hull(const std::vector<Soft>& f, const Soft& s, std::size_t nx) {
  Soft r = full(nx, s.v.size());
  for (const auto& m : f)
    if (subset(s, m)) r = meet(r, m);
  return r;
}

inline std::vector<Soft> family_from_mask(std::size_t nx, std::size_t ne, std::uint64_t mask) {
  std::vector<Soft> f;
  const std::size_t n = nx * ne;
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << n); ++c)
    if (mask >> c & 1) f.push_back(from_code(nx, ne, c));
  return f;
}

/// Crisp structure check on plain element sets, every subfamily.
inline bool is_crisp_structure(const std::vector<std::set<std::size_t>>& f, std::size_t nx) {
  std::vector<Soft> wrapped;
  for (const auto& s : f) wrapped.push_back(Soft{{s}});
  return is_structure(wrapped, nx, 1);
}

/// Number of structures on an nx-by-ne space, by scanning all families.
inline std::size_t count_structures(std::size_t nx, std::size_t ne) {
  const std::size_t n = nx * ne;
  const std::uint64_t sets = std::uint64_t{1} << n;
  const std::uint64_t families = std::uint64_t{1} << sets;
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < families; ++mask) {
    if (!(mask & 1) || !(mask >> (sets - 1) & 1)) continue;
    const auto f = family_from_mask(nx, ne, mask);
    if (n <= 3 ? is_structure(f, nx, ne) : is_structure_pairwise(f, nx, ne)) ++count;
  }
  return count;
}

}  // namespace brute
