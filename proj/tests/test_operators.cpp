#include <gtest/gtest.h>

#include <random>

#include "softcvx/operators.hpp"
#include "softcvx/oracle.hpp"
#include "support/brute.hpp"
#include "support/fixture.hpp"

using namespace softcvx;

namespace {

ValidationOptions literal() {
  ValidationOptions o;
  o.mode = CheckMode::Literal;
  return o;
}

bool has_axiom(const ValidationReport& r, const std::string& axiom) {
  for (const auto& w : r.witnesses)
    if (w.axiom == axiom) return true;
  return false;
}

// Hull-operator and c-derived laws on a table over an n-bit lattice,
// with directed additivity checked on every subfamily of the lattice.
struct Laws {
  std::vector<std::uint64_t> t;
  std::size_t n;
  bool sub(std::uint64_t a, std::uint64_t b) const { return (a & ~b) == 0; }
  bool normal() const { return t[0] == 0; }
  bool monotone() const {
    for (std::uint64_t a = 0; a < t.size(); ++a)
      for (std::uint64_t b = 0; b < t.size(); ++b)
        if (sub(a, b) && !sub(t[a], t[b])) return false;
    return true;
  }
  bool additive() const {
    const std::uint64_t sets = t.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << sets); ++mask) {
      std::vector<std::uint64_t> f;
      for (std::uint64_t c = 0; c < sets; ++c)
        if (mask >> c & 1) f.push_back(c);
      bool directed = true;
      for (auto a : f)
        for (auto b : f) {
          bool ok = false;
          for (auto c : f) ok = ok || (sub(a, c) && sub(b, c));
          directed = directed && ok;
        }
      if (!directed) continue;
      std::uint64_t u = 0, ut = 0;
      for (auto c : f) {
        u |= c;
        ut |= t[c];
      }
      if (t[u] != ut) return false;
    }
    return true;
  }
  bool hull_op() const {
    for (std::uint64_t a = 0; a < t.size(); ++a)
      if (!sub(a, t[a]) || t[t[a]] != t[a]) return false;
    return normal() && monotone() && additive();
  }
  bool cderived() const {
    for (std::uint64_t a = 0; a < t.size(); ++a)
      if (!sub(t[t[a] | a], t[a] | a)) return false;
    return normal() && monotone() && additive();
  }
};

}  // namespace

TEST(OperatorTable, Construction) {
  fixture::Nonconvex fx;
  EXPECT_EQ(OperatorTable::identity(fx.space).size(), 64u);
  EXPECT_EQ(OperatorTable::identity(fx.space).apply(fx.o3), fx.o3);
  EXPECT_EQ(OperatorTable::constant_null(fx.space).apply(fx.o3), fx.phi);
  EXPECT_EQ(OperatorTable::complement_map(fx.space).apply(fx.o1), complement(fx.o1));
  try {
    OperatorTable(fx.space, {fx.phi, fx.abs});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TableIncomplete);
  }
  auto big = Space::make({"a", "b", "c", "d", "e", "f"}, {"p", "q", "r"});
  try {
    OperatorTable::identity(big);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
}

TEST(HullOperator, Examples) {
  fixture::Nonconvex fx;
  const auto z = fx.structure();
  const auto eta = tabulate_hull(z);
  EXPECT_TRUE(validate_hull_operator(eta).valid());
  // the literal directed-family scan over 64 soft sets is past its budget
  EXPECT_THROW(validate_hull_operator(eta, literal()), Error);
  EXPECT_EQ(structure_from_hull_operator(eta), z);

  const auto id = OperatorTable::identity(fx.space);
  EXPECT_TRUE(validate_hull_operator(id).valid());
  EXPECT_EQ(structure_from_hull_operator(id).size(), 64u);

  auto codes = id.codes();
  codes[0] = 63;
  const auto broken = OperatorTable::from_codes(fx.space, codes);
  const auto r = validate_hull_operator(broken);
  ASSERT_FALSE(r.valid());
  EXPECT_EQ(r.witnesses.front().axiom, "normalization");
  EXPECT_EQ(r.witnesses.front().members.front(), fx.phi);
  EXPECT_THROW(structure_from_hull_operator(broken), ValidationError);

  const auto top = OperatorTable::tabulate(fx.space, [&](const SoftSet& s) { return s.is_null() ? s : fx.abs; });
  EXPECT_TRUE(validate_hull_operator(top).valid());
  EXPECT_EQ(structure_from_hull_operator(top).members(), SoftFamily(fx.space, {fx.phi, fx.abs}));
}

TEST(CDerived, Examples) {
  fixture::Nonconvex fx;
  const auto z = fx.structure();
  const auto eta = tabulate_hull(z);
  EXPECT_TRUE(validate_cderived_operator(eta).valid());
  EXPECT_EQ(structure_from_cderived(eta), z);
  EXPECT_EQ(hull_from_cderived(eta, fx.set({"x3"}, {})), hull(z, fx.set({"x3"}, {})));
  EXPECT_EQ(cderived_hull_table(eta), eta);

  const auto null = OperatorTable::constant_null(fx.space);
  EXPECT_TRUE(validate_cderived_operator(null).valid());
  EXPECT_EQ(structure_from_cderived(null).size(), 64u);
  EXPECT_EQ(hull_from_cderived(null, fx.o2), fx.o2);
  EXPECT_EQ(hull_from_cderived(null, fx.phi), fx.phi);

  const auto comp = OperatorTable::complement_map(fx.space);
  const auto r = validate_cderived_operator(comp);
  ASSERT_FALSE(r.valid());
  EXPECT_TRUE(has_axiom(r, "normalization"));
  EXPECT_THROW(structure_from_cderived(comp), ValidationError);
}

// d(s) = Phi_E below Omega5, X_E elsewhere: 16 sets below Omega5 plus X_E.
TEST(CDerived, ThresholdOperator) {
  fixture::Nonconvex fx;
  const auto d = threshold_operator(fx.o5);
  Laws laws{d.codes(), 6};
  ASSERT_TRUE(laws.normal() && laws.monotone());
  ASSERT_TRUE(validate_cderived_operator(d).valid());
  const auto z = structure_from_cderived(d);
  EXPECT_EQ(z.size(), 17u);
  for (const auto& s : z.members()) EXPECT_TRUE(is_subset(s, fx.o5) || s == fx.abs);
  EXPECT_EQ(cderived_image_family(d), z.members());
}

// Every table on a 2-bit lattice (256 of them) against the reference laws.
TEST(Operators, ExhaustiveTablesOnTwoBits) {
  auto sp = Space::make({"a", "b"}, {"p"});
  std::size_t hulls = 0, derived = 0;
  for (std::uint64_t t = 0; t < 256; ++t) {
    std::vector<std::uint64_t> codes(4);
    for (int i = 0; i < 4; ++i) codes[i] = t >> (2 * i) & 3;
    const auto op = OperatorTable::from_codes(sp, codes);
    const Laws laws{codes, 2};
    const bool h = laws.hull_op(), d = laws.cderived();
    hulls += h;
    derived += d;
    ASSERT_EQ(validate_hull_operator(op).valid(), h) << t;
    ASSERT_EQ(validate_hull_operator(op, literal()).valid(), h) << t;
    ASSERT_EQ(validate_cderived_operator(op).valid(), d) << t;
    ASSERT_EQ(validate_cderived_operator(op, literal()).valid(), d) << t;
    if (h) {
      // hull operators are exactly the tabulated hulls of their fixpoints
      const auto z = structure_from_hull_operator(op);
      ASSERT_EQ(tabulate_hull(z), op);
    }
    if (d) {
      const auto z = structure_from_cderived(op);
      for (std::uint64_t c = 0; c < 4; ++c) {
        const auto s = SoftSet::from_code(sp, c);
        ASSERT_EQ(hull_from_cderived(op, s), hull(z, s));
      }
    }
  }
  // one hull operator per structure on the 2-bit lattice
  EXPECT_EQ(hulls, 4u);
  EXPECT_GT(derived, hulls);
}

TEST(Operators, SampledTablesOnThreeBits) {
  auto sp = Space::make({"a", "b", "c"}, {"p"});
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 3000; ++trial) {
    std::vector<std::uint64_t> codes(8);
    // bias toward monotone tables so every law gets exercised
    for (std::uint64_t c = 0; c < 8; ++c) codes[c] = trial % 3 ? (c | (rng() % 8)) : rng() % 8;
    if (trial % 4 == 0) codes[0] = 0;
    const auto op = OperatorTable::from_codes(sp, codes);
    const Laws laws{codes, 3};
    ASSERT_EQ(validate_hull_operator(op).valid(), laws.hull_op());
    ASSERT_EQ(validate_hull_operator(op, literal()).valid(), laws.hull_op());
    ASSERT_EQ(validate_cderived_operator(op).valid(), laws.cderived());
    ASSERT_EQ(validate_cderived_operator(op, literal()).valid(), laws.cderived());
  }
}

TEST(Operators, RoundTripOnEnumeratedStructures) {
  auto sp = Space::make({"a", "b"}, {"p", "q"});
  const auto all = filter_structures(sp);
  for (const auto& z : all.structures) {
    const auto eta = tabulate_hull(z);
    ASSERT_TRUE(validate_hull_operator(eta).valid());
    ASSERT_TRUE(validate_cderived_operator(eta).valid());
    ASSERT_EQ(structure_from_hull_operator(eta), z);
    ASSERT_EQ(structure_from_cderived(eta), z);
  }
}
