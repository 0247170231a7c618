#include <gtest/gtest.h>

#include "algdyn/classify.hpp"
#include "fixtures.hpp"
#include "random_actions.hpp"

using namespace algdyn;
using namespace fixtures;

namespace {

// A^a raised to `order` is the identity.
void expect_relation(const SolenoidAction& a, const IntVec& rel, unsigned long order) {
  QMatrix g = a.power(rel);
  EXPECT_TRUE(g.pow(static_cast<long>(order)).is_identity());
  for (unsigned long s = 1; s < order; ++s)
    if (order % s == 0) {
      EXPECT_FALSE(g.pow(static_cast<long>(s)).is_identity());
    }
}

}  // namespace

TEST(TotalIrreducibility, Times23) {
  auto t = total_irreducibility(times23());
  EXPECT_TRUE(t.irreducible);
  EXPECT_TRUE(t.totally_irreducible);
  EXPECT_EQ(t.degree_bound, 1ul);
  EXPECT_EQ(t.M, Int(2));
  EXPECT_FALSE(t.sublattice);
}

TEST(TotalIrreducibility, GaussianTwistDropsOnSublattice) {
  auto a = gaussian_twist();
  auto t = total_irreducibility(a);
  EXPECT_TRUE(t.irreducible);
  EXPECT_FALSE(t.totally_irreducible);
  ASSERT_TRUE(t.sublattice);
  ASSERT_TRUE(t.witness);
  // The restriction to the sublattice has the witness as an invariant line.
  const IntVec& lam = *t.sublattice;
  EXPECT_EQ(lam[1], 1);
  EXPECT_EQ(4 % lam[0], 0);
  for (std::size_t j = 0; j < a.d; ++j) EXPECT_TRUE(t.witness->is_invariant(a.generators[j].pow(lam[j])));
  EXPECT_EQ(t.witness->dim(), 1u);
  // The listed index 4Z x Z is contained in it, so the restriction there is reducible too.
  EXPECT_TRUE(t.witness->is_invariant(a.generators[0].pow(4)));
}

TEST(TotalIrreducibility, Sqrt2Units) {
  auto t = total_irreducibility(sqrt2_units());
  EXPECT_TRUE(t.irreducible);
  EXPECT_TRUE(t.totally_irreducible);
  EXPECT_EQ(t.degree_bound, 2ul);
}

TEST(TotalIrreducibility, ReducibleIsNotTotallyIrreducible) {
  auto t = total_irreducibility(SolenoidAction::make({M({{2, 1}, {0, 3}})}));
  EXPECT_FALSE(t.irreducible);
  EXPECT_FALSE(t.totally_irreducible);
}

TEST(VirtuallyCyclic, Examples) {
  auto g = golden();
  auto vg = virtually_cyclic(g);
  EXPECT_EQ(vg.verdict, Verdict::Yes);
  ASSERT_EQ(vg.relations.basis.size(), 1u);
  const IntVec& rel = vg.relations.basis[0];
  EXPECT_TRUE(rel == (IntVec{2, -1}) || rel == (IntVec{-2, 1}));
  EXPECT_EQ(vg.relations.orders[0], 1ul);
  EXPECT_EQ(vg.relations.rank, 1u);

  auto vx = virtually_cyclic(times23());
  EXPECT_EQ(vx.verdict, Verdict::No);
  EXPECT_TRUE(vx.relations.basis.empty());
  EXPECT_EQ(vx.relations.rank, 2u);

  auto gt = gaussian_twist();
  auto vi = virtually_cyclic(gt);
  EXPECT_EQ(vi.verdict, Verdict::Yes);
  ASSERT_EQ(vi.relations.basis.size(), 1u);
  EXPECT_EQ(vi.relations.orders[0], 4ul);
  expect_relation(gt, vi.relations.basis[0], 4);

  EXPECT_EQ(virtually_cyclic(sqrt2_units()).verdict, Verdict::No);
  EXPECT_EQ(virtually_cyclic(SolenoidAction::make({M({{2, 1}, {0, 3}})})).verdict, Verdict::Yes);
}

TEST(VirtuallyCyclic, UnipotentPartMatters) {
  // A = 2 * [[1,1],[0,1]] and B = 2 * I: B^-1 A is unipotent of infinite order.
  auto a = SolenoidAction::make({M({{2, 2}, {0, 2}}), QMatrix::scalar(2, 2)});
  EXPECT_EQ(virtually_cyclic(a).verdict, Verdict::No);
  auto b = SolenoidAction::make({M({{2, 2}, {0, 2}}), M({{4, 8}, {0, 4}})});
  EXPECT_EQ(virtually_cyclic(b).verdict, Verdict::Yes);
}

TEST(VirtuallyCyclicFactor, Examples) {
  EXPECT_EQ(has_virtually_cyclic_factor(times23()).verdict, Verdict::No);
  auto sum = direct_sum(times23(), gaussian_twist());
  auto f = has_virtually_cyclic_factor(sum);
  EXPECT_EQ(f.verdict, Verdict::Yes);
  ASSERT_TRUE(f.witness);
  EXPECT_EQ(f.witness->dim(), 2u);
  for (const auto& g : sum.generators) EXPECT_TRUE(f.witness->is_invariant(g));
  EXPECT_EQ(has_virtually_cyclic_factor(SolenoidAction::make({sqrt2(1, 1)})).verdict, Verdict::Yes);
}

TEST(Compare, GaussianExampleIsNotDisjoint) {
  auto r = compare(times23(), alpha2());
  EXPECT_EQ(r.disjoint, Verdict::No);
  ASSERT_TRUE(r.lattice);
  EXPECT_EQ(*r.lattice, (IntVec{4, 1}));
  ASSERT_TRUE(r.embedding);
  EXPECT_EQ(r.embedding->orders, (std::vector<unsigned long>{4, 1}));
  EXPECT_FALSE(r.weakly_isomorphic);
  ASSERT_TRUE(r.joining);
  EXPECT_TRUE(verify_joining(r, 1, 2));
  // alpha2^{4 e1} = 16 Id matches (x2)^4 blockwise.
  EXPECT_EQ(alpha2().power({4, 0}), QMatrix::scalar(2, 16));
  bool dimension_note = false;
  for (const auto& note : r.notes) dimension_note |= note.find("dimension") != std::string::npos;
  EXPECT_TRUE(dimension_note);

  auto back = compare(alpha2(), times23());
  EXPECT_EQ(back.disjoint, Verdict::No);
  ASSERT_TRUE(back.lattice);
  EXPECT_EQ(*back.lattice, (IntVec{4, 1}));
  EXPECT_TRUE(verify_joining(back, 2, 1));
}

TEST(Compare, SwappedGeneratorsAreDisjoint) {
  auto swapped = SolenoidAction::make({M({{3}}), M({{2}})});
  auto r = compare(times23(), swapped);
  EXPECT_EQ(r.disjoint, Verdict::Yes);
  EXPECT_FALSE(r.lattice);
  EXPECT_FALSE(r.joining);
}

TEST(Compare, SelfComparisonFindsIdentity) {
  for (const auto& a : {times23(), sqrt2_units(), golden(), alpha2()}) {
    auto r = compare(a, a);
    EXPECT_EQ(r.disjoint, Verdict::No) << a.label;
    ASSERT_TRUE(r.lattice);
    EXPECT_EQ(*r.lattice, IntVec(a.d, 1)) << a.label;
    EXPECT_TRUE(r.weakly_isomorphic);
    EXPECT_TRUE(verify_joining(r, a.m, a.m));
  }
}

TEST(Compare, VerifyJoiningRejectsTamperedWitness) {
  auto r = compare(times23(), alpha2());
  ASSERT_TRUE(r.joining);
  r.joining = QSubspace::span({{Rat(1), Rat(0), Rat(0)}}, 3);
  EXPECT_FALSE(verify_joining(r, 1, 2));
}

TEST(CommutantTorsion, Examples) {
  auto tx = commutant_torsion(times23());
  ASSERT_EQ(tx.elements.size(), 2u);
  EXPECT_TRUE(tx.elements[0].is_identity());
  EXPECT_EQ(tx.elements[1], QMatrix::scalar(1, -1));
  EXPECT_TRUE(tx.complete);

  auto ta = commutant_torsion(alpha2());
  ASSERT_EQ(ta.elements.size(), 4u);
  EXPECT_EQ(ta.orders, (std::vector<unsigned long>{1, 2, 4, 4}));
  QMatrix j = alpha2().generators[0] * Rat(1, 2);
  bool has_j = false;
  for (const auto& e : ta.elements) has_j |= e == j;
  EXPECT_TRUE(has_j);
  EXPECT_EQ(j * j, QMatrix::scalar(2, -1));
}

TEST(SimplestBetween, Basics) {
  EXPECT_EQ(simplest_between(Rat(1, 3), Rat(1, 2)), Rat(1, 2));
  EXPECT_EQ(simplest_between(Rat(-7, 5), Rat(-6, 5)), Rat(-4, 3));
  EXPECT_EQ(simplest_between(Rat(3, 10), Rat(4, 10)), Rat(1, 3));
}

TEST(ClassifyProperty, TotallyIrreducibleImpliesIrreducible) {
  testgen::Gen gen(51);
  for (int trial = 0; trial < 25; ++trial) {
    auto a = SolenoidAction::make(gen.action(4, gen.uniform(1, 2)));
    auto t = total_irreducibility(a);
    EXPECT_EQ(t.irreducible, is_irreducible(a));
    if (t.totally_irreducible) {
      EXPECT_TRUE(t.irreducible);
    }
  }
}

TEST(ClassifyProperty, RelationsAreTorsion) {
  testgen::Gen gen(52);
  for (int trial = 0; trial < 25; ++trial) {
    auto a = SolenoidAction::make(gen.action(4, gen.uniform(1, 3)));
    auto v = virtually_cyclic(a);
    ASSERT_NE(v.verdict, Verdict::Unknown);
    for (std::size_t i = 0; i < v.relations.basis.size(); ++i) expect_relation(a, v.relations.basis[i], v.relations.orders[i]);
    if (a.d == 1) {
      EXPECT_EQ(v.verdict, Verdict::Yes);
    }
  }
}

TEST(ClassifyProperty, CompareIsSymmetric) {
  testgen::Gen gen(53);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t d = gen.uniform(1, 2);
    auto nf1 = gen.field_action(static_cast<int>(gen.uniform(1, 2)), d, 3, 3);
    std::vector<QMatrix> g1, g2;
    for (const auto& g : nf1.multipliers) g1.push_back(multiplication_matrix(g, nf1.f));
    // Second action: the same field data conjugated, or fresh data.
    if (gen.coin()) {
      QMatrix p = gen.unimodular(nf1.degree(), 3), pinv = inverse(p);
      for (const auto& g : g1) g2.push_back(p * g * pinv);
    } else {
      auto nf2 = gen.field_action(static_cast<int>(gen.uniform(1, 2)), d, 3, 3);
      for (const auto& g : nf2.multipliers) g2.push_back(multiplication_matrix(g, nf2.f));
    }
    auto x = SolenoidAction::make(g1), y = SolenoidAction::make(g2);
    auto r1 = compare(x, y), r2 = compare(y, x);
    EXPECT_EQ(r1.disjoint, r2.disjoint);
    EXPECT_EQ(r1.lattice.has_value(), r2.lattice.has_value());
    if (r1.joining) {
      EXPECT_TRUE(verify_joining(r1, x.m, y.m));
    }
    if (r2.joining) {
      EXPECT_TRUE(verify_joining(r2, y.m, x.m));
    }
  }
}
