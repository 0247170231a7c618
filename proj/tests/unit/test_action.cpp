#include <gtest/gtest.h>

#include "algdyn/errors.hpp"
#include "fixtures.hpp"
#include "random_actions.hpp"

using namespace algdyn;
using namespace fixtures;

TEST(Validate, Examples) {
  EXPECT_TRUE(validate(times23()).ok);

  auto nc = validate(SolenoidAction::make({M({{0, 1}, {1, 0}}), M({{1, 1}, {0, 1}})}));
  EXPECT_FALSE(nc.ok);
  ASSERT_EQ(nc.messages.size(), 1u);
  EXPECT_EQ(nc.messages[0], "generators 1 and 2 do not commute");

  auto sing = validate(SolenoidAction::make({M({{1, 2}, {2, 4}})}));
  EXPECT_FALSE(sing.ok);
  ASSERT_EQ(sing.messages.size(), 1u);
  EXPECT_EQ(sing.messages[0], "generator 1 is not invertible");

  auto shape = validate(SolenoidAction::make({M({{1, 0}, {0, 1}}), M({{2}})}));
  EXPECT_FALSE(shape.ok);
}

TEST(Irreducibility, Examples) {
  EXPECT_TRUE(is_irreducible(times23()));
  EXPECT_TRUE(is_irreducible(SolenoidAction::make({QMatrix::companion(P({-2, 0, 1}))})));
  auto red = irreducibility({M({{2, 0}, {0, 3}})});
  EXPECT_FALSE(red.irreducible);
  ASSERT_TRUE(red.witness);
  EXPECT_TRUE(red.witness->is_invariant(M({{2, 0}, {0, 3}})));
  EXPECT_EQ(red.witness->dim(), 1u);
  EXPECT_TRUE(is_irreducible(alpha2()));
  // A scalar on Q^2 has every line invariant.
  EXPECT_FALSE(is_irreducible(SolenoidAction::make({QMatrix::scalar(2, 5)})));
}

TEST(InvariantFlag, Examples) {
  EXPECT_EQ(invariant_flag(times23()).length(), 1u);

  auto tri = invariant_flag({M({{2, 1}, {0, 3}})});
  ASSERT_EQ(tri.length(), 2u);
  EXPECT_TRUE(tri.subspaces[0].is_zero());
  EXPECT_EQ(tri.subspaces[1], QSubspace::span({{Rat(1), Rat(0)}}, 2));
  EXPECT_TRUE(tri.subspaces[2].is_whole());
  EXPECT_EQ(tri.blocks[0][0], M({{2}}));
  EXPECT_EQ(tri.blocks[1][0], M({{3}}));

  auto a2 = invariant_flag(alpha2());
  ASSERT_EQ(a2.length(), 1u);
  EXPECT_EQ(charpoly(a2.blocks[0][0]), P({4, 0, 1}));
}

TEST(Socle, Examples) {
  auto diag = socle_irreducibles({M({{2, 0}, {0, 3}})});
  ASSERT_EQ(diag.size(), 2u);
  std::vector<QSubspace> lines{diag[0].representative, diag[1].representative};
  auto e1 = QSubspace::span({{Rat(1), Rat(0)}}, 2), e2 = QSubspace::span({{Rat(0), Rat(1)}}, 2);
  EXPECT_TRUE((lines[0] == e1 && lines[1] == e2) || (lines[0] == e2 && lines[1] == e1));

  auto jordan = socle_irreducibles({M({{2, 1}, {0, 2}})});
  ASSERT_EQ(jordan.size(), 1u);
  EXPECT_EQ(jordan[0].representative, e1);
  EXPECT_EQ(jordan[0].multiplicity, 1u);

  auto twice = socle_irreducibles(direct_sum(times23(), times23()));
  ASSERT_EQ(twice.size(), 1u);
  EXPECT_EQ(twice[0].multiplicity, 2u);
  EXPECT_TRUE(twice[0].isotypic.is_whole());
}

TEST(InvariantFlagProperty, InvariantIrreducibleAndReconstructs) {
  testgen::Gen gen(21);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t d = gen.uniform(1, 3);
    auto gens = gen.action(6, d);
    auto flag = invariant_flag(gens, trial);
    ASSERT_TRUE(flag.subspaces.front().is_zero());
    ASSERT_TRUE(flag.subspaces.back().is_whole());
    for (std::size_t i = 1; i < flag.subspaces.size(); ++i) {
      EXPECT_TRUE(flag.subspaces[i].contains(flag.subspaces[i - 1]));
      EXPECT_GT(flag.subspaces[i].dim(), flag.subspaces[i - 1].dim());
      for (const auto& g : gens) EXPECT_TRUE(flag.subspaces[i].is_invariant(g));
    }
    for (const auto& block : flag.blocks) EXPECT_TRUE(irreducibility(block).irreducible);
    EXPECT_EQ(flag.length() == 1, irreducibility(gens).irreducible);

    // basis^{-1} A basis is block upper triangular with the recorded diagonal blocks.
    QMatrix binv = inverse(flag.basis);
    for (std::size_t j = 0; j < d; ++j) {
      QMatrix t = binv * gens[j] * flag.basis;
      for (std::size_t b = 0; b < flag.length(); ++b) {
        std::size_t lo = flag.offset(b), hi = flag.subspaces[b + 1].dim();
        for (std::size_t r = lo; r < hi; ++r) {
          for (std::size_t c = lo; c < hi; ++c) EXPECT_EQ(t(r, c), flag.blocks[b][j](r - lo, c - lo));
          for (std::size_t c = 0; c < lo; ++c) EXPECT_EQ(t(r, c), 0);
        }
      }
    }
  }
}

TEST(SocleProperty, MembersAreMinimalInvariant) {
  testgen::Gen gen(22);
  for (int trial = 0; trial < 40; ++trial) {
    auto gens = gen.action(6, gen.uniform(1, 2));
    for (const auto& comp : socle_irreducibles(gens, trial)) {
      EXPECT_TRUE(comp.isotypic.contains(comp.representative));
      for (const auto& g : gens) {
        EXPECT_TRUE(comp.representative.is_invariant(g));
        EXPECT_TRUE(comp.isotypic.is_invariant(g));
      }
      EXPECT_TRUE(irreducibility(restrict_all(gens, comp.representative)).irreducible);
      EXPECT_EQ(comp.isotypic.dim(), comp.multiplicity * comp.representative.dim());
    }
  }
}
