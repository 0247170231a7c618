#include <gtest/gtest.h>

#include "algdyn/errors.hpp"
#include "algdyn/jordan.hpp"
#include "algdyn/subspace.hpp"
#include "oracles.hpp"
#include "random_actions.hpp"

using namespace algdyn;

namespace {

RatPoly P(std::vector<long> c) { return RatPoly::from_ints(c); }

QMatrix M(std::initializer_list<std::initializer_list<long>> rows) { return QMatrix::from_ints(rows); }

}  // namespace

TEST(Charpoly, Examples) {
  EXPECT_EQ(charpoly(QMatrix::identity(2)), P({1, -2, 1}));
  EXPECT_EQ(minpoly(QMatrix::identity(2)), P({-1, 1}));
  EXPECT_EQ(charpoly(M({{0, -2}, {2, 0}})), P({4, 0, 1}));
  QMatrix c = QMatrix::companion(P({-1, -1, 1}));
  EXPECT_EQ(charpoly(c), P({-1, -1, 1}));
  EXPECT_EQ(minpoly(c), P({-1, -1, 1}));
  EXPECT_THROW(charpoly(QMatrix(2, 3)), DomainError);
}

TEST(Charpoly, MatchesFaddeevLeVerrierAndCayleyHamilton) {
  testgen::Gen gen(11);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t m = gen.uniform(1, 6);
    QMatrix a(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) a(i, j) = gen.frac(gen.uniform(-9, 9), gen.uniform(1, 3));
    RatPoly chi = charpoly(a);
    EXPECT_EQ(chi, oracle::charpoly_fl(a));
    EXPECT_TRUE(evaluate(chi, a).is_zero());
    RatPoly mu = minpoly(a);
    EXPECT_TRUE((chi % mu).is_zero());
    EXPECT_TRUE(evaluate(mu, a).is_zero());
  }
}

TEST(LinearAlgebra, KernelInverseSolve) {
  QMatrix a = M({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  EXPECT_EQ(rank(a), 2u);
  auto ker = kernel(a);
  ASSERT_EQ(ker.size(), 1u);
  EXPECT_TRUE(is_zero_vector(a.apply(ker[0])));
  EXPECT_THROW(inverse(a), DomainError);
  QMatrix b = M({{2, 1}, {1, 1}});
  EXPECT_TRUE((b * inverse(b)).is_identity());
  EXPECT_EQ(determinant(b), Rat(1));
  auto x = solve(b, {Rat(3), Rat(2)});
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, (RatVec{Rat(1), Rat(1)}));
}

TEST(Subspace, CanonicalBasis) {
  auto s = QSubspace::span({{Rat(2), Rat(4)}, {Rat(1), Rat(2)}}, 2);
  EXPECT_EQ(s.dim(), 1u);
  EXPECT_EQ(s.basis()[0], (RatVec{Rat(1), Rat(2)}));
  auto t = QSubspace::span({{Rat(-3), Rat(-6)}}, 2);
  EXPECT_EQ(s, t);
  auto e1 = QSubspace::span({{Rat(1), Rat(0)}}, 2);
  EXPECT_TRUE(s.intersect(e1).is_zero());
  EXPECT_TRUE(s.sum(e1).is_whole());
  EXPECT_TRUE(e1.is_invariant(M({{2, 1}, {0, 3}})));
  EXPECT_EQ(e1.quotient(M({{2, 1}, {0, 3}})), M({{3}}));
}

TEST(JordanChevalley, SingleJordanBlock) {
  auto jc = jordan_chevalley(M({{2, 1}, {0, 2}}));
  EXPECT_EQ(jc.semisimple, QMatrix::scalar(2, 2));
  QMatrix u = M({{1, 0}, {0, 1}});
  u(0, 1) = Rat(1, 2);
  EXPECT_EQ(jc.unipotent, u);
}

TEST(JordanChevalley, SemisimpleHasTrivialUnipotent) {
  QMatrix a = M({{0, 1}, {1, 0}});
  auto jc = jordan_chevalley(a);
  EXPECT_EQ(jc.semisimple, a);
  EXPECT_TRUE(jc.unipotent.is_identity());
}

TEST(JordanChevalley, BlockDiagonalMixIsBlockwise) {
  QMatrix a = M({{2, 1}, {0, 2}}), b = M({{0, 1}, {1, 0}});
  auto ja = jordan_chevalley(a), jb = jordan_chevalley(b);
  auto j = jordan_chevalley(block_diag(a, b));
  EXPECT_EQ(j.semisimple, block_diag(ja.semisimple, jb.semisimple));
  EXPECT_EQ(j.unipotent, block_diag(ja.unipotent, jb.unipotent));
  EXPECT_THROW(jordan_chevalley(M({{1, 1}, {1, 1}})), DomainError);
}

TEST(JordanChevalley, UniqueUnderConjugationAndCommutesWithCommutant) {
  testgen::Gen gen(12);
  for (int trial = 0; trial < 30; ++trial) {
    auto gens = gen.action(5, 2);
    const QMatrix& a = gens[0];
    auto jc = jordan_chevalley(a);
    QMatrix p = gen.unimodular(a.rows(), 6), pinv = inverse(p);
    auto jp = jordan_chevalley(p * a * pinv);
    EXPECT_EQ(jp.semisimple, p * jc.semisimple * pinv);
    EXPECT_EQ(jp.unipotent, p * jc.unipotent * pinv);
    EXPECT_TRUE(commute(jc.semisimple, gens[1]));
    EXPECT_TRUE(commute(jc.unipotent, gens[1]));
  }
}

TEST(Commutant, Examples) {
  EXPECT_EQ(commutant({QMatrix::scalar(2, 2)}).size(), 4u);
  EXPECT_EQ(commutant({QMatrix::companion(P({-1, -1, 1}))}).size(), 2u);
  EXPECT_EQ(commutant({M({{0, -2}, {2, 0}}), QMatrix::scalar(2, 3)}).size(), 2u);
  EXPECT_THROW(commutant({QMatrix::identity(2), QMatrix::identity(3)}), DomainError);
}

TEST(Commutant, InvariantUnderConjugation) {
  testgen::Gen gen(13);
  for (int trial = 0; trial < 30; ++trial) {
    auto gens = gen.action(5, 2);
    auto base = commutant(gens);
    for (const auto& b : base)
      for (const auto& g : gens) EXPECT_TRUE(commute(b, g));
    QMatrix p = gen.unimodular(gens[0].rows(), 5), pinv = inverse(p);
    for (auto& g : gens) g = p * g * pinv;
    EXPECT_EQ(commutant(gens).size(), base.size());
  }
}
