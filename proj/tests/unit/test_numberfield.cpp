#include <gtest/gtest.h>

#include "algdyn/errors.hpp"
#include "fixtures.hpp"
#include "random_actions.hpp"

using namespace algdyn;
using namespace fixtures;

namespace {

void expect_consistent(const NumberFieldAction& nf, const std::vector<QMatrix>& block) {
  QMatrix binv = inverse(nf.basis_map);
  for (std::size_t j = 0; j < block.size(); ++j)
    EXPECT_EQ(binv * block[j] * nf.basis_map, multiplication_matrix(nf.multipliers[j], nf.f));
}

Rat norm_of(const NumberFieldAction& nf, const IntVec& n) {
  RatPoly chi = element_charpoly(nf, n);
  Rat c = chi.coeff(0);
  return nf.degree() % 2 ? -c : c;
}

}  // namespace

TEST(Diagonalize, RationalBlock) {
  auto a = times23();
  auto nf = diagonalize_block(a.generators);
  EXPECT_EQ(nf.degree(), 1u);
  EXPECT_EQ(element(nf, {1, 0}), RatPoly::constant(2));
  EXPECT_EQ(element(nf, {0, 1}), RatPoly::constant(3));
  expect_consistent(nf, a.generators);
}

TEST(Diagonalize, GaussianBlock) {
  auto a = alpha2();
  auto nf = diagonalize_block(a.generators);
  ASSERT_EQ(nf.degree(), 2u);
  expect_consistent(nf, a.generators);
  // zeta_1 = 2i, zeta_2 = 3 whatever primitive element was chosen.
  EXPECT_EQ(element_minpoly({nf.f, nf.multipliers[0]}), P({4, 0, 1}));
  EXPECT_EQ(nf.multipliers[1], RatPoly::constant(3));
}

TEST(Diagonalize, GoldenCompanion) {
  QMatrix c = QMatrix::companion(P({-1, -1, 1}));
  auto nf = diagonalize_block({c});
  EXPECT_EQ(nf.f, P({-1, -1, 1}));
  EXPECT_EQ(element_minpoly({nf.f, nf.multipliers[0]}), P({-1, -1, 1}));
  expect_consistent(nf, {c});
  EXPECT_THROW(diagonalize_block({M({{2, 0}, {0, 3}})}), DomainError);
}

TEST(ElementCharpoly, Examples) {
  auto q = make_number_field_action(P({0, 1}), {RatPoly::constant(2), RatPoly::constant(3)});
  EXPECT_EQ(element_charpoly(q, {1, 1}), P({-6, 1}));
  auto g = diagonalize_block(alpha2().generators);
  EXPECT_EQ(element_charpoly(g, {4, 0}), P({-16, 1}).pow(2));
  auto s = make_number_field_action(P({-2, 0, 1}), {P({1, 1})});
  EXPECT_EQ(element_charpoly(s, {1}), P({-1, -2, 1}));
  EXPECT_EQ(element_charpoly(s, {-1}), P({-1, 2, 1}));
}

TEST(RootOfUnity, Examples) {
  EXPECT_EQ(is_root_of_unity({P({-2, 0, 1}), RatPoly::constant(-1)}), 2ul);
  EXPECT_EQ(is_root_of_unity({P({1, 0, 1}), P({0, 1})}), 4ul);
  EXPECT_FALSE(is_root_of_unity({P({-2, 0, 1}), P({1, 1})}));
  EXPECT_EQ(is_root_of_unity({P({1, 1, 1}), P({0, 1})}), 3ul);
  EXPECT_EQ(is_root_of_unity({P({1, 1, 1}), P({1, 1})}), 6ul);
  EXPECT_FALSE(is_root_of_unity({P({1, 0, 1}), P({1, 1})}));
  // (3 + 4i)/5 has modulus one at both places but is not an algebraic integer.
  RatPoly z({Rat(3, 5), Rat(4, 5)});
  EXPECT_FALSE(is_root_of_unity({P({1, 0, 1}), z}));
  EXPECT_THROW(is_root_of_unity({P({1, 0, 1}), RatPoly()}), DomainError);
}

TEST(Embeddings, Examples) {
  auto same = embeddings_between(P({-2, 0, 1}), P({-2, 0, 1}));
  ASSERT_EQ(same.size(), 2u);
  for (const auto& e : same) EXPECT_TRUE(substitute(P({-2, 0, 1}), e.value, e.field).is_zero());
  EXPECT_TRUE(embeddings_between(P({-2, 0, 1}), P({-3, 0, 1})).empty());
  auto gauss = embeddings_between(P({4, 0, 1}), P({1, 0, 1}));
  ASSERT_EQ(gauss.size(), 2u);
  std::vector<RatPoly> images{gauss[0].value, gauss[1].value};
  EXPECT_TRUE((images[0] == P({0, 2}) && images[1] == P({0, -2})) ||
              (images[0] == P({0, -2}) && images[1] == P({0, 2})));
  // Q(sqrt 2) sits in Q(2^{1/4}) in two ways.
  EXPECT_EQ(embeddings_between(P({-2, 0, 1}), P({-2, 0, 0, 0, 1})).size(), 2u);
}

TEST(NormProperty, Multiplicative) {
  testgen::Gen gen(31);
  for (int trial = 0; trial < 40; ++trial) {
    auto nf = gen.field_action(static_cast<int>(gen.uniform(1, 4)), 2, 5, 4, {1, 2});
    IntVec n{gen.uniform(-2, 2), gen.uniform(-2, 2)}, m{gen.uniform(-2, 2), gen.uniform(-2, 2)};
    IntVec nm{n[0] + m[0], n[1] + m[1]}, neg{-n[0], -n[1]};
    EXPECT_EQ(norm_of(nf, nm), norm_of(nf, n) * norm_of(nf, m));
    EXPECT_EQ(norm_of(nf, n) * norm_of(nf, neg), Rat(1));
    EXPECT_EQ(element_charpoly(nf, n), charpoly(multiplication_matrix(element(nf, n), nf.f)));
  }
}

TEST(RootOfUnityProperty, OrderIsExact) {
  for (unsigned k = 1; k <= 30; ++k) {
    if (euler_phi(k) > 8) continue;
    RatPoly f = cyclotomic(k);
    for (int e = 1; e <= 6; ++e) {
      RatPoly x = powmod(RatPoly::x(), e, f);
      auto r = is_root_of_unity({f, x});
      ASSERT_TRUE(r);
      EXPECT_EQ(powmod(x, static_cast<long>(*r), f), RatPoly::constant(1));
      for (unsigned long s = 1; s < *r; ++s)
        if (*r % s == 0) {
          EXPECT_NE(powmod(x, static_cast<long>(s), f), RatPoly::constant(1));
        }
    }
  }
}
