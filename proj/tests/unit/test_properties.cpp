#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "entropy_checks.hpp"
#include "oracles.hpp"
#include "random_actions.hpp"

using namespace algdyn;

namespace {

IntVec random_n(testgen::Gen& gen, std::size_t d, long bound) {
  while (true) {
    IntVec n(d);
    bool nonzero = false;
    for (auto& x : n) nonzero |= (x = gen.uniform(-bound, bound)) != 0;
    if (nonzero) return n;
  }
}

}  // namespace

TEST(OracleSelfCheck, YuzvinskiiClassicalValues) {
  auto x2 = oracle::yuzvinskii(QMatrix::from_ints({{2}}));
  EXPECT_EQ(x2.padic.at(Int(2)), Rat(1));
  EXPECT_NEAR(static_cast<double>(x2.total()), std::log(2.0), 1e-15);
  auto cat = oracle::yuzvinskii(QMatrix::from_ints({{2, 1}, {1, 1}}));
  EXPECT_TRUE(cat.padic.empty());
  EXPECT_NEAR(static_cast<double>(cat.total()), std::log((3 + std::sqrt(5.0)) / 2), 1e-15);
  // 3/2 contracts only at the prime 3.
  auto half = oracle::yuzvinskii(QMatrix::scalar(1, Rat(3, 2)));
  EXPECT_EQ(half.padic.at(Int(3)), Rat(1));
  EXPECT_NEAR(static_cast<double>(half.total()), std::log(3.0), 1e-15);
}

TEST(OracleSelfCheck, BrutePadicClusters) {
  // x^2 + 1 at 5, zeta = (2 + i, 2 - i): roots 2 and 3 mod 5.
  auto c = oracle::brute_padic_clusters(RatPoly::from_ints({1, 0, 1}), {RatPoly::from_ints({2, 1}),
                                                                       RatPoly::from_ints({2, -1})},
                                        Int(5));
  ASSERT_TRUE(c);
  ASSERT_EQ(c->size(), 2u);
  EXPECT_EQ((*c)[0], (oracle::Cluster{{Rat(-1), Rat(0)}, 1}));
  EXPECT_EQ((*c)[1], (oracle::Cluster{{Rat(0), Rat(-1)}, 1}));
  EXPECT_FALSE(oracle::brute_padic_clusters(RatPoly::from_ints({1, 0, 1}), {RatPoly::from_ints({0, 1})}, Int(3)));
}

TEST(EntropyProperty, MatchesEigenvalueOracle) {
  testgen::Gen gen(61);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t d = gen.uniform(1, 3);
    auto a = SolenoidAction::make(gen.action(6, d));
    auto wa = analyze_weights(a);
    for (int s = 0; s < 3; ++s) {
      IntVec n = random_n(gen, d, 2);
      EXPECT_EQ(checks::yuzvinskii(a, wa, n), "") << "trial " << trial;
    }
  }
}

TEST(EntropyProperty, FlagAndClassAdditivitySymmetryHomogeneity) {
  testgen::Gen gen(62);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t d = gen.uniform(1, 3);
    auto wa = analyze_weights(gen.action(6, d));
    IntVec n = random_n(gen, d, 3);
    EXPECT_EQ(checks::flag_additivity(wa, n), "") << "trial " << trial;
    EXPECT_EQ(checks::class_additivity(wa, n), "") << "trial " << trial;
    EXPECT_EQ(checks::symmetry(wa, n), "") << "trial " << trial;
    EXPECT_EQ(checks::homogeneity(wa, n, 3), "") << "trial " << trial;
  }
}

TEST(EntropyProperty, ContributionBoundedByTotal) {
  testgen::Gen gen(63);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t d = gen.uniform(1, 3);
    auto wa = analyze_weights(gen.action(5, d));
    IntVec n = random_n(gen, d, 3);
    auto r = haar_entropy(wa, n);
    std::vector<std::size_t> stable;
    for (const auto& c : r.per_class) stable.push_back(c.cls);
    for (std::size_t mask = 0; mask + 1 < (1u << stable.size()); ++mask) {
      std::vector<std::size_t> v;
      for (std::size_t i = 0; i < stable.size(); ++i)
        if (mask >> i & 1) v.push_back(stable[i]);
      auto h = entropy_contribution(wa, n, v);
      // Proper subsets fall strictly short.
      EXPECT_TRUE((r.total.value() - h.value()).is_positive()) << "trial " << trial << " mask " << mask;
    }
  }
}

TEST(JordanChevalleyProperty, RandomMatrices) {
  testgen::Gen gen(64);
  for (int trial = 0; trial < 40; ++trial) {
    QMatrix a = trial % 2 ? gen.jordan_type(6) : gen.rational_matrix(gen.uniform(1, 5), 6);
    EXPECT_EQ(checks::jordan_chevalley_check(a), "") << a.str();
  }
}

TEST(WeightProperty, PadicWeightsMatchBruteForce) {
  testgen::Gen gen(65);
  auto primes = oracle::small_primes(200);
  int compared = 0;
  for (int trial = 0; trial < 400 && compared < 20; ++trial) {
    int k = static_cast<int>(gen.uniform(1, 3));
    RatPoly f = gen.irreducible(k, 8);
    long p = primes[gen.uniform(0, primes.size() - 1)];
    std::vector<RatPoly> gs;
    for (int j = 0; j < 2; ++j) gs.push_back(gen.element(k, 30, {1, p}) * Rat(p, 1));
    auto brute = oracle::brute_padic_clusters(f, gs, Int(p));
    if (!brute) continue;
    auto got = padic_weights(make_number_field_action(f, gs), Int(p));
    std::vector<oracle::Cluster> lib;
    for (const auto& w : got) lib.push_back({w.exact, w.delta});
    std::sort(lib.begin(), lib.end());
    EXPECT_EQ(lib, *brute) << f.str() << " at " << p;
    ++compared;
  }
  EXPECT_EQ(compared, 20);
}
