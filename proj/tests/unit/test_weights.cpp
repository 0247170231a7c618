#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "algdyn/errors.hpp"
#include "algdyn/newton_polygon.hpp"
#include "algdyn/weights.hpp"
#include "fixtures.hpp"
#include "random_actions.hpp"

using namespace algdyn;
using namespace fixtures;

namespace {

const double kLog2 = std::log(2.0), kLog3 = std::log(3.0), kLogPhi = std::log((1 + std::sqrt(5.0)) / 2);

NumberFieldAction rational23() {
  return make_number_field_action(P({0, 1}), {RatPoly::constant(2), RatPoly::constant(3)});
}

// Class whose members all live at the given prime (0 for archimedean).
std::size_t class_at(const WeightAnalysis& wa, long prime) {
  for (std::size_t c = 0; c < wa.partition.classes.size(); ++c) {
    const auto& w = wa.weights[wa.partition.classes[c].representative()];
    if (prime == 0 ? !w.is_padic() : (w.is_padic() && w.place.prime == prime)) return c;
  }
  ADD_FAILURE() << "no class at " << prime;
  return 0;
}

}  // namespace

TEST(BadPrimes, Examples) {
  EXPECT_EQ(bad_primes(times23()).primes, (std::vector<Int>{2, 3}));
  EXPECT_TRUE(bad_primes(SolenoidAction::make({M({{2, 1}, {1, 1}})})).primes.empty());
  EXPECT_EQ(bad_primes(alpha2()).primes, (std::vector<Int>{2, 3}));
  QMatrix half = M({{1, 0}, {0, 1}});
  half(0, 1) = Rat(1, 5);
  EXPECT_EQ(bad_primes(SolenoidAction::make({half})).primes, (std::vector<Int>{5}));
}

TEST(ArchimedeanWeights, Examples) {
  auto q = archimedean_weights(rational23());
  ASSERT_EQ(q.size(), 1u);
  EXPECT_EQ(q[0].delta, 1u);
  EXPECT_NEAR(q[0].entries[0].mid_double(), kLog2, 1e-15);
  EXPECT_NEAR(q[0].entries[1].mid_double(), kLog3, 1e-15);

  auto g = archimedean_weights(make_number_field_action(P({-1, -1, 1}), {P({0, 1})}));
  ASSERT_EQ(g.size(), 2u);
  std::vector<double> vals{g[0].entries[0].mid_double(), g[1].entries[0].mid_double()};
  std::sort(vals.begin(), vals.end());
  EXPECT_NEAR(vals[0], -kLogPhi, 1e-15);
  EXPECT_NEAR(vals[1], kLogPhi, 1e-15);
  for (const auto& w : g) {
    EXPECT_EQ(w.delta, 1u);
    EXPECT_LT(w.entries[0].width(), 1e-30);
  }

  auto c = archimedean_weights(make_number_field_action(P({4, 0, 1}), {P({0, 1}), RatPoly::constant(3)}));
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].delta, 2u);
  EXPECT_NEAR(c[0].entries[0].mid_double(), kLog2, 1e-15);
  EXPECT_NEAR(c[0].entries[1].mid_double(), kLog3, 1e-15);
}

TEST(PadicWeights, Examples) {
  auto at2 = padic_weights(rational23(), Int(2));
  ASSERT_EQ(at2.size(), 1u);
  EXPECT_EQ(at2[0].delta, 1u);
  EXPECT_EQ(at2[0].exact, (std::vector<Rat>{-1, 0}));
  auto at3 = padic_weights(rational23(), Int(3));
  ASSERT_EQ(at3.size(), 1u);
  EXPECT_EQ(at3[0].exact, (std::vector<Rat>{0, -1}));

  auto ram = padic_weights(make_number_field_action(P({-1, -1, 1}), {P({2, 1})}), Int(5));
  ASSERT_EQ(ram.size(), 1u);
  EXPECT_EQ(ram[0].delta, 2u);
  EXPECT_EQ(ram[0].exact, (std::vector<Rat>{Rat(-1, 2)}));

  auto unit = padic_weights(make_number_field_action(P({-1, -1, 1}), {P({0, 1})}), Int(11));
  ASSERT_EQ(unit.size(), 1u);
  EXPECT_TRUE(unit[0].zero);
  EXPECT_EQ(unit[0].delta, 2u);
}

TEST(PadicWeights, SplitPrimeSeparatesEmbeddings) {
  // x^2 + 1 splits at 5 as (x - 2)(x + 2); 2 + i has valuation 1 at one root only.
  auto w = padic_weights(make_number_field_action(P({1, 0, 1}), {P({2, 1}), P({2, -1})}), Int(5));
  ASSERT_EQ(w.size(), 2u);
  std::vector<std::vector<Rat>> got{w[0].exact, w[1].exact};
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got[0], (std::vector<Rat>{-1, 0}));
  EXPECT_EQ(got[1], (std::vector<Rat>{0, -1}));
}

TEST(CoarseClasses, Examples) {
  auto wa = analyze_weights(times23());
  ASSERT_EQ(wa.partition.classes.size(), 3u);
  const auto& arch = wa.weights[wa.partition.classes[class_at(wa, 0)].representative()];
  EXPECT_NEAR(arch.entries[0].mid_double(), kLog2, 1e-15);
  EXPECT_EQ(wa.weights[wa.partition.classes[class_at(wa, 2)].representative()].exact, (std::vector<Rat>{-1, 0}));
  EXPECT_EQ(wa.weights[wa.partition.classes[class_at(wa, 3)].representative()].exact, (std::vector<Rat>{0, -1}));
  for (const auto& c : wa.partition.classes) EXPECT_EQ(c.certainty, Certainty::Exact);

  auto twice = analyze_weights(direct_sum(times23(), times23()));
  ASSERT_EQ(twice.partition.classes.size(), 3u);
  for (const auto& c : twice.partition.classes) EXPECT_EQ(c.dimension, 2u);

  QMatrix t = QMatrix::companion(P({-1, -1, 1}));
  auto gold = analyze_weights(std::vector<QMatrix>{t, t + QMatrix::identity(2)});
  ASSERT_EQ(gold.partition.classes.size(), 2u);
  for (const auto& c : gold.partition.classes) EXPECT_EQ(c.members.size(), 1u);
}

TEST(CoarseClasses, OrderIndependentAndIdempotent) {
  auto wa = analyze_weights(direct_sum(times23(), SolenoidAction::make({sqrt2(1, 1), QMatrix::scalar(2, 3)})));
  auto base = coarse_classes(wa.weights);
  auto sizes = [](const ClassPartition& p) {
    std::vector<std::size_t> out;
    for (const auto& c : p.classes) out.push_back(c.members.size());
    std::sort(out.begin(), out.end());
    return out;
  };
  std::vector<WeightVector> rev(wa.weights.rbegin(), wa.weights.rend());
  auto flipped = coarse_classes(rev);
  EXPECT_EQ(sizes(base), sizes(flipped));
  // Same grouping after mapping indices back.
  std::size_t n = wa.weights.size();
  for (const auto& c : base.classes) {
    std::vector<std::size_t> mapped;
    for (auto i : c.members) mapped.push_back(n - 1 - i);
    std::sort(mapped.begin(), mapped.end());
    bool found = false;
    for (const auto& f : flipped.classes) found |= f.members == mapped;
    EXPECT_TRUE(found);
  }
  std::vector<WeightVector> reps;
  for (const auto& c : base.classes) reps.push_back(wa.weights[c.representative()]);
  EXPECT_EQ(coarse_classes(reps).classes.size(), base.classes.size());
}

TEST(Horospherical, Examples) {
  auto wa = analyze_weights(times23());
  auto h = stable_horospherical(wa, {1, 1});
  std::vector<std::size_t> expect{class_at(wa, 2), class_at(wa, 3)};
  std::sort(expect.begin(), expect.end());
  EXPECT_EQ(h.stable, expect);
  EXPECT_EQ(h.dimension, 2u);
  EXPECT_EQ(h.split, (std::vector<std::pair<std::string, unsigned>>{{"2", 1}, {"3", 1}}));
  EXPECT_EQ(h.unstable, (std::vector<std::size_t>{class_at(wa, 0)}));

  auto back = stable_horospherical(wa, {-1, -1});
  EXPECT_EQ(back.stable, (std::vector<std::size_t>{class_at(wa, 0)}));
  EXPECT_EQ(back.split, (std::vector<std::pair<std::string, unsigned>>{{"inf", 1}}));

  auto zero = stable_horospherical(wa, {0, 0});
  EXPECT_TRUE(zero.stable.empty());
  EXPECT_EQ(zero.dimension, 0u);

  auto edge = stable_horospherical(wa, {1, 0});
  EXPECT_EQ(edge.neutral, (std::vector<std::size_t>{class_at(wa, 3)}));
}

TEST(Exposed, Examples) {
  auto wa = analyze_weights(times23());
  std::vector<std::size_t> v{class_at(wa, 2), class_at(wa, 3)};
  auto both = exposed_classes(wa, v);
  ASSERT_EQ(both.size(), 2u);
  for (const auto& r : both) {
    EXPECT_EQ(r.verdict, Exposure::Exposed);
    EXPECT_EQ(r.certainty, Certainty::Exact);
    ASSERT_TRUE(r.witness);
    // chi . n' = 0 for the class itself, < 0 for the other.
    for (auto c : v) {
      const auto& w = wa.weights[wa.partition.classes[c].representative()];
      Rat s = w.exact[0] * (*r.witness)[0] + w.exact[1] * (*r.witness)[1];
      if (c == r.cls)
        EXPECT_EQ(s, 0);
      else
        EXPECT_LT(s, 0);
    }
  }

  auto single = exposed_classes(wa, {class_at(wa, 0)});
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0].verdict, Exposure::Exposed);

  auto gold = analyze_weights(SolenoidAction::make({QMatrix::companion(P({-1, -1, 1}))}));
  ASSERT_EQ(gold.partition.classes.size(), 2u);
  for (const auto& r : exposed_classes(gold, {0, 1})) EXPECT_EQ(r.verdict, Exposure::NotExposed);
}

TEST(ProductFormula, Examples) {
  auto two = make_number_field_action(P({0, 1}), {RatPoly::constant(2)});
  Interval r = check_product_formula(two, {1});
  EXPECT_TRUE(r.contains_zero());
  EXPECT_LT(r.width(), 1e-30);
  EXPECT_TRUE(check_product_formula(rational23(), {1, 1}).contains_zero());

  auto ram = make_number_field_action(P({-1, -1, 1}), {P({2, 1})});
  testgen::Gen gen(41);
  for (int i = 0; i < 20; ++i) {
    Interval res = check_product_formula(ram, {gen.uniform(-30, 30)});
    EXPECT_TRUE(res.contains_zero());
    EXPECT_LT(res.width(), 1e-9);
  }
}

TEST(WeightSign, CertifiesUnitModulusAsZero) {
  // (3 + 4i)/5 has modulus 1 but infinite order, so its weight vanishes exactly.
  auto nf = make_number_field_action(P({1, 0, 1}), {RatPoly({Rat(3, 5), Rat(4, 5)})});
  auto arch = archimedean_weights(nf);
  ASSERT_EQ(arch.size(), 1u);
  EXPECT_TRUE(arch[0].zero);
}

TEST(WeightProperty, ProductFormulaPerGenerator) {
  testgen::Gen gen(42);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t d = gen.uniform(1, 3);
    auto gens = gen.action(5, d);
    auto wa = analyze_weights(gens);
    for (std::size_t b = 0; b < wa.blocks.size(); ++b) {
      for (std::size_t j = 0; j < d; ++j) {
        Interval sum(wa.config.bits);
        for (const auto& w : wa.weights)
          if (w.block == b) sum += w.entries[j].scaled(Rat(w.delta));
        EXPECT_TRUE(sum.contains_zero()) << "block " << b << " generator " << j;
      }
      unsigned arch = 0;
      for (const auto& w : wa.weights)
        if (w.block == b && !w.is_padic()) arch += w.delta;
      EXPECT_EQ(arch, wa.blocks[b].nf.degree());
    }
  }
}

TEST(WeightProperty, PadicMarginalsMatchNewtonPolygons) {
  testgen::Gen gen(43);
  for (int trial = 0; trial < 40; ++trial) {
    auto nf = gen.field_action(static_cast<int>(gen.uniform(1, 4)), 2, 6, 6, {1, 2, 3});
    for (long p : {2L, 3L, 5L}) {
      auto w = padic_weights(nf, Int(p));
      for (std::size_t j = 0; j < 2; ++j) {
        std::vector<Rat> got;
        for (const auto& c : w)
          for (unsigned i = 0; i < c.delta; ++i) got.push_back(-c.exact[j]);
        std::sort(got.begin(), got.end());
        IntVec e(2, 0);
        e[j] = 1;
        EXPECT_EQ(got, newton_polygon(element_charpoly(nf, e), Int(p)).root_valuations());
      }
    }
  }
}

TEST(HorosphericalProperty, StableAndUnstableSwapUnderNegation) {
  testgen::Gen gen(44);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t d = gen.uniform(1, 3);
    auto wa = analyze_weights(gen.action(5, d));
    IntVec n(d), neg(d);
    for (std::size_t j = 0; j < d; ++j) neg[j] = -(n[j] = gen.uniform(-3, 3));
    auto a = stable_horospherical(wa, n), b = stable_horospherical(wa, neg);
    EXPECT_EQ(a.stable, b.unstable);
    EXPECT_EQ(a.unstable, b.stable);
    EXPECT_EQ(a.neutral, b.neutral);
    EXPECT_EQ(a.stable.size() + a.unstable.size() + a.neutral.size(), wa.partition.classes.size());
  }
}
