#include <gtest/gtest.h>

#include <algorithm>

#include "qalloc/errors.hpp"
#include "qalloc/welfare.hpp"
#include "random_instances.hpp"

using namespace qalloc;

namespace {

Instance goods(std::vector<Quantile> taus, std::vector<std::vector<Value>> rows) {
  return Instance(Kind::goods, std::move(taus), rows);
}

Instance chores(std::vector<Quantile> taus, std::vector<std::vector<Value>> rows) {
  return Instance(Kind::chores, std::move(taus), rows);
}

const Quantile half(1, 2);

}  // namespace

TEST(Instance, RejectsBadShapes) {
  EXPECT_THROW(goods({half}, {{1, 2}, {3, 4}}), InvalidInput);
  EXPECT_THROW(goods({half, half}, {{1, 2}, {3}}), InvalidInput);
  EXPECT_THROW(goods({half}, {{1, -2}}), InvalidInput);
  EXPECT_THROW(goods({}, {}), InvalidInput);
}

TEST(Instance, Predicates) {
  const Instance a = goods({half, half}, {{1, 0, 1}, {1, 0, 1}});
  EXPECT_TRUE(a.is_binary());
  EXPECT_TRUE(a.has_identical_rows());
  EXPECT_TRUE(a.is_homogeneous());
  EXPECT_THROW(a.balanced_size(), InvalidInput);
  const Instance b = goods({half, Quantile::one()}, {{1, 2}, {1, 0}});
  EXPECT_FALSE(b.is_binary());
  EXPECT_FALSE(b.has_identical_rows());
  EXPECT_FALSE(b.is_homogeneous());
  EXPECT_EQ(b.balanced_size(), 1);
}

TEST(Allocation, Validation) {
  const Instance inst = goods({half, half}, {{1, 2, 3}, {3, 2, 1}});
  EXPECT_NO_THROW(validate(inst, Allocation{{0, 1, 1}}));
  EXPECT_THROW(validate(inst, Allocation{{0, 1}}), InvalidInput);
  EXPECT_THROW(validate(inst, Allocation{{0, 2, 1}}), InvalidInput);
  EXPECT_THROW(validate(inst, Allocation{{0, -1, 1}}), InvalidInput);
  EXPECT_TRUE(is_balanced(Allocation{{0, 1, 1, 0}}, 2));
  EXPECT_FALSE(is_balanced(Allocation{{0, 1, 1, 1}}, 2));
  EXPECT_EQ((Allocation{{1, 0, 1}}.bundle(1)), (std::vector<int>{0, 2}));
}

TEST(BundleValue, GoodsAtTheMedian) {
  const Instance inst = goods({half}, {{3, 7, 2}});
  const std::vector<int> all{0, 1, 2};
  EXPECT_EQ(bundle_value(inst, 0, all), 3);
}

TEST(BundleValue, ChoresPessimistTakesTheWorstChore) {
  const Instance inst = chores({Quantile::zero()}, {{3, 7, 2}});
  const std::vector<int> all{0, 1, 2};
  EXPECT_EQ(bundle_value(inst, 0, all), 7);
  const Instance optimist = chores({Quantile::one()}, {{3, 7, 2}});
  EXPECT_EQ(bundle_value(optimist, 0, all), 2);
}

TEST(BundleValue, EmptyBundleIsZero) {
  const Instance inst = goods({Quantile::one()}, {{3, 7, 2}});
  EXPECT_EQ(bundle_value(inst, 0, std::vector<int>{}), 0);
}

TEST(Welfare, GreedyExampleAllocation) {
  const Instance inst = goods({half, half}, {{5, 4, 1, 0}, {5, 1, 3, 2}});
  const Allocation a{{0, 0, 1, 1}};
  EXPECT_EQ(usw(inst, a), 6);
  EXPECT_EQ(esw(inst, a), 2);
}

TEST(Welfare, ZeroMatrices) {
  const Instance g = goods({half, half}, {{0, 0, 0}, {0, 0, 0}});
  EXPECT_EQ(usw(g, Allocation{{0, 1, 0}}), 0);
  EXPECT_EQ(esw(g, Allocation{{0, 1, 0}}), 0);
  const Instance c = chores({half, half}, {{0, 0, 0}, {0, 0, 0}});
  EXPECT_EQ(usc(c, Allocation{{0, 1, 0}}), 0);
  EXPECT_EQ(esc(c, Allocation{{0, 1, 0}}), 0);
}

TEST(Welfare, OptimistWithOneFreeChore) {
  const Instance c = chores({Quantile::one(), half}, {{0, 5, 9}, {1, 1, 1}});
  EXPECT_EQ(esc(c, Allocation{{0, 0, 0}}), 0);
}

TEST(Welfare, SetCoverExampleAllocation) {
  const Instance c = chores({Quantile::zero(), Quantile::zero()}, {{1, 1, 9}, {9, 9, 2}});
  EXPECT_EQ(usc(c, Allocation{{0, 0, 1}}), 3);
}

TEST(Welfare, KindMismatchIsRejected) {
  const Instance g = goods({half}, {{1}});
  EXPECT_THROW(usc(g, Allocation{{0}}), InvalidInput);
  EXPECT_THROW(evaluate(g, Allocation{{0}}, Objective::esc), InvalidInput);
  EXPECT_EQ(evaluate(g, Allocation{{0}}, Objective::usw), 1);
}

TEST(Objective, NamesRoundTrip) {
  for (Objective o : {Objective::usw, Objective::esw, Objective::usc, Objective::esc}) {
    EXPECT_EQ(parse_objective(to_string(o)), o);
  }
  EXPECT_THROW(parse_objective("max"), InvalidInput);
  EXPECT_TRUE(is_cost(Objective::esc));
  EXPECT_EQ(kind_of(Objective::usc), Kind::chores);
}

TEST(Threshold, Examples) {
  const Instance inst = goods({half}, {{5, 4, 1, 0}});
  EXPECT_EQ(threshold_binary(inst, 2).values(), (std::vector<Value>{1, 1, 0, 0}));
  const Instance positive = goods({half}, {{3, 1, 2}});
  EXPECT_EQ(threshold_binary(positive, 1).values(), (std::vector<Value>{1, 1, 1}));
  EXPECT_EQ(threshold_binary(positive, 4).values(), (std::vector<Value>{0, 0, 0}));
  EXPECT_THROW(threshold_binary(positive, 0), InvalidInput);
}

// --- properties --------------------------------------------------------------

TEST(BundleValueProperty, MemberOfTheBundleAndPermutationInvariant) {
  fuzz::Rng rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const int m = rng.uniform(1, 8);
    const Kind kind = trial % 2 ? Kind::goods : Kind::chores;
    const Instance inst =
        fuzz::random_instance(rng, kind, fuzz::random_quantiles(rng, 1), m, 20);
    std::vector<int> bundle;
    for (int g = 0; g < m; ++g) {
      if (rng.chance(0.6)) bundle.push_back(g);
    }
    if (bundle.empty()) bundle.push_back(0);
    const Value v = bundle_value(inst, 0, bundle);
    ASSERT_TRUE(std::ranges::any_of(bundle, [&](int g) { return inst.value(0, g) == v; }));
    std::shuffle(bundle.begin(), bundle.end(), rng.engine());
    ASSERT_EQ(bundle_value(inst, 0, bundle), v);
  }
}

TEST(BundleValueProperty, ScalingScalesTheValue) {
  fuzz::Rng rng(12);
  for (int trial = 0; trial < 1000; ++trial) {
    const int m = rng.uniform(1, 7);
    const int n = rng.uniform(1, 3);
    const Kind kind = trial % 2 ? Kind::goods : Kind::chores;
    const Instance inst =
        fuzz::random_instance(rng, kind, fuzz::random_quantiles(rng, n), m, 9);
    const Value c = rng.uniform(1, 5);
    std::vector<Value> scaled = inst.values();
    for (Value& v : scaled) v *= c;
    const Instance big(kind, inst.quantiles(), scaled, m);
    const Allocation a = fuzz::random_allocation(rng, n, m, false);
    if (kind == Kind::goods) {
      ASSERT_EQ(usw(big, a), c * usw(inst, a));
      ASSERT_EQ(esw(big, a), c * esw(inst, a));
    } else {
      ASSERT_EQ(usc(big, a), c * usc(inst, a));
      ASSERT_EQ(esc(big, a), c * esc(inst, a));
    }
  }
}

TEST(BundleValueProperty, HigherQuantileNeverLowersGoodsValue) {
  fuzz::Rng rng(13);
  for (int trial = 0; trial < 1000; ++trial) {
    const int m = rng.uniform(1, 8);
    const Instance inst = fuzz::random_instance(rng, Kind::goods, {Quantile::zero()}, m, 9);
    std::vector<int> all(m);
    for (int g = 0; g < m; ++g) all[g] = g;
    Value prev = -1;
    for (const Quantile& tau : fuzz::small_quantiles()) {
      const Instance at(Kind::goods, {tau}, inst.values(), m);
      const Value v = bundle_value(at, 0, all);
      ASSERT_GE(v, prev);
      prev = v;
    }
  }
}

TEST(ThresholdProperty, BinaryOutputAndMonotoneInNu) {
  fuzz::Rng rng(14);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = rng.uniform(1, 3);
    const int m = rng.uniform(1, 6);
    const Instance inst =
        fuzz::random_instance(rng, Kind::goods, fuzz::random_quantiles(rng, n), m, 9);
    for (Value nu = 1; nu <= 10; ++nu) {
      const Instance lo = threshold_binary(inst, nu);
      const Instance hi = threshold_binary(inst, nu + 1);
      ASSERT_TRUE(lo.is_binary());
      for (std::size_t e = 0; e < lo.values().size(); ++e) {
        ASSERT_GE(lo.values()[e], hi.values()[e]);
      }
    }
  }
}
