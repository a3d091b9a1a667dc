#include <gtest/gtest.h>

#include "qalloc/errors.hpp"
#include "qalloc/esw.hpp"
#include "qalloc/oracle.hpp"
#include "qalloc/welfare.hpp"
#include "random_instances.hpp"

using namespace qalloc;

namespace {

const Quantile half(1, 2);
const Quantile third(1, 3);

Instance goods(std::vector<Quantile> taus, std::vector<std::vector<Value>> rows) {
  return Instance(Kind::goods, std::move(taus), rows);
}

std::vector<Quantile> same(int n, Quantile tau) { return std::vector<Quantile>(n, tau); }

}  // namespace

TEST(ZeroOnePartition, SplitsObjectiveZeros) {
  const auto p = zero_one_partition(goods({half, half}, {{1, 0, 0}, {0, 0, 1}}));
  EXPECT_EQ(p.zeros, (std::vector<int>{1}));
  EXPECT_EQ(p.ones, (std::vector<int>{0, 2}));
}

TEST(BalancedEswBinary, WorkedExample) {
  const Instance inst = goods({half, half}, {{1, 1, 0, 0}, {1, 0, 1, 1}});
  const SolveReport r = balanced_esw_binary(inst);
  EXPECT_TRUE(r.feasible);
  EXPECT_EQ(r.welfare, 1);
  EXPECT_EQ(r.allocation.owner, (std::vector<int>{0, 0, 1, 1}));
}

TEST(BalancedEswBinary, ZeroRowIsInfeasible) {
  const SolveReport r = balanced_esw_binary(goods({half, half}, {{0, 0, 0, 0}, {1, 1, 1, 1}}));
  EXPECT_FALSE(r.feasible);
  EXPECT_EQ(r.welfare, 0);
  EXPECT_TRUE(is_balanced(r.allocation, 2));
}

TEST(BalancedEswBinary, AllOnes) {
  EXPECT_EQ(balanced_esw_binary(goods({half, third}, {{1, 1}, {1, 1}})).welfare, 1);
}

TEST(BalancedEsw, GeneralValues) {
  const Instance inst = goods({half, half}, {{5, 4, 1, 0}, {5, 1, 3, 2}});
  const SolveReport r = balanced_esw(inst);
  EXPECT_EQ(r.welfare, 2);
  EXPECT_EQ(opt_welfare(inst, Objective::esw, true).welfare, 2);
  EXPECT_EQ(balanced_esw(goods({half, half}, {{4, 4}, {4, 4}})).welfare, 4);
  EXPECT_EQ(balanced_esw(goods({half, half}, {{0, 0}, {4, 4}})).welfare, 0);
}

TEST(FracHalf, WorkedExample) {
  // items g1=(1,0), g2=(0,1), g3=(0,0), g4=(1,1)
  const Instance inst = goods(same(2, half), {{1, 0, 0, 1}, {0, 1, 0, 1}});
  const SolveReport r = unbalanced_esw_binary_frac(inst, 1);
  EXPECT_TRUE(r.feasible);
  EXPECT_EQ(esw(inst, r.allocation), 1);
  EXPECT_EQ(opt_welfare(inst, Objective::esw, false).welfare, 1);
}

TEST(FracHalf, TooManyObjectiveZeros) {
  // |M_1| = 3, |M_0| = 2: 2 > 1*3 - 2
  const Instance three_two = goods(same(2, half), {{1, 1, 1, 0, 0}, {1, 1, 1, 0, 0}});
  EXPECT_FALSE(unbalanced_esw_binary_frac(three_two, 1).feasible);
  EXPECT_EQ(opt_welfare(three_two, Objective::esw, false).welfare, 0);
  // |M_1| = 4, |M_0| = 2
  const Instance four_two = goods(same(2, half), {{1, 1, 1, 1, 0, 0}, {1, 1, 1, 1, 0, 0}});
  EXPECT_TRUE(unbalanced_esw_binary_frac(four_two, 1).feasible);
  EXPECT_EQ(opt_welfare(four_two, Objective::esw, false).welfare, 1);
}

TEST(FracHalf, NoZerosWithSaturatingMatching) {
  EXPECT_TRUE(unbalanced_esw_binary_frac(goods(same(2, half), {{1, 0}, {0, 1}}), 1).feasible);
}

TEST(FracHalf, BoundaryOfTheZeroCondition) {
  // |M_0| = t|M_1| exceeds t|M_1| - n
  const Instance inst = goods(same(2, half), {{1, 1, 0, 0}, {1, 1, 0, 0}});
  EXPECT_FALSE(unbalanced_esw_binary_frac(inst, 1).feasible);
}

TEST(FracHalf, RejectsOtherQuantiles) {
  EXPECT_THROW(unbalanced_esw_binary_frac(goods(same(2, third), {{1}, {1}}), 1), InvalidInput);
}

TEST(Third, WorkedExample) {
  const Instance inst = goods(same(2, third), {{1, 1, 1, 0, 0}, {0, 0, 0, 1, 0}});
  const SolveReport r = unbalanced_esw_binary_third(inst);
  EXPECT_TRUE(r.feasible);
  EXPECT_EQ(esw(inst, r.allocation), 1);
  EXPECT_EQ(opt_welfare(inst, Objective::esw, false).welfare, 1);
}

TEST(Third, TooManyZeros) {
  // five 1-items: one per agent plus a single offsetting pair, against two zeros
  const Instance inst = goods(same(3, third), {{1, 1, 1, 1, 1, 0, 0},
                                               {1, 1, 1, 1, 1, 0, 0},
                                               {1, 1, 1, 1, 1, 0, 0}});
  EXPECT_FALSE(unbalanced_esw_binary_third(inst).feasible);
  EXPECT_EQ(opt_welfare(inst, Objective::esw, false).welfare, 0);
}

TEST(Tau0AndTau1, Examples) {
  const Quantile z = Quantile::zero(), o = Quantile::one();
  EXPECT_FALSE(unbalanced_esw_binary_tau0(goods(same(2, z), {{1, 0}, {1, 0}})).feasible);
  EXPECT_TRUE(unbalanced_esw_binary_tau1(goods(same(2, o), {{1, 0, 0}, {0, 1, 0}})).feasible);
  EXPECT_FALSE(unbalanced_esw_binary_tau1(goods(same(2, o), {{1, 0}, {1, 0}})).feasible);
}

TEST(UnbalancedEsw, Dispatch) {
  EXPECT_EQ(esw_family(goods(same(2, half), {{1}, {1}})), EswFamily::frac);
  EXPECT_EQ(esw_family(goods(same(2, Quantile(3, 4)), {{1}, {1}})), EswFamily::frac);
  EXPECT_EQ(esw_family(goods(same(2, third), {{1}, {1}})), EswFamily::third);
  EXPECT_EQ(esw_family(goods(same(2, Quantile::zero()), {{1}, {1}})), EswFamily::tau0);
  EXPECT_EQ(esw_family(goods(same(2, Quantile::one()), {{1}, {1}})), EswFamily::tau1);
}

TEST(UnbalancedEsw, IntractableQuantile) {
  try {
    unbalanced_esw(goods(same(2, Quantile(1, 4)), {{1, 2}, {3, 4}}));
    FAIL() << "expected Unsupported";
  } catch (const Unsupported& e) {
    EXPECT_NE(std::string(e.what()).find("intractable quantile"), std::string::npos);
  }
  EXPECT_THROW(unbalanced_esw(goods({half, third}, {{1}, {1}})), Unsupported);
}

TEST(UnbalancedEsw, GeneralValues) {
  const Instance all_v = goods(same(2, Quantile(2, 3)), {{6, 6, 6}, {6, 6, 6}});
  EXPECT_EQ(unbalanced_esw(all_v).welfare, 6);
  const Instance inst = goods(same(2, half), {{5, 4, 1, 0}, {5, 1, 3, 2}});
  EXPECT_EQ(unbalanced_esw(inst).welfare, opt_welfare(inst, Objective::esw, false).welfare);
}

TEST(IdenticalEsw, UnevenZeroSplitBeatsEvenSpread) {
  // Threshold 7 leaves three 1-items and four zeros. Two zeros cost two
  // 1-items at tau = 2/3, so the even (2, 2) split needs four; (1, 3) needs three.
  const Quantile two_thirds(2, 3);
  const Instance inst = goods(same(2, two_thirds), {{1, 0, 7, 8, 5, 6, 8}, {1, 0, 7, 8, 5, 6, 8}});
  const SolveReport r = identical_unbalanced_esw(inst);
  EXPECT_EQ(r.welfare, 7);
  EXPECT_EQ(opt_welfare(inst, Objective::esw, false).welfare, 7);
  EXPECT_EQ(esw(inst, r.allocation), 7);
}

TEST(IdenticalEsw, RequiresIdenticalRows) {
  EXPECT_THROW(identical_unbalanced_esw(goods(same(2, half), {{1, 0}, {0, 1}})), InvalidInput);
  EXPECT_THROW(identical_unbalanced_esw(goods({half, third}, {{1, 0}, {1, 0}})), InvalidInput);
}

// --- properties --------------------------------------------------------------

TEST(EswProperty, BalancedBinaryMatchesOracle) {
  fuzz::Rng rng(41);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = rng.uniform(1, 3);
    const int m = n * rng.uniform(1, 8 / n);
    const Instance inst =
        fuzz::random_instance(rng, Kind::goods, fuzz::random_quantiles(rng, n), m, 1);
    const SolveReport r = balanced_esw_binary(inst);
    ASSERT_TRUE(is_balanced(r.allocation, n));
    ASSERT_EQ(r.feasible, opt_welfare(inst, Objective::esw, true).welfare == 1);
  }
}

TEST(EswProperty, ThresholdMonotonicity) {
  // feasibility at nu + 1 implies feasibility at nu
  fuzz::Rng rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = rng.uniform(1, 3);
    const int m = rng.uniform(1, 7);
    const Instance inst = fuzz::random_instance(rng, Kind::goods, same(n, half), m, 6);
    bool prev = true;
    for (Value nu = 1; nu <= 7; ++nu) {
      const bool ok = unbalanced_esw_binary_frac(threshold_binary(inst, nu), 1).feasible;
      ASSERT_TRUE(prev || !ok);
      prev = ok;
    }
  }
}
