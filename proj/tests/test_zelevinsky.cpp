#include <gtest/gtest.h>

#include "hallforge/errors.hpp"
#include "hallforge/f1_module.hpp"
#include "hallforge/fq_module.hpp"
#include "hallforge/zelevinsky.hpp"

using namespace hallforge;

namespace {

std::vector<Partition> columns_of(const Partition& lambda) {
  std::vector<Partition> out;
  for (int part : lambda.parts()) out.push_back(Partition::column(part));
  return out;
}

}  // namespace

TEST(Zelevinsky, ArrayEnumerationExamples) {
  const auto single = enumerate_row_strict_arrays(Composition{1}, Partition{1});
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0].rows, (std::vector<std::vector<int>>{{1}}));
  const auto row = enumerate_row_strict_arrays(Composition{2}, Partition{1, 1});
  ASSERT_EQ(row.size(), 1u);
  EXPECT_EQ(row[0].rows, (std::vector<std::vector<int>>{{1, 2}}));
  const auto column = enumerate_row_strict_arrays(Composition{1, 1}, Partition{1, 1});
  EXPECT_EQ(column.size(), 2u);
  for (const auto& a : column) {
    EXPECT_TRUE(a.is_row_strict());
    EXPECT_EQ(a.weight(), (std::vector<int>{1, 1}));
  }
  EXPECT_TRUE(enumerate_row_strict_arrays(Composition{2}, Partition{1}).empty());
  EXPECT_TRUE(enumerate_row_strict_arrays(Composition{2}, Partition{2}).empty());
}

TEST(Zelevinsky, DStatisticExamples) {
  for (const auto& a : enumerate_row_strict_arrays(Composition{1}, Partition{1})) EXPECT_EQ(d_statistic(a), 0);
  // the lower cell comes first: x = (1,1), y = (2,1) with A(x) < A(y) < infinity
  RowStrictArray straight{Composition{1, 1}, {{1}, {2}}};
  EXPECT_EQ(d_statistic(straight), 1);
  RowStrictArray swapped{Composition{1, 1}, {{2}, {1}}};
  EXPECT_EQ(d_statistic(swapped), 0);
  // shape lambda with weight lambda' has a single array, with d = 0
  for (int n = 1; n <= 6; ++n)
    for (const auto& lambda : partitions_of(n)) {
      const auto arrays = enumerate_row_strict_arrays(Composition(lambda), lambda.conjugate());
      ASSERT_EQ(arrays.size(), 1u) << lambda;
      ASSERT_EQ(d_statistic(arrays[0]), 0) << lambda;
    }
}

TEST(Zelevinsky, BPolynomialExamples) {
  EXPECT_EQ(b_polynomial(Partition{1, 1}, Partition{2}), QPoly{1});
  EXPECT_EQ(b_polynomial(Partition{1, 1}, Partition{1, 1}), (QPoly{1, 1}));
  EXPECT_EQ(b_polynomial(Partition{2}, Partition{1, 1}), QPoly{1});
  EXPECT_EQ(b_polynomial(Partition{2}, Partition{2}), QPoly{});
  EXPECT_THROW(b_polynomial(Partition{2, 1}, Partition{2, 1}, Composition{2, 2}), std::invalid_argument);
}

TEST(Zelevinsky, FlagCountsAtSmallFields) {
  for (int n = 0; n <= 5; ++n)
    for (const auto& lambda : partitions_of(n))
      for (const auto& mu : partitions_of(n)) {
        const QPoly b = b_polynomial(lambda, mu);
        for (int q : {2, 3}) ASSERT_EQ(b.eval(BigInt(q)), flag_count_direct(q, mu, columns_of(lambda))) << lambda << mu;
        ASSERT_EQ(b.eval(BigInt(1)), count_zero_one_matrices(lambda, mu));
        ASSERT_TRUE(b_polynomial_shape_independent(lambda, mu)) << lambda << mu;
        ASSERT_EQ(b_polynomial_by_chains(lambda, mu), b) << lambda << mu;
      }
}

TEST(Zelevinsky, SupportAndPositivity) {
  for (int n = 0; n <= 7; ++n)
    for (const auto& lambda : partitions_of(n)) {
      ASSERT_EQ(b_polynomial(lambda, lambda.conjugate()), QPoly{1}) << lambda;
      for (const auto& mu : partitions_of(n)) {
        const QPoly b = b_polynomial(lambda, mu);
        if (!dominance_leq(mu, lambda.conjugate())) {
          ASSERT_TRUE(b.is_zero()) << lambda << mu;
        }
        for (const auto& c : b.coeffs()) ASSERT_GE(c, 0);
      }
    }
}

TEST(Zelevinsky, ChainStepStatistic) {
  // removing the cell (2,1) from (1,1); it precedes the kept cell (1,1)
  EXPECT_EQ(chain_step_statistic(Composition{1, 1}, Composition{1, 0}), 1);
  EXPECT_EQ(chain_step_statistic(Composition{1, 1}, Composition{0, 1}), 0);
  EXPECT_EQ(chain_step_statistic(Composition{2}, Composition{1}), 0);
}

TEST(Zelevinsky, Rearrangements) {
  EXPECT_EQ(rearrangements(Partition{2, 1, 1}).size(), 3u);
  EXPECT_EQ(rearrangements(Partition{}).size(), 1u);
  EXPECT_EQ(rearrangements(Partition{3, 2, 1}).size(), 6u);
}
