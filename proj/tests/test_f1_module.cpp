#include <gtest/gtest.h>

#include "hallforge/errors.hpp"
#include "hallforge/f1_module.hpp"
#include "oracles.hpp"

using namespace hallforge;

namespace {

std::vector<Partition> upto(int size) {
  std::vector<Partition> out;
  for (int n = 0; n <= size; ++n)
    for (const auto& p : partitions_of(n)) out.push_back(p);
  return out;
}

// Every nilpotent pointed-set map on {1..n} whose non-basepoint fibers have at
// most one element.
std::vector<std::vector<int>> all_forests(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> action(static_cast<std::size_t>(n), 0);
  std::vector<char> used(static_cast<std::size_t>(n + 1), 0);
  auto acyclic = [&] {
    for (int x = 1; x <= n; ++x) {
      int y = x;
      for (int steps = 0; y != 0; ++steps) {
        if (steps > n) return false;
        y = action[static_cast<std::size_t>(y - 1)];
      }
    }
    return true;
  };
  std::function<void(int)> fill = [&](int x) {
    if (x == n) {
      if (acyclic()) out.push_back(action);
      return;
    }
    for (int y = 0; y <= n; ++y) {
      if (y == x + 1 || (y != 0 && used[static_cast<std::size_t>(y)])) continue;
      action[static_cast<std::size_t>(x)] = y;
      used[static_cast<std::size_t>(y)] = y != 0;
      fill(x + 1);
      used[static_cast<std::size_t>(y)] = 0;
    }
  };
  fill(0);
  return out;
}

}  // namespace

TEST(F1Module, PointedSetConstants) {
  EXPECT_EQ(f1_hall_constant(1, 1), 2);
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(f1_hall_constant(n, 0), 1);
  EXPECT_EQ(f1_hall_constant(2, 2), 6);
  for (int total = 0; total <= 12; ++total)
    for (int m = 0; m <= total; ++m)
      ASSERT_EQ(f1_hall_constant(total - m, m), binomial(static_cast<unsigned>(total), static_cast<unsigned>(m)));
}

TEST(F1Module, TypeExamples) {
  EXPECT_EQ(f1t_type(F1tModule{}), Partition{});
  // the eight-element forest with chains of lengths 3, 2, 2, 1
  const F1tModule drawn({2, 3, 0, 5, 0, 0, 6, 0});
  EXPECT_EQ(f1t_type(drawn), (Partition{3, 2, 2, 1}));
  EXPECT_EQ(f1t_type(F1tModule(std::vector<int>(5, 0))), Partition::column(5));
  EXPECT_EQ(f1t_type(f1t_module_of_type(Partition{3, 2, 2, 1})), (Partition{3, 2, 2, 1}));
  EXPECT_EQ(f1t_module_of_type(Partition{}).size(), 0);
  EXPECT_EQ(f1t_module_of_type(Partition{2}).chains().size(), 1u);
}

TEST(F1Module, RejectsNonForests) {
  EXPECT_THROW(F1tModule({1}), std::invalid_argument);        // fixed point
  EXPECT_THROW(F1tModule({2, 1}), std::invalid_argument);     // cycle
  EXPECT_THROW(F1tModule({3, 3, 0}), std::invalid_argument);  // two preimages
  EXPECT_THROW(F1tModule({4}), std::invalid_argument);        // out of range
}

TEST(F1Module, DualHasTheSameType) {
  for (int n = 0; n <= 8; ++n)
    for (const auto& action : all_forests(n)) {
      const F1tModule m(action);
      ASSERT_EQ(f1t_type(m.dual()), f1t_type(m));
      ASSERT_EQ(m.dual().dual(), m);
    }
}

TEST(F1Module, EnumerationExamples) {
  const auto two_points = f1t_module_of_type(Partition{1, 1});
  EXPECT_EQ(f1t_enumerate_submodules(two_points, Partition{1}, Partition{1}).size(), 2u);
  EXPECT_EQ(f1t_enumerate_submodules(f1t_module_of_type(Partition{2}), Partition{1}, Partition{1}).size(), 1u);
  const auto m = f1t_module_of_type(Partition{3, 1});
  EXPECT_EQ(f1t_enumerate_submodules(m, Partition{3, 1}, Partition{}).size(), 1u);
  for (const auto& s : f1t_enumerate_submodules(m)) EXPECT_TRUE(f1t_is_subobject(m, s));
}

TEST(F1Module, HallConstantExamples) {
  EXPECT_EQ(f1t_hall_constant(Partition{1, 1}, Partition{1}, Partition{1}), 2);
  EXPECT_EQ(f1t_hall_constant(Partition{2}, Partition{1}, Partition{1}), 1);
  EXPECT_EQ(f1t_hall_constant(Partition{1, 1, 1}, Partition{1, 1}, Partition{1}), 3);
}

TEST(F1Module, HallConstantsMatchSubsetListing) {
  for (const auto& lambda : upto(6))
    for (int k = 0; k <= lambda.size(); ++k)
      for (const auto& mu : partitions_of(lambda.size() - k))
        for (const auto& nu : partitions_of(k)) {
          const BigInt value = f1t_hall_constant(lambda, mu, nu);
          ASSERT_EQ(value, oracle::f1t_hall_constant(lambda, mu, nu)) << lambda << mu << nu;
          ASSERT_EQ(value, f1t_hall_constant(lambda, nu, mu)) << lambda << mu << nu;
        }
}

TEST(F1Module, ZeroOneMatrixExamples) {
  EXPECT_EQ(count_zero_one_matrices(Partition{1}, Partition{1}), 1);
  EXPECT_EQ(count_zero_one_matrices(Partition{2, 1}, Partition{1, 1, 1}), 3);
  EXPECT_EQ(count_zero_one_matrices(Partition{2, 1}, Partition{2, 1}), 1);
  EXPECT_EQ(count_zero_one_matrices(Partition{2}, Partition{1}), 0);
}

TEST(F1Module, ZeroOneMatricesMatchListing) {
  for (int n = 0; n <= 5; ++n)
    for (const auto& cols : partitions_of(n))
      for (const auto& rows : partitions_of(n)) {
        const int r = rows.length(), c = cols.length();
        int count = 0;
        for (std::uint32_t mask = 0; mask < (1u << (r * c)); ++mask) {
          bool ok = true;
          for (int i = 0; i < r && ok; ++i) {
            int sum = 0;
            for (int j = 0; j < c; ++j) sum += (mask >> (i * c + j)) & 1u;
            ok = sum == rows[static_cast<std::size_t>(i)];
          }
          for (int j = 0; j < c && ok; ++j) {
            int sum = 0;
            for (int i = 0; i < r; ++i) sum += (mask >> (i * c + j)) & 1u;
            ok = sum == cols[static_cast<std::size_t>(j)];
          }
          count += ok;
        }
        ASSERT_EQ(count_zero_one_matrices(cols, rows), count) << cols << rows;
      }
}

TEST(F1Module, ElementaryProductExamples) {
  EXPECT_EQ(elementary_product_expansion(Partition{1}), HallElement::basis(Partition{1}));
  EXPECT_EQ(elementary_product_expansion(Partition{1, 1}),
            HallElement::basis(Partition{1, 1}, 2) + HallElement::basis(Partition{2}));
  EXPECT_EQ(elementary_product_expansion(Partition{2, 1}),
            HallElement::basis(Partition{2, 1}) + HallElement::basis(Partition{1, 1, 1}, 3));
}

TEST(F1Module, ModifiedMatrixIsUnitriangular) {
  for (int n = 0; n <= 8; ++n)
    for (const auto& lambda : partitions_of(n))
      for (const auto& mu : partitions_of(n)) {
        const BigInt a = count_zero_one_matrices(lambda.conjugate(), mu);
        if (mu == lambda) {
          ASSERT_EQ(a, 1) << lambda;
        }
        if (!dominance_leq(mu, lambda)) {
          ASSERT_EQ(a, 0) << lambda << mu;
        }
      }
}

TEST(F1Module, Bounds) {
  EXPECT_THROW(f1t_elementary_product(Partition::column(kF1SizeBound + 1)), BoundError);
}
