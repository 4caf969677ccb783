#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "hallforge/errors.hpp"
#include "hallforge/qpoly.hpp"

using namespace hallforge;

namespace {

// Sum of q^{inv(sigma)} over all permutations, by listing them.
QPoly inversions_by_listing(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<BigInt> coeffs(static_cast<std::size_t>(n * (n - 1) / 2 + 1), 0);
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inv += perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)];
    coeffs[static_cast<std::size_t>(inv)] += 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return QPoly(coeffs);
}

}  // namespace

TEST(QPoly, Arithmetic) {
  const QPoly a{1, 1};
  EXPECT_EQ(a * a, (QPoly{1, 2, 1}));
  EXPECT_EQ(a - a, QPoly{});
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ((QPoly{1, 2, 1}).divide_exact(a), a);
  EXPECT_THROW((QPoly{1, 0, 1}).divide_exact(a), VerificationError);
  EXPECT_EQ((QPoly{1, 1, 1}).eval(BigInt(3)), 13);
  EXPECT_EQ(poly_gcd(QPoly{1, 2, 1}, QPoly{-1, 0, 1}).primitive_part(), a);
}

TEST(QPoly, Text) {
  EXPECT_EQ(QPoly{}.to_string("t"), "0");
  EXPECT_EQ((QPoly{1, 1}).to_string("t"), "t + 1");
  EXPECT_EQ((QPoly{1, -1}).to_string("t"), "-t + 1");
  EXPECT_EQ((QPoly{0, 0, 3}).to_string(), "3q^2");
}

TEST(QPoly, QIntegersAndFactorials) {
  EXPECT_EQ(q_int(0), QPoly{});
  EXPECT_EQ(q_int(1), QPoly{1});
  EXPECT_EQ(q_int(3), (QPoly{1, 1, 1}));
  EXPECT_EQ(q_factorial(0), QPoly{1});
  EXPECT_EQ(q_factorial(2), (QPoly{1, 1}));
  EXPECT_EQ(q_factorial(3), (QPoly{1, 2, 2, 1}));
}

TEST(QPoly, QBinomialExamples) {
  EXPECT_EQ(q_binomial(2, 1), (QPoly{1, 1}));
  EXPECT_EQ(q_binomial(4, 2), (QPoly{1, 1, 2, 1, 1}));
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(q_binomial(n, 0), QPoly{1});
  EXPECT_THROW(q_binomial(3, 5), std::invalid_argument);
}

TEST(QPoly, QBinomialSymmetryPascalAndClassicalLimit) {
  for (int n = 0; n <= 16; ++n)
    for (int m = 0; m <= n; ++m) {
      ASSERT_EQ(q_binomial(n, m), q_binomial(n, n - m));
      ASSERT_EQ(q_binomial(n, m).eval(BigInt(1)), binomial(static_cast<unsigned>(n), static_cast<unsigned>(m)));
    }
  // Q(m, n) = [m+n choose m]: Q(m,n) = q^n Q(m-1,n) + Q(m,n-1)
  for (int m = 1; m <= 16; ++m)
    for (int n = 1; m + n <= 16; ++n)
      ASSERT_EQ(q_binomial(m + n, m), q_binomial(m - 1 + n, m - 1).shifted(static_cast<unsigned>(n)) + q_binomial(m + n - 1, m));
}

TEST(QPoly, StatisticExamples) {
  EXPECT_EQ(inversion_partition_function(0), QPoly{1});
  EXPECT_EQ(inversion_partition_function(2), (QPoly{1, 1}));
  EXPECT_EQ(inversion_partition_function(3), (QPoly{1, 2, 2, 1}));
  for (int n = 0; n <= 7; ++n) EXPECT_EQ(inversion_partition_function(n), inversions_by_listing(n));
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(lattice_area_partition_function(0, n), QPoly{1});
  EXPECT_EQ(lattice_area_partition_function(1, 1), (QPoly{1, 1}));
  EXPECT_EQ(lattice_area_partition_function(2, 2), (QPoly{1, 1, 2, 1, 1}));
  EXPECT_THROW(inversion_partition_function(kInversionBound + 1), BoundError);
}

TEST(QPoly, LatticeAreaSumsToQBinomial) {
  for (int len = 0; len <= 8; ++len)
    for (int north = 0; north <= len; ++north) {
      std::vector<BigInt> coeffs(static_cast<std::size_t>(north * (len - north) + 1), 0);
      for (unsigned mask = 0; mask < (1u << len); ++mask) {
        if (__builtin_popcount(mask) != north) continue;
        std::vector<bool> steps(static_cast<std::size_t>(len));
        for (int i = 0; i < len; ++i) steps[static_cast<std::size_t>(i)] = (mask >> i) & 1u;
        coeffs[static_cast<std::size_t>(lattice_path_area(steps))] += 1;
      }
      ASSERT_EQ(QPoly(coeffs), q_binomial(len, north)) << len << " " << north;
    }
}

TEST(QPoly, Interpolation) {
  using S = std::vector<std::pair<BigInt, BigInt>>;
  EXPECT_EQ(interpolate_integer_poly(S{{2, 3}, {3, 4}, {5, 6}}, 1), (QPoly{1, 1}));
  EXPECT_EQ(interpolate_integer_poly(S{{2, 3}, {3, 4}, {4, 5}}, 1), (QPoly{1, 1}));
  EXPECT_EQ(interpolate_integer_poly(S{{2, 1}, {3, 1}}, 0), QPoly{1});
  // the extra sample disagrees with the degree-1 fit
  EXPECT_THROW(interpolate_integer_poly(S{{2, 3}, {3, 4}, {5, 7}}, 1), VerificationError);
}

TEST(QRational, NormalFormAndEvaluation) {
  const QRational half_q = QRational(QPoly{0, 1}, QPoly{0, 0, 1});
  EXPECT_EQ(half_q, QRational::q_power(-1));
  EXPECT_EQ(QRational::q_power(-1).eval(Rational(2)), Rational(1, 2));
  const QRational x = QRational(QPoly{1, 2, 1}, QPoly{1, 1});
  EXPECT_TRUE(x.is_polynomial());
  EXPECT_EQ(x.num(), (QPoly{1, 1}));
  EXPECT_EQ(QRational::q_power(2) * QRational::q_power(-2), QRational(QPoly{1}));
  EXPECT_THROW(QRational(QPoly{1}, QPoly{}), std::domain_error);
}
