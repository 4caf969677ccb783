// Acceptance criteria: one test per criterion, each with its own time limit.
#include <gtest/gtest.h>

#include <chrono>
#include <random>

#include "hallforge/f1_module.hpp"
#include "hallforge/finite_field.hpp"
#include "hallforge/flag_groupoid.hpp"
#include "hallforge/fq_module.hpp"
#include "hallforge/hall_engine.hpp"
#include "hallforge/symfunc.hpp"
#include "hallforge/zelevinsky.hpp"
#include "oracles.hpp"
#include "random_groupoids.hpp"

using namespace hallforge;

namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::vector<Partition> partitions_upto(int size) {
  std::vector<Partition> out;
  for (int n = 0; n <= size; ++n)
    for (const auto& p : partitions_of(n)) out.push_back(p);
  return out;
}

SymFunc from_counts(const std::map<Partition, BigInt>& counts) {
  SymFunc f;
  for (const auto& [label, c] : counts) f.add(label, QPoly::constant(c));
  return f;
}

}  // namespace

TEST(Acceptance, SmallHallProducts) {
  const Stopwatch clock;
  for (int p : {2, 3, 5}) {
    ASSERT_EQ(hall_constant_direct(p, Partition{1, 1}, Partition{1}, Partition{1}), p + 1);
    ASSERT_EQ(hall_constant_direct(p, Partition{2}, Partition{1}, Partition{1}), 1);
    ASSERT_EQ(hall_constant_direct(p, Partition{1, 1, 1}, Partition{1, 1}, Partition{1}), p * p + p + 1);
    ASSERT_EQ(hall_constant_direct(p, Partition{2, 1}, Partition{1, 1}, Partition{1}), 1);
    ASSERT_EQ(hall_constant_direct(p, Partition{3}, Partition{1, 1}, Partition{1}), 0);
  }
  EXPECT_LT(clock.seconds(), 5.0);
}

TEST(Acceptance, SubspaceCountsAreQBinomials) {
  const Stopwatch clock;
  for (int q : {2, 3, 4})
    for (int total = 0; total <= 5; ++total) {
      const auto space = module_of_type(q, Partition::column(total), 1);
      for (int m = 0; m <= total; ++m) {
        BigInt count = 0;
        for_each_submodule_of_dim(space, m, [&](const Matrix&) { ++count; });
        ASSERT_EQ(count, q_binomial(total, m).eval(BigInt(q))) << q << " " << total << " " << m;
      }
    }
  EXPECT_LT(clock.seconds(), 10.0);
}

TEST(Acceptance, InversionAndAreaStatistics) {
  const Stopwatch clock;
  for (int n = 0; n <= 8; ++n) ASSERT_EQ(inversion_partition_function(n), q_factorial(n)) << n;
  for (int total = 0; total <= 14; ++total)
    for (int m = 0; m <= total; ++m)
      ASSERT_EQ(lattice_area_partition_function(m, total - m), q_binomial(total, m)) << m << " " << total - m;
  EXPECT_LT(clock.seconds(), 10.0);
}

TEST(Acceptance, F1tConstantsAreHallPolynomialsAtOne) {
  const Stopwatch clock;
  for (const auto& lambda : partitions_upto(5))
    for (int k = 0; k <= lambda.size(); ++k)
      for (const auto& mu : partitions_of(lambda.size() - k))
        for (const auto& nu : partitions_of(k))
          ASSERT_EQ(f1t_hall_constant(lambda, mu, nu), hall_polynomial(lambda, mu, nu).eval(BigInt(1)))
              << lambda << mu << nu;
  EXPECT_LT(clock.seconds(), 60.0);
}

TEST(Acceptance, ElementaryProductsBySubobjectsAndMatrices) {
  const Stopwatch clock;
  for (const auto& lambda : partitions_upto(6)) {
    const auto by_subobjects = f1t_elementary_product(lambda);
    HallElement by_matrices;
    for (const auto& mu : partitions_of(lambda.size())) {
      const BigInt c = count_zero_one_matrices(mu, lambda);
      if (c != 0) by_matrices.add(mu, Rational(c));
    }
    ASSERT_EQ(by_subobjects, by_matrices) << lambda;
    ASSERT_EQ(elementary_product_expansion(lambda), by_subobjects) << lambda;
  }
  EXPECT_LT(clock.seconds(), 30.0);
}

TEST(Acceptance, ZelevinskyPolynomialsCountFlags) {
  const Stopwatch clock;
  for (int n = 0; n <= 5; ++n)
    for (const auto& lambda : partitions_of(n)) {
      std::vector<Partition> columns;
      for (int part : lambda.parts()) columns.push_back(Partition::column(part));
      for (const auto& mu : partitions_of(n)) {
        const QPoly b = b_polynomial(lambda, mu);
        for (int q : {2, 3}) ASSERT_EQ(b.eval(BigInt(q)), flag_count_direct(q, mu, columns)) << lambda << mu;
        ASSERT_TRUE(b_polynomial_shape_independent(lambda, mu)) << lambda << mu;
        ASSERT_EQ(b_polynomial_by_chains(lambda, mu), b) << lambda << mu;
      }
    }
  EXPECT_LT(clock.seconds(), 60.0);
}

TEST(Acceptance, UnitriangularityAndSupport) {
  const Stopwatch clock;
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
        const QPoly b = b_polynomial(lambda, mu);
        if (!dominance_leq(mu, lambda.conjugate())) {
          ASSERT_TRUE(b.is_zero()) << lambda << mu;
        }
        for (const auto& c : b.coeffs()) ASSERT_GE(c, 0) << lambda << mu;
      }
  EXPECT_LT(clock.seconds(), 30.0);
}

TEST(Acceptance, HallPolynomialDegreeBoundAndHeldOutCheck) {
  const Stopwatch clock;
  for (const auto& lambda : partitions_upto(5))
    for (int k = 0; k <= lambda.size(); ++k)
      for (const auto& mu : partitions_of(lambda.size() - k))
        for (const auto& nu : partitions_of(k)) {
          const auto fit = hall_polynomial_fit(lambda, mu, nu);
          const long bound = lambda.n_stat() - mu.n_stat() - nu.n_stat();
          ASSERT_EQ(fit.degree_bound, bound);
          ASSERT_LE(fit.poly.degree(), std::max(bound, -1L)) << lambda << mu << nu;
          ASSERT_GE(fit.samples.size(), 2u) << lambda << mu << nu;
          for (const auto& [q, value] : fit.samples) {
            ASSERT_EQ(fit.poly.eval(q), value) << lambda << mu << nu << " q=" << q;
            ASSERT_EQ(hall_constant_direct(static_cast<int>(q), lambda, mu, nu), value);
          }
        }
  EXPECT_LT(clock.seconds(), 120.0);
}

TEST(Acceptance, SymmetricFunctionImages) {
  const Stopwatch clock;
  for (int n = 0; n <= 8; ++n)
    for (const auto& lambda : partitions_of(n))
      ASSERT_EQ(elementary_to_monomial(lambda), from_counts(oracle::elementary_in_monomials(lambda))) << lambda;
  for (int n = 0; n <= 5; ++n)
    for (const auto& lambda : partitions_of(n)) {
      ASSERT_EQ(phi_image(lambda), SymFunc::monomial(lambda)) << lambda;
      ASSERT_EQ(hall_littlewood_image(lambda).specialized(1), SymFunc::monomial(lambda)) << lambda;
    }
  EXPECT_LT(clock.seconds(), 60.0);
}

TEST(Acceptance, GreenCompatibility) {
  const Stopwatch clock;
  for (int q : {2, 3}) {
    const FqBackend vect(q, 1);
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= 3; ++b) {
        const auto report = green_compatibility_check(vect, Partition::column(a), Partition::column(b));
        ASSERT_TRUE(report.ok) << q << " " << a << " " << b << ": " << report.detail;
      }
    for (int n = 0; n <= 3; ++n) {
      const auto delta = coproduct_prime(vect, HallElement::basis(Partition::column(n)));
      TensorElement expected;
      for (int k = 0; k <= n; ++k)
        expected.add({Partition::column(k), Partition::column(n - k)},
                     Rational(1, boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(k * (n - k)))));
      ASSERT_EQ(delta, expected) << q << " " << n;
    }
  }
  EXPECT_LT(clock.seconds(), 60.0);
}

TEST(Acceptance, GroupoidCalculus) {
  const Stopwatch clock;
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const int degree = 1 + static_cast<int>(rng() % 7);
    const auto group = fixtures::random_group(degree, 720, rng);
    ASSERT_EQ(action_groupoid(degree, group)->cardinality(), Rational(degree, static_cast<int>(group.size())));
  }
  for (int trial = 0; trial < 20; ++trial) {
    const auto [f, g] = fixtures::random_cospan(rng);
    const auto p = two_pullback(f, g);
    ASSERT_EQ(matrix_product(pullback_matrix(g), pushforward_matrix(f)),
              matrix_product(pushforward_matrix(p.to_right), pullback_matrix(p.to_left)));
  }
  for (int trial = 0; trial < 20; ++trial) {
    const auto [f, g] = fixtures::random_cospan(rng);
    std::vector<Rational> per_class;
    for (int c = 0; c < f.target->class_count(); ++c) per_class.emplace_back(static_cast<int>(rng() % 9) - 4, 1 + static_cast<int>(rng() % 4));
    GroupoidFunction phi{f.target, {}};
    for (int y = 0; y < f.target->object_count(); ++y)
      phi.values.push_back(per_class[static_cast<std::size_t>(f.target->iso_class(y))]);
    const auto lhs = pushforward(f, pullback_fn(f, phi));
    const auto ones = pushforward(f, constant_function(f.source, 1));
    for (int y = 0; y < f.target->object_count(); ++y) ASSERT_EQ(lhs(y), phi(y) * ones(y));
  }
  EXPECT_LT(clock.seconds(), 30.0);
}

TEST(Acceptance, AbstractHallAlgebra) {
  const Stopwatch clock;
  const int q = 2, bound = 2;
  const auto span = truncated_hall_span(q, bound);
  const auto matrix = span_to_linear_map(span);
  const auto s1 = truncated_flag_groupoid(q, 1, bound);
  const auto& g1 = *s1->groupoid();
  const auto& pairs = *span.left.target;
  std::vector<int> class_of_dim(static_cast<std::size_t>(bound + 1), -1);
  for (int c = 0; c < g1.class_count(); ++c) class_of_dim[static_cast<std::size_t>(s1->flag(g1.representative(c)).dim)] = c;
  const FqBackend vect(q, 1);
  for (int a = 0; a <= bound; ++a)
    for (int b = 0; b <= bound; ++b) {
      const int object = g1.representative(class_of_dim[static_cast<std::size_t>(a)]) * g1.object_count() +
                         g1.representative(class_of_dim[static_cast<std::size_t>(b)]);
      const int column = pairs.iso_class(object);
      const auto product =
          hall_multiply_opposite(vect, HallElement::basis(Partition::column(a)), HallElement::basis(Partition::column(b)));
      for (int c = 0; c <= bound; ++c)
        ASSERT_EQ(matrix[static_cast<std::size_t>(class_of_dim[static_cast<std::size_t>(c)])][static_cast<std::size_t>(column)],
                  product.coeff(Partition::column(c)))
            << a << " " << b << " " << c;
    }
  for (int field : {2, 3}) {
    const auto report = two_segal_cardinality_check(field, 2);
    ASSERT_TRUE(report.ok) << field << ": " << report.detail;
  }
  EXPECT_LT(clock.seconds(), 120.0);
}

TEST(Acceptance, DerivedHallConstant) {
  const Stopwatch clock;
  for (int total = 0; total <= 4; ++total)
    for (int m = 0; m <= total; ++m) {
      DerivedHomData data;
      data.hom_with_cone = count_injections(2, m, total);
      data.aut = gl_order(2, m);
      ASSERT_EQ(derived_hall_constant(data), Rational(q_binomial(total, m).eval(BigInt(2)))) << m << " " << total;
    }
  EXPECT_LT(clock.seconds(), 5.0);
}
