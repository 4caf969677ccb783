#include <gtest/gtest.h>

#include "hallforge/groupoid.hpp"
#include "random_groupoids.hpp"

using namespace hallforge;

namespace {

FiniteGroup cyclic(int n) {
  Permutation shift(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) shift[static_cast<std::size_t>(i)] = (i + 1) % n;
  return permutation_group_table(generated_permutation_group(n, {shift}));
}

GroupoidFunction random_class_function(const GroupoidPtr& g, std::mt19937& rng) {
  std::vector<Rational> per_class;
  for (int c = 0; c < g->class_count(); ++c)
    per_class.emplace_back(static_cast<int>(rng() % 7) - 3, 1 + static_cast<int>(rng() % 3));
  GroupoidFunction phi{g, {}};
  for (int x = 0; x < g->object_count(); ++x) phi.values.push_back(per_class[static_cast<std::size_t>(g->iso_class(x))]);
  return phi;
}

}  // namespace

TEST(Groupoid, CardinalityExamples) {
  EXPECT_EQ(point_groupoid()->cardinality(), 1);
  EXPECT_EQ(discrete_groupoid(0)->cardinality(), 0);
  EXPECT_EQ(discrete_groupoid(5)->cardinality(), 5);
  for (int g = 1; g <= 6; ++g) EXPECT_EQ(delooping(cyclic(g))->cardinality(), Rational(1, g));
  // C_2 on three points swapping the outer two
  const auto swap_ends = action_groupoid(3, std::vector<Permutation>{{0, 1, 2}, {2, 1, 0}});
  EXPECT_EQ(swap_ends->cardinality(), Rational(3, 2));
  EXPECT_EQ(swap_ends->profile(), (std::vector<BigInt>{1, 2}));
  const auto free = action_groupoid(4, std::vector<Permutation>{{0, 1, 2, 3}, {3, 2, 1, 0}});
  EXPECT_EQ(free->cardinality(), 2);
  EXPECT_EQ(action_groupoid(4, std::vector<Permutation>{{0, 1, 2, 3}})->cardinality(), 4);
  // the regular action of S_3 on itself
  const auto s3 = generated_permutation_group(3, {{1, 0, 2}, {1, 2, 0}});
  const auto table = permutation_group_table(s3);
  const auto regular = action_groupoid(6, table, [&](int k, int g) { return table.multiply(k, g); });
  EXPECT_EQ(regular->cardinality(), 1);
  EXPECT_EQ(product_groupoid(swap_ends, delooping(cyclic(3)))->cardinality(), Rational(1, 2));
  EXPECT_EQ(disjoint_union({swap_ends, free})->cardinality(), Rational(7, 2));
}

TEST(Groupoid, ActionGroupoidCardinalityIsOrbitCounting) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int degree = 1 + static_cast<int>(rng() % 6);
    const auto group = fixtures::random_group(degree, 120, rng);
    const auto g = action_groupoid(degree, group);
    ASSERT_EQ(g->cardinality(), Rational(degree, static_cast<int>(group.size())));
    ASSERT_TRUE(g->validate().ok);
  }
}

TEST(Groupoid, RejectsBadInput) {
  EXPECT_THROW(permutation_group_table({{1, 0, 2}}), std::invalid_argument);
  const auto table = cyclic(2);
  EXPECT_THROW(action_groupoid(2, table, [](int, int) { return 1; }), std::invalid_argument);
  EXPECT_THROW(homotopy_cardinality({{BigInt(0)}}), std::invalid_argument);
}

TEST(Groupoid, ValidateCatchesBrokenComposition) {
  const auto good = delooping(cyclic(3));
  EXPECT_TRUE(good->validate().ok);
  const FiniteGroupoid broken({"*"}, {0, 0, 0}, {0, 0, 0}, {0}, {0, 2, 1}, [](int f, int g) { return (f + g) % 3 == 0 ? 0 : 1; });
  EXPECT_FALSE(broken.validate().ok);
}

TEST(Groupoid, FunctorBasics) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto [f, g] = fixtures::random_cospan(rng);
    ASSERT_TRUE(f.validate().ok);
    ASSERT_TRUE(is_isofibration(f));
    ASSERT_TRUE(strictly_equal(compose(identity_functor(f.source), f), f));
    ASSERT_TRUE(strictly_equal(compose(f, identity_functor(f.target)), f));
    ASSERT_TRUE(fixtures::conjugated(f, rng).validate().ok);
  }
  const auto bg = delooping(cyclic(3));
  EXPECT_FALSE(is_isofibration(point_functor(bg, 0)));
  EXPECT_TRUE(equivalence_certificate(identity_functor(bg)).ok);
  EXPECT_FALSE(equivalence_certificate(point_functor(bg, 0)).ok);
  // a free transitive action is equivalent to the point
  const auto free = action_groupoid(2, std::vector<Permutation>{{0, 1}, {1, 0}});
  EXPECT_TRUE(equivalence_certificate(functor_to_point(free)).ok);
}

TEST(Groupoid, TwoPullbackExamples) {
  for (int g = 1; g <= 5; ++g) {
    const auto bg = delooping(cyclic(g));
    // the loop groupoid of BG is G viewed as a set
    const auto loops = two_pullback(point_functor(bg, 0), point_functor(bg, 0));
    EXPECT_EQ(loops.groupoid->cardinality(), g);
    EXPECT_EQ(loops.groupoid->class_count(), g);
    EXPECT_EQ(PullbackClasses(point_functor(bg, 0), point_functor(bg, 0)).cardinality(), g);
  }
  // over a discrete base the 2-pullback is the ordinary fiber product
  const auto base = discrete_groupoid(3);
  const Functor f{discrete_groupoid(4), base, {0, 0, 1, 2}, {0, 0, 1, 2}};
  const Functor h{discrete_groupoid(3), base, {0, 2, 2}, {0, 2, 2}};
  const auto fiber = two_pullback(f, h);
  EXPECT_EQ(fiber.groupoid->cardinality(), 2 * 1 + 1 * 2);
  EXPECT_EQ(strict_pullback(f, h)->cardinality(), 4);
}

TEST(Groupoid, TwoPullbackAlongIdentity) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const auto [f, g] = fixtures::random_cospan(rng);
    const auto p = two_pullback(f, identity_functor(f.target));
    ASSERT_TRUE(p.groupoid->validate().ok);
    ASSERT_TRUE(equivalence_certificate(p.to_left).ok);
    ASSERT_EQ(p.groupoid->cardinality(), f.source->cardinality());
    ASSERT_EQ(p.groupoid->profile(), f.source->profile());
  }
}

TEST(Groupoid, PullbackClassesMatchMaterializedPullback) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    const auto [f, g] = fixtures::random_cospan(rng);
    const auto p = two_pullback(f, g);
    const PullbackClasses classes(f, g);
    ASSERT_EQ(classes.class_count(), p.groupoid->class_count());
    ASSERT_EQ(classes.profile(), p.groupoid->profile());
    ASSERT_EQ(classes.cardinality(), p.groupoid->cardinality());
    ASSERT_TRUE(p.to_left.validate().ok);
    ASSERT_TRUE(p.to_right.validate().ok);
    // both legs are isofibrations, so the strict pullback has the same homotopy type
    ASSERT_EQ(strict_pullback(f, g)->profile(), p.groupoid->profile());
  }
}

TEST(Groupoid, PullbackInvariantUnderNaturalIsomorphism) {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 25; ++trial) {
    const auto [f, g] = fixtures::random_cospan(rng);
    const auto g2 = fixtures::conjugated(g, rng);
    ASSERT_EQ(PullbackClasses(f, g).profile(), PullbackClasses(f, g2).profile());
    ASSERT_EQ(pushforward_matrix(g), pushforward_matrix(g2));
    ASSERT_EQ(pullback_matrix(g), pullback_matrix(g2));
  }
}

TEST(Groupoid, PushforwardExamples) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    const auto [f, g] = fixtures::random_cospan(rng);
    const auto phi = random_class_function(f.source, rng);
    const auto to_point = pushforward(functor_to_point(f.source), phi);
    ASSERT_EQ(to_point(0), integral(phi));
    const auto same = pushforward(identity_functor(f.source), phi);
    ASSERT_EQ(same.values, phi.values);
    const auto one = constant_function(f.target, Rational(5, 2));
    ASSERT_EQ(pullback_fn(f, one).values, constant_function(f.source, Rational(5, 2)).values);
    // integrals are preserved by pushforward
    ASSERT_EQ(integral(pushforward(f, phi)), integral(phi));
  }
  const auto bg = delooping(cyclic(4));
  const auto swapped = action_groupoid(2, std::vector<Permutation>{{0, 1}, {1, 0}});
  EXPECT_THROW(pushforward(identity_functor(swapped), GroupoidFunction{swapped, {1, 2}}), std::invalid_argument);
  const auto base_point = point_functor(bg, 0);
  EXPECT_EQ(pushforward(base_point, constant_function(base_point.source, 1))(0), 4);
}

TEST(Groupoid, PushforwardOfIndicatorIsAutRatio) {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 25; ++trial) {
    const auto [f, g] = fixtures::random_cospan(rng);
    const auto& A = *f.source;
    const auto& C = *f.target;
    for (int cls = 0; cls < A.class_count(); ++cls) {
      const auto image = pushforward(f, class_indicator(f.source, cls));
      const int a = A.representative(cls);
      for (int y = 0; y < C.object_count(); ++y) {
        const Rational expected =
            C.find_iso(f(a), y) ? Rational(C.aut_order(y)) / Rational(A.aut_order(a)) : Rational(0);
        ASSERT_EQ(image(y), expected);
      }
    }
  }
}

TEST(Groupoid, ProjectionFormula) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    const auto [f, g] = fixtures::random_cospan(rng);
    const auto phi = random_class_function(f.target, rng);
    const auto lhs = pushforward(f, pullback_fn(f, phi));
    const auto ones = pushforward(f, constant_function(f.source, 1));
    for (int y = 0; y < f.target->object_count(); ++y) ASSERT_EQ(lhs(y), phi(y) * ones(y));
  }
}

TEST(Groupoid, BaseChange) {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    const auto [f, g] = fixtures::random_cospan(rng);
    const auto p = two_pullback(f, g);
    // g^* f_! = (to_right)_! (to_left)^*
    ASSERT_EQ(matrix_product(pullback_matrix(g), pushforward_matrix(f)),
              matrix_product(pushforward_matrix(p.to_right), pullback_matrix(p.to_left)));
  }
}

TEST(Groupoid, Functoriality) {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    const int degree = 2 + static_cast<int>(rng() % 4);
    const auto group = fixtures::random_group(degree, 24, rng);
    const int order = static_cast<int>(group.size());
    const auto a = fixtures::make_gset(group, 2), b = fixtures::make_gset(group, 2), c = fixtures::make_gset(group, 1);
    const auto A = fixtures::gset_groupoid(a, group), B = fixtures::gset_groupoid(b, group),
               C = fixtures::gset_groupoid(c, group);
    const auto f = fixtures::equivariant_functor(A, B, fixtures::random_equivariant_map(a, b, rng), order);
    const auto h = fixtures::equivariant_functor(B, C, fixtures::random_equivariant_map(b, c, rng), order);
    const auto fh = compose(f, h);
    ASSERT_TRUE(fh.validate().ok);
    ASSERT_EQ(pushforward_matrix(fh), matrix_product(pushforward_matrix(h), pushforward_matrix(f)));
    ASSERT_EQ(pullback_matrix(fh), matrix_product(pullback_matrix(f), pullback_matrix(h)));
    ASSERT_EQ(pushforward_matrix(identity_functor(A)), identity_matrix(A->class_count()));
  }
}

TEST(Groupoid, Spans) {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 15; ++trial) {
    const auto [f, g] = fixtures::random_cospan(rng);
    const GroupoidSpan s{f.source, identity_functor(f.source), f};
    ASSERT_EQ(span_to_linear_map(identity_span(f.source)), identity_matrix(f.source->class_count()));
    ASSERT_EQ(span_to_linear_map(compose_spans(identity_span(f.source), s)), span_to_linear_map(s));
    ASSERT_EQ(span_to_linear_map(compose_spans(s, identity_span(f.target))), span_to_linear_map(s));
    // composing with the reverse of g: the composite is given by the matrix product
    const GroupoidSpan back{g.source, g, identity_functor(g.source)};
    ASSERT_EQ(span_to_linear_map(compose_spans(s, back)),
              matrix_product(span_to_linear_map(back), span_to_linear_map(s)));
  }
  const auto bg = delooping(cyclic(3));
  const GroupoidSpan empty{discrete_groupoid(0), Functor{discrete_groupoid(0), bg, {}, {}},
                           Functor{discrete_groupoid(0), bg, {}, {}}};
  EXPECT_EQ(span_to_linear_map(empty), (RationalMatrix{{Rational(0)}}));
  const auto x = point_functor(bg, 0);
  const GroupoidSpan into{x.source, identity_functor(x.source), x};
  const GroupoidSpan out{x.source, x, identity_functor(x.source)};
  EXPECT_EQ(compose_spans(into, out).apex->cardinality(), 3);
  EXPECT_EQ(span_to_linear_map(compose_spans(into, out)), (RationalMatrix{{Rational(3)}}));
  EXPECT_THROW(compose_spans(into, into), std::invalid_argument);
}

TEST(Groupoid, HomotopyCardinality) {
  EXPECT_EQ(homotopy_cardinality({}), 0);
  EXPECT_EQ(homotopy_cardinality({{}}), 1);
  EXPECT_EQ(homotopy_cardinality({{BigInt(4)}}), Rational(1, 4));
  EXPECT_EQ(homotopy_cardinality({{BigInt(2), BigInt(3)}, {BigInt(1)}}), Rational(5, 2));
  EXPECT_EQ(homotopy_cardinality({{BigInt(2), BigInt(6), BigInt(5)}}), Rational(3, 5));
}
