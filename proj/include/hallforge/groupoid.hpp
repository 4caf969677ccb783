#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hallforge/numeric.hpp"
#include "hallforge/report.hpp"

namespace hallforge {

/// Groupoid with finitely many objects and morphisms, stored strictly.
///
/// Morphisms are numbered 0..M-1. compose(f, g) is "f then g" and requires
/// target(f) == source(g). Isomorphism classes, a path from each class
/// representative to every object of its class, and automorphism group
/// orders are computed on construction.
class FiniteGroupoid {
 public:
  using Compose = std::function<int(int, int)>;

  FiniteGroupoid(std::vector<std::string> object_labels, std::vector<int> source, std::vector<int> target,
                 std::vector<int> identity, std::vector<int> inverse, Compose compose);

  int object_count() const noexcept { return static_cast<int>(labels_.size()); }
  int morphism_count() const noexcept { return static_cast<int>(source_.size()); }
  const std::string& label(int x) const { return labels_[static_cast<std::size_t>(x)]; }

  int source(int m) const { return source_[static_cast<std::size_t>(m)]; }
  int target(int m) const { return target_[static_cast<std::size_t>(m)]; }
  int identity(int x) const { return identity_[static_cast<std::size_t>(x)]; }
  int inverse(int m) const { return inverse_[static_cast<std::size_t>(m)]; }
  int compose(int f, int g) const { return compose_(f, g); }

  /// Morphisms with the given source, in increasing order.
  const std::vector<int>& morphisms_from(int x) const { return out_[static_cast<std::size_t>(x)]; }
  /// Position of m inside morphisms_from(source(m)).
  int position_from(int m) const { return position_[static_cast<std::size_t>(m)]; }
  std::vector<int> morphisms_between(int x, int y) const;
  std::vector<int> automorphisms(int x) const { return morphisms_between(x, x); }

  int class_count() const noexcept { return static_cast<int>(representatives_.size()); }
  int iso_class(int x) const { return class_of_[static_cast<std::size_t>(x)]; }
  int representative(int cls) const { return representatives_[static_cast<std::size_t>(cls)]; }
  /// A morphism from the representative of x's class to x.
  int path_from_representative(int x) const { return path_[static_cast<std::size_t>(x)]; }
  std::optional<int> find_iso(int x, int y) const;
  const BigInt& aut_order(int x) const { return aut_[static_cast<std::size_t>(x)]; }

  /// Sum over isomorphism classes of 1/|Aut|.
  Rational cardinality() const;
  /// Automorphism group orders of the class representatives, sorted.
  std::vector<BigInt> profile() const;

  /// Identity, inverse and associativity laws. Associativity is checked on
  /// every composable triple when there are at most `exhaustive_limit` of
  /// them, otherwise on `samples` random triples from a fixed seed.
  CheckReport validate(std::size_t exhaustive_limit = 2'000'000, std::size_t samples = 200'000) const;

 private:
  std::vector<std::string> labels_;
  std::vector<int> source_, target_, identity_, inverse_;
  Compose compose_;
  std::vector<std::vector<int>> out_;
  std::vector<int> position_;
  std::vector<int> class_of_, representatives_, path_;
  std::vector<BigInt> aut_;
};

using GroupoidPtr = std::shared_ptr<const FiniteGroupoid>;

/// Finite group as a multiplication table; multiply(g, h) is "g then h".
struct FiniteGroup {
  int order = 1;
  int identity = 0;
  std::vector<int> table{0};
  std::vector<int> inverse{0};

  int multiply(int g, int h) const { return table[static_cast<std::size_t>(g * order + h)]; }
};

GroupoidPtr point_groupoid();
/// k objects and identities only.
GroupoidPtr discrete_groupoid(int k);
/// One object with automorphism group given by a multiplication table.
GroupoidPtr delooping(const FiniteGroup& group);
/// Objects and morphisms are pairs; object (a, b) is a * |B| + b.
GroupoidPtr product_groupoid(const GroupoidPtr& a, const GroupoidPtr& b);
/// Objects and morphisms of the parts numbered consecutively, part by part.
GroupoidPtr disjoint_union(const std::vector<GroupoidPtr>& parts);

/// Functor given by its object and morphism maps.
struct Functor {
  GroupoidPtr source;
  GroupoidPtr target;
  std::vector<int> on_objects;
  std::vector<int> on_morphisms;

  int operator()(int x) const { return on_objects[static_cast<std::size_t>(x)]; }
  int map_morphism(int m) const { return on_morphisms[static_cast<std::size_t>(m)]; }

  /// Source/target compatibility, identities and composition (exhaustive up
  /// to `exhaustive_limit` composable pairs, sampled beyond).
  CheckReport validate(std::size_t exhaustive_limit = 2'000'000, std::size_t samples = 200'000) const;
};

Functor identity_functor(const GroupoidPtr& g);
Functor functor_to_point(const GroupoidPtr& g);
/// The object x of g picked out by the point groupoid.
Functor point_functor(const GroupoidPtr& g, int x);
/// g after f.
Functor compose(const Functor& f, const Functor& g);
/// x -> (f x, g x) into product_groupoid(f.target, g.target), which must be
/// passed as `product`.
Functor pair_functor(const Functor& f, const Functor& g, const GroupoidPtr& product);
/// Object and morphism maps agree exactly.
bool strictly_equal(const Functor& f, const Functor& g);
/// Essential surjectivity plus bijectivity of every Hom(x, y) -> Hom(Fx, Fy).
CheckReport equivalence_certificate(const Functor& f);
/// Every isomorphism out of F(a) lifts to an isomorphism out of a.
bool is_isofibration(const Functor& f);

/// Permutation of {0..n-1} as its image list.
using Permutation = std::vector<int>;

/// Closure of the generators under composition; elements are sorted, so the
/// identity is element 0. composite "g then h" sends k to h[g[k]].
std::vector<Permutation> generated_permutation_group(int degree, const std::vector<Permutation>& generators);
/// Table of a set of permutations closed under composition; throws
/// std::invalid_argument otherwise.
FiniteGroup permutation_group_table(const std::vector<Permutation>& elements);

/// K // G for the right action k.g = act(k, g). The morphism (k, g) runs from
/// k to k.g and has number k * |G| + g. Throws std::invalid_argument if act
/// is not an action.
GroupoidPtr action_groupoid(int set_size, const FiniteGroup& group, const std::function<int(int, int)>& act,
                            std::vector<std::string> labels = {});
/// Permutation group acting on {0..n-1} by k.g = g[k].
GroupoidPtr action_groupoid(int set_size, const std::vector<Permutation>& group);

/// Explicit 2-pullback of f: A -> C and g: B -> C: objects (a, b, phi) with
/// phi: f(a) -> g(b); morphisms (alpha, beta) from (a, b, phi) to
/// (a', b', f(alpha)^{-1} ; phi ; g(beta)).
struct TwoPullback {
  GroupoidPtr groupoid;
  Functor to_left;
  Functor to_right;

  /// -1 when absent.
  int find_object(int a, int b, int phi) const;
  int find_morphism(int object, int alpha, int beta) const;

  std::map<std::tuple<int, int, int>, int> object_index;
  std::vector<int> morphism_offset;
};
TwoPullback two_pullback(const Functor& f, const Functor& g);

/// Strict fiber product: pairs with f(a) = g(b) and (alpha, beta) with
/// f(alpha) = g(beta).
GroupoidPtr strict_pullback(const Functor& f, const Functor& g);

/// Isomorphism classes of the 2-pullback of f and g without materializing it:
/// orbits of Aut(a) x Aut(b) on Iso(f(a), g(b)) for class representatives a, b.
class PullbackClasses {
 public:
  PullbackClasses(const Functor& f, const Functor& g);

  int class_count() const noexcept { return static_cast<int>(aut_.size()); }
  /// Class of (a, b, phi) for any objects a, b and phi: f(a) -> g(b).
  int class_of(int a, int b, int phi) const;
  const BigInt& aut_order(int cls) const { return aut_[static_cast<std::size_t>(cls)]; }
  /// Classes of a and b in the factors.
  std::pair<int, int> base_classes(int cls) const { return base_[static_cast<std::size_t>(cls)]; }
  std::vector<BigInt> profile() const;
  Rational cardinality() const;

 private:
  Functor f_, g_;
  std::map<std::tuple<int, int, int>, int> orbit_of_;  // (class a, class b, phi) -> class
  std::vector<BigInt> aut_;
  std::vector<std::pair<int, int>> base_;
};

/// Rational-valued function on the objects of a groupoid.
struct GroupoidFunction {
  GroupoidPtr base;
  std::vector<Rational> values;

  const Rational& operator()(int x) const { return values[static_cast<std::size_t>(x)]; }
  bool constant_on_classes() const;
};

GroupoidFunction constant_function(const GroupoidPtr& g, const Rational& c);
/// Indicator of the isomorphism class cls.
GroupoidFunction class_indicator(const GroupoidPtr& g, int cls);
/// Groupoid integral: sum over classes of phi(x)/|Aut x|.
Rational integral(const GroupoidFunction& phi);
/// phi o f.
GroupoidFunction pullback_fn(const Functor& f, const GroupoidFunction& phi);
/// Value at b is the integral of phi over the 2-fiber of f over b. Throws
/// std::invalid_argument if phi is not constant on isomorphism classes.
GroupoidFunction pushforward(const Functor& f, const GroupoidFunction& phi);

/// Rational matrices act on column vectors of values on class representatives.
using RationalMatrix = std::vector<std::vector<Rational>>;
RationalMatrix matrix_product(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix identity_matrix(int n);
/// Entry (i, j): value of f_!(1_j) at the representative of class i of the target.
RationalMatrix pushforward_matrix(const Functor& f);
/// Entry (i, j): value of f^*(1_j) at the representative of class i of the source.
RationalMatrix pullback_matrix(const Functor& f);

/// A <- apex -> B.
struct GroupoidSpan {
  GroupoidPtr apex;
  Functor left;
  Functor right;
};

GroupoidSpan identity_span(const GroupoidPtr& g);
/// Apex is the 2-pullback of s1.right and s2.left; throws
/// std::invalid_argument unless they share their target.
GroupoidSpan compose_spans(const GroupoidSpan& s1, const GroupoidSpan& s2);
/// right_! o left^* on class indicators.
RationalMatrix span_to_linear_map(const GroupoidSpan& s);

/// Sum over components of prod_i |pi_i|^{(-1)^i}, where component c lists
/// |pi_1|, |pi_2|, ... Throws std::invalid_argument on a nonpositive order.
Rational homotopy_cardinality(const std::vector<std::vector<BigInt>>& components);

}  // namespace hallforge
