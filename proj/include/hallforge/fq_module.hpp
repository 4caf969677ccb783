#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hallforge/finite_field.hpp"
#include "hallforge/linalg.hpp"
#include "hallforge/partition.hpp"
#include "hallforge/qpoly.hpp"

namespace hallforge {

inline constexpr std::uint64_t kElementBound = std::uint64_t{1} << 20;
inline constexpr int kHallPolynomialSizeBound = 7;

/// The module R_N/(t^{l_1}) + ... + R_N/(t^{l_r}) over R_N = F_q[t]/(t^N),
/// realized on F_q^{|l|}. Coordinate (summand i, power k) stands for t^k
/// times the i-th generator; t shifts k up by one and kills the top power.
class FqModule {
 public:
  /// Throws std::invalid_argument if a part exceeds N, BoundError if q^{|l|}
  /// exceeds the element bound.
  FqModule(int q, Partition type, int nilpotency, std::uint64_t element_bound = kElementBound);

  int q() const noexcept { return field_->order(); }
  int nilpotency() const noexcept { return nilpotency_; }
  const Partition& type() const noexcept { return type_; }
  int dim() const noexcept { return type_.size(); }
  const FiniteField& field() const noexcept { return *field_; }
  BigInt element_count() const;

  int coordinate(int summand, int power) const;
  int summand_of(int coord) const { return summand_[static_cast<std::size_t>(coord)]; }
  int power_of(int coord) const { return power_[static_cast<std::size_t>(coord)]; }

  Vec apply_t(const Vec& v) const;
  Vec apply_t_power(Vec v, int k) const;
  /// Image of t as a matrix on F_q^{dim}.
  Matrix t_matrix() const;

  /// Every element, lexicographic in coordinates.
  std::vector<Vec> elements() const;

  /// Type recomputed from the ranks of the powers of t.
  Partition recomputed_type() const;

 private:
  const FiniteField* field_;
  Partition type_;
  int nilpotency_;
  std::vector<int> offset_, summand_, power_;
};

inline FqModule module_of_type(int q, const Partition& type, int nilpotency) { return FqModule(q, type, nilpotency); }

/// A t-stable subspace, held as its RREF basis (rows sorted by pivot).
struct Submodule {
  Matrix basis;

  int dim() const noexcept { return static_cast<int>(basis.size()); }
  std::vector<Vec> elements(const FiniteField& field) const;
  bool contains(const Vec& v, const FiniteField& field) const { return linalg::in_span(v, basis, field); }
  bool contains(const Submodule& other, const FiniteField& field) const;

  friend bool operator==(const Submodule&, const Submodule&) = default;
  friend auto operator<=>(const Submodule& a, const Submodule& b) { return a.basis <=> b.basis; }
};

/// Span of the given vectors closed under t, as a canonical Submodule.
Submodule generated_submodule(const FqModule& m, const std::vector<Vec>& generators);
bool is_submodule(const FqModule& m, const Matrix& rows);

/// Type from the dimension sequence dim t^i X, i = 0, 1, ... (the conjugate
/// partition has parts dim t^{i-1}X - dim t^iX).
Partition type_from_power_dims(const std::vector<int>& dims);

Partition type_of(const FqModule& m);
Partition type_of(const FqModule& m, const Submodule& sub);
/// Type of m / sub, from dim t^i(M/U) = dim(t^iM + U) - dim U.
Partition quotient_type(const FqModule& m, const Submodule& sub);
/// Type of outer / inner for inner contained in outer.
Partition quotient_type(const FqModule& m, const Submodule& outer, const Submodule& inner);

/// Visits every submodule of dimension `dim` (each exactly once) by walking
/// the RREF cells with t-stability pruning. Visitor receives the RREF basis.
void for_each_submodule_of_dim(const FqModule& m, int dim, const std::function<void(const Matrix&)>& visit);

/// Every submodule (optionally filtered by sub and quotient type), sorted.
std::vector<Submodule> enumerate_submodules(const FqModule& m, const std::optional<Partition>& sub_type = std::nullopt,
                                            const std::optional<Partition>& quot_type = std::nullopt);

/// Independent slow enumeration: all submodules reached from {0} by
/// repeatedly adjoining one element and closing up. Intended for small cases.
std::vector<Submodule> enumerate_submodules_by_closure(const FqModule& m);

/// Counts of submodules of dimension `dim` keyed by (sub type, quotient type).
/// Results are cached per (q, type, dim); safe for concurrent callers.
using SubmoduleCensus = std::map<std::pair<Partition, Partition>, std::uint64_t>;
const SubmoduleCensus& submodule_census(int q, const Partition& type, int dim);

/// Diagram containment: inner_i <= outer_i for all i.
bool diagram_contains(const Partition& outer, const Partition& inner);

/// Number of submodules of type nu with quotient of type mu in the module of
/// type lambda. Zero on size mismatch, or when mu or nu does not fit in lambda.
BigInt hall_constant_direct(int q, const Partition& lambda, const Partition& mu, const Partition& nu);

/// Number of chains M = M_0 > M_1 > ... > M_s = 0 with M_{i-1}/M_i of type
/// quotient_types[i-1] (top quotient first).
BigInt flag_count_direct(int q, const Partition& lambda, const std::vector<Partition>& quotient_types);

struct HallPolynomialFit {
  QPoly poly;
  long degree_bound = 0;  // n(lambda) - n(mu) - n(nu), possibly negative
  std::vector<std::pair<BigInt, BigInt>> samples;  // last one is the held-out check
};

/// Sample points usable for a module of size |lambda|: prime powers q <= 16
/// with q^{|lambda|} within the element bound.
std::vector<int> admissible_sample_points(int size);

/// Interpolates the structure constant over admissible prime powers with the
/// degree bound n(lambda) - n(mu) - n(nu) and validates at one extra point.
HallPolynomialFit hall_polynomial_fit(const Partition& lambda, const Partition& mu, const Partition& nu);
QPoly hall_polynomial(const Partition& lambda, const Partition& mu, const Partition& nu);

/// |Aut M| by enumerating generator images, memoized on the span of the
/// images already chosen. N = 1 uses |GL_n(F_q)| directly.
BigInt automorphism_count(const FqModule& m);
BigInt automorphism_count(int q, const Partition& type);

/// |Hom(M_lambda, M_mu)| = q^{sum_{i,j} min(lambda_i, mu_j)}.
BigInt hom_count(int q, const Partition& lambda, const Partition& mu);

/// Groupoid cardinality of extensions sub -> X -> quot with X of type mid:
/// g^{mid}_{quot,sub} |Aut sub| |Aut quot| / |Aut mid|.
Rational extension_groupoid_cardinality(int q, const Partition& quot, const Partition& sub, const Partition& mid,
                                        int nilpotency);

/// Outer frame of a 3x3 diagram of F_q-vector spaces:
///
///   A  -> B  -> C
///   |           |
///   A'          C'
///   |           |
///   A''-> B''-> C''
///
/// Maps are matrices (target dim x source dim).
struct Frame {
  int a = 0, b = 0, c = 0, a1 = 0, c1 = 0, a2 = 0, b2 = 0, c2 = 0;
  Matrix top_in, top_out;        // A -> B, B -> C
  Matrix left_in, left_out;      // A -> A', A' -> A''
  Matrix right_in, right_out;    // C -> C', C' -> C''
  Matrix bottom_in, bottom_out;  // A'' -> B'', B'' -> C''
};

/// Split frame with A, C, A'', C'' of the given dimensions and A' = A + A'',
/// C' = C + C'', B = A + C, B'' = A'' + C''.
Frame split_frame(int a, int c, int a2, int c2);

bool is_short_exact(const Matrix& in, const Matrix& out, int src, int mid, int tgt, const FiniteField& field);

/// Groupoid cardinality of the exact 3x3 squares completing the frame, modulo
/// isomorphisms of the middle object fixing the frame. Throws
/// std::invalid_argument if a row or column of the frame is not exact.
Rational frame_fiber_cardinality(int q, const Frame& frame);

}  // namespace hallforge
