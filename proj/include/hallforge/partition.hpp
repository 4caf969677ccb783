#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace hallforge {

/// Integer partition: a weakly decreasing sequence of positive integers.
///
/// Trailing zeros are stripped on construction, so every partition has a
/// single canonical representation. A sequence that is not weakly decreasing
/// (or contains a negative entry) is rejected with std::invalid_argument.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  /// Sorts the (nonnegative) entries decreasingly before normalizing.
  static Partition from_unsorted(std::vector<int> parts);

  /// The column partition (1^r).
  static Partition column(int r);

  /// Parses "3,2,1" (or "" for the empty partition). Input must already be
  /// weakly decreasing; nothing is reordered.
  static Partition parse(const std::string& text);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  /// i-th part (0-based); 0 beyond the length.
  int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }
  int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

  Partition conjugate() const;

  /// n(lambda) = sum_i (i-1) lambda_i with 1-based i.
  long n_stat() const noexcept;

  /// Multiplicity of the part value k.
  int multiplicity(int k) const noexcept;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic comparison of the part sequences; on partitions of one
  /// fixed size this is the lexicographic order of the dominance discussion.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  void normalize_and_validate();

  std::vector<int> parts_;
  int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// Finite sequence of nonnegative integers. Stored as given; equality ignores
/// trailing zeros.
class Composition {
 public:
  Composition() = default;
  Composition(std::initializer_list<int> parts);
  explicit Composition(std::vector<int> parts);
  Composition(const Partition& p) : parts_(p.parts()) {}  // NOLINT: implicit by intent

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept;
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

  Partition sorted() const { return Partition::from_unsorted(parts_); }

  friend bool operator==(const Composition& a, const Composition& b);

 private:
  std::vector<int> parts_;
};

/// mu <=^d lambda: every prefix sum of mu is bounded by that of lambda.
/// Partitions of different sizes are incomparable (false).
bool dominance_leq(const Partition& mu, const Partition& lambda);

/// mu <=^l lambda: mu == lambda or the first nonzero mu_i - lambda_i is negative.
bool lex_leq(const Partition& mu, const Partition& lambda);

inline constexpr int kDefaultPartitionBound = 40;

/// All partitions of n, each exactly once, in descending lexicographic order.
/// Throws BoundError if n exceeds `bound`.
std::vector<Partition> partitions_of(int n, int bound = kDefaultPartitionBound);

/// All partitions of n with largest part at most max_part, descending lex order.
std::vector<Partition> partitions_of_bounded(int n, int max_part, int bound = kDefaultPartitionBound);

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

}  // namespace hallforge
