#include "hallforge/f1_module.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

#include "hallforge/errors.hpp"

namespace hallforge {

F1tModule::F1tModule(std::vector<int> action) : action_(std::move(action)) {
  const int n = size();
  std::vector<int> preimages(static_cast<std::size_t>(n + 1), 0);
  for (int x = 1; x <= n; ++x) {
    const int y = apply(x);
    if (y < 0 || y > n) throw std::invalid_argument("action value out of range");
    if (y != 0 && ++preimages[static_cast<std::size_t>(y)] > 1)
      throw std::invalid_argument("element " + std::to_string(y) + " has two preimages");
  }
  for (int x = 1; x <= n; ++x) {
    int y = x;
    for (int step = 0; step <= n && y != 0; ++step) y = apply(y);
    if (y != 0) throw std::invalid_argument("action is not nilpotent");
  }
}

F1tModule F1tModule::of_type(const Partition& type) {
  if (type.size() > kF1SizeBound) throw BoundError("F_1[[t]]-module larger than " + std::to_string(kF1SizeBound));
  std::vector<int> action;
  int next = 1;
  for (int len : type.parts()) {
    for (int k = 0; k < len; ++k) action.push_back(k + 1 < len ? next + k + 1 : 0);
    next += len;
  }
  return F1tModule(std::move(action));
}

std::vector<std::vector<int>> F1tModule::chains() const {
  const int n = size();
  std::vector<bool> has_preimage(static_cast<std::size_t>(n + 1), false);
  for (int x = 1; x <= n; ++x) has_preimage[static_cast<std::size_t>(apply(x))] = true;
  std::vector<std::vector<int>> out;
  for (int x = 1; x <= n; ++x) {
    if (has_preimage[static_cast<std::size_t>(x)]) continue;
    std::vector<int> chain;
    for (int y = x; y != 0; y = apply(y)) chain.push_back(y);
    out.push_back(std::move(chain));
  }
  return out;
}

F1tModule F1tModule::dual() const {
  std::vector<int> action(static_cast<std::size_t>(size()), 0);
  for (const auto& chain : chains())
    for (std::size_t k = chain.size(); k-- > 1;) action[static_cast<std::size_t>(chain[k] - 1)] = chain[k - 1];
  return F1tModule(std::move(action));
}

Partition f1t_type(const F1tModule& m) {
  std::vector<int> lengths;
  for (const auto& chain : m.chains()) lengths.push_back(static_cast<int>(chain.size()));
  return Partition::from_unsorted(std::move(lengths));
}

F1tModule f1t_module_of_type(const Partition& type) { return F1tModule::of_type(type); }

bool f1t_is_subobject(const F1tModule& m, const std::vector<int>& subset) {
  std::vector<bool> in(static_cast<std::size_t>(m.size() + 1), false);
  in[0] = true;
  for (int x : subset) in[static_cast<std::size_t>(x)] = true;
  return std::all_of(subset.begin(), subset.end(), [&](int x) { return in[static_cast<std::size_t>(m.apply(x))]; });
}

namespace {

// Type of the functional graph x -> next(x) on `elements`, where next maps
// into elements or 0.
Partition forest_type(const std::vector<int>& elements, const std::function<int(int)>& next) {
  std::map<int, int> preimage_count;
  for (int x : elements) preimage_count[x];
  for (int x : elements)
    if (int y = next(x); y != 0) ++preimage_count[y];
  std::vector<int> lengths;
  for (int x : elements) {
    if (preimage_count[x] != 0) continue;
    int len = 0;
    for (int y = x; y != 0; y = next(y)) ++len;
    lengths.push_back(len);
  }
  return Partition::from_unsorted(std::move(lengths));
}

}  // namespace

Partition f1t_sub_type(const F1tModule& m, const std::vector<int>& subset) {
  return forest_type(subset, [&](int x) { return m.apply(x); });
}

Partition f1t_quotient_type(const F1tModule& m, const std::vector<int>& subset) {
  std::vector<bool> collapsed(static_cast<std::size_t>(m.size() + 1), false);
  collapsed[0] = true;
  for (int x : subset) collapsed[static_cast<std::size_t>(x)] = true;
  std::vector<int> rest;
  for (int x = 1; x <= m.size(); ++x)
    if (!collapsed[static_cast<std::size_t>(x)]) rest.push_back(x);
  return forest_type(rest, [&](int x) {
    const int y = m.apply(x);
    return collapsed[static_cast<std::size_t>(y)] ? 0 : y;
  });
}

std::vector<std::vector<int>> f1t_enumerate_submodules(const F1tModule& m, const std::optional<Partition>& sub_type,
                                                        const std::optional<Partition>& quot_type) {
  if (m.size() > kF1SizeBound) throw BoundError("F_1[[t]]-module larger than " + std::to_string(kF1SizeBound));
  const auto chains = m.chains();
  std::vector<std::vector<int>> out;
  std::vector<std::size_t> keep(chains.size(), 0);
  while (true) {
    std::vector<int> subset;
    for (std::size_t c = 0; c < chains.size(); ++c)
      subset.insert(subset.end(), chains[c].end() - static_cast<std::ptrdiff_t>(keep[c]), chains[c].end());
    std::sort(subset.begin(), subset.end());
    if ((!sub_type || f1t_sub_type(m, subset) == *sub_type) && (!quot_type || f1t_quotient_type(m, subset) == *quot_type))
      out.push_back(std::move(subset));
    std::size_t c = 0;
    for (; c < chains.size(); ++c) {
      if (++keep[c] <= chains[c].size()) break;
      keep[c] = 0;
    }
    if (c == chains.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

BigInt f1t_hall_constant(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (mu.size() + nu.size() != lambda.size()) return 0;
  const F1tModule m = F1tModule::of_type(lambda);
  return static_cast<long>(f1t_enumerate_submodules(m, nu, mu).size());
}

BigInt f1_hall_constant(int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("negative pointed-set size");
  const int total = n + m;
  if (total > kF1SizeBound) throw BoundError("pointed set larger than " + std::to_string(kF1SizeBound));
  // every m-subset of the non-basepoint elements is a subobject with
  // quotient of size n
  long count = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << total); ++mask)
    if (__builtin_popcount(mask) == m) ++count;
  return count;
}

namespace {

class ZeroOneCounter {
 public:
  explicit ZeroOneCounter(const Partition& cols) : cols_(cols.parts()) {}

  BigInt count(std::size_t col, std::vector<int> capacity) {
    if (col == cols_.size())
      return std::all_of(capacity.begin(), capacity.end(), [](int c) { return c == 0; }) ? 1 : 0;
    // rows are interchangeable, so the remaining count depends only on the
    // multiset of capacities
    std::sort(capacity.begin(), capacity.end(), std::greater<>());
    auto key = std::make_pair(col, capacity);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    BigInt total = 0;
    choose(col, 0, cols_[col], capacity, total);
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  void choose(std::size_t col, std::size_t row, int remaining, std::vector<int>& capacity, BigInt& total) {
    if (remaining == 0) {
      total += count(col + 1, capacity);
      return;
    }
    if (capacity.size() - row < static_cast<std::size_t>(remaining)) return;
    if (capacity[row] > 0) {
      --capacity[row];
      choose(col, row + 1, remaining - 1, capacity, total);
      ++capacity[row];
    }
    choose(col, row + 1, remaining, capacity, total);
  }

  std::vector<int> cols_;
  std::map<std::pair<std::size_t, std::vector<int>>, BigInt> memo_;
};

}  // namespace

BigInt count_zero_one_matrices(const Partition& col_sums, const Partition& row_sums) {
  if (col_sums.size() != row_sums.size()) return 0;
  if (col_sums.size() > kMatrixSizeBound) throw BoundError("matrix count bound exceeded");
  ZeroOneCounter counter(col_sums);
  return counter.count(0, row_sums.parts());
}

HallElement f1t_elementary_product(const Partition& lambda) {
  if (lambda.size() > kF1SizeBound) throw BoundError("F_1[[t]] product too large");
  HallElement acc = HallElement::unit();
  for (int r : lambda.parts()) {
    const Partition factor = Partition::column(r);
    HallElement next;
    for (const auto& [left, c] : acc.terms())
      for (const auto& target : partitions_of(left.size() + r))
        next.add(target, c * Rational(f1t_hall_constant(target, left, factor)));
    acc = std::move(next);
  }
  return acc;
}

HallElement elementary_product_expansion(const Partition& lambda) {
  HallElement by_products = f1t_elementary_product(lambda);
  HallElement by_matrices;
  for (const auto& mu : partitions_of(lambda.size())) by_matrices.add(mu, Rational(count_zero_one_matrices(lambda, mu)));
  if (by_products != by_matrices)
    throw VerificationError("elementary product of " + lambda.to_string() + ": subobject count " + by_products.to_string() +
                            " disagrees with matrix count " + by_matrices.to_string());
  return by_products;
}

}  // namespace hallforge
