#include "hallforge/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hallforge/errors.hpp"

namespace hallforge {

Partition::Partition(std::initializer_list<int> parts) : parts_(parts) { normalize_and_validate(); }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) { normalize_and_validate(); }

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::column(int r) {
  if (r < 0) throw std::invalid_argument("column partition of negative size");
  return Partition(std::vector<int>(static_cast<std::size_t>(r), 1));
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    // allow surrounding whitespace, nothing else
    auto first = token.find_first_not_of(" \t");
    auto last = token.find_last_not_of(" \t");
    if (first == std::string::npos) {
      if (text.find_first_not_of(" \t") == std::string::npos) break;
      throw std::invalid_argument("empty entry in partition '" + text + "'");
    }
    token = token.substr(first, last - first + 1);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer: '" + token + "'");
    }
    if (used != token.size()) throw std::invalid_argument("not an integer: '" + token + "'");
    parts.push_back(value);
  }
  return Partition(std::move(parts));
}

void Partition::normalize_and_validate() {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive: " + to_string());
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing: " + to_string());
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
  std::vector<int> conj(static_cast<std::size_t>(largest()), 0);
  for (int part : parts_)
    for (int i = 0; i < part; ++i) ++conj[static_cast<std::size_t>(i)];
  return Partition(std::move(conj));
}

long Partition::n_stat() const noexcept {
  long n = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) n += static_cast<long>(i) * parts_[i];
  return n;
}

int Partition::multiplicity(int k) const noexcept {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

std::string Partition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + "]";
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

Composition::Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int v : parts_)
    if (v < 0) throw std::invalid_argument("composition entries must be nonnegative");
}

int Composition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool operator==(const Composition& a, const Composition& b) {
  const std::size_t n = std::max(a.parts_.size(), b.parts_.size());
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
  if (mu.size() != lambda.size()) return false;
  const int n = std::max(mu.length(), lambda.length());
  int sum_mu = 0, sum_lambda = 0;
  for (int i = 0; i < n; ++i) {
    sum_mu += mu[static_cast<std::size_t>(i)];
    sum_lambda += lambda[static_cast<std::size_t>(i)];
    if (sum_mu > sum_lambda) return false;
  }
  return true;
}

bool lex_leq(const Partition& mu, const Partition& lambda) {
  const int n = std::max(mu.length(), lambda.length());
  for (int i = 0; i < n; ++i) {
    const int d = mu[static_cast<std::size_t>(i)] - lambda[static_cast<std::size_t>(i)];
    if (d != 0) return d < 0;
  }
  return true;
}

namespace {

void emit_partitions(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    prefix.push_back(k);
    emit_partitions(remaining - k, k, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int bound) { return partitions_of_bounded(n, n, bound); }

std::vector<Partition> partitions_of_bounded(int n, int max_part, int bound) {
  if (n < 0) throw std::invalid_argument("partitions of a negative integer");
  if (n > bound) throw BoundError("partitions_of: n=" + std::to_string(n) + " exceeds bound " + std::to_string(bound));
  std::vector<Partition> out;
  std::vector<int> prefix;
  emit_partitions(n, std::max(0, max_part), prefix, out);
  return out;
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (int v : p.parts()) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ULL;
  return h;
}

}  // namespace hallforge
