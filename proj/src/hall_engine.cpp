#include "hallforge/hall_engine.hpp"

#include <algorithm>
#include <stdexcept>

#include "hallforge/errors.hpp"
#include "hallforge/f1_module.hpp"
#include "hallforge/finite_field.hpp"
#include "hallforge/fq_module.hpp"

namespace hallforge {

std::optional<BigInt> HallBackend::flag_count(const Partition&, const std::vector<Partition>&) const {
  return std::nullopt;
}

Rational HallBackend::ext_cardinality(const Partition& quot, const Partition& sub, const Partition& mid) const {
  const BigInt g = product_constant(mid, quot, sub);
  if (g == 0) return 0;
  return Rational(g * aut_count(sub) * aut_count(quot), aut_count(mid));
}

FqBackend::FqBackend(int q, int nilpotency) : q_(q), nilpotency_(nilpotency) {
  if (!is_prime_power(q)) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  if (nilpotency < 1) throw std::invalid_argument("nilpotency order must be positive");
}

std::string FqBackend::id() const { return "fq:" + std::to_string(q_) + ":" + std::to_string(nilpotency_); }

std::vector<Partition> FqBackend::labels(int size) const { return partitions_of_bounded(size, nilpotency_); }

BigInt FqBackend::product_constant(const Partition& mid, const Partition& quot, const Partition& sub) const {
  if (mid.size() != quot.size() + sub.size()) return 0;
  auto key = std::make_tuple(mid, quot, sub);
  {
    std::lock_guard lock(mutex_);
    if (auto it = constants_.find(key); it != constants_.end()) return it->second;
  }
  // computed outside the lock; a duplicate computation by a racing caller
  // stores the same value
  BigInt value = hall_constant_direct(q_, mid, quot, sub);
  std::lock_guard lock(mutex_);
  constants_.emplace(std::move(key), value);
  return value;
}

BigInt FqBackend::aut_count(const Partition& label) const { return automorphism_count(q_, label); }

std::optional<BigInt> FqBackend::hom_count(const Partition& from, const Partition& to) const {
  return hallforge::hom_count(q_, from, to);
}

std::optional<BigInt> FqBackend::ext1_count(const Partition&, const Partition&) const {
  if (nilpotency_ == 1) return BigInt(1);
  return std::nullopt;
}

std::optional<BigInt> FqBackend::flag_count(const Partition& label, const std::vector<Partition>& quotient_types) const {
  return flag_count_direct(q_, label, quotient_types);
}

std::vector<Partition> F1tBackend::labels(int size) const { return partitions_of(size); }

BigInt F1tBackend::product_constant(const Partition& mid, const Partition& quot, const Partition& sub) const {
  return f1t_hall_constant(mid, quot, sub);
}

BigInt F1tBackend::aut_count(const Partition& label) const {
  BigInt out = 1;
  for (int k = 1; k <= label.largest(); ++k) out *= factorial(static_cast<unsigned>(label.multiplicity(k)));
  return out;
}

namespace {

int column_dim(const Partition& label) {
  if (label.largest() > 1) throw std::invalid_argument("pointed-set label must be a column: " + label.to_string());
  return label.length();
}

}  // namespace

std::vector<Partition> VectF1Backend::labels(int size) const { return {Partition::column(size)}; }

BigInt VectF1Backend::product_constant(const Partition& mid, const Partition& quot, const Partition& sub) const {
  const int n = column_dim(mid);
  const int k = column_dim(quot);
  const int m = column_dim(sub);
  if (n != k + m) return 0;
  return f1_hall_constant(k, m);
}

BigInt VectF1Backend::aut_count(const Partition& label) const {
  return factorial(static_cast<unsigned>(column_dim(label)));
}

std::optional<BigInt> VectF1Backend::hom_count(const Partition& from, const Partition& to) const {
  const int n = column_dim(from);
  const int m = column_dim(to);
  BigInt total = 0;
  for (int k = 0; k <= std::min(n, m); ++k)
    total += binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)) * factorial(static_cast<unsigned>(m)) /
             factorial(static_cast<unsigned>(m - k));
  return total;
}

std::optional<BigInt> VectF1Backend::ext1_count(const Partition& from, const Partition& to) const {
  column_dim(from);
  column_dim(to);
  return BigInt(1);
}

HallElement hall_multiply(const HallBackend& backend, const HallElement& a, const HallElement& b) {
  HallElement out;
  for (const auto& [quot, x] : a.terms())
    for (const auto& [sub, y] : b.terms())
      for (const auto& mid : backend.labels(quot.size() + sub.size()))
        if (BigInt g = backend.product_constant(mid, quot, sub); g != 0) out.add(mid, x * y * Rational(g));
  return out;
}

HallElement hall_multiply_opposite(const HallBackend& backend, const HallElement& a, const HallElement& b) {
  return hall_multiply(backend, b, a);
}

TensorElement coproduct_prime(const HallBackend& backend, const HallElement& a) {
  TensorElement out;
  for (const auto& [mid, x] : a.terms())
    for (int k = 0; k <= mid.size(); ++k)
      for (const auto& quot : backend.labels(k))
        for (const auto& sub : backend.labels(mid.size() - k))
          if (Rational e = backend.ext_cardinality(quot, sub, mid); e != 0) out.add({quot, sub}, x * e);
  return out;
}

TensorElement twisted_tensor_multiply(const HallBackend& backend, const TensorElement& x, const TensorElement& y) {
  TensorElement out;
  for (const auto& [left, cx] : x.terms())
    for (const auto& [right, cy] : y.terms()) {
      const auto& [a, b] = left;
      const auto& [a2, b2] = right;
      const auto ext1 = backend.ext1_count(a2, b);
      const auto hom = backend.hom_count(a2, b);
      if (!ext1 || !hom) throw std::invalid_argument("backend " + backend.id() + " lacks Hom/Ext^1 counts");
      const Rational twist(*ext1, *hom);
      const HallElement first = hall_multiply_opposite(backend, HallElement::basis(a), HallElement::basis(a2));
      const HallElement second = hall_multiply_opposite(backend, HallElement::basis(b), HallElement::basis(b2));
      const TensorElement product = TensorElement::outer(first, second);
      for (const auto& [key, c] : product.terms()) out.add(key, cx * cy * twist * c);
    }
  return out;
}

namespace {

std::string first_difference(const TensorElement& lhs, const TensorElement& rhs) {
  const TensorElement diff = lhs - rhs;
  const auto& [key, c] = *diff.terms().begin();
  return "at " + key.first.to_string() + "⊗" + key.second.to_string() + ": " + rational_to_string(lhs.coeff(key)) +
         " vs " + rational_to_string(rhs.coeff(key)) + " (difference " + rational_to_string(c) + ")";
}

}  // namespace

CheckReport green_compatibility_check(const HallBackend& backend, const Partition& a, const Partition& b) {
  if (!backend.hereditary()) throw std::invalid_argument("backend " + backend.id() + " is not hereditary");
  const TensorElement lhs =
      coproduct_prime(backend, hall_multiply_opposite(backend, HallElement::basis(a), HallElement::basis(b)));
  const TensorElement rhs = twisted_tensor_multiply(backend, coproduct_prime(backend, HallElement::basis(a)),
                                                    coproduct_prime(backend, HallElement::basis(b)));
  if (lhs == rhs) return {};
  return {false, "Δ'(" + a.to_string() + "·" + b.to_string() + ") " + first_difference(lhs, rhs)};
}

CheckReport associativity_check(const HallBackend& backend, int size_bound) {
  for (int total = 0; total <= size_bound; ++total)
    for (int i = 0; i <= total; ++i)
      for (int j = 0; i + j <= total; ++j) {
        const int k = total - i - j;
        for (const auto& x : backend.labels(i))
          for (const auto& y : backend.labels(j))
            for (const auto& z : backend.labels(k)) {
              const auto ex = HallElement::basis(x);
              const auto ey = HallElement::basis(y);
              const auto ez = HallElement::basis(z);
              const HallElement left = hall_multiply(backend, hall_multiply(backend, ex, ey), ez);
              const HallElement right = hall_multiply(backend, ex, hall_multiply(backend, ey, ez));
              const std::string triple = x.to_string() + "·" + y.to_string() + "·" + z.to_string();
              if (left != right) return {false, triple + ": " + left.to_string() + " vs " + right.to_string()};
              for (const auto& target : backend.labels(total)) {
                const auto flags = backend.flag_count(target, {x, y, z});
                if (flags && Rational(*flags) != left.coeff(target))
                  return {false, triple + " at " + target.to_string() + ": flag count " + flags->str() + " vs " +
                                     rational_to_string(left.coeff(target))};
              }
            }
      }
  return {};
}

CheckReport coassociativity_check(const HallBackend& backend, const Partition& label) {
  using Triple = std::tuple<Partition, Partition, Partition>;
  std::map<Triple, Rational> left, right;
  const TensorElement outer = coproduct_prime(backend, HallElement::basis(label));
  for (const auto& [pair, c] : outer.terms()) {
    const auto& [quot, sub] = pair;
    const TensorElement split_quot = coproduct_prime(backend, HallElement::basis(quot));
    for (const auto& [inner, d] : split_quot.terms()) left[{inner.first, inner.second, sub}] += c * d;
    const TensorElement split_sub = coproduct_prime(backend, HallElement::basis(sub));
    for (const auto& [inner, d] : split_sub.terms()) right[{quot, inner.first, inner.second}] += c * d;
  }
  std::erase_if(left, [](const auto& t) { return t.second == 0; });
  std::erase_if(right, [](const auto& t) { return t.second == 0; });
  if (left == right) return {};
  for (const auto& [key, c] : left) {
    auto it = right.find(key);
    const Rational other = it == right.end() ? Rational(0) : it->second;
    if (other != c)
      return {false, "at " + std::get<0>(key).to_string() + "⊗" + std::get<1>(key).to_string() + "⊗" +
                         std::get<2>(key).to_string() + ": " + rational_to_string(c) + " vs " + rational_to_string(other)};
  }
  return {false, "right side has extra terms"};
}

Rational derived_hall_constant(const DerivedHomData& data) {
  auto positive = [](const BigInt& v) {
    if (v <= 0) throw std::invalid_argument("counts must be positive");
    return Rational(v);
  };
  Rational value = positive(data.hom_with_cone) / positive(data.aut);
  for (std::size_t i = 0; i < data.higher_to_target.size(); ++i) {
    const Rational h = positive(data.higher_to_target[i]);
    if (i % 2 == 1)  // shift i + 1 is even
      value *= h;
    else
      value /= h;
  }
  for (std::size_t i = 0; i < data.higher_to_self.size(); ++i) {
    const Rational h = positive(data.higher_to_self[i]);
    if (i % 2 == 1)
      value /= h;
    else
      value *= h;
  }
  return value;
}

}  // namespace hallforge
