#include "hallforge/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>

#include "hallforge/errors.hpp"
#include "hallforge/f1_module.hpp"
#include "hallforge/zelevinsky.hpp"

namespace hallforge {

inline constexpr int kPhiImageBound = 8;
inline constexpr int kHallLittlewoodBound = 6;

SymFunc SymFunc::monomial(const Partition& lambda, const QPoly& coeff) {
  SymFunc f;
  f.add(lambda, coeff);
  return f;
}

void SymFunc::add(const Partition& label, const QPoly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms.emplace(label, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms.erase(it);
}

QPoly SymFunc::coeff(const Partition& label) const {
  auto it = terms.find(label);
  return it == terms.end() ? QPoly{} : it->second;
}

SymFunc& SymFunc::operator+=(const SymFunc& rhs) {
  if (basis != rhs.basis) throw std::invalid_argument("adding symmetric functions in different bases");
  for (const auto& [label, c] : rhs.terms) add(label, c);
  return *this;
}

SymFunc SymFunc::scaled(const QPoly& c) const {
  SymFunc out;
  out.basis = basis;
  for (const auto& [label, coeff] : terms) out.add(label, coeff * c);
  return out;
}

SymFunc SymFunc::specialized(const BigInt& value) const {
  SymFunc out;
  out.basis = basis;
  for (const auto& [label, coeff] : terms) out.add(label, QPoly::constant(coeff.eval(value)));
  return out;
}

bool SymFunc::homogeneous_of_degree(int degree) const {
  return std::all_of(terms.begin(), terms.end(), [&](const auto& term) { return term.first.size() == degree; });
}

std::string SymFunc::to_string() const {
  if (terms.empty()) return "0";
  const std::string symbol = basis == Basis::monomial ? "m" : "e";
  std::string out;
  // highest label first, matching the usual way expansions are written
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [label, c] = *it;
    if (!out.empty()) out += " + ";
    if (c == QPoly{1}) {
      // bare symbol
    } else if (c.degree() == 0) {
      out += c.to_string("t") + "·";
    } else {
      out += "(" + c.to_string("t") + ")·";
    }
    out += symbol + label.to_string();
  }
  return out;
}

namespace {

// Distinct rearrangements of the parts of lambda padded with zeros to n
// entries.
std::vector<std::vector<int>> exponent_vectors(const Partition& lambda, std::size_t n) {
  std::vector<int> exps = lambda.parts();
  exps.resize(n, 0);
  std::sort(exps.begin(), exps.end());
  std::vector<std::vector<int>> out;
  do {
    out.push_back(exps);
  } while (std::next_permutation(exps.begin(), exps.end()));
  return out;
}

}  // namespace

SymFunc monomial_product(const Partition& lambda, const Partition& mu) {
  if (lambda.size() + mu.size() > kMonomialProductBound)
    throw BoundError("monomial product of degree above " + std::to_string(kMonomialProductBound));
  // no monomial of the product has more than l(lambda) + l(mu) nonzero
  // exponents, so this many variables already determine every coefficient
  const auto n = static_cast<std::size_t>(lambda.length() + mu.length());
  const auto left = exponent_vectors(lambda, n);
  const auto right = exponent_vectors(mu, n);
  std::map<Partition, long> counts;
  std::vector<int> sum(n);
  for (const auto& a : left)
    for (const auto& b : right) {
      // the coefficient of m_nu is the coefficient of the dominant monomial x^nu
      bool decreasing = true;
      for (std::size_t i = 0; i < n && decreasing; ++i) {
        sum[i] = a[i] + b[i];
        decreasing = i == 0 || sum[i] <= sum[i - 1];
      }
      if (decreasing) ++counts[Partition(sum)];
    }
  SymFunc out;
  for (const auto& [nu, c] : counts) out.add(nu, QPoly::constant(c));
  return out;
}

SymFunc multiply(const SymFunc& a, const SymFunc& b) {
  if (a.basis != SymFunc::Basis::monomial || b.basis != SymFunc::Basis::monomial)
    throw std::invalid_argument("multiply expects monomial-basis expansions");
  SymFunc out;
  for (const auto& [la, ca] : a.terms)
    for (const auto& [lb, cb] : b.terms) out += monomial_product(la, lb).scaled(ca * cb);
  return out;
}

SymFunc elementary_to_monomial(const Partition& lambda) {
  if (lambda.size() > kElementaryBound)
    throw BoundError("elementary expansion of degree above " + std::to_string(kElementaryBound));
  SymFunc by_matrices;
  for (const auto& mu : partitions_of(lambda.size()))
    by_matrices.add(mu, QPoly::constant(count_zero_one_matrices(lambda, mu)));

  SymFunc by_products = SymFunc::monomial(Partition{});
  for (int r : lambda.parts()) by_products = multiply(by_products, SymFunc::monomial(Partition::column(r)));

  if (by_matrices != by_products)
    throw VerificationError("e" + lambda.to_string() + ": matrix count " + by_matrices.to_string() +
                            " disagrees with product expansion " + by_products.to_string());
  return by_matrices;
}

namespace {

using ProductTable = std::map<Partition, std::map<Partition, QRational>>;
using Expansion = std::map<Partition, QRational>;

// Solves u_lambda = sum_kappa c_kappa U_kappa, where U_kappa is the product of
// column generators indexed by kappa and table[kappa][mu] its coefficient on
// u_mu. The product indexed by mu' has leading term u_mu; every other term
// must be lexicographically smaller, which makes the system triangular.
Expansion invert_products(const Partition& lambda, const ProductTable& table) {
  std::map<Partition, Expansion> solved;
  std::function<const Expansion&(const Partition&)> solve = [&](const Partition& target) -> const Expansion& {
    if (auto it = solved.find(target); it != solved.end()) return it->second;
    const Partition pivot_row = target.conjugate();
    const auto& row = table.at(pivot_row);
    auto diag = row.find(target);
    if (diag == row.end() || diag->second.is_zero())
      throw VerificationError("product " + pivot_row.to_string() + " has no leading term " + target.to_string());
    Expansion result{{pivot_row, QRational(QPoly{1})}};
    for (const auto& [mu, c] : row) {
      if (mu == target) continue;
      if (!(mu < target))
        throw VerificationError("product " + pivot_row.to_string() + " has term " + mu.to_string() + " above " +
                                target.to_string());
      for (const auto& [kappa, d] : solve(mu)) result[kappa] -= c * d;
    }
    for (auto& [kappa, c] : result) c /= diag->second;
    std::erase_if(result, [](const auto& term) { return term.second.is_zero(); });
    return solved.emplace(target, std::move(result)).first->second;
  };
  return solve(lambda);
}

std::map<Partition, QPoly> integral_expansion(const Partition& lambda, const ProductTable& table) {
  std::map<Partition, QPoly> out;
  for (const auto& [kappa, c] : invert_products(lambda, table)) {
    if (!c.is_polynomial())
      throw VerificationError("coefficient " + c.to_string("t") + " of u" + lambda.to_string() +
                              " is not an integer polynomial");
    out.emplace(kappa, c.num());
  }
  return out;
}

SymFunc elementary_image(const std::map<Partition, QPoly>& expansion) {
  SymFunc out;
  for (const auto& [kappa, c] : expansion) out += elementary_to_monomial(kappa).scaled(c);
  return out;
}

}  // namespace

namespace {

ProductTable f1t_product_table(int n) {
  ProductTable table;
  for (const auto& kappa : partitions_of(n)) {
    auto& row = table[kappa];
    const HallElement product = elementary_product_expansion(kappa);
    for (const auto& [mu, c] : product.terms()) {
      if (denominator(c) != 1) throw VerificationError("non-integral subobject count");
      row.emplace(mu, QRational(QPoly::constant(numerator(c))));
    }
  }
  return table;
}

ProductTable hall_product_table(int n) {
  ProductTable table;
  const auto labels = partitions_of(n);
  for (const auto& kappa : labels) {
    auto& row = table[kappa];
    for (const auto& mu : labels)
      if (QPoly b = b_polynomial(kappa, mu); !b.is_zero()) row.emplace(mu, QRational(std::move(b)));
  }
  return table;
}

// Tables depend only on the degree; built once per degree and kept.
const ProductTable& cached_table(bool hall, int n) {
  static std::mutex mutex;
  static std::map<std::pair<bool, int>, ProductTable> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find({hall, n});
  if (it == cache.end()) it = cache.emplace(std::make_pair(hall, n), hall ? hall_product_table(n) : f1t_product_table(n)).first;
  return it->second;
}

}  // namespace

std::map<Partition, QPoly> f1t_in_elementary_products(const Partition& lambda) {
  if (lambda.size() > kPhiImageBound) throw BoundError("F_1[[t]] image above degree " + std::to_string(kPhiImageBound));
  return integral_expansion(lambda, cached_table(false, lambda.size()));
}

std::map<Partition, QPoly> hall_in_elementary_products(const Partition& lambda) {
  if (lambda.size() > kHallLittlewoodBound)
    throw BoundError("Hall-Littlewood image above degree " + std::to_string(kHallLittlewoodBound));
  return integral_expansion(lambda, cached_table(true, lambda.size()));
}

SymFunc phi_image(const Partition& lambda) {
  SymFunc image = elementary_image(f1t_in_elementary_products(lambda));
  if (image != SymFunc::monomial(lambda))
    throw VerificationError("image of u" + lambda.to_string() + " is " + image.to_string() + ", not m" + lambda.to_string());
  return image;
}

SymFunc hall_littlewood_image(const Partition& lambda) {
  SymFunc image = elementary_image(hall_in_elementary_products(lambda));
  const SymFunc at_one = image.specialized(1);
  if (at_one != phi_image(lambda))
    throw VerificationError("image of u" + lambda.to_string() + " at t = 1 is " + at_one.to_string());
  return image;
}

}  // namespace hallforge
