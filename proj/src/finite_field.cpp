#include "hallforge/finite_field.hpp"

#include <array>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

#include "hallforge/errors.hpp"

namespace hallforge {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<int> digits(int value, int p, int e) {
  std::vector<int> out(static_cast<std::size_t>(e));
  for (int i = 0; i < e; ++i) {
    out[static_cast<std::size_t>(i)] = value % p;
    value /= p;
  }
  return out;
}

int undigits(const std::vector<int>& d, int p) {
  int v = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) v = v * p + *it;
  return v;
}

// Product of two residues modulo the monic `modulus` of degree e.
int poly_mulmod(int a, int b, const std::vector<int>& modulus, int p, int e) {
  auto da = digits(a, p, e), db = digits(b, p, e);
  std::vector<int> prod(static_cast<std::size_t>(2 * e), 0);
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < e; ++j) prod[static_cast<std::size_t>(i + j)] += da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)];
  for (int k = 2 * e - 1; k >= e; --k) {
    int c = prod[static_cast<std::size_t>(k)] % p;
    prod[static_cast<std::size_t>(k)] = 0;
    if (c == 0) continue;
    // x^k = x^{k-e} * x^e and x^e = -(lower terms of the modulus)
    for (int i = 0; i < e; ++i) prod[static_cast<std::size_t>(k - e + i)] -= c * modulus[static_cast<std::size_t>(i)];
  }
  std::vector<int> out(static_cast<std::size_t>(e));
  for (int i = 0; i < e; ++i) out[static_cast<std::size_t>(i)] = ((prod[static_cast<std::size_t>(i)] % p) + p) % p;
  return undigits(out, p);
}

}  // namespace

bool is_prime_power(int q) {
  if (q < 2) return false;
  int p = 2;
  while (q % p != 0) ++p;
  while (q % p == 0) q /= p;
  return q == 1;
}

PrimePower PrimePower::of(int q, int bound) {
  if (!is_prime_power(q)) throw std::invalid_argument("not a prime power: " + std::to_string(q));
  if (q > bound) throw BoundError("field order " + std::to_string(q) + " exceeds bound " + std::to_string(bound));
  PrimePower pq;
  pq.q = q;
  pq.p = 2;
  while (q % pq.p != 0) ++pq.p;
  pq.e = 0;
  for (int r = q; r > 1; r /= pq.p) ++pq.e;
  return pq;
}

std::vector<int> prime_powers_upto(int upto) {
  std::vector<int> out;
  for (int q = 2; q <= upto; ++q)
    if (is_prime_power(q)) out.push_back(q);
  return out;
}

FiniteField::FiniteField(PrimePower pq) : pq_(pq) {
  const int q = pq.q, p = pq.p, e = pq.e;
  if (!is_prime(p)) throw std::invalid_argument("characteristic is not prime");
  const auto qs = static_cast<std::size_t>(q);
  add_.assign(qs * qs, 0);
  mul_.assign(qs * qs, 0);
  neg_.assign(qs, 0);
  inv_.assign(qs, 0);

  for (int a = 0; a < q; ++a) {
    auto da = digits(a, p, e);
    for (int b = 0; b < q; ++b) {
      auto db = digits(b, p, e);
      std::vector<int> s(static_cast<std::size_t>(e));
      for (int i = 0; i < e; ++i) s[static_cast<std::size_t>(i)] = (da[static_cast<std::size_t>(i)] + db[static_cast<std::size_t>(i)]) % p;
      add_[static_cast<std::size_t>(a * q + b)] = static_cast<Scalar>(undigits(s, p));
    }
    std::vector<int> n(static_cast<std::size_t>(e));
    for (int i = 0; i < e; ++i) n[static_cast<std::size_t>(i)] = (p - da[static_cast<std::size_t>(i)]) % p;
    neg_[static_cast<std::size_t>(a)] = static_cast<Scalar>(undigits(n, p));
  }

  // Lowest monic polynomial of degree e (ordered by its encoded lower
  // coefficients) for which the residue ring has no zero divisors.
  for (int code = 0; code < q; ++code) {
    std::vector<int> candidate = digits(code, p, e);
    bool field = true;
    std::vector<Scalar> table(qs * qs, 0);
    for (int a = 1; a < q && field; ++a)
      for (int b = 1; b < q; ++b) {
        int c = poly_mulmod(a, b, candidate, p, e);
        if (c == 0) {
          field = false;
          break;
        }
        table[static_cast<std::size_t>(a * q + b)] = static_cast<Scalar>(c);
      }
    if (!field) continue;
    candidate.push_back(1);
    modulus_ = candidate;
    mul_ = std::move(table);
    break;
  }
  if (modulus_.empty()) throw std::logic_error("no irreducible polynomial found");
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (mul_[static_cast<std::size_t>(a * q + b)] == 1) inv_[static_cast<std::size_t>(a)] = static_cast<Scalar>(b);
}

const FiniteField& FiniteField::get(int q) {
  static std::mutex guard;
  static std::array<std::unique_ptr<FiniteField>, kMaxFieldOrder + 1> fields;
  PrimePower pq = PrimePower::of(q);
  std::lock_guard lock(guard);
  auto& slot = fields[static_cast<std::size_t>(q)];
  if (!slot) slot = std::make_unique<FiniteField>(pq);
  return *slot;
}

BigInt gl_order(int q, int n) { return count_injections(q, n, n); }

BigInt count_injections(int q, int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("negative dimension");
  if (m > n) return 0;
  const BigInt qn = ipow(BigInt(q), static_cast<unsigned>(n));
  BigInt r = 1;
  for (int i = 0; i < m; ++i) r *= qn - ipow(BigInt(q), static_cast<unsigned>(i));
  return r;
}

}  // namespace hallforge
