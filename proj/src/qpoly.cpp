#include "hallforge/qpoly.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hallforge/errors.hpp"

namespace hallforge {

QPoly::QPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

QPoly::QPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::constant(const BigInt& c) { return QPoly(std::vector<BigInt>{c}); }

QPoly QPoly::monomial(unsigned k, const BigInt& c) {
  std::vector<BigInt> v(k + 1, BigInt(0));
  v[k] = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& QPoly::leading() const {
  if (coeffs_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

BigInt QPoly::eval(const BigInt& q) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

Rational QPoly::eval(const Rational& q) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + Rational(*it);
  return acc;
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), BigInt(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), BigInt(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const QPoly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QPoly QPoly::scaled(const BigInt& c) const {
  QPoly r = *this;
  for (auto& x : r.coeffs_) x *= c;
  r.trim();
  return r;
}

QPoly QPoly::shifted(unsigned k) const {
  if (is_zero()) return {};
  std::vector<BigInt> v(k, BigInt(0));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return QPoly(std::move(v));
}

QPoly QPoly::divide_exact(const QPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (is_zero()) return {};
  if (degree() < divisor.degree()) throw VerificationError("inexact polynomial division: " + to_string() + " / " + divisor.to_string());
  std::vector<BigInt> rem = coeffs_;
  const int dd = divisor.degree();
  std::vector<BigInt> quot(static_cast<std::size_t>(degree() - dd + 1), BigInt(0));
  const BigInt& lc = divisor.leading();
  for (int k = degree() - dd; k >= 0; --k) {
    const BigInt& top = rem[static_cast<std::size_t>(k + dd)];
    if (top == 0) continue;
    if (top % lc != 0) throw VerificationError("non-integral quotient in polynomial division");
    BigInt c = top / lc;
    quot[static_cast<std::size_t>(k)] = c;
    for (int i = 0; i <= dd; ++i) rem[static_cast<std::size_t>(k + i)] -= c * divisor.coeffs_[static_cast<std::size_t>(i)];
  }
  for (const auto& r : rem)
    if (r != 0) throw VerificationError("nonzero remainder in exact polynomial division: " + to_string() + " / " + divisor.to_string());
  return QPoly(std::move(quot));
}

BigInt QPoly::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) g = boost::multiprecision::gcd(g, c);
  return boost::multiprecision::abs(g);
}

QPoly QPoly::primitive_part() const {
  if (is_zero()) return {};
  BigInt c = content();
  if (leading() < 0) c = -c;
  QPoly r = *this;
  for (auto& x : r.coeffs_) x /= c;
  return r;
}

std::string QPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    BigInt c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c;
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QPoly& p) { return os << p.to_string(); }

namespace {

QPoly pseudo_remainder(QPoly a, const QPoly& b) {
  const BigInt& lc = b.leading();
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const unsigned shift = static_cast<unsigned>(a.degree() - b.degree());
    a = a.scaled(lc) - b.scaled(a.leading()).shifted(shift);
  }
  return a;
}

}  // namespace

QPoly poly_gcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  QPoly x = a.primitive_part();
  QPoly y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    QPoly r = pseudo_remainder(x, y);
    x = y;
    y = r.primitive_part();
  }
  return x.primitive_part();
}

QRational::QRational(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("QRational with zero denominator");
  normalize();
}

QRational QRational::q_power(long k) {
  if (k >= 0) return QRational(QPoly::monomial(static_cast<unsigned>(k)));
  return QRational(QPoly{1}, QPoly::monomial(static_cast<unsigned>(-k)));
}

void QRational::normalize() {
  if (num_.is_zero()) {
    den_ = QPoly{1};
    return;
  }
  QPoly g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divide_exact(g);
    den_ = den_.divide_exact(g);
  }
  BigInt c = boost::multiprecision::gcd(num_.content(), den_.content());
  if (den_.leading() < 0) c = -c;
  if (c != 1) {
    num_ = num_.divide_exact(QPoly::constant(c));
    den_ = den_.divide_exact(QPoly::constant(c));
  }
}

Rational QRational::eval(const Rational& q) const {
  Rational d = den_.eval(q);
  if (d == 0) throw std::domain_error("QRational evaluated at a pole");
  return num_.eval(q) / d;
}

QRational& QRational::operator+=(const QRational& rhs) {
  *this = QRational(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
  return *this;
}

QRational& QRational::operator-=(const QRational& rhs) {
  *this = QRational(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
  return *this;
}

QRational& QRational::operator*=(const QRational& rhs) {
  *this = QRational(num_ * rhs.num_, den_ * rhs.den_);
  return *this;
}

QRational& QRational::operator/=(const QRational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("QRational division by zero");
  *this = QRational(num_ * rhs.den_, den_ * rhs.num_);
  return *this;
}

std::string QRational::to_string(const std::string& var) const {
  if (is_polynomial()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

QPoly q_int(int n) {
  if (n < 0) throw std::invalid_argument("q_int of a negative integer");
  return QPoly(std::vector<BigInt>(static_cast<std::size_t>(n), BigInt(1)));
}

QPoly q_factorial(int n) {
  if (n < 0) throw std::invalid_argument("q_factorial of a negative integer");
  QPoly r{1};
  for (int k = 2; k <= n; ++k) r *= q_int(k);
  return r;
}

QPoly q_binomial(int n, int m) {
  if (m < 0 || n < 0 || m > n) throw std::invalid_argument("q_binomial requires 0 <= m <= n");
  return q_factorial(n).divide_exact(q_factorial(m) * q_factorial(n - m));
}

QPoly inversion_partition_function(int n) {
  if (n < 0) throw std::invalid_argument("negative permutation size");
  if (n > kInversionBound) throw BoundError("inversion_partition_function: n exceeds " + std::to_string(kInversionBound));
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 1);
  std::vector<BigInt> counts(static_cast<std::size_t>(n * (n - 1) / 2 + 1), BigInt(0));
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (sigma[static_cast<std::size_t>(i)] > sigma[static_cast<std::size_t>(j)]) ++inv;
    counts[static_cast<std::size_t>(inv)] += 1;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return QPoly(std::move(counts));
}

int lattice_path_area(const std::vector<bool>& north_steps) {
  const int m = static_cast<int>(std::count(north_steps.begin(), north_steps.end(), true));
  int height = 0, area = 0;
  for (bool north : north_steps) {
    if (north)
      ++height;
    else
      area += m - height;  // the unit column above this east step
  }
  return area;
}

QPoly lattice_area_partition_function(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("negative rectangle side");
  if (n + m > kLatticeAreaBound) throw BoundError("lattice_area_partition_function: n+m exceeds " + std::to_string(kLatticeAreaBound));
  const int total = n + m;
  std::vector<BigInt> counts(static_cast<std::size_t>(n * m + 1), BigInt(0));
  // iterate m-subsets of {1..total} as boolean selections in lexicographic order
  std::vector<bool> steps(static_cast<std::size_t>(total), false);
  std::fill(steps.end() - m, steps.end(), true);
  do {
    counts[static_cast<std::size_t>(lattice_path_area(steps))] += 1;
  } while (std::next_permutation(steps.begin(), steps.end()));
  return QPoly(std::move(counts));
}

QPoly interpolate_integer_poly(const std::vector<std::pair<BigInt, BigInt>>& samples, int degree_bound) {
  if (degree_bound < 0) throw std::invalid_argument("negative degree bound");
  const std::size_t k = static_cast<std::size_t>(degree_bound) + 1;
  if (samples.size() < k) throw std::invalid_argument("interpolation needs at least degree_bound + 1 samples");
  std::set<BigInt> seen;
  for (const auto& s : samples)
    if (!seen.insert(s.first).second) throw std::invalid_argument("repeated interpolation point");

  // Newton divided differences over Q, then expand to the monomial basis.
  std::vector<Rational> xs(k), table(k);
  for (std::size_t i = 0; i < k; ++i) {
    xs[i] = Rational(samples[i].first);
    table[i] = Rational(samples[i].second);
  }
  for (std::size_t level = 1; level < k; ++level)
    for (std::size_t i = k - 1; i >= level; --i) table[i] = (table[i] - table[i - 1]) / (xs[i] - xs[i - level]);

  std::vector<Rational> poly(k, Rational(0));
  for (std::size_t idx = k; idx-- > 0;) {
    // poly = poly * (q - xs[idx]) + table[idx]
    std::vector<Rational> next(k, Rational(0));
    for (std::size_t i = 0; i < k; ++i) {
      if (poly[i] == 0) continue;
      if (i + 1 < k) next[i + 1] += poly[i];
      next[i] -= poly[i] * xs[idx];
    }
    next[0] += table[idx];
    poly = std::move(next);
  }
  std::vector<BigInt> coeffs;
  coeffs.reserve(k);
  for (const auto& c : poly) {
    if (denominator(c) != 1) throw VerificationError("interpolant has a non-integer coefficient");
    coeffs.push_back(numerator(c));
  }
  QPoly result(std::move(coeffs));
  for (std::size_t i = k; i < samples.size(); ++i)
    if (result.eval(samples[i].first) != samples[i].second)
      throw VerificationError("held-out sample disagrees with the interpolant at q=" + samples[i].first.str());
  return result;
}

}  // namespace hallforge
