#include "hallforge/fq_module.hpp"

#include <algorithm>
#include <future>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "hallforge/errors.hpp"

namespace hallforge {

namespace {

bool fits_bound(int q, int n, std::uint64_t bound) {
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= static_cast<std::uint64_t>(q);
    if (total > bound) return false;
  }
  return true;
}

int module_nilpotency(const Partition& type) { return std::max(1, type.largest()); }

}  // namespace

FqModule::FqModule(int q, Partition type, int nilpotency, std::uint64_t element_bound)
    : field_(&FiniteField::get(q)), type_(std::move(type)), nilpotency_(nilpotency) {
  if (nilpotency_ < 1) throw std::invalid_argument("nilpotency order must be positive");
  if (type_.largest() > nilpotency_)
    throw std::invalid_argument("module type " + type_.to_string() + " has a part larger than N=" + std::to_string(nilpotency_));
  if (!fits_bound(q, type_.size(), element_bound))
    throw BoundError("module of type " + type_.to_string() + " over F_" + std::to_string(q) + " exceeds the element bound");
  int coord = 0;
  for (int i = 0; i < type_.length(); ++i) {
    offset_.push_back(coord);
    for (int k = 0; k < type_[static_cast<std::size_t>(i)]; ++k, ++coord) {
      summand_.push_back(i);
      power_.push_back(k);
    }
  }
}

BigInt FqModule::element_count() const { return ipow(BigInt(q()), static_cast<unsigned>(dim())); }

int FqModule::coordinate(int summand, int power) const {
  if (summand < 0 || summand >= type_.length() || power < 0 || power >= type_[static_cast<std::size_t>(summand)])
    throw std::out_of_range("no such coordinate");
  return offset_[static_cast<std::size_t>(summand)] + power;
}

Vec FqModule::apply_t(const Vec& v) const {
  Vec out(v.size(), 0);
  for (std::size_t c = 0; c + 1 < v.size(); ++c)
    if (summand_[c] == summand_[c + 1]) out[c + 1] = v[c];
  return out;
}

Vec FqModule::apply_t_power(Vec v, int k) const {
  for (int i = 0; i < k; ++i) v = apply_t(v);
  return v;
}

Matrix FqModule::t_matrix() const {
  Matrix t = linalg::zeros(dim(), dim());
  for (int c = 0; c + 1 < dim(); ++c)
    if (summand_of(c) == summand_of(c + 1)) t[static_cast<std::size_t>(c + 1)][static_cast<std::size_t>(c)] = 1;
  return t;
}

std::vector<Vec> FqModule::elements() const { return linalg::all_vectors(dim(), q()); }

Partition FqModule::recomputed_type() const { return type_of(*this, Submodule{linalg::identity(dim())}); }

std::vector<Vec> Submodule::elements(const FiniteField& field) const {
  const int k = dim();
  const std::size_t n = basis.empty() ? 0 : basis.front().size();
  std::vector<Vec> out;
  for (const auto& coeffs : linalg::all_vectors(k, field.order())) {
    Vec v(n, 0);
    for (int i = 0; i < k; ++i) linalg::axpy(v, coeffs[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(i)], field);
    out.push_back(std::move(v));
  }
  return out;
}

bool Submodule::contains(const Submodule& other, const FiniteField& field) const {
  if (other.dim() > dim()) return false;
  return std::all_of(other.basis.begin(), other.basis.end(), [&](const Vec& v) { return contains(v, field); });
}

Submodule generated_submodule(const FqModule& m, const std::vector<Vec>& generators) {
  Matrix span = linalg::rref(generators, m.field());
  while (true) {
    Matrix grown = span;
    for (const auto& row : span) grown.push_back(m.apply_t(row));
    grown = linalg::rref(std::move(grown), m.field());
    if (grown.size() == span.size()) return Submodule{std::move(span)};
    span = std::move(grown);
  }
}

bool is_submodule(const FqModule& m, const Matrix& rows) {
  Matrix basis = linalg::rref(rows, m.field());
  return std::all_of(basis.begin(), basis.end(), [&](const Vec& v) { return linalg::in_span(m.apply_t(v), basis, m.field()); });
}

Partition type_from_power_dims(const std::vector<int>& dims) {
  std::vector<int> conj;
  for (std::size_t i = 0; i + 1 <= dims.size(); ++i) {
    const int next = i + 1 < dims.size() ? dims[i + 1] : 0;
    if (dims[i] - next > 0) conj.push_back(dims[i] - next);
  }
  return Partition(std::move(conj)).conjugate();
}

Partition type_of(const FqModule& m) { return m.type(); }

Partition type_of(const FqModule& m, const Submodule& sub) {
  std::vector<int> dims;
  Matrix cur = sub.basis;
  while (!cur.empty()) {
    dims.push_back(static_cast<int>(cur.size()));
    for (auto& row : cur) row = m.apply_t(row);
    cur = linalg::rref(std::move(cur), m.field());
  }
  return type_from_power_dims(dims);
}

Partition quotient_type(const FqModule& m, const Submodule& sub) {
  const int n = m.dim(), k = sub.dim();
  std::vector<int> dims{n - k};
  for (int i = 1; i <= m.type().largest(); ++i) {
    // t^iM is spanned by the coordinates of power >= i; what U adds is its
    // projection onto the remaining coordinates.
    int top = 0;
    std::vector<int> low;
    for (int c = 0; c < n; ++c) {
      if (m.power_of(c) >= i)
        ++top;
      else
        low.push_back(c);
    }
    Matrix proj;
    for (const auto& row : sub.basis) {
      Vec r;
      r.reserve(low.size());
      for (int c : low) r.push_back(row[static_cast<std::size_t>(c)]);
      proj.push_back(std::move(r));
    }
    const int d = top + linalg::rank(std::move(proj), m.field()) - k;
    if (d == 0) break;
    dims.push_back(d);
  }
  if (dims.front() == 0) return {};
  return type_from_power_dims(dims);
}

Partition quotient_type(const FqModule& m, const Submodule& outer, const Submodule& inner) {
  const int base = inner.dim();
  std::vector<int> dims;
  Matrix cur = outer.basis;
  while (true) {
    Matrix joined = cur;
    joined.insert(joined.end(), inner.basis.begin(), inner.basis.end());
    const int d = linalg::rank(std::move(joined), m.field()) - base;
    if (d <= 0) break;
    dims.push_back(d);
    for (auto& row : cur) row = m.apply_t(row);
  }
  return type_from_power_dims(dims);
}

namespace {

// All RREF bases with the given pivot columns whose span is t-stable.
void enumerate_cell(const FqModule& m, const std::vector<int>& pivots, const std::function<void(const Matrix&)>& visit) {
  const int n = m.dim();
  const int k = static_cast<int>(pivots.size());
  const FiniteField& field = m.field();
  const int q = field.order();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<std::vector<int>> free_cols(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j)
    for (int c = pivots[static_cast<std::size_t>(j)] + 1; c < n; ++c)
      if (!is_pivot[static_cast<std::size_t>(c)]) free_cols[static_cast<std::size_t>(j)].push_back(c);

  Matrix rows(static_cast<std::size_t>(k), Vec(static_cast<std::size_t>(n), 0));

  std::function<void(int)> fill = [&](int j) {
    if (j < 0) {
      visit(rows);
      return;
    }
    Vec& row = rows[static_cast<std::size_t>(j)];
    std::fill(row.begin(), row.end(), Scalar{0});
    row[static_cast<std::size_t>(pivots[static_cast<std::size_t>(j)])] = 1;
    const auto& frees = free_cols[static_cast<std::size_t>(j)];
    while (true) {
      Vec image = m.apply_t(row);
      for (int r = j + 1; r < k; ++r) {
        const auto p = static_cast<std::size_t>(pivots[static_cast<std::size_t>(r)]);
        if (image[p] != 0) linalg::axpy(image, field.neg(image[p]), rows[static_cast<std::size_t>(r)], field);
      }
      if (linalg::is_zero(image)) fill(j - 1);
      std::size_t f = 0;
      for (; f < frees.size(); ++f) {
        auto& x = row[static_cast<std::size_t>(frees[f])];
        if (++x < q) break;
        x = 0;
      }
      if (f == frees.size()) break;
    }
  };
  fill(k - 1);
}

std::vector<std::vector<int>> pivot_sets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return out;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

void for_each_submodule_of_dim(const FqModule& m, int dim, const std::function<void(const Matrix&)>& visit) {
  for (const auto& pivots : pivot_sets(m.dim(), dim)) enumerate_cell(m, pivots, visit);
}

std::vector<Submodule> enumerate_submodules(const FqModule& m, const std::optional<Partition>& sub_type,
                                            const std::optional<Partition>& quot_type) {
  std::vector<Submodule> out;
  int lo = 0, hi = m.dim();
  if (sub_type) lo = hi = sub_type->size();
  if (quot_type) {
    const int k = m.dim() - quot_type->size();
    if (sub_type && k != lo) return out;
    lo = hi = k;
  }
  if (lo < 0 || hi > m.dim()) return out;
  for (int k = lo; k <= hi; ++k)
    for_each_submodule_of_dim(m, k, [&](const Matrix& rows) {
      Submodule s{rows};
      if (sub_type && type_of(m, s) != *sub_type) return;
      if (quot_type && quotient_type(m, s) != *quot_type) return;
      out.push_back(std::move(s));
    });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Submodule> enumerate_submodules_by_closure(const FqModule& m) {
  const auto elements = m.elements();
  std::set<Submodule> seen{Submodule{}};
  std::vector<Submodule> frontier{Submodule{}};
  while (!frontier.empty()) {
    std::vector<Submodule> next;
    for (const auto& u : frontier)
      for (const auto& v : elements) {
        if (u.contains(v, m.field())) continue;
        Matrix gens = u.basis;
        gens.push_back(v);
        Submodule w = generated_submodule(m, gens);
        if (seen.insert(w).second) next.push_back(std::move(w));
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

namespace {

SubmoduleCensus compute_census(int q, const Partition& type, int dim) {
  const FqModule m(q, type, module_nilpotency(type));
  auto cells = pivot_sets(m.dim(), dim);
  const unsigned workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::vector<std::future<SubmoduleCensus>> parts;
  for (unsigned w = 0; w < workers; ++w)
    parts.push_back(std::async(workers == 1 ? std::launch::deferred : std::launch::async, [&, w] {
      SubmoduleCensus local;
      for (std::size_t i = w; i < cells.size(); i += workers)
        enumerate_cell(m, cells[i], [&](const Matrix& rows) {
          const Submodule s{rows};
          ++local[{type_of(m, s), quotient_type(m, s)}];
        });
      return local;
    }));
  SubmoduleCensus total;
  for (auto& part : parts)
    for (const auto& [key, count] : part.get()) total[key] += count;
  return total;
}

}  // namespace

const SubmoduleCensus& submodule_census(int q, const Partition& type, int dim) {
  static std::mutex guard;
  static std::map<std::tuple<int, Partition, int>, std::unique_ptr<SubmoduleCensus>> cache;
  std::lock_guard lock(guard);
  auto& slot = cache[{q, type, dim}];
  if (!slot) slot = std::make_unique<SubmoduleCensus>(compute_census(q, type, dim));
  return *slot;
}

bool diagram_contains(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length()) return false;
  for (int i = 0; i < inner.length(); ++i)
    if (inner[static_cast<std::size_t>(i)] > outer[static_cast<std::size_t>(i)]) return false;
  return true;
}

BigInt hall_constant_direct(int q, const Partition& lambda, const Partition& mu, const Partition& nu) {
  PrimePower::of(q);
  if (mu.size() + nu.size() != lambda.size()) return 0;
  // a submodule or quotient of M_lambda has a type fitting inside lambda
  if (!diagram_contains(lambda, mu) || !diagram_contains(lambda, nu)) return 0;
  const auto& census = submodule_census(q, lambda, nu.size());
  auto it = census.find({nu, mu});
  return it == census.end() ? BigInt(0) : BigInt(it->second);
}

BigInt flag_count_direct(int q, const Partition& lambda, const std::vector<Partition>& quotient_types) {
  int total = 0;
  for (const auto& t : quotient_types) total += t.size();
  if (total != lambda.size()) return 0;
  if (quotient_types.empty()) return lambda.empty() ? 1 : 0;
  const FqModule m(q, lambda, module_nilpotency(lambda));
  const std::size_t s = quotient_types.size();

  // level j holds the candidates for M_j, of dimension sum_{i>j} |quotient i|
  std::vector<std::vector<Submodule>> levels(s + 1);
  std::vector<std::vector<BigInt>> counts(s + 1);
  int dim = 0;
  for (std::size_t j = s + 1; j-- > 0;) {
    if (j < s) dim += quotient_types[j].size();
    for_each_submodule_of_dim(m, dim, [&](const Matrix& rows) { levels[j].push_back(Submodule{rows}); });
  }
  counts[s].assign(levels[s].size(), BigInt(1));
  for (std::size_t j = s; j-- > 0;) {
    counts[j].assign(levels[j].size(), BigInt(0));
    for (std::size_t u = 0; u < levels[j].size(); ++u)
      for (std::size_t w = 0; w < levels[j + 1].size(); ++w) {
        if (counts[j + 1][w] == 0) continue;
        if (!levels[j][u].contains(levels[j + 1][w], m.field())) continue;
        if (quotient_type(m, levels[j][u], levels[j + 1][w]) != quotient_types[j]) continue;
        counts[j][u] += counts[j + 1][w];
      }
  }
  return counts[0].empty() ? BigInt(0) : counts[0][0];
}

std::vector<int> admissible_sample_points(int size) {
  std::vector<int> out;
  for (int q : prime_powers_upto(kMaxFieldOrder))
    if (fits_bound(q, size, kElementBound)) out.push_back(q);
  return out;
}

HallPolynomialFit hall_polynomial_fit(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.size() > kHallPolynomialSizeBound)
    throw BoundError("hall_polynomial: |lambda| exceeds " + std::to_string(kHallPolynomialSizeBound));
  HallPolynomialFit fit;
  fit.degree_bound = lambda.n_stat() - mu.n_stat() - nu.n_stat();
  const auto points = admissible_sample_points(lambda.size());
  if (lambda.size() != mu.size() + nu.size() || !diagram_contains(lambda, mu) || !diagram_contains(lambda, nu)) {
    // zero at every q; the two recorded samples are the direct counts
    for (std::size_t i = 0; i < std::min<std::size_t>(2, points.size()); ++i)
      fit.samples.emplace_back(BigInt(points[i]), hall_constant_direct(points[i], lambda, mu, nu));
    return fit;
  }
  const int bound = static_cast<int>(std::max(fit.degree_bound, 0L));
  if (static_cast<int>(points.size()) < bound + 2)
    throw BoundError("hall_polynomial: not enough admissible sample points for degree bound " + std::to_string(bound));
  for (int i = 0; i < bound + 2; ++i) {
    const int q = points[static_cast<std::size_t>(i)];
    fit.samples.emplace_back(BigInt(q), hall_constant_direct(q, lambda, mu, nu));
  }
  fit.poly = interpolate_integer_poly(fit.samples, bound);
  if (fit.poly.degree() > fit.degree_bound)
    throw VerificationError("hall polynomial exceeds the degree bound for " + lambda.to_string() + "," + mu.to_string() + "," +
                            nu.to_string());
  return fit;
}

QPoly hall_polynomial(const Partition& lambda, const Partition& mu, const Partition& nu) {
  return hall_polynomial_fit(lambda, mu, nu).poly;
}

namespace {

class AutomorphismCounter {
 public:
  explicit AutomorphismCounter(const FqModule& m) : m_(m) {
    for (int i = 0; i < m.type().length(); ++i) {
      const int len = m.type()[static_cast<std::size_t>(i)];
      // the image of the i-th generator must be killed by t^{len}
      std::vector<int> coords;
      for (int c = 0; c < m.dim(); ++c)
        if (m.power_of(c) + len >= m.type()[static_cast<std::size_t>(m.summand_of(c))]) coords.push_back(c);
      std::vector<Vec> candidates;
      for (const auto& coeffs : linalg::all_vectors(static_cast<int>(coords.size()), m.q())) {
        Vec v(static_cast<std::size_t>(m.dim()), 0);
        for (std::size_t j = 0; j < coords.size(); ++j) v[static_cast<std::size_t>(coords[j])] = coeffs[j];
        candidates.push_back(std::move(v));
      }
      candidates_.push_back(std::move(candidates));
    }
  }

  BigInt count(std::size_t i, const Matrix& span) {
    if (i == candidates_.size()) return 1;
    auto key = std::make_pair(i, span);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const int len = m_.type()[i];
    BigInt total = 0;
    for (const auto& v : candidates_[i]) {
      Matrix grown = span;
      Vec w = v;
      for (int k = 0; k < len; ++k) {
        grown.push_back(w);
        w = m_.apply_t(w);
      }
      grown = linalg::rref(std::move(grown), m_.field());
      if (static_cast<int>(grown.size()) != static_cast<int>(span.size()) + len) continue;
      total += count(i + 1, grown);
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  const FqModule& m_;
  std::vector<std::vector<Vec>> candidates_;
  std::map<std::pair<std::size_t, Matrix>, BigInt> memo_;
};

}  // namespace

BigInt automorphism_count(const FqModule& m) {
  if (m.type().largest() <= 1) return gl_order(m.q(), m.dim());
  AutomorphismCounter counter(m);
  return counter.count(0, Matrix{});
}

BigInt automorphism_count(int q, const Partition& type) { return automorphism_count(FqModule(q, type, module_nilpotency(type))); }

BigInt hom_count(int q, const Partition& lambda, const Partition& mu) {
  unsigned exponent = 0;
  for (int a : lambda.parts())
    for (int b : mu.parts()) exponent += static_cast<unsigned>(std::min(a, b));
  return ipow(BigInt(q), exponent);
}

Rational extension_groupoid_cardinality(int q, const Partition& quot, const Partition& sub, const Partition& mid,
                                        int nilpotency) {
  for (const auto* p : {&quot, &sub, &mid})
    if (p->largest() > nilpotency) throw std::invalid_argument("type " + p->to_string() + " needs a larger nilpotency order");
  if (quot.size() + sub.size() != mid.size()) return 0;
  const BigInt g = hall_constant_direct(q, mid, quot, sub);
  if (g == 0) return 0;
  return Rational(g * automorphism_count(q, sub) * automorphism_count(q, quot), automorphism_count(q, mid));
}

namespace {

Matrix block_inclusion(int offset, int part, int whole) {
  Matrix m = linalg::zeros(whole, part);
  for (int i = 0; i < part; ++i) m[static_cast<std::size_t>(offset + i)][static_cast<std::size_t>(i)] = 1;
  return m;
}

Matrix block_projection(int offset, int part, int whole) {
  Matrix m = linalg::zeros(part, whole);
  for (int i = 0; i < part; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(offset + i)] = 1;
  return m;
}

}  // namespace

Frame split_frame(int a, int c, int a2, int c2) {
  Frame f;
  f.a = a;
  f.c = c;
  f.a2 = a2;
  f.c2 = c2;
  f.a1 = a + a2;
  f.c1 = c + c2;
  f.b = a + c;
  f.b2 = a2 + c2;
  f.top_in = block_inclusion(0, a, f.b);
  f.top_out = block_projection(a, c, f.b);
  f.left_in = block_inclusion(0, a, f.a1);
  f.left_out = block_projection(a, a2, f.a1);
  f.right_in = block_inclusion(0, c, f.c1);
  f.right_out = block_projection(c, c2, f.c1);
  f.bottom_in = block_inclusion(0, a2, f.b2);
  f.bottom_out = block_projection(a2, c2, f.b2);
  return f;
}

bool is_short_exact(const Matrix& in, const Matrix& out, int src, int mid, int tgt, const FiniteField& field) {
  if (src + tgt != mid) return false;
  if (static_cast<int>(in.size()) != mid || static_cast<int>(out.size()) != tgt) return false;
  if (linalg::rank(linalg::transpose(in, src), field) != src) return false;
  if (linalg::rank(out, field) != tgt) return false;
  const Matrix composite = linalg::multiply(out, in, mid, src, field);
  return std::all_of(composite.begin(), composite.end(), [](const Vec& r) { return linalg::is_zero(r); });
}

Rational frame_fiber_cardinality(int q, const Frame& f) {
  const FiniteField& field = FiniteField::get(q);
  if (!is_short_exact(f.top_in, f.top_out, f.a, f.b, f.c, field) ||
      !is_short_exact(f.bottom_in, f.bottom_out, f.a2, f.b2, f.c2, field) ||
      !is_short_exact(f.left_in, f.left_out, f.a, f.a1, f.a2, field) ||
      !is_short_exact(f.right_in, f.right_out, f.c, f.c1, f.c2, field))
    throw std::invalid_argument("frame has a non-exact row or column");

  const int y = f.a1 + f.c1;
  if (!fits_bound(q, f.a1 * f.b, std::uint64_t{1} << 22) || !fits_bound(q, f.b2 * f.c1, std::uint64_t{1} << 22))
    throw BoundError("frame too large to enumerate");

  // Fix the middle row A' -> A' + C' -> C' as the split sequence; the maps
  // B -> Y and Y -> B'' then split into a forced block and a free block.
  const Matrix b_lower = linalg::multiply(f.right_in, f.top_out, f.c, f.b, field);     // C' block of B -> Y
  const Matrix d_left = linalg::multiply(f.bottom_in, f.left_out, f.a2, f.a1, field);   // A' block of Y -> B''

  std::vector<Matrix> ups;  // B -> Y
  linalg::for_each_matrix(f.a1, f.b, field, [&](const Matrix& upper) {
    if (linalg::multiply(upper, f.top_in, f.b, f.a, field) != f.left_in) return true;
    Matrix full = upper;
    full.insert(full.end(), b_lower.begin(), b_lower.end());
    if (linalg::rank(linalg::transpose(full, f.b), field) == f.b) ups.push_back(std::move(full));
    return true;
  });
  std::vector<Matrix> downs;  // Y -> B''
  linalg::for_each_matrix(f.b2, f.c1, field, [&](const Matrix& right) {
    if (linalg::multiply(f.bottom_out, right, f.b2, f.c1, field) != f.right_out) return true;
    Matrix full = linalg::zeros(f.b2, y);
    for (int i = 0; i < f.b2; ++i) {
      for (int j = 0; j < f.a1; ++j) full[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = d_left[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      for (int j = 0; j < f.c1; ++j) full[static_cast<std::size_t>(i)][static_cast<std::size_t>(f.a1 + j)] = right[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    if (linalg::rank(full, field) == f.b2) downs.push_back(std::move(full));
    return true;
  });

  BigInt completions = 0;
  for (const auto& up : ups)
    for (const auto& down : downs) {
      const Matrix composite = linalg::multiply(down, up, y, f.b, field);
      if (std::all_of(composite.begin(), composite.end(), [](const Vec& r) { return linalg::is_zero(r); })) ++completions;
    }
  // stabilizer of the split middle row inside GL(Y): unipotent maps C' -> A'
  return Rational(completions, ipow(BigInt(q), static_cast<unsigned>(f.a1 * f.c1)));
}

}  // namespace hallforge
