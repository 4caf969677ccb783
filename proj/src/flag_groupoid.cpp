#include "hallforge/flag_groupoid.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>

#include "hallforge/errors.hpp"

namespace hallforge {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

int pivot(const Vec& row) { return linalg::leading_index(row); }

GeneralLinearGroup build_general_linear_group(int q, int dim) {
  if (gl_order(q, dim) > kGeneralLinearOrderBound)
    throw BoundError("GL_" + std::to_string(dim) + "(F_" + std::to_string(q) + ") exceeds the group order bound");
  const FiniteField& field = FiniteField::get(q);
  GeneralLinearGroup gl;
  gl.q = q;
  gl.dim = dim;
  if (dim == 0) {
    gl.elements.push_back(Matrix{});
  } else {
    linalg::for_each_matrix(dim, dim, field, [&](const Matrix& m) {
      if (linalg::rank(m, field) == dim) gl.elements.push_back(m);
      return true;
    });
  }
  for (std::size_t i = 0; i < gl.elements.size(); ++i) gl.index.emplace(gl.elements[i], static_cast<int>(i));
  const int order = static_cast<int>(gl.elements.size());
  FiniteGroup& table = gl.table;
  table.order = order;
  table.identity = gl.index.at(dim == 0 ? Matrix{} : linalg::identity(dim));
  table.table.assign(idx(order * order), 0);
  table.inverse.assign(idx(order), -1);
  for (int g = 0; g < order; ++g)
    for (int h = 0; h < order; ++h) {
      const int gh = dim == 0 ? 0 : gl.index.at(linalg::multiply(gl.elements[idx(g)], gl.elements[idx(h)], dim, dim, field));
      table.table[idx(g * order + h)] = gh;
      if (gh == table.identity) table.inverse[idx(g)] = h;
    }
  return gl;
}

// Every subspace of F_q^dim as an RREF basis.
std::vector<Matrix> all_subspaces(int q, int dim) {
  const FiniteField& field = FiniteField::get(q);
  std::set<Matrix> found{Matrix{}};
  for (int k = 1; k <= dim; ++k)
    linalg::for_each_matrix(k, dim, field, [&](const Matrix& m) {
      Matrix r = linalg::rref(m, field);
      if (static_cast<int>(r.size()) == k) found.insert(std::move(r));
      return true;
    });
  return {found.begin(), found.end()};
}

bool contained(const Matrix& inner, const Matrix& outer, const FiniteField& field) {
  return std::all_of(inner.begin(), inner.end(), [&](const Vec& v) { return linalg::in_span(v, outer, field); });
}

Matrix full_space(int dim) { return dim == 0 ? Matrix{} : linalg::identity(dim); }

Flag act_on(const Flag& flag, const Matrix& g, const FiniteField& field) {
  Flag out{flag.dim, {}};
  for (const auto& m : flag.chain)
    out.chain.push_back(m.empty() ? Matrix{} : linalg::rref(linalg::multiply(m, g, flag.dim, flag.dim, field), field));
  return out;
}

std::vector<Flag> flags_of(int q, int level, int dim) {
  if (level == 0) return {Flag{0, {Matrix{}}}};
  const FiniteField& field = FiniteField::get(q);
  const auto subspaces = all_subspaces(q, dim);
  std::vector<Flag> out;
  std::vector<Matrix> chain{Matrix{}};
  std::function<void()> extend = [&]() {
    if (static_cast<int>(chain.size()) == level) {
      Flag f{dim, chain};
      f.chain.push_back(full_space(dim));
      out.push_back(std::move(f));
      return;
    }
    for (const auto& s : subspaces) {
      if (!contained(chain.back(), s, field)) continue;
      chain.push_back(s);
      extend();
      chain.pop_back();
    }
  };
  extend();
  return out;
}

std::string flag_label(const Flag& f) {
  std::string out = "F^" + std::to_string(f.dim) + "[";
  for (std::size_t i = 0; i < f.chain.size(); ++i) {
    if (i) out += "<";
    out += std::to_string(f.chain[i].size());
  }
  return out + "]";
}

}  // namespace

const GeneralLinearGroup& general_linear_group(int q, int dim) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, GeneralLinearGroup> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find({q, dim});
  if (it == cache.end()) it = cache.emplace(std::make_pair(q, dim), build_general_linear_group(q, dim)).first;
  return it->second;
}

FlagGroupoid::FlagGroupoid(int q, int level, int dim_bound) : q_(q), level_(level), dim_bound_(dim_bound) {
  if (level < 0 || level > kMaxFlagLevel) throw BoundError("flag level must lie in 0.." + std::to_string(kMaxFlagLevel));
  if (dim_bound < 0) throw std::invalid_argument("negative dimension bound");
  const FiniteField& field = FiniteField::get(q);
  std::vector<GroupoidPtr> parts;
  int morphisms = 0;
  for (int d = 0; d <= (level == 0 ? 0 : dim_bound); ++d) {
    const GeneralLinearGroup& gl = general_linear_group(q, d);
    const auto flags = flags_of(q, level, d);
    const int base = static_cast<int>(flags_.size());
    std::vector<std::string> labels;
    for (const auto& f : flags) {
      index_.emplace(f, static_cast<int>(flags_.size()));
      flags_.push_back(f);
      labels.push_back(flag_label(f));
      morphism_offset_.push_back(morphisms);
      morphisms += gl.table.order;
    }
    std::vector<int> action(flags.size() * idx(gl.table.order));
    for (std::size_t k = 0; k < flags.size(); ++k)
      for (int g = 0; g < gl.table.order; ++g)
        action[k * idx(gl.table.order) + idx(g)] = index_.at(act_on(flags[k], gl.elements[idx(g)], field)) - base;
    parts.push_back(action_groupoid(
        static_cast<int>(flags.size()), gl.table,
        [&](int k, int g) { return action[idx(k) * idx(gl.table.order) + idx(g)]; }, std::move(labels)));
  }
  groupoid_ = disjoint_union(parts);
}

int FlagGroupoid::object_of(const Flag& flag) const {
  auto it = index_.find(flag);
  return it == index_.end() ? -1 : it->second;
}

int FlagGroupoid::morphism(int object, int g) const { return morphism_offset_[idx(object)] + g; }

std::pair<int, int> FlagGroupoid::morphism_parts(int m) const {
  const int object = groupoid_->source(m);
  return {object, m - morphism_offset_[idx(object)]};
}

FlagGroupoidPtr truncated_flag_groupoid(int q, int level, int dim_bound) {
  return std::make_shared<const FlagGroupoid>(q, level, dim_bound);
}

namespace {

// Coordinates of v (lying in the span) against an RREF basis.
Vec coordinates_in(const Vec& v, const Matrix& basis) {
  Vec out;
  for (const auto& row : basis) out.push_back(v[idx(pivot(row))]);
  return out;
}

std::vector<int> non_pivots(const Matrix& rref_rows, int dim) {
  std::vector<bool> is_pivot(idx(dim), false);
  for (const auto& row : rref_rows) is_pivot[idx(pivot(row))] = true;
  std::vector<int> out;
  for (int j = 0; j < dim; ++j)
    if (!is_pivot[idx(j)]) out.push_back(j);
  return out;
}

// Coordinates of v + sub in the quotient basis {e_j : j off the pivots of sub}.
Vec quotient_coordinates(const Vec& v, const Matrix& sub, const std::vector<int>& basis, const FiniteField& field) {
  const Vec r = linalg::reduce(v, sub, field);
  Vec out;
  for (int j : basis) out.push_back(r[idx(j)]);
  return out;
}

Matrix map_rows(const Matrix& rows, const std::function<Vec(const Vec&)>& coords, const FiniteField& field) {
  Matrix out;
  for (const auto& row : rows) out.push_back(coords(row));
  return out.empty() ? out : linalg::rref(out, field);
}

struct FaceImage {
  Flag flag;
  Matrix matrix;  // image of the GL element; empty for 0-dimensional tops
};

// Face k applied to (flag, g): the face of the flag and the induced map from
// the face of the source to the face of the target flag.
FaceImage face_of(const Flag& source, const Flag& target, const Matrix& g, int k, const FiniteField& field) {
  const int n = static_cast<int>(source.chain.size()) - 1;
  FaceImage out;
  if (k > 0 && k < n) {
    out.flag = source;
    out.flag.chain.erase(out.flag.chain.begin() + k);
    out.matrix = g;
    return out;
  }
  if (k == n) {
    const Matrix& basis = source.chain[idx(n - 1)];
    const Matrix& image_basis = target.chain[idx(n - 1)];
    out.flag.dim = static_cast<int>(basis.size());
    for (int i = 0; i < n; ++i)
      out.flag.chain.push_back(
          map_rows(source.chain[idx(i)], [&](const Vec& v) { return coordinates_in(v, basis); }, field));
    for (const auto& b : basis) out.matrix.push_back(coordinates_in(linalg::multiply(Matrix{b}, g, source.dim, source.dim, field)[0], image_basis));
    return out;
  }
  const Matrix& sub = source.chain[1];
  const Matrix& image_sub = target.chain[1];
  const auto basis = non_pivots(sub, source.dim);
  const auto image_basis = non_pivots(image_sub, source.dim);
  out.flag.dim = static_cast<int>(basis.size());
  for (int i = 1; i <= n; ++i)
    out.flag.chain.push_back(
        map_rows(source.chain[idx(i)], [&](const Vec& v) { return quotient_coordinates(v, sub, basis, field); }, field));
  for (int j : basis) out.matrix.push_back(quotient_coordinates(g[idx(j)], image_sub, image_basis, field));
  return out;
}

void require_compatible(const FlagGroupoid& from, const FlagGroupoid& to, int level_shift) {
  if (from.q() != to.q() || to.level() != from.level() + level_shift)
    throw std::invalid_argument("flag groupoids are not adjacent levels over one field");
  if (to.level() > 0 && from.level() > 0 && from.dim_bound() != to.dim_bound())
    throw std::invalid_argument("flag groupoids use different dimension bounds");
}

}  // namespace

Functor face(const FlagGroupoid& from, const FlagGroupoid& to, int k) {
  require_compatible(from, to, -1);
  if (k < 0 || k > from.level()) throw std::invalid_argument("face index out of range");
  const FiniteField& field = FiniteField::get(from.q());
  const auto& G = *from.groupoid();
  Functor out{from.groupoid(), to.groupoid(), {}, {}};
  for (int x = 0; x < G.object_count(); ++x) {
    const Flag& f = from.flag(x);
    const Matrix id = full_space(f.dim);
    const int y = to.object_of(face_of(f, f, id, k, field).flag);
    if (y < 0) throw std::logic_error("face leaves the truncation");
    out.on_objects.push_back(y);
  }
  for (int m = 0; m < G.morphism_count(); ++m) {
    const auto [x, g] = from.morphism_parts(m);
    const Flag& f = from.flag(x);
    const Matrix& element = general_linear_group(from.q(), f.dim).elements[idx(g)];
    const FaceImage image = face_of(f, from.flag(G.target(m)), element, k, field);
    const auto& gl = general_linear_group(to.q(), image.flag.dim);
    out.on_morphisms.push_back(to.morphism(out.on_objects[idx(x)], gl.index.at(image.matrix)));
  }
  return out;
}

Functor degeneracy(const FlagGroupoid& from, const FlagGroupoid& to, int k) {
  require_compatible(from, to, 1);
  if (k < 0 || k > from.level()) throw std::invalid_argument("degeneracy index out of range");
  const auto& G = *from.groupoid();
  Functor out{from.groupoid(), to.groupoid(), {}, {}};
  for (int x = 0; x < G.object_count(); ++x) {
    Flag f = from.flag(x);
    f.chain.insert(f.chain.begin() + k, f.chain[idx(k)]);
    const int y = to.object_of(f);
    if (y < 0) throw std::logic_error("degeneracy leaves the truncation");
    out.on_objects.push_back(y);
  }
  for (int m = 0; m < G.morphism_count(); ++m) {
    const auto [x, g] = from.morphism_parts(m);
    out.on_morphisms.push_back(to.morphism(out.on_objects[idx(x)], g));
  }
  return out;
}

namespace {

std::vector<FlagGroupoidPtr> levels(int q, int dim_bound) {
  std::vector<FlagGroupoidPtr> out;
  for (int n = 0; n <= kMaxFlagLevel; ++n) out.push_back(truncated_flag_groupoid(q, n, dim_bound));
  return out;
}

}  // namespace

CheckReport simplicial_identities_check(int q, int dim_bound) {
  const auto S = levels(q, dim_bound);
  auto d = [&](int n, int i) { return face(*S[idx(n)], *S[idx(n - 1)], i); };
  auto s = [&](int n, int j) { return degeneracy(*S[idx(n)], *S[idx(n + 1)], j); };
  auto fail = [](const std::string& what, int n) {
    return CheckReport{false, what + " fails on level " + std::to_string(n)};
  };
  for (int n = 2; n <= kMaxFlagLevel; ++n)
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        if (!strictly_equal(compose(d(n, j), d(n - 1, i)), compose(d(n, i), d(n - 1, j - 1))))
          return fail("d" + std::to_string(i) + " d" + std::to_string(j) + " = d" + std::to_string(j - 1) + " d" +
                          std::to_string(i),
                      n);
  for (int n = 0; n + 2 <= kMaxFlagLevel; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        if (!strictly_equal(compose(s(n, j), s(n + 1, i)), compose(s(n, i), s(n + 1, j + 1))))
          return fail("s" + std::to_string(i) + " s" + std::to_string(j) + " = s" + std::to_string(j + 1) + " s" +
                          std::to_string(i),
                      n);
  for (int n = 0; n + 1 <= kMaxFlagLevel; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n + 1; ++i) {
        const Functor lhs = compose(s(n, j), d(n + 1, i));
        const std::string name = "d" + std::to_string(i) + " s" + std::to_string(j);
        if (i == j || i == j + 1) {
          if (!strictly_equal(lhs, identity_functor(S[idx(n)]->groupoid()))) return fail(name + " = id", n);
        } else if (i < j) {
          if (!strictly_equal(lhs, compose(d(n, i), s(n - 1, j - 1)))) return fail(name + " = s d", n);
        } else if (!strictly_equal(lhs, compose(d(n, i - 1), s(n - 1, j)))) {
          return fail(name + " = s d", n);
        }
      }
  return {};
}

CheckReport pullback_square_check(const Functor& to_left, const Functor& to_right, const Functor& left_down,
                                  const Functor& right_down) {
  if (!strictly_equal(compose(to_left, left_down), compose(to_right, right_down)))
    return {false, "square does not commute"};
  const PullbackClasses pullback(left_down, right_down);
  const auto& X = *to_left.source;
  const auto& C = *left_down.target;
  std::vector<int> preimage(idx(pullback.class_count()), -1);
  for (int cls = 0; cls < X.class_count(); ++cls) {
    const int x = X.representative(cls);
    const int image = pullback.class_of(to_left(x), to_right(x), C.identity(left_down(to_left(x))));
    if (preimage[idx(image)] != -1)
      return {false, "classes of " + X.label(X.representative(preimage[idx(image)])) + " and " + X.label(x) +
                         " have the same image"};
    preimage[idx(image)] = cls;
    if (X.aut_order(x) != pullback.aut_order(image))
      return {false, "automorphism orders differ at " + X.label(x) + ": " + X.aut_order(x).str() + " vs " +
                         pullback.aut_order(image).str()};
  }
  for (int image = 0; image < pullback.class_count(); ++image)
    if (preimage[idx(image)] == -1) return {false, "a class of the 2-pullback is not hit"};
  return {};
}

CheckReport two_segal_cardinality_check(int q, int dim_bound) {
  const auto S = levels(q, dim_bound);
  auto d = [&](int n, int i) { return face(*S[idx(n)], *S[idx(n - 1)], i); };
  auto s = [&](int n, int j) { return degeneracy(*S[idx(n)], *S[idx(n + 1)], j); };
  struct Square {
    std::string name;
    Functor top, left, right_top, right_bottom;
  };
  const std::vector<Square> squares{
      {"diagonal 02", d(3, 3), d(3, 1), d(2, 1), d(2, 2)},
      {"diagonal 13", d(3, 2), d(3, 0), d(2, 0), d(2, 1)},
      {"unit 0", s(1, 0), d(1, 1), d(2, 2), s(0, 0)},
      {"unit 1", s(1, 1), d(1, 1), d(2, 0), s(0, 0)},
  };
  for (const auto& sq : squares) {
    CheckReport r = pullback_square_check(sq.top, sq.left, sq.right_top, sq.right_bottom);
    if (!r.ok) return {false, sq.name + ": " + r.detail};
  }
  return {};
}

GroupoidSpan truncated_hall_span(int q, int dim_bound) {
  const auto S1 = truncated_flag_groupoid(q, 1, dim_bound);
  const auto S2 = truncated_flag_groupoid(q, 2, dim_bound);
  const GroupoidPtr pairs = product_groupoid(S1->groupoid(), S1->groupoid());
  const Functor left = pair_functor(face(*S2, *S1, 2), face(*S2, *S1, 0), pairs);
  return {S2->groupoid(), left, face(*S2, *S1, 1)};
}

}  // namespace hallforge
