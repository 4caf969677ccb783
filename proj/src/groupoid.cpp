#include "hallforge/groupoid.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <stdexcept>

namespace hallforge {

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

}  // namespace

FiniteGroupoid::FiniteGroupoid(std::vector<std::string> object_labels, std::vector<int> sources, std::vector<int> targets,
                               std::vector<int> identities, std::vector<int> inverses, Compose composition)
    : labels_(std::move(object_labels)),
      source_(std::move(sources)),
      target_(std::move(targets)),
      identity_(std::move(identities)),
      inverse_(std::move(inverses)),
      compose_(std::move(composition)) {
  const int objects = object_count();
  const int morphisms = morphism_count();
  require(static_cast<int>(target_.size()) == morphisms && static_cast<int>(inverse_.size()) == morphisms,
          "morphism tables differ in length");
  require(static_cast<int>(identity_.size()) == objects, "identity table has the wrong length");
  out_.resize(idx(objects));
  position_.resize(idx(morphisms));
  for (int m = 0; m < morphisms; ++m) {
    require(source(m) >= 0 && source(m) < objects && target(m) >= 0 && target(m) < objects,
            "morphism endpoint out of range");
    require(inverse(m) >= 0 && inverse(m) < morphisms, "inverse out of range");
    auto& out = out_[idx(source(m))];
    position_[idx(m)] = static_cast<int>(out.size());
    out.push_back(m);
  }
  for (int x = 0; x < objects; ++x) require(identity(x) >= 0 && identity(x) < morphisms, "identity out of range");

  class_of_.assign(idx(objects), -1);
  path_.assign(idx(objects), -1);
  aut_.assign(idx(objects), 0);
  for (int x = 0; x < objects; ++x) {
    for (int m : out_[idx(x)])
      if (target(m) == x) aut_[idx(x)] += 1;
    if (class_of_[idx(x)] != -1) continue;
    const int cls = class_count();
    representatives_.push_back(x);
    class_of_[idx(x)] = cls;
    path_[idx(x)] = identity(x);
    std::deque<int> queue{x};
    while (!queue.empty()) {
      const int y = queue.front();
      queue.pop_front();
      for (int m : out_[idx(y)]) {
        const int z = target(m);
        if (class_of_[idx(z)] != -1) continue;
        class_of_[idx(z)] = cls;
        path_[idx(z)] = compose_(path_[idx(y)], m);
        queue.push_back(z);
      }
    }
  }
}

std::vector<int> FiniteGroupoid::morphisms_between(int x, int y) const {
  std::vector<int> out;
  for (int m : out_[idx(x)])
    if (target(m) == y) out.push_back(m);
  return out;
}

std::optional<int> FiniteGroupoid::find_iso(int x, int y) const {
  if (iso_class(x) != iso_class(y)) return std::nullopt;
  return compose(inverse(path_from_representative(x)), path_from_representative(y));
}

Rational FiniteGroupoid::cardinality() const {
  Rational total = 0;
  for (int x : representatives_) total += Rational(1) / Rational(aut_order(x));
  return total;
}

std::vector<BigInt> FiniteGroupoid::profile() const {
  std::vector<BigInt> out;
  for (int x : representatives_) out.push_back(aut_order(x));
  std::sort(out.begin(), out.end());
  return out;
}

CheckReport FiniteGroupoid::validate(std::size_t exhaustive_limit, std::size_t samples) const {
  auto fail = [](std::string why) { return CheckReport{false, std::move(why)}; };
  for (int x = 0; x < object_count(); ++x) {
    const int e = identity(x);
    if (source(e) != x || target(e) != x) return fail("identity of " + label(x) + " is not a loop");
  }
  for (int m = 0; m < morphism_count(); ++m) {
    const std::string name = "morphism " + std::to_string(m);
    if (compose(identity(source(m)), m) != m || compose(m, identity(target(m))) != m)
      return fail(name + " is not fixed by identities");
    const int inv = inverse(m);
    if (source(inv) != target(m) || target(inv) != source(m)) return fail(name + " has a misdirected inverse");
    if (compose(m, inv) != identity(source(m)) || compose(inv, m) != identity(target(m)))
      return fail(name + " composed with its inverse is not an identity");
  }
  auto check_triple = [&](int f, int g, int h) -> std::optional<CheckReport> {
    const int fg = compose(f, g);
    if (source(fg) != source(f) || target(fg) != target(g))
      return fail("composite of " + std::to_string(f) + " and " + std::to_string(g) + " has wrong endpoints");
    if (compose(fg, h) != compose(f, compose(g, h)))
      return fail("composition not associative on " + std::to_string(f) + ", " + std::to_string(g) + ", " +
                  std::to_string(h));
    return std::nullopt;
  };
  std::size_t triples = 0;
  for (int f = 0; f < morphism_count(); ++f)
    for (int g : morphisms_from(target(f))) triples += morphisms_from(target(g)).size();
  if (triples <= exhaustive_limit) {
    for (int f = 0; f < morphism_count(); ++f)
      for (int g : morphisms_from(target(f)))
        for (int h : morphisms_from(target(g)))
          if (auto r = check_triple(f, g, h)) return *r;
    return {};
  }
  std::mt19937_64 rng(0x5eed);
  auto pick = [&](const std::vector<int>& from) {
    return from[std::uniform_int_distribution<std::size_t>(0, from.size() - 1)(rng)];
  };
  std::uniform_int_distribution<int> any(0, morphism_count() - 1);
  for (std::size_t s = 0; s < samples; ++s) {
    const int f = any(rng);
    const int g = pick(morphisms_from(target(f)));
    const int h = pick(morphisms_from(target(g)));
    if (auto r = check_triple(f, g, h)) return *r;
  }
  return {};
}

GroupoidPtr point_groupoid() { return discrete_groupoid(1); }

GroupoidPtr discrete_groupoid(int k) {
  std::vector<int> ids(idx(k));
  std::vector<std::string> labels(idx(k));
  for (int i = 0; i < k; ++i) {
    ids[idx(i)] = i;
    labels[idx(i)] = std::to_string(i);
  }
  return std::make_shared<FiniteGroupoid>(labels, ids, ids, ids, ids, [](int f, int) { return f; });
}

GroupoidPtr delooping(const FiniteGroup& group) {
  return action_groupoid(1, group, [](int, int) { return 0; });
}

GroupoidPtr product_groupoid(const GroupoidPtr& a, const GroupoidPtr& b) {
  const int ob = b->object_count();
  const int mb = b->morphism_count();
  std::vector<std::string> labels;
  for (int x = 0; x < a->object_count(); ++x)
    for (int y = 0; y < ob; ++y) labels.push_back("(" + a->label(x) + "," + b->label(y) + ")");
  std::vector<int> source, target, inverse, identity;
  for (int f = 0; f < a->morphism_count(); ++f)
    for (int g = 0; g < mb; ++g) {
      source.push_back(a->source(f) * ob + b->source(g));
      target.push_back(a->target(f) * ob + b->target(g));
      inverse.push_back(a->inverse(f) * mb + b->inverse(g));
    }
  for (int x = 0; x < a->object_count(); ++x)
    for (int y = 0; y < ob; ++y) identity.push_back(a->identity(x) * mb + b->identity(y));
  return std::make_shared<FiniteGroupoid>(std::move(labels), std::move(source), std::move(target), std::move(identity),
                                          std::move(inverse), [a, b, mb](int f, int g) {
                                            return a->compose(f / mb, g / mb) * mb + b->compose(f % mb, g % mb);
                                          });
}

GroupoidPtr disjoint_union(const std::vector<GroupoidPtr>& parts) {
  std::vector<int> object_offset{0}, morphism_offset{0};
  std::vector<std::string> labels;
  std::vector<int> source, target, identity, inverse;
  for (const auto& part : parts) {
    const int ob = object_offset.back();
    const int mo = morphism_offset.back();
    for (int x = 0; x < part->object_count(); ++x) {
      labels.push_back(part->label(x));
      identity.push_back(part->identity(x) + mo);
    }
    for (int m = 0; m < part->morphism_count(); ++m) {
      source.push_back(part->source(m) + ob);
      target.push_back(part->target(m) + ob);
      inverse.push_back(part->inverse(m) + mo);
    }
    object_offset.push_back(ob + part->object_count());
    morphism_offset.push_back(mo + part->morphism_count());
  }
  auto compose = [parts, morphism_offset](int f, int g) {
    const auto it = std::upper_bound(morphism_offset.begin(), morphism_offset.end(), f) - 1;
    const auto part = static_cast<std::size_t>(it - morphism_offset.begin());
    return parts[part]->compose(f - *it, g - *it) + *it;
  };
  return std::make_shared<FiniteGroupoid>(std::move(labels), std::move(source), std::move(target), std::move(identity),
                                          std::move(inverse), compose);
}

CheckReport Functor::validate(std::size_t exhaustive_limit, std::size_t samples) const {
  auto fail = [](std::string why) { return CheckReport{false, std::move(why)}; };
  if (static_cast<int>(on_objects.size()) != source->object_count() ||
      static_cast<int>(on_morphisms.size()) != source->morphism_count())
    return fail("functor tables do not match the source groupoid");
  for (int x = 0; x < source->object_count(); ++x) {
    const int y = (*this)(x);
    if (y < 0 || y >= target->object_count()) return fail("object image out of range");
    if (map_morphism(source->identity(x)) != target->identity(y)) return fail("identity of " + source->label(x) + " not preserved");
  }
  for (int m = 0; m < source->morphism_count(); ++m) {
    const int fm = map_morphism(m);
    if (fm < 0 || fm >= target->morphism_count()) return fail("morphism image out of range");
    if (target->source(fm) != (*this)(source->source(m)) || target->target(fm) != (*this)(source->target(m)))
      return fail("morphism " + std::to_string(m) + " mapped with wrong endpoints");
  }
  auto check_pair = [&](int f, int g) {
    return map_morphism(source->compose(f, g)) == target->compose(map_morphism(f), map_morphism(g));
  };
  std::size_t pairs = 0;
  for (int f = 0; f < source->morphism_count(); ++f) pairs += source->morphisms_from(source->target(f)).size();
  if (pairs <= exhaustive_limit) {
    for (int f = 0; f < source->morphism_count(); ++f)
      for (int g : source->morphisms_from(source->target(f)))
        if (!check_pair(f, g)) return fail("composition of " + std::to_string(f) + " and " + std::to_string(g) + " not preserved");
    return {};
  }
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<int> any(0, source->morphism_count() - 1);
  for (std::size_t s = 0; s < samples; ++s) {
    const int f = any(rng);
    const auto& next = source->morphisms_from(source->target(f));
    const int g = next[std::uniform_int_distribution<std::size_t>(0, next.size() - 1)(rng)];
    if (!check_pair(f, g)) return fail("composition of " + std::to_string(f) + " and " + std::to_string(g) + " not preserved");
  }
  return {};
}

Functor identity_functor(const GroupoidPtr& g) {
  Functor f{g, g, {}, {}};
  for (int x = 0; x < g->object_count(); ++x) f.on_objects.push_back(x);
  for (int m = 0; m < g->morphism_count(); ++m) f.on_morphisms.push_back(m);
  return f;
}

Functor functor_to_point(const GroupoidPtr& g) {
  return {g, point_groupoid(), std::vector<int>(idx(g->object_count()), 0), std::vector<int>(idx(g->morphism_count()), 0)};
}

Functor point_functor(const GroupoidPtr& g, int x) { return {point_groupoid(), g, {x}, {g->identity(x)}}; }

Functor compose(const Functor& f, const Functor& g) {
  require(f.target == g.source, "functors are not composable");
  Functor out{f.source, g.target, {}, {}};
  for (int y : f.on_objects) out.on_objects.push_back(g(y));
  for (int m : f.on_morphisms) out.on_morphisms.push_back(g.map_morphism(m));
  return out;
}

Functor pair_functor(const Functor& f, const Functor& g, const GroupoidPtr& product) {
  require(f.source == g.source, "paired functors need a common source");
  const int ob = g.target->object_count();
  const int mb = g.target->morphism_count();
  require(product->object_count() == f.target->object_count() * ob, "product groupoid does not match");
  Functor out{f.source, product, {}, {}};
  for (int x = 0; x < f.source->object_count(); ++x) out.on_objects.push_back(f(x) * ob + g(x));
  for (int m = 0; m < f.source->morphism_count(); ++m)
    out.on_morphisms.push_back(f.map_morphism(m) * mb + g.map_morphism(m));
  return out;
}

bool strictly_equal(const Functor& f, const Functor& g) {
  return f.source == g.source && f.target == g.target && f.on_objects == g.on_objects && f.on_morphisms == g.on_morphisms;
}

CheckReport equivalence_certificate(const Functor& f) {
  const auto& a = *f.source;
  const auto& c = *f.target;
  std::vector<bool> hit(idx(c.class_count()), false);
  for (int x = 0; x < a.object_count(); ++x) hit[idx(c.iso_class(f(x)))] = true;
  for (int cls = 0; cls < c.class_count(); ++cls)
    if (!hit[idx(cls)]) return {false, "not essentially surjective: " + c.label(c.representative(cls)) + " is missed"};
  for (int x = 0; x < a.object_count(); ++x) {
    std::map<int, std::set<int>> images;  // target object -> images of Hom(x, y)
    std::map<int, std::size_t> counts;
    for (int m : a.morphisms_from(x)) {
      images[a.target(m)].insert(f.map_morphism(m));
      ++counts[a.target(m)];
    }
    for (int y = 0; y < a.object_count(); ++y) {
      const std::size_t expected = c.morphisms_between(f(x), f(y)).size();
      const std::size_t found = images.count(y) ? images[y].size() : 0;
      if (found != counts[y]) return {false, "not faithful on Hom(" + a.label(x) + ", " + a.label(y) + ")"};
      if (found != expected) return {false, "not full on Hom(" + a.label(x) + ", " + a.label(y) + ")"};
    }
  }
  return {};
}

bool is_isofibration(const Functor& f) {
  for (int a = 0; a < f.source->object_count(); ++a) {
    std::set<int> lifted;
    for (int m : f.source->morphisms_from(a)) lifted.insert(f.map_morphism(m));
    for (int psi : f.target->morphisms_from(f(a)))
      if (!lifted.count(psi)) return false;
  }
  return true;
}

namespace {

Permutation then(const Permutation& g, const Permutation& h) {
  Permutation out(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) out[k] = h[idx(g[k])];
  return out;
}

void require_permutation(const Permutation& p, int degree) {
  require(static_cast<int>(p.size()) == degree, "permutation of the wrong degree");
  std::vector<bool> seen(idx(degree), false);
  for (int v : p) {
    require(v >= 0 && v < degree && !seen[idx(v)], "not a permutation");
    seen[idx(v)] = true;
  }
}

}  // namespace

std::vector<Permutation> generated_permutation_group(int degree, const std::vector<Permutation>& generators) {
  Permutation e(idx(degree));
  for (int k = 0; k < degree; ++k) e[idx(k)] = k;
  for (const auto& g : generators) require_permutation(g, degree);
  std::set<Permutation> seen{e};
  std::deque<Permutation> queue{e};
  while (!queue.empty()) {
    const Permutation p = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      Permutation next = then(p, g);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

FiniteGroup permutation_group_table(const std::vector<Permutation>& elements) {
  require(!elements.empty(), "empty permutation group");
  const int degree = static_cast<int>(elements.front().size());
  std::map<Permutation, int> index;
  for (const auto& p : elements) {
    require_permutation(p, degree);
    require(index.emplace(p, static_cast<int>(index.size())).second, "repeated permutation");
  }
  FiniteGroup group;
  group.order = static_cast<int>(elements.size());
  group.table.assign(idx(group.order * group.order), 0);
  group.inverse.assign(idx(group.order), -1);
  group.identity = -1;
  for (int g = 0; g < group.order; ++g) {
    const auto& p = elements[idx(g)];
    bool is_identity = true;
    for (int k = 0; k < degree; ++k) is_identity = is_identity && p[idx(k)] == k;
    if (is_identity) group.identity = g;
  }
  require(group.identity != -1, "permutation set lacks the identity");
  for (int g = 0; g < group.order; ++g)
    for (int h = 0; h < group.order; ++h) {
      auto it = index.find(then(elements[idx(g)], elements[idx(h)]));
      require(it != index.end(), "permutation set is not closed under composition");
      group.table[idx(g * group.order + h)] = it->second;
      if (it->second == group.identity) group.inverse[idx(g)] = h;
    }
  return group;
}

GroupoidPtr action_groupoid(int set_size, const FiniteGroup& group, const std::function<int(int, int)>& act,
                            std::vector<std::string> labels) {
  const int n = group.order;
  for (int k = 0; k < set_size; ++k) {
    require(act(k, group.identity) == k, "identity does not act trivially");
    for (int g = 0; g < n; ++g) {
      const int kg = act(k, g);
      require(kg >= 0 && kg < set_size, "action leaves the set");
      for (int h = 0; h < n; ++h) require(act(kg, h) == act(k, group.multiply(g, h)), "not a right action");
    }
  }
  if (labels.empty())
    for (int k = 0; k < set_size; ++k) labels.push_back(std::to_string(k));
  std::vector<int> source, target, identity, inverse;
  for (int k = 0; k < set_size; ++k) {
    identity.push_back(k * n + group.identity);
    for (int g = 0; g < n; ++g) {
      source.push_back(k);
      target.push_back(act(k, g));
      inverse.push_back(act(k, g) * n + group.inverse[idx(g)]);
    }
  }
  return std::make_shared<FiniteGroupoid>(std::move(labels), std::move(source), std::move(target), std::move(identity),
                                          std::move(inverse), [group](int f, int g) {
                                            return (f / group.order) * group.order + group.multiply(f % group.order, g % group.order);
                                          });
}

GroupoidPtr action_groupoid(int set_size, const std::vector<Permutation>& group) {
  for (const auto& p : group) require(static_cast<int>(p.size()) == set_size, "permutation of the wrong degree");
  return action_groupoid(set_size, permutation_group_table(group),
                         [&](int k, int g) { return group[idx(g)][idx(k)]; });
}

int TwoPullback::find_object(int a, int b, int phi) const {
  auto it = object_index.find({a, b, phi});
  return it == object_index.end() ? -1 : it->second;
}

int TwoPullback::find_morphism(int object, int alpha, int beta) const {
  const int b = to_right(object);
  const auto width = static_cast<int>(to_right.target->morphisms_from(b).size());
  return morphism_offset[idx(object)] + to_left.target->position_from(alpha) * width + to_right.target->position_from(beta);
}

TwoPullback two_pullback(const Functor& f, const Functor& g) {
  require(f.target == g.target, "2-pullback legs need a common target");
  const auto& A = *f.source;
  const auto& B = *g.source;
  const auto& C = *f.target;
  TwoPullback out;
  std::vector<std::tuple<int, int, int>> objects;
  std::vector<std::string> labels;
  for (int a = 0; a < A.object_count(); ++a)
    for (int b = 0; b < B.object_count(); ++b)
      for (int phi : C.morphisms_between(f(a), g(b))) {
        out.object_index.emplace(std::make_tuple(a, b, phi), static_cast<int>(objects.size()));
        objects.emplace_back(a, b, phi);
        labels.push_back("(" + A.label(a) + "," + B.label(b) + "," + std::to_string(phi) + ")");
      }
  struct Parts {
    std::vector<int> object, alpha, beta;
  };
  auto parts = std::make_shared<Parts>();
  std::vector<int> source, target, identity, inverse;
  for (std::size_t o = 0; o < objects.size(); ++o) {
    const auto& [a, b, phi] = objects[o];
    out.morphism_offset.push_back(static_cast<int>(source.size()));
    for (int alpha : A.morphisms_from(a))
      for (int beta : B.morphisms_from(b)) {
        const int moved = C.compose(C.compose(C.inverse(f.map_morphism(alpha)), phi), g.map_morphism(beta));
        source.push_back(static_cast<int>(o));
        target.push_back(out.object_index.at({A.target(alpha), B.target(beta), moved}));
        parts->object.push_back(static_cast<int>(o));
        parts->alpha.push_back(alpha);
        parts->beta.push_back(beta);
      }
  }
  // the lookup below needs the projections' targets; set them before use
  out.to_left = {nullptr, f.source, {}, {}};
  out.to_right = {nullptr, g.source, {}, {}};
  for (std::size_t o = 0; o < objects.size(); ++o) {
    out.to_left.on_objects.push_back(std::get<0>(objects[o]));
    out.to_right.on_objects.push_back(std::get<1>(objects[o]));
  }
  auto lookup = [&out, &B](int o, int alpha, int beta) {
    const auto width = static_cast<int>(B.morphisms_from(out.to_right.on_objects[idx(o)]).size());
    return out.morphism_offset[idx(o)] + out.to_left.target->position_from(alpha) * width + B.position_from(beta);
  };
  for (std::size_t o = 0; o < objects.size(); ++o) {
    const auto& [a, b, phi] = objects[o];
    identity.push_back(lookup(static_cast<int>(o), A.identity(a), B.identity(b)));
  }
  for (std::size_t m = 0; m < source.size(); ++m)
    inverse.push_back(lookup(target[m], A.inverse(parts->alpha[m]), B.inverse(parts->beta[m])));

  const std::vector<int> offsets = out.morphism_offset;
  const std::vector<int> right_objects = out.to_right.on_objects;
  auto compose_fn = [parts, offsets, right_objects, A = f.source, B = g.source](int x, int y) {
    const int o = parts->object[idx(x)];
    const int alpha = A->compose(parts->alpha[idx(x)], parts->alpha[idx(y)]);
    const int beta = B->compose(parts->beta[idx(x)], parts->beta[idx(y)]);
    const auto width = static_cast<int>(B->morphisms_from(right_objects[idx(o)]).size());
    return offsets[idx(o)] + A->position_from(alpha) * width + B->position_from(beta);
  };
  out.groupoid = std::make_shared<FiniteGroupoid>(std::move(labels), source, std::move(target), std::move(identity),
                                                  std::move(inverse), compose_fn);
  out.to_left.source = out.groupoid;
  out.to_right.source = out.groupoid;
  out.to_left.on_morphisms = parts->alpha;
  out.to_right.on_morphisms = parts->beta;
  return out;
}

GroupoidPtr strict_pullback(const Functor& f, const Functor& g) {
  require(f.target == g.target, "pullback legs need a common target");
  const auto& A = *f.source;
  const auto& B = *g.source;
  std::map<std::pair<int, int>, int> object_index;
  std::vector<std::string> labels;
  for (int a = 0; a < A.object_count(); ++a)
    for (int b = 0; b < B.object_count(); ++b)
      if (f(a) == g(b)) {
        object_index.emplace(std::make_pair(a, b), static_cast<int>(labels.size()));
        labels.push_back("(" + A.label(a) + "," + B.label(b) + ")");
      }
  auto morphism_index = std::make_shared<std::map<std::pair<int, int>, int>>();
  auto pairs = std::make_shared<std::vector<std::pair<int, int>>>();
  std::vector<int> source, target;
  for (const auto& [key, o] : object_index)
    for (int alpha : A.morphisms_from(key.first))
      for (int beta : B.morphisms_from(key.second))
        if (f.map_morphism(alpha) == g.map_morphism(beta)) {
          morphism_index->emplace(std::make_pair(alpha, beta), static_cast<int>(pairs->size()));
          pairs->emplace_back(alpha, beta);
          source.push_back(o);
          target.push_back(object_index.at({A.target(alpha), B.target(beta)}));
        }
  std::vector<int> identity(labels.size()), inverse;
  for (const auto& [key, o] : object_index) identity[idx(o)] = morphism_index->at({A.identity(key.first), B.identity(key.second)});
  for (const auto& [alpha, beta] : *pairs) inverse.push_back(morphism_index->at({A.inverse(alpha), B.inverse(beta)}));
  auto compose_fn = [pairs, morphism_index, A = f.source, B = g.source](int x, int y) {
    const auto& [a1, b1] = (*pairs)[idx(x)];
    const auto& [a2, b2] = (*pairs)[idx(y)];
    return morphism_index->at({A->compose(a1, a2), B->compose(b1, b2)});
  };
  return std::make_shared<FiniteGroupoid>(std::move(labels), std::move(source), std::move(target), std::move(identity),
                                          std::move(inverse), compose_fn);
}

PullbackClasses::PullbackClasses(const Functor& f, const Functor& g) : f_(f), g_(g) {
  require(f.target == g.target, "pullback legs need a common target");
  const auto& A = *f.source;
  const auto& B = *g.source;
  const auto& C = *f.target;
  for (int ca = 0; ca < A.class_count(); ++ca) {
    const int a = A.representative(ca);
    const auto aut_a = A.automorphisms(a);
    for (int cb = 0; cb < B.class_count(); ++cb) {
      const int b = B.representative(cb);
      const auto aut_b = B.automorphisms(b);
      for (int phi : C.morphisms_between(f(a), g(b))) {
        if (orbit_of_.count({ca, cb, phi})) continue;
        const int cls = class_count();
        std::set<int> orbit;
        for (int alpha : aut_a) {
          const int left = C.compose(C.inverse(f.map_morphism(alpha)), phi);
          for (int beta : aut_b) orbit.insert(C.compose(left, g.map_morphism(beta)));
        }
        for (int psi : orbit) orbit_of_.emplace(std::make_tuple(ca, cb, psi), cls);
        aut_.push_back(BigInt(aut_a.size() * aut_b.size()) / BigInt(orbit.size()));
        base_.emplace_back(ca, cb);
      }
    }
  }
}

int PullbackClasses::class_of(int a, int b, int phi) const {
  const auto& A = *f_.source;
  const auto& B = *g_.source;
  const auto& C = *f_.target;
  const int u = A.path_from_representative(a);
  const int v = B.path_from_representative(b);
  const int moved = C.compose(C.compose(f_.map_morphism(u), phi), C.inverse(g_.map_morphism(v)));
  return orbit_of_.at({A.iso_class(a), B.iso_class(b), moved});
}

std::vector<BigInt> PullbackClasses::profile() const {
  std::vector<BigInt> out = aut_;
  std::sort(out.begin(), out.end());
  return out;
}

Rational PullbackClasses::cardinality() const {
  Rational total = 0;
  for (const auto& a : aut_) total += Rational(1) / Rational(a);
  return total;
}

bool GroupoidFunction::constant_on_classes() const {
  for (int x = 0; x < base->object_count(); ++x)
    if ((*this)(x) != (*this)(base->representative(base->iso_class(x)))) return false;
  return true;
}

GroupoidFunction constant_function(const GroupoidPtr& g, const Rational& c) {
  return {g, std::vector<Rational>(idx(g->object_count()), c)};
}

GroupoidFunction class_indicator(const GroupoidPtr& g, int cls) {
  GroupoidFunction phi = constant_function(g, 0);
  for (int x = 0; x < g->object_count(); ++x)
    if (g->iso_class(x) == cls) phi.values[idx(x)] = 1;
  return phi;
}

Rational integral(const GroupoidFunction& phi) {
  Rational total = 0;
  for (int cls = 0; cls < phi.base->class_count(); ++cls) {
    const int x = phi.base->representative(cls);
    total += phi(x) / Rational(phi.base->aut_order(x));
  }
  return total;
}

GroupoidFunction pullback_fn(const Functor& f, const GroupoidFunction& phi) {
  require(f.target == phi.base, "function lives on a different groupoid");
  GroupoidFunction out{f.source, {}};
  for (int x = 0; x < f.source->object_count(); ++x) out.values.push_back(phi(f(x)));
  return out;
}

namespace {

// Entry (class of b, class of a): sum of 1/|Aut| over the classes of the
// 2-fiber of f over b lying above the class of a.
RationalMatrix fiber_weights(const Functor& f) {
  const auto& A = *f.source;
  const auto& B = *f.target;
  RationalMatrix out(idx(B.class_count()), std::vector<Rational>(idx(A.class_count()), Rational(0)));
  for (int cb = 0; cb < B.class_count(); ++cb) {
    const PullbackClasses fiber(f, point_functor(f.target, B.representative(cb)));
    for (int cls = 0; cls < fiber.class_count(); ++cls)
      out[idx(cb)][idx(fiber.base_classes(cls).first)] += Rational(1) / Rational(fiber.aut_order(cls));
  }
  return out;
}

}  // namespace

GroupoidFunction pushforward(const Functor& f, const GroupoidFunction& phi) {
  require(f.source == phi.base, "function lives on a different groupoid");
  require(phi.constant_on_classes(), "function is not constant on isomorphism classes");
  const RationalMatrix weights = fiber_weights(f);
  const auto& A = *f.source;
  const auto& B = *f.target;
  std::vector<Rational> per_class(idx(B.class_count()), Rational(0));
  for (int cb = 0; cb < B.class_count(); ++cb)
    for (int ca = 0; ca < A.class_count(); ++ca) per_class[idx(cb)] += weights[idx(cb)][idx(ca)] * phi(A.representative(ca));
  GroupoidFunction out{f.target, {}};
  for (int y = 0; y < B.object_count(); ++y) out.values.push_back(per_class[idx(B.iso_class(y))]);
  return out;
}

RationalMatrix matrix_product(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t inner = b.size();
  const std::size_t cols = inner == 0 ? 0 : b.front().size();
  RationalMatrix out(a.size(), std::vector<Rational>(cols, Rational(0)));
  for (std::size_t i = 0; i < a.size(); ++i) {
    require(a[i].size() == inner, "matrix shapes do not match");
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

RationalMatrix identity_matrix(int n) {
  RationalMatrix out(idx(n), std::vector<Rational>(idx(n), Rational(0)));
  for (int i = 0; i < n; ++i) out[idx(i)][idx(i)] = 1;
  return out;
}

RationalMatrix pushforward_matrix(const Functor& f) { return fiber_weights(f); }

RationalMatrix pullback_matrix(const Functor& f) {
  const auto& A = *f.source;
  const auto& B = *f.target;
  RationalMatrix out(idx(A.class_count()), std::vector<Rational>(idx(B.class_count()), Rational(0)));
  for (int ca = 0; ca < A.class_count(); ++ca) out[idx(ca)][idx(B.iso_class(f(A.representative(ca))))] = 1;
  return out;
}

GroupoidSpan identity_span(const GroupoidPtr& g) { return {g, identity_functor(g), identity_functor(g)}; }

GroupoidSpan compose_spans(const GroupoidSpan& s1, const GroupoidSpan& s2) {
  require(s1.right.target == s2.left.target, "spans do not share their middle groupoid");
  TwoPullback apex = two_pullback(s1.right, s2.left);
  return {apex.groupoid, compose(apex.to_left, s1.left), compose(apex.to_right, s2.right)};
}

RationalMatrix span_to_linear_map(const GroupoidSpan& s) {
  // an empty apex leaves no inner dimension to read the shape from
  if (s.apex->class_count() == 0)
    return RationalMatrix(idx(s.right.target->class_count()),
                          std::vector<Rational>(idx(s.left.target->class_count()), Rational(0)));
  return matrix_product(pushforward_matrix(s.right), pullback_matrix(s.left));
}

Rational homotopy_cardinality(const std::vector<std::vector<BigInt>>& components) {
  Rational total = 0;
  for (const auto& orders : components) {
    Rational term = 1;
    for (std::size_t i = 0; i < orders.size(); ++i) {
      require(orders[i] > 0, "homotopy group orders must be positive");
      // orders[i] is |pi_{i+1}|: odd degrees divide, even degrees multiply
      if (i % 2 == 0)
        term /= Rational(orders[i]);
      else
        term *= Rational(orders[i]);
    }
    total += term;
  }
  return total;
}

}  // namespace hallforge
