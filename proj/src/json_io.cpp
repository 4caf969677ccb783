#include "hallforge/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace hallforge::json_io {

namespace {

void expect(bool ok, const std::string& what) {
  if (!ok) throw FormatError(what);
}

const Json& field(const Json& j, const char* key) {
  expect(j.is_object() && j.contains(key), std::string("missing field '") + key + "'");
  return j.at(key);
}

std::vector<int> int_array(const Json& j, const char* what) {
  expect(j.is_array(), std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& x : j) {
    expect(x.is_number_integer(), std::string(what) + " must hold integers");
    out.push_back(x.get<int>());
  }
  return out;
}

std::string file_key(const Partition& p) {
  if (p.empty()) return "e";
  std::string out;
  for (int part : p.parts()) {
    if (!out.empty()) out += '-';
    out += std::to_string(part);
  }
  return out;
}

}  // namespace

Json to_json(const BigInt& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(n));
  return Json(n.str());
}

BigInt big_int_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  expect(j.is_string(), "integer must be a number or a decimal string");
  const auto& s = j.get_ref<const std::string&>();
  const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
  expect(s.size() > start && s.find_first_not_of("0123456789", start) == std::string::npos, "bad integer '" + s + "'");
  return BigInt(s);
}

Json to_json(const Rational& r) { return Json(rational_to_string(r)); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  expect(j.is_string(), "rational must be a string");
  const auto& s = j.get_ref<const std::string&>();
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(big_int_from_json(Json(s)));
  const BigInt num = big_int_from_json(Json(s.substr(0, slash)));
  const BigInt den = big_int_from_json(Json(s.substr(slash + 1)));
  expect(den > 0, "rational denominator must be positive");
  return Rational(num, den);
}

Json to_json(const Partition& p) { return Json(p.parts()); }

Partition partition_from_json(const Json& j) {
  try {
    return Partition(int_array(j, "partition"));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

Json to_json(const QPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

QPoly qpoly_from_json(const Json& j) {
  expect(j.is_array(), "polynomial must be an array");
  std::vector<BigInt> coeffs;
  for (const auto& c : j) coeffs.push_back(big_int_from_json(c));
  return QPoly(std::move(coeffs));
}

Json to_json(const QRational& r) { return Json{{"den", to_json(r.den())}, {"num", to_json(r.num())}}; }

QRational qrational_from_json(const Json& j) {
  const QPoly den = qpoly_from_json(field(j, "den"));
  expect(!den.is_zero(), "zero denominator");
  return QRational(qpoly_from_json(field(j, "num")), den);
}

Json to_json(const SymFunc& f) {
  Json terms = Json::array();
  for (auto it = f.terms.rbegin(); it != f.terms.rend(); ++it)
    terms.push_back(Json{{"coeff", to_json(it->second)}, {"part", to_json(it->first)}});
  return Json{{"basis", f.basis == SymFunc::Basis::monomial ? "m" : "e"}, {"terms", terms}};
}

SymFunc symfunc_from_json(const Json& j) {
  SymFunc f;
  const auto& basis = field(j, "basis");
  expect(basis == "m" || basis == "e", "basis must be \"m\" or \"e\"");
  f.basis = basis == "m" ? SymFunc::Basis::monomial : SymFunc::Basis::elementary;
  const auto& terms = field(j, "terms");
  expect(terms.is_array(), "terms must be an array");
  for (const auto& t : terms) f.add(partition_from_json(field(t, "part")), qpoly_from_json(field(t, "coeff")));
  return f;
}

Json to_json(const HallElement& x) {
  Json terms = Json::array();
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it)
    terms.push_back(Json{{"coeff", to_json(it->second)}, {"part", to_json(it->first)}});
  return Json{{"terms", terms}};
}

HallElement hall_element_from_json(const Json& j) {
  HallElement x;
  const auto& terms = field(j, "terms");
  expect(terms.is_array(), "terms must be an array");
  for (const auto& t : terms) x.add(partition_from_json(field(t, "part")), rational_from_json(field(t, "coeff")));
  return x;
}

Json to_json(const F1tModule& m) { return Json(m.action()); }

F1tModule f1t_module_from_json(const Json& j) {
  try {
    return F1tModule(int_array(j, "action"));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

Json to_json(const FiniteGroupoid& g) {
  Json objects = Json::array(), source = Json::array(), target = Json::array(), identity = Json::array(),
       inverse = Json::array(), compose = Json::array();
  for (int x = 0; x < g.object_count(); ++x) {
    objects.push_back(g.label(x));
    identity.push_back(g.identity(x));
  }
  for (int m = 0; m < g.morphism_count(); ++m) {
    source.push_back(g.source(m));
    target.push_back(g.target(m));
    inverse.push_back(g.inverse(m));
    Json row = Json::array();
    for (int n : g.morphisms_from(g.target(m))) row.push_back(g.compose(m, n));
    compose.push_back(std::move(row));
  }
  return Json{{"compose", compose}, {"identity", identity}, {"inverse", inverse},
              {"objects", objects}, {"source", source},     {"target", target}};
}

GroupoidPtr groupoid_from_json(const Json& j) {
  const auto& objects = field(j, "objects");
  expect(objects.is_array(), "objects must be an array");
  std::vector<std::string> labels;
  for (const auto& o : objects) {
    expect(o.is_string(), "object labels must be strings");
    labels.push_back(o.get<std::string>());
  }
  auto source = int_array(field(j, "source"), "source");
  auto target = int_array(field(j, "target"), "target");
  auto identity = int_array(field(j, "identity"), "identity");
  auto inverse = int_array(field(j, "inverse"), "inverse");
  const auto& rows = field(j, "compose");
  expect(rows.is_array() && rows.size() == source.size(), "compose must have one row per morphism");
  const int objects_n = static_cast<int>(labels.size());
  for (int t : target) expect(t >= 0 && t < objects_n, "target out of range");

  // Rows are indexed by the position of g among the morphisms out of target(f).
  std::vector<int> position(source.size(), 0);
  std::vector<int> out_count(labels.size(), 0);
  for (std::size_t m = 0; m < source.size(); ++m) {
    expect(source[m] >= 0 && source[m] < objects_n, "source out of range");
    position[m] = out_count[static_cast<std::size_t>(source[m])]++;
  }
  auto table = std::make_shared<std::vector<std::vector<int>>>();
  for (std::size_t m = 0; m < source.size(); ++m) {
    auto row = int_array(rows[m], "compose row");
    expect(static_cast<int>(row.size()) == out_count[static_cast<std::size_t>(target[m])],
           "compose row has the wrong length");
    table->push_back(std::move(row));
  }
  auto composition = [table, position](int f, int g) {
    return (*table)[static_cast<std::size_t>(f)][static_cast<std::size_t>(position[static_cast<std::size_t>(g)])];
  };
  try {
    return std::make_shared<const FiniteGroupoid>(std::move(labels), std::move(source), std::move(target),
                                                  std::move(identity), std::move(inverse), composition);
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

Json to_json(const HallPolynomialEntry& e) {
  return Json{{"lambda", to_json(e.lambda)}, {"mu", to_json(e.mu)}, {"nu", to_json(e.nu)}, {"poly", to_json(e.poly)}};
}

HallPolynomialEntry hall_polynomial_entry_from_json(const Json& j) {
  return {partition_from_json(field(j, "lambda")), partition_from_json(field(j, "mu")),
          partition_from_json(field(j, "nu")), qpoly_from_json(field(j, "poly"))};
}

std::string canonical_dump(const Json& j) { return j.dump() + "\n"; }

std::filesystem::path HallPolynomialCache::path_for(const Partition& lambda, const Partition& mu,
                                                    const Partition& nu) const {
  return dir_ / ("hall-poly_" + file_key(lambda) + "_" + file_key(mu) + "_" + file_key(nu) + ".json");
}

std::optional<QPoly> HallPolynomialCache::read(const Partition& lambda, const Partition& mu,
                                               const Partition& nu) const {
  const auto path = path_for(lambda, mu, nu);
  if (!std::filesystem::exists(path)) return std::nullopt;
  std::ifstream in(path);
  expect(static_cast<bool>(in), "cannot read " + path.string());
  std::stringstream text;
  text << in.rdbuf();
  Json j;
  try {
    j = Json::parse(text.str());
  } catch (const Json::exception& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
  const auto entry = hall_polynomial_entry_from_json(j);
  expect(entry.lambda == lambda && entry.mu == mu && entry.nu == nu, path.string() + " is stored under another key");
  return entry.poly;
}

void HallPolynomialCache::write(const HallPolynomialEntry& entry) const {
  std::filesystem::create_directories(dir_);
  const auto path = path_for(entry.lambda, entry.mu, entry.nu);
  // write-then-rename so a reader never sees a half-written file
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << canonical_dump(to_json(entry));
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace hallforge::json_io
