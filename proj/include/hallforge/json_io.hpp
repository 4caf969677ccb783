#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "hallforge/f1_module.hpp"
#include "hallforge/groupoid.hpp"
#include "hallforge/hall_element.hpp"
#include "hallforge/numeric.hpp"
#include "hallforge/partition.hpp"
#include "hallforge/qpoly.hpp"
#include "hallforge/symfunc.hpp"

namespace hallforge::json_io {

using Json = nlohmann::json;

/// Thrown for documents that do not match the expected schema.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Integers that fit in 64 bits are JSON numbers, larger ones decimal strings.
Json to_json(const BigInt& n);
BigInt big_int_from_json(const Json& j);

// Rationals are strings "p" or "p/q".
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

// [3,2,2,1]; the empty partition is [].
Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

// Coefficient list, constant term first.
Json to_json(const QPoly& p);
QPoly qpoly_from_json(const Json& j);

// {"den": [...], "num": [...]}
Json to_json(const QRational& r);
QRational qrational_from_json(const Json& j);

// {"basis": "m" | "e", "terms": [{"coeff": [...], "part": [...]}]}
Json to_json(const SymFunc& f);
SymFunc symfunc_from_json(const Json& j);

// {"terms": [{"coeff": "p/q", "part": [...]}]}, highest label first.
Json to_json(const HallElement& x);
HallElement hall_element_from_json(const Json& j);

// Action array of length n, 0 standing for the basepoint.
Json to_json(const F1tModule& m);
F1tModule f1t_module_from_json(const Json& j);

/// Morphism table: objects, source, target, identity, inverse and, for each
/// morphism f, "compose"[f] listing f then g for g in morphisms_from(target f).
Json to_json(const FiniteGroupoid& g);
GroupoidPtr groupoid_from_json(const Json& j);

/// One entry of a hall polynomial table.
struct HallPolynomialEntry {
  Partition lambda, mu, nu;
  QPoly poly;

  friend bool operator==(const HallPolynomialEntry&, const HallPolynomialEntry&) = default;
};

// {"lambda": [...], "mu": [...], "nu": [...], "poly": [...]}
Json to_json(const HallPolynomialEntry& e);
HallPolynomialEntry hall_polynomial_entry_from_json(const Json& j);

/// Canonical text: sorted keys, no whitespace, trailing newline.
std::string canonical_dump(const Json& j);

/// Directory of hall polynomial entries, one file per (lambda, mu, nu).
class HallPolynomialCache {
 public:
  explicit HallPolynomialCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  const std::filesystem::path& dir() const noexcept { return dir_; }
  std::filesystem::path path_for(const Partition& lambda, const Partition& mu, const Partition& nu) const;

  /// nullopt when absent; FormatError when the file is unreadable, does not
  /// parse, or is stored under the wrong key.
  std::optional<QPoly> read(const Partition& lambda, const Partition& mu, const Partition& nu) const;
  void write(const HallPolynomialEntry& entry) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace hallforge::json_io
