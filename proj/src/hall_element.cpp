#include "hallforge/hall_element.hpp"

namespace hallforge {

std::string rational_to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

HallElement HallElement::basis(const Partition& label, const Rational& coeff) {
  HallElement e;
  e.add(label, coeff);
  return e;
}

void HallElement::add(const Partition& label, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(label, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

Rational HallElement::coeff(const Partition& label) const {
  auto it = terms_.find(label);
  return it == terms_.end() ? Rational(0) : it->second;
}

HallElement& HallElement::operator+=(const HallElement& rhs) {
  for (const auto& [label, c] : rhs.terms_) add(label, c);
  return *this;
}

HallElement& HallElement::operator-=(const HallElement& rhs) {
  for (const auto& [label, c] : rhs.terms_) add(label, -c);
  return *this;
}

HallElement HallElement::scaled(const Rational& c) const {
  HallElement out;
  for (const auto& [label, x] : terms_) out.add(label, x * c);
  return out;
}

std::string HallElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [label, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += rational_to_string(c) + "·" + label.to_string();
  }
  return out;
}

TensorElement TensorElement::basis(const Partition& left, const Partition& right, const Rational& coeff) {
  TensorElement t;
  t.add({left, right}, coeff);
  return t;
}

TensorElement TensorElement::outer(const HallElement& left, const HallElement& right) {
  TensorElement t;
  for (const auto& [a, x] : left.terms())
    for (const auto& [b, y] : right.terms()) t.add({a, b}, x * y);
  return t;
}

void TensorElement::add(const Key& key, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(key, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

Rational TensorElement::coeff(const Key& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

TensorElement& TensorElement::operator+=(const TensorElement& rhs) {
  for (const auto& [key, c] : rhs.terms_) add(key, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& rhs) {
  for (const auto& [key, c] : rhs.terms_) add(key, -c);
  return *this;
}

std::string TensorElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += rational_to_string(c) + "·" + key.first.to_string() + "⊗" + key.second.to_string();
  }
  return out;
}

}  // namespace hallforge
