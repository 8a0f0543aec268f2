#include "oinv/sigma.hpp"

#include <algorithm>
#include <stdexcept>

namespace oinv {

SigmaGen::SigmaGen(int t, NecklaceClass cls) : t_(t), cls_(std::move(cls)) {
  if (t < 1) throw std::invalid_argument("sigma index must be >= 1");
  if (!cls_.is_primitive())
    throw std::invalid_argument("sigma argument class must be primitive");
}

std::strong_ordering SigmaGen::operator<=>(const SigmaGen& o) const {
  if (auto c = degree() <=> o.degree(); c != 0) return c;
  if (auto c = t_ <=> o.t_; c != 0) return c;
  return cls_ <=> o.cls_;
}

SigmaMonomial::SigmaMonomial(std::vector<SigmaGen> factors)
    : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end());
  for (const SigmaGen& g : factors_) degree_ += g.degree();
}

SigmaMonomial SigmaMonomial::operator*(const SigmaMonomial& o) const {
  std::vector<SigmaGen> merged;
  merged.reserve(factors_.size() + o.factors_.size());
  std::merge(factors_.begin(), factors_.end(), o.factors_.begin(),
             o.factors_.end(), std::back_inserter(merged));
  SigmaMonomial out;
  out.factors_ = std::move(merged);
  out.degree_ = degree_ + o.degree_;
  return out;
}

std::strong_ordering SigmaMonomial::operator<=>(const SigmaMonomial& o) const {
  if (auto c = degree_ <=> o.degree_; c != 0) return c;
  return std::lexicographical_compare_three_way(
      factors_.begin(), factors_.end(), o.factors_.begin(), o.factors_.end());
}

SigmaPoly SigmaPoly::constant(const FieldElement& c) {
  SigmaPoly out(c.field());
  out.add_term(SigmaMonomial(), c);
  return out;
}

SigmaPoly SigmaPoly::generator(const SigmaGen& g, const FieldDesc& field) {
  SigmaPoly out(field);
  out.add_term(SigmaMonomial({g}), FieldElement::one(field));
  return out;
}

SigmaPoly SigmaPoly::monomial(const SigmaMonomial& m, const FieldElement& c) {
  SigmaPoly out(c.field());
  out.add_term(m, c);
  return out;
}

int SigmaPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

void SigmaPoly::add_term(const SigmaMonomial& m, const FieldElement& c) {
  if (!(c.field() == field_))
    throw std::invalid_argument("coefficient field mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SigmaPoly& SigmaPoly::operator+=(const SigmaPoly& o) {
  if (!(field_ == o.field_))
    throw std::invalid_argument("coefficient field mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SigmaPoly& SigmaPoly::operator-=(const SigmaPoly& o) {
  if (!(field_ == o.field_))
    throw std::invalid_argument("coefficient field mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SigmaPoly SigmaPoly::operator*(const SigmaPoly& o) const {
  if (!(field_ == o.field_))
    throw std::invalid_argument("coefficient field mismatch");
  SigmaPoly out(field_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) out.add_term(m1 * m2, c1 * c2);
  return out;
}

SigmaPoly SigmaPoly::operator-() const {
  SigmaPoly out(field_);
  for (const auto& [m, c] : terms_) out.add_term(m, -c);
  return out;
}

SigmaPoly SigmaPoly::scaled(const FieldElement& c) const {
  SigmaPoly out(field_);
  if (c.is_zero()) return out;
  for (const auto& [m, k] : terms_) out.add_term(m, k * c);
  return out;
}

WordSum WordSum::of_word(const Word& w, const FieldDesc& field) {
  WordSum out(field);
  out.add(w, FieldElement::one(field));
  return out;
}

int WordSum::max_index() const {
  int m = 0;
  for (const auto& [w, c] : terms_) m = std::max(m, w.max_index());
  return m;
}

WordSum& WordSum::add(const Word& w, const FieldElement& c) {
  if (!(c.field() == field_))
    throw std::invalid_argument("coefficient field mismatch");
  if (c.is_zero()) return *this;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

WordSum& WordSum::operator+=(const WordSum& o) {
  if (!(field_ == o.field_))
    throw std::invalid_argument("coefficient field mismatch");
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

WordSum WordSum::scaled(const FieldElement& c) const {
  WordSum out(field_);
  if (c.is_zero()) return out;
  for (const auto& [w, k] : terms_) out.add(w, k * c);
  return out;
}

WordSum WordSum::operator*(const WordSum& o) const {
  if (!(field_ == o.field_))
    throw std::invalid_argument("coefficient field mismatch");
  WordSum out(field_);
  for (const auto& [w1, c1] : terms_)
    for (const auto& [w2, c2] : o.terms_) out.add(w1 * w2, c1 * c2);
  return out;
}

WordSum WordSum::transposed() const {
  WordSum out(field_);
  for (const auto& [w, c] : terms_) out.add(transpose(w), c);
  return out;
}

}  // namespace oinv
