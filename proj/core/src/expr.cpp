#include "oinv/expr.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <tuple>

#include "oinv/expansion.hpp"

namespace oinv {

struct SigmaExpr::Node {
  Kind kind;
  FieldDesc field = FieldDesc::rationals();
  FieldElement value;                // Constant
  int t = 0;                         // Sigma
  std::optional<WordSum> argument;   // Sigma
  std::vector<SigmaExpr> children;   // Sum / Product
};

SigmaExpr SigmaExpr::constant(const FieldElement& value) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Constant;
  node->field = value.field();
  node->value = value;
  return SigmaExpr(std::move(node));
}

SigmaExpr SigmaExpr::sigma(int t, WordSum argument) {
  if (t < 1) throw std::invalid_argument("sigma index must be >= 1");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Sigma;
  node->field = argument.field();
  node->t = t;
  node->argument = std::move(argument);
  return SigmaExpr(std::move(node));
}

namespace {

void check_children(const std::vector<SigmaExpr>& children) {
  if (children.empty())
    throw std::invalid_argument("sum/product needs at least one operand");
  for (const SigmaExpr& c : children)
    if (!(c.field() == children.front().field()))
      throw std::invalid_argument("coefficient field mismatch");
}

}  // namespace

SigmaExpr SigmaExpr::sum(std::vector<SigmaExpr> children) {
  check_children(children);
  auto node = std::make_shared<Node>();
  node->kind = Kind::Sum;
  node->field = children.front().field();
  node->children = std::move(children);
  return SigmaExpr(std::move(node));
}

SigmaExpr SigmaExpr::product(std::vector<SigmaExpr> children) {
  check_children(children);
  auto node = std::make_shared<Node>();
  node->kind = Kind::Product;
  node->field = children.front().field();
  node->children = std::move(children);
  return SigmaExpr(std::move(node));
}

SigmaExpr::Kind SigmaExpr::kind() const { return node_->kind; }
const FieldDesc& SigmaExpr::field() const { return node_->field; }

const FieldElement& SigmaExpr::constant_value() const {
  if (node_->kind != Kind::Constant) throw std::logic_error("not a constant");
  return node_->value;
}

int SigmaExpr::t() const {
  if (node_->kind != Kind::Sigma) throw std::logic_error("not a sigma node");
  return node_->t;
}

const WordSum& SigmaExpr::argument() const {
  if (node_->kind != Kind::Sigma) throw std::logic_error("not a sigma node");
  return *node_->argument;
}

const std::vector<SigmaExpr>& SigmaExpr::children() const {
  if (node_->kind != Kind::Sum && node_->kind != Kind::Product)
    throw std::logic_error("not a sum or product node");
  return node_->children;
}

namespace {

using WordKey = std::tuple<std::uint64_t, int, Word>;  // (char or 0, t, word)

std::mutex cache_mutex;
std::map<WordKey, SigmaPoly>& word_cache() {
  static std::map<WordKey, SigmaPoly> cache;
  return cache;
}

// Canonical image of s_t(w) for a single word with unit coefficient.
SigmaPoly sigma_word_normal(int t, const Word& w, const FieldDesc& field) {
  WordKey key{field.characteristic(), t, w};
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = word_cache().find(key);
    if (it != word_cache().end()) return it->second;
  }

  SigmaPoly result(field);
  PrimitiveRoot pr = primitive_root(w);
  if (pr.exponent == 1) {
    result = SigmaPoly::generator(SigmaGen(t, canonical(w)), field);
  } else {
    // s_t of a proper power: rewrite in s_1..s_{t*k} of the primitive root.
    const PowerExpansion& pe = power_expand(t, pr.exponent);
    for (const PowerTerm& term : pe.terms) {
      SigmaPoly prod = SigmaPoly::constant(
          FieldElement::from_mpq(field, mpq_class(term.coeff)));
      for (const auto& [i, e] : term.powers) {
        SigmaPoly base = sigma_word_normal(i, pr.root, field);
        for (int rep = 0; rep < e; ++rep) prod = prod * base;
      }
      result += prod;
    }
  }

  std::lock_guard<std::mutex> lock(cache_mutex);
  word_cache().emplace(key, result);
  return result;
}

}  // namespace

SigmaPoly normalize_sigma(int t, const WordSum& argument) {
  if (t < 1) throw std::invalid_argument("sigma index must be >= 1");
  const FieldDesc& field = argument.field();
  if (argument.is_zero()) return SigmaPoly::zero(field);

  if (argument.term_count() == 1) {
    const auto& [w, c] = *argument.terms().begin();
    return sigma_word_normal(t, w, field).scaled(c.pow(t));
  }

  // Multi-term argument: expand over the summands, then recurse on the
  // single-word values s_j(cycle word).
  std::vector<std::pair<Word, FieldElement>> parts(argument.terms().begin(),
                                                   argument.terms().end());
  AmitsurExpansion ex =
      amitsur_expand(t, static_cast<int>(parts.size()));
  FieldElement one = FieldElement::one(field);
  SigmaPoly out(field);
  for (const AmitsurTerm& term : ex.terms) {
    SigmaPoly prod = SigmaPoly::constant(term.sign > 0 ? one : -one);
    for (const AmitsurFactor& f : term.factors) {
      const std::vector<int>& syms = f.cycle.symbols();
      Word w = parts[syms[0] - 1].first;
      FieldElement scale = parts[syms[0] - 1].second;
      for (std::size_t i = 1; i < syms.size(); ++i) {
        w = w * parts[syms[i] - 1].first;
        scale *= parts[syms[i] - 1].second;
      }
      prod = prod * sigma_word_normal(f.j, w, field)
                        .scaled(scale.pow(static_cast<unsigned long>(f.j)));
    }
    out += prod;
  }
  return out;
}

SigmaPoly normalize(const SigmaExpr& expr) {
  switch (expr.kind()) {
    case SigmaExpr::Kind::Constant:
      return SigmaPoly::constant(expr.constant_value());
    case SigmaExpr::Kind::Sigma:
      return normalize_sigma(expr.t(), expr.argument());
    case SigmaExpr::Kind::Sum: {
      SigmaPoly out(expr.field());
      for (const SigmaExpr& c : expr.children()) out += normalize(c);
      return out;
    }
    case SigmaExpr::Kind::Product: {
      SigmaPoly out = SigmaPoly::constant(FieldElement::one(expr.field()));
      for (const SigmaExpr& c : expr.children()) out = out * normalize(c);
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace oinv
