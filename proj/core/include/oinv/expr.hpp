#pragma once

// Unevaluated expressions in the symbols s_t(arg), where arg is a formal
// linear combination of words, plus the normalizer that rewrites any such
// expression into the canonical ring: s_t over sums expands cyclically,
// scalars come out as t-th powers, arguments that are proper powers reduce
// to their primitive root, and every argument is replaced by its necklace
// class representative.

#include <memory>
#include <vector>

#include "oinv/sigma.hpp"

namespace oinv {

class SigmaExpr {
 public:
  enum class Kind { Constant, Sigma, Sum, Product };

  static SigmaExpr constant(const FieldElement& value);
  // Requires t >= 1; throws std::invalid_argument otherwise.
  static SigmaExpr sigma(int t, WordSum argument);
  // Require at least one child; all children must share one field.
  static SigmaExpr sum(std::vector<SigmaExpr> children);
  static SigmaExpr product(std::vector<SigmaExpr> children);

  Kind kind() const;
  const FieldDesc& field() const;

  const FieldElement& constant_value() const;      // Kind::Constant
  int t() const;                                   // Kind::Sigma
  const WordSum& argument() const;                 // Kind::Sigma
  const std::vector<SigmaExpr>& children() const;  // Kind::Sum / Product

 private:
  struct Node;
  explicit SigmaExpr(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Canonical image of the expression in the sigma ring.  Deterministic; the
// per-word results are cached process-wide (thread-safe).
SigmaPoly normalize(const SigmaExpr& expr);

// Canonical image of s_t(argument).
SigmaPoly normalize_sigma(int t, const WordSum& argument);

}  // namespace oinv
