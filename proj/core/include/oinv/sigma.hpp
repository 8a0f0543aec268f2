#pragma once

// The commutative ring of polynomial expressions in the symbols s_t(c),
// where t >= 1 and c is a primitive necklace class.  s_t(c) is graded with
// degree t * |c|.  Also provides WordSum, a formal linear combination of
// words used as the argument of an unexpanded s_t.

#include <compare>
#include <map>
#include <vector>

#include "oinv/field.hpp"
#include "oinv/word.hpp"

namespace oinv {

class SigmaGen {
 public:
  // Requires t >= 1 and a primitive class; throws std::invalid_argument.
  SigmaGen(int t, NecklaceClass cls);

  int t() const { return t_; }
  const NecklaceClass& word_class() const { return cls_; }
  int degree() const { return t_ * static_cast<int>(cls_.length()); }

  std::strong_ordering operator<=>(const SigmaGen& o) const;
  bool operator==(const SigmaGen& o) const {
    return t_ == o.t_ && cls_ == o.cls_;
  }

 private:
  int t_;
  NecklaceClass cls_;
};

class SigmaMonomial {
 public:
  SigmaMonomial() = default;  // the empty product, i.e. 1
  explicit SigmaMonomial(std::vector<SigmaGen> factors);

  const std::vector<SigmaGen>& factors() const { return factors_; }
  bool is_constant() const { return factors_.empty(); }
  int degree() const { return degree_; }

  SigmaMonomial operator*(const SigmaMonomial& o) const;

  // Graded order: total degree first, then lexicographic on the factor list.
  std::strong_ordering operator<=>(const SigmaMonomial& o) const;
  bool operator==(const SigmaMonomial& o) const {
    return factors_ == o.factors_;
  }

 private:
  std::vector<SigmaGen> factors_;  // kept sorted
  int degree_ = 0;
};

class SigmaPoly {
 public:
  explicit SigmaPoly(FieldDesc field) : field_(field) {}

  static SigmaPoly zero(FieldDesc field) { return SigmaPoly(field); }
  static SigmaPoly constant(const FieldElement& c);
  static SigmaPoly generator(const SigmaGen& g, const FieldDesc& field);
  static SigmaPoly monomial(const SigmaMonomial& m, const FieldElement& c);

  const FieldDesc& field() const { return field_; }
  bool is_zero() const { return terms_.empty(); }
  // Max total degree of a monomial; -1 for the zero polynomial.
  int degree() const;
  const std::map<SigmaMonomial, FieldElement>& terms() const { return terms_; }

  SigmaPoly& operator+=(const SigmaPoly& o);
  SigmaPoly& operator-=(const SigmaPoly& o);
  SigmaPoly operator*(const SigmaPoly& o) const;
  friend SigmaPoly operator+(SigmaPoly a, const SigmaPoly& b) { return a += b; }
  friend SigmaPoly operator-(SigmaPoly a, const SigmaPoly& b) { return a -= b; }
  SigmaPoly operator-() const;
  SigmaPoly scaled(const FieldElement& c) const;

  void add_term(const SigmaMonomial& m, const FieldElement& c);

  bool operator==(const SigmaPoly& o) const {
    return field_ == o.field_ && terms_ == o.terms_;
  }

 private:
  FieldDesc field_;
  std::map<SigmaMonomial, FieldElement> terms_;  // no zero coefficients
};

class WordSum {
 public:
  explicit WordSum(FieldDesc field) : field_(field) {}
  static WordSum of_word(const Word& w, const FieldDesc& field);

  const FieldDesc& field() const { return field_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Word, FieldElement>& terms() const { return terms_; }
  int max_index() const;

  WordSum& add(const Word& w, const FieldElement& c);
  WordSum& operator+=(const WordSum& o);
  WordSum scaled(const FieldElement& c) const;
  // Concatenation product, extended bilinearly.
  WordSum operator*(const WordSum& o) const;
  WordSum transposed() const;

  bool operator==(const WordSum& o) const {
    return field_ == o.field_ && terms_ == o.terms_;
  }

 private:
  FieldDesc field_;
  std::map<Word, FieldElement> terms_;  // no zero coefficients
};

}  // namespace oinv
