#pragma once

// Words over the letters x_1, x_1^T, x_2, x_2^T, ... with the transpose
// involution, and their necklace classes: two words are equivalent when one
// is a cyclic rotation of the other or of its transpose.  Each class is named
// by its lexicographically least member.

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace oinv {

struct Letter {
  int index = 1;           // 1-based symbol index
  bool transposed = false;

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

inline Letter transpose(Letter a) { return {a.index, !a.transposed}; }

class Word {
 public:
  // Throws std::invalid_argument on an empty letter sequence.
  explicit Word(std::vector<Letter> letters);
  static Word letter(int index, bool transposed = false);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  const Letter& at(std::size_t i) const { return letters_[i]; }
  int max_index() const;

  Word rotated(std::size_t offset) const;
  // k-fold concatenation with itself; k >= 1.
  Word power(int k) const;
  friend Word operator*(const Word& a, const Word& b);

  // Shorter words first, then lexicographic on letters.
  std::strong_ordering operator<=>(const Word& o) const;
  bool operator==(const Word& o) const { return letters_ == o.letters_; }

 private:
  std::vector<Letter> letters_;
};

// Reverses the word and transposes every letter.
Word transpose(const Word& w);

// A word is primitive when it is not a proper power of a shorter word.
bool is_primitive(const Word& w);

struct PrimitiveRoot {
  Word root;
  int exponent;  // w == root^exponent
};
PrimitiveRoot primitive_root(const Word& w);

class NecklaceClass;

// Lexicographically least word among all rotations of w and of transpose(w).
NecklaceClass canonical(const Word& w);

class NecklaceClass {
 public:
  const Word& rep() const { return rep_; }
  std::size_t length() const { return rep_.size(); }
  bool is_primitive() const;

  std::strong_ordering operator<=>(const NecklaceClass& o) const {
    return rep_ <=> o.rep_;
  }
  bool operator==(const NecklaceClass& o) const { return rep_ == o.rep_; }

 private:
  friend NecklaceClass canonical(const Word&);
  explicit NecklaceClass(Word rep) : rep_(std::move(rep)) {}

  Word rep_;
};

// All primitive necklace classes over d symbols with length <= max_length,
// sorted by (length, representative).
std::vector<NecklaceClass> enumerate_classes(int d, int max_length);

}  // namespace oinv
