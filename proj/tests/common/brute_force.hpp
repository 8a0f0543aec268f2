#pragma once

// Independent brute-force oracles for the class enumerations: generate every
// word outright, close each under rotation and transposition by hand, and
// collect least representatives.  Deliberately naive; shared by the unit
// tests and the acceptance checks.

#include <oinv/quiver.hpp>
#include <oinv/word.hpp>

#include <set>
#include <vector>

namespace oinv::brute {

// Every word of exactly `len` letters over symbols 1..d and their transposes.
inline std::vector<Word> all_words(int d, int len) {
  std::vector<Word> out;
  std::vector<int> digits(static_cast<std::size_t>(len), 0);  // each in [0, 2d)
  while (true) {
    std::vector<Letter> letters;
    letters.reserve(digits.size());
    for (int v : digits) letters.push_back({v / 2 + 1, (v % 2) != 0});
    out.push_back(Word(std::move(letters)));
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == 2 * d) digits[i++] = 0;
    if (i == digits.size()) break;
  }
  return out;
}

// All rotations of w and of transpose(w).
inline std::set<Word> orbit(const Word& w) {
  std::set<Word> s;
  Word t = transpose(w);
  for (std::size_t k = 0; k < w.size(); ++k) {
    s.insert(w.rotated(k));
    s.insert(t.rotated(k));
  }
  return s;
}

// Least representatives of the primitive classes of length exactly len.
inline std::set<Word> primitive_class_reps(int d, int len) {
  std::set<Word> reps;
  for (const Word& w : all_words(d, len))
    if (is_primitive(w)) reps.insert(*orbit(w).begin());
  return reps;
}

// Least representatives of the primitive closed-path classes with
// multidegree within the bound (brute force over every letter sequence up
// to the total length the bound allows).
inline std::set<Word> closed_quiver_class_reps(const MultiDegree& bound) {
  std::set<Word> reps;
  for (int len = 1; len <= bound.total(); ++len)
    for (const Word& w : all_words(3, len)) {
      if (!multi_degree(w).within(bound)) continue;
      if (!is_closed_quiver_path(w) || !is_primitive(w)) continue;
      reps.insert(*orbit(w).begin());
    }
  return reps;
}

}  // namespace oinv::brute
