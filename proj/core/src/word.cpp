#include "oinv/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace oinv {

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw std::invalid_argument("empty word");
  for (const Letter& a : letters_)
    if (a.index < 1) throw std::invalid_argument("letter index must be >= 1");
}

Word Word::letter(int index, bool transposed) {
  return Word(std::vector<Letter>{Letter{index, transposed}});
}

int Word::max_index() const {
  int m = 0;
  for (const Letter& a : letters_) m = std::max(m, a.index);
  return m;
}

Word Word::rotated(std::size_t offset) const {
  std::size_t n = letters_.size();
  offset %= n;
  if (offset == 0) return *this;
  std::vector<Letter> out;
  out.reserve(n);
  out.insert(out.end(), letters_.begin() + offset, letters_.end());
  out.insert(out.end(), letters_.begin(), letters_.begin() + offset);
  return Word(std::move(out));
}

Word Word::power(int k) const {
  if (k < 1) throw std::invalid_argument("word power must be >= 1");
  std::vector<Letter> out;
  out.reserve(letters_.size() * k);
  for (int i = 0; i < k; ++i)
    out.insert(out.end(), letters_.begin(), letters_.end());
  return Word(std::move(out));
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.letters_.begin(), a.letters_.end());
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(out));
}

std::strong_ordering Word::operator<=>(const Word& o) const {
  if (auto c = letters_.size() <=> o.letters_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(
      letters_.begin(), letters_.end(), o.letters_.begin(), o.letters_.end());
}

Word transpose(const Word& w) {
  std::vector<Letter> out(w.letters().rbegin(), w.letters().rend());
  for (Letter& a : out) a = transpose(a);
  return Word(std::move(out));
}

PrimitiveRoot primitive_root(const Word& w) {
  std::size_t n = w.size();
  for (std::size_t period = 1; period < n; ++period) {
    if (n % period != 0) continue;
    if (w.rotated(period) == w) {
      std::vector<Letter> root(w.letters().begin(),
                               w.letters().begin() + period);
      return PrimitiveRoot{Word(std::move(root)), static_cast<int>(n / period)};
    }
  }
  return PrimitiveRoot{w, 1};
}

bool is_primitive(const Word& w) {
  std::size_t n = w.size();
  for (std::size_t period = 1; period < n; ++period)
    if (n % period == 0 && w.rotated(period) == w) return false;
  return true;
}

NecklaceClass canonical(const Word& w) {
  Word best = w;
  Word wt = transpose(w);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (Word r = w.rotated(i); r < best) best = std::move(r);
    if (Word r = wt.rotated(i); r < best) best = std::move(r);
  }
  return NecklaceClass(std::move(best));
}

bool NecklaceClass::is_primitive() const { return oinv::is_primitive(rep_); }

std::vector<NecklaceClass> enumerate_classes(int d, int max_length) {
  if (d < 1) throw std::invalid_argument("need at least one symbol");
  if (max_length < 1) throw std::invalid_argument("max length must be >= 1");
  // Letters in increasing order: x_1 < x_1^T < x_2 < ...
  std::vector<Letter> alphabet;
  for (int k = 1; k <= d; ++k) {
    alphabet.push_back(Letter{k, false});
    alphabet.push_back(Letter{k, true});
  }
  std::vector<NecklaceClass> out;
  for (int len = 1; len <= max_length; ++len) {
    // Odometer over letter ranks, lexicographic order.
    std::vector<std::size_t> ranks(len, 0);
    for (;;) {
      std::vector<Letter> letters(len);
      for (int i = 0; i < len; ++i) letters[i] = alphabet[ranks[i]];
      Word w(std::move(letters));
      if (is_primitive(w)) {
        NecklaceClass cls = canonical(w);
        if (cls.rep() == w) out.push_back(std::move(cls));
      }
      int pos = len - 1;
      while (pos >= 0 && ranks[pos] + 1 == alphabet.size()) {
        ranks[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++ranks[pos];
    }
  }
  return out;
}

}  // namespace oinv
