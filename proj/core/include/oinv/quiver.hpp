#pragma once

// The two-vertex quiver behind the relation elements.  Letters are x (index
// 1), y (index 2), z (index 3) and their transposes; x loops at vertex 1,
// its transpose loops at vertex 2, y runs 2 -> 1, z runs 1 -> 2, and
// transposition swaps the vertices.  Closed paths up to rotation and
// transposition index the generators of the relation elements sigma_{t,r}.

#include <vector>

#include "oinv/expr.hpp"
#include "oinv/sigma.hpp"
#include "oinv/word.hpp"

namespace oinv {

constexpr int kQuiverX = 1;
constexpr int kQuiverY = 2;
constexpr int kQuiverZ = 3;

bool is_quiver_letter(const Letter& a);
// Vertex (1 or 2) the arrow leaves from / points to, reading products
// right-to-left: in a path w = a_1 a_2 ... a_p, arrow a_i starts at
// tail(a_i) and ends at head(a_i), and tail(a_i) == head(a_{i+1}).
int quiver_head(const Letter& a);
int quiver_tail(const Letter& a);

bool is_quiver_path(const Word& w);
bool is_closed_quiver_path(const Word& w);

struct MultiDegree {
  int x = 0, y = 0, z = 0;

  friend bool operator==(const MultiDegree&, const MultiDegree&) = default;
  bool within(const MultiDegree& bound) const {
    return x <= bound.x && y <= bound.y && z <= bound.z;
  }
  int total() const { return x + y + z; }
};

// Counts letters by base symbol, transposed or not.
MultiDegree multi_degree(const Word& w);

class QuiverClass {
 public:
  // Requires: the canonical representative of w is a closed path.
  explicit QuiverClass(const Word& w);

  const NecklaceClass& word_class() const { return cls_; }
  const Word& rep() const { return cls_.rep(); }
  MultiDegree mdeg() const { return mdeg_; }
  // Untransposed y / z letters of the canonical representative.  Their sum
  // has the same parity for every member of the class.
  int y_plain() const { return y_plain_; }
  int z_plain() const { return z_plain_; }

  std::strong_ordering operator<=>(const QuiverClass& o) const {
    return cls_ <=> o.cls_;
  }
  bool operator==(const QuiverClass& o) const { return cls_ == o.cls_; }

 private:
  NecklaceClass cls_;
  MultiDegree mdeg_;
  int y_plain_ = 0, z_plain_ = 0;
};

// All classes of primitive closed paths with multidegree within the bound,
// sorted by (length, representative).
std::vector<QuiverClass> enumerate_closed_classes(const MultiDegree& bound);

// The relation element sigma_{t,r}: a signed sum over multisets
// {(j_1, c_1), ..., (j_m, c_m)} of sigma indices attached to closed-path
// classes whose weighted multidegree totals (t, r, r), of
// (-1)^{xi} s_{j_1}(c_1) ... s_{j_m}(c_m).  Rational coefficients; cached.
// Requires t >= 0, r >= 0; sigma_tr(0, 0) is the empty sum, i.e. 1.
const SigmaPoly& sigma_tr(int t, int r);

// Image of a quiver polynomial under x -> a, y -> b, z -> c (and the
// transposed letters to the transposed sums), each sigma renormalized.
// The three sums must share one field.
SigmaPoly substitute(const SigmaPoly& quiver_poly, const WordSum& a,
                     const WordSum& b, const WordSum& c);

}  // namespace oinv
