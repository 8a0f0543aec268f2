#include "oinv/quiver.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>

namespace oinv {

bool is_quiver_letter(const Letter& a) {
  return a.index >= kQuiverX && a.index <= kQuiverZ;
}

int quiver_head(const Letter& a) {
  switch (a.index) {
    case kQuiverX:
      return a.transposed ? 2 : 1;
    case kQuiverY:
      return 1;
    case kQuiverZ:
      return 2;
    default:
      throw std::invalid_argument("not a quiver letter");
  }
}

int quiver_tail(const Letter& a) {
  switch (a.index) {
    case kQuiverX:
      return a.transposed ? 2 : 1;
    case kQuiverY:
      return 2;
    case kQuiverZ:
      return 1;
    default:
      throw std::invalid_argument("not a quiver letter");
  }
}

bool is_quiver_path(const Word& w) {
  const auto& ls = w.letters();
  for (const Letter& a : ls)
    if (!is_quiver_letter(a)) return false;
  for (std::size_t i = 0; i + 1 < ls.size(); ++i)
    if (quiver_tail(ls[i]) != quiver_head(ls[i + 1])) return false;
  return true;
}

bool is_closed_quiver_path(const Word& w) {
  return is_quiver_path(w) &&
         quiver_head(w.letters().front()) == quiver_tail(w.letters().back());
}

MultiDegree multi_degree(const Word& w) {
  MultiDegree d;
  for (const Letter& a : w.letters()) {
    switch (a.index) {
      case kQuiverX:
        ++d.x;
        break;
      case kQuiverY:
        ++d.y;
        break;
      case kQuiverZ:
        ++d.z;
        break;
      default:
        throw std::invalid_argument("not a quiver letter");
    }
  }
  return d;
}

QuiverClass::QuiverClass(const Word& w) : cls_(canonical(w)) {
  if (!is_closed_quiver_path(cls_.rep()))
    throw std::invalid_argument("not a closed quiver path");
  if (!cls_.is_primitive())
    throw std::invalid_argument("quiver class must be primitive");
  mdeg_ = multi_degree(cls_.rep());
  for (const Letter& a : cls_.rep().letters()) {
    if (a.transposed) continue;
    if (a.index == kQuiverY) ++y_plain_;
    if (a.index == kQuiverZ) ++z_plain_;
  }
}

std::vector<QuiverClass> enumerate_closed_classes(const MultiDegree& bound) {
  // Arrows grouped by head vertex; a path is built left to right with
  // tail(current) == head(next).
  static const Letter kLetters[6] = {
      {kQuiverX, false}, {kQuiverX, true}, {kQuiverY, false},
      {kQuiverY, true},  {kQuiverZ, false}, {kQuiverZ, true}};

  std::set<QuiverClass> found;
  int max_len = bound.total();
  std::vector<Letter> path;

  auto extend = [&](auto&& self, MultiDegree used) -> void {
    if (!path.empty() &&
        quiver_head(path.front()) == quiver_tail(path.back())) {
      Word w{std::vector<Letter>(path)};
      if (is_primitive(w)) found.insert(QuiverClass(w));
    }
    if (static_cast<int>(path.size()) == max_len) return;
    for (const Letter& a : kLetters) {
      if (!path.empty() && quiver_head(a) != quiver_tail(path.back()))
        continue;
      MultiDegree next = used;
      if (a.index == kQuiverX) ++next.x;
      if (a.index == kQuiverY) ++next.y;
      if (a.index == kQuiverZ) ++next.z;
      if (!next.within(bound)) continue;
      path.push_back(a);
      self(self, next);
      path.pop_back();
    }
  };
  extend(extend, MultiDegree{});

  return std::vector<QuiverClass>(found.begin(), found.end());
}

namespace {

SigmaPoly compute_sigma_tr(int t, int r) {
  FieldDesc field = FieldDesc::rationals();
  MultiDegree target{t, r, r};
  std::vector<QuiverClass> classes = enumerate_closed_classes(target);

  SigmaPoly out(field);
  std::vector<std::pair<int, const QuiverClass*>> chosen;  // (j, class)

  auto emit = [&]() {
    // Sign exponent: t plus, for each factor, j * (plain y and z letters
    // of the representative, plus one).
    long xi = t;
    std::vector<SigmaGen> gens;
    for (const auto& [j, cls] : chosen) {
      xi += static_cast<long>(j) * (cls->y_plain() + cls->z_plain() + 1);
      gens.emplace_back(j, cls->word_class());
    }
    FieldElement coeff = FieldElement::rational(xi % 2 == 0 ? 1 : -1, 1);
    out.add_term(SigmaMonomial(std::move(gens)), coeff);
  };

  // Each class appears at most once, carrying one index j >= 1; the
  // weighted multidegrees must add up to exactly (t, r, r).
  auto dfs = [&](auto&& self, std::size_t idx, MultiDegree rem) -> void {
    if (rem == MultiDegree{}) {
      emit();
      return;
    }
    if (idx == classes.size()) return;
    self(self, idx + 1, rem);  // skip this class
    const QuiverClass& cls = classes[idx];
    MultiDegree step = cls.mdeg();
    for (int j = 1;; ++j) {
      if (step.x * j > rem.x || step.y * j > rem.y || step.z * j > rem.z)
        break;
      chosen.emplace_back(j, &cls);
      self(self, idx + 1,
           MultiDegree{rem.x - step.x * j, rem.y - step.y * j,
                       rem.z - step.z * j});
      chosen.pop_back();
    }
  };
  dfs(dfs, 0, target);
  return out;
}

}  // namespace

const SigmaPoly& sigma_tr(int t, int r) {
  if (t < 0 || r < 0) throw std::invalid_argument("indices must be >= 0");
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<const SigmaPoly>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(t, r);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache
             .emplace(key, std::make_unique<const SigmaPoly>(
                               compute_sigma_tr(t, r)))
             .first;
  }
  return *it->second;
}

SigmaPoly substitute(const SigmaPoly& quiver_poly, const WordSum& a,
                     const WordSum& b, const WordSum& c) {
  const FieldDesc& field = a.field();
  if (!(b.field() == field) || !(c.field() == field))
    throw std::invalid_argument("substitution sums must share one field");

  auto mapped = [&](const Letter& l) -> WordSum {
    switch (l.index) {
      case kQuiverX:
        return l.transposed ? a.transposed() : a;
      case kQuiverY:
        return l.transposed ? b.transposed() : b;
      case kQuiverZ:
        return l.transposed ? c.transposed() : c;
      default:
        throw std::invalid_argument("not a quiver letter");
    }
  };

  SigmaPoly out(field);
  for (const auto& [mono, coeff] : quiver_poly.terms()) {
    SigmaPoly part =
        SigmaPoly::constant(FieldElement::from_mpq(
            field, coeff.rational_value()));
    for (const SigmaGen& g : mono.factors()) {
      const auto& letters = g.word_class().rep().letters();
      WordSum arg = mapped(letters[0]);
      for (std::size_t i = 1; i < letters.size(); ++i)
        arg = arg * mapped(letters[i]);
      part = part * normalize_sigma(g.t(), arg);
    }
    out += part;
  }
  return out;
}

}  // namespace oinv
