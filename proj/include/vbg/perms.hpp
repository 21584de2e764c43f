#pragma once

// Permutations on {1..n} (n <= 6) with exact composition, word
// evaluation, subgroup closure and conjugacy classes.
//
// Composition convention, fixed for the whole library: compose(p, q)
// applies q first, then p (function composition p o q).  A word
// g1 g2 ... gk therefore evaluates to img(g1) o img(g2) o ... o img(gk).

#include "vbg/words.hpp"

#include <string>
#include <vector>

namespace vbg {

constexpr int kMaxDegree = 6;

class Permutation {
public:
  Permutation() = default;
  static Permutation identity(int n);
  // images[i] is the image of point i+1, 1-based, e.g. {2,1,3} = (1,2).
  static Permutation from_one_line(const std::vector<int>& images);

  int degree() const { return static_cast<int>(img_.size()); }
  int apply(int point) const { return img_.at(point - 1) + 1; }  // 1-based
  std::vector<int> one_line() const;  // 1-based images

  bool is_identity() const;
  int order() const;
  std::vector<std::vector<int>> cycles() const;     // nontrivial cycles, min element first
  std::vector<int> cycle_type() const;              // cycle lengths incl. fixed pts, descending
  std::string cycle_string() const;                 // "(1,2)(3,4)", identity is "()"

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator!=(const Permutation& o) const { return img_ != o.img_; }
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

private:
  std::vector<int> img_;  // 0-based internally: img_[i] is 0-based image of i
};

// Apply q first, then p.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
Permutation conjugate(const Permutation& g, const Permutation& x);  // g x g^-1

// Transposition (i, i+1) in S_n.
Permutation transposition(int n, int i);
Permutation parse_cycles(int n, const std::string& text);

// Product img(l1) o img(l2) o ... for a word l1 l2 ...; images indexed by
// generator.
Permutation evaluate_word(const Word& w, const std::vector<Permutation>& images);

std::vector<Permutation> all_permutations(int n);  // sorted by one-line form

struct Closure {
  std::vector<Permutation> elements;  // sorted by one-line form
  bool abelian = false;
  bool full = false;  // whole symmetric group
};
Closure closure(const std::vector<Permutation>& gens, int n);

struct ConjugacyClass {
  Permutation representative;
  long long size = 0;
  std::vector<int> cycle_type;
};

// One class per cycle type.  For n == 4 the classes follow the column
// order used by the S4 character table in this library: identity,
// (1,2)(3,4), (1,2), (1,2,3,4), (1,2,3).  Other degrees order classes
// by partition (ascending lexicographically on descending cycle type).
std::vector<ConjugacyClass> conjugacy_classes(int n);

}  // namespace vbg
