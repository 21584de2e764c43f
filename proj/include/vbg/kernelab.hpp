#pragma once

// Abelianization of the kernel of a homomorphism onto a finite
// permutation group, via a coset table over the image and abelianized
// Reidemeister-Schreier rewriting.

#include "vbg/intlin.hpp"
#include "vbg/perms.hpp"
#include "vbg/words.hpp"

#include <string>
#include <vector>

namespace vbg {

struct CosetTable {
  // Image-group elements, indexed by coset; coset 0 is the identity.
  std::vector<Permutation> elements;
  // Shortlex Schreier representative per coset (prefix closed).
  std::vector<Word> transversal;
  // step[g][c] = coset reached from c by generator g; step_inv for g^-1.
  std::vector<std::vector<int>> step;
  std::vector<std::vector<int>> step_inv;
  // tree[c] = (parent coset, generator, sign) edge that discovered c.
  struct Edge {
    int parent = -1, gen = -1, sign = 0;
  };
  std::vector<Edge> tree;

  int size() const { return static_cast<int>(elements.size()); }
};

// Breadth-first over the signed generator alphabet in presentation
// order, so the transversal is shortlex-minimal.
CosetTable coset_table(const std::vector<Permutation>& images, int n);

struct KernelAbelianization {
  AbelianInvariants invariants;
  int schreier_generators = 0;  // after dropping spanning-tree columns
  int matrix_rows = 0;
  int matrix_cols = 0;
};

// Abelian invariants of the kernel of the homomorphism given by
// `images` (validated against p): one Schreier generator per
// (coset, generator) minus tree edges, one relation row per
// (coset, relator).
KernelAbelianization kernel_abelianization(const Presentation& p,
                                           const std::vector<Permutation>& images, int n);

}  // namespace vbg
