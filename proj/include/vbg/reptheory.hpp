#pragma once

// Rational character theory of S4: the fixed character table,
// permutation characters of the pair module, inner products,
// decomposition into irreducibles, and isotypic sublattices with the
// induced action on the quotient lattice.

#include <vector>

#include "vbg/crystal.hpp"
#include "vbg/intlin.hpp"
#include "vbg/perms.hpp"

namespace vbg {

// Values indexed by conjugacy classes of S_degree, in the order
// produced by conjugacy_classes().
struct ClassFunction {
  int degree = 0;
  std::vector<Rat> values;

  bool operator==(const ClassFunction& o) const {
    return degree == o.degree && values == o.values;
  }
};

// chi_1..chi_5 with columns ordered identity, (1,2)(3,4), (1,2),
// (1,2,3,4), (1,2,3): trivial, sign, the 2-dimensional character, the
// standard character, and standard tensor sign.
std::vector<ClassFunction> s4_character_table();

// Trace of the module action on each class representative; for the
// pair module this counts the index pairs fixed by the class.
ClassFunction permutation_character(const CrystModel& m);

// (1/|S_n|) sum over classes of size * a * b.
Rat inner_product(const ClassFunction& a, const ClassFunction& b);

// Multiplicities of chi_1..chi_5 in a degree-4 class function.
// Throws if any inner product is non-integral (a is then not a
// virtual character of S4).
std::vector<Int> decompose(const ClassFunction& a);

// Central idempotent sum_{i in components} (chi_i(1)/24)
// sum_g chi_i(g) action(g), as an exact rational matrix.
std::vector<std::vector<Rat>> isotypic_projector(const CrystModel& m,
                                                 const std::vector<int>& components);

// Saturated integer basis (rows, HNF) of image(projector) cap Z^m, so
// the quotient by it is torsion-free.
IntMatrix isotypic_sublattice(const CrystModel& m, const std::vector<int>& components);

struct QuotientAction {
  int rank = 0;
  std::vector<Permutation> class_reps;
  std::vector<IntMatrix> matrices;  // induced matrix per class rep
  bool faithful = false;
  ClassFunction character;
};

// Induced action of S_n on Z^m / rowspace(sublattice), in the
// complement coordinates read off the Smith transform of the
// inclusion.  The sublattice must be invariant and saturated.
QuotientAction quotient_action(const CrystModel& m, const IntMatrix& sublattice);

}  // namespace vbg
