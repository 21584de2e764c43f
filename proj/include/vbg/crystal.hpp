#pragma once

// Exact models of the crystallographic quotients Z^m x| S_n on the
// permutation module of ordered index pairs: solving the sigma-generator
// lattice vectors, affine word evaluation, element orders and conjugacy.

#include "vbg/intlin.hpp"
#include "vbg/perms.hpp"
#include "vbg/words.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vbg {

// Ordered pairs (i,j), i != j, lexicographic; m = n(n-1) of them.
std::vector<std::pair<int, int>> pair_labels(int n);
int pair_index(int n, int i, int j);

// 0/1 matrix of w acting by e_(i,j) -> e_(w(i), w(j)).  With this
// orientation the map is a homomorphism for compose():
// pair_action(compose(p,q)) = pair_action(p) * pair_action(q).
IntMatrix pair_action(const Permutation& w);

struct AffineElement {
  std::vector<Int> vector;  // translation in Z^m
  Permutation perm;         // holonomy part

  bool operator==(const AffineElement& o) const { return vector == o.vector && perm == o.perm; }
};

AffineElement affine_identity(int n);
// (x, w) * (y, u) = (x + action(w) y, compose(w, u))
AffineElement affine_mul(const AffineElement& a, const AffineElement& b);
AffineElement affine_inverse(const AffineElement& a);

struct NoSolution : std::runtime_error {
  explicit NoSolution(const std::string& what_) : std::runtime_error(what_) {}
};

struct CrystModel {
  int degree = 0;     // n
  int dimension = 0;  // m = n(n-1)
  std::vector<std::pair<int, int>> basis_labels;
  Presentation source;
  std::vector<AffineElement> assignment;  // per generator of source

  // solver metadata; defaults describe a hand-assembled model
  bool underdetermined = false;
  int solution_rank = 0;         // rank of the homogeneous relator system's kernel
  bool lattice_surjective = false;  // sigma vectors generate Z^m as an S_n-module
  std::string seed;              // rendering of the seed that fixed the assignment

  IntMatrix action(const Permutation& w) const { return pair_action(w); }
};

// Bare pair-permutation module: degree, labels and the action, with
// nothing assigned.  The home of the holonomy representation.
CrystModel perm_module(int n);

// Fixes every v_i (and rho_i) at (0, tau_i) and searches for sigma_i
// vectors x_i with sigma_i -> (x_i, tau_i) killing every relator.  The
// braid and mixed relations propagate x_{i+1} from x_i, so candidates
// are seeded at x_1 and ordered by support size then position: +e_k,
// -e_k, then e_k - e_l.  The first seed whose propagated assignment
// re-verifies every relator wins; none winning is NoSolution.
CrystModel solve_assignment(const Presentation& p, int n);

// Wraps an explicit assignment, re-verifying every relator of p.
CrystModel make_model(const Presentation& p, int n, std::vector<AffineElement> assignment);

// Z^6 x| S_3 on its own presentation: v_i -> (0, tau_i) and each
// lambda_(i,j) -> (e_(i,j), id).
CrystModel lattice_extended_vb3_model();

// The wallpaper group Z^2 x| Z_2 with coordinate-swap holonomy, from
// its own catalog presentation.
CrystModel wallpaper_model();

// Left-to-right product of the assigned letters.
AffineElement eval_affine(const Word& w, const CrystModel& m);

// Order k of the permutation part when sum_{j<k} action^j annihilates
// the translation; infinite otherwise (nullopt).
std::optional<int> element_order(const AffineElement& e, const CrystModel& m);

struct ConjugacyWitness {
  bool conjugate = false;
  AffineElement by;  // u with u e1 u^-1 = e2, when conjugate

  explicit operator bool() const { return conjugate; }
};

// Searches u in S_n with u perm(e1) u^-1 = perm(e2) such that
// vector(e2) - action(u) vector(e1) lands in the image lattice of
// (I - action(perm(e2))).
ConjugacyWitness conjugate_test(const AffineElement& e1, const AffineElement& e2,
                                const CrystModel& m);

bool verify_identity(const Word& w1, const Word& w2, const CrystModel& m);

struct Order3BoxReport {
  long long candidates = 0;  // box elements whose permutation part has order 3
  long long order3 = 0;      // of those, elements of order exactly 3
  long long failures = 0;    // order-3 elements not conjugate to the target
};

// Scans every (x, c) with c of order 3 and x in the coordinate box
// {-radius..radius}^m, and tests the order-3 ones for conjugacy to
// `target`.
Order3BoxReport check_order3_box(const CrystModel& m, int radius, const AffineElement& target);

// The canonical model first, then models built from kernel vectors of
// the homogeneous relator system, for solution-independence checks.
std::vector<CrystModel> sample_solutions(const Presentation& p, int n, int count);

}  // namespace vbg
