#pragma once

// Twisted-conjugacy (Reidemeister) class counting: brute force over
// finite multiplication tables, the determinant formula on lattices,
// and finite-quotient towers as growth evidence on crystallographic
// models.  Counts on quotients are lower bounds for the group itself,
// so a strictly growing tower is evidence for -- never a proof of --
// an infinite Reidemeister number.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vbg/crystal.hpp"
#include "vbg/intlin.hpp"

namespace vbg {

// Strict upper bound on table sizes; the class counter is quadratic in
// the element count.  Keeps 6-dimensional towers at k <= 3 and the
// 2-dimensional wallpaper tower at k <= 63.
inline constexpr int kTableCap = 8192;

struct FiniteGroupTable {
  std::vector<std::string> elements;    // display names, identity first
  std::vector<std::vector<int>> mul;    // mul[i][j] = index of elements[i]*elements[j]
  std::vector<int> inverse;
  std::vector<int> endo;                // image index per element
};

// Number of classes of x ~ z * x * endo(z)^-1, by union-find over all
// (x, z) pairs.  Validates the table first: identity at index 0,
// inverses, associativity on sampled triples, and the homomorphism law
// for endo on every pair.
long long twisted_classes_finite(const FiniteGroupTable& t);

// S_n with the identity endomorphism.
FiniteGroupTable symmetric_group_table(int n);

// Z_n with x -> multiplier * x.
FiniteGroupTable cyclic_table(int n, long long multiplier);

// Z_{m1} x ... x Z_{mr} with the endomorphism x -> endo_matrix * x;
// rejects matrices that are not well-defined modulo the given moduli.
FiniteGroupTable abelian_table(const std::vector<int>& moduli, const IntMatrix& endo_matrix);

// |det(I - A)| when nonzero; nullopt means INFINITE.
std::optional<Int> reidemeister_lattice(const IntMatrix& a);

// Compares twisted_classes_finite on seeded random finite abelian
// groups against the cokernel order of (I - endo) from the Smith normal
// form; returns how many instances disagreed.
int abelian_cokernel_crosscheck(uint64_t seed, int cases);

enum class TowerVerdict { EVIDENCE_CONSISTENT, INCONSISTENT, INCONCLUSIVE };
std::string verdict_name(TowerVerdict v);

// The subgroup of (Z_k)^m x| S_n generated by the model's assigned
// elements, as a table, with the endomorphism induced by the given
// per-generator image words.  Throws when the induced map fails the
// homomorphism law mod k ("does not descend") or the cap is exceeded.
FiniteGroupTable quotient_table(const CrystModel& m, const std::vector<Word>& endo_images, int k);

struct TowerReport {
  std::vector<std::pair<int, long long>> counts;  // (k, classes)
  bool non_decreasing = false;
  bool strictly_increasing = false;
  TowerVerdict verdict = TowerVerdict::INCONCLUSIVE;
};

// Class counts over the finite quotients for each k.  Strict growth on
// two or more sampled ks reads EVIDENCE_CONSISTENT, a plateau
// INCONCLUSIVE, and any drop INCONSISTENT.
TowerReport quotient_tower(const CrystModel& m, const std::vector<Word>& endo_images,
                           const std::vector<int>& ks);

}  // namespace vbg
