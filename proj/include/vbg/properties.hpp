#pragma once

// Seeded randomized property suites.  Each suite runs a fixed number of
// cases with exact arithmetic and reports the first failure verbatim, so
// a red run is directly reproducible from (suite, seed).

#include <cstdint>
#include <string>
#include <vector>

namespace vbg {

struct PropertyResult {
  std::string suite;
  int cases = 0;
  int failures = 0;
  std::string first_failure;  // empty when the suite passed

  bool ok() const { return failures == 0; }
};

// Smith normal form invariants are unchanged under multiplication by
// random unimodular matrices on either side.
PropertyResult property_snf_unimodular(uint64_t seed, int cases);

// free_reduce is idempotent and inversion is an involution up to free
// reduction.
PropertyResult property_free_reduce_idempotent(uint64_t seed, int cases);

// substitute respects concatenation and composition of generator maps.
PropertyResult property_substitute_functorial(uint64_t seed, int cases);

// Conjugating every image of an enumerated homomorphism by a fixed
// permutation lands on another enumerated homomorphism.
PropertyResult property_enumeration_conjugation_closed(uint64_t seed, int cases);

// kernel_abelianization is unchanged under conjugating the homomorphism
// and under cycling/reordering relators.
PropertyResult property_kernel_ab_invariance(uint64_t seed, int cases);

// Inner products of random rational combinations of the S4 irreducible
// characters reduce to the coefficient dot product.
PropertyResult property_character_orthonormality(uint64_t seed, int cases);

// Isotypic projectors for random component subsets square to themselves.
PropertyResult property_projector_idempotence(uint64_t seed, int cases);

std::vector<PropertyResult> run_all_property_suites(uint64_t seed, int cases);

}  // namespace vbg
