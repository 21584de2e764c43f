#pragma once

// Exhaustive search for homomorphisms Presentation -> S_n, conjugacy
// classification, descent to quotients, kernel comparison, and the
// characteristic-subgroup certificate.

#include "vbg/catalog.hpp"
#include "vbg/intlin.hpp"
#include "vbg/perms.hpp"
#include "vbg/words.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vbg {

// Hard cap for full enumeration; S_5 with eight generators is far out
// of reach for naive backtracking and the catalog never needs it.
constexpr int kMaxEnumerationDegree = 4;

// All image tuples satisfying every relator, sorted lexicographically
// by concatenated one-line forms.  Involution generators are assigned
// first (images limited to involutions and the identity); each relator
// is checked as soon as its last generator receives an image.  threads
// > 1 partitions the search on the first assigned generator.
std::vector<std::vector<Permutation>> enumerate_homs(const Presentation& p, int n,
                                                     int threads = 1);

struct HomClass {
  std::vector<Permutation> representative;  // lex-minimal tuple in its orbit
  long long orbit_size = 0;
  bool surjective = false;
  bool abelian_image = false;
  std::string matched_name;  // catalog name whose class this is, if any
};

// Partition by simultaneous conjugation; classes sorted by
// representative.  `named` attaches matched_name tags.
std::vector<HomClass> classify(const std::vector<std::vector<Permutation>>& homs, int n,
                               const std::vector<NamedHom>& named = {});

// Lex-minimal conjugate of an image tuple.
std::vector<Permutation> canonical_tuple(const std::vector<Permutation>& images, int n);

// Does the homomorphism kill every extra relator?
bool descends(const std::vector<Permutation>& images, const std::vector<Word>& extra_relators);

// Equality of kernels of two homomorphisms from the same presentation,
// decided inside image(h1) x image(h2): the pair subgroup generated by
// (h1(g), h2(g)) is the graph of an isomorphism iff its order matches
// both image orders.
bool kernel_equal(const std::vector<Permutation>& h1, int n1, const std::vector<Permutation>& h2,
                  int n2);

struct CertificateResult {
  bool certified = false;
  std::vector<int> offenders;  // class indices with equal invariants but unequal kernels
  std::string detail;
};

// CERTIFIED iff every class either has abelian invariants different
// from the target's (sound non-isomorphism witness) or provably equal
// kernel.  invariants[i] belongs to classes[i].
CertificateResult characteristic_certificate(const std::vector<HomClass>& classes,
                                             int target_index,
                                             const std::vector<AbelianInvariants>& invariants,
                                             int n);

}  // namespace vbg
