#pragma once

// Built-in presentations and distinguished maps.
//
// Families:
//   VB   virtual braid group VB_n: generators s1..s{n-1}, v1..v{n-1}
//   WB   welded quotient: VB_n plus v_i s_{i+1} s_i = s_{i+1} s_i v_{i+1}
//   UVB  unrestricted quotient: WB_n plus v_{i+1} s_i s_{i+1} = s_i s_{i+1} v_i
//   VT   virtual twin group: generators s1..s{n-1} (involutions), r1..r{n-1}
//   SYM  symmetric group S_n on the standard Coxeter generators t1..t{n-1}
//   VB3_MOD_VP3COMM   VB_3 modulo the commutator subgroup of the pure kernel
//                     of the permutation projection (generators v1, v2 and
//                     pair generators l_i_j)
//   VB3_MOD_KB3COMM   VB_3 modulo the commutator subgroup of the kernel of
//                     the parity projection (generators a, b, x_1_2, x_1_3)
//   WALLPAPER_G       rank-2 wallpaper group Z^2 x| Z_2 (l_1_2, l_2_1, v1)
//
// The two projections used throughout: pi_P sends every braid and virtual
// generator to the adjacent transposition; pi_K kills the braid generators
// and keeps the virtual ones.

#include "vbg/perms.hpp"
#include "vbg/words.hpp"

#include <string>
#include <vector>

namespace vbg {

enum class Family {
  VB,
  WB,
  UVB,
  VT,
  SYM,
  VB3_MOD_VP3COMM,
  VB3_MOD_KB3COMM,
  WALLPAPER_G,
};

std::string family_name(Family f);
Family parse_family(const std::string& name);  // throws on unknown name

// Strand-indexed families need 2 <= n <= 6; the three fixed models ignore n.
Presentation build_presentation(Family f, int n);

struct NamedHom {
  std::string name;
  std::string alias;  // optional second name, e.g. "pi_P"
  int degree = 0;
  std::vector<Permutation> images;  // indexed by generator
};

// Distinguished homomorphisms to S_degree for (family, n); every entry is
// validated against the presentation's relators at construction.
std::vector<NamedHom> named_homs(Family f, int n);
const NamedHom& find_hom(const std::vector<NamedHom>& homs, const std::string& name);

struct NamedEndo {
  std::string name;
  std::vector<Word> images;  // image word per generator
};

std::vector<NamedEndo> named_endos(Family f, int n);
const NamedEndo& find_endo(const std::vector<NamedEndo>& endos, const std::string& name);

// pi_P / pi_K image tuples for a family presentation.
std::vector<Permutation> pi_p_images(const Presentation& p, int n);
std::vector<Permutation> pi_k_images(const Presentation& p, int n);

// Throws std::invalid_argument naming the first violated relator if the
// images do not define a homomorphism.
void validate_hom(const Presentation& p, const std::vector<Permutation>& images);

}  // namespace vbg
