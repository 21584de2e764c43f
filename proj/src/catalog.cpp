#include "vbg/catalog.hpp"

#include <cctype>
#include <cstdlib>

namespace vbg {

std::string family_name(Family f) {
  switch (f) {
    case Family::VB: return "VB";
    case Family::WB: return "WB";
    case Family::UVB: return "UVB";
    case Family::VT: return "VT";
    case Family::SYM: return "SYM";
    case Family::VB3_MOD_VP3COMM: return "VB3_MOD_VP3COMM";
    case Family::VB3_MOD_KB3COMM: return "VB3_MOD_KB3COMM";
    case Family::WALLPAPER_G: return "WALLPAPER_G";
  }
  throw std::logic_error("family_name: bad enum");
}

Family parse_family(const std::string& name) {
  static const std::pair<const char*, Family> table[] = {
      {"VB", Family::VB},
      {"WB", Family::WB},
      {"UVB", Family::UVB},
      {"VT", Family::VT},
      {"SYM", Family::SYM},
      {"VB3_MOD_VP3COMM", Family::VB3_MOD_VP3COMM},
      {"VB3_MOD_KB3COMM", Family::VB3_MOD_KB3COMM},
      {"WALLPAPER_G", Family::WALLPAPER_G},
  };
  for (const auto& [n, f] : table)
    if (name == n) return f;
  throw std::invalid_argument("unknown family '" + name + "'");
}

namespace {

void check_strands(int n) {
  if (n < 2 || n > kMaxDegree)
    throw std::invalid_argument("strand count " + std::to_string(n) + " out of range 2.." +
                                std::to_string(kMaxDegree));
}

std::string gname(const char* prefix, int i) { return std::string(prefix) + std::to_string(i); }

// Generators s1..s{n-1} then v1..v{n-1} (or r for VT); returns the index
// of s_i / v_i through the two lambdas below.
struct StrandGens {
  std::vector<int> s, v;
  Word S(int i, int sign = 1) const { return Word::gen(s[i - 1], sign); }
  Word V(int i, int sign = 1) const { return Word::gen(v[i - 1], sign); }
};

StrandGens add_strand_generators(Presentation& p, int n, const char* s_prefix,
                                 const char* v_prefix, bool s_involution) {
  StrandGens g;
  for (int i = 1; i < n; ++i) g.s.push_back(p.add_generator(gname(s_prefix, i), s_involution));
  for (int i = 1; i < n; ++i) g.v.push_back(p.add_generator(gname(v_prefix, i), true));
  return g;
}

void add_braid_relations(Presentation& p, int n, const std::vector<int>& gens) {
  auto G = [&](int i) { return Word::gen(gens[i - 1]); };
  for (int i = 1; i + 1 <= n - 1; ++i)
    p.add_relation(G(i) * G(i + 1) * G(i), G(i + 1) * G(i) * G(i + 1));
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j) p.add_relation(G(i) * G(j), G(j) * G(i));
}

// s_i v_j = v_j s_i for all ordered pairs with |i-j| >= 2.
void add_mixed_commuting(Presentation& p, int n, const StrandGens& g) {
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - 1; ++j)
      if (std::abs(i - j) >= 2) p.add_relation(g.S(i) * g.V(j), g.V(j) * g.S(i));
}

// v_i v_{i+1} s_i = s_{i+1} v_i v_{i+1}.
void add_mixed_braid(Presentation& p, int n, const StrandGens& g) {
  for (int i = 1; i + 1 <= n - 1; ++i)
    p.add_relation(g.V(i) * g.V(i + 1) * g.S(i), g.S(i + 1) * g.V(i) * g.V(i + 1));
}

// First forbidden family, stored as v_i s_{i+1} s_i v_{i+1} s_i^-1 s_{i+1}^-1.
Word forbidden_one(const StrandGens& g, int i) {
  return g.V(i) * g.S(i + 1) * g.S(i) * g.V(i + 1) * g.S(i, -1) * g.S(i + 1, -1);
}

// Second forbidden family, stored as v_{i+1} s_i s_{i+1} v_i s_{i+1}^-1 s_i^-1.
Word forbidden_two(const StrandGens& g, int i) {
  return g.V(i + 1) * g.S(i) * g.S(i + 1) * g.V(i) * g.S(i + 1, -1) * g.S(i, -1);
}

Presentation build_vb_like(Family f, int n) {
  check_strands(n);
  Presentation p(family_name(f) + std::to_string(n));
  StrandGens g = add_strand_generators(p, n, "s", "v", false);
  add_braid_relations(p, n, g.s);
  add_braid_relations(p, n, g.v);
  add_mixed_commuting(p, n, g);
  add_mixed_braid(p, n, g);
  if (f == Family::WB || f == Family::UVB)
    for (int i = 1; i + 1 <= n - 1; ++i) p.add_relator(forbidden_one(g, i));
  if (f == Family::UVB)
    for (int i = 1; i + 1 <= n - 1; ++i) p.add_relator(forbidden_two(g, i));
  return p;
}

Presentation build_vt(int n) {
  check_strands(n);
  Presentation p("VT" + std::to_string(n));
  StrandGens g = add_strand_generators(p, n, "s", "r", true);
  // No braid relation among the s_i; everything else mirrors the braid
  // family with r in place of v.
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j) p.add_relation(g.S(i) * g.S(j), g.S(j) * g.S(i));
  add_braid_relations(p, n, g.v);
  add_mixed_commuting(p, n, g);
  add_mixed_braid(p, n, g);
  return p;
}

Presentation build_sym(int n) {
  check_strands(n);
  Presentation p("SYM" + std::to_string(n));
  std::vector<int> t;
  for (int i = 1; i < n; ++i) t.push_back(p.add_generator(gname("t", i), true));
  add_braid_relations(p, n, t);
  return p;
}

std::string pair_name(const char* prefix, int i, int j) {
  return std::string(prefix) + "_" + std::to_string(i) + "_" + std::to_string(j);
}

Presentation build_vb3_mod_vp3comm() {
  Presentation p("VB3_MOD_VP3COMM");
  int v1 = p.add_generator("v1", true);
  int v2 = p.add_generator("v2", true);
  std::vector<std::pair<int, int>> labels;
  std::vector<int> l;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      if (i != j) {
        labels.emplace_back(i, j);
        l.push_back(p.add_generator(pair_name("l", i, j)));
      }
  auto lam = [&](int i, int j) {
    for (size_t k = 0; k < labels.size(); ++k)
      if (labels[k] == std::make_pair(i, j)) return Word::gen(l[k]);
    throw std::logic_error("bad pair");
  };
  Word w1 = Word::gen(v1), w2 = Word::gen(v2);
  p.add_relation(w1 * w2 * w1, w2 * w1 * w2);
  for (size_t a = 0; a < labels.size(); ++a)
    for (size_t b = a + 1; b < labels.size(); ++b)
      p.add_relation(Word::gen(l[a]) * Word::gen(l[b]), Word::gen(l[b]) * Word::gen(l[a]));
  // v_k l_{i,j} v_k = l_{t_k(i), t_k(j)} with t_k the adjacent transposition.
  for (int k = 1; k <= 2; ++k) {
    Permutation t = transposition(3, k);
    Word vk = k == 1 ? w1 : w2;
    for (auto [i, j] : labels)
      p.add_relation(vk * lam(i, j) * vk, lam(t.apply(i), t.apply(j)));
  }
  return p;
}

Presentation build_vb3_mod_kb3comm() {
  Presentation p("VB3_MOD_KB3COMM");
  int a = p.add_generator("a");
  int b = p.add_generator("b", true);
  int x12 = p.add_generator("x_1_2");
  int x13 = p.add_generator("x_1_3");
  Word A = Word::gen(a), B = Word::gen(b), X12 = Word::gen(x12), X13 = Word::gen(x13);
  p.add_relator(A * A * A);
  p.add_relator(B * A * B * A);
  p.add_relation(X12 * X13, X13 * X12);
  p.add_relation(B * X12 * B.inverse(), X13);
  p.add_relation(B * X13 * B.inverse(), X12);
  p.add_relation(A * X12 * A.inverse(), X12);
  p.add_relation(A * X13 * A.inverse(), X13);
  return p;
}

Presentation build_wallpaper() {
  Presentation p("WALLPAPER_G");
  int l12 = p.add_generator("l_1_2");
  int l21 = p.add_generator("l_2_1");
  int v1 = p.add_generator("v1", true);
  Word L12 = Word::gen(l12), L21 = Word::gen(l21), V1 = Word::gen(v1);
  p.add_relation(L12 * L21, L21 * L12);
  p.add_relation(V1 * L12 * V1, L21);
  p.add_relation(V1 * L21 * V1, L12);
  return p;
}

}  // namespace

Presentation build_presentation(Family f, int n) {
  switch (f) {
    case Family::VB:
    case Family::WB:
    case Family::UVB: return build_vb_like(f, n);
    case Family::VT: return build_vt(n);
    case Family::SYM: return build_sym(n);
    case Family::VB3_MOD_VP3COMM: return build_vb3_mod_vp3comm();
    case Family::VB3_MOD_KB3COMM: return build_vb3_mod_kb3comm();
    case Family::WALLPAPER_G: return build_wallpaper();
  }
  throw std::logic_error("build_presentation: bad enum");
}

void validate_hom(const Presentation& p, const std::vector<Permutation>& images) {
  if (static_cast<int>(images.size()) != p.generator_count())
    throw std::invalid_argument("validate_hom: image count != generator count");
  for (const Word& r : p.relators()) {
    if (!evaluate_word(r, images).is_identity())
      throw std::invalid_argument("images violate relator " + p.word_string(r) + " of " +
                                  p.name());
  }
}

namespace {

// Strand generators are named <letter><index>; pi_P sends each to the
// adjacent transposition, pi_K kills the s generators.
int strand_index(const std::string& gen_name) {
  if (gen_name.size() < 2) return -1;
  for (size_t i = 1; i < gen_name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(gen_name[i]))) return -1;
  return std::stoi(gen_name.substr(1));
}

std::vector<Permutation> projection_images(const Presentation& p, int n, bool kill_s) {
  std::vector<Permutation> images;
  for (int g = 0; g < p.generator_count(); ++g) {
    const std::string& nm = p.generator_name(g);
    int idx = strand_index(nm);
    if (idx < 1 || idx > n - 1 || (nm[0] != 's' && nm[0] != 'v' && nm[0] != 'r' && nm[0] != 't'))
      throw std::invalid_argument("projection undefined for generator '" + nm + "'");
    if (kill_s && nm[0] == 's')
      images.push_back(Permutation::identity(n));
    else
      images.push_back(transposition(n, idx));
  }
  validate_hom(p, images);
  return images;
}

}  // namespace

std::vector<Permutation> pi_p_images(const Presentation& p, int n) {
  return projection_images(p, n, false);
}

std::vector<Permutation> pi_k_images(const Presentation& p, int n) {
  return projection_images(p, n, true);
}

namespace {

NamedHom make_hom(const Presentation& p, std::string name, std::string alias, int degree,
                  std::vector<Permutation> images) {
  validate_hom(p, images);
  return NamedHom{std::move(name), std::move(alias), degree, std::move(images)};
}

// The eight distinguished maps VB_3 -> S_3, images listed per generator
// in presentation order s1, s2, v1, v2.
std::vector<NamedHom> vb3_psi_list(const Presentation& p, Family f, int limit) {
  int n = 3;
  Permutation t1 = transposition(n, 1), t2 = transposition(n, 2);
  Permutation id = Permutation::identity(n);
  Permutation t121 = compose(compose(t1, t2), t1);
  Permutation t12 = compose(t1, t2), t21 = compose(t2, t1);
  std::vector<std::vector<Permutation>> tuples = {
      {t2, t2, t1, t1},       // psi_1
      {t1, t2, t1, t2},       // psi_2 = pi_P
      {t2, t121, t1, t2},     // psi_3
      {t121, t1, t1, t2},     // psi_4
      {t12, t12, t1, t2},     // psi_5
      {t21, t21, t1, t2},     // psi_6
      {id, id, t1, t2},       // psi_7 = pi_K
      {t12, t12, t1, t1},     // psi_8
  };
  std::vector<NamedHom> out;
  for (int i = 0; i < limit; ++i) {
    std::string alias = i == 1 ? "pi_P" : (i == 6 && f == Family::VB ? "pi_K" : "");
    out.push_back(make_hom(p, "psi_" + std::to_string(i + 1), alias, n, tuples[i]));
  }
  return out;
}

// The six distinguished maps VB_4 -> S_4, per generator s1..s3, v1..v3.
std::vector<NamedHom> vb4_delta_list(const Presentation& p, Family f, int limit) {
  int n = 4;
  Permutation t1 = transposition(n, 1), t2 = transposition(n, 2), t3 = transposition(n, 3);
  Permutation id = Permutation::identity(n);
  // t3 t2 t1 t2 t3 evaluated with the right-to-left convention.
  Permutation t32123 = t3;
  for (const Permutation& q : {t2, t1, t2, t3}) t32123 = compose(t32123, q);
  std::vector<std::vector<Permutation>> tuples = {
      {t1, t2, t1, t1, t2, t1},           // delta_1
      {t3, t32123, t3, t1, t2, t1},       // delta_2
      {t1, t2, t3, t1, t2, t3},           // delta_3 = pi_P
      {t3, t32123, t1, t1, t2, t3},       // delta_4
      {id, id, id, t1, t2, t3},           // delta_5 = pi_K
      {id, id, id, t1, t2, t1},           // delta_6
  };
  std::vector<NamedHom> out;
  for (int i = 0; i < limit; ++i) {
    std::string alias = i == 2 ? "pi_P" : (i == 4 && f == Family::VB ? "pi_K" : "");
    out.push_back(make_hom(p, "delta_" + std::to_string(i + 1), alias, n, tuples[i]));
  }
  return out;
}

}  // namespace

std::vector<NamedHom> named_homs(Family f, int n) {
  Presentation p = build_presentation(f, n);
  switch (f) {
    case Family::VB:
      if (n == 3) return vb3_psi_list(p, f, 8);
      if (n == 4) return vb4_delta_list(p, f, 6);
      return {make_hom(p, "pi_P", "", n, pi_p_images(p, n)),
              make_hom(p, "pi_K", "", n, pi_k_images(p, n))};
    case Family::WB:
      if (n == 3) return vb3_psi_list(p, f, 5);
      if (n == 4) return vb4_delta_list(p, f, 4);
      break;
    case Family::UVB:
      if (n == 3) return vb3_psi_list(p, f, 4);
      if (n == 4) return vb4_delta_list(p, f, 4);
      break;
    case Family::VT:
      return {make_hom(p, "pi_P", "", n, pi_p_images(p, n)),
              make_hom(p, "pi_K", "", n, pi_k_images(p, n))};
    case Family::SYM: {
      std::vector<NamedHom> out;
      out.push_back(make_hom(p, "id", "", n, pi_p_images(p, n)));
      if (n == 4) {
        Permutation t1 = transposition(4, 1), t2 = transposition(4, 2);
        out.push_back(make_hom(p, "eta", "", 4, {t1, t2, t1}));
      }
      return out;
    }
    default: break;
  }
  if (f == Family::WB || f == Family::UVB) {
    // pi_K does not descend to these quotients for n >= 3; n == 2 has no
    // forbidden relators, so both projections survive.
    std::vector<NamedHom> out;
    out.push_back(make_hom(p, "pi_P", "", n, pi_p_images(p, n)));
    if (n == 2) out.push_back(make_hom(p, "pi_K", "", n, pi_k_images(p, n)));
    return out;
  }
  throw std::invalid_argument("no named homomorphisms for " + family_name(f));
}

const NamedHom& find_hom(const std::vector<NamedHom>& homs, const std::string& name) {
  for (const NamedHom& h : homs)
    if (h.name == name || (!h.alias.empty() && h.alias == name)) return h;
  std::string have;
  for (const NamedHom& h : homs) have += (have.empty() ? "" : ", ") + h.name;
  throw std::invalid_argument("unknown homomorphism '" + name + "' (have: " + have + ")");
}

namespace {

NamedEndo identity_endo(const Presentation& p) {
  NamedEndo e{"identity", {}};
  for (int i = 0; i < p.generator_count(); ++i) e.images.push_back(Word::gen(i));
  return e;
}

}  // namespace

std::vector<NamedEndo> named_endos(Family f, int n) {
  Presentation p = build_presentation(f, n);
  std::vector<NamedEndo> out;
  out.push_back(identity_endo(p));
  auto G = [&](const std::string& nm, int sign = 1) {
    int i = p.generator_index(nm);
    if (i < 0) throw std::logic_error("missing generator " + nm);
    return Word::gen(i, sign);
  };
  if (f == Family::VB) {
    // zeta1: s_i -> v_i s_i v_i; zeta2: s_i -> s_i^-1; both fix the v_i.
    NamedEndo z1{"zeta1", {}}, z2{"zeta2", {}};
    for (int g = 0; g < p.generator_count(); ++g) {
      const std::string nm = p.generator_name(g);
      if (nm[0] == 's') {
        std::string vn = "v" + nm.substr(1);
        z1.images.push_back(G(vn) * Word::gen(g) * G(vn));
        z2.images.push_back(Word::gen(g, -1));
      } else {
        z1.images.push_back(Word::gen(g));
        z2.images.push_back(Word::gen(g));
      }
    }
    out.push_back(z1);
    out.push_back(z2);
    if (n == 2) {
      // s1 -> s1^-1 v1, v1 -> v1.
      out.push_back(NamedEndo{"alpha", {G("s1", -1) * G("v1"), G("v1")}});
    }
    if (n == 3) {
      // s_i -> v1 v2 s_i v2 v1, v_i -> v_i; of order 3.
      Word c = G("v1") * G("v2"), ci = G("v2") * G("v1");
      out.push_back(NamedEndo{"alpha", {c * G("s1") * ci, c * G("s2") * ci, G("v1"), G("v2")}});
    }
  } else if (f == Family::VT) {
    if (n == 2) out.push_back(NamedEndo{"swap", {G("r1"), G("s1")}});
    if (n == 3) {
      Word c = G("r1") * G("r2"), ci = G("r2") * G("r1");
      out.push_back(NamedEndo{"phi", {G("s2"), c * G("s2") * ci, G("r1"), G("r2")}});
    }
  } else if (f == Family::WALLPAPER_G) {
    out.push_back(NamedEndo{"swap", {G("l_2_1"), G("l_1_2"), G("v1")}});
  }
  return out;
}

const NamedEndo& find_endo(const std::vector<NamedEndo>& endos, const std::string& name) {
  for (const NamedEndo& e : endos)
    if (e.name == name) return e;
  std::string have;
  for (const NamedEndo& e : endos) have += (have.empty() ? "" : ", ") + e.name;
  throw std::invalid_argument("unknown endomorphism '" + name + "' (have: " + have + ")");
}

}  // namespace vbg
