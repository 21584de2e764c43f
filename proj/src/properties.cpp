#include "vbg/properties.hpp"

#include "vbg/catalog.hpp"
#include "vbg/crystal.hpp"
#include "vbg/homsearch.hpp"
#include "vbg/intlin.hpp"
#include "vbg/kernelab.hpp"
#include "vbg/perms.hpp"
#include "vbg/reptheory.hpp"
#include "vbg/words.hpp"

#include <random>
#include <set>
#include <sstream>

namespace vbg {

namespace {

// mt19937_64 with explicit reduction; std::uniform_int_distribution is
// implementation-defined, and these streams should not depend on the
// standard library build.
struct Rng {
  std::mt19937_64 engine;
  explicit Rng(uint64_t seed) : engine(seed) {}
  // inclusive range
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(engine() % static_cast<uint64_t>(hi - lo + 1));
  }
  int index(int count) { return static_cast<int>(engine() % static_cast<uint64_t>(count)); }
};

struct SuiteRunner {
  PropertyResult result;
  explicit SuiteRunner(std::string name) { result.suite = std::move(name); }
  void record(bool ok, const std::string& describe) {
    ++result.cases;
    if (!ok) {
      ++result.failures;
      if (result.first_failure.empty()) result.first_failure = describe;
    }
  }
};

IntMatrix random_matrix(Rng& rng, int rows, int cols, int bound) {
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = Int(rng.range(-bound, bound));
  return m;
}

// Product of a few elementary row operations: determinant +-1 by
// construction.
IntMatrix random_unimodular(Rng& rng, int n, int ops) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) return u;
  for (int k = 0; k < ops; ++k) {
    int kind = rng.index(3);
    int i = rng.index(n), j = rng.index(n);
    if (kind == 0 && i != j) {
      Int c(rng.range(-2, 2));
      for (int t = 0; t < n; ++t) u.at(i, t) += c * u.at(j, t);
    } else if (kind == 1 && i != j) {
      for (int t = 0; t < n; ++t) std::swap(u.at(i, t), u.at(j, t));
    } else if (kind == 2) {
      for (int t = 0; t < n; ++t) u.at(i, t) = -u.at(i, t);
    }
  }
  return u;
}

Word random_word(Rng& rng, int gens, int max_len) {
  std::vector<Letter> letters;
  int len = static_cast<int>(rng.range(0, max_len));
  for (int i = 0; i < len; ++i)
    letters.push_back(Letter{rng.index(gens), rng.index(2) == 0 ? 1 : -1});
  return Word(std::move(letters));
}

bool freely_reduced(const Word& w) {
  const auto& ls = w.letters();
  for (size_t i = 0; i + 1 < ls.size(); ++i)
    if (ls[i].gen == ls[i + 1].gen && ls[i].sign == -ls[i + 1].sign) return false;
  return true;
}

std::string show_word(const Word& w) {
  std::ostringstream os;
  for (const Letter& l : w.letters()) os << (l.sign > 0 ? " g" : " G") << l.gen;
  return w.empty() ? "(empty)" : os.str().substr(1);
}

}  // namespace

PropertyResult property_snf_unimodular(uint64_t seed, int cases) {
  SuiteRunner s("snf_unimodular");
  Rng rng(seed);
  for (int c = 0; c < cases; ++c) {
    int rows = static_cast<int>(rng.range(1, 5));
    int cols = static_cast<int>(rng.range(1, 5));
    IntMatrix m = random_matrix(rng, rows, cols, 6);
    IntMatrix u = random_unimodular(rng, rows, 6);
    IntMatrix v = random_unimodular(rng, cols, 6);
    SmithResult base = smith_normal_form(m);
    SmithResult twisted = smith_normal_form(mat_mul(mat_mul(u, m), v));
    bool ok = base.rank == twisted.rank && base.diagonal == twisted.diagonal &&
              base.cokernel.free_rank == twisted.cokernel.free_rank &&
              base.cokernel.torsion == twisted.cokernel.torsion;
    s.record(ok, "SNF changed under unimodular factors for matrix " + m.to_string());
  }
  return s.result;
}

PropertyResult property_free_reduce_idempotent(uint64_t seed, int cases) {
  SuiteRunner s("free_reduce_idempotent");
  Rng rng(seed);
  for (int c = 0; c < cases; ++c) {
    // Plant guaranteed cancellations: w = u * x * x^-1 * v.
    Word u = random_word(rng, 4, 8), v = random_word(rng, 4, 8), x = random_word(rng, 4, 5);
    Word w = u * x * x.inverse() * v;
    Word r = free_reduce(w);
    bool ok = freely_reduced(r) && free_reduce(r) == r &&
              free_reduce(w.inverse().inverse()) == r &&
              free_reduce(r * r.inverse()).empty();
    s.record(ok, "free reduction misbehaved on " + show_word(w));
  }
  return s.result;
}

PropertyResult property_substitute_functorial(uint64_t seed, int cases) {
  SuiteRunner s("substitute_functorial");
  Rng rng(seed);
  const int gens = 3;
  for (int c = 0; c < cases; ++c) {
    Word u = random_word(rng, gens, 6), w = random_word(rng, gens, 6);
    std::vector<Word> f, g;
    for (int i = 0; i < gens; ++i) {
      f.push_back(random_word(rng, gens, 4));
      g.push_back(random_word(rng, gens, 4));
    }
    // g after f on generators
    std::vector<Word> gf;
    for (int i = 0; i < gens; ++i) gf.push_back(substitute(f[i], g));
    bool concat_ok = substitute(u * w, f) == free_reduce(substitute(u, f) * substitute(w, f));
    bool compose_ok = substitute(substitute(u, f), g) == substitute(u, gf);
    s.record(concat_ok && compose_ok,
             "substitute not functorial on u=" + show_word(u) + " w=" + show_word(w));
  }
  return s.result;
}

PropertyResult property_enumeration_conjugation_closed(uint64_t seed, int cases) {
  SuiteRunner s("enumeration_conjugation_closed");
  Rng rng(seed);
  struct Pool {
    Family family;
    int n;
    std::vector<std::vector<Permutation>> homs;
    std::set<std::vector<Permutation>> index;
  };
  std::vector<Pool> pools;
  for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::VB, 2},
                                                         {Family::VB, 3},
                                                         {Family::WB, 3},
                                                         {Family::UVB, 3},
                                                         {Family::VT, 2},
                                                         {Family::VT, 3}}) {
    Pool pool{f, n, enumerate_homs(build_presentation(f, n), n), {}};
    pool.index.insert(pool.homs.begin(), pool.homs.end());
    pools.push_back(std::move(pool));
  }
  for (int c = 0; c < cases; ++c) {
    Pool& pool = pools[rng.index(static_cast<int>(pools.size()))];
    const auto& hom = pool.homs[rng.index(static_cast<int>(pool.homs.size()))];
    auto perms = all_permutations(pool.n);
    Permutation g = perms[rng.index(static_cast<int>(perms.size()))];
    std::vector<Permutation> moved;
    for (const Permutation& x : hom) moved.push_back(conjugate(g, x));
    bool closed = pool.index.count(moved) > 0;
    bool same_class = canonical_tuple(moved, pool.n) == canonical_tuple(hom, pool.n);
    s.record(closed && same_class, "conjugate of an enumerated hom escaped the enumeration for " +
                                       family_name(pool.family) + std::to_string(pool.n));
  }
  return s.result;
}

PropertyResult property_kernel_ab_invariance(uint64_t seed, int cases) {
  SuiteRunner s("kernel_ab_invariance");
  Rng rng(seed);
  struct Entry {
    Presentation pres;
    NamedHom hom;
    std::string baseline;
  };
  std::vector<Entry> entries;
  for (Family f : {Family::VB, Family::WB, Family::UVB, Family::VT}) {
    Presentation p = build_presentation(f, 3);
    for (const NamedHom& h : named_homs(f, 3))
      entries.push_back(Entry{p, h, kernel_abelianization(p, h.images, 3).invariants.gap_format()});
  }
  auto s3 = all_permutations(3);
  for (int c = 0; c < cases; ++c) {
    Entry& e = entries[rng.index(static_cast<int>(entries.size()))];
    if (rng.index(2) == 0) {
      // Conjugating the images moves the kernel to a conjugate subgroup;
      // its abelianization cannot change.
      Permutation g = s3[rng.index(static_cast<int>(s3.size()))];
      std::vector<Permutation> moved;
      for (const Permutation& x : e.hom.images) moved.push_back(conjugate(g, x));
      auto inv = kernel_abelianization(e.pres, moved, 3).invariants.gap_format();
      s.record(inv == e.baseline, e.hom.name + " invariants moved under conjugation: " + inv +
                                      " vs " + e.baseline);
    } else {
      // Cycling or inverting relators replaces each by a conjugate or an
      // inverse, so the normal closure -- and the kernel -- is unchanged.
      Presentation q(e.pres.name() + "_cycled");
      for (int i = 0; i < e.pres.generator_count(); ++i) q.add_generator(e.pres.generator_name(i));
      for (const Word& r : e.pres.relators()) {
        const auto& ls = r.letters();
        std::vector<Letter> rotated;
        size_t shift = ls.empty() ? 0 : static_cast<size_t>(rng.index(static_cast<int>(ls.size())));
        for (size_t k = 0; k < ls.size(); ++k) rotated.push_back(ls[(k + shift) % ls.size()]);
        Word w{std::move(rotated)};
        q.add_relator(rng.index(2) == 0 ? w : w.inverse());
      }
      auto inv = kernel_abelianization(q, e.hom.images, 3).invariants.gap_format();
      s.record(inv == e.baseline, e.hom.name + " invariants moved under relator cycling: " + inv +
                                      " vs " + e.baseline);
    }
  }
  return s.result;
}

PropertyResult property_character_orthonormality(uint64_t seed, int cases) {
  SuiteRunner s("character_orthonormality");
  Rng rng(seed);
  auto table = s4_character_table();
  for (int c = 0; c < cases; ++c) {
    int i = rng.index(5), j = rng.index(5);
    Rat ip = inner_product(table[i], table[j]);
    if (ip != Rat(i == j ? 1 : 0)) {
      s.record(false, "(chi_" + std::to_string(i + 1) + ", chi_" + std::to_string(j + 1) +
                          ") = " + ip.str());
      continue;
    }
    // a random non-negative integer combination must decompose back to
    // its own coefficients, with Parseval norm
    std::vector<Int> coeff(5);
    ClassFunction combo;
    combo.degree = 4;
    combo.values.assign(5, Rat(0));
    Rat norm = 0;
    for (int k = 0; k < 5; ++k) {
      coeff[k] = Int(rng.range(0, 4));
      norm += Rat(coeff[k] * coeff[k]);
      for (size_t col = 0; col < combo.values.size(); ++col)
        combo.values[col] += Rat(coeff[k]) * table[k].values[col];
    }
    bool ok = decompose(combo) == coeff && inner_product(combo, combo) == norm;
    s.record(ok, "random character combination failed to decompose to itself");
  }
  return s.result;
}

PropertyResult property_projector_idempotence(uint64_t seed, int cases) {
  SuiteRunner s("projector_idempotence");
  Rng rng(seed);
  CrystModel m4 = perm_module(4);
  std::vector<Int> mult = decompose(permutation_character(m4));
  auto table = s4_character_table();

  using RatMat = std::vector<std::vector<Rat>>;
  auto mul = [](const RatMat& a, const RatMat& b) {
    size_t n = a.size();
    RatMat out(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i)
      for (size_t k = 0; k < n; ++k)
        if (a[i][k] != 0)
          for (size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    return out;
  };
  auto pick = [&](uint32_t mask) {
    std::vector<int> comp;
    for (int i = 0; i < 5; ++i)
      if (mask & (1u << i)) comp.push_back(i + 1);
    return comp;
  };

  for (int c = 0; c < cases; ++c) {
    uint32_t smask = static_cast<uint32_t>(rng.range(1, 31));
    uint32_t tmask = 0;
    for (int i = 0; i < 5; ++i)
      if (!(smask & (1u << i)) && rng.index(2) == 0) tmask |= (1u << i);
    auto sel = pick(smask);
    RatMat ps = isotypic_projector(m4, sel);
    if (mul(ps, ps) != ps) {
      s.record(false, "projector not idempotent for mask " + std::to_string(smask));
      continue;
    }
    RatMat pt = isotypic_projector(m4, pick(tmask));
    RatMat both = isotypic_projector(m4, pick(smask | tmask));
    RatMat prod = mul(ps, pt);
    bool zero = true, additive = true;
    for (size_t i = 0; i < prod.size(); ++i)
      for (size_t j = 0; j < prod.size(); ++j) {
        zero = zero && prod[i][j] == 0;
        additive = additive && ps[i][j] + pt[i][j] == both[i][j];
      }
    if (!(zero && additive)) {
      s.record(false, "disjoint projectors interact for masks " + std::to_string(smask) + "," +
                          std::to_string(tmask));
      continue;
    }
    Int expected = 0;
    for (int i : sel) expected += mult[static_cast<size_t>(i - 1)] * Int(table[i - 1].values[0]);
    int got = isotypic_sublattice(m4, sel).rows();
    s.record(Int(got) == expected, "isotypic rank mismatch for mask " + std::to_string(smask) +
                                       ": " + std::to_string(got));
  }
  return s.result;
}

std::vector<PropertyResult> run_all_property_suites(uint64_t seed, int cases) {
  return {
      property_snf_unimodular(seed, cases),
      property_free_reduce_idempotent(seed + 1, cases),
      property_substitute_functorial(seed + 2, cases),
      property_enumeration_conjugation_closed(seed + 3, cases),
      property_kernel_ab_invariance(seed + 4, cases),
      property_character_orthonormality(seed + 5, cases),
      property_projector_idempotence(seed + 6, cases),
  };
}

}  // namespace vbg
