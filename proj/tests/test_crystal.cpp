#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "vbg/catalog.hpp"
#include "vbg/crystal.hpp"
#include "vbg/intlin.hpp"
#include "vbg/words.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

using namespace vbg;

namespace {

std::vector<Int> e_at(int m, int k) {
  std::vector<Int> v(m, 0);
  v[k] = 1;
  return v;
}

bool relators_verify(const CrystModel& m) {
  AffineElement id = affine_identity(m.degree);
  for (const Word& r : m.source.relators())
    if (!(eval_affine(r, m) == id)) return false;
  return true;
}

}  // namespace

TEST_CASE("pair labels and indexing") {
  auto labels = pair_labels(3);
  std::vector<std::pair<int, int>> expected = {{1, 2}, {1, 3}, {2, 1}, {2, 3}, {3, 1}, {3, 2}};
  CHECK(labels == expected);
  CHECK(pair_labels(4).size() == 12);
  for (int n : {2, 3, 4, 5}) {
    auto ls = pair_labels(n);
    for (int k = 0; k < static_cast<int>(ls.size()); ++k)
      CHECK(pair_index(n, ls[k].first, ls[k].second) == k);
  }
  CHECK_THROWS_AS(pair_index(3, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(pair_index(3, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(pair_index(3, 1, 4), std::invalid_argument);
}

TEST_CASE("pair action matrices") {
  SUBCASE("degree 2 swap") {
    IntMatrix a = pair_action(transposition(2, 1));
    CHECK(a.rows() == 2);
    CHECK(a.at(0, 0) == 0);
    CHECK(a.at(0, 1) == 1);
    CHECK(a.at(1, 0) == 1);
    CHECK(a.at(1, 1) == 0);
  }
  SUBCASE("identity is identity matrix") {
    IntMatrix a = pair_action(Permutation::identity(4));
    for (int i = 0; i < 12; ++i)
      for (int j = 0; j < 12; ++j) CHECK(a.at(i, j) == (i == j ? 1 : 0));
  }
  SUBCASE("trace counts fixed pairs") {
    IntMatrix a = pair_action(transposition(4, 1));
    Int tr = 0;
    for (int i = 0; i < 12; ++i) tr += a.at(i, i);
    CHECK(tr == 2);  // (3,4) and (4,3) are the only fixed pairs
  }
  SUBCASE("homomorphism for compose over all of S3") {
    auto all = all_permutations(3);
    for (const auto& p : all)
      for (const auto& q : all) {
        CHECK(pair_action(compose(p, q)) == mat_mul(pair_action(p), pair_action(q)));
      }
  }
}

TEST_CASE("affine arithmetic") {
  Presentation p = build_presentation(Family::VB, 3);
  CrystModel m = solve_assignment(p, 3);
  AffineElement id = affine_identity(3);
  AffineElement a = eval_affine(p.parse_word("s1 v2"), m);
  AffineElement b = eval_affine(p.parse_word("v1 s2 s1"), m);
  CHECK(affine_mul(a, id) == a);
  CHECK(affine_mul(id, b) == b);
  CHECK(affine_mul(a, affine_inverse(a)) == id);
  CHECK(affine_mul(affine_inverse(b), b) == id);
  // eval is multiplicative
  AffineElement ab = eval_affine(p.parse_word("s1 v2 v1 s2 s1"), m);
  CHECK(affine_mul(a, b) == ab);
  // and sends relators to the identity
  CHECK(relators_verify(m));
}

TEST_CASE("solved models for the VB family") {
  SUBCASE("degree 3") {
    Presentation p = build_presentation(Family::VB, 3);
    CrystModel m = solve_assignment(p, 3);
    CHECK(m.degree == 3);
    CHECK(m.dimension == 6);
    CHECK(m.basis_labels == pair_labels(3));
    CHECK(m.seed == "+e(1,2)");
    CHECK(m.solution_rank == 6);
    CHECK(m.underdetermined);
    CHECK(m.lattice_surjective);
    CHECK(m.assignment[0].vector == e_at(6, pair_index(3, 1, 2)));
    CHECK(m.assignment[1].vector == e_at(6, pair_index(3, 2, 3)));
    CHECK(m.assignment[2].vector == std::vector<Int>(6, 0));
    CHECK(m.assignment[3].vector == std::vector<Int>(6, 0));
    CHECK(m.assignment[0].perm == transposition(3, 1));
    CHECK(m.assignment[2].perm == transposition(3, 1));
    CHECK(relators_verify(m));
  }
  SUBCASE("degree 4") {
    Presentation p = build_presentation(Family::VB, 4);
    CrystModel m = solve_assignment(p, 4);
    CHECK(m.dimension == 12);
    CHECK(m.seed == "+e(1,2)");
    CHECK(m.solution_rank == 7);
    CHECK(m.assignment[0].vector == e_at(12, pair_index(4, 1, 2)));
    CHECK(m.assignment[1].vector == e_at(12, pair_index(4, 2, 3)));
    CHECK(m.assignment[2].vector == e_at(12, pair_index(4, 3, 4)));
    CHECK(m.lattice_surjective);
    CHECK(relators_verify(m));
  }
  SUBCASE("degree 5") {
    Presentation p = build_presentation(Family::VB, 5);
    CrystModel m = solve_assignment(p, 5);
    CHECK(m.dimension == 20);
    CHECK(m.seed == "+e(1,2)");
    CHECK(m.solution_rank == 7);
    for (int i = 0; i < 4; ++i)
      CHECK(m.assignment[i].vector == e_at(20, pair_index(5, i + 1, i + 2)));
    CHECK(relators_verify(m));
  }
  SUBCASE("WB and UVB quotients embed the same way") {
    for (Family f : {Family::WB, Family::UVB}) {
      Presentation p = build_presentation(f, 3);
      CrystModel m = solve_assignment(p, 3);
      CHECK(m.seed == "+e(1,2)");
      CHECK(m.assignment[0].vector == e_at(6, 0));
      CHECK(relators_verify(m));
    }
  }
  SUBCASE("VT needs an antisymmetric vector") {
    Presentation p = build_presentation(Family::VT, 3);
    CrystModel m = solve_assignment(p, 3);
    CHECK(m.seed == "e(1,2)-e(2,1)");
    std::vector<Int> x1(6, 0);
    x1[pair_index(3, 1, 2)] = 1;
    x1[pair_index(3, 2, 1)] = -1;
    CHECK(m.assignment[0].vector == x1);
    CHECK(m.solution_rank == 3);
    CHECK_FALSE(m.lattice_surjective);
    CHECK(relators_verify(m));
  }
}

TEST_CASE("solver failure modes") {
  SUBCASE("collapsing sigma onto v leaves no nonzero embedding") {
    Presentation p = build_presentation(Family::VB, 3);
    p.add_relation(p.parse_word("s1"), p.parse_word("v1"));
    CHECK_THROWS_AS(solve_assignment(p, 3), NoSolution);
  }
  SUBCASE("an involutive sigma still has a support-2 model") {
    Presentation p = build_presentation(Family::VB, 3);
    Word s1 = p.parse_word("s1");
    p.add_relator(s1 * s1);
    CrystModel m = solve_assignment(p, 3);
    CHECK(m.seed == "e(1,2)-e(2,1)");
    std::vector<Int> x1(6, 0);
    x1[pair_index(3, 1, 2)] = 1;
    x1[pair_index(3, 2, 1)] = -1;
    CHECK(m.assignment[0].vector == x1);
    CHECK(m.solution_rank == 3);
    CHECK_FALSE(m.lattice_surjective);
  }
  SUBCASE("make_model rejects broken assignments") {
    Presentation p = build_presentation(Family::VB, 3);
    CrystModel good = solve_assignment(p, 3);
    auto images = good.assignment;
    images[0].vector[1] = 5;  // perturb x1 so the braid relator fails
    CHECK_THROWS_AS(make_model(p, 3, images), std::invalid_argument);
    images = good.assignment;
    images.pop_back();
    CHECK_THROWS_AS(make_model(p, 3, images), std::invalid_argument);
  }
  SUBCASE("evaluating an unassigned generator") {
    Presentation p = build_presentation(Family::VB, 3);
    CrystModel m = solve_assignment(p, 3);
    CHECK_THROWS_AS(eval_affine(Word::gen(9, 1), m), std::invalid_argument);
  }
}

TEST_CASE("element orders") {
  Presentation p = build_presentation(Family::VB, 3);
  CrystModel m = solve_assignment(p, 3);
  SUBCASE("gamma = image of v1 v2 has order 3") {
    AffineElement g = eval_affine(p.parse_word("v1 v2"), m);
    auto ord = element_order(g, m);
    REQUIRE(ord.has_value());
    CHECK(*ord == 3);
  }
  SUBCASE("sigma images have infinite order") {
    for (const char* w : {"s1", "s2", "s1 v1", "s1 s2"}) {
      AffineElement e = eval_affine(p.parse_word(w), m);
      CHECK_FALSE(element_order(e, m).has_value());
      // cross-check: no small power collapses to the identity
      AffineElement acc = affine_identity(3);
      for (int k = 1; k <= 12; ++k) {
        acc = affine_mul(acc, e);
        CHECK_FALSE(acc == affine_identity(3));
      }
    }
  }
  SUBCASE("v images are involutions, identity has order 1") {
    AffineElement v1 = eval_affine(p.parse_word("v1"), m);
    CHECK(element_order(v1, m) == std::optional<int>(2));
    CHECK(element_order(affine_identity(3), m) == std::optional<int>(1));
  }
  SUBCASE("pure translations are infinite") {
    AffineElement tr{e_at(6, 0), Permutation::identity(3)};
    CHECK_FALSE(element_order(tr, m).has_value());
  }
}

TEST_CASE("conjugacy tests") {
  Presentation p = build_presentation(Family::VB, 3);
  CrystModel m = solve_assignment(p, 3);
  AffineElement zero_t1{std::vector<Int>(6, 0), transposition(3, 1)};
  AffineElement zero_t2{std::vector<Int>(6, 0), transposition(3, 2)};
  SUBCASE("virtual transpositions are conjugate with a checked witness") {
    ConjugacyWitness w = conjugate_test(zero_t1, zero_t2, m);
    REQUIRE(w.conjugate);
    AffineElement moved = affine_mul(affine_mul(w.by, zero_t1), affine_inverse(w.by));
    CHECK(moved == zero_t2);
  }
  SUBCASE("identity is not conjugate to a translation") {
    AffineElement id = affine_identity(3);
    AffineElement tr{e_at(6, 0), Permutation::identity(3)};
    CHECK_FALSE(conjugate_test(id, tr, m).conjugate);
  }
  SUBCASE("reflexive and symmetric on sampled elements") {
    std::vector<AffineElement> sample = {
        eval_affine(p.parse_word("v1 v2"), m),
        eval_affine(p.parse_word("s1"), m),
        eval_affine(p.parse_word("s2 v1"), m),
        affine_identity(3),
    };
    for (const auto& a : sample) {
      CHECK(conjugate_test(a, a, m).conjugate);
      for (const auto& b : sample)
        CHECK(conjugate_test(a, b, m).conjugate == conjugate_test(b, a, m).conjugate);
    }
  }
}

TEST_CASE("order-3 box scan") {
  Presentation p = build_presentation(Family::VB, 3);
  CrystModel m = solve_assignment(p, 3);
  AffineElement gamma = eval_affine(p.parse_word("v1 v2"), m);
  Order3BoxReport rep = check_order3_box(m, 2, gamma);
  // two 3-cycles, 5^6 candidate vectors each
  CHECK(rep.candidates == 31250);
  CHECK(rep.order3 == 722);
  CHECK(rep.failures == 0);
  CHECK_THROWS_AS(check_order3_box(m, 50, gamma), std::invalid_argument);
}

TEST_CASE("word identities in the degree-5 model") {
  int n = 5;
  Presentation p = build_presentation(Family::VB, n);
  CrystModel m = solve_assignment(p, n);
  auto endos = named_endos(Family::VB, n);
  const NamedEndo& z1 = find_endo(endos, "zeta1");
  const NamedEndo& z2 = find_endo(endos, "zeta2");
  auto gen = [&](const char* stem, int k) { return std::string(stem) + std::to_string(k); };
  for (int i = 1; i <= 3; ++i) {
    CAPTURE(i);
    Word r1 = p.parse_word(gen("v", i) + " " + gen("s", i + 1) + " " + gen("s", i) + " " +
                           gen("v", i + 1) + " " + gen("s", i) + "^-1 " + gen("s", i + 1) + "^-1");
    Word r2 = p.parse_word(gen("v", i + 1) + " " + gen("s", i) + " " + gen("s", i + 1) + " " +
                           gen("v", i) + " " + gen("s", i + 1) + "^-1 " + gen("s", i) + "^-1");
    Word c1 = p.parse_word(gen("v", i + 1) + " " + gen("v", i) + " " + gen("v", i + 1));
    Word c2 = p.parse_word(gen("v", i) + " " + gen("v", i + 1) + " " + gen("v", i));
    Word d1 = p.parse_word(gen("v", i + 1) + " " + gen("s", i) + " " + gen("s", i + 1));
    Word d2 = p.parse_word(gen("v", i) + " " + gen("s", i + 1) + " " + gen("s", i));
    CHECK(verify_identity(substitute(r1, z1.images), c1 * r2 * c1, m));
    CHECK(verify_identity(substitute(r2, z1.images), c2 * r1 * c2, m));
    CHECK(verify_identity(substitute(r1, z2.images), d1.inverse() * r2 * d1, m));
    CHECK(verify_identity(substitute(r2, z2.images), d2.inverse() * r1 * d2, m));
  }
  // sanity: verify_identity can also say no
  CHECK(verify_identity(p.parse_word("s1 s2 s1"), p.parse_word("s2 s1 s2"), m));
  CHECK_FALSE(verify_identity(p.parse_word("s1"), p.parse_word("s2"), m));
}

TEST_CASE("lattice-extended model") {
  CrystModel m = lattice_extended_vb3_model();
  CHECK(m.degree == 3);
  CHECK(m.dimension == 6);
  CHECK(m.assignment.size() == 8);
  CHECK(relators_verify(m));
  const Presentation& p = m.source;
  CHECK(verify_identity(p.parse_word("v1 l_1_2 v1"), p.parse_word("l_2_1"), m));
  CHECK(verify_identity(p.parse_word("v2 l_1_2 v2"), p.parse_word("l_1_3"), m));
  CHECK(verify_identity(p.parse_word("l_1_2 l_2_1"), p.parse_word("l_2_1 l_1_2"), m));
  AffineElement g = eval_affine(p.parse_word("v1 v2"), m);
  CHECK(element_order(g, m) == std::optional<int>(3));
}

TEST_CASE("solution independence across sampled models") {
  Presentation p = build_presentation(Family::VB, 3);
  auto models = sample_solutions(p, 3, 3);
  REQUIRE(models.size() == 3);
  CHECK(models[0].seed == "+e(1,2)");
  for (size_t i = 0; i < models.size(); ++i)
    for (size_t j = i + 1; j < models.size(); ++j)
      CHECK_FALSE(models[i].assignment == models[j].assignment);
  for (const CrystModel& m : models) {
    CHECK(relators_verify(m));
    AffineElement g = eval_affine(p.parse_word("v1 v2"), m);
    CHECK(element_order(g, m) == std::optional<int>(3));
    AffineElement zero_t1{std::vector<Int>(6, 0), transposition(3, 1)};
    AffineElement zero_t2{std::vector<Int>(6, 0), transposition(3, 2)};
    CHECK(conjugate_test(zero_t1, zero_t2, m).conjugate);
  }
  // the Lemma identities hold in every sampled degree-5 solution too
  Presentation p5 = build_presentation(Family::VB, 5);
  auto endos5 = named_endos(Family::VB, 5);
  const NamedEndo& z1 = find_endo(endos5, "zeta1");
  Word r1 = p5.parse_word("v1 s2 s1 v2 s1^-1 s2^-1");
  Word r2 = p5.parse_word("v2 s1 s2 v1 s2^-1 s1^-1");
  Word c1 = p5.parse_word("v2 v1 v2");
  for (const CrystModel& m : sample_solutions(p5, 5, 3))
    CHECK(verify_identity(substitute(r1, z1.images), c1 * r2 * c1, m));
}
