#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "vbg/catalog.hpp"

#include <set>

using namespace vbg;

namespace {

std::set<std::string> relator_strings(const Presentation& p) {
  std::set<std::string> out;
  for (const Word& r : p.relators()) out.insert(p.word_string(r));
  return out;
}

bool subset(const std::set<std::string>& small, const std::set<std::string>& big) {
  for (const auto& s : small)
    if (!big.count(s)) return false;
  return true;
}

}  // namespace

TEST_CASE("family names round trip") {
  for (Family f : {Family::VB, Family::WB, Family::UVB, Family::VT, Family::SYM,
                   Family::VB3_MOD_VP3COMM, Family::VB3_MOD_KB3COMM, Family::WALLPAPER_G})
    CHECK(parse_family(family_name(f)) == f);
  CHECK_THROWS_AS(parse_family("XB"), std::invalid_argument);
}

TEST_CASE("VB presentations") {
  SUBCASE("two strands") {
    Presentation p = build_presentation(Family::VB, 2);
    CHECK(p.generator_count() == 2);
    REQUIRE(p.relators().size() == 1);
    CHECK(p.word_string(p.relators()[0]) == "v1 v1");
  }
  SUBCASE("three strands has exactly the five relators") {
    Presentation p = build_presentation(Family::VB, 3);
    CHECK(p.generator_count() == 4);
    std::set<std::string> expect = {
        "s1 s2 s1 s2^-1 s1^-1 s2^-1",
        "v1 v2 v1 v2^-1 v1^-1 v2^-1",
        "v1 v2 s1 v2^-1 v1^-1 s2^-1",
        "v1 v1",
        "v2 v2",
    };
    CHECK(relator_strings(p) == expect);
  }
  SUBCASE("strand counts out of range") {
    CHECK_THROWS_AS(build_presentation(Family::VB, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_presentation(Family::VB, 7), std::invalid_argument);
  }
  SUBCASE("relator counts grow as expected") {
    CHECK(build_presentation(Family::VB, 4).relators().size() == 13);
    CHECK(build_presentation(Family::VB, 5).relators().size() == 25);
  }
}

TEST_CASE("welded and unrestricted quotients add the forbidden relators") {
  for (int n : {3, 4}) {
    auto vb = relator_strings(build_presentation(Family::VB, n));
    auto wb = relator_strings(build_presentation(Family::WB, n));
    auto uvb = relator_strings(build_presentation(Family::UVB, n));
    CHECK(subset(vb, wb));
    CHECK(subset(wb, uvb));
    CHECK(wb.size() == vb.size() + static_cast<size_t>(n - 2));
    CHECK(uvb.size() == wb.size() + static_cast<size_t>(n - 2));
  }
  auto wb3 = relator_strings(build_presentation(Family::WB, 3));
  CHECK(wb3.count("v1 s2 s1 v2 s1^-1 s2^-1"));
  auto uvb3 = relator_strings(build_presentation(Family::UVB, 3));
  CHECK(uvb3.count("v2 s1 s2 v1 s2^-1 s1^-1"));
}

TEST_CASE("twin presentation keeps s involutive and drops the s braid relation") {
  Presentation p = build_presentation(Family::VT, 3);
  auto rels = relator_strings(p);
  CHECK(rels.count("s1 s1"));
  CHECK(rels.count("s2 s2"));
  CHECK(rels.count("r1 r2 r1 r2^-1 r1^-1 r2^-1"));
  CHECK(rels.count("r1 r2 s1 r2^-1 r1^-1 s2^-1"));
  CHECK_FALSE(rels.count("s1 s2 s1 s2^-1 s1^-1 s2^-1"));
  CHECK(rels.size() == 6);

  // Distant pairs commute from n=4 up.
  auto rels4 = relator_strings(build_presentation(Family::VT, 4));
  CHECK(rels4.count("s1 s3 s1^-1 s3^-1"));
  CHECK(rels4.count("s1 r3 s1^-1 r3^-1"));
  CHECK(rels4.count("s3 r1 s3^-1 r1^-1"));
}

TEST_CASE("fixed models") {
  SUBCASE("wallpaper group") {
    Presentation p = build_presentation(Family::WALLPAPER_G, 0);
    CHECK(p.generator_count() == 3);
    std::set<std::string> expect = {
        "v1 v1",
        "l_1_2 l_2_1 l_1_2^-1 l_2_1^-1",
        "v1 l_1_2 v1 l_2_1^-1",
        "v1 l_2_1 v1 l_1_2^-1",
    };
    CHECK(relator_strings(p) == expect);
  }
  SUBCASE("pair-generator model") {
    Presentation p = build_presentation(Family::VB3_MOD_VP3COMM, 0);
    CHECK(p.generator_count() == 8);
    auto rels = relator_strings(p);
    // v1 conjugates l_1_2 to l_2_1; v2 conjugates l_1_2 to l_1_3.
    CHECK(rels.count("v1 l_1_2 v1 l_2_1^-1"));
    CHECK(rels.count("v2 l_1_2 v2 l_1_3^-1"));
    CHECK(rels.size() == 30);
  }
  SUBCASE("parity-kernel model") {
    Presentation p = build_presentation(Family::VB3_MOD_KB3COMM, 0);
    auto rels = relator_strings(p);
    CHECK(rels.count("a a a"));
    CHECK(rels.count("b b"));
    CHECK(rels.count("b a b a"));
    CHECK(rels.count("b x_1_2 b^-1 x_1_3^-1"));
    CHECK(rels.size() == 8);
  }
}

TEST_CASE("named homomorphisms match the fixed tables") {
  SUBCASE("degree 3 list") {
    auto homs = named_homs(Family::VB, 3);
    REQUIRE(homs.size() == 8);
    const NamedHom& psi3 = find_hom(homs, "psi_3");
    Permutation t1 = transposition(3, 1), t2 = transposition(3, 2);
    CHECK(psi3.images[2] == t1);                              // v1
    CHECK(psi3.images[3] == t2);                              // v2
    CHECK(psi3.images[0] == t2);                              // s1
    CHECK(psi3.images[1] == compose(compose(t1, t2), t1));    // s2
    CHECK(find_hom(homs, "pi_P").name == "psi_2");
    CHECK(find_hom(homs, "pi_K").name == "psi_7");
  }
  SUBCASE("degree 4 list") {
    auto homs = named_homs(Family::VB, 4);
    REQUIRE(homs.size() == 6);
    const NamedHom& d2 = find_hom(homs, "delta_2");
    Permutation want = transposition(4, 3);
    for (int i : {2, 1, 2, 3}) want = compose(want, transposition(4, i));
    CHECK(d2.images[1] == want);  // s2 -> t3 t2 t1 t2 t3
    CHECK(find_hom(homs, "pi_P").name == "delta_3");
    CHECK(find_hom(homs, "pi_K").name == "delta_5");
  }
  SUBCASE("quotient families keep only the maps that descend") {
    CHECK(named_homs(Family::WB, 3).size() == 5);
    CHECK(named_homs(Family::UVB, 3).size() == 4);
    CHECK(named_homs(Family::WB, 4).size() == 4);
    CHECK(named_homs(Family::UVB, 4).size() == 4);
    CHECK_THROWS_AS(find_hom(named_homs(Family::WB, 3), "psi_7"), std::invalid_argument);
  }
  SUBCASE("generic degrees expose the two projections") {
    for (int n : {2, 5, 6}) {
      auto homs = named_homs(Family::VB, n);
      REQUIRE(homs.size() == 2);
      CHECK(homs[0].name == "pi_P");
      CHECK(homs[1].name == "pi_K");
    }
  }
  SUBCASE("projections are surjective for all degrees") {
    for (int n = 2; n <= 6; ++n) {
      auto homs = named_homs(Family::VB, n);
      CHECK(closure(find_hom(homs, "pi_P").images, n).full);
      CHECK(closure(find_hom(homs, "pi_K").images, n).full);
    }
    // The two degree-4 maps with image generated by t1 and t2 only are
    // genuinely non-surjective; keep that pinned.
    auto homs4 = named_homs(Family::VB, 4);
    CHECK_FALSE(closure(find_hom(homs4, "delta_1").images, 4).full);
    CHECK_FALSE(closure(find_hom(homs4, "delta_6").images, 4).full);
  }
}

TEST_CASE("projection image tuples") {
  Presentation p = build_presentation(Family::VB, 3);
  auto pip = pi_p_images(p, 3);
  auto pik = pi_k_images(p, 3);
  CHECK(pip[0] == transposition(3, 1));  // s1
  CHECK(pik[0].is_identity());           // s1 killed
  CHECK(pik[2] == transposition(3, 1));  // v1 kept
  CHECK_THROWS_AS(pi_p_images(build_presentation(Family::WALLPAPER_G, 0), 2),
                  std::invalid_argument);
}

TEST_CASE("validate_hom rejects non-homomorphisms") {
  Presentation p = build_presentation(Family::VB, 3);
  // v1 -> 3-cycle violates v1^2 = 1.
  std::vector<Permutation> bad = {transposition(3, 1), transposition(3, 2),
                                  parse_cycles(3, "(1,2,3)"), transposition(3, 2)};
  CHECK_THROWS_WITH_AS(validate_hom(p, bad),
                       doctest::Contains("v1 v1"), std::invalid_argument);
  CHECK_THROWS_AS(validate_hom(p, {transposition(3, 1)}), std::invalid_argument);
}

TEST_CASE("named endomorphisms") {
  SUBCASE("degree 3 list") {
    auto endos = named_endos(Family::VB, 3);
    Presentation p = build_presentation(Family::VB, 3);
    const NamedEndo& a = find_endo(endos, "alpha");
    CHECK(p.word_string(a.images[0]) == "v1 v2 s1 v2 v1");
    CHECK(p.word_string(a.images[1]) == "v1 v2 s2 v2 v1");
    CHECK(p.word_string(a.images[2]) == "v1");
    CHECK(p.word_string(a.images[3]) == "v2");
    const NamedEndo& z1 = find_endo(endos, "zeta1");
    CHECK(p.word_string(z1.images[0]) == "v1 s1 v1");
    const NamedEndo& z2 = find_endo(endos, "zeta2");
    CHECK(p.word_string(z2.images[1]) == "s2^-1");
    CHECK_THROWS_AS(find_endo(endos, "beta"), std::invalid_argument);
  }
  SUBCASE("two-strand remark map") {
    auto endos = named_endos(Family::VB, 2);
    Presentation p = build_presentation(Family::VB, 2);
    const NamedEndo& a = find_endo(endos, "alpha");
    CHECK(p.word_string(a.images[0]) == "s1^-1 v1");
    CHECK(p.word_string(a.images[1]) == "v1");
  }
  SUBCASE("twin maps") {
    auto swap2 = find_endo(named_endos(Family::VT, 2), "swap");
    Presentation p2 = build_presentation(Family::VT, 2);
    CHECK(p2.word_string(swap2.images[0]) == "r1");
    CHECK(p2.word_string(swap2.images[1]) == "s1");

    auto phi = find_endo(named_endos(Family::VT, 3), "phi");
    Presentation p3 = build_presentation(Family::VT, 3);
    CHECK(p3.word_string(phi.images[0]) == "s2");
    CHECK(p3.word_string(phi.images[1]) == "r1 r2 s2 r2 r1");
    CHECK(p3.word_string(phi.images[2]) == "r1");
    CHECK(p3.word_string(phi.images[3]) == "r2");
  }
  SUBCASE("wallpaper swap") {
    auto endos = named_endos(Family::WALLPAPER_G, 0);
    const NamedEndo& s = find_endo(endos, "swap");
    Presentation p = build_presentation(Family::WALLPAPER_G, 0);
    CHECK(p.word_string(s.images[0]) == "l_2_1");
    CHECK(p.word_string(s.images[1]) == "l_1_2");
    CHECK(p.word_string(s.images[2]) == "v1");
    CHECK(find_endo(endos, "identity").images.size() == 3);
  }
}

TEST_CASE("symmetric group catalog entries") {
  auto homs = named_homs(Family::SYM, 4);
  REQUIRE(homs.size() == 2);
  const NamedHom& eta = find_hom(homs, "eta");
  CHECK(eta.images[0] == transposition(4, 1));
  CHECK(eta.images[1] == transposition(4, 2));
  CHECK(eta.images[2] == transposition(4, 1));
  CHECK(named_homs(Family::SYM, 3).size() == 1);
}
