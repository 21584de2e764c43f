#include "vbg/verify.hpp"

#include "vbg/catalog.hpp"
#include "vbg/crystal.hpp"
#include "vbg/golden_data.hpp"
#include "vbg/homsearch.hpp"
#include "vbg/kernelab.hpp"
#include "vbg/perms.hpp"
#include "vbg/properties.hpp"
#include "vbg/reptheory.hpp"
#include "vbg/twisted.hpp"
#include "vbg/words.hpp"

#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace vbg {

namespace {

using nlohmann::json;
using Checks = std::vector<CheckResult>;

const json& golden() {
  static const json data = json::parse(kGoldenJson);
  return data;
}

void add(Checks& out, std::string name, std::string expected, std::string actual) {
  bool pass = expected == actual;
  out.push_back({std::move(name), std::move(expected), std::move(actual), pass});
}

std::string show(long long v) { return std::to_string(v); }
std::string show(int v) { return std::to_string(v); }
std::string show(bool v) { return v ? "true" : "false"; }

// Uniform rendering for list-valued comparisons: both the golden side
// and the computed side go through nlohmann's dump.
std::string dump_json(const json& j) { return j.dump(); }

json to_json(const std::vector<Int>& v) {
  json out = json::array();
  for (const Int& x : v) out.push_back(x.str());
  return out;
}

json to_json_rat(const std::vector<Rat>& v) {
  json out = json::array();
  for (const Rat& x : v) {
    std::ostringstream os;
    os << x;
    out.push_back(os.str());
  }
  return out;
}

// Golden integer lists compare against exact values rendered as decimal
// strings, so both sides normalize through this.
json golden_ints(const json& j) {
  json out = json::array();
  for (const auto& e : j) out.push_back(std::to_string(e.get<long long>()));
  return out;
}

std::pair<Family, int> parse_family_key(const std::string& key) {
  int n = key.back() - '0';
  return {parse_family(key.substr(0, key.size() - 1)), n};
}

// ---- hom search ------------------------------------------------------

struct FamilyData {
  Presentation pres;
  std::vector<HomClass> classes;
  std::vector<AbelianInvariants> invariants;
};

const FamilyData& family_data(Family f, int n, int threads) {
  static std::map<std::pair<int, int>, FamilyData> cache;
  auto key = std::make_pair(static_cast<int>(f), n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  FamilyData data{build_presentation(f, n), {}, {}};
  data.classes = classify(enumerate_homs(data.pres, n, threads), n, named_homs(f, n));
  for (const HomClass& c : data.classes)
    data.invariants.push_back(kernel_abelianization(data.pres, c.representative, n).invariants);
  return cache.emplace(key, std::move(data)).first->second;
}

void check_hom_counts_main(Checks& ch, int threads) {
  const json& families = golden().at("hom_search").at("families");
  for (auto it = families.begin(); it != families.end(); ++it) {
    auto [f, n] = parse_family_key(it.key());
    const FamilyData& data = family_data(f, n, threads);
    long long total = 0;
    for (const HomClass& c : data.classes) total += c.orbit_size;
    add(ch, it.key() + " homomorphism count", show(it.value().at("homs").get<long long>()),
        show(total));
    add(ch, it.key() + " class count", show(it.value().at("classes").get<long long>()),
        show(static_cast<long long>(data.classes.size())));
    std::set<std::string> nonabelian;
    for (const HomClass& c : data.classes)
      if (!c.abelian_image) nonabelian.insert(c.matched_name);
    add(ch, it.key() + " non-abelian classes",
        dump_json(it.value().at("nonabelian")),
        dump_json(json(std::vector<std::string>(nonabelian.begin(), nonabelian.end()))));
  }
}

void check_hom_counts_twin(Checks& ch, int threads) {
  const json& ladder = golden().at("hom_search").at("twin_ladder");
  int nontrivial = 0;
  for (const HomClass& c : family_data(Family::VT, 2, threads).classes) {
    bool trivial = true;
    for (const Permutation& x : c.representative)
      if (!(x == Permutation::identity(2))) trivial = false;
    if (!trivial) ++nontrivial;
  }
  add(ch, "VT2 nontrivial classes", show(ladder.at("VT2_nontrivial").get<long long>()),
      show(nontrivial));
  for (int n : {3, 4}) {
    long long surjective = 0;
    for (const HomClass& c : family_data(Family::VT, n, threads).classes)
      if (c.surjective) ++surjective;
    std::string key = "VT" + std::to_string(n) + "_surjective";
    add(ch, "VT" + std::to_string(n) + " surjective classes",
        show(ladder.at(key).get<long long>()), show(surjective));
  }
}

// ---- kernel abelianizations ------------------------------------------

void check_kernels_block(Checks& ch, const std::string& family_key) {
  const json& block = golden().at("kernel_abelianizations").at(family_key);
  auto [f, n] = parse_family_key(family_key);
  Presentation p = build_presentation(f, n);
  auto homs = named_homs(f, n);
  for (auto it = block.begin(); it != block.end(); ++it) {
    if (it.key() == "source") continue;
    std::string got =
        kernel_abelianization(p, find_hom(homs, it.key()).images, n).invariants.gap_format();
    add(ch, family_key + " Ker(" + it.key() + ") abelianized", it.value().get<std::string>(),
        got);
  }
}

void check_kernels_main(Checks& ch) {
  for (const char* key : {"VB3", "VB4", "WB3", "UVB3", "WB4", "UVB4"})
    check_kernels_block(ch, key);
}

void check_kernels_twin(Checks& ch) { check_kernels_block(ch, "VT3"); }

// ---- descent ---------------------------------------------------------

void check_descent(Checks& ch) {
  const json& expected = golden().at("descent");
  for (int n : {3, 4}) {
    Presentation vb = build_presentation(Family::VB, n);
    Presentation wb = build_presentation(Family::WB, n);
    Presentation uvb = build_presentation(Family::UVB, n);
    std::vector<Word> wb_extra(wb.relators().begin() + vb.relators().size(),
                               wb.relators().end());
    std::vector<Word> uvb_extra(uvb.relators().begin() + vb.relators().size(),
                                uvb.relators().end());
    std::vector<std::string> to_wb, to_uvb;
    for (const NamedHom& h : named_homs(Family::VB, n)) {
      if (descends(h.images, wb_extra)) to_wb.push_back(h.name);
      if (descends(h.images, uvb_extra)) to_uvb.push_back(h.name);
    }
    std::sort(to_wb.begin(), to_wb.end());
    std::sort(to_uvb.begin(), to_uvb.end());
    std::string wb_key = "WB" + std::to_string(n);
    std::string uvb_key = "UVB" + std::to_string(n);
    add(ch, "descent to " + wb_key, dump_json(expected.at(wb_key)), dump_json(json(to_wb)));
    add(ch, "descent to " + uvb_key, dump_json(expected.at(uvb_key)), dump_json(json(to_uvb)));
  }
}

// ---- characteristic certificates -------------------------------------

CertificateResult run_certificate(Family f, int n, const std::string& target, bool fold_abelian,
                                  std::vector<std::string>* offender_names, int threads) {
  const FamilyData& data = family_data(f, n, threads);
  std::vector<HomClass> classes;
  std::vector<AbelianInvariants> invs;
  for (size_t i = 0; i < data.classes.size(); ++i) {
    if (!fold_abelian && data.classes[i].abelian_image) continue;
    classes.push_back(data.classes[i]);
    invs.push_back(data.invariants[i]);
  }
  int target_index = -1;
  for (size_t i = 0; i < classes.size(); ++i)
    if (classes[i].matched_name == target) target_index = static_cast<int>(i);
  if (target_index < 0)
    throw std::invalid_argument("certificate target " + target + " not found");
  CertificateResult r = characteristic_certificate(classes, target_index, invs, n);
  if (offender_names)
    for (int o : r.offenders) offender_names->push_back(classes[o].matched_name);
  return r;
}

std::string cert_label(const json& row) {
  return row.at(0).get<std::string>() + std::to_string(row.at(1).get<int>()) + " " +
         row.at(2).get<std::string>();
}

void check_certificates_main(Checks& ch, int threads) {
  const json& block = golden().at("certificates");
  for (const json& row : block.at("certified")) {
    auto [f, n] = parse_family_key(row.at(0).get<std::string>() + row.at(1).dump());
    CertificateResult r =
        run_certificate(f, n, row.at(2).get<std::string>(), false, nullptr, threads);
    add(ch, "certificate " + cert_label(row), "CERTIFIED",
        r.certified ? "CERTIFIED" : "NOT_CERTIFIED");
  }
  for (const json& row : block.at("not_certified")) {
    auto [f, n] = parse_family_key(row.at("family").get<std::string>() +
                                   std::to_string(row.at("n").get<int>()));
    std::vector<std::string> offenders;
    CertificateResult r =
        run_certificate(f, n, row.at("target").get<std::string>(), false, &offenders, threads);
    std::string label = row.at("family").get<std::string>() + std::to_string(row.at("n").get<int>()) +
                        " " + row.at("target").get<std::string>();
    add(ch, "certificate " + label, "NOT_CERTIFIED", r.certified ? "CERTIFIED" : "NOT_CERTIFIED");
    std::sort(offenders.begin(), offenders.end());
    add(ch, "certificate " + label + " offenders", dump_json(row.at("offenders")),
        dump_json(json(offenders)));
  }
}

void check_certificates_twin(Checks& ch, int threads) {
  const json& block = golden().at("certificates").at("twin_ladder");
  for (const json& row : block.at("certified")) {
    CertificateResult r = run_certificate(Family::VT, row.at(1).get<int>(),
                                          row.at(2).get<std::string>(), false, nullptr, threads);
    add(ch, "certificate " + cert_label(row), "CERTIFIED",
        r.certified ? "CERTIFIED" : "NOT_CERTIFIED");
  }
  for (const json& row : block.at("certified_folded")) {
    CertificateResult r = run_certificate(Family::VT, row.at(1).get<int>(),
                                          row.at(2).get<std::string>(), true, nullptr, threads);
    add(ch, "certificate " + cert_label(row) + " (abelian classes folded in)", "CERTIFIED",
        r.certified ? "CERTIFIED" : "NOT_CERTIFIED");
  }
  for (const json& row : block.at("not_certified")) {
    CertificateResult r = run_certificate(Family::VT, row.at("n").get<int>(),
                                          row.at("target").get<std::string>(),
                                          row.at("folded").get<bool>(), nullptr, threads);
    std::string label = "VT" + std::to_string(row.at("n").get<int>()) + " " +
                        row.at("target").get<std::string>();
    add(ch, "certificate " + label, "NOT_CERTIFIED", r.certified ? "CERTIFIED" : "NOT_CERTIFIED");
    add(ch, "certificate " + label + " offender count",
        show(row.at("offender_count").get<long long>()),
        show(static_cast<long long>(r.offenders.size())));
  }
}

// ---- non-characteristic witnesses ------------------------------------

void check_witnesses(Checks& ch, bool twin_cases) {
  for (const json& c : golden().at("witnesses").at("cases")) {
    Family f = parse_family(c.at("family").get<std::string>());
    if ((f == Family::VT) != twin_cases) continue;
    int n = c.at("n").get<int>();
    Presentation p = build_presentation(f, n);
    auto endos = named_endos(f, n);
    const NamedEndo& endo = find_endo(endos, c.at("endo").get<std::string>());
    Word moved = substitute(p.parse_word(c.at("word").get<std::string>()), endo.images);
    std::vector<Permutation> projection = c.at("projection").get<std::string>() == "pi_P"
                                              ? pi_p_images(p, n)
                                              : pi_k_images(p, n);
    Permutation image = evaluate_word(moved, projection);
    std::string name = c.at("name").get<std::string>();
    add(ch, name, dump_json(golden_ints(c.at("image_one_line"))),
        dump_json([&] {
          json out = json::array();
          for (int v : image.one_line()) out.push_back(std::to_string(v));
          return out;
        }()));
    add(ch, name + ": image is not the identity", "true",
        show(!(image == Permutation::identity(n))));
  }
}

// ---- character theory ------------------------------------------------

std::vector<int> parse_components(const std::string& key) {
  std::vector<int> out;
  std::istringstream is(key);
  std::string tok;
  while (std::getline(is, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

void check_character(Checks& ch) {
  const json& block = golden().at("character");
  auto table = s4_character_table();
  for (size_t i = 0; i < table.size(); ++i)
    add(ch, "character table row chi_" + std::to_string(i + 1),
        dump_json(golden_ints(block.at("table").at(i))),
        dump_json(to_json_rat(table[i].values)));

  json sizes = json::array();
  for (const ConjugacyClass& c : conjugacy_classes(4)) sizes.push_back(std::to_string(c.size));
  add(ch, "conjugacy class sizes", dump_json(golden_ints(block.at("class_sizes"))),
      dump_json(sizes));

  const json& perm_chars = block.at("perm_char");
  for (auto it = perm_chars.begin(); it != perm_chars.end(); ++it) {
    int n = std::stoi(it.key());
    add(ch, "permutation character, degree " + it.key(), dump_json(golden_ints(it.value())),
        dump_json(to_json_rat(permutation_character(perm_module(n)).values)));
  }

  ClassFunction chi = permutation_character(perm_module(4));
  add(ch, "multiplicities of chi", dump_json(golden_ints(block.at("multiplicities"))),
      dump_json(to_json(decompose(chi))));
  for (size_t i = 0; i < table.size(); ++i) {
    std::ostringstream got;
    got << inner_product(chi, table[i]);
    add(ch, "(chi | chi_" + std::to_string(i + 1) + ")",
        std::to_string(block.at("multiplicities").at(i).get<long long>()), got.str());
  }

  CrystModel m4 = perm_module(4);
  const json& ranks = block.at("isotypic_ranks");
  for (auto it = ranks.begin(); it != ranks.end(); ++it) {
    IntMatrix lattice = isotypic_sublattice(m4, parse_components(it.key()));
    add(ch, "isotypic rank {" + it.key() + "}", show(it.value().get<long long>()),
        show(static_cast<long long>(lattice.rows())));
  }

  auto check_quotient = [&](const char* key, const std::vector<int>& comps) {
    const json& q = block.at(key);
    QuotientAction action = quotient_action(m4, isotypic_sublattice(m4, comps));
    add(ch, std::string(key) + " rank", show(q.at("rank").get<long long>()),
        show(static_cast<long long>(action.rank)));
    add(ch, std::string(key) + " faithful", show(q.at("faithful").get<bool>()),
        show(action.faithful));
    add(ch, std::string(key) + " character", dump_json(golden_ints(q.at("character"))),
        dump_json(to_json_rat(action.character.values)));
  };
  check_quotient("quotient_by_134", {1, 3, 4});
  check_quotient("quotient_by_5", {5});
}

// ---- crystallographic models -----------------------------------------

bool relators_hold(const CrystModel& m) {
  AffineElement id = affine_identity(m.degree);
  for (const Word& r : m.source.relators())
    if (!(eval_affine(r, m) == id)) return false;
  return true;
}

void check_model(Checks& ch, const std::string& label, Family f, int n) {
  const json& block = golden().at("crystal");
  Presentation p = build_presentation(f, n);
  CrystModel m = solve_assignment(p, n);
  add(ch, label + " solution rank", show(block.at("ranks").at(label).get<long long>()),
      show(static_cast<long long>(m.solution_rank)));
  add(ch, label + " translation lattice surjective",
      show(block.at("lattice_surjective").at(label).get<bool>()), show(m.lattice_surjective));
  add(ch, label + " relators hold", "true", show(relators_hold(m)));
  if (block.at("seeds").contains(label))
    add(ch, label + " seed", block.at("seeds").at(label).get<std::string>(), m.seed);
}

void check_crystal_vb3(Checks& ch) {
  const json& block = golden().at("crystal");
  check_model(ch, "VB3", Family::VB, 3);
  Presentation p = build_presentation(Family::VB, 3);
  CrystModel m = solve_assignment(p, 3);
  AffineElement gamma = eval_affine(p.parse_word(block.at("gamma_word").get<std::string>()), m);
  auto order = element_order(gamma, m);
  add(ch, "order of the image of " + block.at("gamma_word").get<std::string>(),
      show(block.at("gamma_order").get<long long>()),
      order ? show(static_cast<long long>(*order)) : "infinite");
  const json& box = block.at("box");
  Order3BoxReport rep = check_order3_box(m, box.at("radius").get<int>(), gamma);
  add(ch, "box census: candidates", show(box.at("candidates").get<long long>()),
      show(rep.candidates));
  add(ch, "box census: order-3 elements", show(box.at("order3").get<long long>()),
      show(rep.order3));
  add(ch, "box census: conjugacy failures", show(box.at("failures").get<long long>()),
      show(rep.failures));
}

void check_crystal_wbuvb3(Checks& ch) {
  check_model(ch, "WB3", Family::WB, 3);
  check_model(ch, "UVB3", Family::UVB, 3);
}

void check_crystal_vb4(Checks& ch) { check_model(ch, "VB4", Family::VB, 4); }

void check_crystal_vb5(Checks& ch) {
  check_model(ch, "VB5", Family::VB, 5);
  const json& range = golden().at("crystal").at("zeta_identity_range");
  Presentation p = build_presentation(Family::VB, 5);
  CrystModel m = solve_assignment(p, 5);
  auto endos = named_endos(Family::VB, 5);
  const NamedEndo& z1 = find_endo(endos, "zeta1");
  const NamedEndo& z2 = find_endo(endos, "zeta2");
  auto gen = [](const char* stem, int k) { return std::string(stem) + std::to_string(k); };
  for (int i = range.at(0).get<int>(); i <= range.at(1).get<int>(); ++i) {
    Word r1 = p.parse_word(gen("v", i) + " " + gen("s", i + 1) + " " + gen("s", i) + " " +
                           gen("v", i + 1) + " " + gen("s", i) + "^-1 " + gen("s", i + 1) +
                           "^-1");
    Word r2 = p.parse_word(gen("v", i + 1) + " " + gen("s", i) + " " + gen("s", i + 1) + " " +
                           gen("v", i) + " " + gen("s", i + 1) + "^-1 " + gen("s", i) + "^-1");
    Word c1 = p.parse_word(gen("v", i + 1) + " " + gen("v", i) + " " + gen("v", i + 1));
    Word c2 = p.parse_word(gen("v", i) + " " + gen("v", i + 1) + " " + gen("v", i));
    Word d1 = p.parse_word(gen("v", i + 1) + " " + gen("s", i) + " " + gen("s", i + 1));
    Word d2 = p.parse_word(gen("v", i) + " " + gen("s", i + 1) + " " + gen("s", i));
    std::string tag = "_" + std::to_string(i) + ") in the degree-5 model";
    add(ch, "zeta1 transport of first forbidden word (i" + tag, "true",
        show(verify_identity(substitute(r1, z1.images), c1 * r2 * c1, m)));
    add(ch, "zeta1 transport of second forbidden word (i" + tag, "true",
        show(verify_identity(substitute(r2, z1.images), c2 * r1 * c2, m)));
    add(ch, "zeta2 transport of first forbidden word (i" + tag, "true",
        show(verify_identity(substitute(r1, z2.images), d1.inverse() * r2 * d1, m)));
    add(ch, "zeta2 transport of second forbidden word (i" + tag, "true",
        show(verify_identity(substitute(r2, z2.images), d2.inverse() * r1 * d2, m)));
  }
}

void check_crystal_vt3(Checks& ch) { check_model(ch, "VT3", Family::VT, 3); }

// ---- twisted conjugacy -----------------------------------------------

void check_twisted_basics(Checks& ch, uint64_t seed) {
  const json& block = golden().at("twisted");
  add(ch, "twisted classes of S3 under the identity",
      show(block.at("s3_identity").get<long long>()),
      show(twisted_classes_finite(symmetric_group_table(3))));
  add(ch, "twisted classes of Z5 under doubling", show(block.at("z5_doubling").get<long long>()),
      show(twisted_classes_finite(cyclic_table(5, 2))));

  IntMatrix swap(2, 2);
  swap.at(0, 1) = 1;
  swap.at(1, 0) = 1;
  add(ch, "twisted classes of (Z2)^2 under the coordinate swap",
      show(block.at("z2sq_swap").get<long long>()),
      show(twisted_classes_finite(abelian_table({2, 2}, swap))));
  auto lattice_swap = reidemeister_lattice(swap);
  add(ch, "lattice count for the coordinate swap", "INFINITE",
      lattice_swap ? lattice_swap->str() : "INFINITE");

  IntMatrix negation(1, 1);
  negation.at(0, 0) = -1;
  auto lattice_neg = reidemeister_lattice(negation);
  add(ch, "lattice count for negation on Z",
      show(block.at("lattice_negation").get<long long>()),
      lattice_neg ? lattice_neg->str() : "INFINITE");

  int cases = block.at("crosscheck_cases").get<int>();
  add(ch, "abelian cross-check failures over " + std::to_string(cases) + " instances", "0",
      show(static_cast<long long>(abelian_cokernel_crosscheck(seed, cases))));
}

void check_towers(Checks& ch) {
  const json& block = golden().at("twisted");
  CrystModel wall = wallpaper_model();
  const Presentation& p = wall.source;
  std::vector<int> ks;
  for (const json& k : block.at("tower_ks")) ks.push_back(k.get<int>());

  for (const json& endo_name : block.at("tower_endos")) {
    std::vector<Word> images;
    if (endo_name.get<std::string>() == "identity") {
      for (int g = 0; g < p.generator_count(); ++g) images.push_back(Word::gen(g, 1));
    } else {
      auto endos = named_endos(Family::WALLPAPER_G, 2);
      images = find_endo(endos, endo_name.get<std::string>()).images;
    }
    TowerReport r = quotient_tower(wall, images, ks);
    json counts = json::array();
    for (auto [k, c] : r.counts) counts.push_back(std::to_string(c));
    std::string label = "wallpaper tower under " + endo_name.get<std::string>();
    add(ch, label + ": class counts", dump_json(golden_ints(block.at("tower_counts"))),
        dump_json(counts));
    add(ch, label + ": strictly increasing", "true", show(r.strictly_increasing));
    add(ch, label + ": verdict", block.at("tower_verdict").get<std::string>(),
        verdict_name(r.verdict));
  }
}

// ---- property suites -------------------------------------------------

void check_properties(Checks& ch, uint64_t seed, int threads) {
  (void)threads;
  int cases = golden().at("properties").at("cases").get<int>();
  for (const PropertyResult& r : run_all_property_suites(seed, cases)) {
    std::string got = r.ok() ? "0 failures"
                             : show(static_cast<long long>(r.failures)) +
                                   " failures; first: " + r.first_failure;
    add(ch, "property suite " + r.suite + " (" + std::to_string(r.cases) + " cases)",
        "0 failures", got);
  }
}

// ---- assembly --------------------------------------------------------

VerifyReport timed(const std::string& scope, const std::function<void(Checks&)>& fill) {
  VerifyReport report;
  report.scope = scope;
  auto start = std::chrono::steady_clock::now();
  fill(report.checks);
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

}  // namespace

int VerifyReport::failures() const {
  int k = 0;
  for (const CheckResult& c : checks)
    if (!c.pass) ++k;
  return k;
}

const std::vector<std::string>& verify_section_names() {
  static const std::vector<std::string> names = {"1", "3", "4.1", "4.2", "4.3", "appendix"};
  return names;
}

VerifyReport verify_section(const std::string& section, int threads, uint64_t seed) {
  return timed("section " + section, [&](Checks& ch) {
    if (section == "1") {
      check_twisted_basics(ch, seed);
    } else if (section == "3") {
      check_hom_counts_main(ch, threads);
      check_kernels_main(ch);
      check_descent(ch);
      check_certificates_main(ch, threads);
      check_witnesses(ch, false);
    } else if (section == "4.1") {
      check_crystal_vb3(ch);
      check_crystal_wbuvb3(ch);
      check_towers(ch);
    } else if (section == "4.2") {
      check_crystal_vb4(ch);
      check_character(ch);
    } else if (section == "4.3") {
      check_crystal_vb5(ch);
    } else if (section == "appendix") {
      check_hom_counts_twin(ch, threads);
      check_kernels_twin(ch);
      check_certificates_twin(ch, threads);
      check_witnesses(ch, true);
      check_crystal_vt3(ch);
    } else {
      throw std::invalid_argument("unknown section " + section + "; expected one of 1, 3, 4.1, 4.2, 4.3, appendix");
    }
  });
}

VerifyReport verify_criterion(int criterion, int threads, uint64_t seed) {
  return timed("criterion " + std::to_string(criterion), [&](Checks& ch) {
    switch (criterion) {
      case 1:
        check_hom_counts_main(ch, threads);
        check_hom_counts_twin(ch, threads);
        break;
      case 2:
        check_kernels_main(ch);
        break;
      case 3:
        check_descent(ch);
        break;
      case 4:
        check_certificates_main(ch, threads);
        check_certificates_twin(ch, threads);
        break;
      case 5:
        check_witnesses(ch, false);
        check_witnesses(ch, true);
        break;
      case 6:
        check_character(ch);
        break;
      case 7:
        check_crystal_vb3(ch);
        check_crystal_vb4(ch);
        check_crystal_vb5(ch);
        break;
      case 8:
        check_twisted_basics(ch, seed);
        check_towers(ch);
        break;
      case 9:
        check_properties(ch, seed, threads);
        break;
      default:
        throw std::invalid_argument("criterion out of range 1.." +
                                    std::to_string(kCriterionCount));
    }
  });
}

long long criterion_budget_ms(int criterion) {
  switch (criterion) {
    case 1: return 60000;
    case 2: return 300000;
    case 6: return 10000;
    case 7: return 60000;
    case 8: return 120000;
    default: return 0;
  }
}

const char* golden_json_text() { return kGoldenJson; }

}  // namespace vbg
