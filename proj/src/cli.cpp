#include "vbg/cli.hpp"

#include "vbg/catalog.hpp"
#include "vbg/crystal.hpp"
#include "vbg/homsearch.hpp"
#include "vbg/intlin.hpp"
#include "vbg/kernelab.hpp"
#include "vbg/perms.hpp"
#include "vbg/reptheory.hpp"
#include "vbg/twisted.hpp"
#include "vbg/verify.hpp"
#include "vbg/words.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <ostream>
#include <sstream>

namespace vbg {

namespace {

using nlohmann::json;

std::string rat_str(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

json perm_json(const Permutation& p) {
  json a = json::array();
  for (int v : p.one_line()) a.push_back(v);
  return a;
}

json affine_json(const AffineElement& e) {
  json v = json::array();
  for (const Int& x : e.vector) v.push_back(x.str());
  return json{{"perm", perm_json(e.perm)}, {"vector", v}};
}

void render_scalar(std::ostream& out, const json& j) {
  if (j.is_string())
    out << j.get<std::string>();
  else
    out << j.dump();
}

bool needs_block(const json& j) {
  if (j.is_object()) return !j.empty();
  if (j.is_array())
    for (const json& e : j)
      if (e.is_structured()) return true;
  return false;
}

void render_text(std::ostream& out, const json& j, int indent) {
  std::string pad(indent, ' ');
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (needs_block(it.value())) {
        out << pad << it.key() << ":\n";
        render_text(out, it.value(), indent + 2);
      } else {
        out << pad << it.key() << ": ";
        render_scalar(out, it.value());
        out << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const json& e : j) {
      if (e.is_structured()) {
        out << pad << "-\n";
        render_text(out, e, indent + 2);
      } else {
        out << pad << "- ";
        render_scalar(out, e);
        out << "\n";
      }
    }
  } else {
    out << pad;
    render_scalar(out, j);
    out << "\n";
  }
}

struct Ctx {
  bool as_json = false;
  bool timing = false;
  int threads = 1;
  uint64_t seed = 12345;
};

void emit(std::ostream& out, const Ctx& ctx, const std::string& command, json inputs,
          json results, const std::string& status, long long ms) {
  json report{{"command", command},
              {"inputs", std::move(inputs)},
              {"results", std::move(results)},
              {"status", status}};
  if (ctx.timing) report["elapsed_ms"] = ms;
  if (ctx.as_json)
    out << report.dump(2) << "\n";
  else
    render_text(out, report, 0);
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::istringstream is(text);
  std::string tok;
  while (std::getline(is, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

IntMatrix parse_matrix(const std::string& text) {
  std::vector<std::vector<long long>> rows;
  std::istringstream lines(text);
  std::string row;
  while (std::getline(lines, row, ';')) {
    rows.emplace_back();
    std::istringstream fields(row);
    std::string field;
    while (std::getline(fields, field, ',')) rows.back().push_back(std::stoll(field));
  }
  if (rows.empty()) throw std::invalid_argument("empty matrix");
  IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size())
      throw std::invalid_argument("ragged matrix rows");
    for (size_t j = 0; j < rows[i].size(); ++j) m.at(static_cast<int>(i), static_cast<int>(j)) = Int(rows[i][j]);
  }
  return m;
}

// ---- subcommand bodies -----------------------------------------------

json catalog_results(Family f, int n, bool with_homs, bool with_endos) {
  Presentation p = build_presentation(f, n);
  json gens = json::array();
  for (int g = 0; g < p.generator_count(); ++g)
    gens.push_back(json{{"name", p.generator_name(g)}, {"involution", p.is_involution(g)}});
  json rels = json::array();
  for (const Word& r : p.relators()) rels.push_back(p.word_string(r));
  json results{{"presentation",
                json{{"name", p.name()},
                     {"generators", gens},
                     {"relator_count", static_cast<int>(p.relators().size())},
                     {"relators", rels}}}};
  if (with_homs) {
    json homs = json::array();
    for (const NamedHom& h : named_homs(f, n)) {
      json images = json::array();
      for (const Permutation& x : h.images) images.push_back(perm_json(x));
      homs.push_back(json{
          {"name", h.name}, {"alias", h.alias}, {"degree", h.degree}, {"images", images}});
    }
    results["homs"] = homs;
  }
  if (with_endos) {
    json endos = json::array();
    for (const NamedEndo& e : named_endos(f, n)) {
      json images = json::array();
      for (const Word& w : e.images) images.push_back(p.word_string(w));
      endos.push_back(json{{"name", e.name}, {"images", images}});
    }
    results["endos"] = endos;
  }
  return results;
}

json homs_results(Family f, int n, int target, const std::string& filter, bool with_classes,
                  int threads) {
  Presentation p = build_presentation(f, n);
  auto homs = enumerate_homs(p, target, threads);
  auto classes = classify(homs, target, target == n ? named_homs(f, n) : std::vector<NamedHom>{});
  auto matches = [&](const HomClass& c) {
    if (filter == "nonabelian") return !c.abelian_image;
    if (filter == "abelian") return c.abelian_image;
    if (filter == "surjective") return c.surjective;
    return true;
  };
  int matching = 0;
  for (const HomClass& c : classes)
    if (matches(c)) ++matching;
  json results{{"homomorphisms", static_cast<long long>(homs.size())},
               {"classes", static_cast<long long>(classes.size())},
               {"matching_classes", matching}};
  if (with_classes) {
    json detail = json::array();
    for (const HomClass& c : classes) {
      if (!matches(c)) continue;
      json rep = json::array();
      for (const Permutation& x : c.representative) rep.push_back(perm_json(x));
      detail.push_back(json{{"name", c.matched_name},
                            {"representative", rep},
                            {"orbit_size", c.orbit_size},
                            {"surjective", c.surjective},
                            {"abelian_image", c.abelian_image}});
    }
    results["matching"] = detail;
  }
  return results;
}

json kernel_ab_results(Family f, int n, const std::string& hom) {
  Presentation p = build_presentation(f, n);
  auto homs = named_homs(f, n);
  const NamedHom& h = find_hom(homs, hom);
  KernelAbelianization ka = kernel_abelianization(p, h.images, n);
  json torsion = json::array();
  for (const Int& t : ka.invariants.torsion) torsion.push_back(t.str());
  return json{{"hom", h.name},
              {"alias", h.alias},
              {"gap", ka.invariants.gap_format()},
              {"chain", ka.invariants.chain_format()},
              {"free_rank", ka.invariants.free_rank},
              {"torsion", torsion},
              {"schreier_generators", ka.schreier_generators},
              {"relation_matrix", json{{"rows", ka.matrix_rows}, {"cols", ka.matrix_cols}}}};
}

json descend_results(int n, const std::string& to) {
  Presentation vb = build_presentation(Family::VB, n);
  json results;
  for (const char* quotient : {"WB", "UVB"}) {
    if (!to.empty() && to != quotient) continue;
    Presentation q = build_presentation(parse_family(quotient), n);
    std::vector<Word> extra(q.relators().begin() + vb.relators().size(), q.relators().end());
    json names = json::array();
    for (const NamedHom& h : named_homs(Family::VB, n))
      if (descends(h.images, extra)) names.push_back(h.name);
    results[quotient] = names;
  }
  return results;
}

json characteristic_results(Family f, int n, const std::string& target, bool fold_abelian,
                            int threads) {
  Presentation p = build_presentation(f, n);
  auto all = classify(enumerate_homs(p, n, threads), n, named_homs(f, n));
  std::vector<HomClass> classes;
  std::vector<AbelianInvariants> invs;
  for (const HomClass& c : all) {
    if (!fold_abelian && c.abelian_image) continue;
    classes.push_back(c);
    invs.push_back(kernel_abelianization(p, c.representative, n).invariants);
  }
  int target_index = -1;
  for (size_t i = 0; i < classes.size(); ++i)
    if (classes[i].matched_name == target) target_index = static_cast<int>(i);
  if (target_index < 0)
    throw std::invalid_argument("no class named " + target +
                                (fold_abelian ? "" : " among the non-abelian classes"));
  CertificateResult r = characteristic_certificate(classes, target_index, invs, n);
  json offenders = json::array();
  for (int o : r.offenders)
    offenders.push_back(classes[o].matched_name.empty() ? "(unnamed class " + std::to_string(o) + ")"
                                                        : classes[o].matched_name);
  return json{{"target", target},
              {"verdict", r.certified ? "CERTIFIED" : "NOT_CERTIFIED"},
              {"offenders", offenders},
              {"detail", r.detail}};
}

json character_results(const std::string& mode, int n) {
  if (mode == "table") {
    json rows = json::array();
    auto table = s4_character_table();
    for (size_t i = 0; i < table.size(); ++i) {
      json values = json::array();
      for (const Rat& v : table[i].values) values.push_back(rat_str(v));
      rows.push_back(json{{"name", "chi_" + std::to_string(i + 1)}, {"values", values}});
    }
    json classes = json::array();
    for (const ConjugacyClass& c : conjugacy_classes(4)) {
      json type = json::array();
      for (int t : c.cycle_type) type.push_back(t);
      classes.push_back(json{{"representative", perm_json(c.representative)},
                             {"size", c.size},
                             {"cycle_type", type}});
    }
    return json{{"classes", classes}, {"rows", rows}};
  }
  if (mode == "perm-char") {
    json values = json::array();
    for (const Rat& v : permutation_character(perm_module(n)).values)
      values.push_back(rat_str(v));
    return json{{"degree", n}, {"values", values}};
  }
  // decompose
  if (n != 4)
    throw std::invalid_argument("decompose works against the degree-4 character table; use --n 4");
  ClassFunction chi = permutation_character(perm_module(4));
  json mult = json::array();
  for (const Int& m : decompose(chi)) mult.push_back(m.str());
  json inner;
  auto table = s4_character_table();
  for (size_t i = 0; i < table.size(); ++i)
    inner["chi_" + std::to_string(i + 1)] = rat_str(inner_product(chi, table[i]));
  return json{{"inner_products", inner}, {"multiplicities", mult}};
}

json isotypic_results(const std::vector<int>& components, bool quotient) {
  CrystModel m4 = perm_module(4);
  IntMatrix lattice = isotypic_sublattice(m4, components);
  json comps = json::array();
  for (int c : components) comps.push_back(c);
  json results{{"components", comps}, {"rank", lattice.rows()}};
  if (quotient) {
    QuotientAction action = quotient_action(m4, lattice);
    json character = json::array();
    for (const Rat& v : action.character.values) character.push_back(rat_str(v));
    json matrices = json::array();
    for (size_t i = 0; i < action.matrices.size(); ++i) {
      json rows = json::array();
      for (int r = 0; r < action.matrices[i].rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < action.matrices[i].cols(); ++c)
          row.push_back(action.matrices[i].at(r, c).str());
        rows.push_back(row);
      }
      matrices.push_back(
          json{{"class_representative", perm_json(action.class_reps[i])}, {"matrix", rows}});
    }
    results["quotient"] = json{{"rank", action.rank},
                               {"faithful", action.faithful},
                               {"character", character},
                               {"matrices", matrices}};
  }
  return results;
}

json crystal_results(Family f, int n, const std::string& check, const std::string& word,
                     const std::string& left, const std::string& right) {
  Presentation p = build_presentation(f, n);
  CrystModel m = solve_assignment(p, n);
  json results{{"dimension", m.dimension},
               {"solution_rank", m.solution_rank},
               {"underdetermined", m.underdetermined},
               {"lattice_surjective", m.lattice_surjective},
               {"seed", m.seed}};
  if (check == "relcheck") {
    AffineElement id = affine_identity(m.degree);
    int violated = 0;
    for (const Word& r : p.relators())
      if (!(eval_affine(r, m) == id)) ++violated;
    results["relators"] = static_cast<int>(p.relators().size());
    results["violated"] = violated;
    results["all_hold"] = violated == 0;
  } else if (check == "order") {
    if (word.empty()) throw std::invalid_argument("--check order needs --word");
    auto order = element_order(eval_affine(p.parse_word(word), m), m);
    results["word"] = word;
    results["order"] = order ? json(*order) : json("infinite");
  } else if (check == "conj") {
    if (left.empty() || right.empty())
      throw std::invalid_argument("--check conj needs --left and --right");
    ConjugacyWitness w =
        conjugate_test(eval_affine(p.parse_word(left), m), eval_affine(p.parse_word(right), m), m);
    results["left"] = left;
    results["right"] = right;
    results["conjugate"] = w.conjugate;
    if (w.conjugate) results["by"] = affine_json(w.by);
  } else {  // identity
    if (left.empty() || right.empty())
      throw std::invalid_argument("--check identity needs --left and --right");
    results["left"] = left;
    results["right"] = right;
    results["equal"] = verify_identity(p.parse_word(left), p.parse_word(right), m);
  }
  return results;
}

json reidemeister_results(const std::string& mode, int sym, int cyclic, long long multiplier,
                          const std::string& matrix, const std::string& endo,
                          const std::string& ks_text) {
  if (mode == "finite") {
    FiniteGroupTable t;
    if (sym > 0)
      t = symmetric_group_table(sym);
    else if (cyclic > 0)
      t = cyclic_table(cyclic, multiplier);
    else
      throw std::invalid_argument("--mode finite needs --sym N or --cyclic N");
    return json{{"elements", static_cast<long long>(t.elements.size())},
                {"classes", twisted_classes_finite(t)}};
  }
  if (mode == "lattice") {
    if (matrix.empty()) throw std::invalid_argument("--mode lattice needs --matrix");
    IntMatrix a = parse_matrix(matrix);
    auto count = reidemeister_lattice(a);
    return json{{"dimension", a.rows()},
                {"classes", count ? json(count->str()) : json("INFINITE")}};
  }
  // tower
  CrystModel wall = wallpaper_model();
  const Presentation& p = wall.source;
  std::vector<Word> images;
  if (endo == "identity") {
    for (int g = 0; g < p.generator_count(); ++g) images.push_back(Word::gen(g, 1));
  } else {
    auto endos = named_endos(Family::WALLPAPER_G, 2);
    images = find_endo(endos, endo).images;
  }
  TowerReport r = quotient_tower(wall, images, parse_int_list(ks_text));
  json rows = json::array();
  for (auto [k, classes] : r.counts) rows.push_back(json{{"k", k}, {"classes", classes}});
  return json{{"endo", endo},
              {"rows", rows},
              {"monotone", r.non_decreasing},
              {"strictly_increasing", r.strictly_increasing},
              {"verdict", verdict_name(r.verdict)}};
}

json verify_report_json(const VerifyReport& r, bool timing) {
  json failed = json::array();
  for (const CheckResult& c : r.checks)
    if (!c.pass)
      failed.push_back(json{{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}});
  json out{{"scope", r.scope},
           {"checks", static_cast<long long>(r.checks.size())},
           {"failures", r.failures()},
           {"failed", failed}};
  if (timing) out["elapsed_ms"] = r.elapsed_ms;
  return out;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Ctx ctx;
  CLI::App app{"exact computations for virtual braid groups and their quotients", "vbgtool"};
  app.require_subcommand(1);
  app.add_flag("--json", ctx.as_json, "emit the report as JSON (sorted keys)");
  app.add_flag("--timing", ctx.timing, "include elapsed_ms in the report");
  app.add_option("--threads", ctx.threads, "worker threads for enumeration")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", ctx.seed, "seed for the randomized property suites");

  std::string family = "VB";
  int n = 3, target_degree = 0;
  std::string filter = "all", hom, target, to, mode = "table", check = "relcheck";
  std::string word, left, right, matrix, endo = "identity", ks = "2,3,4,5";
  std::string components, section;
  int criterion = 0, char_n = 4, sym = 0, cyclic = 0;
  long long multiplier = 1;
  bool with_homs = false, with_endos = false, with_classes = false;
  bool fold_abelian = false, quotient = false;

  CLI::App* c_catalog = app.add_subcommand("catalog", "show a presentation and its named maps");
  c_catalog->add_option("--family", family, "family name")->required();
  c_catalog->add_option("--n", n, "strand count (ignored by the fixed models)");
  c_catalog->add_flag("--homs", with_homs, "include the named homomorphisms");
  c_catalog->add_flag("--endos", with_endos, "include the named endomorphisms");

  CLI::App* c_homs = app.add_subcommand("homs", "enumerate homomorphisms to a symmetric group");
  c_homs->add_option("--family", family)->required();
  c_homs->add_option("--n", n)->required();
  c_homs->add_option("--target", target_degree, "degree of the target symmetric group (default n)");
  c_homs->add_option("--filter", filter)
      ->check(CLI::IsMember({"all", "nonabelian", "abelian", "surjective"}));
  c_homs->add_flag("--classes", with_classes, "list the matching classes");

  CLI::App* c_kernel = app.add_subcommand("kernel-ab", "abelianize the kernel of a named map");
  c_kernel->add_option("--family", family)->required();
  c_kernel->add_option("--n", n)->required();
  c_kernel->add_option("--hom", hom, "named homomorphism (name or alias)")->required();

  CLI::App* c_descend = app.add_subcommand("descend", "named maps surviving the quotient relators");
  c_descend->add_option("--n", n)->required();
  c_descend->add_option("--to", to)->check(CLI::IsMember({"WB", "UVB"}));

  CLI::App* c_char_sub = app.add_subcommand("characteristic", "kernel-comparison certificate");
  c_char_sub->add_option("--family", family)->required();
  c_char_sub->add_option("--n", n)->required();
  c_char_sub->add_option("--target", target, "named class to certify")->required();
  c_char_sub->add_flag("--fold-abelian", fold_abelian, "include abelian-image classes");

  CLI::App* c_character = app.add_subcommand("character", "symmetric-group character computations");
  c_character->add_option("--mode", mode)->check(CLI::IsMember({"table", "perm-char", "decompose"}));
  c_character->add_option("--n", char_n, "degree for perm-char/decompose");

  CLI::App* c_isotypic = app.add_subcommand("isotypic", "isotypic sublattices of the pair module");
  c_isotypic->add_option("--components", components, "comma list of irreducibles, e.g. 1,3,4")
      ->required();
  c_isotypic->add_flag("--quotient", quotient, "include the induced quotient action");

  CLI::App* c_crystal = app.add_subcommand("crystal", "crystallographic quotient models");
  c_crystal->add_option("--family", family)->required();
  c_crystal->add_option("--n", n)->required();
  c_crystal->add_option("--check", check)
      ->check(CLI::IsMember({"relcheck", "order", "conj", "identity"}));
  c_crystal->add_option("--word", word, "word for --check order");
  c_crystal->add_option("--left", left, "left word for conj/identity");
  c_crystal->add_option("--right", right, "right word for conj/identity");

  CLI::App* c_reid = app.add_subcommand("reidemeister", "twisted conjugacy class counts");
  c_reid->add_option("--mode", mode)->check(CLI::IsMember({"finite", "lattice", "tower"}))
      ->required();
  c_reid->add_option("--sym", sym, "symmetric group degree (identity endomorphism)");
  c_reid->add_option("--cyclic", cyclic, "cyclic group order");
  c_reid->add_option("--multiplier", multiplier, "endomorphism multiplier for --cyclic");
  c_reid->add_option("--matrix", matrix, "integer matrix, rows ; separated, entries , separated");
  c_reid->add_option("--endo", endo, "wallpaper endomorphism for --mode tower")
      ->check(CLI::IsMember({"identity", "swap"}));
  c_reid->add_option("--ks", ks, "comma list of moduli for --mode tower");

  CLI::App* c_verify = app.add_subcommand("verify-paper", "run the golden verification suite");
  CLI::Option* opt_section =
      c_verify->add_option("--section", section, "report section: 1, 3, 4.1, 4.2, 4.3, appendix")
          ->check(CLI::IsMember(verify_section_names()));
  c_verify->add_option("--criterion", criterion, "acceptance criterion 1..9")
      ->check(CLI::Range(1, kCriterionCount))
      ->excludes(opt_section);

  // global flags remain valid after the subcommand name
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  std::vector<const char*> argv;
  argv.push_back("vbgtool");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    auto begin = std::chrono::steady_clock::now();
    auto ms = [&begin] {
      return std::chrono::duration_cast<std::chrono::milliseconds>(
                 std::chrono::steady_clock::now() - begin)
          .count();
    };

    if (c_catalog->parsed()) {
      json results = catalog_results(parse_family(family), n, with_homs, with_endos);
      emit(out, ctx, "catalog", json{{"family", family}, {"n", n}}, std::move(results), "n/a",
           ms());
    } else if (c_homs->parsed()) {
      if (target_degree == 0) target_degree = n;
      json results =
          homs_results(parse_family(family), n, target_degree, filter, with_classes, ctx.threads);
      emit(out, ctx, "homs",
           json{{"family", family}, {"n", n}, {"target", target_degree}, {"filter", filter}},
           std::move(results), "n/a", ms());
    } else if (c_kernel->parsed()) {
      json results = kernel_ab_results(parse_family(family), n, hom);
      emit(out, ctx, "kernel-ab", json{{"family", family}, {"n", n}, {"hom", hom}},
           std::move(results), "n/a", ms());
    } else if (c_descend->parsed()) {
      json results = descend_results(n, to);
      emit(out, ctx, "descend", json{{"n", n}, {"to", to.empty() ? "both" : to}},
           std::move(results), "n/a", ms());
    } else if (c_char_sub->parsed()) {
      json results =
          characteristic_results(parse_family(family), n, target, fold_abelian, ctx.threads);
      emit(out, ctx, "characteristic",
           json{{"family", family}, {"n", n}, {"target", target}, {"fold_abelian", fold_abelian}},
           std::move(results), "n/a", ms());
    } else if (c_character->parsed()) {
      json results = character_results(mode, char_n);
      emit(out, ctx, "character", json{{"mode", mode}, {"n", char_n}}, std::move(results), "n/a",
           ms());
    } else if (c_isotypic->parsed()) {
      json results = isotypic_results(parse_int_list(components), quotient);
      emit(out, ctx, "isotypic", json{{"components", components}, {"quotient", quotient}},
           std::move(results), "n/a", ms());
    } else if (c_crystal->parsed()) {
      json results = crystal_results(parse_family(family), n, check, word, left, right);
      emit(out, ctx, "crystal", json{{"family", family}, {"n", n}, {"check", check}},
           std::move(results), "n/a", ms());
    } else if (c_reid->parsed()) {
      json results = reidemeister_results(mode, sym, cyclic, multiplier, matrix, endo, ks);
      emit(out, ctx, "reidemeister", json{{"mode", mode}}, std::move(results), "n/a", ms());
    } else if (c_verify->parsed()) {
      std::vector<VerifyReport> reports;
      if (!section.empty()) {
        reports.push_back(verify_section(section, ctx.threads, ctx.seed));
      } else if (criterion != 0) {
        reports.push_back(verify_criterion(criterion, ctx.threads, ctx.seed));
      } else {
        for (int k = 1; k <= kCriterionCount; ++k)
          reports.push_back(verify_criterion(k, ctx.threads, ctx.seed));
      }
      int failures = 0;
      long long checks = 0;
      json rows = json::array();
      for (const VerifyReport& r : reports) {
        failures += r.failures();
        checks += static_cast<long long>(r.checks.size());
        rows.push_back(verify_report_json(r, ctx.timing));
      }
      json inputs{{"section", section.empty() ? "all" : section}};
      if (criterion != 0) inputs = json{{"criterion", criterion}};
      emit(out, ctx, "verify-paper", std::move(inputs),
           json{{"checks", checks}, {"failures", failures}, {"reports", rows}},
           failures == 0 ? "pass" : "fail", ms());
      return failures == 0 ? 0 : 1;
    }
    return 0;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const NoSolution& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace vbg
