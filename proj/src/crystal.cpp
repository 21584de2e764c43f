#include "vbg/crystal.hpp"

#include "vbg/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace vbg {

namespace {

// "s3" -> ('s', 3); also accepts v and r prefixes.
bool strand_generator(const std::string& name, char& kind, int& index) {
  if (name.size() < 2) return false;
  char c = name[0];
  if (c != 's' && c != 'v' && c != 'r') return false;
  for (size_t i = 1; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
  kind = c;
  index = std::atoi(name.c_str() + 1);
  return index >= 1;
}

std::vector<Int> zero_vector(int m) { return std::vector<Int>(m, Int(0)); }

std::vector<Int> basis_vector(int m, int k, int sign = 1) {
  std::vector<Int> v(m, Int(0));
  v[k] = sign;
  return v;
}

bool is_zero(const std::vector<Int>& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

struct StrandRoles {
  std::vector<int> sigma_gen;    // sigma index k (1-based) -> generator index
  std::vector<int> virtual_gen;  // same for v/r generators
};

// Requires generators s1..s_{n-1} plus v1..v_{n-1} or r1..r_{n-1}.
StrandRoles strand_roles(const Presentation& p, int n) {
  StrandRoles roles;
  roles.sigma_gen.assign(n, -1);
  roles.virtual_gen.assign(n, -1);
  for (int g = 0; g < p.generator_count(); ++g) {
    char kind;
    int k;
    if (!strand_generator(p.generator_name(g), kind, k) || k > n - 1)
      throw std::invalid_argument("solve_assignment: generator '" + p.generator_name(g) +
                                  "' is not a strand generator for degree " + std::to_string(n));
    (kind == 's' ? roles.sigma_gen : roles.virtual_gen)[k] = g;
  }
  for (int k = 1; k < n; ++k)
    if (roles.sigma_gen[k] < 0 || roles.virtual_gen[k] < 0)
      throw std::invalid_argument("solve_assignment: presentation is missing strand generators "
                                  "of index " +
                                  std::to_string(k));
  return roles;
}

// Coefficient matrix of the relator conditions: stacked blocks, one
// m-column block per sigma generator, one m-row band per relator.
IntMatrix relator_system(const Presentation& p, int n, const StrandRoles& roles) {
  int m = n * (n - 1);
  std::vector<int> block_of(p.generator_count(), -1);  // generator -> sigma block
  for (int k = 1; k < n; ++k) block_of[roles.sigma_gen[k]] = k - 1;
  std::vector<int> strand_of(p.generator_count());
  for (int k = 1; k < n; ++k)
    strand_of[roles.sigma_gen[k]] = strand_of[roles.virtual_gen[k]] = k;

  int nrel = static_cast<int>(p.relators().size());
  IntMatrix c(nrel * m, (n - 1) * m);
  for (int r = 0; r < nrel; ++r) {
    Permutation prefix = Permutation::identity(n);
    for (const Letter& l : p.relators()[r].letters()) {
      Permutation tau = transposition(n, strand_of[l.gen]);
      Permutation next = compose(prefix, tau);
      if (block_of[l.gen] >= 0) {
        const Permutation& at = l.sign > 0 ? prefix : next;
        IntMatrix a = pair_action(at);
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < m; ++j)
            if (a.at(i, j) != 0) c.at(r * m + i, block_of[l.gen] * m + j) += Int(l.sign);
      }
      prefix = next;
    }
    if (!(prefix == Permutation::identity(n)))
      throw std::invalid_argument("solve_assignment: relator " + p.word_string(p.relators()[r]) +
                                  " has nontrivial permutation residue");
  }
  return c;
}

std::string seed_label(const std::vector<std::pair<int, int>>& labels, int k) {
  return "e(" + std::to_string(labels[k].first) + "," + std::to_string(labels[k].second) + ")";
}

std::vector<AffineElement> assemble(const Presentation& p, int n, const StrandRoles& roles,
                                    const std::vector<Int>& x1) {
  int m = n * (n - 1);
  std::vector<std::vector<Int>> x(n, zero_vector(m));
  x[1] = x1;
  for (int k = 2; k < n; ++k) {
    Permutation link = compose(transposition(n, k - 1), transposition(n, k));
    x[k] = mat_vec(pair_action(link), x[k - 1]);
  }
  std::vector<AffineElement> assignment(p.generator_count());
  for (int k = 1; k < n; ++k) {
    assignment[roles.sigma_gen[k]] = AffineElement{x[k], transposition(n, k)};
    assignment[roles.virtual_gen[k]] = AffineElement{zero_vector(m), transposition(n, k)};
  }
  return assignment;
}

bool relators_hold(const CrystModel& model) {
  AffineElement id = affine_identity(model.degree);
  for (const Word& r : model.source.relators())
    if (!(eval_affine(r, model) == id)) return false;
  return true;
}

// The lattice generated by the S_n-orbits of the sigma vectors; full
// iff the model maps onto the whole Z^m factor.
bool orbit_lattice_full(const CrystModel& model, const StrandRoles& roles) {
  int m = model.dimension;
  auto perms = all_permutations(model.degree);
  IntMatrix stack(static_cast<int>(perms.size()) * (model.degree - 1), m);
  int row = 0;
  for (const Permutation& w : perms) {
    IntMatrix a = pair_action(w);
    for (int k = 1; k < model.degree; ++k) {
      std::vector<Int> v = mat_vec(a, model.assignment[roles.sigma_gen[k]].vector);
      for (int j = 0; j < m; ++j) stack.at(row, j) = v[j];
      ++row;
    }
  }
  SmithResult s = smith_normal_form(stack);
  return s.cokernel.free_rank == 0 && s.cokernel.torsion.empty();
}

CrystModel model_from_seed(const Presentation& p, int n, const StrandRoles& roles,
                           const std::vector<Int>& x1, const std::string& seed) {
  CrystModel model;
  model.degree = n;
  model.dimension = n * (n - 1);
  model.basis_labels = pair_labels(n);
  model.source = p;
  model.assignment = assemble(p, n, roles, x1);
  model.seed = seed;
  return model;
}

}  // namespace

std::vector<std::pair<int, int>> pair_labels(int n) {
  std::vector<std::pair<int, int>> labels;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) labels.emplace_back(i, j);
  return labels;
}

int pair_index(int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n || i == j)
    throw std::invalid_argument("pair_index: bad pair (" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
  return (i - 1) * (n - 1) + (j - 1) - (j > i ? 1 : 0);
}

IntMatrix pair_action(const Permutation& w) {
  int n = w.degree();
  int m = n * (n - 1);
  IntMatrix a(m, m);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) a.at(pair_index(n, w.apply(i), w.apply(j)), pair_index(n, i, j)) = 1;
  return a;
}

AffineElement affine_identity(int n) {
  return AffineElement{zero_vector(n * (n - 1)), Permutation::identity(n)};
}

AffineElement affine_mul(const AffineElement& a, const AffineElement& b) {
  std::vector<Int> moved = mat_vec(pair_action(a.perm), b.vector);
  for (size_t i = 0; i < moved.size(); ++i) moved[i] += a.vector[i];
  return AffineElement{std::move(moved), compose(a.perm, b.perm)};
}

AffineElement affine_inverse(const AffineElement& a) {
  Permutation w = inverse(a.perm);
  std::vector<Int> v = mat_vec(pair_action(w), a.vector);
  for (Int& entry : v) entry = -entry;
  return AffineElement{std::move(v), w};
}

CrystModel perm_module(int n) {
  if (n < 2 || n > 6) throw std::invalid_argument("perm_module: degree out of range");
  CrystModel m;
  m.degree = n;
  m.dimension = n * (n - 1);
  m.basis_labels = pair_labels(n);
  return m;
}

CrystModel solve_assignment(const Presentation& p, int n) {
  if (n < 2 || n > 6) throw std::invalid_argument("solve_assignment: degree out of range");
  StrandRoles roles = strand_roles(p, n);
  int m = n * (n - 1);
  auto labels = pair_labels(n);

  IntMatrix system = relator_system(p, n, roles);
  int rank = kernel_basis(system).rows();

  std::vector<std::pair<std::string, std::vector<Int>>> seeds;
  for (int k = 0; k < m; ++k) seeds.emplace_back("+" + seed_label(labels, k), basis_vector(m, k));
  for (int k = 0; k < m; ++k)
    seeds.emplace_back("-" + seed_label(labels, k), basis_vector(m, k, -1));
  for (int k = 0; k < m; ++k)
    for (int l = 0; l < m; ++l)
      if (k != l) {
        std::vector<Int> v = basis_vector(m, k);
        v[l] = -1;
        seeds.emplace_back(seed_label(labels, k) + "-" + seed_label(labels, l), std::move(v));
      }

  for (const auto& [label, x1] : seeds) {
    CrystModel model = model_from_seed(p, n, roles, x1, label);
    if (!relators_hold(model)) continue;
    model.underdetermined = rank > 0;
    model.solution_rank = rank;
    model.lattice_surjective = orbit_lattice_full(model, roles);
    return model;
  }
  throw NoSolution("solve_assignment: no seeded sigma assignment satisfies every relator of " +
                   p.name());
}

CrystModel make_model(const Presentation& p, int n, std::vector<AffineElement> assignment) {
  if (static_cast<int>(assignment.size()) != p.generator_count())
    throw std::invalid_argument("make_model: one affine element per generator required");
  CrystModel model;
  model.degree = n;
  model.dimension = n * (n - 1);
  model.basis_labels = pair_labels(n);
  model.source = p;
  model.assignment = std::move(assignment);
  for (const AffineElement& e : model.assignment)
    if (e.perm.degree() != n || static_cast<int>(e.vector.size()) != model.dimension)
      throw std::invalid_argument("make_model: affine element of wrong shape");
  for (const Word& r : p.relators())
    if (!(eval_affine(r, model) == affine_identity(n)))
      throw std::invalid_argument("make_model: relator " + p.word_string(r) +
                                  " does not evaluate to the identity");
  return model;
}

CrystModel wallpaper_model() {
  Presentation p = build_presentation(Family::WALLPAPER_G, 2);
  std::vector<AffineElement> assignment(p.generator_count());
  assignment[p.generator_index("l_1_2")] =
      AffineElement{basis_vector(2, pair_index(2, 1, 2)), Permutation::identity(2)};
  assignment[p.generator_index("l_2_1")] =
      AffineElement{basis_vector(2, pair_index(2, 2, 1)), Permutation::identity(2)};
  assignment[p.generator_index("v1")] = AffineElement{zero_vector(2), transposition(2, 1)};
  return make_model(p, 2, std::move(assignment));
}

CrystModel lattice_extended_vb3_model() {
  Presentation p = build_presentation(Family::VB3_MOD_VP3COMM, 3);
  std::vector<AffineElement> assignment(p.generator_count());
  for (int g = 0; g < p.generator_count(); ++g) {
    const std::string& name = p.generator_name(g);
    if (name[0] == 'v') {
      int k = std::atoi(name.c_str() + 1);
      assignment[g] = AffineElement{zero_vector(6), transposition(3, k)};
    } else {
      // "l_i_j"
      int i = name[2] - '0', j = name[4] - '0';
      assignment[g] = AffineElement{basis_vector(6, pair_index(3, i, j)), Permutation::identity(3)};
    }
  }
  return make_model(p, 3, std::move(assignment));
}

AffineElement eval_affine(const Word& w, const CrystModel& m) {
  AffineElement acc = affine_identity(m.degree);
  for (const Letter& l : w.letters()) {
    if (l.gen < 0 || l.gen >= static_cast<int>(m.assignment.size()))
      throw std::invalid_argument("eval_affine: word uses an unassigned generator");
    const AffineElement& g = m.assignment[l.gen];
    acc = affine_mul(acc, l.sign > 0 ? g : affine_inverse(g));
  }
  return acc;
}

std::optional<int> element_order(const AffineElement& e, const CrystModel& m) {
  int k = e.perm.order();
  IntMatrix a = pair_action(e.perm);
  IntMatrix power = IntMatrix::identity(m.dimension);
  std::vector<Int> twisted_sum = zero_vector(m.dimension);
  for (int j = 0; j < k; ++j) {
    std::vector<Int> term = mat_vec(power, e.vector);
    for (int i = 0; i < m.dimension; ++i) twisted_sum[i] += term[i];
    power = mat_mul(power, a);
  }
  if (is_zero(twisted_sum)) return k;
  return std::nullopt;
}

ConjugacyWitness conjugate_test(const AffineElement& e1, const AffineElement& e2,
                                const CrystModel& m) {
  IntMatrix holonomy = pair_action(e2.perm);
  IntMatrix difference(m.dimension, m.dimension);  // I - action(perm(e2))
  for (int i = 0; i < m.dimension; ++i)
    for (int j = 0; j < m.dimension; ++j)
      difference.at(i, j) = Int(i == j ? 1 : 0) - holonomy.at(i, j);
  IntMatrix columns = difference.transposed();

  for (const Permutation& u : all_permutations(m.degree)) {
    if (!(conjugate(u, e1.perm) == e2.perm)) continue;
    std::vector<Int> moved = mat_vec(pair_action(u), e1.vector);
    std::vector<Int> target(m.dimension);
    for (int i = 0; i < m.dimension; ++i) target[i] = e2.vector[i] - moved[i];
    std::vector<Int> t;
    if (lattice_solve(target, columns, t)) return ConjugacyWitness{true, AffineElement{t, u}};
  }
  return ConjugacyWitness{};
}

bool verify_identity(const Word& w1, const Word& w2, const CrystModel& m) {
  return eval_affine(w1, m) == eval_affine(w2, m);
}

Order3BoxReport check_order3_box(const CrystModel& m, int radius, const AffineElement& target) {
  Order3BoxReport report;
  double box = 1;
  for (int i = 0; i < m.dimension; ++i) box *= 2 * radius + 1;
  if (box > 2e7) throw std::invalid_argument("check_order3_box: box too large to scan");

  for (const Permutation& c : all_permutations(m.degree)) {
    if (c.order() != 3) continue;
    std::vector<Int> x(m.dimension, Int(-radius));
    for (;;) {
      ++report.candidates;
      AffineElement e{x, c};
      if (element_order(e, m) == 3) {
        ++report.order3;
        if (!conjugate_test(e, target, m).conjugate) ++report.failures;
      }
      int pos = 0;
      while (pos < m.dimension && x[pos] == radius) x[pos++] = -radius;
      if (pos == m.dimension) break;
      x[pos] += 1;
    }
  }
  return report;
}

std::vector<CrystModel> sample_solutions(const Presentation& p, int n, int count) {
  std::vector<CrystModel> models = {solve_assignment(p, n)};
  if (count <= 1 || models[0].solution_rank == 0) return models;
  StrandRoles roles = strand_roles(p, n);
  int m = n * (n - 1);
  IntMatrix kernel = kernel_basis(relator_system(p, n, roles));
  int attempts = 4 * count + 2 * kernel.rows();
  for (int t = 0; static_cast<int>(models.size()) < count && t < attempts; ++t) {
    int row = t % kernel.rows();
    Int scale(1 + t / kernel.rows());
    std::vector<Int> x1(m);
    for (int j = 0; j < m; ++j) x1[j] = scale * kernel.at(row, j);
    if (is_zero(x1)) continue;
    CrystModel model =
        model_from_seed(p, n, roles, x1, "kernel[" + std::to_string(row) + "]*" +
                                             scale.str());
    if (!relators_hold(model)) throw std::logic_error("sample_solutions: kernel vector fails");
    bool duplicate = false;
    for (const CrystModel& seen : models)
      if (seen.assignment == model.assignment) duplicate = true;
    if (duplicate) continue;
    model.underdetermined = true;
    model.solution_rank = kernel.rows();
    model.lattice_surjective = orbit_lattice_full(model, roles);
    models.push_back(std::move(model));
  }
  return models;
}

}  // namespace vbg
