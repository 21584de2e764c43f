#include "vbg/kernelab.hpp"

#include "vbg/catalog.hpp"

#include <map>

namespace vbg {

CosetTable coset_table(const std::vector<Permutation>& images, int n) {
  if (images.empty()) throw std::invalid_argument("coset_table: no generator images");
  CosetTable t;
  std::map<Permutation, int> index;
  Permutation id = Permutation::identity(n);
  index[id] = 0;
  t.elements.push_back(id);
  t.transversal.push_back(Word());
  t.tree.push_back(CosetTable::Edge{});
  int gens = static_cast<int>(images.size());
  // BFS in signed alphabet order (g0, g0^-1, g1, g1^-1, ...) with a
  // FIFO queue: representatives come out shortlex-minimal.
  size_t head = 0;
  while (head < t.elements.size()) {
    int c = static_cast<int>(head++);
    Permutation cur = t.elements[c];
    for (int g = 0; g < gens; ++g) {
      for (int sign : {1, -1}) {
        Permutation next = compose(cur, sign > 0 ? images[g] : inverse(images[g]));
        if (index.emplace(next, static_cast<int>(t.elements.size())).second) {
          t.elements.push_back(next);
          t.transversal.push_back(t.transversal[c] * Word::gen(g, sign));
          t.tree.push_back(CosetTable::Edge{c, g, sign});
        }
      }
    }
  }
  int m = t.size();
  t.step.assign(gens, std::vector<int>(m));
  t.step_inv.assign(gens, std::vector<int>(m));
  for (int c = 0; c < m; ++c)
    for (int g = 0; g < gens; ++g) {
      t.step[g][c] = index.at(compose(t.elements[c], images[g]));
      t.step_inv[g][c] = index.at(compose(t.elements[c], inverse(images[g])));
    }
  return t;
}

KernelAbelianization kernel_abelianization(const Presentation& p,
                                           const std::vector<Permutation>& images, int n) {
  validate_hom(p, images);
  if (p.generator_count() == 0) {
    KernelAbelianization out;
    out.invariants = AbelianInvariants{};
    return out;
  }
  CosetTable t = coset_table(images, n);
  int m = t.size();
  int gens = p.generator_count();

  // Columns: Schreier generators x_{c,g} = t_c g t_{c.g}^-1, minus the
  // m-1 that are freely trivial along the spanning tree: an edge
  // discovered by positive g kills x_{parent,g}; one discovered by g^-1
  // kills x_{child,g}.
  std::vector<std::vector<int>> column(gens, std::vector<int>(m, -1));
  std::vector<bool> tree_kills(static_cast<size_t>(gens) * m, false);
  for (int c = 1; c < m; ++c) {
    const CosetTable::Edge& e = t.tree[c];
    int coset = e.sign > 0 ? e.parent : c;
    tree_kills[static_cast<size_t>(e.gen) * m + coset] = true;
  }
  int cols = 0;
  for (int g = 0; g < gens; ++g)
    for (int c = 0; c < m; ++c)
      if (!tree_kills[static_cast<size_t>(g) * m + c]) column[g][c] = cols++;

  // One abelianized row per (starting coset, relator): scanning the
  // relator from coset c, a positive letter g at state u contributes
  // +x_{u,g}; a negative letter contributes -x_{v,g} with v = u.g^-1.
  IntMatrix rel(m * static_cast<int>(p.relators().size()), cols);
  int row = 0;
  for (const Word& r : p.relators()) {
    for (int c = 0; c < m; ++c, ++row) {
      int state = c;
      for (const Letter& l : r.letters()) {
        if (l.sign > 0) {
          int col = column[l.gen][state];
          if (col >= 0) rel.at(row, col) += 1;
          state = t.step[l.gen][state];
        } else {
          state = t.step_inv[l.gen][state];
          int col = column[l.gen][state];
          if (col >= 0) rel.at(row, col) -= 1;
        }
      }
      if (state != c)
        throw std::logic_error("kernel_abelianization: relator left its coset");
    }
  }

  KernelAbelianization out;
  out.schreier_generators = cols;
  out.matrix_rows = rel.rows();
  out.matrix_cols = cols;
  out.invariants = smith_normal_form(rel).cokernel;
  return out;
}

}  // namespace vbg
