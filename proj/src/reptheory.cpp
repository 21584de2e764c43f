#include "vbg/reptheory.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace vbg {

namespace {

Rat rat(long long v) { return Rat(v); }

Int group_order(int n) {
  Int f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// class position of a permutation, keyed by cycle type
int class_of(const std::vector<ConjugacyClass>& classes, const Permutation& g) {
  std::vector<int> type = g.cycle_type();
  for (int c = 0; c < static_cast<int>(classes.size()); ++c)
    if (classes[c].cycle_type == type) return c;
  throw std::logic_error("class_of: unmatched cycle type");
}

void require_s4_module(const CrystModel& m, const char* who) {
  if (m.degree != 4)
    throw std::invalid_argument(std::string(who) + ": needs the degree-4 pair module");
}

}  // namespace

std::vector<ClassFunction> s4_character_table() {
  auto row = [](std::vector<long long> vals) {
    ClassFunction f;
    f.degree = 4;
    for (long long v : vals) f.values.push_back(rat(v));
    return f;
  };
  return {
      row({1, 1, 1, 1, 1}),    // trivial
      row({1, 1, -1, -1, 1}),  // sign
      row({2, 2, 0, 0, -1}),
      row({3, -1, 1, -1, 0}),  // standard
      row({3, -1, -1, 1, 0}),  // standard x sign
  };
}

ClassFunction permutation_character(const CrystModel& m) {
  ClassFunction chi;
  chi.degree = m.degree;
  for (const ConjugacyClass& c : conjugacy_classes(m.degree)) {
    IntMatrix a = m.action(c.representative);
    Int tr = 0;
    for (int i = 0; i < a.rows(); ++i) tr += a.at(i, i);
    chi.values.push_back(Rat(tr));
  }
  return chi;
}

Rat inner_product(const ClassFunction& a, const ClassFunction& b) {
  if (a.degree != b.degree || a.values.size() != b.values.size())
    throw std::invalid_argument("inner_product: degree mismatch");
  auto classes = conjugacy_classes(a.degree);
  Rat total = 0;
  for (size_t c = 0; c < classes.size(); ++c)
    total += Rat(classes[c].size) * a.values[c] * b.values[c];
  return total / Rat(group_order(a.degree));
}

std::vector<Int> decompose(const ClassFunction& a) {
  if (a.degree != 4) throw std::invalid_argument("decompose: only degree 4 has a built-in table");
  auto table = s4_character_table();
  std::vector<Int> mult;
  for (size_t i = 0; i < table.size(); ++i) {
    Rat m = inner_product(a, table[i]);
    if (boost::multiprecision::denominator(m) != 1)
      throw std::invalid_argument("decompose: non-integral multiplicity at chi_" +
                                  std::to_string(i + 1));
    mult.push_back(Int(boost::multiprecision::numerator(m)));
  }
  // five independent irreducibles span the class functions, so the
  // reconstruction is exact once every multiplicity is integral
  for (size_t c = 0; c < a.values.size(); ++c) {
    Rat sum = 0;
    for (size_t i = 0; i < table.size(); ++i) sum += Rat(mult[i]) * table[i].values[c];
    if (sum != a.values[c]) throw std::logic_error("decompose: reconstruction failed");
  }
  return mult;
}

std::vector<std::vector<Rat>> isotypic_projector(const CrystModel& m,
                                                 const std::vector<int>& components) {
  require_s4_module(m, "isotypic_projector");
  std::set<int> comp(components.begin(), components.end());
  if (comp.size() != components.size())
    throw std::invalid_argument("isotypic_projector: duplicate component");
  for (int i : comp)
    if (i < 1 || i > 5) throw std::invalid_argument("isotypic_projector: component out of 1..5");

  auto table = s4_character_table();
  auto classes = conjugacy_classes(4);
  // coefficient of each group element depends only on its class:
  // sum over chosen i of chi_i(1) chi_i(g) / 24
  std::vector<Rat> coef(classes.size(), Rat(0));
  for (size_t c = 0; c < classes.size(); ++c)
    for (int i : comp)
      coef[c] += table[i - 1].values[0] * table[i - 1].values[c] / Rat(24);

  int dim = m.dimension;
  std::vector<std::vector<Rat>> p(dim, std::vector<Rat>(dim, Rat(0)));
  for (const Permutation& g : all_permutations(4)) {
    const Rat& w = coef[class_of(classes, g)];
    if (w == 0) continue;
    IntMatrix a = m.action(g);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        if (a.at(i, j) != 0) p[i][j] += w * Rat(a.at(i, j));
  }
  return p;
}

IntMatrix isotypic_sublattice(const CrystModel& m, const std::vector<int>& components) {
  auto p = isotypic_projector(m, components);
  int dim = m.dimension;
  // rows of the integer matrix span the image: row i is 24 * (column i of p)
  IntMatrix span(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      Rat scaled = Rat(24) * p[j][i];
      if (boost::multiprecision::denominator(scaled) != 1)
        throw std::logic_error("isotypic_sublattice: projector denominator exceeds group order");
      span.at(i, j) = Int(boost::multiprecision::numerator(scaled));
    }
  IntMatrix reduced = hermite_normal_form(span);
  if (reduced.rows() == 0) return IntMatrix(0, dim);
  return saturation(reduced);
}

QuotientAction quotient_action(const CrystModel& m, const IntMatrix& sublattice) {
  int dim = m.dimension;
  if (sublattice.cols() != dim)
    throw std::invalid_argument("quotient_action: sublattice has wrong ambient dimension");
  int r = sublattice.rows();
  if (matrix_rank(sublattice) != r)
    throw std::invalid_argument("quotient_action: sublattice rows are dependent");

  // invariance under the transposition generators implies invariance
  // under the whole symmetric group
  for (int i = 1; i < m.degree; ++i) {
    IntMatrix a = m.action(transposition(m.degree, i));
    for (int row = 0; row < r; ++row) {
      std::vector<Int> v(dim);
      for (int j = 0; j < dim; ++j) v[j] = sublattice.at(row, j);
      if (!lattice_membership(mat_vec(a, v), sublattice))
        throw std::invalid_argument("quotient_action: sublattice is not invariant");
    }
  }

  IntMatrix v_t = IntMatrix::identity(dim);
  IntMatrix v_inv = IntMatrix::identity(dim);
  if (r > 0) {
    SmithTransforms st = smith_with_transforms(sublattice, false, true, true);
    for (const Int& d : st.diagonal)
      if (d != 1)
        throw std::invalid_argument("quotient_action: quotient has torsion; saturate first");
    v_t = st.v;
    v_inv = st.vinv;
  }

  QuotientAction out;
  out.rank = dim - r;
  out.character.degree = m.degree;
  bool faithful = true;
  for (const ConjugacyClass& c : conjugacy_classes(m.degree)) {
    // action on row coordinates y = x V: y -> y V^-1 A^T V; the
    // invariant lattice occupies the first r coordinates, so the
    // quotient lives in the lower-right block (transposed back to
    // column convention)
    IntMatrix k = mat_mul(mat_mul(v_inv, m.action(c.representative).transposed()), v_t);
    for (int i = 0; i < r; ++i)
      for (int j = r; j < dim; ++j)
        if (k.at(i, j) != 0) throw std::logic_error("quotient_action: block structure violated");
    IntMatrix b(out.rank, out.rank);
    for (int i = 0; i < out.rank; ++i)
      for (int j = 0; j < out.rank; ++j) b.at(i, j) = k.at(r + j, r + i);
    Int tr = 0;
    for (int i = 0; i < out.rank; ++i) tr += b.at(i, i);
    if (c.representative.order() > 1 && b == IntMatrix::identity(out.rank)) faithful = false;
    out.class_reps.push_back(c.representative);
    out.matrices.push_back(std::move(b));
    out.character.values.push_back(Rat(tr));
  }
  out.faithful = faithful;
  return out;
}

}  // namespace vbg
