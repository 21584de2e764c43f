#include "vbg/twisted.hpp"

#include "vbg/perms.hpp"

#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace vbg {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

void check_table(const FiniteGroupTable& t) {
  int n = static_cast<int>(t.elements.size());
  if (n == 0) throw std::invalid_argument("twisted_classes_finite: empty table");
  if (n >= kTableCap)
    throw std::invalid_argument("twisted_classes_finite: table exceeds the element cap");
  if (static_cast<int>(t.mul.size()) != n || static_cast<int>(t.inverse.size()) != n ||
      static_cast<int>(t.endo.size()) != n)
    throw std::invalid_argument("twisted_classes_finite: ragged table");
  for (const auto& row : t.mul) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("twisted_classes_finite: ragged table");
    for (int v : row)
      if (v < 0 || v >= n) throw std::invalid_argument("twisted_classes_finite: index out of range");
  }
  for (int x = 0; x < n; ++x) {
    if (t.mul[0][x] != x || t.mul[x][0] != x)
      throw std::invalid_argument("twisted_classes_finite: index 0 is not the identity");
    if (t.inverse[x] < 0 || t.inverse[x] >= n || t.mul[x][t.inverse[x]] != 0)
      throw std::invalid_argument("twisted_classes_finite: bad inverse");
  }
  // associativity on a deterministic sample of triples
  uint64_t state = 0x9e3779b97f4a7c15ull ^ static_cast<uint64_t>(n);
  auto next = [&state, n]() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<int>((state >> 17) % static_cast<uint64_t>(n));
  };
  long long total = static_cast<long long>(n) * n * n;
  int samples = total <= 4096 ? 0 : 4096;
  if (samples == 0) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (t.mul[t.mul[a][b]][c] != t.mul[a][t.mul[b][c]])
            throw std::invalid_argument("twisted_classes_finite: table is not associative");
  } else {
    for (int s = 0; s < samples; ++s) {
      int a = next(), b = next(), c = next();
      if (t.mul[t.mul[a][b]][c] != t.mul[a][t.mul[b][c]])
        throw std::invalid_argument("twisted_classes_finite: table is not associative");
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (t.endo[t.mul[x][y]] != t.mul[t.endo[x]][t.endo[y]])
        throw std::invalid_argument("twisted_classes_finite: endo is not a homomorphism");
}

long long positive_mod(long long v, long long m) { return ((v % m) + m) % m; }

Int positive_mod(const Int& v, const Int& m) {
  Int r = v % m;
  if (r < 0) r += m;
  return r;
}

struct Rng {
  std::mt19937_64 engine;
  explicit Rng(uint64_t seed) : engine(seed) {}
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(engine() % static_cast<uint64_t>(hi - lo + 1));
  }
  int index(int count) { return static_cast<int>(engine() % static_cast<uint64_t>(count)); }
};

std::vector<Int> reduce_mod(std::vector<Int> v, int k) {
  for (Int& e : v) e = positive_mod(e, Int(k));
  return v;
}

std::string affine_name(const AffineElement& e) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < e.vector.size(); ++i) {
    if (i) os << ",";
    os << e.vector[i];
  }
  os << "|";
  auto ol = e.perm.one_line();
  for (size_t i = 0; i < ol.size(); ++i) {
    if (i) os << " ";
    os << ol[i];
  }
  os << ")";
  return os.str();
}

}  // namespace

long long twisted_classes_finite(const FiniteGroupTable& t) {
  check_table(t);
  int n = static_cast<int>(t.elements.size());
  Dsu dsu(n);
  for (int z = 0; z < n; ++z) {
    int zinv_image = t.inverse[t.endo[z]];
    for (int x = 0; x < n; ++x) dsu.unite(x, t.mul[t.mul[z][x]][zinv_image]);
  }
  long long classes = 0;
  for (int x = 0; x < n; ++x)
    if (dsu.find(x) == x) ++classes;
  return classes;
}

FiniteGroupTable symmetric_group_table(int n) {
  std::vector<Permutation> elems = all_permutations(n);
  if (static_cast<int>(elems.size()) >= kTableCap)
    throw std::invalid_argument("symmetric_group_table: degree exceeds the element cap");
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < elems.size(); ++i) index[elems[i].one_line()] = static_cast<int>(i);

  FiniteGroupTable t;
  int count = static_cast<int>(elems.size());
  t.mul.assign(count, std::vector<int>(count));
  for (int i = 0; i < count; ++i) {
    std::ostringstream os;
    auto ol = elems[i].one_line();
    for (size_t k = 0; k < ol.size(); ++k) os << (k ? " " : "") << ol[k];
    t.elements.push_back(os.str());
    t.inverse.push_back(index.at(inverse(elems[i]).one_line()));
    t.endo.push_back(i);
    for (int j = 0; j < count; ++j)
      t.mul[i][j] = index.at(compose(elems[i], elems[j]).one_line());
  }
  return t;
}

FiniteGroupTable cyclic_table(int n, long long multiplier) {
  if (n < 1) throw std::invalid_argument("cyclic_table: order must be positive");
  if (n >= kTableCap) throw std::invalid_argument("cyclic_table: order exceeds the element cap");
  FiniteGroupTable t;
  t.mul.assign(n, std::vector<int>(n));
  long long m = positive_mod(multiplier, n);
  for (int i = 0; i < n; ++i) {
    t.elements.push_back(std::to_string(i));
    t.inverse.push_back(static_cast<int>(positive_mod(-i, n)));
    t.endo.push_back(static_cast<int>(positive_mod(m * i, n)));
    for (int j = 0; j < n; ++j) t.mul[i][j] = static_cast<int>(positive_mod(i + j, n));
  }
  return t;
}

FiniteGroupTable abelian_table(const std::vector<int>& moduli, const IntMatrix& endo_matrix) {
  int r = static_cast<int>(moduli.size());
  if (r == 0) throw std::invalid_argument("abelian_table: no moduli");
  long long total = 1;
  for (int m : moduli) {
    if (m < 1) throw std::invalid_argument("abelian_table: moduli must be positive");
    total *= m;
    if (total >= kTableCap) throw std::invalid_argument("abelian_table: exceeds the element cap");
  }
  if (endo_matrix.rows() != r || endo_matrix.cols() != r)
    throw std::invalid_argument("abelian_table: endo matrix shape mismatch");
  // x -> Ax must send the relation m_j e_j to zero mod the moduli
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (positive_mod(Int(moduli[j]) * endo_matrix.at(i, j), Int(moduli[i])) != 0)
        throw std::invalid_argument("abelian_table: endo is not well-defined for these moduli");

  int count = static_cast<int>(total);
  std::vector<long long> stride(r, 1);
  for (int i = r - 2; i >= 0; --i) stride[i] = stride[i + 1] * moduli[i + 1];
  auto digits = [&](int idx) {
    std::vector<long long> x(r);
    for (int i = 0; i < r; ++i) x[i] = (idx / stride[i]) % moduli[i];
    return x;
  };
  auto encode = [&](const std::vector<long long>& x) {
    long long idx = 0;
    for (int i = 0; i < r; ++i) idx += positive_mod(x[i], moduli[i]) * stride[i];
    return static_cast<int>(idx);
  };

  FiniteGroupTable t;
  t.mul.assign(count, std::vector<int>(count));
  for (int i = 0; i < count; ++i) {
    std::vector<long long> x = digits(i);
    std::ostringstream os;
    os << "(";
    for (int c = 0; c < r; ++c) os << (c ? "," : "") << x[c];
    os << ")";
    t.elements.push_back(os.str());
    std::vector<long long> neg(r), img(r, 0);
    for (int c = 0; c < r; ++c) neg[c] = -x[c];
    t.inverse.push_back(encode(neg));
    for (int c = 0; c < r; ++c) {
      Int acc = 0;
      for (int d = 0; d < r; ++d) acc += endo_matrix.at(c, d) * Int(x[d]);
      img[c] = static_cast<long long>(positive_mod(acc, Int(moduli[c])));
    }
    t.endo.push_back(encode(img));
    for (int j = 0; j < count; ++j) {
      std::vector<long long> y = digits(j), sum(r);
      for (int c = 0; c < r; ++c) sum[c] = x[c] + y[c];
      t.mul[i][j] = encode(sum);
    }
  }
  return t;
}

std::optional<Int> reidemeister_lattice(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("reidemeister_lattice: matrix not square");
  IntMatrix diff = IntMatrix::identity(a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) diff.at(i, j) -= a.at(i, j);
  Int det = determinant(diff);
  if (det == 0) return std::nullopt;
  return det < 0 ? -det : det;
}

int abelian_cokernel_crosscheck(uint64_t seed, int cases) {
  Rng rng(seed);
  int failures = 0;
  for (int c = 0; c < cases; ++c) {
    int r = 1 + rng.index(3);
    int max_mod = r == 1 ? 12 : (r == 2 ? 8 : 6);
    int m = 2 + rng.index(max_mod - 1);
    std::vector<int> moduli(r, m);
    IntMatrix endo(r, r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) endo.at(i, j) = Int(rng.range(-3, 3));

    long long brute = twisted_classes_finite(abelian_table(moduli, endo));

    // |Z^r / ((I - endo) Z^r + the relation lattice)| from the SNF
    IntMatrix stacked(2 * r, r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        stacked.at(i, j) = (i == j ? Int(1) : Int(0)) - endo.at(j, i);
    for (int i = 0; i < r; ++i) stacked.at(r + i, i) = m;
    SmithResult snf = smith_normal_form(stacked);
    Int order = 1;
    for (const Int& d : snf.cokernel.torsion) order *= d;
    if (snf.cokernel.free_rank != 0 || Int(brute) != order) ++failures;
  }
  return failures;
}

std::string verdict_name(TowerVerdict v) {
  switch (v) {
    case TowerVerdict::EVIDENCE_CONSISTENT: return "EVIDENCE_CONSISTENT";
    case TowerVerdict::INCONSISTENT: return "INCONSISTENT";
    case TowerVerdict::INCONCLUSIVE: return "INCONCLUSIVE";
  }
  throw std::logic_error("verdict_name: bad enum");
}

FiniteGroupTable quotient_table(const CrystModel& m, const std::vector<Word>& endo_images, int k) {
  if (k < 1) throw std::invalid_argument("quotient_table: modulus must be positive");
  if (endo_images.size() != m.assignment.size())
    throw std::invalid_argument("quotient_table: one image word per generator required");

  auto reduce = [&](AffineElement e) {
    e.vector = reduce_mod(std::move(e.vector), k);
    return e;
  };
  auto key = [](const AffineElement& e) {
    std::pair<std::vector<Int>, std::vector<int>> out{e.vector, e.perm.one_line()};
    return out;
  };

  std::vector<AffineElement> elems = {affine_identity(m.degree)};
  std::map<std::pair<std::vector<Int>, std::vector<int>>, int> index = {{key(elems[0]), 0}};
  std::vector<std::pair<int, int>> built_from = {{-1, -1}};  // (parent, generator)
  std::vector<AffineElement> gens;
  for (const AffineElement& g : m.assignment) gens.push_back(reduce(g));

  for (size_t head = 0; head < elems.size(); ++head) {
    AffineElement current = elems[head];  // copy: elems may reallocate
    for (size_t g = 0; g < gens.size(); ++g) {
      AffineElement next = reduce(affine_mul(current, gens[g]));
      if (index.emplace(key(next), static_cast<int>(elems.size())).second) {
        elems.push_back(next);
        built_from.emplace_back(static_cast<int>(head), static_cast<int>(g));
        if (static_cast<int>(elems.size()) >= kTableCap)
          throw std::invalid_argument("quotient_table: element cap exceeded at k=" +
                                      std::to_string(k));
      }
    }
  }

  int count = static_cast<int>(elems.size());
  FiniteGroupTable t;
  t.mul.assign(count, std::vector<int>(count));
  for (int i = 0; i < count; ++i) {
    t.elements.push_back(affine_name(elems[i]));
    t.inverse.push_back(index.at(key(reduce(affine_inverse(elems[i])))));
    for (int j = 0; j < count; ++j)
      t.mul[i][j] = index.at(key(reduce(affine_mul(elems[i], elems[j]))));
  }

  // generator images of the induced endomorphism, then extension along
  // the build tree
  std::vector<int> phi;
  for (const Word& w : endo_images) {
    auto it = index.find(key(reduce(eval_affine(w, m))));
    if (it == index.end())
      throw std::invalid_argument(
          "quotient_table: endomorphism image leaves the generated subgroup at k=" +
          std::to_string(k));
    phi.push_back(it->second);
  }
  t.endo.assign(count, 0);
  for (int i = 1; i < count; ++i) {
    auto [parent, gen] = built_from[i];
    t.endo[i] = t.mul[t.endo[parent]][phi[gen]];
  }
  for (int x = 0; x < count; ++x)
    for (int y = 0; y < count; ++y)
      if (t.endo[t.mul[x][y]] != t.mul[t.endo[x]][t.endo[y]])
        throw std::invalid_argument("quotient_table: endomorphism does not descend mod " +
                                    std::to_string(k));
  return t;
}

TowerReport quotient_tower(const CrystModel& m, const std::vector<Word>& endo_images,
                           const std::vector<int>& ks) {
  TowerReport report;
  for (int k : ks)
    report.counts.emplace_back(k, twisted_classes_finite(quotient_table(m, endo_images, k)));
  report.non_decreasing = true;
  report.strictly_increasing = report.counts.size() >= 2;
  for (size_t i = 1; i < report.counts.size(); ++i) {
    if (report.counts[i].second < report.counts[i - 1].second) report.non_decreasing = false;
    if (report.counts[i].second <= report.counts[i - 1].second) report.strictly_increasing = false;
  }
  if (!report.non_decreasing)
    report.verdict = TowerVerdict::INCONSISTENT;
  else if (report.strictly_increasing)
    report.verdict = TowerVerdict::EVIDENCE_CONSISTENT;
  else
    report.verdict = TowerVerdict::INCONCLUSIVE;
  return report;
}

}  // namespace vbg
