#include "vbg/intlin.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace vbg {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  for (const Int& x : a_)
    if (x != 0) return false;
  return true;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "[") << at(i, j);
    os << "]" << (i + 1 == rows_ ? "]" : "\n");
  }
  if (rows_ == 0) os << "[]";
  return os.str();
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

std::vector<Int> mat_vec(const IntMatrix& a, const std::vector<Int>& v) {
  if (a.cols() != static_cast<int>(v.size())) throw std::invalid_argument("mat_vec: shape mismatch");
  std::vector<Int> r(a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a.at(i, j) != 0) r[i] += a.at(i, j) * v[j];
  return r;
}

std::vector<Int> vec_mat(const std::vector<Int>& v, const IntMatrix& a) {
  if (a.rows() != static_cast<int>(v.size())) throw std::invalid_argument("vec_mat: shape mismatch");
  std::vector<Int> r(a.cols());
  for (int i = 0; i < a.rows(); ++i)
    if (v[i] != 0)
      for (int j = 0; j < a.cols(); ++j)
        if (a.at(i, j) != 0) r[j] += v[i] * a.at(i, j);
  return r;
}

namespace {

std::vector<Int> prime_power_factors(Int d) {
  std::vector<Int> out;
  for (Int p = 2; p * p <= d; ++p) {
    if (d % p == 0) {
      Int pk = 1;
      while (d % p == 0) {
        d /= p;
        pk *= p;
      }
      out.push_back(pk);
    }
  }
  if (d > 1) out.push_back(d);
  return out;
}

}  // namespace

std::string AbelianInvariants::gap_format() const {
  std::vector<Int> entries(static_cast<size_t>(free_rank), Int(0));
  std::vector<Int> pps;
  for (const Int& d : torsion) {
    auto f = prime_power_factors(d);
    pps.insert(pps.end(), f.begin(), f.end());
  }
  std::sort(pps.begin(), pps.end());
  entries.insert(entries.end(), pps.begin(), pps.end());
  if (entries.empty()) return "[ ]";
  std::ostringstream os;
  os << "[ ";
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) os << ", ";
    os << entries[i];
  }
  os << " ]";
  return os.str();
}

std::string AbelianInvariants::chain_format() const {
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << "Z";
    if (free_rank > 1) os << "^" << free_rank;
    first = false;
  }
  for (const Int& d : torsion) {
    if (!first) os << " + ";
    os << "Z/" << d;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

AbelianInvariants merge_invariants(const AbelianInvariants& a, const AbelianInvariants& b) {
  // Collect elementary divisors (prime powers) of both torsion parts,
  // grouped by prime, then rebuild the divisibility chain by multiplying
  // the k-th largest powers across primes.
  std::map<Int, std::vector<Int>> by_prime;
  auto collect = [&](const std::vector<Int>& torsion) {
    for (const Int& d : torsion)
      for (const Int& pk : prime_power_factors(d)) {
        Int p = 2;
        while (pk % p != 0) ++p;
        by_prime[p].push_back(pk);
      }
  };
  collect(a.torsion);
  collect(b.torsion);
  size_t depth = 0;
  for (auto& [p, powers] : by_prime) {
    std::sort(powers.begin(), powers.end(), std::greater<Int>());
    depth = std::max(depth, powers.size());
  }
  std::vector<Int> chain(depth, Int(1));
  for (auto& [p, powers] : by_prime)
    for (size_t k = 0; k < powers.size(); ++k) chain[k] *= powers[k];
  std::sort(chain.begin(), chain.end());
  AbelianInvariants out;
  out.free_rank = a.free_rank + b.free_rank;
  for (const Int& d : chain)
    if (d > 1) out.torsion.push_back(d);
  return out;
}

namespace {

// Shared elementary-operation engine for Smith form computations.
struct SnfWorker {
  IntMatrix a, u, v, vinv;
  bool track_u, track_v, track_vinv;

  SnfWorker(const IntMatrix& m, bool tu, bool tv, bool tvi)
      : a(m), track_u(tu), track_v(tv), track_vinv(tvi) {
    if (track_u) u = IntMatrix::identity(m.rows());
    if (track_v) v = IntMatrix::identity(m.cols());
    if (track_vinv) vinv = IntMatrix::identity(m.cols());
  }

  void row_swap(int i1, int i2) {
    if (i1 == i2) return;
    for (int j = 0; j < a.cols(); ++j) std::swap(a.at(i1, j), a.at(i2, j));
    if (track_u)
      for (int j = 0; j < u.cols(); ++j) std::swap(u.at(i1, j), u.at(i2, j));
  }
  void row_negate(int i) {
    for (int j = 0; j < a.cols(); ++j) a.at(i, j) = -a.at(i, j);
    if (track_u)
      for (int j = 0; j < u.cols(); ++j) u.at(i, j) = -u.at(i, j);
  }
  // row i += c * row k
  void row_add(int i, int k, const Int& c) {
    if (c == 0) return;
    for (int j = 0; j < a.cols(); ++j) a.at(i, j) += c * a.at(k, j);
    if (track_u)
      for (int j = 0; j < u.cols(); ++j) u.at(i, j) += c * u.at(k, j);
  }
  void col_swap(int j1, int j2) {
    if (j1 == j2) return;
    for (int i = 0; i < a.rows(); ++i) std::swap(a.at(i, j1), a.at(i, j2));
    if (track_v)
      for (int i = 0; i < v.rows(); ++i) std::swap(v.at(i, j1), v.at(i, j2));
    if (track_vinv)
      for (int j = 0; j < vinv.cols(); ++j) std::swap(vinv.at(j1, j), vinv.at(j2, j));
  }
  void col_negate(int j) {
    for (int i = 0; i < a.rows(); ++i) a.at(i, j) = -a.at(i, j);
    if (track_v)
      for (int i = 0; i < v.rows(); ++i) v.at(i, j) = -v.at(i, j);
    if (track_vinv)
      for (int k = 0; k < vinv.cols(); ++k) vinv.at(j, k) = -vinv.at(j, k);
  }
  // col j += c * col k; V *= E, Vinv = E^-1 * Vinv
  void col_add(int j, int k, const Int& c) {
    if (c == 0) return;
    for (int i = 0; i < a.rows(); ++i) a.at(i, j) += c * a.at(i, k);
    if (track_v)
      for (int i = 0; i < v.rows(); ++i) v.at(i, j) += c * v.at(i, k);
    if (track_vinv)
      for (int i = 0; i < vinv.cols(); ++i) vinv.at(k, i) -= c * vinv.at(j, i);
  }

  // Abs-minimal nonzero entry in the submatrix with i,j >= t keeps the
  // intermediate entries small; this is the usual pivoting heuristic.
  bool find_pivot(int t, int& pi, int& pj) {
    bool found = false;
    Int best;
    for (int i = t; i < a.rows(); ++i)
      for (int j = t; j < a.cols(); ++j) {
        const Int& x = a.at(i, j);
        if (x == 0) continue;
        Int ax = abs(x);
        if (!found || ax < best) {
          found = true;
          best = ax;
          pi = i;
          pj = j;
          if (best == 1) return true;
        }
      }
    return found;
  }

  int run() {
    int t = 0;
    int bound = std::min(a.rows(), a.cols());
    while (t < bound) {
      int pi, pj;
      if (!find_pivot(t, pi, pj)) break;
      row_swap(t, pi);
      col_swap(t, pj);
      if (a.at(t, t) < 0) row_negate(t);
      bool again = true;
      while (again) {
        again = false;
        for (int i = t + 1; i < a.rows(); ++i) {
          if (a.at(i, t) == 0) continue;
          Int q = a.at(i, t) / a.at(t, t);
          row_add(i, t, -q);
          if (a.at(i, t) != 0) {
            // Remainder became the new smallest entry in this column.
            row_swap(t, i);
            if (a.at(t, t) < 0) row_negate(t);
            again = true;
          }
        }
        if (again) continue;
        for (int j = t + 1; j < a.cols(); ++j) {
          if (a.at(t, j) == 0) continue;
          Int q = a.at(t, j) / a.at(t, t);
          col_add(j, t, -q);
          if (a.at(t, j) != 0) {
            col_swap(t, j);
            if (a.at(t, t) < 0) row_negate(t);
            again = true;
          }
        }
        if (again) continue;
        // Enforce divisibility of the remaining block by the pivot.
        for (int i = t + 1; i < a.rows() && !again; ++i)
          for (int j = t + 1; j < a.cols() && !again; ++j)
            if (a.at(i, j) % a.at(t, t) != 0) {
              row_add(t, i, 1);
              again = true;
            }
      }
      ++t;
    }
    return t;  // rank
  }
};

}  // namespace

SmithTransforms smith_with_transforms(const IntMatrix& m, bool want_u, bool want_v, bool want_vinv) {
  SnfWorker w(m, want_u, want_v, want_vinv);
  int rank = w.run();
  SmithTransforms out;
  out.rank = rank;
  for (int i = 0; i < rank; ++i) out.diagonal.push_back(w.a.at(i, i));
  out.s = std::move(w.a);
  if (want_u) out.u = std::move(w.u);
  if (want_v) out.v = std::move(w.v);
  if (want_vinv) out.vinv = std::move(w.vinv);
  return out;
}

SmithResult smith_normal_form(const IntMatrix& m) {
  SnfWorker w(m, false, false, false);
  int rank = w.run();
  SmithResult out;
  out.rank = rank;
  for (int i = 0; i < rank; ++i) out.diagonal.push_back(w.a.at(i, i));
  out.cokernel.free_rank = m.cols() - rank;
  for (const Int& d : out.diagonal)
    if (d > 1) out.cokernel.torsion.push_back(d);
  return out;
}

bool lattice_solve(const std::vector<Int>& v, const IntMatrix& basis, std::vector<Int>& x_out) {
  if (static_cast<int>(v.size()) != basis.cols())
    throw std::invalid_argument("lattice_solve: dimension mismatch");
  SmithTransforms st = smith_with_transforms(basis, true, true, false);
  // x * B = v  <=>  y * S = v * V with y = x * U^-1; y_i = (vV)_i / d_i.
  std::vector<Int> w = vec_mat(v, st.v);
  std::vector<Int> y(basis.rows());
  for (int i = 0; i < basis.cols(); ++i) {
    if (i < st.rank) {
      if (w[i] % st.diagonal[i] != 0) return false;
      y[i] = w[i] / st.diagonal[i];
    } else if (w[i] != 0) {
      return false;
    }
  }
  x_out = vec_mat(y, st.u);
  return true;
}

bool lattice_membership(const std::vector<Int>& v, const IntMatrix& basis) {
  if (static_cast<int>(v.size()) != basis.cols())
    throw std::invalid_argument("lattice_membership: dimension mismatch");
  SmithTransforms st = smith_with_transforms(basis, false, true, false);
  std::vector<Int> w = vec_mat(v, st.v);
  for (int i = 0; i < basis.cols(); ++i) {
    if (i < st.rank) {
      if (w[i] % st.diagonal[i] != 0) return false;
    } else if (w[i] != 0) {
      return false;
    }
  }
  return true;
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  int rows = a.rows(), cols = a.cols();
  int r = 0;
  auto row_add = [&](int i, int k, const Int& c) {
    for (int j = 0; j < cols; ++j) a.at(i, j) += c * a.at(k, j);
  };
  for (int col = 0; col < cols && r < rows; ++col) {
    // Reduce entries below row r in this column to a single pivot.
    while (true) {
      int best = -1;
      for (int i = r; i < rows; ++i)
        if (a.at(i, col) != 0 && (best < 0 || abs(a.at(i, col)) < abs(a.at(best, col)))) best = i;
      if (best < 0) break;
      for (int j = 0; j < cols; ++j) std::swap(a.at(r, j), a.at(best, j));
      if (a.at(r, col) < 0)
        for (int j = 0; j < cols; ++j) a.at(r, j) = -a.at(r, j);
      bool clean = true;
      for (int i = r + 1; i < rows; ++i) {
        if (a.at(i, col) == 0) continue;
        Int q = a.at(i, col) / a.at(r, col);
        row_add(i, r, -q);
        if (a.at(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (a.at(r, col) == 0) continue;
    // Reduce entries above the pivot into [0, pivot).
    for (int i = 0; i < r; ++i) {
      Int q = a.at(i, col) / a.at(r, col);
      if (a.at(i, col) - q * a.at(r, col) < 0) q -= 1;
      row_add(i, r, -q);
    }
    ++r;
  }
  IntMatrix out(r, cols);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < cols; ++j) out.at(i, j) = a.at(i, j);
  return out;
}

IntMatrix saturation(const IntMatrix& basis) {
  SmithTransforms st = smith_with_transforms(basis, false, false, true);
  if (st.rank != basis.rows()) throw std::invalid_argument("saturation: rows are dependent");
  // B = U^-1 S V^-1, so the Q-span of the rows of B equals the Q-span of
  // the first rank rows of V^-1, which form a saturated (direct summand)
  // sublattice of Z^cols.
  IntMatrix sat(st.rank, basis.cols());
  for (int i = 0; i < st.rank; ++i)
    for (int j = 0; j < basis.cols(); ++j) sat.at(i, j) = st.vinv.at(i, j);
  return hermite_normal_form(sat);
}

IntMatrix kernel_basis(const IntMatrix& m) {
  SmithTransforms st = smith_with_transforms(m, false, true, false);
  int n = m.cols();
  int k = n - st.rank;
  IntMatrix ker(k, n);
  for (int c = 0; c < k; ++c)
    for (int i = 0; i < n; ++i) ker.at(c, i) = st.v.at(i, st.rank + c);
  return hermite_normal_form(ker);
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
  int n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(swap_row, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

int matrix_rank(const IntMatrix& m) {
  SnfWorker w(m, false, false, false);
  return w.run();
}

}  // namespace vbg
