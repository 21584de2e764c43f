#pragma once

// Exact integer linear algebra: dense matrices over arbitrary-precision
// integers, Smith/Hermite normal forms with transform tracking, lattice
// membership, saturation, kernels and determinants.  Everything here is
// exact; there is no floating point anywhere in the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace vbg {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

class IntMatrix {
public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("IntMatrix: negative shape");
  }
  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  IntMatrix transposed() const;
  bool is_zero() const;
  std::string to_string() const;

private:
  int rows_, cols_;
  std::vector<Int> a_;
};

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
std::vector<Int> mat_vec(const IntMatrix& a, const std::vector<Int>& v);
std::vector<Int> vec_mat(const std::vector<Int>& v, const IntMatrix& a);

// Abelian invariants as a divisibility chain: free rank plus torsion
// d_1 | d_2 | ... with every d_i > 1.
struct AbelianInvariants {
  long long free_rank = 0;
  std::vector<Int> torsion;

  bool operator==(const AbelianInvariants& o) const {
    return free_rank == o.free_rank && torsion == o.torsion;
  }
  bool operator!=(const AbelianInvariants& o) const { return !(*this == o); }

  // GAP-style rendering: zeros first, then prime powers ascending,
  // e.g. "[ 0, 0, 2, 3, 4 ]".
  std::string gap_format() const;
  std::string chain_format() const;  // e.g. "Z^2 + Z/2 + Z/6"
};

// Merge invariants of a direct sum into one divisibility chain.
AbelianInvariants merge_invariants(const AbelianInvariants& a, const AbelianInvariants& b);

struct SmithResult {
  int rank = 0;
  std::vector<Int> diagonal;  // positive, divisibility chain, length == rank
  AbelianInvariants cokernel;  // of Z^cols / rowspace
};

// Smith normal form of the matrix; cokernel invariants describe
// Z^cols modulo the row space.
SmithResult smith_normal_form(const IntMatrix& m);

// Full decomposition S = U * M * V with U, V unimodular; vinv = V^-1.
struct SmithTransforms {
  IntMatrix s, u, v, vinv;
  int rank = 0;
  std::vector<Int> diagonal;
};
SmithTransforms smith_with_transforms(const IntMatrix& m, bool want_u = true, bool want_v = true,
                                      bool want_vinv = true);

// Does v lie in the lattice spanned by the rows of basis?
bool lattice_membership(const std::vector<Int>& v, const IntMatrix& basis);

// Integer solution x of x * basis = v, if one exists.
bool lattice_solve(const std::vector<Int>& v, const IntMatrix& basis, std::vector<Int>& x_out);

// Row-style Hermite normal form: same row space, zero rows dropped,
// pivots positive, entries above each pivot reduced into [0, pivot).
IntMatrix hermite_normal_form(const IntMatrix& m);

// Saturation of the row lattice: basis of (Q-span of rows) intersected
// with Z^cols, in Hermite normal form.  Rows must be independent.
IntMatrix saturation(const IntMatrix& basis);

// Basis (as rows, HNF) of { x : m * x = 0 }.
IntMatrix kernel_basis(const IntMatrix& m);

// Exact determinant (Bareiss).
Int determinant(const IntMatrix& m);

int matrix_rank(const IntMatrix& m);

}  // namespace vbg
