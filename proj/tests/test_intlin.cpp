#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "vbg/intlin.hpp"
#include "vbg/properties.hpp"

using namespace vbg;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  return m;
}

std::vector<Int> vec(const std::vector<long long>& v) {
  return std::vector<Int>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("smith normal form on small oracles") {
  SUBCASE("identity has trivial cokernel") {
    SmithResult r = smith_normal_form(IntMatrix::identity(2));
    CHECK(r.rank == 2);
    CHECK(r.cokernel.free_rank == 0);
    CHECK(r.cokernel.torsion.empty());
    CHECK(r.cokernel.gap_format() == "[ ]");
  }
  SUBCASE("diag(2,3) has cokernel Z/6") {
    SmithResult r = smith_normal_form(from_rows({{2, 0}, {0, 3}}));
    CHECK(r.diagonal == vec({1, 6}));
    CHECK(r.cokernel.torsion == vec({6}));
    CHECK(r.cokernel.gap_format() == "[ 2, 3 ]");
  }
  SUBCASE("empty matrix leaves the free module") {
    SmithResult r = smith_normal_form(IntMatrix(0, 3));
    CHECK(r.rank == 0);
    CHECK(r.cokernel.free_rank == 3);
    CHECK(r.cokernel.gap_format() == "[ 0, 0, 0 ]");
  }
  SUBCASE("column count beats row count") {
    // rows (2,0,0) and (0,2,0): cokernel (Z/2)^2 + Z
    SmithResult r = smith_normal_form(from_rows({{2, 0, 0}, {0, 2, 0}}));
    CHECK(r.cokernel.free_rank == 1);
    CHECK(r.cokernel.torsion == vec({2, 2}));
    CHECK(r.cokernel.gap_format() == "[ 0, 2, 2 ]");
  }
}

TEST_CASE("gap_format ordering: zeros then ascending prime powers") {
  AbelianInvariants inv;
  inv.free_rank = 4;
  inv.torsion = vec({3, 3, 3});
  CHECK(inv.gap_format() == "[ 0, 0, 0, 0, 3, 3, 3 ]");

  AbelianInvariants mixed;
  mixed.free_rank = 1;
  mixed.torsion = vec({2, 12});  // 12 = 4 * 3 splits into prime powers
  CHECK(mixed.gap_format() == "[ 0, 2, 3, 4 ]");

  AbelianInvariants chain;
  chain.free_rank = 0;
  chain.torsion = vec({6});
  CHECK(chain.chain_format() == "Z/6");
}

TEST_CASE("smith transforms reconstruct the input") {
  IntMatrix m = from_rows({{4, -2, 7}, {0, 6, 6}, {2, 2, 2}});
  SmithTransforms t = smith_with_transforms(m);
  CHECK(mat_mul(mat_mul(t.u, m), t.v) == t.s);
  CHECK(mat_mul(t.v, t.vinv) == IntMatrix::identity(3));
  for (size_t i = 0; i + 1 < t.diagonal.size(); ++i)
    CHECK(t.diagonal[i + 1] % t.diagonal[i] == 0);
}

TEST_CASE("lattice membership") {
  IntMatrix basis = from_rows({{1, 1}, {1, -1}});
  CHECK(lattice_membership(vec({2, 0}), basis));
  CHECK_FALSE(lattice_membership(vec({1, 0}), basis));
  CHECK(lattice_membership(vec({0, 0}), basis));

  std::vector<Int> x;
  REQUIRE(lattice_solve(vec({2, 0}), basis, x));
  CHECK(vec_mat(x, basis) == vec({2, 0}));
  CHECK_FALSE(lattice_solve(vec({1, 0}), basis, x));
}

TEST_CASE("saturation") {
  SUBCASE("divides out content") {
    IntMatrix sat = saturation(from_rows({{2, 0}}));
    CHECK(sat == from_rows({{1, 0}}));
  }
  SUBCASE("full-rank span saturates to the whole lattice") {
    IntMatrix sat = saturation(from_rows({{1, 1}, {1, -1}}));
    CHECK(sat == IntMatrix::identity(2));
  }
  SUBCASE("idempotent") {
    IntMatrix basis = from_rows({{2, 4, 6}, {0, 10, 5}});
    IntMatrix once = saturation(basis);
    CHECK(saturation(once) == once);
    // The saturated lattice contains the original rows.
    for (int i = 0; i < basis.rows(); ++i) {
      std::vector<Int> row(basis.cols());
      for (int j = 0; j < basis.cols(); ++j) row[j] = basis.at(i, j);
      CHECK(lattice_membership(row, once));
    }
  }
  SUBCASE("rejects dependent rows") {
    CHECK_THROWS_AS(saturation(from_rows({{1, 2}, {2, 4}})), std::invalid_argument);
  }
}

TEST_CASE("hermite normal form") {
  IntMatrix h = hermite_normal_form(from_rows({{0, 3}, {2, 1}}));
  CHECK(h == from_rows({{2, 1}, {0, 3}}));
  // Same row lattice: both original rows are members.
  CHECK(lattice_membership(vec({0, 3}), h));
  CHECK(lattice_membership(vec({2, 1}), h));
}

TEST_CASE("kernel basis and determinant") {
  IntMatrix m = from_rows({{1, 2, 3}});
  IntMatrix k = kernel_basis(m);
  CHECK(k.rows() == 2);
  for (int i = 0; i < k.rows(); ++i) {
    Int s = 0;
    for (int j = 0; j < 3; ++j) s += m.at(0, j) * k.at(i, j);
    CHECK(s == 0);
  }
  CHECK(determinant(from_rows({{0, 1}, {1, 0}})) == -1);
  CHECK(determinant(from_rows({{1, -1}, {-1, 1}})) == 0);
  CHECK(determinant(IntMatrix::identity(4)) == 1);
  CHECK(matrix_rank(from_rows({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("block diagonal invariants merge into one chain") {
  AbelianInvariants a;  // Z/2 + Z
  a.free_rank = 1;
  a.torsion = vec({2});
  AbelianInvariants b;  // Z/6
  b.torsion = vec({6});
  AbelianInvariants merged = merge_invariants(a, b);
  CHECK(merged.free_rank == 1);
  CHECK(merged.torsion == vec({2, 6}));

  // Against SNF of an actual block-diagonal matrix.
  SmithResult whole = smith_normal_form(from_rows({{2, 0, 0}, {0, 6, 0}}));
  CHECK(whole.cokernel == merged);
}

TEST_CASE("property: snf invariant under unimodular multiplication") {
  PropertyResult r = property_snf_unimodular(12345, 200);
  INFO(r.first_failure);
  CHECK(r.cases == 200);
  CHECK(r.failures == 0);
}
