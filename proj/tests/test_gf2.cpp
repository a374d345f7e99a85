#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "hfsurg/gf2.hpp"

using namespace hfsurg;

namespace {

MatrixF2 from_rows(int rows, int cols, std::initializer_list<std::initializer_list<int>> data) {
  MatrixF2 m(rows, cols);
  int r = 0;
  for (auto& row : data) {
    int c = 0;
    for (int v : row) {
      if (v) m.set(r, c);
      ++c;
    }
    ++r;
  }
  return m;
}

// random complex on gradings [0, top] with d^2 = 0 by construction
ChainComplexF2 random_complex(std::mt19937& rng, int top = 3, int maxdim = 4) {
  ChainComplexF2 c;
  std::uniform_int_distribution<int> dim_dist(0, maxdim);
  for (int d = 0; d <= top; ++d) c.graded_dims[d] = dim_dist(rng);
  std::uniform_int_distribution<int> bit(0, 1);
  // bottom boundary is free; higher ones take columns from the kernel below
  for (int d = 1; d <= top; ++d) {
    MatrixF2 below = c.boundary_from(d - 1);
    MatrixF2 m(c.dim(d - 1), c.dim(d));
    if (d == 1) {
      for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
          if (bit(rng)) m.set(i, j);
    } else {
      std::vector<BitVec> ker = kernel_basis(below);
      for (int j = 0; j < m.cols; ++j) {
        BitVec col(m.rows);
        for (auto& k : ker)
          if (bit(rng)) col ^= k;
        for (int i = 0; i < m.rows; ++i)
          if (col.get(i)) m.set(i, j);
      }
    }
    c.boundaries[d] = std::move(m);
  }
  c.check_valid();
  return c;
}

MatrixF2 random_matrix(std::mt19937& rng, int rows, int cols) {
  std::uniform_int_distribution<int> bit(0, 1);
  MatrixF2 m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (bit(rng)) m.set(i, j);
  return m;
}

}  // namespace

TEST_CASE("rank on small fixed matrices") {
  CHECK(rank(MatrixF2::identity(2)) == 2);
  CHECK(rank(MatrixF2(3, 3)) == 0);
  CHECK(rank(from_rows(2, 2, {{1, 1}, {1, 1}})) == 1);
}

TEST_CASE("kernel of [[1,1]]") {
  auto ker = kernel_basis(from_rows(1, 2, {{1, 1}}));
  REQUIRE(ker.size() == 1);
  CHECK(ker[0].get(0));
  CHECK(ker[0].get(1));
}

TEST_CASE("kernel basis is deterministic and correct") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    MatrixF2 m = random_matrix(rng, 5, 7);
    auto k1 = kernel_basis(m);
    auto k2 = kernel_basis(m);
    CHECK(k1 == k2);
    CHECK((int)k1.size() == m.cols - rank(m));  // rank-nullity
    for (auto& v : k1) CHECK_FALSE(m.apply(v).any());
  }
}

TEST_CASE("homology of two-step complexes") {
  // 0 -> F^2 --id--> F^2 -> 0 is acyclic
  ChainComplexF2 c;
  c.graded_dims[0] = 2;
  c.graded_dims[1] = 2;
  c.boundaries[1] = MatrixF2::identity(2);
  auto h = homology(c);
  CHECK(h.dims[0] == 0);
  CHECK(h.dims[1] == 0);

  // zero differential: homology = chain groups
  ChainComplexF2 z;
  z.graded_dims[0] = 2;
  z.graded_dims[1] = 3;
  auto hz = homology(z);
  CHECK(hz.dims[0] == 2);
  CHECK(hz.dims[1] == 3);
}

TEST_CASE("check_valid rejects d^2 != 0") {
  ChainComplexF2 c;
  c.graded_dims[0] = 1;
  c.graded_dims[1] = 1;
  c.graded_dims[2] = 1;
  c.boundaries[1] = from_rows(1, 1, {{1}});
  c.boundaries[2] = from_rows(1, 1, {{1}});
  CHECK_THROWS_AS(c.check_valid(), InvalidComplex);
}

TEST_CASE("ungraded complexes: square boundary, ker/im homology") {
  ChainComplexF2 c;
  c.ungraded = true;
  c.graded_dims[0] = 3;
  MatrixF2 d(3, 3);
  d.set(1, 0);  // d x0 = x1
  c.boundaries[0] = d;
  auto h = homology(c);
  CHECK(h.dims[0] == 1);  // x2 survives
  BitVec z(3);
  z.set(2);
  BitVec coords = express_class(c, h, 0, z);
  CHECK(coords.any());
}

TEST_CASE("mapping cone of the identity is acyclic") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    ChainComplexF2 c = random_complex(rng);
    ChainMapF2 f;
    f.source = &c;
    f.target = &c;
    for (auto& [d, n] : c.graded_dims) f.blocks[d] = MatrixF2::identity(n);
    ChainComplexF2 cone = mapping_cone(f);
    CHECK(homology(cone).total() == 0);
  }
}

TEST_CASE("mapping cone of the zero map splits") {
  std::mt19937 rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    ChainComplexF2 s = random_complex(rng);
    ChainComplexF2 t = random_complex(rng);
    ChainMapF2 f;
    f.source = &s;
    f.target = &t;
    ChainComplexF2 cone = mapping_cone(f);
    auto hs = homology(s), ht = homology(t), hc = homology(cone);
    CHECK(hc.total() == hs.total() + ht.total());
    for (auto& [d, n] : hc.dims) {
      int want = (hs.dims.count(d - 1) ? hs.dims.at(d - 1) : 0) + (ht.dims.count(d) ? ht.dims.at(d) : 0);
      CHECK(n == want);
    }
  }
}

TEST_CASE("cone of a null-homotopic chain map has split homology") {
  // f = dT g + g dS is always a chain map and induces zero on homology
  std::mt19937 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    ChainComplexF2 s = random_complex(rng);
    ChainComplexF2 t = random_complex(rng);
    std::map<int, MatrixF2> g;  // g_d : S_d -> T_{d+1}
    for (auto& [d, n] : s.graded_dims) g[d] = random_matrix(rng, t.dim(d + 1), n);
    ChainMapF2 f;
    f.source = &s;
    f.target = &t;
    for (auto& [d, n] : s.graded_dims) {
      MatrixF2 gd = g.count(d) ? g[d] : MatrixF2(t.dim(d + 1), n);
      MatrixF2 gdm = g.count(d - 1) ? g[d - 1] : MatrixF2(t.dim(d), s.dim(d - 1));
      f.blocks[d] = t.boundary_from(d + 1) * gd + gdm * s.boundary_from(d);
    }
    REQUIRE(f.commutes());
    for (auto& [d, m] : induced_map_on_homology(f)) CHECK(m.is_zero());
    auto hs = homology(s), ht = homology(t);
    CHECK(homology(mapping_cone(f)).total() == hs.total() + ht.total());
  }
}

TEST_CASE("induced map respects choice of representative") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    ChainComplexF2 c = random_complex(rng);
    auto h = homology(c);
    for (auto& [d, reps] : h.reps) {
      if (reps.empty() || c.dim(d + 1) == 0) continue;
      // perturb the first representative by a boundary
      BitVec z = reps[0];
      BitVec pert = c.boundary_from(d + 1).column(0);
      BitVec z2 = z;
      z2 ^= pert;
      CHECK(express_class(c, h, d, z) == express_class(c, h, d, z2));
    }
  }
}

TEST_CASE("non-chain-maps are rejected") {
  ChainComplexF2 s;
  s.graded_dims[0] = 1;
  s.graded_dims[1] = 1;
  s.boundaries[1] = from_rows(1, 1, {{1}});
  ChainComplexF2 t;
  t.graded_dims[0] = 1;
  t.graded_dims[1] = 1;
  ChainMapF2 f;
  f.source = &s;
  f.target = &t;
  f.blocks[0] = from_rows(1, 1, {{1}});  // does not commute at d=1: dT f1 = 0 but f0 dS = 1
  CHECK_FALSE(f.commutes());
  CHECK_THROWS_AS(mapping_cone(f), NotChainMap);
  CHECK_THROWS_AS(induced_map_on_homology(f), NotChainMap);
}
