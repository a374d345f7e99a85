#pragma once

#include "hfsurg/cfk.hpp"

namespace hfsurg {

struct WindowTooSmall : std::runtime_error {
  explicit WindowTooSmall(const std::string& what) : std::runtime_error(what) {}
};

struct IndexOutsideTruncation : std::runtime_error {
  explicit IndexOutsideTruncation(const std::string& what) : std::runtime_error(what) {}
};

struct SurgerySlope {
  long long p = 0;
  long long q = 1;  // q >= 1, gcd(|p|, q) = 1
};

void check_slope(const SurgerySlope& s);

// spin^c labels: c1 = 2k - p - q + 1 and its inverse.
long long spinc_chern_from_k(const SurgerySlope& s, long long k);
long long k_from_chern(const SurgerySlope& s, long long c1);  // throws on parity mismatch

// Truncated surgery mapping cone. A-summand at index k carries
// A_{floor(k/q)}; B-summand at k carries B; the cone map sends (k, x) to
// (k, v(x)) + (k+p, h(x)). Indices split along k mod p (k itself if p = 0).
struct ConeComplex {
  SurgerySlope slope;
  int window = 0;

  struct Block {
    long long residue = 0;
    ChainComplexF2 cx;  // ungraded, A-cells (by k) then B-cells (by k)
    std::vector<std::pair<long long, int>> a_cells;  // (k, offset)
    std::vector<std::pair<long long, int>> b_cells;
    HomologyResult hom;
  };
  std::vector<Block> blocks;  // ordered by residue
  int b_size = 0;             // dim of one B summand

  const Block* block_of(long long k) const;  // nullptr if residue absent
};

// window < width+1 raises WindowTooSmall; the default (window = 0) picks
// max(width+1, smallest b with q(2b+1) >= |p| + q).
int auto_window(const KnotComplex& c, const SurgerySlope& s);
ConeComplex build_cone(const KnotComplex& c, const SurgerySlope& s, int window = 0);

// residue -> dim H of that block
std::map<long long, int> cone_homology(const ConeComplex& x);
std::map<long long, int> cone_homology(const KnotComplex& c, const SurgerySlope& s);

struct HomologyClass {
  long long residue = 0;
  bool is_zero = true;
  BitVec coordinates;  // over the block's homology representative basis
};

// Class of the H(B) generator of summand (k, B) inside its residue block.
HomologyClass inclusion_image(const ConeComplex& x, const KnotComplex& c, long long k);

}  // namespace hfsurg
