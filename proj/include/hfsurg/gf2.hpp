#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hfsurg {

struct InvalidComplex : std::runtime_error {
  explicit InvalidComplex(const std::string& what) : std::runtime_error(what) {}
};

struct NotChainMap : std::runtime_error {
  explicit NotChainMap(const std::string& what) : std::runtime_error(what) {}
};

// Dense bit vector used for elimination; matrices stay sparse at the interface.
struct BitVec {
  int n = 0;
  std::vector<uint64_t> w;

  BitVec() = default;
  explicit BitVec(int len) : n(len), w((len + 63) / 64, 0) {}

  bool get(int i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w[i >> 6] |= uint64_t(1) << (i & 63); }
  void clear(int i) { w[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
  void operator^=(const BitVec& o) {
    for (size_t k = 0; k < w.size(); ++k) w[k] ^= o.w[k];
  }
  bool any() const {
    for (uint64_t x : w)
      if (x) return true;
    return false;
  }
  int lowest() const;  // index of lowest set bit, -1 if zero
  std::vector<int> support() const;
  bool operator==(const BitVec&) const = default;
};

// Sparse matrix over GF(2): set of (row, col) pairs that are 1.
struct MatrixF2 {
  int rows = 0;
  int cols = 0;
  std::set<std::pair<int, int>> entries;

  MatrixF2() = default;
  MatrixF2(int r, int c) : rows(r), cols(c) {}

  static MatrixF2 identity(int n);

  void set(int r, int c);
  void toggle(int r, int c);
  bool at(int r, int c) const { return entries.count({r, c}) != 0; }
  bool is_zero() const { return entries.empty(); }

  MatrixF2 operator*(const MatrixF2&) const;
  MatrixF2 operator+(const MatrixF2&) const;
  bool operator==(const MatrixF2&) const = default;

  BitVec column(int j) const;
  BitVec apply(const BitVec& v) const;  // matrix * vector
};

int rank(const MatrixF2& m);

// Basis of the null space; deterministic given column order (columns are
// processed left to right, each kernel vector has its trailing 1 at the
// first dependent column).
std::vector<BitVec> kernel_basis(const MatrixF2& m);

// Incremental echelon span with combination tracking.
class Gf2Solver {
 public:
  explicit Gf2Solver(int n) : n_(n) {}

  // Returns true if v enlarged the span. Every call counts as one inserted
  // vector (index = number of prior calls), dependent or not.
  bool add(const BitVec& v);

  // Reduces v against the current span. If support != nullptr and v lies in
  // the span, *support receives the indices of inserted vectors whose sum
  // is v.
  BitVec reduce(const BitVec& v, std::set<int>* support = nullptr) const;

  bool contains(const BitVec& v) const { return !reduce(v).any(); }
  int dim() const { return (int)rows_.size(); }
  int inserted() const { return inserted_; }

 private:
  struct Row {
    BitVec vec;
    std::set<int> comb;  // inserted-vector indices summing to vec
    int pivot;
  };
  int n_;
  int inserted_ = 0;
  std::vector<Row> rows_;
};

// Finite chain complex of F2 vector spaces. Graded mode: boundaries[d] maps
// grading d to d-1. Ungraded mode: a single bucket 0 with a square boundary
// endomorphism (used for mapping cones without absolute gradings).
struct ChainComplexF2 {
  bool ungraded = false;
  std::map<int, int> graded_dims;
  std::map<int, MatrixF2> boundaries;
  std::map<int, std::vector<std::string>> basis_labels;

  int dim(int d) const;
  int total_dim() const;
  MatrixF2 boundary_from(int d) const;  // correctly shaped zero if absent
  void check_valid() const;             // throws InvalidComplex
};

struct ChainMapF2 {
  const ChainComplexF2* source = nullptr;
  const ChainComplexF2* target = nullptr;
  std::map<int, MatrixF2> blocks;  // blocks[d]: source_d -> target_{d+degree_shift}
  int degree_shift = 0;

  MatrixF2 block(int d) const;
  bool commutes() const;
};

struct HomologyResult {
  std::map<int, int> dims;
  std::map<int, std::vector<BitVec>> reps;  // representative cycles, reduced-echelon convention
  int total() const;
};

HomologyResult homology(const ChainComplexF2& c);

// Coordinates of the class of cycle z (grading g) in the representative
// basis from homology(). Throws if z is not a cycle.
BitVec express_class(const ChainComplexF2& c, const HomologyResult& h, int g, const BitVec& z);

// Matrix of f on homology per grading, w.r.t. the representative bases.
std::map<int, MatrixF2> induced_map_on_homology(const ChainMapF2& f);
std::map<int, MatrixF2> induced_map_on_homology(const ChainMapF2& f, const HomologyResult& hs,
                                                const HomologyResult& ht);

// Standard cone of a degree-0 chain map: shifted source + target, boundary
// [[d_src, 0], [f, d_tgt]].
ChainComplexF2 mapping_cone(const ChainMapF2& f);

}  // namespace hfsurg
