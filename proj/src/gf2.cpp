#include "hfsurg/gf2.hpp"

#include <algorithm>
#include <bit>

namespace hfsurg {

int BitVec::lowest() const {
  for (size_t k = 0; k < w.size(); ++k)
    if (w[k]) return (int)(k * 64) + std::countr_zero(w[k]);
  return -1;
}

std::vector<int> BitVec::support() const {
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (get(i)) out.push_back(i);
  return out;
}

MatrixF2 MatrixF2::identity(int n) {
  MatrixF2 m(n, n);
  for (int i = 0; i < n; ++i) m.entries.insert({i, i});
  return m;
}

void MatrixF2::set(int r, int c) {
  if (r < 0 || r >= rows || c < 0 || c >= cols) throw std::out_of_range("MatrixF2::set");
  entries.insert({r, c});
}

void MatrixF2::toggle(int r, int c) {
  if (r < 0 || r >= rows || c < 0 || c >= cols) throw std::out_of_range("MatrixF2::toggle");
  auto it = entries.find({r, c});
  if (it == entries.end())
    entries.insert({r, c});
  else
    entries.erase(it);
}

MatrixF2 MatrixF2::operator*(const MatrixF2& o) const {
  if (cols != o.rows) throw std::invalid_argument("MatrixF2: shape mismatch in product");
  // row-sparse view of *this applied to each column of o
  std::vector<std::vector<int>> rows_of(rows);
  for (auto& [r, c] : entries) rows_of[r].push_back(c);
  std::vector<BitVec> ocols(o.cols, BitVec(o.rows));
  for (auto& [r, c] : o.entries) ocols[c].set(r);
  MatrixF2 out(rows, o.cols);
  for (int j = 0; j < o.cols; ++j)
    for (int i = 0; i < rows; ++i) {
      int parity = 0;
      for (int k : rows_of[i]) parity ^= (int)ocols[j].get(k);
      if (parity) out.entries.insert({i, j});
    }
  return out;
}

MatrixF2 MatrixF2::operator+(const MatrixF2& o) const {
  if (rows != o.rows || cols != o.cols) throw std::invalid_argument("MatrixF2: shape mismatch in sum");
  MatrixF2 out(rows, cols);
  out.entries = entries;
  for (auto& e : o.entries) {
    auto it = out.entries.find(e);
    if (it == out.entries.end())
      out.entries.insert(e);
    else
      out.entries.erase(it);
  }
  return out;
}

BitVec MatrixF2::column(int j) const {
  BitVec v(rows);
  auto it = entries.lower_bound({0, 0});
  for (auto& [r, c] : entries)
    if (c == j) v.set(r);
  (void)it;
  return v;
}

BitVec MatrixF2::apply(const BitVec& v) const {
  if (v.n != cols) throw std::invalid_argument("MatrixF2::apply: length mismatch");
  BitVec out(rows);
  for (auto& [r, c] : entries)
    if (v.get(c)) out.w[r >> 6] ^= uint64_t(1) << (r & 63);
  return out;
}

bool Gf2Solver::add(const BitVec& v) {
  if (v.n != n_) throw std::invalid_argument("Gf2Solver::add: length mismatch");
  int idx = inserted_++;
  BitVec r = v;
  std::set<int> comb{idx};
  for (auto& row : rows_) {
    if (r.get(row.pivot)) {
      r ^= row.vec;
      for (int k : row.comb) {
        if (comb.count(k))
          comb.erase(k);
        else
          comb.insert(k);
      }
    }
  }
  if (!r.any()) return false;
  rows_.push_back({r, comb, r.lowest()});
  std::sort(rows_.begin(), rows_.end(), [](const Row& a, const Row& b) { return a.pivot < b.pivot; });
  return true;
}

BitVec Gf2Solver::reduce(const BitVec& v, std::set<int>* support) const {
  if (v.n != n_) throw std::invalid_argument("Gf2Solver::reduce: length mismatch");
  BitVec r = v;
  std::set<int> comb;
  for (auto& row : rows_) {
    if (r.get(row.pivot)) {
      r ^= row.vec;
      for (int k : row.comb) {
        if (comb.count(k))
          comb.erase(k);
        else
          comb.insert(k);
      }
    }
  }
  if (support) {
    if (r.any())
      support->clear();
    else
      *support = comb;
  }
  return r;
}

int rank(const MatrixF2& m) {
  Gf2Solver s(m.rows);
  std::vector<BitVec> cols(m.cols, BitVec(m.rows));
  for (auto& [r, c] : m.entries) cols[c].set(r);
  int rk = 0;
  for (int j = 0; j < m.cols; ++j)
    if (s.add(cols[j])) ++rk;
  return rk;
}

std::vector<BitVec> kernel_basis(const MatrixF2& m) {
  Gf2Solver s(m.rows);
  std::vector<BitVec> cols(m.cols, BitVec(m.rows));
  for (auto& [r, c] : m.entries) cols[c].set(r);
  std::vector<BitVec> out;
  std::vector<int> col_of_insert;  // insertion index -> column index
  for (int j = 0; j < m.cols; ++j) {
    std::set<int> supp;
    BitVec r = s.reduce(cols[j], &supp);
    if (!r.any()) {
      BitVec k(m.cols);
      k.set(j);
      for (int i : supp) k.set(col_of_insert[i]);
      out.push_back(k);
    } else {
      s.add(cols[j]);
      col_of_insert.push_back(j);
    }
  }
  return out;
}

int ChainComplexF2::dim(int d) const {
  auto it = graded_dims.find(d);
  return it == graded_dims.end() ? 0 : it->second;
}

int ChainComplexF2::total_dim() const {
  int t = 0;
  for (auto& [d, n] : graded_dims) t += n;
  return t;
}

MatrixF2 ChainComplexF2::boundary_from(int d) const {
  auto it = boundaries.find(d);
  if (it != boundaries.end()) return it->second;
  return MatrixF2(ungraded ? dim(d) : dim(d - 1), dim(d));
}

void ChainComplexF2::check_valid() const {
  for (auto& [d, n] : graded_dims)
    if (n < 0) throw InvalidComplex("negative dimension at grading " + std::to_string(d));
  if (ungraded) {
    if (graded_dims.size() > 1 || (graded_dims.size() == 1 && graded_dims.begin()->first != 0))
      throw InvalidComplex("ungraded complex must live in bucket 0");
    MatrixF2 d = boundary_from(0);
    if (d.rows != dim(0) || d.cols != dim(0)) throw InvalidComplex("ungraded boundary not square");
    if (!(d * d).is_zero()) throw InvalidComplex("d^2 != 0");
    return;
  }
  for (auto& [d, m] : boundaries) {
    if (m.cols != dim(d) || m.rows != dim(d - 1))
      throw InvalidComplex("boundary shape mismatch at grading " + std::to_string(d));
    MatrixF2 next = boundary_from(d + 1);
    if (!(m * next).is_zero()) throw InvalidComplex("d^2 != 0 at grading " + std::to_string(d + 1));
  }
}

MatrixF2 ChainMapF2::block(int d) const {
  auto it = blocks.find(d);
  if (it != blocks.end()) return it->second;
  return MatrixF2(target->dim(d + degree_shift), source->dim(d));
}

bool ChainMapF2::commutes() const {
  if (source->ungraded != target->ungraded) return false;
  if (source->ungraded) {
    MatrixF2 f = block(0);
    return f * source->boundary_from(0) == target->boundary_from(0) * f;
  }
  std::set<int> gradings;
  for (auto& [d, n] : source->graded_dims) gradings.insert(d);
  for (auto& [d, m] : blocks) gradings.insert(d);
  for (int d : gradings) {
    MatrixF2 lhs = target->boundary_from(d + degree_shift) * block(d);
    MatrixF2 rhs = block(d - 1) * source->boundary_from(d);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

int HomologyResult::total() const {
  int t = 0;
  for (auto& [d, n] : dims) t += n;
  return t;
}

namespace {

// cycles mod boundaries at one grading: cycle basis = ker(out), image = cols of in
std::vector<BitVec> reps_at(const MatrixF2& out, const MatrixF2& in) {
  std::vector<BitVec> cycles = kernel_basis(out);
  Gf2Solver span(out.cols);
  for (int j = 0; j < in.cols; ++j) span.add(in.column(j));
  std::vector<BitVec> reps;
  for (auto& z : cycles) {
    BitVec r = span.reduce(z);
    if (r.any()) {
      span.add(z);
      reps.push_back(z);
    }
  }
  return reps;
}

}  // namespace

HomologyResult homology(const ChainComplexF2& c) {
  c.check_valid();
  HomologyResult h;
  if (c.ungraded) {
    MatrixF2 d = c.boundary_from(0);
    auto reps = reps_at(d, d);
    h.dims[0] = (int)reps.size();
    h.reps[0] = std::move(reps);
    return h;
  }
  for (auto& [d, n] : c.graded_dims) {
    auto reps = reps_at(c.boundary_from(d), c.boundary_from(d + 1));
    h.dims[d] = (int)reps.size();
    h.reps[d] = std::move(reps);
  }
  return h;
}

BitVec express_class(const ChainComplexF2& c, const HomologyResult& h, int g, const BitVec& z) {
  MatrixF2 out = c.boundary_from(g);
  if (out.apply(z).any()) throw std::invalid_argument("express_class: not a cycle");
  MatrixF2 in = c.ungraded ? out : c.boundary_from(g + 1);
  Gf2Solver span(z.n);
  for (int j = 0; j < in.cols; ++j) span.add(in.column(j));
  int first_rep = span.inserted();
  auto it = h.reps.find(g);
  int nreps = it == h.reps.end() ? 0 : (int)it->second.size();
  for (int i = 0; i < nreps; ++i) span.add(it->second[i]);
  std::set<int> supp;
  BitVec r = span.reduce(z, &supp);
  if (r.any()) throw std::invalid_argument("express_class: cycle outside span, homology mismatch");
  BitVec coords(nreps);
  for (int i : supp)
    if (i >= first_rep) coords.set(i - first_rep);
  return coords;
}

std::map<int, MatrixF2> induced_map_on_homology(const ChainMapF2& f) {
  return induced_map_on_homology(f, homology(*f.source), homology(*f.target));
}

std::map<int, MatrixF2> induced_map_on_homology(const ChainMapF2& f, const HomologyResult& hs,
                                                const HomologyResult& ht) {
  if (!f.commutes()) throw NotChainMap("induced_map_on_homology: map does not commute with boundaries");
  std::map<int, MatrixF2> out;
  for (auto& [g, reps] : hs.reps) {
    int tg = g + f.degree_shift;
    auto itt = ht.dims.find(tg);
    int tdim = itt == ht.dims.end() ? 0 : itt->second;
    MatrixF2 m(tdim, (int)reps.size());
    for (int j = 0; j < (int)reps.size(); ++j) {
      BitVec img = f.block(g).apply(reps[j]);
      BitVec coords = express_class(*f.target, ht, tg, img);
      for (int i = 0; i < coords.n; ++i)
        if (coords.get(i)) m.entries.insert({i, j});
    }
    out[g] = std::move(m);
  }
  return out;
}

ChainComplexF2 mapping_cone(const ChainMapF2& f) {
  if (!f.commutes()) throw NotChainMap("mapping_cone: map does not commute with boundaries");
  if (f.degree_shift != 0) throw std::invalid_argument("mapping_cone: degree shift must be 0");
  const ChainComplexF2& S = *f.source;
  const ChainComplexF2& T = *f.target;
  ChainComplexF2 cone;
  if (S.ungraded != T.ungraded) throw std::invalid_argument("mapping_cone: mixed graded/ungraded");
  cone.ungraded = S.ungraded;

  auto label = [](const ChainComplexF2& c, int d, int i, const char* pre) {
    auto it = c.basis_labels.find(d);
    if (it != c.basis_labels.end() && i < (int)it->second.size()) return std::string(pre) + it->second[i];
    return std::string(pre) + std::to_string(i);
  };

  if (cone.ungraded) {
    int ns = S.dim(0), nt = T.dim(0);
    cone.graded_dims[0] = ns + nt;
    MatrixF2 d(ns + nt, ns + nt);
    for (auto& [r, c] : S.boundary_from(0).entries) d.entries.insert({r, c});
    for (auto& [r, c] : T.boundary_from(0).entries) d.entries.insert({ns + r, ns + c});
    for (auto& [r, c] : f.block(0).entries) d.entries.insert({ns + r, c});
    cone.boundaries[0] = std::move(d);
    std::vector<std::string> labels;
    for (int i = 0; i < ns; ++i) labels.push_back(label(S, 0, i, "s:"));
    for (int i = 0; i < nt; ++i) labels.push_back(label(T, 0, i, "t:"));
    cone.basis_labels[0] = std::move(labels);
    return cone;
  }

  std::set<int> gradings;
  for (auto& [d, n] : S.graded_dims) gradings.insert(d + 1);
  for (auto& [d, n] : T.graded_dims) gradings.insert(d);
  for (int d : gradings) {
    int n = S.dim(d - 1) + T.dim(d);
    if (n) cone.graded_dims[d] = n;
  }
  for (int d : gradings) {
    int ns = S.dim(d - 1), nt = T.dim(d);
    int rs = S.dim(d - 2), rt = T.dim(d - 1);
    MatrixF2 m(rs + rt, ns + nt);
    for (auto& [r, c] : S.boundary_from(d - 1).entries) m.entries.insert({r, c});
    for (auto& [r, c] : T.boundary_from(d).entries) m.entries.insert({rs + r, ns + c});
    for (auto& [r, c] : f.block(d - 1).entries) m.entries.insert({rs + r, c});
    cone.boundaries[d] = std::move(m);
    std::vector<std::string> labels;
    for (int i = 0; i < ns; ++i) labels.push_back(label(S, d - 1, i, "s:"));
    for (int i = 0; i < nt; ++i) labels.push_back(label(T, d, i, "t:"));
    cone.basis_labels[d] = std::move(labels);
  }
  return cone;
}

}  // namespace hfsurg
