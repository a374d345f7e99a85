#include "hfsurg/cone.hpp"

#include "hfsurg/invariants.hpp"

#include <algorithm>
#include <numeric>

namespace hfsurg {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

}  // namespace

void check_slope(const SurgerySlope& s) {
  if (s.q < 1) throw std::invalid_argument("slope: q must be >= 1");
  if (std::gcd(std::abs(s.p), s.q) != 1) throw std::invalid_argument("slope: p/q must be reduced");
}

long long spinc_chern_from_k(const SurgerySlope& s, long long k) {
  check_slope(s);
  return 2 * k - s.p - s.q + 1;
}

long long k_from_chern(const SurgerySlope& s, long long c1) {
  check_slope(s);
  long long t = c1 + s.p + s.q - 1;
  if (t % 2 != 0) throw std::invalid_argument("k_from_chern: c1 has the wrong parity for p/q");
  return t / 2;
}

const ConeComplex::Block* ConeComplex::block_of(long long k) const {
  long long res = slope.p == 0 ? k : ((k % slope.p) + std::abs(slope.p)) % std::abs(slope.p);
  for (auto& b : blocks)
    if (b.residue == res) return &b;
  return nullptr;
}

int auto_window(const KnotComplex& c, const SurgerySlope& s) {
  check_slope(s);
  int b = width(c) + 1;
  while (s.q * (2 * b + 1) < std::abs(s.p) + s.q) ++b;
  return b;
}

ConeComplex build_cone(const KnotComplex& c, const SurgerySlope& s, int window) {
  check_slope(s);
  require_valid(c);
  if (!c.has_involution())
    throw MissingInvolution("build_cone on '" + c.name + "': the h maps need an involution");
  if (window == 0) window = auto_window(c, s);
  if (window < width(c) + 1)
    throw WindowTooSmall("window " + std::to_string(window) + " < width+1 = " +
                         std::to_string(width(c) + 1));

  const long long b = window, p = s.p, q = s.q;
  ConeComplex x;
  x.slope = s;
  x.window = (int)b;

  // retained indices: A at k with floor(k/q) in [-b, b]; B at k with
  // floor(k/q) <= b and floor((k-p)/q) >= -b
  std::vector<long long> a_idx, b_idx;
  for (long long k = -b * q; k <= (b + 1) * q - 1; ++k) a_idx.push_back(k);
  {
    long long lo = std::min(-b * q, p - b * q), hi = std::max((b + 1) * q - 1, p + (b + 1) * q - 1);
    for (long long k = lo; k <= hi; ++k)
      if (floor_div(k, q) <= b && floor_div(k - p, q) >= -b) b_idx.push_back(k);
  }

  // per-level models (A_s depends on k only through s = floor(k/q))
  std::map<int, Subquotient> a_model;
  std::map<int, MatrixF2> v_blk, h_blk;
  for (int lvl = -(int)b; lvl <= (int)b; ++lvl) {
    StructureMap v = v_map(c, lvl), h = h_map(c, lvl);
    a_model.emplace(lvl, v.source);
    v_blk.emplace(lvl, v.matrix);
    h_blk.emplace(lvl, h.matrix);
  }
  Subquotient Bm = complex_B(c);
  x.b_size = Bm.cx.dim(0);

  auto residue_of = [&](long long k) { return p == 0 ? k : ((k % p) + std::llabs(p)) % std::llabs(p); };
  std::set<long long> residues;
  for (long long k : a_idx) residues.insert(residue_of(k));
  for (long long k : b_idx) residues.insert(residue_of(k));

  std::set<long long> b_set(b_idx.begin(), b_idx.end());

  for (long long res : residues) {
    ConeComplex::Block blk;
    blk.residue = res;
    int off = 0;
    std::map<long long, int> a_off, b_off;
    for (long long k : a_idx)
      if (residue_of(k) == res) {
        blk.a_cells.push_back({k, off});
        a_off[k] = off;
        off += a_model.at((int)floor_div(k, q)).cx.dim(0);
      }
    for (long long k : b_idx)
      if (residue_of(k) == res) {
        blk.b_cells.push_back({k, off});
        b_off[k] = off;
        off += x.b_size;
      }
    blk.cx.ungraded = true;
    blk.cx.graded_dims[0] = off;
    MatrixF2 d(off, off);
    std::vector<std::string> labels(off);

    for (auto& [k, o] : blk.a_cells) {
      int lvl = (int)floor_div(k, q);
      const Subquotient& A = a_model.at(lvl);
      const auto& alab = A.cx.basis_labels.at(0);
      for (int i = 0; i < A.cx.dim(0); ++i) labels[o + i] = "A[" + std::to_string(k) + "]." + alab[i];
      for (auto& [r2, c2] : A.cx.boundary_from(0).entries) d.set(o + r2, o + c2);
      // v and h can collide when p = 0, so add entries mod 2
      if (b_set.count(k))
        for (auto& [r2, c2] : v_blk.at(lvl).entries) d.toggle(b_off.at(k) + r2, o + c2);
      if (b_set.count(k + p))
        for (auto& [r2, c2] : h_blk.at(lvl).entries) d.toggle(b_off.at(k + p) + r2, o + c2);
    }
    const auto& blab = Bm.cx.basis_labels.at(0);
    for (auto& [k, o] : blk.b_cells) {
      for (int i = 0; i < x.b_size; ++i) labels[o + i] = "B[" + std::to_string(k) + "]." + blab[i];
      for (auto& [r2, c2] : Bm.cx.boundary_from(0).entries) d.set(o + r2, o + c2);
    }
    blk.cx.boundaries[0] = std::move(d);
    blk.cx.basis_labels[0] = std::move(labels);
    blk.cx.check_valid();
    blk.hom = homology(blk.cx);
    x.blocks.push_back(std::move(blk));
  }
  return x;
}

std::map<long long, int> cone_homology(const ConeComplex& x) {
  std::map<long long, int> out;
  for (auto& b : x.blocks) out[b.residue] = b.hom.total();
  return out;
}

std::map<long long, int> cone_homology(const KnotComplex& c, const SurgerySlope& s) {
  return cone_homology(build_cone(c, s));
}

HomologyClass inclusion_image(const ConeComplex& x, const KnotComplex& c, long long k) {
  const ConeComplex::Block* blk = x.block_of(k);
  const std::pair<long long, int>* cell = nullptr;
  if (blk)
    for (auto& bc : blk->b_cells)
      if (bc.first == k) cell = &bc;
  if (!cell)
    throw IndexOutsideTruncation("B summand at k=" + std::to_string(k) +
                                 " is not retained; enlarge the window");

  Subquotient Bm = complex_B(c);
  HomologyResult hb = homology(Bm.cx);
  if (hb.total() != 1)
    throw NotKnotLike("inclusion_image: dim H(B) = " + std::to_string(hb.total()) + ", expected 1");
  const BitVec& zb = hb.reps.at(0)[0];

  int n = blk->cx.dim(0);
  BitVec z(n);
  for (int i = 0; i < zb.n; ++i)
    if (zb.get(i)) z.set(cell->second + i);

  HomologyClass out;
  out.residue = blk->residue;
  out.coordinates = express_class(blk->cx, blk->hom, 0, z);
  out.is_zero = !out.coordinates.any();
  return out;
}

}  // namespace hfsurg
