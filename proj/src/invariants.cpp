#include "hfsurg/invariants.hpp"

namespace hfsurg {

namespace {

void require_knot_like(const KnotComplex& c, const HomologyResult& hb) {
  if (hb.total() != 1)
    throw NotKnotLike("complex '" + c.name + "': dim H(B) = " + std::to_string(hb.total()) +
                      ", expected 1");
}

}  // namespace

bool induces_nonzero(const StructureMap& f) {
  auto m = induced_map_on_homology(f.chain_map());
  for (auto& [g, blk] : m)
    if (!blk.is_zero()) return true;
  return false;
}

int tau(const KnotComplex& c) {
  require_valid(c);
  Subquotient B = complex_B(c);
  HomologyResult hb = homology(B.cx);
  require_knot_like(c, hb);
  int w = width(c);
  int N = (int)c.generators.size();
  for (int s = -w; s <= w; ++s) {
    // subcomplex of B spanned by A(x) <= s; closed since u0-arrows do not
    // raise the Alexander grading
    std::vector<int> pos;
    for (int i = 0; i < N; ++i)
      if (c.generators[i].alexander <= s) pos.push_back(i);
    ChainComplexF2 sub;
    sub.ungraded = true;
    sub.graded_dims[0] = (int)pos.size();
    MatrixF2 d((int)pos.size(), (int)pos.size());
    MatrixF2 incl(N, (int)pos.size());
    MatrixF2 db = B.cx.boundary_from(0);
    for (int a = 0; a < (int)pos.size(); ++a) {
      incl.set(pos[a], a);
      for (int b = 0; b < (int)pos.size(); ++b)
        if (db.at(pos[a], pos[b])) d.set(a, b);
    }
    sub.boundaries[0] = std::move(d);
    ChainMapF2 f;
    f.source = &sub;
    f.target = &B.cx;
    f.blocks[0] = incl;
    auto induced = induced_map_on_homology(f, homology(sub), hb);
    for (auto& [g, blk] : induced)
      if (!blk.is_zero()) return s;
  }
  throw NotKnotLike("complex '" + c.name + "': full filtration never surjects onto H(B)");
}

int nu(const KnotComplex& c) {
  require_valid(c);
  {
    HomologyResult hb = homology(complex_B(c).cx);
    require_knot_like(c, hb);
  }
  int w = width(c);
  int found = w + 2;
  for (int s = -w - 1; s <= w + 1; ++s) {
    bool onto = induces_nonzero(v_map(c, s));
    if (onto && s < found) found = s;
    // monotonicity: trivial below nu, surjective at and above
    if (found <= w + 1 && s >= found && !onto)
      throw InvalidComplex("v_s monotonicity violated for '" + c.name + "' at s=" + std::to_string(s));
  }
  if (found > w + 1)
    throw InvalidComplex("v_s never surjective for '" + c.name + "'");
  return found;
}

int epsilon(const KnotComplex& c) {
  int t = tau(c);
  bool v_onto = induces_nonzero(v_map(c, t));
  bool vp_onto = induces_nonzero(v_prime_map(c, t));
  if (v_onto && !vp_onto) return 1;
  if (v_onto && vp_onto) return 0;
  if (!v_onto && vp_onto) return -1;
  throw EpsilonUndetermined("complex '" + c.name + "': v_tau and v'_tau both trivial");
}

InvariantReport invariants(const KnotComplex& c) {
  InvariantReport r;
  r.tau = tau(c);
  r.nu = nu(c);
  r.epsilon = epsilon(c);
  r.width = width(c);
  return r;
}

}  // namespace hfsurg
