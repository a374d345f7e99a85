#include "hfsurg/cfk.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace hfsurg {

int KnotComplex::index_of(const std::string& label) const {
  for (int i = 0; i < (int)generators.size(); ++i)
    if (generators[i].label == label) return i;
  return -1;
}

Diagnostics validate(const KnotComplex& c) {
  Diagnostics d;
  auto fail = [&](const std::string& msg) {
    d.ok = false;
    d.issues.push_back(msg);
  };

  std::set<std::string> seen;
  for (auto& g : c.generators) {
    if (g.label.empty()) fail("empty generator label");
    if (!seen.insert(g.label).second) fail("duplicate generator label '" + g.label + "'");
  }

  std::set<std::tuple<std::string, std::string, int>> arrow_set;
  for (auto& a : c.arrows) {
    int i = c.index_of(a.from), j = c.index_of(a.to);
    if (i < 0 || j < 0) {
      fail("arrow references unknown generator '" + (i < 0 ? a.from : a.to) + "'");
      continue;
    }
    if (!arrow_set.insert({a.from, a.to, a.u_power}).second)
      fail("duplicate arrow " + a.from + " -> U^" + std::to_string(a.u_power) + " " + a.to);
    const Generator &x = c.generators[i], &y = c.generators[j];
    if (a.u_power < 0) fail("negative U power on arrow " + a.from + " -> " + a.to);
    if (a.u_power < y.alexander - x.alexander)
      fail("arrow " + a.from + " -> " + a.to + " violates the filtration (u < A(to)-A(from))");
    if (y.maslov - 2 * a.u_power != x.maslov - 1)
      fail("arrow " + a.from + " -> " + a.to + " does not drop Maslov grading by one");
  }
  if (!d.ok) return d;

  // d^2 = 0 with U-exponent bookkeeping
  std::map<int, std::vector<std::pair<int, int>>> out;  // gen -> (target, u)
  for (auto& a : c.arrows) out[c.index_of(a.from)].push_back({c.index_of(a.to), a.u_power});
  for (int i = 0; i < (int)c.generators.size(); ++i) {
    std::map<std::pair<int, int>, int> paths;  // (end, total u) -> count
    for (auto& [m, u1] : out[i])
      for (auto& [e, u2] : out[m]) paths[{e, u1 + u2}]++;
    for (auto& [key, cnt] : paths)
      if (cnt % 2)
        fail("d^2 != 0 starting from '" + c.generators[i].label + "' (hits U^" +
             std::to_string(key.second) + " " + c.generators[key.first].label + ")");
  }

  if (c.has_involution()) {
    for (auto& g : c.generators)
      if (!c.involution.count(g.label)) fail("involution missing generator '" + g.label + "'");
    for (auto& [k, v] : c.involution) {
      int i = c.index_of(k), j = c.index_of(v);
      if (i < 0 || j < 0) {
        fail("involution references unknown generator");
        continue;
      }
      auto it = c.involution.find(v);
      if (it == c.involution.end() || it->second != k) fail("involution is not an involution at '" + k + "'");
      if (c.generators[j].alexander != -c.generators[i].alexander)
        fail("involution does not reverse Alexander grading at '" + k + "'");
    }
    if (d.ok) {
      for (auto& a : c.arrows) {
        const Generator &x = c.generators[c.index_of(a.from)], &y = c.generators[c.index_of(a.to)];
        int u2 = a.u_power + x.alexander - y.alexander;
        if (!arrow_set.count({c.involution.at(a.from), c.involution.at(a.to), u2}))
          fail("involution does not carry arrow " + a.from + " -> " + a.to + " to an arrow");
      }
    }
  }
  return d;
}

void require_valid(const KnotComplex& c) {
  Diagnostics d = validate(c);
  if (!d.ok) {
    std::string all;
    for (auto& s : d.issues) all += (all.empty() ? "" : "; ") + s;
    throw InvalidComplex("complex '" + c.name + "': " + all);
  }
}

int width(const KnotComplex& c) {
  int w = 0;
  for (auto& g : c.generators) w = std::max(w, std::abs(g.alexander));
  return w;
}

KnotComplex staircase(const std::vector<int>& steps) {
  if (steps.empty() || steps.size() % 2 != 0)
    throw std::invalid_argument("staircase: need an even, positive number of steps");
  for (int s : steps)
    if (s <= 0) throw std::invalid_argument("staircase: step lengths must be positive");

  int m = (int)steps.size() / 2;
  KnotComplex c;
  c.name = "staircase";
  // a0 sits at the top Alexander grading; then alternate vertical/horizontal drops
  int genus = 0;
  for (int i = 0; i < (int)steps.size(); i += 2) genus += steps[i];

  std::vector<int> A(2 * m + 1), M(2 * m + 1);  // order a0, b1, a1, b2, a2, ...
  A[0] = genus;
  M[0] = 0;
  for (int k = 1; k <= m; ++k) {
    int v = steps[2 * k - 2], h = steps[2 * k - 1];
    A[2 * k - 1] = A[2 * k - 2] - v;  // b_k
    A[2 * k] = A[2 * k - 1] - h;      // a_k
    M[2 * k - 1] = M[2 * k - 2] - 2 * v + 1;
    M[2 * k] = M[2 * k - 1] - 1;
  }
  auto name_of = [](int pos) {
    return (pos % 2 == 0) ? "a" + std::to_string(pos / 2) : "b" + std::to_string((pos + 1) / 2);
  };
  for (int pos = 0; pos <= 2 * m; ++pos) c.generators.push_back({name_of(pos), A[pos], M[pos]});
  for (int k = 1; k <= m; ++k) {
    c.arrows.push_back({name_of(2 * k - 1), name_of(2 * k - 2), steps[2 * k - 2]});
    c.arrows.push_back({name_of(2 * k - 1), name_of(2 * k), 0});
  }

  bool palindrome = std::equal(steps.begin(), steps.end(), steps.rbegin());
  if (palindrome) {
    for (int k = 0; k <= m; ++k) c.involution[name_of(2 * k)] = name_of(2 * (m - k));
    for (int k = 1; k <= m; ++k) c.involution[name_of(2 * k - 1)] = name_of(2 * (m + 1 - k) - 1);
  }
  require_valid(c);
  return c;
}

KnotComplex box(int s, int m) {
  KnotComplex c;
  c.name = "box";
  c.generators = {{"e1", s, m}, {"e2", s - 1, m - 1}, {"e3", s + 1, m + 1}, {"e4", s, m}};
  c.arrows = {{"e1", "e2", 0}, {"e1", "e3", 1}, {"e2", "e4", 1}, {"e3", "e4", 0}};
  if (s == 0) c.involution = {{"e1", "e1"}, {"e2", "e3"}, {"e3", "e2"}, {"e4", "e4"}};
  require_valid(c);
  return c;
}

KnotComplex mirror(const KnotComplex& c) {
  require_valid(c);
  KnotComplex out;
  out.name = "mirror(" + c.name + ")";
  for (auto& g : c.generators) out.generators.push_back({g.label, -g.alexander, -g.maslov});
  for (auto& a : c.arrows) out.arrows.push_back({a.to, a.from, a.u_power});
  out.involution = c.involution;
  require_valid(out);
  return out;
}

KnotComplex tensor(const KnotComplex& a, const KnotComplex& b) {
  require_valid(a);
  require_valid(b);
  KnotComplex out;
  out.name = a.name + "*" + b.name;
  auto join = [](const std::string& x, const std::string& y) { return x + "|" + y; };
  for (auto& x : a.generators)
    for (auto& y : b.generators)
      out.generators.push_back({join(x.label, y.label), x.alexander + y.alexander, x.maslov + y.maslov});
  for (auto& ar : a.arrows)
    for (auto& y : b.generators) out.arrows.push_back({join(ar.from, y.label), join(ar.to, y.label), ar.u_power});
  for (auto& x : a.generators)
    for (auto& br : b.arrows) out.arrows.push_back({join(x.label, br.from), join(x.label, br.to), br.u_power});
  if (a.has_involution() && b.has_involution())
    for (auto& x : a.generators)
      for (auto& y : b.generators)
        out.involution[join(x.label, y.label)] = join(a.involution.at(x.label), b.involution.at(y.label));
  require_valid(out);
  return out;
}

KnotComplex direct_sum(const KnotComplex& a, const KnotComplex& b) {
  require_valid(a);
  require_valid(b);
  KnotComplex out;
  out.name = a.name + "+" + b.name;
  // disambiguate colliding labels from the second summand with a prime
  std::set<std::string> taken;
  for (auto& g : a.generators) taken.insert(g.label);
  std::map<std::string, std::string> ren;
  for (auto& g : b.generators) {
    std::string l = g.label;
    while (taken.count(l)) l += "'";
    taken.insert(l);
    ren[g.label] = l;
  }
  out.generators = a.generators;
  for (auto& g : b.generators) out.generators.push_back({ren[g.label], g.alexander, g.maslov});
  out.arrows = a.arrows;
  for (auto& ar : b.arrows) out.arrows.push_back({ren[ar.from], ren[ar.to], ar.u_power});
  if (a.has_involution() && b.has_involution()) {
    out.involution = a.involution;
    for (auto& [k, v] : b.involution) out.involution[ren[k]] = ren[v];
  }
  require_valid(out);
  return out;
}

namespace {

// U exponents n[x] determine a subquotient: keep arrow x -> U^u y iff
// n[x] + u = n[y].
Subquotient make_subquotient(const KnotComplex& c, SubquotientKind kind, int level,
                             const std::vector<int>& n) {
  require_valid(c);
  Subquotient sq;
  sq.kind = kind;
  sq.level = level;
  int N = (int)c.generators.size();
  sq.gen.resize(N);
  sq.u_power = n;
  for (int i = 0; i < N; ++i) sq.gen[i] = i;
  sq.cx.ungraded = true;
  sq.cx.graded_dims[0] = N;
  MatrixF2 d(N, N);
  for (auto& a : c.arrows) {
    int i = c.index_of(a.from), j = c.index_of(a.to);
    if (n[i] + a.u_power == n[j]) d.set(j, i);
  }
  sq.cx.boundaries[0] = std::move(d);
  std::vector<std::string> labels(N);
  for (int i = 0; i < N; ++i) {
    labels[i] = n[i] == 0 ? c.generators[i].label
                          : "U^" + std::to_string(n[i]) + "." + c.generators[i].label;
  }
  sq.cx.basis_labels[0] = std::move(labels);
  sq.cx.check_valid();
  return sq;
}

}  // namespace

Subquotient complex_B(const KnotComplex& c) {
  std::vector<int> n(c.generators.size(), 0);
  return make_subquotient(c, SubquotientKind::B, 0, n);
}

Subquotient complex_A(const KnotComplex& c, int s) {
  std::vector<int> n(c.generators.size());
  for (size_t i = 0; i < n.size(); ++i) n[i] = std::max(0, c.generators[i].alexander - s);
  return make_subquotient(c, SubquotientKind::A, s, n);
}

Subquotient complex_A_prime(const KnotComplex& c, int s) {
  std::vector<int> n(c.generators.size());
  for (size_t i = 0; i < n.size(); ++i) n[i] = std::min(0, c.generators[i].alexander - s);
  return make_subquotient(c, SubquotientKind::APrime, s, n);
}

ChainMapF2 StructureMap::chain_map() const {
  ChainMapF2 f;
  f.source = &source.cx;
  f.target = &target.cx;
  f.blocks[0] = matrix;
  return f;
}

StructureMap v_map(const KnotComplex& c, int s) {
  StructureMap f;
  f.source = complex_A(c, s);
  f.target = complex_B(c);
  int N = (int)c.generators.size();
  f.matrix = MatrixF2(N, N);
  for (int i = 0; i < N; ++i)
    if (c.generators[i].alexander <= s) f.matrix.set(i, i);
  if (!f.chain_map().commutes()) throw NotChainMap("v_map does not commute");
  return f;
}

StructureMap h_map(const KnotComplex& c, int s) {
  if (!c.has_involution())
    throw MissingInvolution("h_map on '" + c.name + "': no involution provided");
  StructureMap f;
  f.source = complex_A(c, s);
  f.target = complex_B(c);
  int N = (int)c.generators.size();
  f.matrix = MatrixF2(N, N);
  for (int i = 0; i < N; ++i)
    if (c.generators[i].alexander >= s) f.matrix.set(c.index_of(c.involution.at(c.generators[i].label)), i);
  if (!f.chain_map().commutes()) throw NotChainMap("h_map does not commute");
  return f;
}

StructureMap v_prime_map(const KnotComplex& c, int s) {
  StructureMap f;
  f.source = complex_B(c);
  f.target = complex_A_prime(c, s);
  int N = (int)c.generators.size();
  f.matrix = MatrixF2(N, N);
  for (int i = 0; i < N; ++i)
    if (c.generators[i].alexander >= s) f.matrix.set(i, i);
  if (!f.chain_map().commutes()) throw NotChainMap("v_prime_map does not commute");
  return f;
}

}  // namespace hfsurg
