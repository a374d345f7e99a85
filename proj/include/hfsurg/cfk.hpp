#pragma once

#include <map>
#include <string>
#include <vector>

#include "hfsurg/gf2.hpp"

namespace hfsurg {

struct MissingInvolution : std::runtime_error {
  explicit MissingInvolution(const std::string& what) : std::runtime_error(what) {}
};

// One generator of a reduced model of CFK^infinity over F2.
struct Generator {
  std::string label;
  int alexander = 0;
  int maslov = 0;
};

// Differential component x -> U^{u_power} y.
struct Arrow {
  std::string from;
  std::string to;
  int u_power = 0;
};

struct KnotComplex {
  std::string name;
  std::vector<Generator> generators;
  std::vector<Arrow> arrows;
  std::map<std::string, std::string> involution;  // empty means "not provided"

  int index_of(const std::string& label) const;  // -1 if absent
  bool has_involution() const { return !involution.empty(); }
};

struct Diagnostics {
  bool ok = true;
  std::vector<std::string> issues;
};

// Structural checks: labels, arrow legality (u >= 0 and u >= A(y)-A(x)),
// Maslov drop by one, d^2 = 0 with U-exponent bookkeeping, and (when given)
// the involution contract: an A-reversing, arrow-compatible involution.
Diagnostics validate(const KnotComplex& c);
void require_valid(const KnotComplex& c);  // throws InvalidComplex on first issue

int width(const KnotComplex& c);  // max |A(x)|

// Model builders ------------------------------------------------------------

// Staircase complex with the given positive step lengths (even count,
// palindromic); 2m+1 generators a0, b1, a1, ..., bm, am. The filtration-
// reversing involution is populated automatically.
KnotComplex staircase(const std::vector<int>& steps);

// Square (box) summand centered at Alexander grading s with top Maslov
// grading m: generators e1 -> e2, e1 -> U e3, e2 -> U e4, e3 -> e4.
KnotComplex box(int s, int m);

KnotComplex mirror(const KnotComplex& c);
KnotComplex tensor(const KnotComplex& a, const KnotComplex& b);
KnotComplex direct_sum(const KnotComplex& a, const KnotComplex& b);

// Subquotients ---------------------------------------------------------------

enum class SubquotientKind { A, APrime, B };

// A fixed subquotient of the plane complex, presented as an ungraded
// F2 complex. Position i carries U^{u_power[i]} * generators[gen[i]].
struct Subquotient {
  SubquotientKind kind = SubquotientKind::B;
  int level = 0;  // s, unused for B
  ChainComplexF2 cx;
  std::vector<int> gen;
  std::vector<int> u_power;
};

Subquotient complex_B(const KnotComplex& c);        // hat flavor C{i=0}
Subquotient complex_A(const KnotComplex& c, int s);  // C{max(i, j-s)=0}
Subquotient complex_A_prime(const KnotComplex& c, int s);  // C{min(i, j-s)=0}

// Structure maps; source/target are owned so the chain-map view stays valid.
struct StructureMap {
  Subquotient source;
  Subquotient target;
  MatrixF2 matrix;  // target positions x source positions

  ChainMapF2 chain_map() const;  // view into *this; keep the object alive
};

StructureMap v_map(const KnotComplex& c, int s);        // A_s -> B
StructureMap h_map(const KnotComplex& c, int s);        // A_s -> B (needs involution)
StructureMap v_prime_map(const KnotComplex& c, int s);  // B -> A'_s

}  // namespace hfsurg
