#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hfsurg {

struct OutOfRange : std::runtime_error {
  explicit OutOfRange(const std::string& what) : std::runtime_error(what) {}
};

struct InconsistentInput : std::runtime_error {
  explicit InconsistentInput(const std::string& what) : std::runtime_error(what) {}
};

// Exact rational, reduced, den > 0. Intermediates widen to 128 bits and
// overflow beyond 64 bits throws.
struct Rational {
  long long num = 0;
  long long den = 1;

  static Rational of(long long n, long long d);
  Rational operator+(const Rational&) const;
  Rational operator-(const Rational&) const;
  Rational operator*(const Rational&) const;
  Rational operator/(const Rational&) const;
  bool operator==(const Rational&) const = default;
  bool operator<(const Rational&) const;
  std::string str() const;
};

// Negative continued fraction t = a1 - 1/(a2 - 1/(... )) with all ai <= -2;
// input must satisfy num/den < -1.
std::vector<long long> neg_cf(long long num, long long den);

// Positive continued fraction x/y = c1 - 1/(c2 - ...) with all ci >= 2;
// input must satisfy num > den >= 1, gcd = 1.
std::vector<long long> pos_cf(long long num, long long den);

long long eval_cf_num(const std::vector<long long>& cf, long long* den_out = nullptr);

// p = mq - r with 0 <= r < q.
void decompose_mq_r(long long p, long long q, long long* m, long long* r);

// Contact surgery bookkeeping -----------------------------------------------

struct LegendrianData {
  long long tb = 0;
  long long rot = 0;
};

struct DgsComponent {
  int index = 0;                // 0 is the original knot
  int contact_coeff = 0;        // +1 for K0, -1 for the chain
  long long stabilizations = 0;
  long long rotation = 0;
};

struct DgsPlan {
  std::vector<long long> cf;  // neg_cf of -x/(x-y); empty when x == y
  std::vector<DgsComponent> link;
  std::vector<std::vector<long long>> linking_matrix;
  long long chern_on_S = 0;  // rot*y + x - 1
};

// Plan for realizing contact x/y surgery (x/y >= 1) as a sequence of +-1
// contact surgeries on a Legendrian chain.
DgsPlan dgs_plan(const LegendrianData& l, long long x, long long y);

bool chern_identity_check(const LegendrianData& l, long long x, long long y);

// Solve M^- v = 0 for the chain's linking matrix rows (first coordinate
// normalized to -y): returns (y_0, ..., y_n).
std::vector<long long> kernel_vector(const std::vector<long long>& cf, long long x, long long y);

// Lens spaces ----------------------------------------------------------------

struct LensSpace {
  long long q = 1;  // |H1|
  long long r = 0;  // 0 <= r < q, gcd(q, r) = 1 (r = 0 only for q = 1)
};

// d(L(q, r), i) for i = 0..q-1, by the standard recursion with
// d(L(1, 0), 0) = 0.
std::vector<Rational> lens_d_invariants(long long q, long long r);

bool d_shift_check(long long q, long long r);  // d[r] - d[0] == 1 - 1/q

long long generator_square(long long m, long long q, long long c, long long r);  // q(mq - cr)

}  // namespace hfsurg
