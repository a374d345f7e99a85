#include "hfsurg/arith.hpp"

#include <numeric>

namespace hfsurg {

namespace {

long long narrow(__int128 v, const char* ctx) {
  if (v > INT64_MAX || v < INT64_MIN) throw OutOfRange(std::string(ctx) + ": 64-bit overflow");
  return (long long)v;
}

long long floor_div(long long a, long long b) {
  long long q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

}  // namespace

Rational Rational::of(long long n, long long d) {
  if (d == 0) throw std::invalid_argument("Rational: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  long long g = std::gcd(n < 0 ? -n : n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  return {n, d};
}

Rational Rational::operator+(const Rational& o) const {
  __int128 n = (__int128)num * o.den + (__int128)o.num * den;
  __int128 d = (__int128)den * o.den;
  // reduce in 128 bits before narrowing
  __int128 a = n < 0 ? -n : n, b = d;
  while (b) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    n /= a;
    d /= a;
  }
  return {narrow(n, "Rational+"), narrow(d, "Rational+")};
}

Rational Rational::operator-(const Rational& o) const { return *this + Rational{-o.num, o.den}; }

Rational Rational::operator*(const Rational& o) const {
  __int128 n = (__int128)num * o.num, d = (__int128)den * o.den;
  __int128 a = n < 0 ? -n : n, b = d;
  while (b) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    n /= a;
    d /= a;
  }
  return {narrow(n, "Rational*"), narrow(d, "Rational*")};
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num == 0) throw std::invalid_argument("Rational: division by zero");
  Rational inv = o.num < 0 ? Rational{-o.den, -o.num} : Rational{o.den, o.num};
  return *this * inv;
}

bool Rational::operator<(const Rational& o) const {
  return (__int128)num * o.den < (__int128)o.num * den;
}

std::string Rational::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::vector<long long> neg_cf(long long num, long long den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (den == 0 || num >= -den) throw OutOfRange("neg_cf: input must be < -1");
  std::vector<long long> out;
  while (true) {
    long long a = floor_div(num, den);
    out.push_back(a);
    long long rem = num - a * den;  // in [0, den)
    if (rem == 0) break;
    num = -den;
    den = rem;
  }
  for (long long a : out)
    if (a > -2) throw OutOfRange("neg_cf: internal error, coefficient > -2");
  return out;
}

std::vector<long long> pos_cf(long long num, long long den) {
  if (den < 1 || num <= den) throw OutOfRange("pos_cf: need num > den >= 1");
  if (std::gcd(num, den) != 1) throw OutOfRange("pos_cf: fraction must be reduced");
  std::vector<long long> out;
  while (true) {
    long long b = (num + den - 1) / den;  // ceiling
    out.push_back(b);
    long long rem = b * den - num;  // in [0, den)
    if (rem == 0) break;
    num = den;
    den = rem;
  }
  return out;
}

long long eval_cf_num(const std::vector<long long>& cf, long long* den_out) {
  Rational t{cf.back(), 1};
  for (int i = (int)cf.size() - 2; i >= 0; --i)
    t = Rational{cf[i], 1} - Rational{1, 1} / t;
  if (den_out) *den_out = t.den;
  return t.num;
}

void decompose_mq_r(long long p, long long q, long long* m, long long* r) {
  if (q < 1) throw std::invalid_argument("decompose_mq_r: q must be >= 1");
  long long rr = ((-p) % q + q) % q;
  *r = rr;
  *m = (p + rr) / q;
}

DgsPlan dgs_plan(const LegendrianData& l, long long x, long long y) {
  if (y < 1 || x < y || std::gcd(x, y) != 1)
    throw std::invalid_argument("dgs_plan: need x/y >= 1 in lowest terms, y >= 1");
  DgsPlan plan;
  plan.chern_on_S = narrow((__int128)l.rot * y + x - 1, "dgs_plan");
  plan.link.push_back({0, +1, 0, l.rot});
  if (x == y) {
    plan.linking_matrix = {{l.tb + 1}};
    return plan;
  }
  plan.cf = neg_cf(-x, x - y);
  int n = (int)plan.cf.size();
  long long acc = 0;
  for (int j = 1; j <= n; ++j) {
    long long a = plan.cf[j - 1];
    acc += a;
    long long stab = j == 1 ? std::llabs(a + 1) : std::llabs(a + 2);
    plan.link.push_back({j, -1, stab, l.rot + acc + 2 * j - 1});
  }
  plan.linking_matrix.assign(n + 1, std::vector<long long>(n + 1, 0));
  plan.linking_matrix[0][0] = l.tb + 1;
  plan.linking_matrix[1][1] = plan.cf[0] + 1;
  for (int j = 2; j <= n; ++j) plan.linking_matrix[j][j] = plan.cf[j - 1];
  plan.linking_matrix[0][1] = plan.linking_matrix[1][0] = -1;
  for (int j = 1; j < n; ++j) plan.linking_matrix[j][j + 1] = plan.linking_matrix[j + 1][j] = 1;
  return plan;
}

bool chern_identity_check(const LegendrianData& l, long long x, long long y) {
  __int128 lhs = (__int128)l.rot * y + x - 1;
  __int128 p = (__int128)x + (__int128)y * l.tb;
  __int128 rhs = p + (__int128)(l.rot - l.tb) * y - 1;
  return lhs == rhs;
}

std::vector<long long> kernel_vector(const std::vector<long long>& cf, long long x, long long y) {
  int n = (int)cf.size();
  std::vector<long long> v(n + 1, 0);
  if (n == 0) {
    if (x != y) throw InconsistentInput("kernel_vector: empty chain needs x == y");
    v[0] = -y;
    return v;
  }
  // back-substitute rows j = n..2 of the chain's linking matrix, then row 1
  std::vector<long long> ext(n + 2, 0);  // ext[j] = y_j, ext[n+1] = 0
  ext[n] = 1;
  for (int j = n; j >= 2; --j)
    ext[j - 1] = narrow(-(__int128)cf[j - 1] * ext[j] - ext[j + 1], "kernel_vector");
  ext[0] = narrow((__int128)(cf[0] + 1) * ext[1] + ext[2], "kernel_vector");
  for (int j = 0; j <= n; ++j) v[j] = ext[j];

  // M^- v = 0: row 0 is (-1, a1+1, 1, 0, ...); row j >= 2 is (..., 1, a_j, 1, ...)
  {
    __int128 r0 = -(__int128)v[0] + (__int128)(cf[0] + 1) * v[1] + (n >= 2 ? v[2] : 0);
    if (r0 != 0) throw InconsistentInput("kernel_vector: row 0 not annihilated");
    for (int j = 2; j <= n; ++j) {
      __int128 rj = (__int128)v[j - 1] + (__int128)cf[j - 1] * v[j] + (j + 1 <= n ? v[j + 1] : 0);
      if (rj != 0) throw InconsistentInput("kernel_vector: chain row not annihilated");
    }
  }
  if (v[0] != -y || v[1] != x - y)
    throw InconsistentInput("kernel_vector: endpoints disagree with x/y (got y0=" +
                            std::to_string(v[0]) + ", y1=" + std::to_string(v[1]) + ")");
  return v;
}

namespace {

Rational lens_d(long long q, long long r, long long i) {
  if (r == 0) {
    if (q != 1) throw std::invalid_argument("lens_d: r = 0 requires q = 1");
    return Rational{0, 1};
  }
  __int128 t = 2 * i + 1 - q - r;
  Rational term = Rational::of(narrow((__int128)q * r - t * t, "lens_d"),
                               narrow((__int128)4 * q * r, "lens_d"));
  return term - lens_d(r, q % r, i % r);
}

}  // namespace

std::vector<Rational> lens_d_invariants(long long q, long long r) {
  if (q < 1) throw std::invalid_argument("lens_d_invariants: need q >= 1");
  if (q == 1 && r != 0) throw std::invalid_argument("lens_d_invariants: L(1, r) needs r = 0");
  if (q > 1 && (r < 1 || r >= q || std::gcd(q, r) != 1))
    throw std::invalid_argument("lens_d_invariants: need gcd(q, r) = 1, 1 <= r < q");
  std::vector<Rational> out;
  out.reserve(q);
  for (long long i = 0; i < q; ++i) out.push_back(lens_d(q, r, i));
  return out;
}

bool d_shift_check(long long q, long long r) {
  auto d = lens_d_invariants(q, r);
  if (q == 1) return true;
  return d[r] - d[0] == Rational::of(q - 1, q);
}

long long generator_square(long long m, long long q, long long c, long long r) {
  return narrow((__int128)q * ((__int128)m * q - (__int128)c * r), "generator_square");
}

}  // namespace hfsurg
