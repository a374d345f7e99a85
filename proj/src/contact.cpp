#include "hfsurg/contact.hpp"

#include <numeric>

namespace hfsurg {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

void check_contact_coeff(long long x, long long y) {
  if (y < 1 || x < y || std::gcd(x, y) != 1)
    throw std::invalid_argument("contact coefficient must be x/y >= 1 in lowest terms");
}

}  // namespace

SurgerySlope smooth_slope(const LegendrianData& l, long long x, long long y) {
  check_contact_coeff(x, y);
  SurgerySlope s{x + y * l.tb, y};
  long long g = std::gcd(std::llabs(s.p), s.q);
  if (g > 1) {
    s.p /= g;
    s.q /= g;
  }
  return s;
}

long long cone_k_index(const LegendrianData& l, const SurgerySlope& s) {
  long long t = (l.rot - l.tb + 1) * s.q - 2;
  if (t % 2 != 0)
    throw std::invalid_argument("cone_k_index: (rot - tb + 1)q is odd; tb + rot must be odd");
  return t / 2;
}

void check_legendrian(const LegendrianData& l, int tau_value) {
  if ((l.tb + l.rot) % 2 == 0)
    throw NotLegendrianRealizable("tb + rot must be odd");
  if (l.tb + std::llabs(l.rot) > 2 * (long long)tau_value - 1)
    throw NotLegendrianRealizable("Bennequin-type bound violated: tb + |rot| > 2 tau - 1");
}

bool decide_nonzero(const KnotComplex& c, const LegendrianData& l, long long x, long long y) {
  check_contact_coeff(x, y);
  int t = tau(c);
  check_legendrian(l, t);
  if (l.tb - l.rot < 2 * (long long)t - 1) return false;
  // tb - rot == 2 tau - 1 from here on
  SurgerySlope s = smooth_slope(l, x, y);
  int e = epsilon(c);
  switch (e) {
    case 1:
      return s.p > (2 * (long long)t - 1) * s.q;
    case 0:
      return s.p >= 2 * (long long)t * s.q;
    default:
      return false;
  }
}

ContactComputation compute_contact_invariant(const KnotComplex& c, const LegendrianData& l,
                                             long long x, long long y) {
  check_contact_coeff(x, y);
  ContactComputation out;
  out.surgery = smooth_slope(l, x, y);
  // reduction must not be needed: gcd(x + y*tb, y) = gcd(x, y) = 1 already
  out.k = cone_k_index(l, out.surgery);

  KnotComplex m = mirror(c);
  SurgerySlope cone_slope{-out.surgery.p, out.surgery.q};
  long long b = auto_window(m, cone_slope);
  b = std::max(b, floor_div(out.k, cone_slope.q));
  b = std::max(b, -floor_div(out.k - cone_slope.p, cone_slope.q));
  ConeComplex x_cone = build_cone(m, cone_slope, (int)b);
  out.cls = inclusion_image(x_cone, m, out.k);
  out.nonzero = !out.cls.is_zero;
  return out;
}

ContactReport contact_report(const KnotComplex& c, const LegendrianData& l, long long x, long long y) {
  ContactReport r;
  r.tau = tau(c);
  r.epsilon = epsilon(c);
  r.surgery = smooth_slope(l, x, y);
  r.k = cone_k_index(l, r.surgery);
  r.decided_nonzero = decide_nonzero(c, l, x, y);
  ContactComputation comp = compute_contact_invariant(c, l, x, y);
  r.computed_nonzero = comp.nonzero;
  r.agree = (r.decided_nonzero == r.computed_nonzero);
  return r;
}

}  // namespace hfsurg
