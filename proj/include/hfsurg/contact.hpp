#pragma once

#include "hfsurg/arith.hpp"
#include "hfsurg/cone.hpp"
#include "hfsurg/invariants.hpp"

namespace hfsurg {

struct NotLegendrianRealizable : std::runtime_error {
  explicit NotLegendrianRealizable(const std::string& what) : std::runtime_error(what) {}
};

// Smooth surgery coefficient of contact x/y surgery on a tb-framed knot:
// p/q = (x + y*tb)/y.
SurgerySlope smooth_slope(const LegendrianData& l, long long x, long long y);

// Index of the spin^c summand carrying the contact class:
// k = ((rot - tb + 1)q - 2)/2.
long long cone_k_index(const LegendrianData& l, const SurgerySlope& s);

// Checks that (tb, rot) is admissible for a complex with the given tau:
// tb + |rot| <= 2 tau - 1 and tb + rot odd.
void check_legendrian(const LegendrianData& l, int tau_value);

// Closed-form verdict for non-vanishing of the contact invariant of
// contact x/y surgery (x/y >= 1), in terms of tau and epsilon.
bool decide_nonzero(const KnotComplex& c, const LegendrianData& l, long long x, long long y);

// Same question decided on the mapping cone: the class of (k, B) in
// X_{-p/q}(mirror complex).
struct ContactComputation {
  SurgerySlope surgery;       // p/q on the original knot
  long long k = 0;
  HomologyClass cls;          // in the cone for the mirror at slope -p/q
  bool nonzero = false;
};

ContactComputation compute_contact_invariant(const KnotComplex& c, const LegendrianData& l,
                                             long long x, long long y);

struct ContactReport {
  SurgerySlope surgery;
  long long k = 0;
  bool decided_nonzero = false;
  bool computed_nonzero = false;
  bool agree = false;
  int tau = 0;
  int epsilon = 0;
};

ContactReport contact_report(const KnotComplex& c, const LegendrianData& l, long long x, long long y);

}  // namespace hfsurg
