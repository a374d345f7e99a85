#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hfsurg/invariants.hpp"

using namespace hfsurg;

namespace {

KnotComplex unknot() {
  KnotComplex c;
  c.name = "unknot";
  c.generators = {{"u", 0, 0}};
  c.involution = {{"u", "u"}};
  return c;
}

std::vector<KnotComplex> fixture_knots() {
  return {unknot(),
          staircase({1, 1}),
          mirror(staircase({1, 1})),
          direct_sum(unknot(), box(0, 0)),
          staircase({1, 1, 1, 1}),
          mirror(staircase({1, 1, 1, 1})),
          direct_sum(staircase({1, 1, 1, 1}), box(0, -1))};
}

}  // namespace

TEST_CASE("tau on the standard models") {
  CHECK(tau(unknot()) == 0);
  CHECK(tau(staircase({1, 1})) == 1);
  CHECK(tau(mirror(staircase({1, 1}))) == -1);
  CHECK(tau(direct_sum(unknot(), box(0, 0))) == 0);
  CHECK(tau(staircase({1, 1, 1, 1})) == 2);
  CHECK(tau(mirror(staircase({1, 1, 1, 1}))) == -2);
  CHECK(tau(direct_sum(staircase({1, 1, 1, 1}), box(0, -1))) == 2);
  CHECK(tau(tensor(staircase({1, 1}), staircase({1, 1}))) == 2);
}

TEST_CASE("nu on the standard models") {
  CHECK(nu(unknot()) == 0);
  CHECK(nu(staircase({1, 1})) == 1);
  CHECK(nu(mirror(staircase({1, 1}))) == 0);
  CHECK(nu(staircase({1, 1, 1, 1})) == 2);
  CHECK(nu(mirror(staircase({1, 1, 1, 1}))) == -1);
  CHECK(nu(direct_sum(unknot(), box(0, 0))) == 0);
  CHECK(nu(direct_sum(staircase({1, 1, 1, 1}), box(0, -1))) == 2);
}

TEST_CASE("epsilon on the standard models") {
  CHECK(epsilon(unknot()) == 0);
  CHECK(epsilon(staircase({1, 1})) == 1);
  CHECK(epsilon(mirror(staircase({1, 1}))) == -1);
  CHECK(epsilon(direct_sum(unknot(), box(0, 0))) == 0);
  CHECK(epsilon(staircase({1, 1, 1, 1})) == 1);
  CHECK(epsilon(mirror(staircase({1, 1, 1, 1}))) == -1);
  CHECK(epsilon(direct_sum(staircase({1, 1, 1, 1}), box(0, -1))) == 1);
}

TEST_CASE("mirror flips tau and epsilon") {
  for (const KnotComplex& c : fixture_knots()) {
    KnotComplex m = mirror(c);
    CHECK(tau(m) == -tau(c));
    CHECK(epsilon(m) == -epsilon(c));
  }
}

TEST_CASE("nu is tau or tau + 1") {
  for (const KnotComplex& c : fixture_knots()) {
    int t = tau(c), n = nu(c);
    CHECK((n == t || n == t + 1));
  }
}

TEST_CASE("epsilon determines the nu/tau relation") {
  // v_tau is trivial exactly when epsilon = -1, so nu = tau + 1 then and
  // nu = tau otherwise
  for (const KnotComplex& c : fixture_knots()) {
    int e = epsilon(c);
    if (e == -1)
      CHECK(nu(c) == tau(c) + 1);
    else
      CHECK(nu(c) == tau(c));
  }
}

TEST_CASE("epsilon zero forces tau zero for these models") {
  for (const KnotComplex& c : fixture_knots())
    if (epsilon(c) == 0) CHECK(tau(c) == 0);
}

TEST_CASE("complexes with larger vertical homology are rejected") {
  // two unknot summands: dim H(B) = 2
  KnotComplex c = direct_sum(unknot(), unknot());
  CHECK_THROWS_AS(tau(c), NotKnotLike);
  CHECK_THROWS_AS(nu(c), NotKnotLike);
  CHECK_THROWS_AS(epsilon(c), NotKnotLike);
}

TEST_CASE("invariants report") {
  InvariantReport r = invariants(direct_sum(staircase({1, 1, 1, 1}), box(0, -1)));
  CHECK(r.tau == 2);
  CHECK(r.nu == 2);
  CHECK(r.epsilon == 1);
  CHECK(r.width == 2);
}
