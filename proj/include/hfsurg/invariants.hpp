#pragma once

#include "hfsurg/cfk.hpp"

namespace hfsurg {

struct NotKnotLike : std::runtime_error {
  explicit NotKnotLike(const std::string& what) : std::runtime_error(what) {}
};

struct EpsilonUndetermined : std::runtime_error {
  explicit EpsilonUndetermined(const std::string& what) : std::runtime_error(what) {}
};

// Whether f induces a nonzero map on homology. With dim H = 1 on the
// relevant side this decides surjectivity / triviality of the induced map.
bool induces_nonzero(const StructureMap& f);

int tau(const KnotComplex& c);      // min s with H(C{i=0, j<=s}) -> H(B) onto
int nu(const KnotComplex& c);       // min s with v_s onto in homology
int epsilon(const KnotComplex& c);  // from (v_tau, v'_tau); in {-1, 0, 1}

struct InvariantReport {
  int tau = 0;
  int nu = 0;
  int epsilon = 0;
  int width = 0;
};

InvariantReport invariants(const KnotComplex& c);

}  // namespace hfsurg
