#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hfsurg {

struct BadCoefficient : std::runtime_error {
  explicit BadCoefficient(const std::string& what) : std::runtime_error(what) {}
};

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// x_{n+1} = 0, x_n = 1, x_j = c_{j+1} x_{j+1} - x_{j+2}; returned as
// (x_0, x_1, ..., x_{n+1}). Requires all c_j >= 2; then x_0 > x_1 > ... > 0
// and pos_cf(x_0, x_1) == coeffs.
std::vector<long long> x_sequence(const std::vector<long long>& coeffs);

// Grading difference of the generator u = (u_1..u_n), 0 <= u_j < c_j, from
// the distinguished generator: sum of n_j x_j with
// n_j = u_j [u_j != 0] - [u_{j-1} != 0], reduced mod x_0 to [0, x_0).
long long epsilon_class(const std::vector<long long>& coeffs, const std::vector<long long>& u);

struct HkmVerdict {
  bool strong = false;
  long long checked = 0;
  std::vector<long long> xs;
  std::optional<std::vector<long long>> counterexample;  // some nonzero u with class 0 mod x_0
};

// Exhaustive sweep over nonzero u; Strong means every class lands strictly
// inside (0, x_0). Also asserts the combinatorial coefficient bounds for
// every u (throws on violation).
HkmVerdict verify_hkm_strong(const std::vector<long long>& coeffs, long long budget = 10000000);

// exposed for tests: the n_j coefficients of u
std::vector<long long> hkm_coefficients(const std::vector<long long>& coeffs,
                                        const std::vector<long long>& u);

}  // namespace hfsurg
