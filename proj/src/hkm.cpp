#include "hfsurg/hkm.hpp"

namespace hfsurg {

std::vector<long long> x_sequence(const std::vector<long long>& coeffs) {
  int n = (int)coeffs.size();
  if (n == 0) throw BadCoefficient("x_sequence: empty coefficient list");
  for (long long c : coeffs)
    if (c < 2) throw BadCoefficient("x_sequence: coefficients must be >= 2");
  std::vector<long long> x(n + 2, 0);
  x[n + 1] = 0;
  x[n] = 1;
  for (int j = n - 1; j >= 0; --j) {
    x[j] = coeffs[j] * x[j + 1] - x[j + 2];
    if (x[j] <= x[j + 1]) throw BadCoefficient("x_sequence: sequence not decreasing");
  }
  return x;
}

std::vector<long long> hkm_coefficients(const std::vector<long long>& coeffs,
                                        const std::vector<long long>& u) {
  int n = (int)coeffs.size();
  if ((int)u.size() != n) throw BadCoefficient("hkm_coefficients: length mismatch");
  for (int j = 0; j < n; ++j)
    if (u[j] < 0 || u[j] >= coeffs[j])
      throw BadCoefficient("hkm_coefficients: u_j out of range [0, c_j)");
  std::vector<long long> nj(n, 0);
  for (int j = 0; j < n; ++j) {
    nj[j] = (u[j] != 0 ? u[j] : 0) - (j > 0 && u[j - 1] != 0 ? 1 : 0);
  }
  return nj;
}

long long epsilon_class(const std::vector<long long>& coeffs, const std::vector<long long>& u) {
  std::vector<long long> x = x_sequence(coeffs);
  std::vector<long long> nj = hkm_coefficients(coeffs, u);
  long long sum = 0;
  for (size_t j = 0; j < nj.size(); ++j) sum += nj[j] * x[j + 1];
  long long m = x[0];
  return ((sum % m) + m) % m;
}

HkmVerdict verify_hkm_strong(const std::vector<long long>& coeffs, long long budget) {
  HkmVerdict out;
  out.xs = x_sequence(coeffs);
  int n = (int)coeffs.size();
  long long total = 1;
  for (long long c : coeffs) {
    total *= c;
    if (total > budget) throw BudgetExceeded("verify_hkm_strong: more than budget states");
  }

  std::vector<long long> u(n, 0);
  out.strong = true;
  while (true) {
    // mixed-radix increment
    int j = n - 1;
    while (j >= 0 && u[j] == coeffs[j] - 1) u[j--] = 0;
    if (j < 0) break;
    ++u[j];

    std::vector<long long> nj = hkm_coefficients(coeffs, u);
    // combinatorial bounds on the coefficients
    for (int i = 0; i < n; ++i) {
      if (i > 0 && u[i - 1] != 0 && nj[i] > coeffs[i] - 2)
        throw BadCoefficient("hkm coefficient bound (a) violated");
      if (u[i] == 0) {
        bool prev = i > 0 && u[i - 1] != 0;
        if (nj[i] != (prev ? -1 : 0)) throw BadCoefficient("hkm coefficient bound (b) violated");
      }
      if (nj[i] == -1) {
        // some earlier positive coefficient with only zeros in between
        int k = i - 1;
        while (k >= 0 && nj[k] == 0) --k;
        if (k < 0 || nj[k] <= 0) throw BadCoefficient("hkm coefficient bound (c) violated");
      }
    }

    long long sum = 0;
    for (int i = 0; i < n; ++i) sum += nj[i] * out.xs[i + 1];
    long long m = out.xs[0];
    long long cls = ((sum % m) + m) % m;
    ++out.checked;
    if (cls == 0) {
      out.strong = false;
      if (!out.counterexample) out.counterexample = u;
    }
  }
  return out;
}

}  // namespace hfsurg
