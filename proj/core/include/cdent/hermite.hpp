#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

namespace cdent {

// Orthonormal Hermite functions psi_0 .. psi_{count-1} at x, where
// psi_m(x) = (2^m m! sqrt(pi))^{-1/2} H_m(x) exp(-x^2 / 2). Uses the
// normalized three-term recurrence, which stays finite for large m. T may be
// double or std::complex<double> (the functions are entire).
template <class T>
std::vector<T> hermite_functions(std::size_t count, T x) {
  std::vector<T> psi(count);
  if (count == 0) return psi;
  using std::exp;
  psi[0] = T(std::pow(std::numbers::pi, -0.25)) * exp(-x * x / 2.0);
  if (count > 1) psi[1] = T(std::sqrt(2.0)) * x * psi[0];
  for (std::size_t m = 1; m + 1 < count; ++m) {
    const double md = static_cast<double>(m);
    psi[m + 1] = T(std::sqrt(2.0 / (md + 1.0))) * x * psi[m] -
                 T(std::sqrt(md / (md + 1.0))) * psi[m - 1];
  }
  return psi;
}

}  // namespace cdent
