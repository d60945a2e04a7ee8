#pragma once

#include <cstddef>
#include <string_view>
#include <utility>

#include "cdent/overlap.hpp"
#include "cdent/reduced_density.hpp"

namespace cdent {

enum class Classification { kSeparable, kEntangled, kMaximal };

std::string_view to_string(Classification c);

inline constexpr double kClassificationTolerance = 1e-9;

struct EntanglementReport {
  Spectrum spectrum;
  double entropy_bits = 0.0;
  double purity = 1.0;
  std::size_t schmidt_rank = 1;
  Classification classification = Classification::kSeparable;
};

// -sum lambda log2 lambda with 0 log 0 = 0.
double von_neumann_entropy(const Spectrum& s);

double purity(const Spectrum& s);

// Number of eigenvalues above kRankTolerance.
std::size_t schmidt_rank(const Spectrum& s);

// Closed-form eigenvalues (lambda_+, lambda_-) of
//   [[|c0|^2, c0 conj(c1) x], [conj(c0) c1 conj(x), |c1|^2]],
// i.e. 1/2 +- sqrt(1/4 - |c0|^2 |c1|^2 (1 - |x|^2)).
// Requires |c0|^2 + |c1|^2 = 1 within 1e-9 and |x| <= 1 + 1e-12.
std::pair<double, double> gaussian_pair_eigenvalues(Complex c0, Complex c1, Complex x);

// Separable if lambda_max > 1 - tol; maximal if every lambda is within tol
// of 1/n; entangled otherwise. Separable wins for n = 1.
Classification classify(const Spectrum& s, double tol = kClassificationTolerance);
Classification classify(const OverlapMatrix& rho, double tol = kClassificationTolerance);

EntanglementReport entanglement_report(const OverlapMatrix& rho,
                                       double tol = kClassificationTolerance);

}  // namespace cdent
