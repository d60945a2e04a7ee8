#include "cdent/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cdent/errors.hpp"

namespace cdent {

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::kSeparable:
      return "separable";
    case Classification::kEntangled:
      return "entangled";
    case Classification::kMaximal:
      return "maximal";
  }
  return "unknown";
}

namespace {

// Entropy of (1 - p, p) for p <= 1/2. Near p = 1/2 the two terms of
// -sum l log2 l cancel to within a few ulp of 1, so that region works with
// u = 1 - 2p (exact there) and log1p instead.
double binary_entropy(double p) {
  if (!(p > 0.0)) return 0.0;
  if (p < 0.25) return (-p * std::log(p) - (1.0 - p) * std::log1p(-p)) / std::numbers::ln2;
  const double u = 1.0 - 2.0 * p;
  return 1.0 - ((1.0 + u) * std::log1p(u) + (1.0 - u) * std::log1p(-u)) / (2.0 * std::numbers::ln2);
}

}  // namespace

double von_neumann_entropy(const Spectrum& s) {
  if (s.size() == 2) return std::clamp(binary_entropy(s[1]), 0.0, 1.0);
  double h = 0.0;
  for (double l : s.values())
    if (l > 0.0) h -= l * std::log2(l);
  return std::max(h, 0.0);
}

double purity(const Spectrum& s) {
  double p = 0.0;
  for (double l : s.values()) p += l * l;
  return p;
}

std::size_t schmidt_rank(const Spectrum& s) {
  const auto rank = static_cast<std::size_t>(std::count_if(
      s.values().begin(), s.values().end(), [](double l) { return l > kRankTolerance; }));
  return std::max<std::size_t>(rank, 1);
}

std::pair<double, double> gaussian_pair_eigenvalues(Complex c0, Complex c1, Complex x) {
  const double w0 = std::norm(c0);
  const double w1 = std::norm(c1);
  if (!(std::abs(w0 + w1 - 1.0) <= 1e-9))
    throw PreconditionError("gaussian_pair_eigenvalues: |c0|^2 + |c1|^2 must be 1");
  const double ax = std::abs(x);
  if (!(ax <= 1.0 + 1e-12)) throw PreconditionError("gaussian_pair_eigenvalues: |x| exceeds 1");
  // 1/4 - w0 w1 (1 - |x|^2) rewritten with w0 + w1 = 1; the literal form
  // cancels catastrophically for equal weights.
  const double xc = std::min(ax, 1.0);
  const double root = std::sqrt(0.25 * (w0 - w1) * (w0 - w1) + w0 * w1 * xc * xc);
  return {0.5 + root, 0.5 - root};
}

Classification classify(const Spectrum& s, double tol) {
  if (s[0] > 1.0 - tol) return Classification::kSeparable;
  const double uniform = 1.0 / static_cast<double>(s.size());
  const bool maximal = std::all_of(s.values().begin(), s.values().end(),
                                   [&](double l) { return std::abs(l - uniform) < tol; });
  return maximal ? Classification::kMaximal : Classification::kEntangled;
}

Classification classify(const OverlapMatrix& rho, double tol) { return classify(spectrum(rho), tol); }

EntanglementReport entanglement_report(const OverlapMatrix& rho, double tol) {
  Spectrum s = spectrum(rho);
  EntanglementReport report{s, von_neumann_entropy(s), purity(s), schmidt_rank(s), classify(s, tol)};
  return report;
}

}  // namespace cdent
