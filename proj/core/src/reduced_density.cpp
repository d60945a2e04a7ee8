#include "cdent/reduced_density.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "cdent/errors.hpp"

namespace cdent {

Spectrum::Spectrum(std::vector<double> eigenvalues) : values_(std::move(eigenvalues)) {
  if (values_.empty()) throw DomainError("spectrum: no eigenvalues");
  double sum = 0.0;
  for (double v : values_) {
    if (!(v >= -kSpectrumTolerance && v <= 1.0 + kSpectrumTolerance))
      throw DomainError("spectrum: eigenvalue " + std::to_string(v) + " outside [0, 1]");
    sum += v;
  }
  if (!(std::abs(sum - 1.0) <= kSpectrumTolerance))
    throw DomainError("spectrum: eigenvalues sum to " + std::to_string(sum));
  for (double& v : values_) v = std::clamp(v, 0.0, 1.0);
  std::sort(values_.begin(), values_.end(), std::greater<>());
}

OverlapMatrix reduced_spin_density(const HybridState& state, const QuadratureSpec& spec) {
  return overlap_matrix(state, spec);
}

Spectrum spectrum(const OverlapMatrix& rho) {
  const std::size_t n = rho.size();
  if (n == 2) {
    const double h00 = rho(0, 0).real();
    const double h11 = rho(1, 1).real();
    const double mean = 0.5 * (h00 + h11);
    const double half_gap = 0.5 * (h00 - h11);
    const double radius = std::sqrt(half_gap * half_gap + std::norm(rho(0, 1)));
    return Spectrum({mean + radius, mean - radius});
  }
  return Spectrum(hermitian_eigen(rho.matrix()).values);
}

Complex kernel_eval(const HybridState& state, std::span<const double> p,
                    std::span<const double> p_prime) {
  if (p.size() != state.momentum_dim() || p_prime.size() != state.momentum_dim())
    throw DomainError("kernel_eval: momentum length does not match d = " +
                      std::to_string(state.momentum_dim()));
  Complex total = 0.0;
  for (const auto& c : state.components()) total += evaluate(c, p) * std::conj(evaluate(c, p_prime));
  return total;
}

SchmidtData schmidt_decomposition(const HybridState& state, const QuadratureSpec& spec) {
  const OverlapMatrix rho = reduced_spin_density(state, spec);
  const HermitianEigen eig = hermitian_eigen(rho.matrix());
  const std::size_t n = rho.size();

  std::vector<WaveComponent> modes;
  for (std::size_t i = 0; i < n; ++i) {
    const double lambda = eig.values[i];
    if (!(lambda > kRankTolerance)) continue;
    std::vector<Complex> weights(n);
    for (std::size_t chi = 0; chi < n; ++chi)
      weights[chi] = std::conj(eig.vectors(chi, i)) / std::sqrt(lambda);
    modes.push_back(linear_combination(state.components(), weights));
  }
  return SchmidtData{Spectrum(eig.values), eig.vectors, std::move(modes)};
}

TraceComparison trace_function_check(const HybridState& state, std::span<const double> poly,
                                     const QuadratureSpec& spec) {
  if (!poly.empty() && poly[0] != 0.0)
    throw UnsupportedError(
        "trace_function_check: constant term has no finite trace on the continuous side");
  const OverlapMatrix rho = reduced_spin_density(state, spec);

  // Tr g(rho) via repeated matrix products.
  double discrete_side = 0.0;
  ComplexMatrix power = rho.matrix();
  for (std::size_t k = 1; k < poly.size(); ++k) {
    discrete_side += poly[k] * power.trace().real();
    if (k + 1 < poly.size()) power = power * rho.matrix();
  }

  const SchmidtData schmidt = schmidt_decomposition(state, spec);
  double continuous_side = 0.0;
  for (double lambda : schmidt.coefficients.values()) {
    double term = 0.0;
    for (std::size_t k = poly.size(); k-- > 1;) term = (term + poly[k]) * lambda;
    continuous_side += term;
  }
  return {discrete_side, continuous_side};
}

}  // namespace cdent
