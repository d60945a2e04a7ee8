#pragma once

#include <span>
#include <utility>
#include <vector>

#include "cdent/hybrid_state.hpp"
#include "cdent/linalg.hpp"
#include "cdent/overlap.hpp"

namespace cdent {

// Eigenvalues of a reduced density matrix, sorted descending, each clamped
// into [0, 1] after validation.
class Spectrum {
 public:
  // Throws DomainError if an eigenvalue lies outside [-1e-10, 1 + 1e-10] or
  // the values do not sum to 1 within 1e-10.
  explicit Spectrum(std::vector<double> eigenvalues);

  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }

 private:
  std::vector<double> values_;
};

inline constexpr double kSpectrumTolerance = 1e-10;
inline constexpr double kRankTolerance = 1e-10;

struct SchmidtData {
  Spectrum coefficients;
  ComplexMatrix discrete_modes;                // columns, n x n unitary
  std::vector<WaveComponent> continuous_modes;  // one per coefficient above kRankTolerance
};

// rho^s = Tr_p |phi><phi|, which for a pure state is the overlap matrix.
OverlapMatrix reduced_spin_density(const HybridState& state, const QuadratureSpec& spec = {});

// n = 2 uses lambda = tr/2 +- sqrt(((h00 - h11)/2)^2 + |h01|^2); larger n
// uses the Jacobi eigensolver.
Spectrum spectrum(const OverlapMatrix& rho);

// Kernel of rho^p: f(p, p') = sum_chi phi_chi(p) conj(phi_chi(p')).
Complex kernel_eval(const HybridState& state, std::span<const double> p,
                    std::span<const double> p_prime);

SchmidtData schmidt_decomposition(const HybridState& state, const QuadratureSpec& spec = {});

struct TraceComparison {
  double discrete_side;    // Tr g(rho^s)
  double continuous_side;  // sum_i g(lambda_i) over Schmidt coefficients
};

// g(t) = sum_k poly[k] t^k. poly[0] must be zero: Tr 1 on the continuous
// side diverges (UnsupportedError otherwise). The discrete side is the trace
// of the matrix polynomial, evaluated without diagonalizing.
TraceComparison trace_function_check(const HybridState& state, std::span<const double> poly,
                                     const QuadratureSpec& spec = {});

}  // namespace cdent
