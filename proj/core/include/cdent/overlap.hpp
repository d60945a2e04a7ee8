#pragma once

#include <cstddef>

#include "cdent/hybrid_state.hpp"
#include "cdent/linalg.hpp"

namespace cdent {

// How the quadrature oracle places its nodes for each pair of separable
// factors it integrates.
enum class Centering {
  // Node line through the saddle point of the pair's combined exponent,
  // rotated along steepest descent. Required for chirped (quad-phased)
  // packets; exact up to round-off for pure Gaussian pairs.
  kSaddle,
  // Real node line at the midpoint of the two factor centers, scaled by the
  // larger amplitude width. Adequate only for weakly phased inputs.
  kMidpoint,
};

struct QuadratureSpec {
  std::size_t nodes_per_axis = 64;
  Centering centering = Centering::kSaddle;
};

// The n x n matrix h_{chi chi'} = int phi_chi conj(phi_chi'). For pure
// states it is the reduced discrete density matrix rho^s.
class OverlapMatrix {
 public:
  // Throws DomainError if the matrix is not square or not Hermitian within
  // 1e-10.
  explicit OverlapMatrix(ComplexMatrix entries);

  std::size_t size() const { return entries_.rows(); }
  Complex operator()(std::size_t row, std::size_t col) const { return entries_(row, col); }
  const ComplexMatrix& matrix() const { return entries_; }
  double trace() const { return entries_.trace().real(); }

 private:
  ComplexMatrix entries_;
};

// Closed-form int t1(p) conj(t2(p)) d^d p for two phased Gaussian terms.
// Throws DomainError on nonpositive widths or mismatched dimensions.
Complex gaussian_term_overlap(const GaussianTerm& t1, const GaussianTerm& t2);

// int a(p) conj(b(p)) d^d p. Gaussian x Gaussian uses the closed form,
// Hermite x Hermite on an identical frame uses the coefficient inner
// product, everything else goes through quadrature_overlap.
Complex component_overlap(const WaveComponent& a, const WaveComponent& b,
                          const QuadratureSpec& spec = {});

// Tensor-product Gauss-Hermite approximation of int a conj(b), independent
// of the closed forms. Throws UnsupportedError for d > 4.
Complex quadrature_overlap(const WaveComponent& a, const WaveComponent& b,
                           const QuadratureSpec& spec = {});

// Requires a normalized state (PreconditionError otherwise).
OverlapMatrix overlap_matrix(const HybridState& state, const QuadratureSpec& spec = {});

// Same matrix without the normalization gate; used internally by norm().
OverlapMatrix gram_matrix(const HybridState& state, const QuadratureSpec& spec = {});

inline constexpr std::size_t kMaxQuadratureDimension = 4;

}  // namespace cdent
