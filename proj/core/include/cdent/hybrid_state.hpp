#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <variant>
#include <vector>

namespace cdent {

using Complex = std::complex<double>;
using RealVector = std::vector<double>;
using MultiIndex = std::vector<std::size_t>;

// Width convention shared by both component representations. A packet of
// width sigma has amplitude envelope exp(-2 |p - k|^2 / sigma^2), i.e. a
// standard normalized Gaussian exp(-|p - k|^2 / (2 w^2)) with w = sigma / 2.
// Under this convention the overlap of two unphased unit packets is
//   (2 s0 s1 / (s0^2 + s1^2))^{d/2} exp(-2 q^2 / (s0^2 + s1^2)).
constexpr double amplitude_width(double sigma) { return 0.5 * sigma; }

// Position of a discrete basis state |chi>, chi in {0, ..., n-1}.
struct DiscreteIndex {
  std::size_t value = 0;
};

// One phased Gaussian packet in d momentum dimensions:
//   c (pi w^2)^{-d/4} exp(-|p-k|^2 / (2 w^2)) exp(-i a.p) exp(i beta p.p)
// with w = amplitude_width(width). Phases do not change the norm |c|.
struct GaussianTerm {
  Complex amplitude{1.0, 0.0};
  RealVector center;
  double width = 1.0;
  RealVector linear_phase;  // a
  double quad_phase = 0.0;  // beta

  std::size_t dimension() const { return center.size(); }
};

// Unphased term; linear_phase is filled with zeros.
GaussianTerm make_gaussian_term(Complex amplitude, RealVector center, double width);

struct GaussianSum {
  std::size_t dimension = 0;
  std::vector<GaussianTerm> terms;
};

// Expansion in tensor products of orthonormal Hermite functions of
// (p_i - origin_i) / w per axis, w = amplitude_width(scale). Coefficients
// are stored densely for every multi-index with entries < cutoff, row-major
// with axis 0 varying slowest.
struct HermiteExpansion {
  double scale = 1.0;
  RealVector origin;
  std::size_t cutoff = 1;
  std::vector<Complex> coefficients;

  std::size_t dimension() const { return origin.size(); }
  std::size_t flat_index(std::span<const std::size_t> modes) const;
  MultiIndex multi_index(std::size_t flat) const;
};

// Expansion with a single nonzero coefficient.
HermiteExpansion make_hermite_mode(Complex coefficient, const MultiIndex& modes, double scale,
                                   RealVector origin);

using ComponentPart = std::variant<GaussianSum, HermiteExpansion>;

// Sum of parts in different representations. Arises as a linear combination
// of components that do not share a representation (Schmidt modes of mixed
// states); never needed to describe the inputs themselves.
struct CompositeComponent {
  std::size_t dimension = 0;
  std::vector<ComponentPart> parts;
};

using WaveComponent = std::variant<GaussianSum, HermiteExpansion, CompositeComponent>;

std::size_t dimension(const WaveComponent& component);

// Throws StructuralError for internally inconsistent components.
void validate(const WaveComponent& component);

// Pure state sum_chi |chi> (x) phi_chi on C^n (x) L^2(R^d). Immutable; the
// constructor checks the structural invariants but not normalization.
class HybridState {
 public:
  explicit HybridState(std::vector<WaveComponent> components);

  std::size_t discrete_dim() const { return components_.size(); }
  std::size_t momentum_dim() const { return momentum_dim_; }

  const std::vector<WaveComponent>& components() const { return components_; }
  const WaveComponent& component(DiscreteIndex chi) const;

 private:
  std::vector<WaveComponent> components_;
  std::size_t momentum_dim_ = 0;
};

Complex evaluate(const WaveComponent& component, std::span<const double> p);
Complex evaluate(const HybridState& state, DiscreteIndex chi, std::span<const double> p);

WaveComponent scaled(const WaveComponent& component, Complex factor);

// sum_i weights[i] * components[i]. Stays in the components' common
// representation when there is one (Gaussian sums, or Hermite expansions on
// an identical frame) and falls back to a CompositeComponent otherwise.
WaveComponent linear_combination(std::span<const WaveComponent> components,
                                 std::span<const Complex> weights);

// sqrt(sum_chi int |phi_chi|^2), computed analytically per representation.
double norm(const HybridState& state);

// Throws DegenerateStateError when the norm vanishes.
HybridState normalize(const HybridState& state);

// sum_chi ((n-1)/2 - chi) h_{chi chi}; requires |norm - 1| <= 1e-9.
double spin_expectation(const HybridState& state);

inline constexpr double kNormalizationGate = 1e-9;

// Throws PreconditionError unless |norm(state) - 1| <= kNormalizationGate.
void require_normalized(const HybridState& state, const char* operation);

}  // namespace cdent
