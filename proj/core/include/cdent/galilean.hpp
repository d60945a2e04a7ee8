#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

#include "cdent/hybrid_state.hpp"
#include "cdent/linalg.hpp"
#include "cdent/overlap.hpp"

namespace cdent {

using Vec3 = std::array<double, 3>;

// Unit quaternions parameterize SU(2) directly; the sign of q selects the
// lift of the SO(3) rotation.
struct Quaternion {
  double w = 1.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  static Quaternion from_axis_angle(const Vec3& axis, double angle);

  double norm() const;
  Quaternion conjugate() const { return {w, -x, -y, -z}; }
  // Active rotation matrix, row-major.
  std::array<Vec3, 3> rotation_matrix() const;
  Vec3 rotate(const Vec3& v) const;

  friend Quaternion operator*(const Quaternion& a, const Quaternion& b);
};

// g = (b, a, v, R): time translation, space translation, boost velocity,
// rotation. Acts on coordinates as x -> R x + v t + a, t -> t + b.
struct GalileanElement {
  double time_shift = 0.0;
  Vec3 translation{0.0, 0.0, 0.0};
  Vec3 boost{0.0, 0.0, 0.0};
  Quaternion rotation{};
};

// g2 o g1 (apply g1 first): (b1 + b2, R2 a1 + b1 v2 + a2, R2 v1 + v2, R2 R1).
GalileanElement compose(const GalileanElement& g2, const GalileanElement& g1);

struct PhysicalParams {
  double mass = 1.0;
};

// D^{1/2}(R) = w I - i (x sigma_x + y sigma_y + z sigma_z), indexed by chi
// with chi = 0 the +1/2 state. Throws DomainError unless |q| = 1 within
// 1e-12.
ComplexMatrix su2_from_rotation(const Quaternion& q);

// U(g) on a spin-1/2, d = 3 state of Gaussian sums:
//   (U phi)_chi'(p') = e^{i (m a.v / 2 - a.p' + b p'^2 / (2m))}
//                      sum_chi D_{chi' chi} phi_chi(R^T (p' - m v)).
// Every phased Gaussian maps to a phased Gaussian, so the result is exact.
// Throws UnsupportedError for other representations, n != 2 or d != 3.
HybridState apply_galilean(const HybridState& state, const GalileanElement& g,
                           const PhysicalParams& params = {});

// Pointwise value of (U(g) phi)_chi at p', for any representation.
Complex evaluate_transformed(const HybridState& state, const GalileanElement& g,
                             const PhysicalParams& params, DiscreteIndex chi,
                             std::span<const double> p);

// rho^s of U(g) phi by tensor Gauss-Hermite quadrature on pointwise values
// of the transformed state. Supports states whose components are Hermite
// expansions on one shared frame (the grid follows the transformed frame).
OverlapMatrix transformed_overlap_quadrature(const HybridState& state, const GalileanElement& g,
                                             const PhysicalParams& params,
                                             const QuadratureSpec& spec = {});

// Deterministic sampler for group elements: |a|, |v| <= 5 uniform in the
// ball, b uniform in [-5, 5], rotation uniform on SU(2).
class GalileanSampler {
 public:
  explicit GalileanSampler(std::uint64_t seed);
  GalileanElement next();

 private:
  double uniform();  // [0, 1)
  Vec3 ball(double radius);

  std::uint64_t state_;
};

struct InvarianceReport {
  std::size_t samples = 0;
  double max_spectrum_deviation = 0.0;
  double max_conjugation_deviation = 0.0;
  std::size_t worst_spectrum_sample = 0;
  GalileanElement worst_spectrum_element{};
  std::size_t worst_conjugation_sample = 0;
  GalileanElement worst_conjugation_element{};
};

// Applies `samples` sampled elements and records the largest spectrum
// change and the largest deviation of rho^s' from D rho^s D^H. Gaussian-sum
// states use apply_galilean; shared-frame Hermite states use
// transformed_overlap_quadrature.
InvarianceReport invariance_report(const HybridState& state, std::size_t samples,
                                   std::uint64_t seed, const PhysicalParams& params = {},
                                   const QuadratureSpec& spec = {});

}  // namespace cdent
