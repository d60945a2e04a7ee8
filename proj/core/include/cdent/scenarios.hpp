#pragma once

#include <span>
#include <string>
#include <vector>

#include "cdent/galilean.hpp"
#include "cdent/hybrid_state.hpp"

namespace cdent {

// Spin-1/2 state in d = 3 whose components are single unphased Gaussian
// packets (c_chi, k_chi, s_chi). Requires |c0|^2 + |c1|^2 = 1 within 1e-9.
HybridState beam_pair(Complex c0, Complex c1, const Vec3& k0, const Vec3& k1, double s0, double s1);

// phi_0 = c0 psi_{m0}, phi_1 = c1 psi_{m1} on one Hermite frame. The
// components are exactly orthogonal; m0 == m1 throws DegenerateStateError.
HybridState shape_pair(Complex c0, Complex c1, const MultiIndex& m0, const MultiIndex& m1,
                       double scale, const RealVector& origin);

struct SweepRow {
  double parameter = 0.0;
  double abs_x = 0.0;
  double lambda_plus = 0.0;
  double lambda_minus = 0.0;
  double entropy_bits = 0.0;
  double purity = 0.0;
};

struct Sweep {
  std::string parameter_name;
  std::vector<SweepRow> rows;
};

// k0 = 0, k1 = q * direction, equal widths. Rows come from the overlap
// engine and eigensolver, not from the closed-form eigenvalues.
Sweep sweep_q(Complex c0, Complex c1, double sigma, std::span<const double> q_values,
              const Vec3& direction = {0.0, 0.0, 1.0});

// k0 = k1 = 0, s1 = ratio * s0.
Sweep sweep_width_ratio(Complex c0, Complex c1, double sigma0, std::span<const double> ratios);

// `steps` evenly spaced values from start to stop inclusive; steps == 1
// yields {start}.
std::vector<double> linspace(double start, double stop, std::size_t steps);

}  // namespace cdent
