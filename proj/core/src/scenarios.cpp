#include "cdent/scenarios.hpp"

#include <algorithm>
#include <cmath>

#include "cdent/entanglement.hpp"
#include "cdent/errors.hpp"
#include "cdent/overlap.hpp"
#include "cdent/reduced_density.hpp"

namespace cdent {

namespace {

void require_unit_weights(Complex c0, Complex c1, const char* op) {
  if (!(std::abs(std::norm(c0) + std::norm(c1) - 1.0) <= 1e-9))
    throw PreconditionError(std::string(op) + ": |c0|^2 + |c1|^2 must equal 1");
}

SweepRow analyze_pair(double parameter, const HybridState& state, const HybridState& unit_pair) {
  const OverlapMatrix rho = reduced_spin_density(state);
  const Spectrum s = spectrum(rho);
  SweepRow row;
  row.parameter = parameter;
  row.abs_x = std::abs(component_overlap(unit_pair.components()[0], unit_pair.components()[1]));
  row.lambda_plus = s[0];
  row.lambda_minus = s[1];
  row.entropy_bits = von_neumann_entropy(s);
  row.purity = purity(s);
  return row;
}

// Same packets with unit amplitudes, for reading off x itself.
HybridState unit_pair(const Vec3& k0, const Vec3& k1, double s0, double s1) {
  return HybridState({GaussianSum{3, {make_gaussian_term(1.0, {k0[0], k0[1], k0[2]}, s0)}},
                      GaussianSum{3, {make_gaussian_term(1.0, {k1[0], k1[1], k1[2]}, s1)}}});
}

}  // namespace

HybridState beam_pair(Complex c0, Complex c1, const Vec3& k0, const Vec3& k1, double s0, double s1) {
  require_unit_weights(c0, c1, "beam_pair");
  if (!(s0 > 0.0) || !(s1 > 0.0)) throw DomainError("beam_pair: widths must be positive");
  return HybridState({GaussianSum{3, {make_gaussian_term(c0, {k0[0], k0[1], k0[2]}, s0)}},
                      GaussianSum{3, {make_gaussian_term(c1, {k1[0], k1[1], k1[2]}, s1)}}});
}

HybridState shape_pair(Complex c0, Complex c1, const MultiIndex& m0, const MultiIndex& m1,
                       double scale, const RealVector& origin) {
  require_unit_weights(c0, c1, "shape_pair");
  if (m0 == m1)
    throw DegenerateStateError("shape_pair: identical modes give maximal overlap, not shape-like");
  if (m0.size() != origin.size() || m1.size() != origin.size())
    throw StructuralError("shape_pair: multi-index length must match the origin dimension");
  if (!(scale > 0.0)) throw DomainError("shape_pair: scale must be positive");

  std::size_t cutoff = 1;
  for (std::size_t m : m0) cutoff = std::max(cutoff, m + 1);
  for (std::size_t m : m1) cutoff = std::max(cutoff, m + 1);
  const auto component = [&](Complex c, const MultiIndex& modes) {
    HermiteExpansion h{scale, origin, cutoff, {}};
    h.coefficients.assign(static_cast<std::size_t>(std::pow(cutoff, origin.size()) + 0.5), 0.0);
    h.coefficients[h.flat_index(modes)] = c;
    return h;
  };
  return HybridState({component(c0, m0), component(c1, m1)});
}

Sweep sweep_q(Complex c0, Complex c1, double sigma, std::span<const double> q_values,
              const Vec3& direction) {
  require_unit_weights(c0, c1, "sweep_q");
  const double len = std::sqrt(direction[0] * direction[0] + direction[1] * direction[1] +
                               direction[2] * direction[2]);
  if (!(len > 0.0)) throw DomainError("sweep_q: direction must be nonzero");
  Sweep sweep{"q", {}};
  for (double q : q_values) {
    if (!std::isfinite(q) || q < 0.0) throw DomainError("sweep_q: q values must be finite and >= 0");
    const Vec3 k0{0.0, 0.0, 0.0};
    const Vec3 k1{q * direction[0] / len, q * direction[1] / len, q * direction[2] / len};
    sweep.rows.push_back(
        analyze_pair(q, beam_pair(c0, c1, k0, k1, sigma, sigma), unit_pair(k0, k1, sigma, sigma)));
  }
  return sweep;
}

Sweep sweep_width_ratio(Complex c0, Complex c1, double sigma0, std::span<const double> ratios) {
  require_unit_weights(c0, c1, "sweep_width_ratio");
  Sweep sweep{"ratio", {}};
  const Vec3 k{0.0, 0.0, 0.0};
  for (double r : ratios) {
    if (!(r > 0.0) || !std::isfinite(r))
      throw DomainError("sweep_width_ratio: ratios must be positive");
    const double sigma1 = r * sigma0;
    sweep.rows.push_back(
        analyze_pair(r, beam_pair(c0, c1, k, k, sigma0, sigma1), unit_pair(k, k, sigma0, sigma1)));
  }
  return sweep;
}

std::vector<double> linspace(double start, double stop, std::size_t steps) {
  if (steps == 0) throw DomainError("linspace: steps must be >= 1");
  std::vector<double> out(steps);
  if (steps == 1) {
    out[0] = start;
    return out;
  }
  for (std::size_t i = 0; i < steps; ++i)
    out[i] = start + (stop - start) * static_cast<double>(i) / static_cast<double>(steps - 1);
  out.back() = stop;
  return out;
}

}  // namespace cdent
