#include "cdent/galilean.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "cdent/errors.hpp"
#include "cdent/gauss_hermite.hpp"
#include "cdent/reduced_density.hpp"

namespace cdent {

namespace {

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 add(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }

Vec3 scale(double s, const Vec3& a) { return {s * a[0], s * a[1], s * a[2]}; }

Vec3 to_vec3(const RealVector& v) { return {v[0], v[1], v[2]}; }

RealVector to_real_vector(const Vec3& v) { return {v[0], v[1], v[2]}; }

void require_unit(const Quaternion& q) {
  if (!(std::abs(q.norm() - 1.0) <= 1e-12))
    throw DomainError("rotation quaternion is not unit (norm = " + std::to_string(q.norm()) + ")");
}

void require_spin_half_3d(const HybridState& state, const char* op) {
  if (state.discrete_dim() != 2)
    throw UnsupportedError(std::string(op) + ": only spin-1/2 (n = 2) states are supported");
  if (state.momentum_dim() != 3)
    throw UnsupportedError(std::string(op) + ": requires d = 3 momentum space");
}

void require_mass(const PhysicalParams& params) {
  if (!(params.mass > 0.0) || !std::isfinite(params.mass))
    throw DomainError("mass must be positive and finite");
}

// Rotation, boost, space translation and time translation applied in that
// order to one phased Gaussian term.
GaussianTerm transform_term(const GaussianTerm& t, const GalileanElement& g, double mass) {
  GaussianTerm out = t;
  Vec3 center = g.rotation.rotate(to_vec3(t.center));
  Vec3 linear = g.rotation.rotate(to_vec3(t.linear_phase));

  // phi(p - u): the quadratic phase feeds the linear one and leaves a constant.
  const Vec3 u = scale(mass, g.boost);
  center = add(center, u);
  out.amplitude *= std::exp(Complex(0.0, dot(linear, u) + t.quad_phase * dot(u, u)));
  linear = add(linear, scale(2.0 * t.quad_phase, u));

  linear = add(linear, g.translation);
  out.quad_phase = t.quad_phase + g.time_shift / (2.0 * mass);
  out.amplitude *= std::exp(Complex(0.0, 0.5 * mass * dot(g.translation, g.boost)));

  out.center = to_real_vector(center);
  out.linear_phase = to_real_vector(linear);
  return out;
}

}  // namespace

Quaternion Quaternion::from_axis_angle(const Vec3& axis, double angle) {
  const double len = std::sqrt(dot(axis, axis));
  if (!(len > 0.0)) throw DomainError("rotation axis must be nonzero");
  const double s = std::sin(0.5 * angle) / len;
  return {std::cos(0.5 * angle), s * axis[0], s * axis[1], s * axis[2]};
}

double Quaternion::norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

std::array<Vec3, 3> Quaternion::rotation_matrix() const {
  return {{{1.0 - 2.0 * (y * y + z * z), 2.0 * (x * y - w * z), 2.0 * (x * z + w * y)},
           {2.0 * (x * y + w * z), 1.0 - 2.0 * (x * x + z * z), 2.0 * (y * z - w * x)},
           {2.0 * (x * z - w * y), 2.0 * (y * z + w * x), 1.0 - 2.0 * (x * x + y * y)}}};
}

Vec3 Quaternion::rotate(const Vec3& v) const {
  const auto r = rotation_matrix();
  return {dot(r[0], v), dot(r[1], v), dot(r[2], v)};
}

GalileanElement compose(const GalileanElement& g2, const GalileanElement& g1) {
  GalileanElement out;
  out.time_shift = g1.time_shift + g2.time_shift;
  out.translation =
      add(add(g2.rotation.rotate(g1.translation), scale(g1.time_shift, g2.boost)), g2.translation);
  out.boost = add(g2.rotation.rotate(g1.boost), g2.boost);
  out.rotation = g2.rotation * g1.rotation;
  return out;
}

ComplexMatrix su2_from_rotation(const Quaternion& q) {
  require_unit(q);
  ComplexMatrix d(2, 2);
  d(0, 0) = Complex(q.w, -q.z);
  d(0, 1) = Complex(-q.y, -q.x);
  d(1, 0) = Complex(q.y, -q.x);
  d(1, 1) = Complex(q.w, q.z);
  return d;
}

HybridState apply_galilean(const HybridState& state, const GalileanElement& g,
                           const PhysicalParams& params) {
  require_spin_half_3d(state, "apply_galilean");
  require_mass(params);
  const ComplexMatrix spin = su2_from_rotation(g.rotation);

  std::vector<WaveComponent> moved;
  for (const auto& c : state.components()) {
    const auto* sum = std::get_if<GaussianSum>(&c);
    if (sum == nullptr)
      throw UnsupportedError("apply_galilean: only Gaussian-sum components transform exactly");
    GaussianSum out{sum->dimension, {}};
    for (const auto& t : sum->terms) out.terms.push_back(transform_term(t, g, params.mass));
    moved.emplace_back(std::move(out));
  }

  std::vector<WaveComponent> mixed;
  for (std::size_t row = 0; row < 2; ++row) {
    const std::array<Complex, 2> weights{spin(row, 0), spin(row, 1)};
    mixed.push_back(linear_combination(moved, weights));
  }
  return HybridState(std::move(mixed));
}

Complex evaluate_transformed(const HybridState& state, const GalileanElement& g,
                             const PhysicalParams& params, DiscreteIndex chi,
                             std::span<const double> p) {
  require_spin_half_3d(state, "evaluate_transformed");
  require_mass(params);
  if (p.size() != 3) throw DomainError("evaluate_transformed: momentum must have length 3");
  if (chi.value >= 2) throw DomainError("evaluate_transformed: discrete index out of range");
  const ComplexMatrix spin = su2_from_rotation(g.rotation);

  const Vec3 out{p[0], p[1], p[2]};
  const Vec3 shifted = add(out, scale(-params.mass, g.boost));
  const Vec3 source = g.rotation.conjugate().rotate(shifted);
  const double phase = 0.5 * params.mass * dot(g.translation, g.boost) - dot(g.translation, out) +
                       g.time_shift * dot(out, out) / (2.0 * params.mass);

  Complex total = 0.0;
  for (std::size_t from = 0; from < 2; ++from)
    total += spin(chi.value, from) * evaluate(state.components()[from], source);
  return std::exp(Complex(0.0, phase)) * total;
}

OverlapMatrix transformed_overlap_quadrature(const HybridState& state, const GalileanElement& g,
                                             const PhysicalParams& params,
                                             const QuadratureSpec& spec) {
  require_spin_half_3d(state, "transformed_overlap_quadrature");
  const auto* frame = std::get_if<HermiteExpansion>(&state.components()[0]);
  const auto* other = std::get_if<HermiteExpansion>(&state.components()[1]);
  if (frame == nullptr || other == nullptr || frame->scale != other->scale ||
      frame->origin != other->origin)
    throw UnsupportedError(
        "transformed_overlap_quadrature: needs Hermite components on one shared frame");
  if (spec.nodes_per_axis < 2)
    throw DomainError("transformed_overlap_quadrature: need >= 2 nodes per axis");

  const GaussHermiteRule rule = gauss_hermite_rule(spec.nodes_per_axis);
  const double w = amplitude_width(frame->scale);
  const Vec3 center = add(g.rotation.rotate(to_vec3(frame->origin)), scale(params.mass, g.boost));

  ComplexMatrix h(2, 2);
  const std::size_t n = rule.nodes.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const double weight = rule.scaled_weights[i] * rule.scaled_weights[j] * rule.scaled_weights[k];
        const std::array<double, 3> p{center[0] + w * rule.nodes[i], center[1] + w * rule.nodes[j],
                                      center[2] + w * rule.nodes[k]};
        const Complex f0 = evaluate_transformed(state, g, params, DiscreteIndex{0}, p);
        const Complex f1 = evaluate_transformed(state, g, params, DiscreteIndex{1}, p);
        h(0, 0) += weight * std::norm(f0);
        h(0, 1) += weight * f0 * std::conj(f1);
        h(1, 1) += weight * std::norm(f1);
      }
  const double jacobian = w * w * w;
  h(0, 0) *= jacobian;
  h(0, 1) *= jacobian;
  h(1, 1) *= jacobian;
  h(1, 0) = std::conj(h(0, 1));
  return OverlapMatrix(std::move(h));
}

GalileanSampler::GalileanSampler(std::uint64_t seed) : state_(seed) {}

double GalileanSampler::uniform() {
  // splitmix64
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  z ^= z >> 31;
  return static_cast<double>(z >> 11) * 0x1.0p-53;
}

Vec3 GalileanSampler::ball(double radius) {
  for (;;) {
    const Vec3 v{2.0 * uniform() - 1.0, 2.0 * uniform() - 1.0, 2.0 * uniform() - 1.0};
    if (dot(v, v) <= 1.0) return scale(radius, v);
  }
}

GalileanElement GalileanSampler::next() {
  GalileanElement g;
  g.time_shift = 10.0 * uniform() - 5.0;
  g.translation = ball(5.0);
  g.boost = ball(5.0);
  // Uniform unit quaternion (Shoemake).
  const double u1 = uniform(), u2 = uniform(), u3 = uniform();
  const double two_pi = 2.0 * std::numbers::pi;
  Quaternion q{std::sqrt(1.0 - u1) * std::sin(two_pi * u2), std::sqrt(1.0 - u1) * std::cos(two_pi * u2),
               std::sqrt(u1) * std::sin(two_pi * u3), std::sqrt(u1) * std::cos(two_pi * u3)};
  const double len = q.norm();
  g.rotation = {q.w / len, q.x / len, q.y / len, q.z / len};
  return g;
}

InvarianceReport invariance_report(const HybridState& state, std::size_t samples,
                                   std::uint64_t seed, const PhysicalParams& params,
                                   const QuadratureSpec& spec) {
  if (samples == 0) throw DomainError("invariance_report: samples must be >= 1");
  require_spin_half_3d(state, "invariance_report");
  const bool gaussian = std::all_of(state.components().begin(), state.components().end(),
                                    [](const auto& c) { return std::holds_alternative<GaussianSum>(c); });

  const OverlapMatrix rho = overlap_matrix(state, spec);
  const Spectrum before = spectrum(rho);

  // On the transformed frame the momentum phases cancel pointwise in every
  // h entry, leaving a polynomial of total degree <= 2 d (L - 1) times the
  // frame Gaussian, so d (L - 1) + 1 nodes per axis are already exact.
  QuadratureSpec moved_spec = spec;
  if (!gaussian) {
    std::size_t cutoff = 1;
    for (const auto& c : state.components())
      if (const auto* e = std::get_if<HermiteExpansion>(&c)) cutoff = std::max(cutoff, e->cutoff);
    moved_spec.nodes_per_axis = std::min(std::max<std::size_t>(3 * (cutoff - 1) + 1, 2), spec.nodes_per_axis);
  }

  InvarianceReport report;
  report.samples = samples;
  GalileanSampler sampler(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const GalileanElement g = sampler.next();
    const OverlapMatrix moved = gaussian
                                    ? overlap_matrix(apply_galilean(state, g, params), spec)
                                    : transformed_overlap_quadrature(state, g, params, moved_spec);
    const Spectrum after = spectrum(moved);
    double spectrum_dev = 0.0;
    for (std::size_t i = 0; i < before.size(); ++i)
      spectrum_dev = std::max(spectrum_dev, std::abs(before[i] - after[i]));

    const ComplexMatrix d = su2_from_rotation(g.rotation);
    const double conjugation_dev = max_abs_diff(moved.matrix(), d * rho.matrix() * d.adjoint());

    if (s == 0 || spectrum_dev > report.max_spectrum_deviation) {
      report.max_spectrum_deviation = spectrum_dev;
      report.worst_spectrum_sample = s;
      report.worst_spectrum_element = g;
    }
    if (s == 0 || conjugation_dev > report.max_conjugation_deviation) {
      report.max_conjugation_deviation = conjugation_dev;
      report.worst_conjugation_sample = s;
      report.worst_conjugation_element = g;
    }
  }
  return report;
}

}  // namespace cdent
