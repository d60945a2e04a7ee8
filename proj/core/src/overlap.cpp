#include "cdent/overlap.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

#include "cdent/errors.hpp"
#include "cdent/gauss_hermite.hpp"
#include "cdent/hermite.hpp"

namespace cdent {

OverlapMatrix::OverlapMatrix(ComplexMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) throw DomainError("overlap matrix must be square");
  if (hermiticity_defect(entries_) > 1e-10) throw DomainError("overlap matrix is not Hermitian");
}

Complex gaussian_term_overlap(const GaussianTerm& t1, const GaussianTerm& t2) {
  const std::size_t d = t1.dimension();
  if (t2.dimension() != d || t1.linear_phase.size() != d || t2.linear_phase.size() != d)
    throw DomainError("gaussian_term_overlap: dimension mismatch");
  if (!(t1.width > 0.0) || !(t2.width > 0.0))
    throw DomainError("gaussian_term_overlap: widths must be positive");

  const double w1 = amplitude_width(t1.width);
  const double w2 = amplitude_width(t2.width);
  const double g1 = 1.0 / (w1 * w1);
  const double g2 = 1.0 / (w2 * w2);
  const double dbeta = t1.quad_phase - t2.quad_phase;

  // Work in u = p - m0 with m0 the precision-weighted center; the real part
  // of the linear coefficient then vanishes identically.
  const Complex quad(0.5 * (g1 + g2), -dbeta);
  Complex linear_sq = 0.0;
  double dist2 = 0.0;
  double const_phase = 0.0;
  double m0_sq = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    const double m0 = (g1 * t1.center[i] + g2 * t2.center[i]) / (g1 + g2);
    const double da = t1.linear_phase[i] - t2.linear_phase[i];
    const double lin_im = -da + 2.0 * dbeta * m0;
    linear_sq += Complex(-lin_im * lin_im, 0.0);
    const double q = t1.center[i] - t2.center[i];
    dist2 += q * q;
    const_phase -= da * m0;
    m0_sq += m0 * m0;
  }
  const_phase += dbeta * m0_sq;
  const double gaussian_decay = -0.5 * (g1 * g2 / (g1 + g2)) * dist2;

  const Complex log_prefactor =
      0.5 * static_cast<double>(d) * std::log(1.0 / (quad * w1 * w2));
  const Complex exponent =
      log_prefactor + linear_sq / (4.0 * quad) + gaussian_decay + Complex(0.0, const_phase);
  return t1.amplitude * std::conj(t2.amplitude) * std::exp(exponent);
}

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// One-dimensional factor of a separable piece: either a phased Gaussian or a
// Hermite function, both with amplitude width w.
struct Factor1D {
  bool hermite = false;
  double center = 0.0;
  double width = 1.0;  // amplitude width w
  double linear_phase = 0.0;
  double quad_phase = 0.0;
  std::size_t mode = 0;

  Complex value(Complex z) const {
    if (hermite) {
      const auto psi = hermite_functions<Complex>(mode + 1, (z - center) / width);
      return psi[mode] / std::sqrt(width);
    }
    const Complex dz = z - center;
    return std::pow(std::numbers::pi * width * width, -0.25) *
           std::exp(-dz * dz / (2.0 * width * width) + Complex(0.0, -linear_phase) * z +
                    Complex(0.0, quad_phase) * z * z);
  }

  // Analytic continuation of conj(f(p)) off the real axis.
  Complex conj_value(Complex z) const { return std::conj(value(std::conj(z))); }

  // Exponent of the Gaussian envelope written as -quad z^2 + linear z + ...
  Complex envelope_quad() const { return {0.5 / (width * width), -quad_phase}; }
  Complex envelope_linear() const { return {center / (width * width), -linear_phase}; }
};

struct Piece {
  Complex coefficient;
  std::vector<std::uint32_t> factor_ids;  // one per axis
};

// A component as a sum of products of 1-D factors.
struct SeparableForm {
  std::vector<std::vector<Factor1D>> axes;
  std::vector<Piece> pieces;
};

void append(SeparableForm& form, const GaussianSum& sum) {
  for (const auto& t : sum.terms) {
    Piece piece{t.amplitude, {}};
    for (std::size_t i = 0; i < form.axes.size(); ++i) {
      Factor1D f;
      f.center = t.center[i];
      f.width = amplitude_width(t.width);
      f.linear_phase = t.linear_phase[i];
      f.quad_phase = t.quad_phase;
      piece.factor_ids.push_back(static_cast<std::uint32_t>(form.axes[i].size()));
      form.axes[i].push_back(f);
    }
    form.pieces.push_back(std::move(piece));
  }
}

void append(SeparableForm& form, const HermiteExpansion& h) {
  std::vector<std::uint32_t> base(form.axes.size());
  for (std::size_t i = 0; i < form.axes.size(); ++i) {
    base[i] = static_cast<std::uint32_t>(form.axes[i].size());
    for (std::size_t m = 0; m < h.cutoff; ++m) {
      Factor1D f;
      f.hermite = true;
      f.center = h.origin[i];
      f.width = amplitude_width(h.scale);
      f.mode = m;
      form.axes[i].push_back(f);
    }
  }
  for (std::size_t flat = 0; flat < h.coefficients.size(); ++flat) {
    if (h.coefficients[flat] == Complex(0.0)) continue;
    const MultiIndex modes = h.multi_index(flat);
    Piece piece{h.coefficients[flat], {}};
    for (std::size_t i = 0; i < modes.size(); ++i)
      piece.factor_ids.push_back(base[i] + static_cast<std::uint32_t>(modes[i]));
    form.pieces.push_back(std::move(piece));
  }
}

SeparableForm separable_form(const WaveComponent& component) {
  SeparableForm form;
  form.axes.resize(dimension(component));
  std::visit(Overloaded{[&](const GaussianSum& g) { append(form, g); },
                        [&](const HermiteExpansion& h) { append(form, h); },
                        [&](const CompositeComponent& c) {
                          for (const auto& part : c.parts)
                            std::visit([&](const auto& p) { append(form, p); }, part);
                        }},
             component);
  return form;
}

Complex pair_integral(const Factor1D& f, const Factor1D& g, const GaussHermiteRule& rule,
                      Centering centering) {
  Complex center, scale;
  if (centering == Centering::kSaddle) {
    const Complex quad = f.envelope_quad() + std::conj(g.envelope_quad());
    const Complex linear = f.envelope_linear() + std::conj(g.envelope_linear());
    center = linear / (2.0 * quad);
    scale = 1.0 / std::sqrt(quad);
  } else {
    center = 0.5 * (f.center + g.center);
    scale = std::max(f.width, g.width);
  }
  Complex sum = 0.0;
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    const Complex z = center + scale * rule.nodes[k];
    sum += rule.scaled_weights[k] * f.value(z) * g.conj_value(z);
  }
  return scale * sum;
}

Complex gaussian_sum_overlap(const GaussianSum& a, const GaussianSum& b) {
  Complex total = 0.0;
  for (const auto& s : a.terms)
    for (const auto& t : b.terms) total += gaussian_term_overlap(s, t);
  return total;
}

Complex hermite_coefficient_overlap(const HermiteExpansion& a, const HermiteExpansion& b) {
  Complex total = 0.0;
  const std::size_t cutoff = std::min(a.cutoff, b.cutoff);
  for (std::size_t flat = 0; flat < a.coefficients.size(); ++flat) {
    const MultiIndex modes = a.multi_index(flat);
    if (std::any_of(modes.begin(), modes.end(), [&](std::size_t m) { return m >= cutoff; }))
      continue;
    total += a.coefficients[flat] * std::conj(b.coefficients[b.flat_index(modes)]);
  }
  return total;
}

Complex part_overlap(const ComponentPart& a, const ComponentPart& b, const QuadratureSpec& spec) {
  if (const auto* ga = std::get_if<GaussianSum>(&a))
    if (const auto* gb = std::get_if<GaussianSum>(&b)) return gaussian_sum_overlap(*ga, *gb);
  if (const auto* ha = std::get_if<HermiteExpansion>(&a))
    if (const auto* hb = std::get_if<HermiteExpansion>(&b))
      if (ha->scale == hb->scale && ha->origin == hb->origin)
        return hermite_coefficient_overlap(*ha, *hb);
  const auto lift = [](const ComponentPart& p) {
    return std::visit([](const auto& x) -> WaveComponent { return x; }, p);
  };
  return quadrature_overlap(lift(a), lift(b), spec);
}

std::vector<ComponentPart> parts_of(const WaveComponent& c) {
  return std::visit(Overloaded{[](const GaussianSum& g) { return std::vector<ComponentPart>{g}; },
                               [](const HermiteExpansion& h) { return std::vector<ComponentPart>{h}; },
                               [](const CompositeComponent& c) { return c.parts; }},
                    c);
}

void check_same_dimension(const WaveComponent& a, const WaveComponent& b, const char* op) {
  if (dimension(a) != dimension(b))
    throw DomainError(std::string(op) + ": dimension mismatch (" + std::to_string(dimension(a)) +
                      " vs " + std::to_string(dimension(b)) + ")");
}

}  // namespace

Complex quadrature_overlap(const WaveComponent& a, const WaveComponent& b,
                           const QuadratureSpec& spec) {
  check_same_dimension(a, b, "quadrature_overlap");
  const std::size_t d = dimension(a);
  if (d > kMaxQuadratureDimension)
    throw UnsupportedError("quadrature_overlap: tensor grid limited to d <= " +
                           std::to_string(kMaxQuadratureDimension));
  if (spec.nodes_per_axis < 2) throw DomainError("quadrature_overlap: need >= 2 nodes per axis");

  const GaussHermiteRule rule = gauss_hermite_rule(spec.nodes_per_axis);
  const SeparableForm fa = separable_form(a);
  const SeparableForm fb = separable_form(b);

  // The tensor-product rule applied to a product integrand factorizes into
  // per-axis one-dimensional sums.
  std::vector<std::vector<Complex>> tables(d);
  for (std::size_t i = 0; i < d; ++i) {
    const auto& left = fa.axes[i];
    const auto& right = fb.axes[i];
    tables[i].resize(left.size() * right.size());
    for (std::size_t u = 0; u < left.size(); ++u)
      for (std::size_t v = 0; v < right.size(); ++v)
        tables[i][u * right.size() + v] = pair_integral(left[u], right[v], rule, spec.centering);
  }

  Complex total = 0.0;
  for (const auto& pa : fa.pieces)
    for (const auto& pb : fb.pieces) {
      Complex product = pa.coefficient * std::conj(pb.coefficient);
      for (std::size_t i = 0; i < d; ++i)
        product *= tables[i][pa.factor_ids[i] * fb.axes[i].size() + pb.factor_ids[i]];
      total += product;
    }
  return total;
}

Complex component_overlap(const WaveComponent& a, const WaveComponent& b,
                          const QuadratureSpec& spec) {
  check_same_dimension(a, b, "component_overlap");
  const auto left = parts_of(a);
  const auto right = parts_of(b);
  Complex total = 0.0;
  for (const auto& pa : left)
    for (const auto& pb : right) total += part_overlap(pa, pb, spec);
  return total;
}

OverlapMatrix gram_matrix(const HybridState& state, const QuadratureSpec& spec) {
  const std::size_t n = state.discrete_dim();
  ComplexMatrix h(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto& cr = state.components()[r];
    h(r, r) = component_overlap(cr, cr, spec).real();
    for (std::size_t c = r + 1; c < n; ++c) {
      h(r, c) = component_overlap(cr, state.components()[c], spec);
      h(c, r) = std::conj(h(r, c));
    }
  }
  return OverlapMatrix(std::move(h));
}

OverlapMatrix overlap_matrix(const HybridState& state, const QuadratureSpec& spec) {
  OverlapMatrix h = gram_matrix(state, spec);
  if (!(std::abs(std::sqrt(std::max(h.trace(), 0.0)) - 1.0) <= kNormalizationGate))
    throw PreconditionError("overlap_matrix: state is not normalized (trace = " +
                            std::to_string(h.trace()) + ")");
  return h;
}

}  // namespace cdent
