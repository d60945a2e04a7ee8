#include "cdent/hybrid_state.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "cdent/errors.hpp"
#include "cdent/hermite.hpp"
#include "cdent/overlap.hpp"

namespace cdent {

namespace {

constexpr std::size_t kMaxHermiteCoefficients = 1u << 22;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::size_t checked_power(std::size_t base, std::size_t exponent) {
  std::size_t result = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && result > kMaxHermiteCoefficients / base)
      throw StructuralError("hermite expansion: cutoff^d exceeds the supported size");
    result *= base;
  }
  return result;
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

bool all_finite(const RealVector& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

void validate_part(const GaussianSum& sum) {
  if (sum.dimension == 0) throw StructuralError("gaussian sum: dimension must be >= 1");
  for (std::size_t i = 0; i < sum.terms.size(); ++i) {
    const GaussianTerm& t = sum.terms[i];
    const std::string where = "gaussian term " + std::to_string(i);
    if (t.center.size() != sum.dimension)
      throw StructuralError(where + ": center has length " + std::to_string(t.center.size()) +
                            ", expected " + std::to_string(sum.dimension));
    if (t.linear_phase.size() != sum.dimension)
      throw StructuralError(where + ": linear_phase has length " +
                            std::to_string(t.linear_phase.size()) + ", expected " +
                            std::to_string(sum.dimension));
    if (!(t.width > 0.0) || !std::isfinite(t.width))
      throw StructuralError(where + ": width must be positive and finite");
    if (!finite(t.amplitude) || !all_finite(t.center) || !all_finite(t.linear_phase) ||
        !std::isfinite(t.quad_phase))
      throw StructuralError(where + ": non-finite parameter");
  }
}

void validate_part(const HermiteExpansion& h) {
  if (h.dimension() == 0) throw StructuralError("hermite expansion: dimension must be >= 1");
  if (!(h.scale > 0.0) || !std::isfinite(h.scale))
    throw StructuralError("hermite expansion: scale must be positive and finite");
  if (h.cutoff == 0) throw StructuralError("hermite expansion: cutoff must be >= 1");
  const std::size_t expected = checked_power(h.cutoff, h.dimension());
  if (h.coefficients.size() != expected)
    throw StructuralError("hermite expansion: expected " + std::to_string(expected) +
                          " coefficients (cutoff^d), got " +
                          std::to_string(h.coefficients.size()));
  if (!all_finite(h.origin) ||
      !std::all_of(h.coefficients.begin(), h.coefficients.end(), finite))
    throw StructuralError("hermite expansion: non-finite parameter");
}

std::size_t part_dimension(const ComponentPart& part) {
  return std::visit(Overloaded{[](const GaussianSum& g) { return g.dimension; },
                               [](const HermiteExpansion& h) { return h.dimension(); }},
                    part);
}

Complex evaluate_term(const GaussianTerm& t, std::span<const double> p) {
  const double w = amplitude_width(t.width);
  const double d = static_cast<double>(p.size());
  double r2 = 0.0, ap = 0.0, pp = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double dp = p[i] - t.center[i];
    r2 += dp * dp;
    ap += t.linear_phase[i] * p[i];
    pp += p[i] * p[i];
  }
  const double prefactor = std::pow(std::numbers::pi * w * w, -d / 4.0);
  return t.amplitude * prefactor * std::exp(Complex(-r2 / (2.0 * w * w), -ap + t.quad_phase * pp));
}

Complex evaluate_part(const GaussianSum& sum, std::span<const double> p) {
  Complex total = 0.0;
  for (const auto& t : sum.terms) total += evaluate_term(t, p);
  return total;
}

Complex evaluate_part(const HermiteExpansion& h, std::span<const double> p) {
  const double w = amplitude_width(h.scale);
  const std::size_t d = h.dimension();
  std::vector<std::vector<double>> axis_values(d);
  for (std::size_t i = 0; i < d; ++i) {
    axis_values[i] = hermite_functions<double>(h.cutoff, (p[i] - h.origin[i]) / w);
    for (auto& v : axis_values[i]) v /= std::sqrt(w);
  }
  Complex total = 0.0;
  for (std::size_t flat = 0; flat < h.coefficients.size(); ++flat) {
    const Complex c = h.coefficients[flat];
    if (c == Complex(0.0)) continue;
    double product = 1.0;
    std::size_t rest = flat;
    for (std::size_t i = d; i-- > 0;) {
      product *= axis_values[i][rest % h.cutoff];
      rest /= h.cutoff;
    }
    total += c * product;
  }
  return total;
}

GaussianSum scale_part(GaussianSum sum, Complex factor) {
  for (auto& t : sum.terms) t.amplitude *= factor;
  return sum;
}

HermiteExpansion scale_part(HermiteExpansion h, Complex factor) {
  for (auto& c : h.coefficients) c *= factor;
  return h;
}

bool same_frame(const HermiteExpansion& a, const HermiteExpansion& b) {
  return a.scale == b.scale && a.origin == b.origin;
}

// Re-index coefficients onto a larger cutoff.
HermiteExpansion with_cutoff(const HermiteExpansion& h, std::size_t cutoff) {
  if (cutoff == h.cutoff) return h;
  HermiteExpansion out{h.scale, h.origin, cutoff, {}};
  out.coefficients.assign(checked_power(cutoff, h.dimension()), Complex(0.0));
  for (std::size_t flat = 0; flat < h.coefficients.size(); ++flat)
    out.coefficients[out.flat_index(h.multi_index(flat))] = h.coefficients[flat];
  return out;
}

}  // namespace

GaussianTerm make_gaussian_term(Complex amplitude, RealVector center, double width) {
  GaussianTerm t;
  t.amplitude = amplitude;
  t.linear_phase.assign(center.size(), 0.0);
  t.center = std::move(center);
  t.width = width;
  return t;
}

std::size_t HermiteExpansion::flat_index(std::span<const std::size_t> modes) const {
  if (modes.size() != dimension())
    throw StructuralError("hermite expansion: multi-index has wrong length");
  std::size_t flat = 0;
  for (std::size_t m : modes) {
    if (m >= cutoff) throw DomainError("hermite expansion: mode exceeds cutoff");
    flat = flat * cutoff + m;
  }
  return flat;
}

MultiIndex HermiteExpansion::multi_index(std::size_t flat) const {
  MultiIndex modes(dimension());
  for (std::size_t i = modes.size(); i-- > 0;) {
    modes[i] = flat % cutoff;
    flat /= cutoff;
  }
  return modes;
}

HermiteExpansion make_hermite_mode(Complex coefficient, const MultiIndex& modes, double scale,
                                   RealVector origin) {
  if (modes.size() != origin.size())
    throw StructuralError("hermite mode: multi-index and origin lengths differ");
  HermiteExpansion h;
  h.scale = scale;
  h.origin = std::move(origin);
  h.cutoff = modes.empty() ? 1 : *std::max_element(modes.begin(), modes.end()) + 1;
  h.coefficients.assign(checked_power(h.cutoff, h.dimension()), Complex(0.0));
  h.coefficients[h.flat_index(modes)] = coefficient;
  return h;
}

std::size_t dimension(const WaveComponent& component) {
  return std::visit(Overloaded{[](const GaussianSum& g) { return g.dimension; },
                               [](const HermiteExpansion& h) { return h.dimension(); },
                               [](const CompositeComponent& c) { return c.dimension; }},
                    component);
}

void validate(const WaveComponent& component) {
  std::visit(Overloaded{[](const GaussianSum& g) { validate_part(g); },
                        [](const HermiteExpansion& h) { validate_part(h); },
                        [](const CompositeComponent& c) {
                          if (c.dimension == 0)
                            throw StructuralError("composite component: dimension must be >= 1");
                          for (const auto& part : c.parts) {
                            std::visit([](const auto& p) { validate_part(p); }, part);
                            if (part_dimension(part) != c.dimension)
                              throw StructuralError("composite component: part dimension mismatch");
                          }
                        }},
             component);
}

HybridState::HybridState(std::vector<WaveComponent> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw StructuralError("hybrid state: needs at least one component");
  momentum_dim_ = dimension(components_.front());
  for (std::size_t chi = 0; chi < components_.size(); ++chi) {
    try {
      validate(components_[chi]);
    } catch (const StructuralError& e) {
      throw StructuralError("component " + std::to_string(chi) + ": " + e.what());
    }
    if (dimension(components_[chi]) != momentum_dim_)
      throw StructuralError("component " + std::to_string(chi) + ": dimension " +
                            std::to_string(dimension(components_[chi])) +
                            " differs from component 0 dimension " +
                            std::to_string(momentum_dim_));
  }
}

const WaveComponent& HybridState::component(DiscreteIndex chi) const {
  if (chi.value >= components_.size())
    throw DomainError("discrete index " + std::to_string(chi.value) + " out of range for n = " +
                      std::to_string(components_.size()));
  return components_[chi.value];
}

Complex evaluate(const WaveComponent& component, std::span<const double> p) {
  if (p.size() != dimension(component))
    throw DomainError("evaluate: momentum has length " + std::to_string(p.size()) +
                      ", expected " + std::to_string(dimension(component)));
  return std::visit(Overloaded{[&](const GaussianSum& g) { return evaluate_part(g, p); },
                               [&](const HermiteExpansion& h) { return evaluate_part(h, p); },
                               [&](const CompositeComponent& c) {
                                 Complex total = 0.0;
                                 for (const auto& part : c.parts)
                                   total += std::visit(
                                       [&](const auto& x) { return evaluate_part(x, p); }, part);
                                 return total;
                               }},
                    component);
}

Complex evaluate(const HybridState& state, DiscreteIndex chi, std::span<const double> p) {
  return evaluate(state.component(chi), p);
}

WaveComponent scaled(const WaveComponent& component, Complex factor) {
  return std::visit(Overloaded{[&](const GaussianSum& g) -> WaveComponent { return scale_part(g, factor); },
                               [&](const HermiteExpansion& h) -> WaveComponent { return scale_part(h, factor); },
                               [&](const CompositeComponent& c) -> WaveComponent {
                                 CompositeComponent out{c.dimension, {}};
                                 for (const auto& part : c.parts)
                                   out.parts.push_back(std::visit(
                                       [&](const auto& x) -> ComponentPart { return scale_part(x, factor); },
                                       part));
                                 return out;
                               }},
                    component);
}

WaveComponent linear_combination(std::span<const WaveComponent> components,
                                 std::span<const Complex> weights) {
  if (components.empty() || components.size() != weights.size())
    throw StructuralError("linear_combination: need matching, nonempty inputs");
  const std::size_t d = dimension(components.front());
  for (const auto& c : components)
    if (dimension(c) != d) throw StructuralError("linear_combination: dimension mismatch");

  const bool all_gaussian = std::all_of(components.begin(), components.end(), [](const auto& c) {
    return std::holds_alternative<GaussianSum>(c);
  });
  if (all_gaussian) {
    GaussianSum out{d, {}};
    for (std::size_t i = 0; i < components.size(); ++i) {
      if (weights[i] == Complex(0.0)) continue;
      for (const auto& t : std::get<GaussianSum>(components[i]).terms) {
        out.terms.push_back(t);
        out.terms.back().amplitude *= weights[i];
      }
    }
    return out;
  }

  const auto* first_hermite = std::get_if<HermiteExpansion>(&components.front());
  const bool shared_frame =
      first_hermite != nullptr &&
      std::all_of(components.begin(), components.end(), [&](const auto& c) {
        const auto* h = std::get_if<HermiteExpansion>(&c);
        return h != nullptr && same_frame(*h, *first_hermite);
      });
  if (shared_frame) {
    std::size_t cutoff = 1;
    for (const auto& c : components) cutoff = std::max(cutoff, std::get<HermiteExpansion>(c).cutoff);
    HermiteExpansion out = with_cutoff(*first_hermite, cutoff);
    std::fill(out.coefficients.begin(), out.coefficients.end(), Complex(0.0));
    for (std::size_t i = 0; i < components.size(); ++i) {
      const HermiteExpansion lifted = with_cutoff(std::get<HermiteExpansion>(components[i]), cutoff);
      for (std::size_t k = 0; k < out.coefficients.size(); ++k)
        out.coefficients[k] += weights[i] * lifted.coefficients[k];
    }
    return out;
  }

  CompositeComponent out{d, {}};
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (weights[i] == Complex(0.0)) continue;
    const WaveComponent s = scaled(components[i], weights[i]);
    if (const auto* c = std::get_if<CompositeComponent>(&s)) {
      out.parts.insert(out.parts.end(), c->parts.begin(), c->parts.end());
    } else if (const auto* g = std::get_if<GaussianSum>(&s)) {
      out.parts.emplace_back(*g);
    } else {
      out.parts.emplace_back(std::get<HermiteExpansion>(s));
    }
  }
  return out;
}

double norm(const HybridState& state) {
  double total = 0.0;
  for (const auto& c : state.components()) total += component_overlap(c, c).real();
  return std::sqrt(std::max(total, 0.0));
}

HybridState normalize(const HybridState& state) {
  const double n = norm(state);
  if (!(n > 0.0)) throw DegenerateStateError("normalize: state has zero norm");
  if (n == 1.0) return state;
  std::vector<WaveComponent> out;
  out.reserve(state.discrete_dim());
  for (const auto& c : state.components()) out.push_back(scaled(c, 1.0 / n));
  return HybridState(std::move(out));
}

void require_normalized(const HybridState& state, const char* operation) {
  const double n = norm(state);
  if (!(std::abs(n - 1.0) <= kNormalizationGate))
    throw PreconditionError(std::string(operation) + ": state is not normalized (norm = " +
                            std::to_string(n) + ")");
}

double spin_expectation(const HybridState& state) {
  require_normalized(state, "spin_expectation");
  const double n = static_cast<double>(state.discrete_dim());
  double total = 0.0;
  for (std::size_t chi = 0; chi < state.discrete_dim(); ++chi) {
    const auto& c = state.components()[chi];
    total += ((n - 1.0) / 2.0 - static_cast<double>(chi)) * component_overlap(c, c).real();
  }
  return total;
}

}  // namespace cdent
