#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "cdent/errors.hpp"
#include "cdent/galilean.hpp"
#include "cdent/reduced_density.hpp"
#include "cdent/scenarios.hpp"
#include "random_states.hpp"

namespace cdent {
namespace {

const double kHalf = 1.0 / std::sqrt(2.0);
const double kPi = std::numbers::pi;

Complex inner(const HybridState& a, const HybridState& b) {
  Complex sum = 0.0;
  for (std::size_t chi = 0; chi < a.discrete_dim(); ++chi)
    sum += component_overlap(a.components()[chi], b.components()[chi]);
  return sum;
}

std::array<ComplexMatrix, 3> pauli() {
  ComplexMatrix x(2, 2), y(2, 2), z(2, 2);
  x(0, 1) = x(1, 0) = 1.0;
  y(0, 1) = Complex(0, -1);
  y(1, 0) = Complex(0, 1);
  z(0, 0) = 1.0;
  z(1, 1) = -1.0;
  return {x, y, z};
}

Quaternion random_rotation(testing::Rng& rng) {
  return Quaternion::from_axis_angle(testing::random_vec3(rng, 1.0), testing::uniform(rng, -7.0, 7.0));
}

GalileanElement random_element(testing::Rng& rng) {
  return {testing::uniform(rng, -5, 5), testing::random_vec3(rng, 2.8), testing::random_vec3(rng, 2.8),
          random_rotation(rng)};
}

HybridState random_spin_half_state(testing::Rng& rng) {
  return testing::random_state(rng, 2, 3, testing::Mix::kGaussian);
}

TEST(Su2, Examples) {
  EXPECT_EQ(max_abs_diff(su2_from_rotation(Quaternion{}), ComplexMatrix::identity(2)), 0.0);
  for (const Vec3& axis : {Vec3{1, 0, 0}, Vec3{0.3, -1, 2}}) {
    const ComplexMatrix d = su2_from_rotation(Quaternion::from_axis_angle(axis, 2 * kPi));
    EXPECT_LT(max_abs_diff(d, Complex(-1.0) * ComplexMatrix::identity(2)), 1e-15);
  }
  const ComplexMatrix z = su2_from_rotation(Quaternion::from_axis_angle({0, 0, 1}, kPi));
  EXPECT_NEAR(std::abs(z(0, 0) - Complex(0, -1)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(z(1, 1) - Complex(0, 1)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(z(0, 1)), 0.0, 1e-15);
}

TEST(Su2, MatchesMatrixExponential) {
  testing::Rng rng(61);
  const auto s = pauli();
  for (int rep = 0; rep < 20; ++rep) {
    Vec3 n = testing::random_vec3(rng, 1.0);
    const double len = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
    for (auto& c : n) c /= len;
    const double theta = testing::uniform(rng, -7, 7);
    ComplexMatrix ref = Complex(std::cos(theta / 2)) * ComplexMatrix::identity(2);
    for (int j = 0; j < 3; ++j) ref = ref + Complex(0, -std::sin(theta / 2) * n[j]) * s[j];
    EXPECT_LT(max_abs_diff(su2_from_rotation(Quaternion::from_axis_angle(n, theta)), ref), 1e-14);
  }
}

TEST(Su2, UnitaryDeterminantHomomorphism) {
  testing::Rng rng(62);
  for (int rep = 0; rep < 50; ++rep) {
    const Quaternion a = random_rotation(rng), b = random_rotation(rng);
    const ComplexMatrix da = su2_from_rotation(a);
    EXPECT_LT(max_abs_diff(da * da.adjoint(), ComplexMatrix::identity(2)), 1e-12);
    EXPECT_NEAR(std::abs(da(0, 0) * da(1, 1) - da(0, 1) * da(1, 0) - 1.0), 0.0, 1e-12);
    EXPECT_LT(max_abs_diff(su2_from_rotation(a * b), da * su2_from_rotation(b)), 1e-14);
  }
}

// D sigma_j D^H = sum_k R_kj sigma_k ties the spin rotation to the
// momentum-space rotation.
TEST(Su2, CoversRotationMatrix) {
  testing::Rng rng(63);
  const auto s = pauli();
  for (int rep = 0; rep < 30; ++rep) {
    const Quaternion q = random_rotation(rng);
    const ComplexMatrix d = su2_from_rotation(q);
    const auto r = q.rotation_matrix();
    for (int j = 0; j < 3; ++j) {
      ComplexMatrix expected(2, 2);
      for (int k = 0; k < 3; ++k) expected = expected + Complex(r[k][j]) * s[k];
      EXPECT_LT(max_abs_diff(d * s[j] * d.adjoint(), expected), 1e-14);
    }
  }
}

TEST(Su2, RejectsNonUnit) {
  EXPECT_THROW(su2_from_rotation(Quaternion{1.0, 0.1, 0.0, 0.0}), DomainError);
}

TEST(Compose, MatchesSequentialCoordinateAction) {
  testing::Rng rng(64);
  for (int rep = 0; rep < 20; ++rep) {
    const GalileanElement g1 = random_element(rng), g2 = random_element(rng);
    const GalileanElement g = compose(g2, g1);
    // Act on an event (x, t): x -> R x + v t + a, t -> t + b.
    const Vec3 x = testing::random_vec3(rng, 3.0);
    const double t = testing::uniform(rng, -2, 2);
    auto act = [](const GalileanElement& e, const Vec3& pos, double time) {
      Vec3 r = e.rotation.rotate(pos);
      for (int i = 0; i < 3; ++i) r[i] += e.boost[i] * time + e.translation[i];
      return std::pair{r, time + e.time_shift};
    };
    const auto [x1, t1] = act(g1, x, t);
    const auto [x2, t2] = act(g2, x1, t1);
    const auto [y, s] = act(g, x, t);
    EXPECT_NEAR(t2, s, 1e-14);
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(x2[i], y[i], 1e-12);
  }
}

TEST(ApplyGalilean, IdentityLeavesStateUnchanged) {
  testing::Rng rng(65);
  const HybridState s = random_spin_half_state(rng);
  const HybridState t = apply_galilean(s, GalileanElement{});
  for (std::size_t chi = 0; chi < 2; ++chi) {
    const auto& a = std::get<GaussianSum>(s.components()[chi]).terms;
    const auto& b = std::get<GaussianSum>(t.components()[chi]).terms;
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_LE(std::abs(a[i].amplitude - b[i].amplitude), 1e-14);
      EXPECT_LE(std::abs(a[i].quad_phase - b[i].quad_phase), 1e-14);
      for (std::size_t k = 0; k < 3; ++k) {
        EXPECT_LE(std::abs(a[i].center[k] - b[i].center[k]), 1e-14);
        EXPECT_LE(std::abs(a[i].linear_phase[k] - b[i].linear_phase[k]), 1e-14);
      }
    }
    for (std::size_t i = 0; i < 3; ++i) {
      const double p[] = {0.3 * i, -0.2, 0.1 * i};
      EXPECT_NEAR(std::abs(evaluate(t, DiscreteIndex{chi}, p) - evaluate(s, DiscreteIndex{chi}, p)), 0.0,
                  1e-14);
    }
  }
  EXPECT_LT(max_abs_diff(overlap_matrix(t).matrix(), overlap_matrix(s).matrix()), 1e-14);
}

TEST(ApplyGalilean, PureBoostShiftsCenters) {
  const HybridState s = beam_pair(kHalf, kHalf, {0, 0, 0}, {0, 0, 1}, 1.0, 1.3);
  GalileanElement g;
  g.boost = {0.5, -1.0, 2.0};
  const PhysicalParams params{2.0};
  const HybridState t = apply_galilean(s, g, params);
  for (std::size_t chi = 0; chi < 2; ++chi) {
    const auto& before = std::get<GaussianSum>(s.components()[chi]).terms;
    const auto& after = std::get<GaussianSum>(t.components()[chi]).terms;
    for (const auto& term : after) {
      if (std::abs(term.amplitude) == 0.0) continue;
      bool found = false;
      for (const auto& ref : before)
        if (std::abs(term.center[0] - ref.center[0] - 1.0) < 1e-15 &&
            std::abs(term.center[1] - ref.center[1] + 2.0) < 1e-15 &&
            std::abs(term.center[2] - ref.center[2] - 4.0) < 1e-15)
          found = true;
      EXPECT_TRUE(found);
    }
  }
  EXPECT_LT(max_abs_diff(overlap_matrix(t).matrix(), overlap_matrix(s).matrix()), 1e-10);
}

// A half turn about z only rephases the S_z eigenstates; a half turn about
// x exchanges them.
TEST(ApplyGalilean, HalfTurnsOnPolarizedState) {
  const HybridState up = beam_pair(1.0, 0.0, {0.2, 0, 0}, {0, 0, 0}, 1.0, 1.0);
  GalileanElement about_x;
  about_x.rotation = Quaternion::from_axis_angle({1, 0, 0}, kPi);
  const HybridState flipped = apply_galilean(up, about_x);
  EXPECT_NEAR(spin_expectation(flipped), -0.5, 1e-14);

  GalileanElement about_z;
  about_z.rotation = Quaternion::from_axis_angle({0, 0, 1}, kPi);
  const HybridState turned = apply_galilean(up, about_z);
  EXPECT_NEAR(spin_expectation(turned), 0.5, 1e-14);

  for (const auto* t : {&flipped, &turned}) {
    const Spectrum a = spectrum(overlap_matrix(up)), b = spectrum(overlap_matrix(*t));
    EXPECT_NEAR(a[0], b[0], 1e-14);
    EXPECT_NEAR(a[1], b[1], 1e-14);
  }
}

TEST(ApplyGalilean, PreservesNorm) {
  testing::Rng rng(66);
  for (int rep = 0; rep < 50; ++rep) {
    const HybridState s = random_spin_half_state(rng);
    EXPECT_NEAR(norm(apply_galilean(s, random_element(rng), PhysicalParams{testing::uniform(rng, 0.5, 2)})),
                1.0, 1e-10);
  }
}

TEST(ApplyGalilean, MatchesPointwiseAction) {
  testing::Rng rng(67);
  for (int rep = 0; rep < 30; ++rep) {
    const HybridState s = random_spin_half_state(rng);
    const GalileanElement g = random_element(rng);
    const PhysicalParams params{testing::uniform(rng, 0.5, 2.0)};
    const HybridState t = apply_galilean(s, g, params);
    for (int k = 0; k < 4; ++k) {
      Vec3 p = testing::random_vec3(rng, 2.0);
      for (int i = 0; i < 3; ++i) p[i] += params.mass * g.boost[i];
      for (std::size_t chi = 0; chi < 2; ++chi) {
        const Complex direct = evaluate(t, DiscreteIndex{chi}, p);
        const Complex ref = evaluate_transformed(s, g, params, DiscreteIndex{chi}, p);
        EXPECT_NEAR(std::abs(direct - ref), 0.0, 1e-12 * std::max(1.0, std::abs(ref)));
      }
    }
  }
}

TEST(ApplyGalilean, CompositionUpToGlobalPhase) {
  testing::Rng rng(68);
  for (int rep = 0; rep < 30; ++rep) {
    const HybridState s = random_spin_half_state(rng);
    const GalileanElement g1 = random_element(rng), g2 = random_element(rng);
    const PhysicalParams params{testing::uniform(rng, 0.5, 2.0)};
    const HybridState a = apply_galilean(apply_galilean(s, g1, params), g2, params);
    const HybridState b = apply_galilean(s, compose(g2, g1), params);
    EXPECT_LT(max_abs_diff(overlap_matrix(a).matrix(), overlap_matrix(b).matrix()), 1e-9);
    EXPECT_NEAR(std::abs(inner(a, b)), 1.0, 1e-9);
  }
}

TEST(ApplyGalilean, ConjugationLaw) {
  testing::Rng rng(69);
  for (int rep = 0; rep < 30; ++rep) {
    const HybridState s = random_spin_half_state(rng);
    const GalileanElement g = random_element(rng);
    const ComplexMatrix d = su2_from_rotation(g.rotation);
    const ComplexMatrix expected = d * overlap_matrix(s).matrix() * d.adjoint();
    EXPECT_LT(max_abs_diff(overlap_matrix(apply_galilean(s, g)).matrix(), expected), 1e-9);
  }
}

// Without rotation, h is unchanged; checked against the quadrature oracle
// applied to the transformed components.
TEST(ApplyGalilean, NoRotationKeepsOverlapMatrix) {
  testing::Rng rng(70);
  for (int rep = 0; rep < 10; ++rep) {
    const HybridState s = random_spin_half_state(rng);
    GalileanElement g = random_element(rng);
    g.rotation = Quaternion{};
    const HybridState t = apply_galilean(s, g);
    const OverlapMatrix h = overlap_matrix(s);
    EXPECT_LT(max_abs_diff(overlap_matrix(t).matrix(), h.matrix()), 1e-10);
    EXPECT_NEAR(std::abs(quadrature_overlap(t.components()[0], t.components()[1]) - h(0, 1)), 0.0, 1e-10);
  }
}

TEST(ApplyGalilean, Unsupported) {
  const HybridState shape = shape_pair(kHalf, kHalf, {0, 0, 0}, {1, 0, 0}, 1.0, {0, 0, 0});
  EXPECT_THROW(apply_galilean(shape, GalileanElement{}), UnsupportedError);
  const HybridState flat({GaussianSum{2, {make_gaussian_term(kHalf, {0, 0}, 1.0)}},
                          GaussianSum{2, {make_gaussian_term(kHalf, {1, 0}, 1.0)}}});
  EXPECT_THROW(apply_galilean(flat, GalileanElement{}), UnsupportedError);
  const HybridState beam = beam_pair(kHalf, kHalf, {0, 0, 0}, {1, 0, 0}, 1.0, 1.0);
  EXPECT_THROW(apply_galilean(beam, GalileanElement{}, PhysicalParams{0.0}), DomainError);
}

// A mode-0 Hermite state is a Gaussian state in disguise, so the quadrature
// route must agree with the exact route.
TEST(TransformedQuadrature, AgreesWithExactRoute) {
  testing::Rng rng(71);
  const RealVector origin{0.3, -0.2, 0.1};
  const Complex c0{0.6, 0.0}, c1{0.0, 0.8};
  const HybridState herm({make_hermite_mode(c0, {0, 0, 0}, 1.2, origin),
                          make_hermite_mode(c1, {0, 0, 0}, 1.2, origin)});
  const HybridState gauss({GaussianSum{3, {make_gaussian_term(c0, origin, 1.2)}},
                           GaussianSum{3, {make_gaussian_term(c1, origin, 1.2)}}});
  for (int rep = 0; rep < 5; ++rep) {
    const GalileanElement g = random_element(rng);
    const OverlapMatrix a = transformed_overlap_quadrature(herm, g, {}, QuadratureSpec{16});
    const OverlapMatrix b = overlap_matrix(apply_galilean(gauss, g));
    EXPECT_LT(max_abs_diff(a.matrix(), b.matrix()), 1e-10);
  }
}

TEST(InvarianceReport, SeparableAndMaximalBeam) {
  const HybridState sep = beam_pair(0.6, 0.8, {0.5, 0, 0}, {0.5, 0, 0}, 1.3, 1.3);
  EXPECT_LT(invariance_report(sep, 50, 1).max_spectrum_deviation, 1e-9);
  const HybridState maxed = beam_pair(kHalf, kHalf, {0, 0, -15}, {0, 0, 15}, 1.0, 1.0);
  const InvarianceReport r = invariance_report(maxed, 50, 2);
  EXPECT_LT(r.max_spectrum_deviation, 1e-9);
  EXPECT_LT(r.max_conjugation_deviation, 1e-9);
  EXPECT_EQ(r.samples, 50u);
}

TEST(InvarianceReport, ShapePairThroughQuadrature) {
  const HybridState shape =
      shape_pair(Complex(0.6, 0.0), Complex(0.0, 0.8), {0, 1, 0}, {2, 0, 1}, 1.3, {0.2, -0.1, 0.4});
  const InvarianceReport r = invariance_report(shape, 20, 3);
  EXPECT_LT(r.max_spectrum_deviation, 1e-9);
  EXPECT_LT(r.max_conjugation_deviation, 1e-9);
}

TEST(InvarianceReport, DeterministicForSeed) {
  const HybridState s = beam_pair(0.6, 0.8, {0, 0, 0}, {0, 0.5, 1}, 1.0, 1.5);
  const InvarianceReport a = invariance_report(s, 10, 99);
  const InvarianceReport b = invariance_report(s, 10, 99);
  EXPECT_EQ(a.max_spectrum_deviation, b.max_spectrum_deviation);
  EXPECT_EQ(a.max_conjugation_deviation, b.max_conjugation_deviation);
  EXPECT_EQ(a.worst_spectrum_sample, b.worst_spectrum_sample);
  EXPECT_EQ(a.worst_conjugation_element.translation, b.worst_conjugation_element.translation);
  EXPECT_THROW(invariance_report(s, 0, 1), DomainError);
}

TEST(Sampler, RangesAndUnitRotations) {
  GalileanSampler sampler(5);
  for (int rep = 0; rep < 1000; ++rep) {
    const GalileanElement g = sampler.next();
    EXPECT_LE(std::abs(g.time_shift), 5.0);
    auto len = [](const Vec3& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); };
    EXPECT_LE(len(g.translation), 5.0);
    EXPECT_LE(len(g.boost), 5.0);
    EXPECT_NEAR(g.rotation.norm(), 1.0, 1e-15);
  }
}

}  // namespace
}  // namespace cdent
