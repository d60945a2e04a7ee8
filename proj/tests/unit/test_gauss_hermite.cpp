#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "cdent/gauss_hermite.hpp"
#include "cdent/hermite.hpp"

namespace cdent {
namespace {

TEST(GaussHermiteRule, TwoPointRule) {
  const GaussHermiteRule r = gauss_hermite_rule(2);
  EXPECT_NEAR(r.nodes[0], -1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(r.nodes[1], 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(r.weights[0], std::sqrt(std::numbers::pi) / 2.0, 1e-15);
  EXPECT_NEAR(r.weights[1], std::sqrt(std::numbers::pi) / 2.0, 1e-15);
}

// int x^{2k} e^{-x^2} = Gamma(k + 1/2); exact for 2k <= 2n - 1.
TEST(GaussHermiteRule, EvenMomentsExact) {
  for (std::size_t n : {5u, 20u, 64u}) {
    const GaussHermiteRule r = gauss_hermite_rule(n);
    for (std::size_t k = 0; 2 * k <= 2 * n - 1 && k <= 12; ++k) {
      double sum = 0.0;
      for (std::size_t i = 0; i < n; ++i) sum += r.weights[i] * std::pow(r.nodes[i], 2.0 * k);
      const double exact = std::tgamma(k + 0.5);
      EXPECT_NEAR(sum / exact, 1.0, 1e-12) << "n=" << n << " k=" << k;
    }
  }
}

TEST(GaussHermiteRule, NodesAscendingAndSymmetric) {
  const GaussHermiteRule r = gauss_hermite_rule(64);
  for (std::size_t i = 0; i + 1 < 64; ++i) EXPECT_LT(r.nodes[i], r.nodes[i + 1]);
  for (std::size_t i = 0; i < 32; ++i) {
    EXPECT_NEAR(r.nodes[i], -r.nodes[63 - i], 1e-12);
    EXPECT_NEAR(r.scaled_weights[i], r.weights[i] * std::exp(r.nodes[i] * r.nodes[i]),
                1e-12 * r.scaled_weights[i]);
  }
}

TEST(HermiteFunctions, OrthonormalUnderQuadrature) {
  const GaussHermiteRule r = gauss_hermite_rule(40);
  const std::size_t count = 12;
  std::vector<std::vector<double>> values;
  for (double x : r.nodes) values.push_back(hermite_functions(count, x));
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b < count; ++b) {
      double sum = 0.0;
      for (std::size_t i = 0; i < r.nodes.size(); ++i)
        sum += r.scaled_weights[i] * values[i][a] * values[i][b];
      EXPECT_NEAR(sum, a == b ? 1.0 : 0.0, 1e-12);
    }
}

TEST(HermiteFunctions, ParityAndGroundState) {
  const auto at0 = hermite_functions(5, 0.0);
  EXPECT_NEAR(at0[0], std::pow(std::numbers::pi, -0.25), 1e-15);
  EXPECT_EQ(at0[1], 0.0);
  EXPECT_EQ(at0[3], 0.0);
  const auto plus = hermite_functions(6, 0.7);
  const auto minus = hermite_functions(6, -0.7);
  for (std::size_t m = 0; m < 6; ++m) EXPECT_NEAR(minus[m], (m % 2 ? -1.0 : 1.0) * plus[m], 1e-15);
}

TEST(HermiteFunctions, ComplexArgumentMatchesReal) {
  const auto re = hermite_functions(8, 0.3);
  const auto cx = hermite_functions(8, std::complex<double>(0.3, 0.0));
  for (std::size_t m = 0; m < 8; ++m) EXPECT_NEAR(std::abs(cx[m] - re[m]), 0.0, 1e-15);
}

}  // namespace
}  // namespace cdent
