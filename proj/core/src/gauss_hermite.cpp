#include "cdent/gauss_hermite.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cdent/errors.hpp"

namespace cdent {

GaussHermiteRule gauss_hermite_rule(std::size_t n) {
  if (n == 0) throw DomainError("gauss_hermite_rule: need at least one node");
  const double pim4 = std::pow(std::numbers::pi, -0.25);
  const int count = static_cast<int>(n);
  const int half = (count + 1) / 2;

  std::vector<double> x(n), w(n);
  double z = 0.0;
  for (int i = 0; i < half; ++i) {
    // Initial guesses for the largest roots, then each root from the previous ones.
    if (i == 0)
      z = std::sqrt(2.0 * count + 1.0) - 1.85575 * std::pow(2.0 * count + 1.0, -0.16667);
    else if (i == 1)
      z -= 1.14 * std::pow(static_cast<double>(count), 0.426) / z;
    else if (i == 2)
      z = 1.86 * z - 0.86 * x[0];
    else if (i == 3)
      z = 1.91 * z - 0.91 * x[1];
    else
      z = 2.0 * z - x[i - 2];

    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = pim4;
      double p2 = 0.0;
      for (int j = 0; j < count; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / (j + 1)) * p2 - std::sqrt(static_cast<double>(j) / (j + 1)) * p3;
      }
      pp = std::sqrt(2.0 * count) * p2;
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= 1e-15 * std::max(1.0, std::abs(z))) break;
    }
    x[i] = z;
    x[n - 1 - i] = -z;
    w[i] = 2.0 / (pp * pp);
    w[n - 1 - i] = w[i];
  }

  GaussHermiteRule rule;
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = n - 1 - i;
  rule.nodes.reserve(n);
  rule.weights.reserve(n);
  rule.scaled_weights.reserve(n);
  for (std::size_t i : order) {
    rule.nodes.push_back(x[i]);
    rule.weights.push_back(w[i]);
    rule.scaled_weights.push_back(w[i] * std::exp(x[i] * x[i]));
  }
  return rule;
}

}  // namespace cdent
