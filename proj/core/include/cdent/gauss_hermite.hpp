#pragma once

#include <cstddef>
#include <vector>

namespace cdent {

// n-point Gauss-Hermite rule for int f(x) exp(-x^2) dx. `scaled_weights`
// holds w_i exp(x_i^2), for integrating f directly: int f ~ sum W_i f(x_i).
struct GaussHermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> scaled_weights;
};

// Nodes ascending. Newton iteration on the orthonormal Hermite recurrence;
// n >= 1.
GaussHermiteRule gauss_hermite_rule(std::size_t n);

}  // namespace cdent
