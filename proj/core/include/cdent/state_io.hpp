#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "cdent/hybrid_state.hpp"

namespace cdent {

inline constexpr int kStateSchemaVersion = 1;

// State file schema (JSON):
//   {"schema_version": 1, "n": N, "d": D, "components": [C_0, ..., C_{N-1}]}
// with each component one of
//   {"type": "gaussian_sum", "terms": [{"amplitude": [re, im], "center": [..],
//     "width": s, "linear_phase": [..], "quad_phase": b}, ...]}
//   {"type": "hermite", "scale": s, "origin": [..], "cutoff": L,
//     "coefficients": [[re, im], ...]}            (dense, row-major)
//   {"type": "hermite", "scale": s, "origin": [..],
//     "modes": [{"index": [m_1, .., m_D], "coefficient": [re, im]}, ...]}
//   {"type": "composite", "parts": [<gaussian_sum or hermite>, ...]}
// linear_phase and quad_phase default to zero. Complex values may also be
// given as plain real numbers.
//
// Throws StructuralError carrying the line/column of a syntax error or the
// path of the offending field.
HybridState read_state(std::string_view json_text);
HybridState read_state_file(const std::string& path);

// Dense Hermite coefficients, 17-significant-digit floats, fixed key order.
void write_state(std::ostream& out, const HybridState& state);
std::string write_state(const HybridState& state);

}  // namespace cdent
