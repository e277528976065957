#pragma once

#include <json.hpp>

#include "permdyn/chain.hpp"
#include "permdyn/complex_matrix.hpp"
#include "permdyn/operator_polynomial.hpp"
#include "permdyn/quantum_state.hpp"

namespace permdyn {

/// Matrices serialize as arrays of rows, each entry a [re, im] pair.
nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

/// {"S": ..., "T": ..., "coefficients": [[re, im], ...]}
nlohmann::json poly_to_json(const OperatorPolynomial& poly);
OperatorPolynomial poly_from_json(const nlohmann::json& j);

/// [{"state": "ud...", "re": ..., "im": ...}, ...] sorted by state; top_k > 0
/// keeps only the top_k largest amplitudes.
nlohmann::json amplitudes_to_json(const QuantumState& psi, int top_k = 0);
QuantumState state_from_json(const nlohmann::json& j, int spins);

/// {"spins": 2S, "orbits": [{"rep": ..., "length": L, "count": m}, ...],
///  "total_states": 2^{2S}} with one entry per orbit length, `count` the
/// number of orbits of that length and `rep` the smallest representative.
nlohmann::json orbit_report(const std::vector<OrbitRecord>& orbits, int spins);

}  // namespace permdyn
