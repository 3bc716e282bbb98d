#pragma once

#include <json.hpp>

#include "qfaulhaber/tpoly.hpp"

namespace qfaulhaber {

/// Polynomial as {"variable":"t", "note":"q = t^2", "terms":[[e, "coeff"],..]}
/// with ascending exponents, no zero terms, and decimal-string coefficients.
nlohmann::json poly_to_json(const TPoly& p);

/// Rebuilds a TPoly from the schema above. Throws Error on malformed input.
TPoly poly_from_json(const nlohmann::json& j);

}  // namespace qfaulhaber
