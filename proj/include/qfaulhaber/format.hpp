#pragma once

#include <string>

#include "qfaulhaber/errors.hpp"
#include "qfaulhaber/tpoly.hpp"

namespace qfaulhaber {

enum class OutputFormat {
    Text,
    Json,
    Csv,
    Latex,
};

/// Parses one of "text", "json", "csv", "latex". Throws Error otherwise.
OutputFormat parse_format(const std::string& name);

/// Canonical human-readable rendering in q, descending exponents, odd
/// t-exponents as half powers: "2*q + 2", "2*q - q^(1/2) + 2", "q^2 + 1".
std::string to_q_string(const TPoly& p);

/// LaTeX math rendering in q: "2q - q^{1/2} + 2"; integer q-powers never
/// appear with a fractional exponent.
std::string to_q_latex(const TPoly& p);

}  // namespace qfaulhaber
