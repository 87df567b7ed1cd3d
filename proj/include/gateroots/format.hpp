#pragma once

// Text, JSON and LaTeX renderings of matrices, states and verification
// reports, plus the JSON readers the CLI accepts.
//
// JSON matrix:  {"dim":d,"entries":[[re,im],...]}   row-major, d*d pairs
// JSON state:   {"dim":d,"amplitudes":[[re,im],...]}
// Numbers are written as shortest round-trip decimals.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gateroots/claims.hpp"
#include "gateroots/gates.hpp"

namespace gateroots {

enum class Format { Text, Json, Latex };

std::optional<Format> format_from_string(std::string_view text);

/// Shortest decimal that parses back to exactly `value`; -0 prints as 0.
std::string json_number(double value);

std::string format_matrix(const SquareMatrix& m, Format format);
std::string format_state(const StateVector& psi, Format format);
std::string format_report(const VerificationReport& report, Format format);
std::string format_claims_list(const std::vector<Claim>& claims, Format format);

/// Reads the JSON matrix encoding. Throws ParseError on malformed input.
SquareMatrix matrix_from_json(std::string_view text);

/// Reads a JSON array of [re, im] pairs. A norm within 1e-6 of 1 is
/// renormalised; anything further off is rejected with
/// std::invalid_argument. Malformed JSON throws ParseError.
StateVector state_from_amplitudes_json(std::string_view text);

}  // namespace gateroots
