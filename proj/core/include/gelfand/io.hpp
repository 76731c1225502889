#pragma once

#include <string>
#include <variant>

#include "gelfand/suite.hpp"

namespace gelfand {

// JSON documents exchanged with the CLI. All indices are 0-based; complex
// numbers are [re, im] pairs. Parsing throws std::invalid_argument with a
// human-readable message on malformed input.

/// {"name", "order", "table"} (row-major or nested rows) or
/// {"name", "degree", "generators": [[images...], ...]}.
GroupPtr parse_group_document(const std::string& text);

/// {"members": [indices]} or {"generators": [indices]}; either way the
/// result is the closure of the listed elements.
Subgroup parse_subgroup_document(const std::string& text, const GroupPtr& group);

/// {"pair", "domain": "group"|"classes", "values": [[re,im], ...]}.
struct FunctionDocument {
  std::string pair;
  std::variant<GroupFunction, BiInvariantFunction> value;
};

FunctionDocument parse_function_document(const std::string& text, const PairContext& ctx);

std::string write_function_document(const std::string& pair, const BiInvariantFunction& f);

/// Spectral document: mirrors the function document with domain "spectral"
/// and echoes the basis (class values per function) for safety.
std::string write_spectral_document(const std::string& pair, const SpectralVector& F);

/// Parses a spectral document and validates the echoed basis against
/// `basis` to 1e-9.
SpectralVector parse_spectral_document(const std::string& text, const BasisPtr& basis);

/// {"mode": "user", "values": [...]} or {"mode": "cayley", "class": i} or
/// {"mode": "cayley", "classes": [i, ...]}.
SobolevWeight parse_weight_document(const std::string& text, const BasisPtr& basis);

/// Analysis document for `gph analyze`: basis, Plancherel weights, gamma,
/// embedding constants and translation moduli.
std::string write_analysis_document(const PairContext& ctx, const BasisPtr& basis,
                                    const PlancherelMeasure& mu, const SobolevWeight& weight,
                                    double s, std::optional<double> alpha);

/// Canonical serialization of a suite report: object keys sorted, floats in
/// fixed %.17g format; byte-identical across runs with the same config.
std::string serialize_report(const SuiteReport& report);

}  // namespace gelfand
