#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "qmeur/measure.hpp"
#include "qmeur/qstate.hpp"

namespace qmeur {

// State files:  { "dims": [d0, ...], "matrix": [[[re, im], ...], ...] }  (row-major)
// Basis files:  { "label": "...", "vectors": [[[re, im], ...], ...] }   (one entry per vector)
//
// Malformed JSON raises ParseError with the parser's location; structural
// problems raise ParseError naming the field; content that parses but fails
// the validator raises ValidationError.

DensityMatrix parse_state_json(std::string_view text);
DensityMatrix load_state(const std::filesystem::path& path);
std::string state_to_json(const DensityMatrix& rho);

MeasurementBasis parse_basis_json(std::string_view text);
MeasurementBasis load_basis(const std::filesystem::path& path);
std::string basis_to_json(const MeasurementBasis& basis);

/// A built-in name ("pauli-x", ...) or a path to a basis file.
MeasurementBasis resolve_basis(const std::string& name_or_path);

/// Comma-separated list of built-in names and/or file paths.
MeasurementSet parse_bases_list(std::string_view list);

/// Writes to a sibling temporary file and renames it over `path`, so readers
/// never observe partial content.
void write_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace qmeur
