#pragma once

#include <string>

#include "heisrep/repcore.hpp"
#include "heisrep/structure.hpp"

namespace heisrep {

/// Malformed or schema-invalid input file.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Canonical REP text (JSON with fixed key order, sorted exponents and
/// sorted sparse entries); byte-stable across runs.
std::string write_rep(const CoefficientFamily& f);
CoefficientFamily read_rep(const std::string& text);

/// Canonical LIE text: dense row-major layer matrices as value strings.
std::string write_lie(const LieLayerData& data);
LieLayerData read_lie(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace heisrep
