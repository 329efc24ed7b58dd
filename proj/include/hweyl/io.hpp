#pragma once

#include <string>

#include "json.hpp"

#include "hweyl/vector_twisted.hpp"
#include "hweyl/vector_weyl.hpp"

namespace hweyl::io {

using json = nlohmann::json;

// Readers throw ParseError naming the offending location, e.g. "$.values[3]".

json to_json(const FiniteAbelianGroup& g);
FiniteAbelianGroup group_from_json(const json& j, const std::string& path = "$");

/// A number or an [re, im] pair.
json to_json(cplx z);
cplx complex_from_json(const json& j, const std::string& path);

json to_json(const PhaseFunction& f);
PhaseFunction phase_function_from_json(const json& j, const std::string& path = "$");

/// {"group": ..., "matrix": [[re,im], ...]} with the matrix row-major.
json to_json(const WeylOperator& op);
WeylOperator weyl_operator_from_json(const json& j, const std::string& path = "$");

json to_json(const NormedSpace& s);
NormedSpace space_from_json(const json& j, const std::string& path = "$");

json to_json(const VectorMeasure& nu);
VectorMeasure vector_measure_from_json(const json& j, const std::string& path = "$");

json to_json(const VectorWeylOperator& op);
json to_json(const ScalarMeasure& mu);
json to_json(const VectorPhaseField& field);

json to_json(const Estimate& e);

/// Parses a file; ParseError carries the file name on I/O or syntax errors.
json read_file(const std::string& filename);
/// Writes `j` (indent 2, trailing newline) to a file or to stdout for "-" / "".
void write(const json& j, const std::string& filename);

}  // namespace hweyl::io
