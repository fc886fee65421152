#ifndef GKZ_JSON_IO_HPP
#define GKZ_JSON_IO_HPP

#include <string>

#include "gkz/pipeline.hpp"

namespace gkz {

// Parse the documented problem format:
// {"A": [[int]], "beta": ["p/q"], "w": ["p/q"], "T": "p/q",
//  "beta0": "p/q"?, "K": int?, "lifts": [["p/q"]]?, "series": {...}?}
// Rationals may be JSON integers or "p/q" strings.
ProblemSpec parse_problem(const std::string& text);

// Machine-readable report, schema 1. Deterministic: identical spec yields
// byte-identical output (timing is text-format only).
std::string report_to_json(const AnalysisReport& rep);

std::string report_to_text(const AnalysisReport& rep);

}  // namespace gkz

#endif
