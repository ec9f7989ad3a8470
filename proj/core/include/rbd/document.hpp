#pragma once

// JSON documents read and written by the command-line tool.
//
// Spec document (input):
//   {
//     "name": "E(4)",
//     "euler": 48, "signature": -32, "b1": 0,
//     "chains": [ {"n": 2, "m": 1}, {"coeffs": [5, 2]} ],
//     "extra_blowups": 0,
//     "asserted": {"kaehler": false, "orbifold_canonical_ample": true,
//                  "c1_dot_omega_negative": false}
//   }
//
// Integers may be JSON numbers or decimal strings. In reports, rationals are
// {"num": .., "den": ..} objects and symbolic values carry an advisory
// "decimal" string; no field is a floating-point number.

#include <string>
#include <string_view>

#include "rbd/surgery.hpp"

namespace rbd {

// Throws Error(ParseError) with line and column for malformed JSON, or with
// a JSON pointer for schema violations; domain errors (InvalidParameters,
// InvalidChain, UnrecognizedChain, ParityViolation) propagate unchanged.
ManifoldSpec parse_spec_document(std::string_view text);
std::string spec_to_json(const ManifoldSpec& spec);

std::string report_to_json(const BlowdownReport& report, int precision = 12);
BlowdownReport report_from_json(std::string_view text);
std::string render_report_text(const BlowdownReport& report, int precision = 12);

std::string prop41_to_json(const Prop41Report& report);
std::string render_prop41_text(const Prop41Report& report);

}  // namespace rbd
