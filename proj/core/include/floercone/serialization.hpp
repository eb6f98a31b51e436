#pragma once

// The JSON interchange format for complexes:
//
//   {
//     "name": "trefoil",
//     "generators": [{"id": "x-1", "a": -1, "m": 2}, ...],
//     "differential": {"x-1": ["x0"]},
//     "duality": {"x-1": "x1", "x0": "x0", "x1": "x-1"}
//   }
//
// Unknown fields are rejected. Serialization is canonical (generators in
// (a, m, id) order, keys sorted), so parse ∘ serialize is the identity on
// validated complexes.

#include <cstdint>
#include <string>

#include "floercone/knot_complex.hpp"

namespace floercone {

/// Parses and validates; throws ParseError, SchemaError or ValidationError.
KnotComplex parse_complex(const std::string& json_text);

/// Parses without enforcing validity (for the `validate` command, which
/// reports the violations itself). Still throws ParseError/SchemaError.
KnotComplex parse_complex_unchecked(const std::string& json_text);

std::string serialize_complex(const KnotComplex& b);

/// FNV-1a 64-bit content digest, "fnv1a64:%016x"; used to make reports
/// self-identifying.
std::string digest(const std::string& bytes);

} // namespace floercone
