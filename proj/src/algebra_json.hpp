#pragma once

#include <string>

#include "json.hpp"

#include "algebra.hpp"

namespace quatrec {

// File schema for a presentation: all scalars travel as exact strings.
//   { "base": "Q" | "Z" | {"Fp": p},
//     "dim": n,
//     "unit": [n scalar strings],
//     "table": n x n array of [n scalar strings],
//     "names": optional [n strings] }
nlohmann::json algebra_to_json(const AlgebraPresentation& a);

// Schema and scalar-grammar validation only; algebraic validation (unit
// laws, associativity) is run by the commands so its failures surface as
// refusals with a witness rather than as input errors.
AlgebraPresentation algebra_from_json(const nlohmann::json& j);

// Reads and parses a file; InputError carries the parse position or the
// offending field path.
AlgebraPresentation load_algebra(const std::string& path);

void save_algebra(const AlgebraPresentation& a, const std::string& path);

// FNV-1a 64 of the canonical serialization, as 16 hex digits; whitespace and
// key order in the source file do not affect it.
std::string algebra_digest(const AlgebraPresentation& a);

}  // namespace quatrec
