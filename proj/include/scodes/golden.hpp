#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "scodes/recipe.hpp"

namespace scodes {

// Reference manifest support.  The manifest is a JSON document
//   {schema_version: 1, cases: [...]}
// where each case freezes the externally known facts about one code so the
// library can be checked against them.  A case holds either a recipe or a
// direct generator matrix as input, plus an "expected" block whose keys are
// compared against the computed report:
//   length, dimension, min_distance   integers
//   weights                           object, nonzero weight -> count; a null
//                                     count checks presence only, and the key
//                                     set must match the measured set exactly
//   z0                                messages per codeword (kernel size)
//   flags                             subset of the report flag block
//   subfield                          nested block of the same shape
//   subfield_tuples                   sorted bitstrings of the expanded
//                                     binary defining set
//   subfield_matrix                   exact rows of the stacked trace matrix
// The kind field says how a mismatch is treated: "proved" cases must match,
// while "informational" and "conjecture-evidence" cases only report, since
// they record stated values that the source did not prove.

struct MatrixInput {
    int field_n = 0;
    std::optional<std::uint32_t> modulus;
    std::vector<std::vector<std::uint32_t>> rows;
};

struct GoldenCase {
    std::string id;
    std::string kind;  // "proved", "informational", "conjecture-evidence"
    std::string source;
    std::optional<Recipe> recipe;
    std::optional<MatrixInput> matrix;
    nlohmann::json expected;
    std::string note;
};

struct GoldenOutcome {
    std::string id;
    std::string kind;
    std::vector<std::string> mismatches;
    double seconds = 0.0;
    bool passed() const { return mismatches.empty(); }
    // Only proved cases can fail a verification run.
    bool binding() const { return kind == "proved"; }
};

// The manifest text compiled into the library.
const char* embedded_golden_manifest();

// Parses a manifest document; throws std::invalid_argument on malformed input.
std::vector<GoldenCase> parse_golden_manifest(const nlohmann::json& doc);

// Runs one case and collects mismatch descriptions.
GoldenOutcome run_golden_case(const GoldenCase& c, const Budget& budget = {});

}  // namespace scodes
