#pragma once

#include <string>

#include "json.hpp"

#include "scodes/analysis.hpp"
#include "scodes/recipe.hpp"

namespace scodes {

// Report and export formats.  A code reports as one JSON object
//   {field: {n, modulus}, m, recipe, length, dimension, min_distance,
//    weights: [{w, A, Z}], flags: {griesmer, distance_optimal_griesmer,
//    ashikhmin_barg, minimal_exhaustive}}
// where the weight list carries the nonzero weights (the zero row is implied:
// A_0 = 1, Z_0 = Z_w / A_w for any listed w) and minimal_exhaustive is null
// when the exhaustive scan was skipped.  A recipe with subfield = true gains
// a "subfield" key holding a second object of the same shape.

nlohmann::ordered_json code_report_json(const GaloisField& gf, int m,
                                        const std::string& recipe_text, const CodeReport& rep);

nlohmann::ordered_json recipe_report_json(const Recipe& r, const Budget& budget = {});

// The same content in a line-oriented text form.
std::string recipe_report_text(const Recipe& r, const Budget& budget = {});

// Plain-text generator matrix: a header line
//   # GF(2^n) modulus=<int> rows=<k> cols=<len>
// then one row of space-separated coefficient integers per generator row.
std::string matrix_export_text(const LinearCode& c);

// The matrix the export command writes: the generator of the recipe's code,
// or its trace stack when the subfield target is chosen.
std::string recipe_matrix_text(const Recipe& r, bool target_subfield, const Budget& budget = {});

}  // namespace scodes
