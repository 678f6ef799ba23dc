#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "scodes/code.hpp"

namespace scodes {

// Textual recipe layer shared by the command line, recipe files, and the
// bundled reference manifest.  A part spec is either
//   s:<coords>    the full down-set of one subset of [m] given as 1-based
//                 coordinates, e.g. "s:1,2"; bare "s:" is the zero-only part
//   v:<vectors>   an explicit comma-separated list of m-character bitstrings,
//                 leftmost character = coordinate 1, e.g. "v:10,01,11"
// and a recipe bundles a field, the ambient dimension, one part per basis
// power, a set transform, and whether the binary subfield code is wanted.

struct PartSpec {
    bool simplex = true;
    std::uint32_t generator = 0;         // simplex form: the subset mask
    std::vector<std::uint32_t> vectors;  // explicit form: member masks, sorted
};

enum class Transform { none, puncture, complement };

struct Recipe {
    int field_n = 0;
    std::optional<std::uint32_t> modulus;  // empty picks the field default
    int m = 0;
    std::vector<PartSpec> parts;  // exactly field_n entries
    Transform transform = Transform::none;
    bool subfield = false;
};

// Parses one part spec; throws std::invalid_argument with a diagnostic.
PartSpec parse_part_spec(const std::string& text, int m);

// Canonical text of a part spec (explicit vectors come out sorted).
std::string part_spec_text(const PartSpec& part, int m);

// Short summary used in reports: "[s:1,2; s:2,3; s:2] puncture".
std::string recipe_summary(const Recipe& r);

// Recipe files are JSON with a schema_version field.  Version 1 holds
// {field: {n, modulus?}, m, parts: [spec strings], transform?, subfield?};
// transform defaults to "none" and subfield to false.  Malformed documents
// throw std::invalid_argument.
Recipe recipe_from_json(const nlohmann::json& j);
nlohmann::ordered_json recipe_to_json(const Recipe& r);

// Expands the parts into member sets and applies the transform.
DefiningSet build_defining_set(const Recipe& r, const Budget& budget = {});

}  // namespace scodes
