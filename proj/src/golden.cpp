#include "scodes/golden.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

#include "scodes/report.hpp"
#include "scodes/subfield.hpp"

namespace scodes {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& what) {
    throw std::invalid_argument("malformed manifest: " + what);
}

MatrixInput matrix_from_json(const json& j) {
    MatrixInput in;
    in.field_n = j.at("field").at("n").get<int>();
    const auto& field = j.at("field");
    if (field.contains("modulus") && !field["modulus"].is_null())
        in.modulus = field["modulus"].get<std::uint32_t>();
    for (const auto& row : j.at("rows")) {
        std::vector<std::uint32_t> r;
        for (const auto& v : row) r.push_back(v.get<std::uint32_t>());
        in.rows.push_back(std::move(r));
    }
    if (in.rows.empty()) bad("matrix input needs at least one row");
    for (const auto& r : in.rows)
        if (r.size() != in.rows.front().size()) bad("ragged matrix input");
    return in;
}

std::string num(long long v) { return std::to_string(v); }

// Compares the keys present in `expected` against a code report block and
// appends one line per disagreement.
void compare_block(const json& expected, const ordered_json& report, const std::string& prefix,
                   std::vector<std::string>& out) {
    for (const char* key : {"length", "dimension", "min_distance"}) {
        if (!expected.contains(key)) continue;
        const long long want = expected[key].get<long long>();
        const long long got = report.at(key).get<long long>();
        if (want != got)
            out.push_back(prefix + key + ": expected " + num(want) + ", measured " + num(got));
    }

    if (expected.contains("weights")) {
        std::map<long long, std::optional<unsigned long long>> want;
        for (const auto& [k, v] : expected["weights"].items())
            want[std::stoll(k)] = v.is_null()
                                      ? std::optional<unsigned long long>()
                                      : std::optional<unsigned long long>(
                                            v.get<unsigned long long>());
        std::map<long long, unsigned long long> got;
        for (const auto& row : report.at("weights"))
            got[row.at("w").get<long long>()] = row.at("A").get<unsigned long long>();
        for (const auto& [w, a] : want) {
            auto it = got.find(w);
            if (it == got.end()) {
                out.push_back(prefix + "weights: expected weight " + num(w) + " absent");
            } else if (a && *a != it->second) {
                out.push_back(prefix + "weights[" + num(w) + "]: expected A " + num(*a) +
                              ", measured " + num(it->second));
            }
        }
        for (const auto& [w, a] : got)
            if (!want.count(w))
                out.push_back(prefix + "weights: unexpected weight " + num(w) + " with A " +
                              num(a));
    }

    if (expected.contains("z0")) {
        const auto& rows = report.at("weights");
        if (rows.empty()) {
            out.push_back(prefix + "z0: no nonzero weights to derive it from");
        } else {
            const auto a = rows[0].at("A").get<unsigned long long>();
            const auto z = rows[0].at("Z").get<unsigned long long>();
            const unsigned long long want = expected["z0"].get<unsigned long long>();
            if (a == 0 || z % a != 0 || z / a != want)
                out.push_back(prefix + "z0: expected " + num(want) + ", measured Z/A = " +
                              num(z) + "/" + num(a));
        }
    }

    if (expected.contains("flags")) {
        const auto& got = report.at("flags");
        for (const auto& [key, v] : expected["flags"].items()) {
            const bool want = v.get<bool>();
            const auto& slot = got.at(key);
            if (slot.is_null())
                out.push_back(prefix + "flags." + key + ": expected " +
                              (want ? "true" : "false") + ", scan skipped");
            else if (slot.get<bool>() != want)
                out.push_back(prefix + "flags." + key + ": expected " +
                              (want ? "true" : "false") + ", measured " +
                              (slot.get<bool>() ? "true" : "false"));
        }
    }

    if (expected.contains("subfield")) {
        if (!report.contains("subfield"))
            out.push_back(prefix + "subfield: block missing from report");
        else
            compare_block(expected["subfield"], report.at("subfield"), prefix + "subfield.",
                          out);
    }
}

bool wants_report(const json& expected) {
    for (const char* key :
         {"length", "dimension", "min_distance", "weights", "z0", "flags", "subfield"})
        if (expected.contains(key)) return true;
    return false;
}

void run_recipe_case(const GoldenCase& c, const Budget& budget,
                     std::vector<std::string>& out) {
    if (wants_report(c.expected))
        compare_block(c.expected, recipe_report_json(*c.recipe, budget), "", out);

    if (c.expected.contains("subfield_tuples")) {
        auto sub = subfield_defining_set(build_defining_set(*c.recipe, budget));
        std::vector<std::string> got;
        for (std::size_t j = 0; j < sub.count(); ++j) {
            std::string s(std::size_t(sub.m), '0');
            for (int i = 0; i < sub.m; ++i) s[std::size_t(i)] += char(sub.row(j)[i]);
            got.push_back(std::move(s));
        }
        std::sort(got.begin(), got.end());
        std::vector<std::string> want;
        for (const auto& t : c.expected["subfield_tuples"]) want.push_back(t.get<std::string>());
        if (got != want) {
            std::string line = "subfield_tuples: expected {";
            for (const auto& t : want) line += " " + t;
            line += " }, measured {";
            for (const auto& t : got) line += " " + t;
            line += " }";
            out.push_back(line);
        }
    }
}

void run_matrix_case(const GoldenCase& c, const Budget& budget,
                     std::vector<std::string>& out) {
    const MatrixInput& in = *c.matrix;
    auto gf = in.modulus ? make_field(in.field_n, *in.modulus) : make_field(in.field_n);
    const std::size_t cols = in.rows.front().size();
    std::vector<std::uint8_t> entries;
    for (const auto& row : in.rows)
        for (std::uint32_t v : row) entries.push_back(std::uint8_t(v));
    auto code = code_from_matrix(gf, int(in.rows.size()), cols, std::move(entries));

    if (wants_report(c.expected)) {
        auto rep = analyze_code(code, budget);
        compare_block(c.expected, code_report_json(*gf, 0, "input matrix", rep), "", out);
    }

    if (c.expected.contains("subfield_matrix")) {
        auto stack = subfield_generator_stack(code);
        std::vector<std::vector<std::uint32_t>> want;
        for (const auto& row : c.expected["subfield_matrix"]) {
            std::vector<std::uint32_t> r;
            for (const auto& v : row) r.push_back(v.get<std::uint32_t>());
            want.push_back(std::move(r));
        }
        std::vector<std::vector<std::uint32_t>> got;
        for (int i = 0; i < stack.msg_dim; ++i)
            got.emplace_back(stack.row(i), stack.row(i) + stack.length);
        if (got != want) {
            if (got.size() != want.size()) {
                out.push_back("subfield_matrix: expected " + num(want.size()) +
                              " rows, measured " + num(got.size()));
            } else {
                for (std::size_t i = 0; i < got.size(); ++i)
                    if (got[i] != want[i])
                        out.push_back("subfield_matrix: row " + num(i + 1) + " differs");
            }
        }
    }
}

}  // namespace

std::vector<GoldenCase> parse_golden_manifest(const json& doc) {
    try {
        if (!doc.is_object() || doc.at("schema_version").get<int>() != 1)
            bad("expected schema_version 1");
        std::vector<GoldenCase> cases;
        std::set<std::string> seen;
        for (const auto& cj : doc.at("cases")) {
            GoldenCase c;
            c.id = cj.at("id").get<std::string>();
            c.kind = cj.at("kind").get<std::string>();
            if (c.kind != "proved" && c.kind != "informational" &&
                c.kind != "conjecture-evidence")
                bad("case '" + c.id + "' has unknown kind '" + c.kind + "'");
            c.source = cj.at("source").get<std::string>();
            if (cj.contains("recipe")) c.recipe = recipe_from_json(cj["recipe"]);
            if (cj.contains("input_matrix")) c.matrix = matrix_from_json(cj["input_matrix"]);
            if (c.recipe.has_value() == c.matrix.has_value())
                bad("case '" + c.id + "' needs exactly one of recipe and input_matrix");
            c.expected = cj.at("expected");
            if (!c.expected.is_object() || c.expected.empty())
                bad("case '" + c.id + "' has an empty expected block");
            if (cj.contains("note")) c.note = cj["note"].get<std::string>();
            if (!seen.insert(c.id).second) bad("duplicate case id '" + c.id + "'");
            cases.push_back(std::move(c));
        }
        return cases;
    } catch (const json::exception& e) {
        bad(e.what());
    }
}

GoldenOutcome run_golden_case(const GoldenCase& c, const Budget& budget) {
    GoldenOutcome out;
    out.id = c.id;
    out.kind = c.kind;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        if (c.recipe)
            run_recipe_case(c, budget, out.mismatches);
        else
            run_matrix_case(c, budget, out.mismatches);
    } catch (const capacity_error& e) {
        out.mismatches.push_back(std::string("capacity: ") + e.what());
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

}  // namespace scodes
