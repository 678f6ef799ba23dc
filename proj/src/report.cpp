#include "scodes/report.hpp"

#include "scodes/subfield.hpp"

namespace scodes {

using nlohmann::ordered_json;

ordered_json code_report_json(const GaloisField& gf, int m, const std::string& recipe_text,
                              const CodeReport& rep) {
    ordered_json j;
    j["field"] = {{"n", gf.degree()}, {"modulus", gf.modulus()}};
    j["m"] = m;
    j["recipe"] = recipe_text;
    j["length"] = rep.length;
    j["dimension"] = rep.dimension;
    j["min_distance"] = rep.min_distance;
    auto weights = ordered_json::array();
    for (const auto& [w, a] : rep.counts) {
        if (w == 0) continue;
        weights.push_back({{"w", w}, {"A", a}, {"Z", rep.zcounts.at(w)}});
    }
    j["weights"] = std::move(weights);
    j["flags"] = {
        {"griesmer", rep.griesmer},
        {"distance_optimal_griesmer", rep.distance_optimal_griesmer},
        {"ashikhmin_barg", rep.ashikhmin_barg},
        {"minimal_exhaustive", rep.minimal ? ordered_json(*rep.minimal) : ordered_json()},
    };
    return j;
}

ordered_json recipe_report_json(const Recipe& r, const Budget& budget) {
    auto d = build_defining_set(r, budget);
    auto rep = analyze_code(build_code(d), budget);
    auto j = code_report_json(*d.gf, r.m, recipe_summary(r), rep);
    if (r.subfield) {
        auto sub = build_subfield_code(d, budget);
        auto srep = analyze_code(sub, budget);
        j["subfield"] = code_report_json(*sub.gf, r.field_n * r.m,
                                         "subfield(" + recipe_summary(r) + ")", srep);
    }
    return j;
}

namespace {

void append_text_block(std::string& out, const std::string& title, const GaloisField& gf,
                       int m, const std::string& recipe_text, const CodeReport& rep) {
    out += title + " [" + std::to_string(rep.length) + "," + std::to_string(rep.dimension) +
           "," + std::to_string(rep.min_distance) + "] GF(2^" + std::to_string(gf.degree()) +
           ") modulus=" + std::to_string(gf.modulus()) + " m=" + std::to_string(m) + "\n";
    out += "  recipe " + recipe_text + "\n";
    for (const auto& [w, a] : rep.counts) {
        if (w == 0) continue;
        out += "  weight " + std::to_string(w) + " A " + std::to_string(a) + " Z " +
               std::to_string(rep.zcounts.at(w)) + "\n";
    }
    auto flag = [](bool b) { return b ? "true" : "false"; };
    out += std::string("  flags griesmer=") + flag(rep.griesmer) +
           " distance_optimal_griesmer=" + flag(rep.distance_optimal_griesmer) +
           " ashikhmin_barg=" + flag(rep.ashikhmin_barg) + " minimal_exhaustive=" +
           (rep.minimal ? flag(*rep.minimal) : "skipped") + "\n";
}

}  // namespace

std::string recipe_report_text(const Recipe& r, const Budget& budget) {
    auto d = build_defining_set(r, budget);
    auto rep = analyze_code(build_code(d), budget);
    std::string out;
    append_text_block(out, "code", *d.gf, r.m, recipe_summary(r), rep);
    if (r.subfield) {
        auto sub = build_subfield_code(d, budget);
        auto srep = analyze_code(sub, budget);
        append_text_block(out, "subfield", *sub.gf, r.field_n * r.m,
                          "subfield(" + recipe_summary(r) + ")", srep);
    }
    return out;
}

std::string matrix_export_text(const LinearCode& c) {
    std::string out = "# GF(2^" + std::to_string(c.gf->degree()) +
                      ") modulus=" + std::to_string(c.gf->modulus()) +
                      " rows=" + std::to_string(c.msg_dim) +
                      " cols=" + std::to_string(c.length) + "\n";
    for (int i = 0; i < c.msg_dim; ++i) {
        const std::uint8_t* row = c.row(i);
        for (std::size_t j = 0; j < c.length; ++j) {
            if (j) out += ' ';
            out += std::to_string(int(row[j]));
        }
        out += '\n';
    }
    return out;
}

std::string recipe_matrix_text(const Recipe& r, bool target_subfield, const Budget& budget) {
    auto code = build_code(build_defining_set(r, budget));
    if (!target_subfield) return matrix_export_text(code);
    return matrix_export_text(subfield_generator_stack(code));
}

}  // namespace scodes
