#include "scodes/recipe.hpp"

#include <algorithm>
#include <stdexcept>

#include "scodes/simplicial.hpp"

namespace scodes {

namespace {

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(text.substr(start));
            return out;
        }
        out.push_back(text.substr(start, comma - start));
        start = comma + 1;
    }
}

const char* transform_name(Transform t) {
    switch (t) {
        case Transform::none: return "none";
        case Transform::puncture: return "puncture";
        case Transform::complement: return "complement";
    }
    throw std::logic_error("unreachable transform");
}

Transform transform_from_name(const std::string& name) {
    if (name == "none") return Transform::none;
    if (name == "puncture") return Transform::puncture;
    if (name == "complement") return Transform::complement;
    throw std::invalid_argument("unknown transform '" + name + "'");
}

}  // namespace

PartSpec parse_part_spec(const std::string& text, int m) {
    if (m < 1 || m > 31) throw std::invalid_argument("ambient dimension outside [1, 31]");
    if (text.size() < 2 || (text[0] != 's' && text[0] != 'v') || text[1] != ':')
        throw std::invalid_argument("part spec must start with 's:' or 'v:', got '" + text + "'");
    const std::string payload = text.substr(2);

    PartSpec part;
    if (text[0] == 's') {
        part.simplex = true;
        if (payload.empty()) return part;  // "s:" is the zero-only part
        for (const std::string& token : split_commas(payload)) {
            if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
                throw std::invalid_argument("bad coordinate '" + token + "' in '" + text + "'");
            const long c = std::stol(token);
            if (c < 1 || c > m)
                throw std::invalid_argument("coordinate " + token + " outside [1, " +
                                            std::to_string(m) + "]");
            part.generator |= std::uint32_t(1) << (c - 1);
        }
        return part;
    }

    part.simplex = false;
    if (payload.empty())
        throw std::invalid_argument("explicit part needs at least one vector: '" + text + "'");
    for (const std::string& token : split_commas(payload)) {
        if (static_cast<int>(token.size()) != m)
            throw std::invalid_argument("vector '" + token + "' must have exactly " +
                                        std::to_string(m) + " characters");
        std::uint32_t mask = 0;
        for (int i = 0; i < m; ++i) {
            if (token[std::size_t(i)] == '1')
                mask |= std::uint32_t(1) << i;
            else if (token[std::size_t(i)] != '0')
                throw std::invalid_argument("vector '" + token + "' may only contain 0 and 1");
        }
        part.vectors.push_back(mask);
    }
    std::sort(part.vectors.begin(), part.vectors.end());
    part.vectors.erase(std::unique(part.vectors.begin(), part.vectors.end()),
                       part.vectors.end());
    return part;
}

std::string part_spec_text(const PartSpec& part, int m) {
    std::string out;
    if (part.simplex) {
        out = "s:";
        bool first = true;
        for (int i = 0; i < m; ++i) {
            if (!(part.generator >> i & 1)) continue;
            if (!first) out += ',';
            out += std::to_string(i + 1);
            first = false;
        }
        return out;
    }
    out = "v:";
    for (std::size_t j = 0; j < part.vectors.size(); ++j) {
        if (j) out += ',';
        for (int i = 0; i < m; ++i) out += (part.vectors[j] >> i & 1) ? '1' : '0';
    }
    return out;
}

std::string recipe_summary(const Recipe& r) {
    std::string out = "[";
    for (std::size_t i = 0; i < r.parts.size(); ++i) {
        if (i) out += "; ";
        out += part_spec_text(r.parts[i], r.m);
    }
    out += "]";
    if (r.transform != Transform::none) {
        out += ' ';
        out += transform_name(r.transform);
    }
    return out;
}

Recipe recipe_from_json(const nlohmann::json& j) {
    try {
        if (!j.is_object()) throw std::invalid_argument("recipe must be a JSON object");
        if (!j.contains("schema_version") || j.at("schema_version") != 1)
            throw std::invalid_argument("recipe needs schema_version 1");
        Recipe r;
        const auto& field = j.at("field");
        r.field_n = field.at("n").get<int>();
        if (field.contains("modulus") && !field.at("modulus").is_null())
            r.modulus = field.at("modulus").get<std::uint32_t>();
        r.m = j.at("m").get<int>();
        for (const auto& spec : j.at("parts"))
            r.parts.push_back(parse_part_spec(spec.get<std::string>(), r.m));
        if (j.contains("transform"))
            r.transform = transform_from_name(j.at("transform").get<std::string>());
        if (j.contains("subfield")) r.subfield = j.at("subfield").get<bool>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed recipe: ") + e.what());
    }
}

nlohmann::ordered_json recipe_to_json(const Recipe& r) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["field"] = nlohmann::ordered_json::object();
    j["field"]["n"] = r.field_n;
    if (r.modulus) j["field"]["modulus"] = *r.modulus;
    j["m"] = r.m;
    auto parts = nlohmann::ordered_json::array();
    for (const auto& p : r.parts) parts.push_back(part_spec_text(p, r.m));
    j["parts"] = std::move(parts);
    j["transform"] = transform_name(r.transform);
    j["subfield"] = r.subfield;
    return j;
}

DefiningSet build_defining_set(const Recipe& r, const Budget& budget) {
    if (r.field_n < 1 || r.field_n > GaloisField::kMaxDegree)
        throw std::invalid_argument("field degree outside [1, " +
                                    std::to_string(GaloisField::kMaxDegree) + "]");
    if (static_cast<int>(r.parts.size()) != r.field_n)
        throw std::invalid_argument("recipe needs exactly " + std::to_string(r.field_n) +
                                    " parts, got " + std::to_string(r.parts.size()));
    auto gf = r.modulus ? make_field(r.field_n, *r.modulus) : make_field(r.field_n);
    std::vector<std::vector<std::uint32_t>> expanded;
    expanded.reserve(r.parts.size());
    for (const auto& p : r.parts)
        expanded.push_back(p.simplex ? simplex_of(p.generator, r.m).members : p.vectors);
    auto d = defining_set_from_parts(std::move(gf), r.m, expanded, budget);
    if (r.transform == Transform::puncture) return puncture(d);
    if (r.transform == Transform::complement) return complement(d, budget);
    return d;
}

}  // namespace scodes
