// Command-line front end over the scodes library.
//
// Subcommands:
//   report        build the code for a recipe and print its report
//   verify-paper  run the bundled reference manifest and print verdicts
//   sweep         run the conjecture sweep and stream JSONL records
//   export        write a generator matrix in the plain-text format
//
// Exit codes: 0 success, 1 failed verification, 2 invalid recipe or range,
// 3 enumeration budget exceeded, 4 unwritable output path.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "scodes/golden.hpp"
#include "scodes/report.hpp"
#include "scodes/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitBudget = 3;
constexpr int kExitUnwritable = 4;

// One recipe's worth of command-line state; the Option pointers tell us which
// flags were actually given.
struct RecipeOpts {
    std::string file;
    int field_n = 0;
    std::uint32_t modulus = 0;
    int m = 0;
    std::vector<std::string> parts;
    std::string transform = "none";
    bool subfield = false;

    CLI::Option* file_opt = nullptr;
    CLI::Option* field_opt = nullptr;
    CLI::Option* modulus_opt = nullptr;
    CLI::Option* m_opt = nullptr;
    CLI::Option* parts_opt = nullptr;
    CLI::Option* transform_opt = nullptr;
    CLI::Option* subfield_opt = nullptr;
};

void add_recipe_flags(CLI::App* cmd, RecipeOpts& r) {
    r.file_opt = cmd->add_option("--recipe", r.file, "recipe JSON file; excludes the inline flags");
    r.field_opt = cmd->add_option("--field-n", r.field_n, "field degree n of GF(2^n)");
    r.modulus_opt =
        cmd->add_option("--modulus", r.modulus, "field modulus as an integer bitmask");
    r.m_opt = cmd->add_option("--m", r.m, "ambient dimension m");
    r.parts_opt = cmd->add_option("--parts", r.parts,
                                  "part spec per basis power, 's:coords' or 'v:vectors' "
                                  "(repeatable)");
    r.transform_opt = cmd->add_option("--transform", r.transform, "set transform")
                          ->check(CLI::IsMember({"none", "puncture", "complement"}));
    r.subfield_opt = cmd->add_flag("--subfield", r.subfield, "also handle the binary subfield code");
}

scodes::Recipe build_recipe(const RecipeOpts& r) {
    if (r.file_opt->count()) {
        for (const CLI::Option* o : {r.field_opt, r.modulus_opt, r.m_opt, r.parts_opt,
                                     r.transform_opt, r.subfield_opt})
            if (o->count())
                throw std::invalid_argument("--recipe excludes the inline recipe flags");
        std::ifstream in(r.file);
        if (!in) throw std::invalid_argument("cannot read recipe file '" + r.file + "'");
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(in);
        } catch (const nlohmann::json::exception& e) {
            throw std::invalid_argument("malformed recipe: " + std::string(e.what()));
        }
        return scodes::recipe_from_json(doc);
    }

    if (!r.field_opt->count() || !r.m_opt->count() || !r.parts_opt->count())
        throw std::invalid_argument("need --field-n, --m and --parts, or --recipe FILE");
    scodes::Recipe rec;
    rec.field_n = r.field_n;
    if (r.modulus_opt->count()) rec.modulus = r.modulus;
    rec.m = r.m;
    for (const auto& p : r.parts) rec.parts.push_back(scodes::parse_part_spec(p, r.m));
    if (r.transform == "puncture")
        rec.transform = scodes::Transform::puncture;
    else if (r.transform == "complement")
        rec.transform = scodes::Transform::complement;
    rec.subfield = r.subfield;
    return rec;
}

scodes::Budget apply_budget(const std::vector<std::string>& entries, scodes::Budget base) {
    for (const auto& entry : entries) {
        const auto eq = entry.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("budget entries look like key=value, got '" + entry +
                                        "'");
        const std::string key = entry.substr(0, eq);
        unsigned long long value = 0;
        try {
            value = std::stoull(entry.substr(eq + 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad budget value in '" + entry + "'");
        }
        if (value == 0) throw std::invalid_argument("budget values must be positive");
        if (key == "messages")
            base.max_messages = value;
        else if (key == "codewords")
            base.max_codewords = value;
        else if (key == "support-ops")
            base.max_support_ops = value;
        else if (key == "set-elements")
            base.max_set_elements = value;
        else
            throw std::invalid_argument(
                "unknown budget key '" + key +
                "' (messages, codewords, support-ops, set-elements)");
    }
    return base;
}

int run_report(const RecipeOpts& ropts, const std::vector<std::string>& budget_entries,
               const std::string& format) {
    const auto recipe = build_recipe(ropts);
    const auto budget = apply_budget(budget_entries, scodes::Budget{});
    if (format == "text")
        std::cout << scodes::recipe_report_text(recipe, budget);
    else
        std::cout << scodes::recipe_report_json(recipe, budget).dump(2) << '\n';
    return kExitOk;
}

int run_verify(const std::string& manifest_path,
               const std::vector<std::string>& budget_entries) {
    nlohmann::json doc;
    try {
        if (manifest_path.empty()) {
            doc = nlohmann::json::parse(scodes::embedded_golden_manifest());
        } else {
            std::ifstream in(manifest_path);
            if (!in)
                throw std::invalid_argument("cannot read manifest '" + manifest_path + "'");
            doc = nlohmann::json::parse(in);
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("malformed manifest: " + std::string(e.what()));
    }
    const auto cases = scodes::parse_golden_manifest(doc);
    if (cases.empty())
        std::cerr << "warning: manifest has no cases; nothing to verify\n";

    // Keep the small exhaustive minimality scans and skip the quadratic ones
    // so each case stays fast; --budget can widen this.
    scodes::Budget base;
    base.max_support_ops = 1ull << 28;
    const auto budget = apply_budget(budget_entries, base);

    int passed = 0, failed = 0, noted = 0;
    for (const auto& c : cases) {
        const auto outcome = scodes::run_golden_case(c, budget);
        const char* status = "pass";
        if (!outcome.passed()) status = outcome.binding() ? "FAIL" : "note";
        if (outcome.passed())
            ++passed;
        else if (outcome.binding())
            ++failed;
        else
            ++noted;
        std::cout << status << "  " << c.id << "  [" << c.kind << "]\n";
        for (const auto& line : outcome.mismatches) std::cout << "      " << line << '\n';
    }
    std::cout << "summary: " << cases.size() << " cases, " << passed << " pass, " << failed
              << " fail, " << noted << " noted\n";
    return failed ? kExitVerifyFailed : kExitOk;
}

int run_sweep_cmd(const scodes::SweepOptions& options, const std::string& out_path) {
    const auto report = scodes::run_sweep(options);
    if (out_path.empty()) {
        report.write_jsonl(std::cout);
        return kExitOk;
    }
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "error: cannot write '" << out_path << "'\n";
        return kExitUnwritable;
    }
    report.write_jsonl(out);
    if (!out.good()) {
        std::cerr << "error: short write to '" << out_path << "'\n";
        return kExitUnwritable;
    }
    return kExitOk;
}

int run_export(const RecipeOpts& ropts, const std::vector<std::string>& budget_entries,
               const std::string& target, const std::string& out_path) {
    const auto recipe = build_recipe(ropts);
    const auto budget = apply_budget(budget_entries, scodes::Budget{});
    const std::string text = scodes::recipe_matrix_text(recipe, target == "subfield", budget);
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "error: cannot write '" << out_path << "'\n";
        return kExitUnwritable;
    }
    out << text;
    out.close();
    if (!out.good()) {
        std::cerr << "error: short write to '" << out_path << "'\n";
        return kExitUnwritable;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"linear codes over GF(2^n) built from down-closed set systems"};
    app.require_subcommand(1);

    std::vector<std::string> budget_entries;

    auto* report_cmd = app.add_subcommand("report", "build a code and print its report");
    RecipeOpts report_recipe;
    add_recipe_flags(report_cmd, report_recipe);
    std::string format = "json";
    report_cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    report_cmd->add_option("--budget", budget_entries,
                           "enumeration budget override key=value (repeatable)");

    auto* verify_cmd =
        app.add_subcommand("verify-paper", "check the library against the bundled manifest");
    std::string manifest_path;
    verify_cmd->add_option("--manifest", manifest_path,
                           "manifest JSON file; defaults to the built-in one");
    verify_cmd->add_option("--budget", budget_entries,
                           "enumeration budget override key=value (repeatable)");

    auto* sweep_cmd = app.add_subcommand("sweep", "sweep the conjectured families");
    scodes::SweepOptions sweep_options;
    std::string policy = "exhaustive-subsets";
    std::string sweep_out;
    sweep_cmd->add_option("--n-min", sweep_options.n_min, "lowest field degree");
    sweep_cmd->add_option("--n-max", sweep_options.n_max, "highest field degree");
    sweep_cmd->add_option("--m-min", sweep_options.m_min, "lowest ambient dimension");
    sweep_cmd->add_option("--m-max", sweep_options.m_max, "highest ambient dimension");
    sweep_cmd->add_option("--max-sigma", sweep_options.max_sigma,
                          "cap on the total part size sum");
    sweep_cmd->add_option("--policy", policy, "subset selection policy")
        ->check(CLI::IsMember({"exhaustive-subsets", "random-k-subsets"}));
    sweep_cmd->add_option("--samples", sweep_options.sample_count,
                          "tuples kept per cell under random-k-subsets");
    sweep_cmd->add_option("--seed", sweep_options.seed, "sampling seed");
    sweep_cmd->add_option("--conjecture", sweep_options.conjectures,
                          "conjecture id to run (repeatable; default all)");
    sweep_cmd->add_option("--workers", sweep_options.workers,
                          "worker threads; 0 picks the hardware count");
    sweep_cmd->add_option("--out", sweep_out, "write the JSONL stream here instead of stdout");
    sweep_cmd->add_option("--budget", budget_entries,
                          "enumeration budget override key=value (repeatable)");

    auto* export_cmd = app.add_subcommand("export", "write a generator matrix as plain text");
    RecipeOpts export_recipe;
    add_recipe_flags(export_cmd, export_recipe);
    std::string target = "parent";
    std::string export_out;
    export_cmd->add_option("--target", target, "which matrix to write")
        ->check(CLI::IsMember({"parent", "subfield"}));
    export_cmd->add_option("--out", export_out, "output path")->required();
    export_cmd->add_option("--budget", budget_entries,
                           "enumeration budget override key=value (repeatable)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (report_cmd->parsed()) return run_report(report_recipe, budget_entries, format);
        if (verify_cmd->parsed()) return run_verify(manifest_path, budget_entries);
        if (sweep_cmd->parsed()) {
            sweep_options.policy = policy == "random-k-subsets"
                                       ? scodes::SubsetPolicy::random_sample
                                       : scodes::SubsetPolicy::exhaustive;
            sweep_options.budget = apply_budget(budget_entries, scodes::Budget{});
            return run_sweep_cmd(sweep_options, sweep_out);
        }
        if (export_cmd->parsed())
            return run_export(export_recipe, budget_entries, target, export_out);
    } catch (const scodes::capacity_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    return kExitOk;
}
