#include "scodes/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <mutex>
#include <numeric>
#include <ostream>
#include <random>
#include <stdexcept>
#include <thread>

#include "scodes/analysis.hpp"
#include "scodes/subfield.hpp"

namespace scodes {

using nlohmann::ordered_json;

const std::vector<std::string>& sweep_conjecture_ids() {
    static const std::vector<std::string> ids = {
        "equal-parts-one-weight",
        "complement-parameters",
        "subfield-dimension",
        "subfield-complement-two-weight",
        "parent-weight-sum",
        "subfield-weight-sum",
    };
    return ids;
}

namespace detail {

std::pair<std::string, std::string> facet_verdict(const ordered_json& predicted,
                                                  const ordered_json& measured) {
    std::string mismatched, undecided;
    auto append = [](std::string& list, const std::string& key) {
        if (!list.empty()) list += ", ";
        list += key;
    };
    for (const auto& [key, want] : predicted.items()) {
        if (!measured.contains(key) || measured.at(key).is_null()) {
            append(undecided, key);
        } else if (measured.at(key) != want) {
            append(mismatched, key);
        }
    }
    if (!mismatched.empty()) return {"refuted", "mismatch: " + mismatched};
    if (!undecided.empty()) return {"skipped", "undecided: " + undecided};
    return {"confirmed", ""};
}

std::vector<std::vector<std::uint32_t>> admissible_parts(const std::string& conjecture_id,
                                                         int n, int m, int max_sigma) {
    const auto& known = sweep_conjecture_ids();
    if (std::find(known.begin(), known.end(), conjecture_id) == known.end())
        throw std::invalid_argument("unknown conjecture id: " + conjecture_id);
    if (n < 1 || m < 1 || m > 31)
        throw std::invalid_argument("need a positive field degree and dimension");

    const std::uint32_t full = (std::uint32_t(1) << m) - 1;
    std::vector<std::vector<std::uint32_t>> out;

    if (conjecture_id == "equal-parts-one-weight") {
        // One proper nonempty subset repeated across all n parts.
        for (std::uint32_t mask = 1; mask < full; ++mask)
            if (n * std::popcount(mask) <= max_sigma)
                out.emplace_back(std::size_t(n), mask);
        return out;
    }

    const bool parts_proper = conjecture_id == "complement-parameters";
    const bool union_proper = conjecture_id == "complement-parameters";
    const bool some_proper = conjecture_id == "subfield-complement-two-weight";

    const std::uint32_t limit = parts_proper ? full - 1 : full;
    if (limit == 0) return out;

    // Odometer with the last part fastest, so tuples come out in
    // lexicographic order with part 1 most significant.
    std::vector<std::uint32_t> tuple(std::size_t(n), 1);
    while (true) {
        std::uint32_t uni = 0;
        int sigma = 0;
        bool any_proper = false;
        for (std::uint32_t mask : tuple) {
            uni |= mask;
            sigma += std::popcount(mask);
            any_proper = any_proper || mask != full;
        }
        bool ok = sigma <= max_sigma;
        if (union_proper) ok = ok && uni != full;
        if (some_proper) ok = ok && any_proper;
        if (ok) out.push_back(tuple);

        int i = n - 1;
        while (i >= 0 && tuple[i] == limit) {
            tuple[i] = 1;
            --i;
        }
        if (i < 0) break;
        ++tuple[std::size_t(i)];
    }
    return out;
}

}  // namespace detail

namespace {

long long pow2(int e) { return 1ll << e; }

// splitmix64 finalizer, used to derive one sampling seed per sweep cell.
std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::size_t nonzero_weight_count(const std::map<long long, unsigned long long>& counts) {
    return counts.size() - counts.count(0);
}

int sigma_of(const std::vector<std::uint32_t>& parts) {
    int sigma = 0;
    for (std::uint32_t mask : parts) sigma += std::popcount(mask);
    return sigma;
}

ordered_json parts_json(const std::vector<std::uint32_t>& parts) {
    ordered_json list = ordered_json::array();
    for (std::uint32_t mask : parts) {
        ordered_json coords = ordered_json::array();
        for (int i = 0; i < 32; ++i)
            if (mask >> i & 1) coords.push_back(i + 1);
        list.push_back(std::move(coords));
    }
    return list;
}

ordered_json json_tristate(const std::optional<bool>& v) {
    if (v) return ordered_json(*v);
    return ordered_json();
}

void fill_subject(SweepRecord& rec, std::size_t length, int dimension, long long distance,
                  const std::map<long long, unsigned long long>& counts) {
    rec.length = static_cast<long long>(length);
    rec.dimension = dimension;
    rec.distance = distance;
    rec.weights.clear();
    for (const auto& [w, a] : counts)
        if (w != 0) rec.weights.emplace_back(w, a);
}

void run_equal_parts(SweepRecord& rec, const std::shared_ptr<const GaloisField>& gf, int m,
                     const std::vector<std::uint32_t>& parts, const Budget& budget) {
    const int n = gf->degree();
    const int w = std::popcount(parts.front());
    auto d = defining_set_from_simplex_parts(gf, m, parts, budget);
    auto rep = analyze_code(build_code(puncture(d)), budget);
    const long long q = pow2(n);
    rec.predicted = {
        {"length", pow2(n * w) - 1},
        {"k", w},
        {"d", (q - 1) * pow2(n * (w - 1))},
        {"weight_count", 1},
        {"z0", pow2(n * (m - w))},
        {"griesmer", true},
        {"minimal", true},
    };
    rec.measured = {
        {"length", static_cast<long long>(rep.length)},
        {"k", rep.dimension},
        {"d", rep.min_distance},
        {"weight_count", static_cast<long long>(nonzero_weight_count(rep.counts))},
        {"z0", rep.z0},
        {"griesmer", rep.griesmer},
        {"minimal", json_tristate(rep.minimal)},
        {"ashikhmin_barg", rep.ashikhmin_barg},
    };
    fill_subject(rec, rep.length, rep.dimension, rep.min_distance, rep.counts);
}

void run_complement(SweepRecord& rec, const std::shared_ptr<const GaloisField>& gf, int m,
                    const std::vector<std::uint32_t>& parts, const Budget& budget) {
    const int n = gf->degree();
    const int sigma = sigma_of(parts);
    auto d = defining_set_from_simplex_parts(gf, m, parts, budget);
    auto base_wd = weight_distribution(build_code(puncture(d)), budget);
    const long long t = static_cast<long long>(nonzero_weight_count(base_wd.counts));
    auto rep = analyze_code(build_code(complement(d, budget)), budget);
    const long long q = pow2(n);
    rec.predicted = {
        {"k", m},
        {"d", (q - 1) * (pow2(n * (m - 1)) - pow2(sigma - n))},
        {"weight_count", t + 1},
        {"griesmer", true},
    };
    if (sigma <= n * m - (n + 1)) rec.predicted["minimal"] = true;
    rec.measured = {
        {"k", rep.dimension},
        {"d", rep.min_distance},
        {"weight_count", static_cast<long long>(nonzero_weight_count(rep.counts))},
        {"base_weight_count", t},
        {"griesmer", rep.griesmer},
        {"minimal", json_tristate(rep.minimal)},
        {"ashikhmin_barg", rep.ashikhmin_barg},
    };
    fill_subject(rec, rep.length, rep.dimension, rep.min_distance, rep.counts);
}

void run_subfield_dimension(SweepRecord& rec, const std::shared_ptr<const GaloisField>& gf, int m,
                            const std::vector<std::uint32_t>& parts, const Budget& budget) {
    const int n = gf->degree();
    const int sigma = sigma_of(parts);
    auto d = defining_set_from_simplex_parts(gf, m, parts, budget);
    auto rep = analyze_code(build_subfield_code(puncture(d), budget), budget);
    rec.predicted = {
        {"k", sigma},
        {"z0", pow2(n * m - sigma)},
        {"griesmer", true},
    };
    rec.measured = {
        {"k", rep.dimension},
        {"z0", rep.z0},
        {"griesmer", rep.griesmer},
        {"minimal", json_tristate(rep.minimal)},
    };
    fill_subject(rec, rep.length, rep.dimension, rep.min_distance, rep.counts);
}

void run_subfield_complement(SweepRecord& rec, const std::shared_ptr<const GaloisField>& gf, int m,
                             const std::vector<std::uint32_t>& parts, const Budget& budget) {
    const int n = gf->degree();
    const int sigma = sigma_of(parts);
    auto d = defining_set_from_simplex_parts(gf, m, parts, budget);
    auto rep = analyze_code(build_subfield_code(complement(d, budget), budget), budget);
    rec.predicted = {
        {"k", n * m},
        {"d", pow2(n * m - 1) - pow2(sigma - 1)},
        {"weight_count", 2},
        {"griesmer", true},
    };
    if (sigma <= n * m - 2) rec.predicted["minimal"] = true;
    rec.measured = {
        {"k", rep.dimension},
        {"d", rep.min_distance},
        {"weight_count", static_cast<long long>(nonzero_weight_count(rep.counts))},
        {"griesmer", rep.griesmer},
        {"minimal", json_tristate(rep.minimal)},
        {"ashikhmin_barg", rep.ashikhmin_barg},
    };
    fill_subject(rec, rep.length, rep.dimension, rep.min_distance, rep.counts);
}

void run_weight_sum(SweepRecord& rec, const std::shared_ptr<const GaloisField>& gf, int m,
                    const std::vector<std::uint32_t>& parts, const Budget& budget,
                    bool subfield) {
    const int n = gf->degree();
    auto d = defining_set_from_simplex_parts(gf, m, parts, budget);
    auto base = subfield ? build_subfield_code(puncture(d), budget) : build_code(puncture(d));
    auto wd = weight_distribution(base, budget);
    auto rc = subfield ? check_subfield_weight_relation(d, budget) : check_weight_relation(d, budget);
    const long long sum =
        subfield ? pow2(n * m - 1) : (pow2(n) - 1) * pow2(n * (m - 1));
    rec.predicted = {{"holds", true}};
    rec.measured = {
        {"holds", rc.holds},
        {"sum", sum},
        {"messages", rc.messages},
    };
    if (!rc.holds) {
        rec.measured["counterexample"] = rc.counterexample;
        rec.measured["lhs"] = rc.lhs;
        rec.measured["rhs"] = rc.rhs;
    }
    fill_subject(rec, base.length, base.dimension, minimum_distance(wd), wd.counts);
}

SweepRecord run_instance(const std::string& id, const std::shared_ptr<const GaloisField>& gf,
                         int m, const std::vector<std::uint32_t>& parts,
                         const SweepOptions& options) {
    SweepRecord rec;
    rec.conjecture_id = id;
    rec.n = gf->degree();
    rec.m = m;
    rec.parts = parts;
    rec.seed = options.seed;
    try {
        if (id == "equal-parts-one-weight") {
            run_equal_parts(rec, gf, m, parts, options.budget);
        } else if (id == "complement-parameters") {
            run_complement(rec, gf, m, parts, options.budget);
        } else if (id == "subfield-dimension") {
            run_subfield_dimension(rec, gf, m, parts, options.budget);
        } else if (id == "subfield-complement-two-weight") {
            run_subfield_complement(rec, gf, m, parts, options.budget);
        } else if (id == "parent-weight-sum") {
            run_weight_sum(rec, gf, m, parts, options.budget, false);
        } else {
            run_weight_sum(rec, gf, m, parts, options.budget, true);
        }
        auto verdict = detail::facet_verdict(rec.predicted, rec.measured);
        rec.verdict = std::move(verdict.first);
        rec.note = std::move(verdict.second);
    } catch (const capacity_error& e) {
        rec.verdict = "skipped";
        rec.note = std::string("capacity: ") + e.what();
        rec.measured = ordered_json::object();
        if (rec.predicted.is_null()) rec.predicted = ordered_json::object();
    }
    return rec;
}

}  // namespace

ordered_json SweepRecord::to_json() const {
    ordered_json j;
    j["n"] = n;
    j["m"] = m;
    j["parts"] = parts_json(parts);
    j["length"] = length < 0 ? ordered_json() : ordered_json(length);
    j["k"] = dimension < 0 ? ordered_json() : ordered_json(dimension);
    j["d"] = distance < 0 ? ordered_json() : ordered_json(distance);
    ordered_json wl = ordered_json::array();
    for (const auto& [w, a] : weights) wl.push_back(ordered_json::array({w, a}));
    j["weights"] = std::move(wl);
    j["conjecture_id"] = conjecture_id;
    j["predicted"] = predicted.is_null() ? ordered_json::object() : predicted;
    j["measured"] = measured.is_null() ? ordered_json::object() : measured;
    j["verdict"] = verdict;
    if (!note.empty()) j["note"] = note;
    j["seed"] = seed;
    return j;
}

ordered_json SweepReport::summary_json() const {
    ordered_json tally_obj = ordered_json::object();
    for (const auto& id : sweep_conjecture_ids()) {
        auto it = tallies.find(id);
        if (it == tallies.end()) continue;
        tally_obj[id] = {
            {"instances", it->second.instances},
            {"confirmed", it->second.confirmed},
            {"refuted", it->second.refuted},
            {"skipped", it->second.skipped},
        };
    }
    ordered_json refuted_list = ordered_json::array();
    for (const auto& rec : records) {
        if (rec.verdict != "refuted") continue;
        ordered_json r;
        r["conjecture_id"] = rec.conjecture_id;
        r["n"] = rec.n;
        r["m"] = rec.m;
        r["parts"] = parts_json(rec.parts);
        r["note"] = rec.note;
        refuted_list.push_back(std::move(r));
    }
    ordered_json j;
    j["summary"] = {
        {"policy", options.policy == SubsetPolicy::exhaustive ? "exhaustive-subsets"
                                                              : "random-k-subsets"},
        {"seed", options.seed},
        {"instances", records.size()},
        {"tallies", std::move(tally_obj)},
        {"refuted", std::move(refuted_list)},
    };
    return j;
}

void SweepReport::write_jsonl(std::ostream& out) const {
    for (const auto& rec : records) out << rec.to_json().dump() << '\n';
    out << summary_json().dump() << '\n';
}

SweepReport run_sweep(const SweepOptions& options) {
    // Inverted bounds select nothing and fall through to an empty report;
    // bounds outside the supported domain are rejected.
    const bool empty_range = options.n_min > options.n_max || options.m_min > options.m_max;
    if (!empty_range && (options.n_min < 1 || options.n_max > GaloisField::kMaxDegree))
        throw std::invalid_argument("field degree range must sit inside [1, 8]");
    if (!empty_range && (options.m_min < 1 || options.m_max > 16))
        throw std::invalid_argument("ambient dimension range must sit inside [1, 16]");
    if (options.policy == SubsetPolicy::random_sample && options.sample_count < 1)
        throw std::invalid_argument("random sampling needs a positive sample count");
    const auto& known = sweep_conjecture_ids();
    for (const auto& id : options.conjectures)
        if (std::find(known.begin(), known.end(), id) == known.end())
            throw std::invalid_argument("unknown conjecture id: " + id);

    // Requested ids in canonical order, whatever order the caller gave.
    std::vector<std::string> run_ids;
    for (const auto& id : known)
        if (options.conjectures.empty() ||
            std::find(options.conjectures.begin(), options.conjectures.end(), id) !=
                options.conjectures.end())
            run_ids.push_back(id);

    struct Instance {
        const std::string* id;
        int n, m;
        std::vector<std::uint32_t> parts;
    };
    std::vector<Instance> instances;
    for (std::size_t ii = 0; ii < run_ids.size(); ++ii) {
        for (int n = options.n_min; n <= options.n_max; ++n) {
            for (int m = options.m_min; m <= options.m_max; ++m) {
                auto tuples = detail::admissible_parts(run_ids[ii], n, m, options.max_sigma);
                if (options.policy == SubsetPolicy::random_sample &&
                    tuples.size() > std::size_t(options.sample_count)) {
                    // Pick sample_count distinct tuples with a per-cell seed,
                    // then restore lexicographic order among the kept ones.
                    std::uint64_t cell = mix64(options.seed ^ (ii + 1));
                    cell = mix64(cell ^ std::uint64_t(n));
                    cell = mix64(cell ^ std::uint64_t(m));
                    std::mt19937_64 rng(cell);
                    std::vector<std::size_t> idx(tuples.size());
                    std::iota(idx.begin(), idx.end(), std::size_t(0));
                    for (std::size_t i = 0; i < std::size_t(options.sample_count); ++i) {
                        std::size_t j = i + std::size_t(rng() % (idx.size() - i));
                        std::swap(idx[i], idx[j]);
                    }
                    idx.resize(std::size_t(options.sample_count));
                    std::sort(idx.begin(), idx.end());
                    std::vector<std::vector<std::uint32_t>> kept;
                    kept.reserve(idx.size());
                    for (std::size_t j : idx) kept.push_back(std::move(tuples[j]));
                    tuples = std::move(kept);
                }
                for (auto& t : tuples)
                    instances.push_back({&run_ids[ii], n, m, std::move(t)});
            }
        }
    }

    std::map<int, std::shared_ptr<const GaloisField>> fields;
    for (int n = options.n_min; n <= options.n_max; ++n) fields[n] = make_field(n);

    SweepReport report;
    report.options = options;
    report.records.resize(instances.size());

    auto work = [&](std::size_t i) {
        const Instance& inst = instances[i];
        report.records[i] = run_instance(*inst.id, fields.at(inst.n), inst.m, inst.parts, options);
    };

    unsigned workers =
        options.workers ? options.workers : std::max(1u, std::thread::hardware_concurrency());
    if (instances.size() < workers) workers = unsigned(instances.size() ? instances.size() : 1);
    if (workers <= 1) {
        for (std::size_t i = 0; i < instances.size(); ++i) work(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::mutex fail_mutex;
        std::exception_ptr failure;
        auto body = [&] {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= instances.size()) return;
                try {
                    work(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(fail_mutex);
                    if (!failure) failure = std::current_exception();
                    next.store(instances.size());
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(body);
        for (auto& t : pool) t.join();
        if (failure) std::rethrow_exception(failure);
    }

    for (const auto& id : run_ids) report.tallies[id];
    for (const auto& rec : report.records) {
        SweepTally& tally = report.tallies[rec.conjecture_id];
        ++tally.instances;
        if (rec.verdict == "confirmed") {
            ++tally.confirmed;
        } else if (rec.verdict == "refuted") {
            ++tally.refuted;
        } else {
            ++tally.skipped;
        }
    }
    return report;
}

}  // namespace scodes
