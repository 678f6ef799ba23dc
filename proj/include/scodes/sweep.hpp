#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "scodes/code.hpp"

namespace scodes {

// Conjecture sweep.  Enumerates simplex-parts recipes over small fields,
// measures every code the recipe produces, and compares the measurements
// against the open predictions attached to the construction.  A disagreement
// is a finding reported in the record, never an error; the proved statements
// are pinned in the test suite instead and do not go through here.
//
// Prediction families, keyed by conjecture id (S is the sum of part sizes):
//   equal-parts-one-weight          all parts equal to one proper subset M of
//                                   [m]; the punctured code should be the
//                                   one-weight [2^(n|M|)-1, |M|] code with
//                                   distance (2^n-1) 2^(n(|M|-1)), kernel
//                                   2^(n(m-|M|)), Griesmer, and minimal.
//   complement-parameters           every part proper and the union proper;
//                                   the complement code should have dimension
//                                   m, distance (2^n-1)(2^(n(m-1)) - 2^(S-n)),
//                                   one more distinct nonzero weight than the
//                                   punctured code, meet the Griesmer bound,
//                                   and be minimal when S <= nm - (n+1).
//   subfield-dimension              binary code of the punctured set: its
//                                   dimension should be S with kernel
//                                   2^(nm-S), and it should be Griesmer.
//   subfield-complement-two-weight  binary code of the complement, some part
//                                   proper: dimension nm, distance
//                                   2^(nm-1) - 2^(S-1), exactly two nonzero
//                                   weights, Griesmer, and minimal when
//                                   S <= nm - 2.
//   parent-weight-sum               for every message the weights over the
//                                   punctured set and over the complement add
//                                   up to (2^n-1) 2^(n(m-1)).
//   subfield-weight-sum             binary analogue: the two trace-code
//                                   weights add up to 2^(nm-1).

enum class SubsetPolicy {
    exhaustive,     // every parts tuple the family admits
    random_sample,  // a seeded sample of bounded size per (family, n, m) cell
};

struct SweepOptions {
    int n_min = 1, n_max = 4;  // field degrees
    int m_min = 1, m_max = 3;  // ambient dimensions
    int max_sigma = 9;         // cap on the sum of part sizes
    SubsetPolicy policy = SubsetPolicy::exhaustive;
    int sample_count = 25;        // tuples kept per cell in random mode
    std::uint64_t seed = 271828;  // sampling seed, echoed into every record
    std::vector<std::string> conjectures;  // ids to run; empty means all six
    unsigned workers = 0;                  // 0 picks hardware_concurrency
    Budget budget{};
};

// One measured instance.  The subject code (length, k, d, weights) is the
// code the family's prediction speaks about; for the weight-sum families it
// is the punctured-set code, whose distribution falls out of the check
// anyway.  Weight entries pair a nonzero weight with its codeword count.
struct SweepRecord {
    std::string conjecture_id;
    int n = 0, m = 0;
    std::vector<std::uint32_t> parts;  // generator bitmasks, one per part
    long long length = -1;             // -1 when the build was skipped
    long long dimension = -1;
    long long distance = -1;
    std::vector<std::pair<long long, unsigned long long>> weights;
    nlohmann::ordered_json predicted, measured;
    std::string verdict;  // "confirmed", "refuted", or "skipped"
    std::string note;     // mismatched facets, or why the instance skipped
    std::uint64_t seed = 0;

    nlohmann::ordered_json to_json() const;
};

struct SweepTally {
    unsigned long long instances = 0;
    unsigned long long confirmed = 0;
    unsigned long long refuted = 0;
    unsigned long long skipped = 0;
};

struct SweepReport {
    std::vector<SweepRecord> records;           // ordered by (id, n, m, parts)
    std::map<std::string, SweepTally> tallies;  // per conjecture id
    SweepOptions options;

    // Footer object: policy, seed, per-family tallies, and the recipe of
    // every refuted instance.
    nlohmann::ordered_json summary_json() const;

    // One JSON line per record, then the summary line.  Byte-identical for
    // identical options.
    void write_jsonl(std::ostream& out) const;
};

// The six family ids in canonical report order.
const std::vector<std::string>& sweep_conjecture_ids();

// Runs the requested grid on a worker pool and merges the results in
// instance order, so the report does not depend on the worker count.
SweepReport run_sweep(const SweepOptions& options);

namespace detail {

// Facet comparison behind the per-record verdict: every key of `predicted`
// must appear in `measured` with an equal value.  A null measured value is an
// undecided facet; any of those without a hard mismatch gives "skipped".
std::pair<std::string, std::string> facet_verdict(const nlohmann::ordered_json& predicted,
                                                  const nlohmann::ordered_json& measured);

// All parts tuples a family admits at (n, m) under the size cap, in
// lexicographic mask order.
std::vector<std::vector<std::uint32_t>> admissible_parts(const std::string& conjecture_id,
                                                         int n, int m, int max_sigma);

}  // namespace detail

}  // namespace scodes
