#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "scodes/code.hpp"

namespace scodes {

// Bound and structure checks for measured codes.  Everything here works on
// exact integers; no floating point enters any verdict.

// g_q(k, d) = sum_{i=0}^{k-1} ceil(d / q^i), the least length any [*, k, d]
// code over GF(q) can have.
long long griesmer_sum(int k, long long d, std::uint32_t q);

// Whether an actual [length, k, d] code meets the bound with equality.
bool meets_griesmer(std::size_t length, int k, long long d, std::uint32_t q);

// No [length, k, d+1] code can exist by the bound, so d is best possible at
// this length and dimension.
bool distance_optimal_by_griesmer(std::size_t length, int k, long long d, std::uint32_t q);

// Sufficient condition for minimality: q * wmin > (q-1) * wmax over the
// nonzero weights.  Compared by exact cross multiplication.
bool ashikhmin_barg(long long wmin, long long wmax, std::uint32_t q);

struct MinimalityResult {
    enum class Status { minimal, not_minimal, skipped };
    Status status = Status::skipped;
    // When not minimal: the covered codeword and a covering one that is not a
    // scalar multiple of it.
    std::vector<std::uint8_t> covered, covering;
};

// Decides minimality by scanning all codeword pairs for proper support
// containment, with scalar multiples exempt.  Returns skipped when the
// codeword store or the pair scan would blow the budget.
MinimalityResult is_minimal_exhaustive(const LinearCode& c, const Budget& budget = {});

struct RelationCheck {
    bool holds = true;
    unsigned long long messages = 0;
    std::vector<std::uint8_t> counterexample;  // message digits; empty if holds
    long long lhs = 0, rhs = 0;                // set on the first mismatch
};

// For every message v, the weights over D \ {0} and over the complement of D
// must add up to (q-1) q^(m-1), except at v = 0 where both vanish.  Both
// weights are measured by a joint enumeration over all q^m columns, so the
// check never consults a closed form.
RelationCheck check_weight_relation(const DefiningSet& d, const Budget& budget = {});

// Binary analogue after the trace expansion: for every nonzero bit message
// the two weights add up to 2^(n*m - 1).
RelationCheck check_subfield_weight_relation(const DefiningSet& d, const Budget& budget = {});

struct CodeReport {
    std::size_t length = 0;
    int dimension = 0;
    long long min_distance = 0;
    unsigned long long z0 = 1;
    std::map<long long, unsigned long long> counts;   // weight -> codewords
    std::map<long long, unsigned long long> zcounts;  // weight -> messages
    bool griesmer = false;
    bool distance_optimal_griesmer = false;
    bool ashikhmin_barg = false;
    std::optional<bool> minimal;  // empty when the exhaustive scan was skipped
};

// Full measurement pass: weight distribution, distance, bound flags, and the
// minimality scan.  Throws on the zero code, which has no distance.
CodeReport analyze_code(const LinearCode& c, const Budget& budget = {});

}  // namespace scodes
