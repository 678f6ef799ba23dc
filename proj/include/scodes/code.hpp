#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "scodes/field.hpp"

namespace scodes {

// Thrown when an operation would exceed one of the enumeration budgets below.
class capacity_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Budget {
    std::uint64_t max_messages = 1ull << 24;    // weight-distribution message walk
    std::uint64_t max_codewords = 1ull << 20;   // materialized codeword store
    std::uint64_t max_support_ops = 1ull << 34; // coordinate comparisons in minimality scan
    std::uint64_t max_set_elements = 1ull << 22;// rows held by a defining set
};

// A defining set D inside GF(2^n)^m.  Elements are stored as flat rows of m
// bytes (one field element per coordinate) in canonical order: ascending by
// the integer key read coordinate 1 first.  Parts-built sets keep their
// generating parts around so that structured transforms stay available.
struct DefiningSet {
    std::shared_ptr<const GaloisField> gf;
    int m = 0;
    std::vector<std::uint8_t> elems;
    std::optional<std::vector<std::vector<std::uint32_t>>> parts;
    bool punctured = false;
    bool complemented = false;

    std::size_t count() const { return m ? elems.size() / std::size_t(m) : 0; }
    const std::uint8_t* row(std::size_t j) const { return elems.data() + j * std::size_t(m); }
    bool contains(const std::uint8_t* tuple) const;
    std::string recipe_text() const;
};

// D = D_1 + eta*D_2 + ... + eta^(n-1)*D_n for parts D_i given as bitmask sets
// over F_2^m; the i-th part supplies coefficient bit i-1 of every coordinate.
// The map (d_1,...,d_n) -> sum eta^(i-1) d_i is injective, so |D| is the
// product of the part sizes.
DefiningSet defining_set_from_parts(std::shared_ptr<const GaloisField> gf, int m,
                                    const std::vector<std::vector<std::uint32_t>>& parts,
                                    const Budget& budget = {});

// Convenience: parts are the full simplices generated by the given subsets.
DefiningSet defining_set_from_simplex_parts(std::shared_ptr<const GaloisField> gf, int m,
                                            const std::vector<std::uint32_t>& generators,
                                            const Budget& budget = {});

// D minus the zero tuple (no-op if absent).
DefiningSet puncture(const DefiningSet& d);

// GF(2^n)^m minus D.  For pure parts-built sets the complement is assembled
// from the disjoint strata (D_1,..,D_{i-1}, D_i^c, full, .., full) and that
// assembly is verified against the plain set difference.
DefiningSet complement(const DefiningSet& d, const Budget& budget = {});

struct LinearCode {
    std::shared_ptr<const GaloisField> gf;
    std::size_t length = 0;
    int msg_dim = 0;                  // generator rows; may exceed the rank
    std::vector<std::uint8_t> gen;    // msg_dim x length, row-major
    int dimension = 0;                // rank of gen over the field
    std::vector<std::uint8_t> basis;  // `dimension` echelon rows spanning the code

    const std::uint8_t* row(int i) const { return gen.data() + std::size_t(i) * length; }
    const std::uint8_t* basis_row(int i) const { return basis.data() + std::size_t(i) * length; }
};

// Evaluation code of D: row i, column j holds coordinate i of the j-th
// element, so codewords are (v . d)_{d in D} for messages v in GF(2^n)^m.
LinearCode build_code(const DefiningSet& d);

// Code spanned by an explicit generator matrix.
LinearCode code_from_matrix(std::shared_ptr<const GaloisField> gf, int rows,
                            std::size_t cols, std::vector<std::uint8_t> entries);

// Weight of the single codeword for message v (v has m entries).
long long codeword_weight(const DefiningSet& d, const std::vector<std::uint8_t>& v);

struct WeightDistribution {
    std::size_t length = 0;
    unsigned long long z0 = 1;  // kernel size: messages mapping to each codeword
    std::map<long long, unsigned long long> zcounts;  // weight -> message count
    std::map<long long, unsigned long long> counts;   // weight -> codeword count
};

// Walks all q^msg_dim messages, tallies Z, and derives A = Z / z0; the
// division must be exact and, whenever q^dimension fits the codeword-store
// budget, A is recounted from a walk over the reduced basis as a cross-check.
WeightDistribution weight_distribution(const LinearCode& c, const Budget& budget = {});

long long minimum_distance(const WeightDistribution& wd);

// Distinct codewords as flat rows (q^dimension of them), via the basis walk.
std::vector<std::uint8_t> materialize_codewords(const LinearCode& c, const Budget& budget = {});

// Closed-form weight for GF(8) codes with simplex parts Delta_L, Delta_M,
// Delta_N: writing the message as alpha + eta*beta + eta^2*gamma, the weight
// of its codeword is 2^(s-3) * (7 - theta) with s = |L|+|M|+|N| and theta the
// seven-term sum of phi-products below.  When at least two of L\(M u N),
// M\(N u L), N\(L u M) are nonempty, theta always lands in {0, 1, 3, 7}.
struct F8WeightValue {
    int theta = 0;
    long long weight = 0;
};
F8WeightValue closed_form_weight_f8(std::uint32_t alpha, std::uint32_t beta,
                                    std::uint32_t gamma, std::uint32_t L,
                                    std::uint32_t M, std::uint32_t N, int m);

// Per-basis-power bit layers of a message over GF(2^n)^m: layer k collects
// bit k of every coordinate, so v = sum_k eta^k * layer_k.
std::vector<std::uint32_t> message_layers(const GaloisField& gf,
                                          const std::vector<std::uint8_t>& v);

namespace detail {
// q^e with an overflow guard; throws capacity_error beyond 2^62.
unsigned long long ipow_checked(std::uint64_t q, int e);
}

}  // namespace scodes
