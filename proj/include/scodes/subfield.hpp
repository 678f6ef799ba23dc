#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "scodes/code.hpp"
#include "scodes/field.hpp"

namespace scodes {

// Binary subfield machinery.  A code over GF(2^n) turns into a binary code by
// applying the trace coordinatewise; its generator is the stack of the n
// matrices [Tr(g_ij * eta^k)] for k = 0..n-1.  On the defining-set side each
// element of GF(2^n)^m flattens to an n*m bit tuple in layer-major order: bit
// k*m + (i-1) holds coefficient bit k of coordinate i.  The two views span
// the same binary code because the basis Gram matrix [Tr(eta^(k+l))] of the
// trace form is invertible.

// Trace stack of the code's generator: n*msg_dim binary rows, k-major, so a
// message bit at position k*m + i is coefficient bit k of original message
// coordinate i.
LinearCode subfield_generator_stack(const LinearCode& c);

// Layer-major flattening of every element of D, sorted into canonical order,
// as a defining set over GF(2) in ambient dimension n*m.
DefiningSet subfield_defining_set(const DefiningSet& d);

// Coordinate-major trace flattening: bit (i-1)*n + k holds Tr(d_i * eta^k).
// Spans the same binary code as the layer-major tuples after aligning
// columns; kept as an independent route for cross-checks.
DefiningSet subfield_defining_set_tracewise(const DefiningSet& d);

// Binary subfield code of the code defined by D, built from the trace stack
// (so message bits follow the layer-major convention).  Before returning, the
// row space is checked against the evaluation code of the layer-major tuples
// over the same column order; a mismatch is a logic error.
LinearCode build_subfield_code(const DefiningSet& d, const Budget& budget = {});

// Weight of the binary codeword for the layered message (alpha, beta, gamma)
// when D is built from simplex parts Delta_L, Delta_M, Delta_N over GF(8):
// 2^(s-1) * (1 - phi(alpha|L) phi(gamma|M) phi(beta|N)) with s = |L|+|M|+|N|.
long long subfield_closed_form_weight_f8(std::uint32_t alpha, std::uint32_t beta,
                                         std::uint32_t gamma, std::uint32_t L,
                                         std::uint32_t M, std::uint32_t N, int m);

namespace detail {
// Rank of a set of binary rows given as packed word blocks.
int gf2_rank(std::vector<std::vector<std::uint64_t>> rows);
}

}  // namespace scodes
