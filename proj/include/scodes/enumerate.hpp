#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <vector>

#include "scodes/field.hpp"

// Message-space enumeration cores.  A codeword is the row combination
// sum_i u_i * row_i; the enumerators walk all q^k messages u with a prefix
// buffer per level, so each leaf costs one fused xor-and-count pass over the
// length instead of k dot products per coordinate.  Buffers and rows are
// padded to whole 64-bit words with zero bytes, which never count as nonzero.

namespace scodes::detail {

// 0x80 flag at every nonzero byte of x.
inline std::uint64_t nonzero_byte_flags(std::uint64_t x) {
    constexpr std::uint64_t lo = 0x7f7f7f7f7f7f7f7full;
    constexpr std::uint64_t hi = 0x8080808080808080ull;
    return (x | ((x & lo) + lo)) & hi;
}

inline long long count_nonzero_xor(const std::uint64_t* a, const std::uint64_t* b,
                                   std::size_t words) {
    long long c = 0;
    for (std::size_t i = 0; i < words; ++i)
        c += std::popcount(nonzero_byte_flags(a[i] ^ b[i]));
    return c;
}

inline void xor_words(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                      std::size_t words) {
    for (std::size_t i = 0; i < words; ++i) dst[i] = a[i] ^ b[i];
}

// Enumerates every message u in GF(q)^k in lexicographic order (digit 0
// slowest) and calls visit(digits, weight) with the Hamming weight of the
// codeword sum_i u_i * row_i.  rows is row-major, k rows of len bytes.
template <class Visit>
void enumerate_weights(const GaloisField& gf, const std::uint8_t* rows, int k,
                       std::size_t len, Visit&& visit) {
    const std::uint32_t q = gf.size();
    const std::size_t words = len / 8 + 1;
    if (k == 0) {
        std::uint8_t none = 0;
        visit(&none, 0ll);
        return;
    }
    // scaled[(i*q + c) * words ...] = c * row_i, zero padded
    std::vector<std::uint64_t> scaled(std::size_t(k) * q * words, 0);
    for (int i = 0; i < k; ++i)
        for (std::uint32_t c = 0; c < q; ++c) {
            auto* out = reinterpret_cast<std::uint8_t*>(
                scaled.data() + (std::size_t(i) * q + c) * words);
            for (std::size_t j = 0; j < len; ++j)
                out[j] = gf.mul(std::uint8_t(c), rows[std::size_t(i) * len + j]);
        }

    std::vector<std::uint64_t> stack(std::size_t(k) * words, 0);  // level buffers
    std::vector<std::uint8_t> digits(std::size_t(k), 0);

    auto rec = [&](auto&& self, int level, const std::uint64_t* buf) -> void {
        if (level == k - 1) {
            for (std::uint32_t c = 0; c < q; ++c) {
                digits[std::size_t(level)] = std::uint8_t(c);
                const std::uint64_t* sc = scaled.data() + (std::size_t(level) * q + c) * words;
                visit(digits.data(), count_nonzero_xor(buf, sc, words));
            }
            return;
        }
        std::uint64_t* child = stack.data() + std::size_t(level + 1) * words;
        for (std::uint32_t c = 0; c < q; ++c) {
            digits[std::size_t(level)] = std::uint8_t(c);
            xor_words(child, buf, scaled.data() + (std::size_t(level) * q + c) * words, words);
            self(self, level + 1, child);
        }
    };
    rec(rec, 0, stack.data());
}

// Same walk, but the weight is split across a column partition: sel holds the
// 0x80-style flag words for the selected columns, rest for the others (both
// must be subsets of the valid-column flags).  visit(digits, w_sel, w_rest).
template <class Visit>
void enumerate_weights_split(const GaloisField& gf, const std::uint8_t* rows, int k,
                             std::size_t len, const std::vector<std::uint64_t>& sel,
                             const std::vector<std::uint64_t>& rest, Visit&& visit) {
    const std::uint32_t q = gf.size();
    const std::size_t words = len / 8 + 1;
    std::vector<std::uint64_t> scaled(std::size_t(k) * q * words, 0);
    for (int i = 0; i < k; ++i)
        for (std::uint32_t c = 0; c < q; ++c) {
            auto* out = reinterpret_cast<std::uint8_t*>(
                scaled.data() + (std::size_t(i) * q + c) * words);
            for (std::size_t j = 0; j < len; ++j)
                out[j] = gf.mul(std::uint8_t(c), rows[std::size_t(i) * len + j]);
        }
    std::vector<std::uint64_t> stack(std::size_t(k) * words, 0);
    std::vector<std::uint8_t> digits(std::size_t(k), 0);

    auto leaf = [&](const std::uint64_t* buf, const std::uint64_t* sc) {
        long long ws = 0, wr = 0;
        for (std::size_t i = 0; i < words; ++i) {
            std::uint64_t f = nonzero_byte_flags(buf[i] ^ sc[i]);
            ws += std::popcount(f & sel[i]);
            wr += std::popcount(f & rest[i]);
        }
        visit(digits.data(), ws, wr);
    };
    auto rec = [&](auto&& self, int level, const std::uint64_t* buf) -> void {
        if (level == k - 1) {
            for (std::uint32_t c = 0; c < q; ++c) {
                digits[std::size_t(level)] = std::uint8_t(c);
                leaf(buf, scaled.data() + (std::size_t(level) * q + c) * words);
            }
            return;
        }
        std::uint64_t* child = stack.data() + std::size_t(level + 1) * words;
        for (std::uint32_t c = 0; c < q; ++c) {
            digits[std::size_t(level)] = std::uint8_t(c);
            xor_words(child, buf, scaled.data() + (std::size_t(level) * q + c) * words, words);
            self(self, level + 1, child);
        }
    };
    if (k == 0) return;
    rec(rec, 0, stack.data());
}

// Packs a 0/1 byte row into bit words (bit j = column j).
inline std::vector<std::uint64_t> pack_bits(const std::uint8_t* row, std::size_t len) {
    std::vector<std::uint64_t> out(len / 64 + 1, 0);
    for (std::size_t j = 0; j < len; ++j)
        if (row[j]) out[j / 64] |= 1ull << (j % 64);
    return out;
}

inline long long popcount_words(const std::uint64_t* a, std::size_t words) {
    long long c = 0;
    for (std::size_t i = 0; i < words; ++i) c += std::popcount(a[i]);
    return c;
}

// Binary specialization: rows are bit-packed, messages are bitmasks (bit i
// selects row i), and weights are plain popcounts.  visit(msg_bits, weight).
template <class Visit>
void enumerate_weights_gf2(const std::vector<std::vector<std::uint64_t>>& rows,
                           std::size_t len_bits, Visit&& visit) {
    const int k = int(rows.size());
    const std::size_t words = len_bits / 64 + 1;
    if (k == 0) {
        visit(0u, 0ll);
        return;
    }
    std::vector<std::uint64_t> stack(std::size_t(k) * words, 0);
    auto rec = [&](auto&& self, int level, std::uint32_t msg,
                   const std::uint64_t* buf) -> void {
        if (level == k - 1) {
            visit(msg, popcount_words(buf, words));
            long long w = 0;
            for (std::size_t i = 0; i < words; ++i)
                w += std::popcount(buf[i] ^ rows[std::size_t(level)][i]);
            visit(msg | (1u << level), w);
            return;
        }
        self(self, level + 1, msg, buf);
        std::uint64_t* child = stack.data() + std::size_t(level + 1) * words;
        xor_words(child, buf, rows[std::size_t(level)].data(), words);
        self(self, level + 1, msg | (1u << level), child);
    };
    rec(rec, 0, 0u, stack.data());
}

// Split-count binary variant; sel/rest are bit masks over columns.
// visit(msg_bits, w_sel, w_rest).
template <class Visit>
void enumerate_weights_gf2_split(const std::vector<std::vector<std::uint64_t>>& rows,
                                 std::size_t len_bits,
                                 const std::vector<std::uint64_t>& sel,
                                 const std::vector<std::uint64_t>& rest, Visit&& visit) {
    const int k = int(rows.size());
    const std::size_t words = len_bits / 64 + 1;
    if (k == 0) return;
    std::vector<std::uint64_t> stack(std::size_t(k) * words, 0);
    auto leaf = [&](std::uint32_t msg, const std::uint64_t* buf,
                    const std::uint64_t* last) {
        long long ws = 0, wr = 0;
        for (std::size_t i = 0; i < words; ++i) {
            std::uint64_t x = buf[i] ^ (last ? last[i] : 0);
            ws += std::popcount(x & sel[i]);
            wr += std::popcount(x & rest[i]);
        }
        visit(msg, ws, wr);
    };
    auto rec = [&](auto&& self, int level, std::uint32_t msg,
                   const std::uint64_t* buf) -> void {
        if (level == k - 1) {
            leaf(msg, buf, nullptr);
            leaf(msg | (1u << level), buf, rows[std::size_t(level)].data());
            return;
        }
        self(self, level + 1, msg, buf);
        std::uint64_t* child = stack.data() + std::size_t(level + 1) * words;
        xor_words(child, buf, rows[std::size_t(level)].data(), words);
        self(self, level + 1, msg | (1u << level), child);
    };
    rec(rec, 0, 0u, stack.data());
}

}  // namespace scodes::detail
