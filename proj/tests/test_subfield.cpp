#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>
#include <vector>

#include "scodes/code.hpp"
#include "scodes/field.hpp"
#include "scodes/subfield.hpp"

using namespace scodes;

namespace {

// Codeword of a binary generator for the given message bits, one byte per
// coordinate; the slow reference route used against library results.
std::vector<std::uint8_t> binary_codeword(const LinearCode& c, std::uint64_t msg) {
    std::vector<std::uint8_t> word(c.length, 0);
    for (int r = 0; r < c.msg_dim; ++r)
        if ((msg >> r) & 1)
            for (std::size_t j = 0; j < c.length; ++j) word[j] ^= c.row(r)[j];
    return word;
}

long long byte_weight(const std::vector<std::uint8_t>& w) {
    long long acc = 0;
    for (auto x : w)
        if (x) ++acc;
    return acc;
}

// Message bits for layered message (alpha, beta, gamma) against a k-major
// trace stack: bit k*m + i is bit i of layer k.
std::uint64_t layered_msg(std::uint32_t a, std::uint32_t b, std::uint32_t g, int m) {
    return std::uint64_t(a) | (std::uint64_t(b) << m) | (std::uint64_t(g) << (2 * m));
}

}  // namespace

TEST_CASE("trace stack of the hand-entered generator matches its published form") {
    auto gf = make_field(3);
    auto g = code_from_matrix(gf, 2, 6, {1, 1, 4, 4, 7, 7, 0, 1, 1, 4, 1, 3});
    auto stack = subfield_generator_stack(g);
    CHECK(stack.msg_dim == 6);
    CHECK(stack.gf->degree() == 1);
    const std::vector<std::uint8_t> expect = {
        1, 1, 0, 0, 1, 1,
        0, 1, 1, 0, 1, 1,
        0, 0, 1, 1, 1, 1,
        0, 0, 0, 1, 0, 0,
        0, 0, 0, 0, 1, 1,
        0, 0, 0, 0, 0, 1,
    };
    CHECK(stack.gen == expect);
    CHECK(stack.dimension == 6);
    // Full rank on 6 coordinates means the row space is all of F_2^6.
    auto wd = weight_distribution(stack);
    CHECK(wd.counts == std::map<long long, unsigned long long>{
                           {0, 1}, {1, 6}, {2, 15}, {3, 20}, {4, 15}, {5, 6}, {6, 1}});
}

TEST_CASE("layer-major tuples of the worked defining set match the frozen list") {
    auto gf = make_field(3);
    auto d = defining_set_from_parts(gf, 2, {{1}, {2, 3}, {1, 2, 3}});
    auto t = subfield_defining_set(d);
    CHECK(t.m == 6);
    CHECK(t.count() == 6);
    const std::uint8_t expect[6][6] = {
        {1, 0, 0, 1, 0, 1},
        {1, 0, 0, 1, 1, 0},
        {1, 0, 0, 1, 1, 1},
        {1, 0, 1, 1, 0, 1},
        {1, 0, 1, 1, 1, 0},
        {1, 0, 1, 1, 1, 1},
    };
    for (std::size_t j = 0; j < 6; ++j)
        for (int i = 0; i < 6; ++i) CHECK(t.row(j)[i] == expect[j][i]);
}

TEST_CASE("coordinate-major trace tuples differ but span the same code") {
    auto gf = make_field(3);
    auto d = defining_set_from_parts(gf, 2, {{1}, {2, 3}, {1, 2, 3}});
    auto nat = subfield_defining_set(d);
    auto trw = subfield_defining_set_tracewise(d);
    CHECK(trw.count() == nat.count());
    CHECK(trw.elems != nat.elems);
    // (1,6) flattens coordinate-major to (alpha,gamma,beta) per coordinate.
    const std::uint8_t probe[6] = {1, 0, 0, 0, 1, 1};
    CHECK(trw.contains(probe));

    auto ca = weight_distribution(build_code(nat));
    auto cb = weight_distribution(build_code(trw));
    CHECK(ca.counts == cb.counts);
    CHECK(build_code(nat).dimension == build_code(trw).dimension);
}

TEST_CASE("binary expansion sends trace values to plain dot products") {
    auto gf = make_field(3);
    auto d = puncture(defining_set_from_simplex_parts(gf, 3, {0b011, 0b101, 0b001}));
    auto stack = subfield_generator_stack(build_code(d));
    REQUIRE(stack.msg_dim == 9);
    for (std::uint32_t key = 0; key < 512; key += 5) {
        std::vector<std::uint8_t> v = {std::uint8_t(key & 7), std::uint8_t((key >> 3) & 7),
                                       std::uint8_t((key >> 6) & 7)};
        auto layers = message_layers(*gf, v);
        auto word = binary_codeword(stack, layered_msg(layers[0], layers[1], layers[2], 3));
        for (std::size_t j = 0; j < d.count(); ++j) {
            std::uint8_t dot = 0;
            for (int i = 0; i < 3; ++i) dot = gf->add(dot, gf->mul(v[std::size_t(i)], d.row(j)[i]));
            CHECK(int(word[j]) == gf->trace(dot));
        }
    }
}

TEST_CASE("punctured simplex parts give a one-weight binary code") {
    auto gf = make_field(3);
    const std::uint32_t L = 0b011, M = 0b101, N = 0b001;  // s = 5
    auto d = puncture(defining_set_from_simplex_parts(gf, 3, {L, M, N}));
    auto c = build_subfield_code(d);
    CHECK(c.length == 31);
    CHECK(c.dimension == 5);
    auto wd = weight_distribution(c);
    CHECK(wd.z0 == 16);  // 2^(9-5) messages per codeword
    CHECK(wd.counts == std::map<long long, unsigned long long>{{0, 1}, {16, 31}});

    // Per-message agreement with the closed form.
    for (std::uint32_t a = 0; a < 8; ++a)
        for (std::uint32_t b = 0; b < 8; ++b)
            for (std::uint32_t g = 0; g < 8; ++g) {
                auto word = binary_codeword(c, layered_msg(a, b, g, 3));
                CHECK(byte_weight(word) == subfield_closed_form_weight_f8(a, b, g, L, M, N, 3));
            }
}

TEST_CASE("the smallest simplex instance is the [7,3,4] code") {
    auto gf = make_field(3);
    auto d = puncture(defining_set_from_simplex_parts(gf, 1, {1, 1, 1}));
    auto c = build_subfield_code(d);
    CHECK(c.length == 7);
    CHECK(c.dimension == 3);
    CHECK(weight_distribution(c).counts ==
          std::map<long long, unsigned long long>{{0, 1}, {4, 7}});
}

TEST_CASE("complement defining sets give two-weight binary codes") {
    auto gf = make_field(3);

    auto small = complement(defining_set_from_simplex_parts(gf, 2, {1, 1, 1}));
    auto cs = build_subfield_code(small);
    CHECK(cs.length == 56);
    CHECK(cs.dimension == 6);
    CHECK(weight_distribution(cs).counts ==
          std::map<long long, unsigned long long>{{0, 1}, {28, 56}, {32, 7}});

    auto big = complement(defining_set_from_simplex_parts(gf, 3, {0b011, 0b101, 0b001}));
    auto cb = build_subfield_code(big);
    CHECK(cb.length == 480);
    CHECK(cb.dimension == 9);
    CHECK(weight_distribution(cb).counts ==
          std::map<long long, unsigned long long>{{0, 1}, {240, 496}, {256, 15}});
}

TEST_CASE("degenerate binary input passes through unchanged") {
    auto gf = make_field(1);
    auto d = puncture(defining_set_from_simplex_parts(gf, 3, {0b111}));
    auto c = build_subfield_code(d);
    auto direct = build_code(d);
    CHECK(c.gen == direct.gen);
    CHECK(c.dimension == direct.dimension);
    CHECK(subfield_defining_set(d).elems == d.elems);
}

TEST_CASE("a quaternary defining set survives the dual-route consistency check") {
    auto gf = make_field(2);
    auto d = defining_set_from_parts(gf, 2, {{1, 2}, {2, 3}});
    auto c = build_subfield_code(d);
    CHECK(c.length == 4);
    CHECK(c.msg_dim == 4);
    auto wd = weight_distribution(c);
    unsigned long long total = 0;
    for (const auto& [w, a] : wd.counts) total += a;
    CHECK(total == (1ull << c.dimension));

    // The stack code and the evaluation code of the sorted tuples are column
    // permutations of each other, so their distributions agree.
    auto ev = build_code(subfield_defining_set(d));
    CHECK(weight_distribution(ev).counts == wd.counts);
}

TEST_CASE("packed binary rank handles dependent and wide inputs") {
    using detail::gf2_rank;
    CHECK(gf2_rank({{0b001}, {0b010}, {0b100}}) == 3);
    CHECK(gf2_rank({{0b001}, {0b010}, {0b011}}) == 2);
    CHECK(gf2_rank({{0}, {0}}) == 0);
    // Two words per row: dependence only visible across the word boundary.
    std::vector<std::vector<std::uint64_t>> wide = {
        {~0ull, 1}, {~0ull, 0}, {0, 1}};
    CHECK(gf2_rank(wide) == 2);
}

TEST_CASE("closed-form binary weight rejects bad subsets") {
    CHECK_THROWS_AS(subfield_closed_form_weight_f8(0, 0, 0, 0, 1, 1, 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(subfield_closed_form_weight_f8(0, 0, 0, 1, 1, 1, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(subfield_closed_form_weight_f8(8, 0, 0, 1, 1, 1, 3),
                    std::invalid_argument);
    CHECK(subfield_closed_form_weight_f8(0, 0, 0, 1, 1, 1, 3) == 0);
    CHECK(subfield_closed_form_weight_f8(1, 0, 0, 1, 1, 1, 3) == 4);
}
