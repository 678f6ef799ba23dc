#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstring>
#include <map>
#include <set>
#include <vector>

#include "scodes/code.hpp"
#include "scodes/field.hpp"
#include "scodes/simplicial.hpp"

using namespace scodes;

namespace {

std::vector<std::uint8_t> rows_of(const DefiningSet& d) { return d.elems; }

// Weight of v against D computed the slow, typed way as a second route.
long long typed_weight(const DefiningSet& d, const std::vector<std::uint8_t>& v) {
    long long w = 0;
    for (std::size_t j = 0; j < d.count(); ++j) {
        FieldElement acc(*d.gf, 0);
        for (int i = 0; i < d.m; ++i)
            acc = acc + FieldElement(*d.gf, v[std::size_t(i)]) * FieldElement(*d.gf, d.row(j)[i]);
        if (acc.value()) ++w;
    }
    return w;
}

}  // namespace

TEST_CASE("parts multiply out to the expected rows in canonical order") {
    auto gf = make_field(3);
    // Part i contributes coefficient bit i-1 of each coordinate.
    auto d = defining_set_from_parts(gf, 2, {{1}, {2, 3}, {1, 2, 3}});
    CHECK(d.count() == 6);
    const std::uint8_t expect[6][2] = {{1, 6}, {3, 6}, {5, 2}, {5, 6}, {7, 2}, {7, 6}};
    for (std::size_t j = 0; j < 6; ++j) {
        CHECK(d.row(j)[0] == expect[j][0]);
        CHECK(d.row(j)[1] == expect[j][1]);
    }
    CHECK(d.contains(expect[2]));
    const std::uint8_t absent[2] = {4, 2};
    CHECK_FALSE(d.contains(absent));
    CHECK(d.recipe_text() == "parts(sizes=[1,2,3])");
}

TEST_CASE("the evaluation code of that set beats its published generator on distance") {
    auto gf = make_field(3);
    auto d = defining_set_from_parts(gf, 2, {{1}, {2, 3}, {1, 2, 3}});
    auto c = build_code(d);
    CHECK(c.length == 6);
    CHECK(c.dimension == 2);
    auto wd = weight_distribution(c);
    CHECK(wd.counts == std::map<long long, unsigned long long>{{0, 1}, {5, 42}, {6, 21}});
    CHECK(minimum_distance(wd) == 5);

    // A hand-entered 2 x 6 matrix over the same field spans a different code
    // with a genuinely different weight profile.
    auto g = code_from_matrix(gf, 2, 6, {1, 1, 4, 4, 7, 7, 0, 1, 1, 4, 1, 3});
    CHECK(g.dimension == 2);
    auto wg = weight_distribution(g);
    CHECK(wg.counts ==
          std::map<long long, unsigned long long>{{0, 1}, {4, 14}, {5, 14}, {6, 35}});
    CHECK(minimum_distance(wg) == 4);
}

TEST_CASE("simplex parts expand to full down-sets before the product") {
    auto gf = make_field(3);
    auto via_masks = defining_set_from_simplex_parts(gf, 2, {1, 2, 3});
    auto via_parts = defining_set_from_parts(gf, 2, {{0, 1}, {0, 2}, {0, 1, 2, 3}});
    CHECK(rows_of(via_masks) == rows_of(via_parts));
    CHECK(via_masks.count() == 16);
}

TEST_CASE("puncturing removes exactly the zero tuple") {
    auto gf = make_field(3);
    auto d = defining_set_from_simplex_parts(gf, 2, {1, 2, 3});
    auto p = puncture(d);
    CHECK(p.count() == d.count() - 1);
    const std::uint8_t zero[2] = {0, 0};
    CHECK(d.contains(zero));
    CHECK_FALSE(p.contains(zero));
    CHECK(p.punctured);
    // Idempotent once zero is gone.
    CHECK(puncture(p).count() == p.count());
    CHECK(p.recipe_text() == "punctured(parts(sizes=[2,2,4]))");
}

TEST_CASE("complement partitions the ambient space and verifies its strata") {
    auto gf = make_field(3);
    auto d = defining_set_from_simplex_parts(gf, 2, {1, 2, 3});
    auto dc = complement(d);
    CHECK(dc.count() == 64 - d.count());
    CHECK(dc.complemented);
    for (std::size_t j = 0; j < dc.count(); ++j) CHECK_FALSE(d.contains(dc.row(j)));
    // Rows stay sorted, so binary-search membership keeps working.
    for (std::size_t j = 1; j < dc.count(); ++j)
        CHECK(std::memcmp(dc.row(j - 1), dc.row(j), 2) < 0);
    CHECK(dc.recipe_text() == "complement(parts(sizes=[2,2,4]))");
}

TEST_CASE("a binary simplex defining set yields the classic one-weight code") {
    auto gf = make_field(1);
    auto d = puncture(defining_set_from_simplex_parts(gf, 3, {0b111}));
    auto c = build_code(d);
    CHECK(c.length == 7);
    CHECK(c.dimension == 3);
    auto wd = weight_distribution(c);
    CHECK(wd.counts == std::map<long long, unsigned long long>{{0, 1}, {4, 7}});
}

TEST_CASE("rank-deficient generators shrink the dimension but not the message walk") {
    auto gf = make_field(3);
    // Second row is eta times the first, third is their sum: rank 1.
    auto c = code_from_matrix(gf, 3, 4, {1, 2, 4, 7, 2, 4, 3, 5, 3, 6, 7, 2});
    CHECK(c.msg_dim == 3);
    CHECK(c.dimension == 1);
    auto wd = weight_distribution(c);
    CHECK(wd.z0 == 64);  // 8^(3-1) messages per codeword
    CHECK(wd.counts == std::map<long long, unsigned long long>{{0, 1}, {4, 7}});
}

TEST_CASE("message weights agree across the typed route and the fast route") {
    auto gf = make_field(3);
    auto d = puncture(defining_set_from_simplex_parts(gf, 3, {0b011, 0b101, 0b001}));
    for (std::uint32_t key = 0; key < 512; key += 13) {
        std::vector<std::uint8_t> v = {std::uint8_t(key & 7), std::uint8_t((key >> 3) & 7),
                                       std::uint8_t((key >> 6) & 7)};
        CHECK(codeword_weight(d, v) == typed_weight(d, v));
    }
}

TEST_CASE("closed-form F8 weights match enumeration message by message") {
    auto gf = make_field(3);
    const std::uint32_t L = 0b011, M = 0b101, N = 0b001;  // s = 5, union = [3]
    auto d = puncture(defining_set_from_simplex_parts(gf, 3, {L, M, N}));
    auto c = build_code(d);
    CHECK(c.length == 31);
    CHECK(c.dimension == 3);

    std::map<long long, unsigned long long> from_formula;
    for (std::uint32_t key = 0; key < 512; ++key) {
        std::vector<std::uint8_t> v = {std::uint8_t(key & 7), std::uint8_t((key >> 3) & 7),
                                       std::uint8_t((key >> 6) & 7)};
        auto layers = message_layers(*gf, v);
        auto cf = closed_form_weight_f8(layers[0], layers[1], layers[2], L, M, N, 3);
        CHECK(cf.weight == codeword_weight(d, v));
        ++from_formula[cf.weight];
    }

    auto wd = weight_distribution(c);
    CHECK(wd.zcounts == from_formula);
    CHECK(minimum_distance(wd) == 16);
    std::set<long long> nonzero;
    for (const auto& [w, a] : wd.counts)
        if (w) nonzero.insert(w);
    CHECK(nonzero == std::set<long long>{16, 24, 28});
}

TEST_CASE("complement weights follow by subtraction from the full-space weight") {
    auto gf = make_field(3);
    const std::uint32_t L = 1, M = 2, N = 4;  // all three private sets nonempty
    auto d = defining_set_from_simplex_parts(gf, 3, {L, M, N});
    auto dc = complement(d);
    CHECK(dc.count() == 512 - 8);

    // Every nonzero message hits 7/8 of the full space, so the two weights
    // must add up to 448 coordinate hits.
    for (std::uint32_t key = 1; key < 512; key += 7) {
        std::vector<std::uint8_t> v = {std::uint8_t(key & 7), std::uint8_t((key >> 3) & 7),
                                       std::uint8_t((key >> 6) & 7)};
        CHECK(codeword_weight(dc, v) + codeword_weight(d, v) == 448);
    }

    auto wd = weight_distribution(build_code(dc));
    CHECK(minimum_distance(wd) == 441);
    std::set<long long> nonzero;
    for (const auto& [w, a] : wd.counts)
        if (w) nonzero.insert(w);
    // theta = 7 needs support disjoint from L u M u N = [3], so 448 is absent.
    CHECK(nonzero == std::set<long long>{441, 442, 444});
}

TEST_CASE("one-weight code from equal simplex parts") {
    auto gf = make_field(3);
    auto d = puncture(defining_set_from_simplex_parts(gf, 2, {3, 3, 3}));
    auto c = build_code(d);
    CHECK(c.length == 63);
    CHECK(c.dimension == 2);
    auto wd = weight_distribution(c);
    CHECK(wd.counts == std::map<long long, unsigned long long>{{0, 1}, {56, 63}});
}

TEST_CASE("materialized codewords are distinct and reproduce the distribution") {
    auto gf = make_field(3);
    auto d = puncture(defining_set_from_simplex_parts(gf, 2, {1, 2, 3}));
    auto c = build_code(d);
    auto words = materialize_codewords(c);
    const unsigned long long count = 64;  // 8^2
    REQUIRE(words.size() == count * c.length);

    std::set<std::vector<std::uint8_t>> uniq;
    std::map<long long, unsigned long long> tally;
    for (unsigned long long i = 0; i < count; ++i) {
        std::vector<std::uint8_t> w(words.begin() + std::ptrdiff_t(i * c.length),
                                    words.begin() + std::ptrdiff_t((i + 1) * c.length));
        uniq.insert(w);
        long long wt = 0;
        for (auto x : w)
            if (x) ++wt;
        ++tally[wt];
    }
    CHECK(uniq.size() == count);
    CHECK(tally == weight_distribution(c).counts);
}

TEST_CASE("theta stays inside the proven value set under the hypothesis") {
    // Two private coordinates: 1 in L only, 2 in M only.
    const std::uint32_t L = 0b001, M = 0b110, N = 0b100;
    std::set<int> seen;
    for (std::uint32_t a = 0; a < 8; ++a)
        for (std::uint32_t b = 0; b < 8; ++b)
            for (std::uint32_t g = 0; g < 8; ++g)
                seen.insert(closed_form_weight_f8(a, b, g, L, M, N, 3).theta);
    CHECK(seen == std::set<int>{0, 1, 3, 7});
}

TEST_CASE("budgets turn oversize requests into capacity errors") {
    auto gf = make_field(3);
    Budget tiny;
    tiny.max_set_elements = 10;
    CHECK_THROWS_AS(defining_set_from_simplex_parts(gf, 2, {1, 2, 3}, tiny), capacity_error);

    auto d = defining_set_from_simplex_parts(gf, 2, {1, 2, 3});
    Budget nosp;
    nosp.max_set_elements = 20;
    CHECK_THROWS_AS(complement(d, nosp), capacity_error);

    auto c = build_code(d);
    Budget few;
    few.max_messages = 63;
    CHECK_THROWS_AS(weight_distribution(c, few), capacity_error);
    Budget nostore;
    nostore.max_codewords = 63;
    CHECK_THROWS_AS(materialize_codewords(c, nostore), capacity_error);
}

TEST_CASE("invalid defining-set requests are rejected") {
    auto gf = make_field(3);
    CHECK_THROWS_AS(defining_set_from_parts(gf, 2, {{1}, {2}}), std::invalid_argument);
    CHECK_THROWS_AS(defining_set_from_parts(gf, 2, {{1}, {}, {2}}), std::invalid_argument);
    CHECK_THROWS_AS(defining_set_from_parts(gf, 2, {{1}, {4}, {2}}), std::invalid_argument);
    CHECK_THROWS_AS(defining_set_from_parts(gf, 0, {{1}, {1}, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(defining_set_from_parts(nullptr, 2, {{1}}), std::invalid_argument);
    CHECK_THROWS_AS(closed_form_weight_f8(0, 0, 0, 0, 1, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(closed_form_weight_f8(0, 0, 0, 1, 1, 8, 3), std::invalid_argument);
}

TEST_CASE("zero codes have no minimum distance") {
    auto gf = make_field(2);
    auto c = code_from_matrix(gf, 1, 3, {0, 0, 0});
    CHECK(c.dimension == 0);
    auto wd = weight_distribution(c);
    CHECK_THROWS_AS(minimum_distance(wd), std::invalid_argument);
}

TEST_CASE("layer split of a message matches its per-coordinate decomposition") {
    auto gf = make_field(3);
    auto layers = message_layers(*gf, {3, 5});
    REQUIRE(layers.size() == 3);
    CHECK(layers[0] == 0b11);  // constant coefficients of 3 and 5
    CHECK(layers[1] == 0b01);
    CHECK(layers[2] == 0b10);
    // Rebuild each coordinate from the layers.
    for (int i = 0; i < 2; ++i) {
        std::uint8_t back = 0;
        for (int k = 0; k < 3; ++k)
            if ((layers[std::size_t(k)] >> i) & 1) back = gf->add(back, gf->eta_pow(k));
        CHECK(back == (i == 0 ? 3 : 5));
    }
}
