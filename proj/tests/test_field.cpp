#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "scodes/field.hpp"

using scodes::FieldElement;
using scodes::GaloisField;
using scodes::make_field;

TEST_CASE("default modulus is the smallest usable irreducible per degree") {
    // Frozen from an independent trial-division scan over F_2[y].
    const std::uint32_t expect[9] = {0, 3, 7, 11, 19, 37, 67, 131, 283};
    for (int n = 1; n <= 8; ++n) CHECK(GaloisField::default_modulus(n) == expect[n]);
}

TEST_CASE("irreducibility test rejects reducible and degenerate inputs") {
    CHECK(GaloisField::is_irreducible(3, 1));
    CHECK_FALSE(GaloisField::is_irreducible(2, 1));   // y itself: class of y would be 0
    CHECK(GaloisField::is_irreducible(7, 2));
    CHECK_FALSE(GaloisField::is_irreducible(5, 2));   // y^2+1 = (y+1)^2
    CHECK_FALSE(GaloisField::is_irreducible(6, 2));   // even constant term
    CHECK(GaloisField::is_irreducible(11, 3));
    CHECK(GaloisField::is_irreducible(13, 3));
    CHECK_FALSE(GaloisField::is_irreducible(9, 3));   // (y+1)(y^2+y+1)
    CHECK_FALSE(GaloisField::is_irreducible(15, 3));  // (y+1)^3
    CHECK_FALSE(GaloisField::is_irreducible(11, 4));  // degree mismatch
}

TEST_CASE("construction rejects bad degrees and reducible moduli") {
    CHECK_THROWS_AS(GaloisField(0), std::invalid_argument);
    CHECK_THROWS_AS(GaloisField(9), std::invalid_argument);
    CHECK_THROWS_AS(GaloisField(3, 9), std::invalid_argument);
    CHECK_THROWS_AS(GaloisField(3, 12), std::invalid_argument);
    CHECK_THROWS_AS(GaloisField(1, 2), std::invalid_argument);
}

TEST_CASE("GF(2) degenerates to plain parity arithmetic") {
    auto f = make_field(1);
    CHECK(f->modulus() == 3);
    CHECK(f->size() == 2);
    CHECK(f->eta() == 1);
    CHECK(f->mul(1, 1) == 1);
    CHECK(f->add(1, 1) == 0);
    CHECK(f->trace(0) == 0);
    CHECK(f->trace(1) == 1);
    CHECK(f->inv(1) == 1);
}

TEST_CASE("GF(8) under y^3+y+1 matches hand-checked products and powers") {
    auto f = make_field(3);
    CHECK(f->modulus() == 11);
    // eta^3 = eta + 1, so the powers of eta cycle through all 7 units.
    CHECK(f->mul(2, 2) == 4);
    CHECK(f->mul(4, 2) == 3);
    CHECK(f->mul(4, 4) == 6);
    const std::uint8_t cycle[7] = {1, 2, 4, 3, 6, 7, 5};
    std::uint8_t g = 1;
    for (int k = 0; k < 7; ++k) {
        CHECK(g == cycle[k]);
        CHECK(f->pow(2, std::uint64_t(k)) == cycle[k]);
        g = f->mul(g, 2);
    }
    CHECK(g == 1);  // unit group has order 7
}

TEST_CASE("trace tables match the conjugate-sum definition") {
    // Frozen from an independent computation of x + x^2 + ... + x^(2^(n-1)).
    auto f4 = make_field(2);
    const int tr4[4] = {0, 0, 1, 1};
    for (int x = 0; x < 4; ++x) CHECK(f4->trace(std::uint8_t(x)) == tr4[x]);

    auto f8 = make_field(3);
    const int tr8[8] = {0, 1, 0, 1, 0, 1, 0, 1};
    for (int x = 0; x < 8; ++x) CHECK(f8->trace(std::uint8_t(x)) == tr8[x]);

    auto f16 = make_field(4);
    for (int x = 0; x < 16; ++x) CHECK(f16->trace(std::uint8_t(x)) == (x >> 3));
}

TEST_CASE("trace is F_2 linear and takes both values equally often") {
    for (int n = 1; n <= 6; ++n) {
        auto f = make_field(n);
        int ones = 0;
        for (std::uint32_t a = 0; a < f->size(); ++a) {
            ones += f->trace(std::uint8_t(a));
            for (std::uint32_t b = 0; b < f->size(); ++b)
                CHECK(f->trace(f->add(std::uint8_t(a), std::uint8_t(b))) ==
                      (f->trace(std::uint8_t(a)) ^ f->trace(std::uint8_t(b))));
        }
        CHECK(ones == int(f->size() / 2));
    }
}

TEST_CASE("field axioms hold exhaustively for small degrees") {
    for (int n : {1, 2, 3, 4}) {
        auto f = make_field(n);
        const std::uint32_t q = f->size();
        for (std::uint32_t a = 0; a < q; ++a) {
            CHECK(f->mul(std::uint8_t(a), 1) == a);
            CHECK(f->mul(std::uint8_t(a), 0) == 0);
            if (a) {
                CHECK(f->mul(std::uint8_t(a), f->inv(std::uint8_t(a))) == 1);
                CHECK(f->pow(std::uint8_t(a), f->order()) == 1);
            }
            for (std::uint32_t b = 0; b < q; ++b) {
                CHECK(f->mul(std::uint8_t(a), std::uint8_t(b)) ==
                      f->mul(std::uint8_t(b), std::uint8_t(a)));
                for (std::uint32_t c = 0; c < q; ++c) {
                    const std::uint8_t ab_c =
                        f->mul(f->mul(std::uint8_t(a), std::uint8_t(b)), std::uint8_t(c));
                    const std::uint8_t a_bc =
                        f->mul(std::uint8_t(a), f->mul(std::uint8_t(b), std::uint8_t(c)));
                    CHECK(ab_c == a_bc);
                    CHECK(f->mul(std::uint8_t(a),
                                 f->add(std::uint8_t(b), std::uint8_t(c))) ==
                          f->add(f->mul(std::uint8_t(a), std::uint8_t(b)),
                                 f->mul(std::uint8_t(a), std::uint8_t(c))));
                }
            }
        }
    }
}

TEST_CASE("inverse errors on zero") {
    auto f = make_field(3);
    CHECK_THROWS_AS(f->inv(0), std::invalid_argument);
}

TEST_CASE("eta powers and decomposition round-trip every element") {
    for (int n : {1, 2, 3, 4, 5}) {
        auto f = make_field(n);
        CHECK(f->eta_pow(0) == 1);
        if (n > 1) CHECK(f->eta_pow(1) == 2);
        CHECK_THROWS_AS(f->eta_pow(n), std::invalid_argument);
        for (std::uint32_t a = 0; a < f->size(); ++a) {
            auto bits = f->decompose(std::uint8_t(a));
            REQUIRE(bits.size() == std::size_t(n));
            std::uint8_t back = 0;
            for (int k = 0; k < n; ++k)
                if (bits[std::size_t(k)]) back = f->add(back, f->eta_pow(k));
            CHECK(back == a);
        }
    }
}

TEST_CASE("an alternative modulus gives a genuinely different field") {
    auto a = make_field(3);
    auto b = make_field(3, 13);
    CHECK_FALSE(a->same_as(*b));
    // Same additive structure, different multiplication.
    CHECK(a->mul(2, 2) == 4);
    CHECK(b->mul(2, 2) == 4);
    CHECK(a->mul(4, 2) == 3);
    CHECK(b->mul(4, 2) == 5);  // y^3 = y^2 + 1 under 13
    for (std::uint32_t x = 1; x < 8; ++x) {
        CHECK(b->mul(std::uint8_t(x), b->inv(std::uint8_t(x))) == 1);
        CHECK(b->pow(std::uint8_t(x), 7) == 1);
    }
}

TEST_CASE("typed elements refuse cross-field arithmetic") {
    auto f = make_field(3);
    auto g = make_field(3, 13);
    FieldElement a(*f, 5), b(*f, 6), c(*g, 5);
    CHECK((a + b).value() == 3);
    CHECK((a * b).value() == f->mul(5, 6));
    CHECK(a.trace() == f->trace(5));
    CHECK_THROWS_AS(a + c, std::invalid_argument);
    CHECK_THROWS_AS(a * c, std::invalid_argument);
    CHECK(a != c);
    CHECK_THROWS_AS(FieldElement(*f, 8), std::invalid_argument);
}
