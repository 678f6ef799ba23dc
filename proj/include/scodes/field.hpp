#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace scodes {

// Arithmetic in GF(2^n) = F_2[y]/(p(y)) for an irreducible p of degree n <= 8.
// Elements are coefficient bitmasks: bit k holds the coefficient of eta^k,
// where eta is the residue class of y.  Products go through a table built once
// at construction, so the hot loops reduce to array lookups and XORs.
class GaloisField {
public:
    static constexpr int kMaxDegree = 8;

    // Uses the smallest irreducible modulus of the given degree.  Integer
    // order coincides with lexicographic order on coefficient tuples for
    // monic polynomials of fixed degree, so "smallest int with bit n set
    // that passes the irreducibility test" is exactly the wanted polynomial.
    explicit GaloisField(int degree);

    // Modulus must be monic of the given degree and irreducible.
    GaloisField(int degree, std::uint32_t modulus);

    int degree() const { return n_; }
    std::uint32_t modulus() const { return modulus_; }
    std::uint32_t size() const { return 1u << n_; }
    std::uint32_t order() const { return (1u << n_) - 1u; }

    bool same_as(const GaloisField& other) const {
        return n_ == other.n_ && modulus_ == other.modulus_;
    }

    std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return a ^ b; }
    std::uint8_t mul(std::uint8_t a, std::uint8_t b) const {
        return mul_[(std::size_t(a) << n_) | b];
    }
    std::uint8_t inv(std::uint8_t a) const;  // errors on a == 0
    std::uint8_t pow(std::uint8_t a, std::uint64_t e) const;

    // Absolute trace to F_2: x + x^2 + x^4 + ... + x^(2^(n-1)).  Always 0 or 1.
    int trace(std::uint8_t a) const { return trace_[a]; }

    // eta is the class of y; for n = 1 the modulus y+1 forces eta = 1.
    std::uint8_t eta() const { return n_ == 1 ? 1 : 2; }
    std::uint8_t eta_pow(int k) const;  // eta^k for 0 <= k < n

    // Coefficients of a in the basis {1, eta, ..., eta^(n-1)}, low power first.
    std::vector<int> decompose(std::uint8_t a) const;

    static std::uint32_t default_modulus(int degree);
    static bool is_irreducible(std::uint32_t poly, int degree);

private:
    int n_;
    std::uint32_t modulus_;
    std::vector<std::uint8_t> mul_;      // 2^n * 2^n products
    std::vector<std::uint8_t> inv_;      // multiplicative inverses, inv_[0] unused
    std::vector<std::uint8_t> trace_;    // absolute trace per element
    std::vector<std::uint8_t> eta_pow_;  // eta^0 .. eta^(n-1)

    void build_tables();
};

std::shared_ptr<const GaloisField> make_field(int degree);
std::shared_ptr<const GaloisField> make_field(int degree, std::uint32_t modulus);

// An element pinned to its field.  Mixing elements of different fields
// (different degree or modulus) is a usage error.  The raw byte interface on
// GaloisField skips that check and is what the enumeration loops use.
class FieldElement {
public:
    FieldElement(const GaloisField& field, std::uint32_t value);

    std::uint8_t value() const { return v_; }
    const GaloisField& field() const { return *field_; }

    int trace() const { return field_->trace(v_); }
    std::vector<int> decompose() const { return field_->decompose(v_); }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);

    bool operator==(const FieldElement& o) const {
        return field_->same_as(*o.field_) && v_ == o.v_;
    }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

private:
    const GaloisField* field_;
    std::uint8_t v_;
};

}  // namespace scodes
