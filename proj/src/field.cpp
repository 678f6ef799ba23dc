#include "scodes/field.hpp"

#include <stdexcept>
#include <string>

namespace scodes {

namespace {

int poly_degree(std::uint32_t p) {
    int d = -1;
    while (p) {
        ++d;
        p >>= 1;
    }
    return d;
}

// Carry-less product of two F_2[y] polynomials given as bitmasks.
std::uint64_t clmul(std::uint32_t a, std::uint32_t b) {
    std::uint64_t r = 0;
    for (int i = 0; b >> i; ++i)
        if ((b >> i) & 1) r ^= std::uint64_t(a) << i;
    return r;
}

// Remainder of a modulo p in F_2[y].
std::uint32_t polymod(std::uint64_t a, std::uint32_t p) {
    int dp = poly_degree(p);
    for (int i = 63; i >= dp; --i)
        if ((a >> i) & 1) a ^= std::uint64_t(p) << (i - dp);
    return std::uint32_t(a);
}

}  // namespace

bool GaloisField::is_irreducible(std::uint32_t poly, int degree) {
    if (degree < 1 || poly_degree(poly) != degree) return false;
    // A zero constant term means y divides the polynomial. Rejecting it also
    // rules out y itself as a modulus, which would make the class of y zero.
    if ((poly & 1) == 0) return false;
    if (degree == 1) return true;
    // Trial division by every monic polynomial of degree 1 .. degree/2.
    for (int d = 1; 2 * d <= degree; ++d) {
        for (std::uint32_t q = 1u << d; q < (2u << d); ++q) {
            if (polymod(poly, q) == 0) return false;
        }
    }
    return true;
}

std::uint32_t GaloisField::default_modulus(int degree) {
    if (degree < 1 || degree > kMaxDegree)
        throw std::invalid_argument("field degree must be between 1 and 8");
    for (std::uint32_t p = 1u << degree; p < (2u << degree); ++p)
        if (is_irreducible(p, degree)) return p;
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

GaloisField::GaloisField(int degree) : GaloisField(degree, default_modulus(degree)) {}

GaloisField::GaloisField(int degree, std::uint32_t modulus)
    : n_(degree), modulus_(modulus) {
    if (degree < 1 || degree > kMaxDegree)
        throw std::invalid_argument("field degree must be between 1 and 8");
    if (!is_irreducible(modulus, degree))
        throw std::invalid_argument("modulus " + std::to_string(modulus) +
                                    " is not an irreducible polynomial of degree " +
                                    std::to_string(degree));
    build_tables();
}

void GaloisField::build_tables() {
    const std::uint32_t q = size();
    mul_.assign(std::size_t(q) * q, 0);
    for (std::uint32_t a = 0; a < q; ++a)
        for (std::uint32_t b = 0; b < q; ++b)
            mul_[(std::size_t(a) << n_) | b] =
                std::uint8_t(polymod(clmul(a, b), modulus_));

    inv_.assign(q, 0);
    for (std::uint32_t a = 1; a < q; ++a)
        for (std::uint32_t b = 1; b < q; ++b)
            if (mul(std::uint8_t(a), std::uint8_t(b)) == 1) {
                inv_[a] = std::uint8_t(b);
                break;
            }

    // trace(x) = sum of the n conjugates x^(2^k); the sum lands in F_2.
    trace_.assign(q, 0);
    for (std::uint32_t a = 0; a < q; ++a) {
        std::uint8_t conj = std::uint8_t(a), acc = 0;
        for (int k = 0; k < n_; ++k) {
            acc ^= conj;
            conj = mul(conj, conj);
        }
        if (acc > 1) throw std::logic_error("trace fell outside F_2");
        trace_[a] = acc;
    }

    eta_pow_.assign(n_, 1);
    for (int k = 1; k < n_; ++k) eta_pow_[k] = mul(eta_pow_[k - 1], eta());
}

std::uint8_t GaloisField::eta_pow(int k) const {
    if (k < 0 || k >= n_) throw std::invalid_argument("eta_pow exponent out of range");
    return eta_pow_[k];
}

std::uint8_t GaloisField::inv(std::uint8_t a) const {
    if (a == 0) throw std::invalid_argument("zero has no multiplicative inverse");
    return inv_[a];
}

std::uint8_t GaloisField::pow(std::uint8_t a, std::uint64_t e) const {
    std::uint8_t base = a, acc = 1;
    while (e) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

std::vector<int> GaloisField::decompose(std::uint8_t a) const {
    std::vector<int> bits(n_);
    for (int k = 0; k < n_; ++k) bits[k] = (a >> k) & 1;
    return bits;
}

std::shared_ptr<const GaloisField> make_field(int degree) {
    return std::make_shared<const GaloisField>(degree);
}

std::shared_ptr<const GaloisField> make_field(int degree, std::uint32_t modulus) {
    return std::make_shared<const GaloisField>(degree, modulus);
}

FieldElement::FieldElement(const GaloisField& field, std::uint32_t value)
    : field_(&field), v_(std::uint8_t(value)) {
    if (value >= field.size())
        throw std::invalid_argument("element value " + std::to_string(value) +
                                    " out of range for GF(2^" +
                                    std::to_string(field.degree()) + ")");
}

namespace {
void require_same_field(const FieldElement& a, const FieldElement& b) {
    if (!a.field().same_as(b.field()))
        throw std::invalid_argument("field elements belong to different fields");
}
}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return FieldElement(a.field(), a.field().add(a.v_, b.v_));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return FieldElement(a.field(), a.field().mul(a.v_, b.v_));
}

}  // namespace scodes
