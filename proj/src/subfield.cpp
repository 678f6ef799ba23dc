#include "scodes/subfield.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <stdexcept>

#include "scodes/enumerate.hpp"
#include "scodes/simplicial.hpp"

namespace scodes {

namespace detail {

int gf2_rank(std::vector<std::vector<std::uint64_t>> rows) {
    int rank = 0;
    const std::size_t words = rows.empty() ? 0 : rows[0].size();
    for (std::size_t w = 0; w < words; ++w) {
        for (int b = 0; b < 64; ++b) {
            const std::uint64_t mask = 1ull << b;
            std::size_t hit = std::size_t(rank);
            while (hit < rows.size() && !(rows[hit][w] & mask)) ++hit;
            if (hit == rows.size()) continue;
            std::swap(rows[std::size_t(rank)], rows[hit]);
            for (std::size_t r = 0; r < rows.size(); ++r)
                if (r != std::size_t(rank) && (rows[r][w] & mask))
                    for (std::size_t ww = 0; ww < words; ++ww)
                        rows[r][ww] ^= rows[std::size_t(rank)][ww];
            ++rank;
            if (std::size_t(rank) == rows.size()) return rank;
        }
    }
    return rank;
}

}  // namespace detail

LinearCode subfield_generator_stack(const LinearCode& c) {
    const GaloisField& f = *c.gf;
    const int n = f.degree();
    const int rows = n * c.msg_dim;
    std::vector<std::uint8_t> gen(std::size_t(rows) * c.length);
    for (int k = 0; k < n; ++k) {
        const std::uint8_t ek = f.eta_pow(k);
        for (int i = 0; i < c.msg_dim; ++i) {
            const std::uint8_t* src = c.row(i);
            std::uint8_t* dst = gen.data() + std::size_t(k * c.msg_dim + i) * c.length;
            for (std::size_t j = 0; j < c.length; ++j)
                dst[j] = std::uint8_t(f.trace(f.mul(src[j], ek)));
        }
    }
    return code_from_matrix(make_field(1), rows, c.length, std::move(gen));
}

namespace {

// Layer-major bit tuple of one element row, one byte per output coordinate.
void flatten_layer_major(const GaloisField& f, const std::uint8_t* elem, int m,
                         std::uint8_t* out) {
    for (int k = 0; k < f.degree(); ++k)
        for (int i = 0; i < m; ++i) out[k * m + i] = (elem[i] >> k) & 1;
}

std::vector<std::uint8_t> sorted_rows(std::vector<std::uint8_t> flat, int width) {
    const std::size_t n = flat.size() / std::size_t(width);
    std::vector<const std::uint8_t*> ptr(n);
    for (std::size_t i = 0; i < n; ++i) ptr[i] = flat.data() + i * std::size_t(width);
    std::sort(ptr.begin(), ptr.end(), [&](const std::uint8_t* a, const std::uint8_t* b) {
        return std::memcmp(a, b, std::size_t(width)) < 0;
    });
    std::vector<std::uint8_t> out(flat.size());
    for (std::size_t i = 0; i < n; ++i)
        std::memcpy(out.data() + i * std::size_t(width), ptr[i], std::size_t(width));
    return out;
}

}  // namespace

DefiningSet subfield_defining_set(const DefiningSet& d) {
    const GaloisField& f = *d.gf;
    const int width = f.degree() * d.m;
    std::vector<std::uint8_t> flat(d.count() * std::size_t(width));
    for (std::size_t j = 0; j < d.count(); ++j)
        flatten_layer_major(f, d.row(j), d.m, flat.data() + j * std::size_t(width));

    DefiningSet out;
    out.gf = make_field(1);
    out.m = width;
    out.elems = sorted_rows(std::move(flat), width);
    out.punctured = d.punctured;
    out.complemented = d.complemented;
    return out;
}

DefiningSet subfield_defining_set_tracewise(const DefiningSet& d) {
    const GaloisField& f = *d.gf;
    const int n = f.degree();
    const int width = n * d.m;
    std::vector<std::uint8_t> flat(d.count() * std::size_t(width));
    for (std::size_t j = 0; j < d.count(); ++j) {
        const std::uint8_t* e = d.row(j);
        std::uint8_t* out = flat.data() + j * std::size_t(width);
        for (int i = 0; i < d.m; ++i)
            for (int k = 0; k < n; ++k)
                out[i * n + k] = std::uint8_t(f.trace(f.mul(e[i], f.eta_pow(k))));
    }

    DefiningSet out;
    out.gf = make_field(1);
    out.m = width;
    out.elems = sorted_rows(std::move(flat), width);
    out.punctured = d.punctured;
    out.complemented = d.complemented;
    return out;
}

LinearCode build_subfield_code(const DefiningSet& d, const Budget& budget) {
    (void)budget;
    if (d.count() == 0) throw std::invalid_argument("defining set is empty");
    auto stack = subfield_generator_stack(build_code(d));

    // Independent route: evaluation rows of the layer-major tuples, laid out
    // in D's column order so the two generators describe the same coordinate
    // positions.
    const GaloisField& f = *d.gf;
    const int width = f.degree() * d.m;
    std::vector<std::uint8_t> tuple(static_cast<std::size_t>(width), 0);
    std::vector<std::uint8_t> eval(std::size_t(width) * d.count());
    for (std::size_t j = 0; j < d.count(); ++j) {
        flatten_layer_major(f, d.row(j), d.m, tuple.data());
        for (int r = 0; r < width; ++r) eval[std::size_t(r) * d.count() + j] = tuple[std::size_t(r)];
    }

    std::vector<std::vector<std::uint64_t>> a, b, both;
    for (int r = 0; r < stack.msg_dim; ++r)
        a.push_back(detail::pack_bits(stack.row(r), stack.length));
    for (int r = 0; r < width; ++r)
        b.push_back(detail::pack_bits(eval.data() + std::size_t(r) * d.count(), d.count()));
    both = a;
    both.insert(both.end(), b.begin(), b.end());
    const int ra = detail::gf2_rank(a), rb = detail::gf2_rank(b), rab = detail::gf2_rank(both);
    if (ra != rb || ra != rab)
        throw std::logic_error("trace stack and tuple evaluation span different binary codes");
    if (ra != stack.dimension)
        throw std::logic_error("packed rank disagrees with the byte-level rank");
    return stack;
}

long long subfield_closed_form_weight_f8(std::uint32_t alpha, std::uint32_t beta,
                                         std::uint32_t gamma, std::uint32_t L,
                                         std::uint32_t M, std::uint32_t N, int m) {
    if (m < 1 || m > 16) throw std::invalid_argument("ambient dimension m must be in 1..16");
    const std::uint32_t all = (1u << m) - 1;
    for (std::uint32_t s : {L, M, N})
        if (s == 0 || (s & ~all))
            throw std::invalid_argument("L, M, N must be nonempty subsets of [m]");
    for (std::uint32_t x : {alpha, beta, gamma})
        if (x & ~all) throw std::invalid_argument("message layer outside F_2^m");
    const int s = std::popcount(L) + std::popcount(M) + std::popcount(N);
    return (1ll << (s - 1)) * (1 - phi(alpha, L) * phi(gamma, M) * phi(beta, N));
}

}  // namespace scodes
