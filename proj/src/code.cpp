#include "scodes/code.hpp"

#include <algorithm>
#include <bit>
#include <cstring>

#include "scodes/enumerate.hpp"
#include "scodes/simplicial.hpp"

namespace scodes {

namespace detail {

unsigned long long ipow_checked(std::uint64_t q, int e) {
    unsigned long long r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > (1ull << 62) / q)
            throw capacity_error("q^k exceeds the supported enumeration range");
        r *= q;
    }
    return r;
}

}  // namespace detail

namespace {

// Lexicographic compare of two element rows; coordinate 1 is the most
// significant digit of the canonical integer key.
bool row_less(const std::uint8_t* a, const std::uint8_t* b, int m) {
    return std::memcmp(a, b, std::size_t(m)) < 0;
}

void sort_rows(std::vector<std::uint8_t>& flat, int m) {
    const std::size_t n = m ? flat.size() / std::size_t(m) : 0;
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return row_less(flat.data() + a * m, flat.data() + b * m, m);
    });
    std::vector<std::uint8_t> out(flat.size());
    for (std::size_t i = 0; i < n; ++i)
        std::memcpy(out.data() + i * m, flat.data() + idx[i] * m, std::size_t(m));
    flat = std::move(out);
}

std::vector<std::vector<std::uint32_t>> normalize_parts(
    const std::vector<std::vector<std::uint32_t>>& parts, int n, int m) {
    if ((int)parts.size() != n)
        throw std::invalid_argument("expected " + std::to_string(n) + " parts, got " +
                                    std::to_string(parts.size()));
    std::vector<std::vector<std::uint32_t>> out;
    out.reserve(parts.size());
    for (const auto& p : parts) {
        if (p.empty()) throw std::invalid_argument("defining-set parts must be nonempty");
        std::vector<std::uint32_t> q = p;
        for (auto v : q)
            if (v >> m)
                throw std::invalid_argument("part vector " + std::to_string(v) +
                                            " lies outside F_2^" + std::to_string(m));
        std::sort(q.begin(), q.end());
        q.erase(std::unique(q.begin(), q.end()), q.end());
        out.push_back(std::move(q));
    }
    return out;
}

// Cartesian product of the parts, one byte per coordinate: part i contributes
// coefficient bit i-1.
std::vector<std::uint8_t> product_rows(const std::vector<std::vector<std::uint32_t>>& parts,
                                       int m, const Budget& budget) {
    unsigned long long total = 1;
    for (const auto& p : parts) {
        total *= p.size();
        if (total > budget.max_set_elements)
            throw capacity_error("defining set exceeds the element-store budget (2^22 rows)");
    }
    const int n = int(parts.size());
    std::vector<std::uint8_t> rows(std::size_t(total) * m, 0);
    std::vector<std::size_t> pick(std::size_t(n), 0);
    for (unsigned long long e = 0; e < total; ++e) {
        std::uint8_t* out = rows.data() + std::size_t(e) * m;
        for (int j = 0; j < m; ++j) {
            std::uint8_t val = 0;
            for (int i = 0; i < n; ++i)
                val |= std::uint8_t(((parts[std::size_t(i)][pick[std::size_t(i)]] >> j) & 1) << i);
            out[j] = val;
        }
        for (int i = n - 1; i >= 0; --i) {
            if (++pick[std::size_t(i)] < parts[std::size_t(i)].size()) break;
            pick[std::size_t(i)] = 0;
        }
    }
    return rows;
}

}  // namespace

bool DefiningSet::contains(const std::uint8_t* tuple) const {
    const std::size_t n = count();
    std::size_t lo = 0, hi = n;
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        int c = std::memcmp(row(mid), tuple, std::size_t(m));
        if (c == 0) return true;
        if (c < 0)
            lo = mid + 1;
        else
            hi = mid;
    }
    return false;
}

std::string DefiningSet::recipe_text() const {
    std::string base;
    if (parts) {
        base = "parts(sizes=[";
        for (std::size_t i = 0; i < parts->size(); ++i) {
            if (i) base += ",";
            base += std::to_string((*parts)[i].size());
        }
        base += "])";
    } else {
        base = "explicit(" + std::to_string(count()) + " rows)";
    }
    if (complemented) base = "complement(" + base + ")";
    if (punctured) base = "punctured(" + base + ")";
    return base;
}

DefiningSet defining_set_from_parts(std::shared_ptr<const GaloisField> gf, int m,
                                    const std::vector<std::vector<std::uint32_t>>& parts,
                                    const Budget& budget) {
    if (!gf) throw std::invalid_argument("defining set needs a field");
    if (m < 1 || m > 16) throw std::invalid_argument("ambient dimension m must be in 1..16");
    auto norm = normalize_parts(parts, gf->degree(), m);
    DefiningSet d;
    d.gf = std::move(gf);
    d.m = m;
    d.elems = product_rows(norm, m, budget);
    sort_rows(d.elems, m);
    d.parts = std::move(norm);
    return d;
}

DefiningSet defining_set_from_simplex_parts(std::shared_ptr<const GaloisField> gf, int m,
                                            const std::vector<std::uint32_t>& generators,
                                            const Budget& budget) {
    std::vector<std::vector<std::uint32_t>> parts;
    parts.reserve(generators.size());
    for (auto g : generators) parts.push_back(simplex_of(g, m).members);
    return defining_set_from_parts(std::move(gf), m, parts, budget);
}

DefiningSet puncture(const DefiningSet& d) {
    DefiningSet out = d;
    out.punctured = true;
    // Rows are sorted, so the zero tuple can only sit in front.
    const std::size_t n = d.count();
    if (n > 0) {
        bool zero = true;
        for (int j = 0; j < d.m; ++j) zero = zero && d.row(0)[j] == 0;
        if (zero) out.elems.erase(out.elems.begin(), out.elems.begin() + d.m);
    }
    return out;
}

DefiningSet complement(const DefiningSet& d, const Budget& budget) {
    const std::uint32_t q = d.gf->size();
    const unsigned long long space = detail::ipow_checked(q, d.m);
    if (space > budget.max_set_elements)
        throw capacity_error("complement would exceed the element-store budget (2^22 rows)");

    // Plain difference: walk the whole space in canonical order and keep the
    // rows that are not in D (D is sorted, so one merge pointer suffices).
    std::vector<std::uint8_t> diff;
    diff.reserve(std::size_t(space - d.count()) * d.m);
    std::vector<std::uint8_t> cur(std::size_t(d.m), 0);
    std::size_t next = 0;
    const std::size_t dn = d.count();
    for (unsigned long long e = 0; e < space; ++e) {
        bool in_d = next < dn && std::memcmp(d.row(next), cur.data(), std::size_t(d.m)) == 0;
        if (in_d)
            ++next;
        else
            diff.insert(diff.end(), cur.begin(), cur.end());
        for (int j = d.m - 1; j >= 0; --j) {
            if (++cur[std::size_t(j)] < q) break;
            cur[std::size_t(j)] = 0;
        }
    }
    if (next != dn) throw std::logic_error("defining set was not sorted");

    DefiningSet out;
    out.gf = d.gf;
    out.m = d.m;
    out.elems = std::move(diff);
    out.parts = d.parts;
    out.complemented = true;

    // For pure parts-built sets, rebuild the complement as the disjoint union
    // of strata (D_1,..,D_{i-1}, D_i^c, full, .., full) and insist the two
    // routes agree.
    if (d.parts && !d.punctured && !d.complemented) {
        const auto& parts = *d.parts;
        const int n = int(parts.size());
        std::vector<std::uint32_t> full;
        for (std::uint32_t v = 0; v < (1u << d.m); ++v) full.push_back(v);
        std::vector<std::uint8_t> strata;
        for (int i = 0; i < n; ++i) {
            std::vector<std::uint32_t> pc;
            for (std::uint32_t v = 0; v < (1u << d.m); ++v)
                if (!std::binary_search(parts[std::size_t(i)].begin(),
                                        parts[std::size_t(i)].end(), v))
                    pc.push_back(v);
            if (pc.empty()) continue;
            std::vector<std::vector<std::uint32_t>> sp;
            for (int j = 0; j < i; ++j) sp.push_back(parts[std::size_t(j)]);
            sp.push_back(std::move(pc));
            for (int j = i + 1; j < n; ++j) sp.push_back(full);
            auto rows = product_rows(sp, d.m, budget);
            strata.insert(strata.end(), rows.begin(), rows.end());
        }
        sort_rows(strata, d.m);
        if (strata != out.elems)
            throw std::logic_error("structured complement differs from the set difference");
    }
    return out;
}

LinearCode code_from_matrix(std::shared_ptr<const GaloisField> gf, int rows,
                            std::size_t cols, std::vector<std::uint8_t> entries) {
    if (!gf) throw std::invalid_argument("code needs a field");
    if (rows < 1 || cols < 1 || entries.size() != std::size_t(rows) * cols)
        throw std::invalid_argument("generator matrix shape mismatch");
    for (auto e : entries)
        if (e >= gf->size()) throw std::invalid_argument("matrix entry outside the field");

    LinearCode c;
    c.gf = std::move(gf);
    c.length = cols;
    c.msg_dim = rows;
    c.gen = std::move(entries);

    // Gauss-Jordan over GF(q) for the rank and a reduced spanning basis.
    std::vector<std::uint8_t> mat = c.gen;
    const GaloisField& f = *c.gf;
    int rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (mat[std::size_t(r) * cols + col]) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        for (std::size_t j = 0; j < cols; ++j)
            std::swap(mat[std::size_t(rank) * cols + j], mat[std::size_t(pivot) * cols + j]);
        const std::uint8_t lead = mat[std::size_t(rank) * cols + col];
        const std::uint8_t s = f.inv(lead);
        for (std::size_t j = 0; j < cols; ++j)
            mat[std::size_t(rank) * cols + j] = f.mul(s, mat[std::size_t(rank) * cols + j]);
        for (int r = 0; r < rows; ++r) {
            if (r == rank) continue;
            const std::uint8_t factor = mat[std::size_t(r) * cols + col];
            if (!factor) continue;
            for (std::size_t j = 0; j < cols; ++j)
                mat[std::size_t(r) * cols + j] ^=
                    f.mul(factor, mat[std::size_t(rank) * cols + j]);
        }
        ++rank;
    }
    c.dimension = rank;
    c.basis.assign(mat.begin(), mat.begin() + std::size_t(rank) * cols);
    return c;
}

LinearCode build_code(const DefiningSet& d) {
    if (d.count() == 0) throw std::invalid_argument("defining set is empty");
    const std::size_t len = d.count();
    std::vector<std::uint8_t> gen(std::size_t(d.m) * len);
    for (std::size_t j = 0; j < len; ++j)
        for (int i = 0; i < d.m; ++i) gen[std::size_t(i) * len + j] = d.row(j)[i];
    return code_from_matrix(d.gf, d.m, len, std::move(gen));
}

long long codeword_weight(const DefiningSet& d, const std::vector<std::uint8_t>& v) {
    if ((int)v.size() != d.m) throw std::invalid_argument("message length must equal m");
    const GaloisField& f = *d.gf;
    for (auto x : v)
        if (x >= f.size()) throw std::invalid_argument("message entry outside the field");
    long long w = 0;
    for (std::size_t j = 0; j < d.count(); ++j) {
        const std::uint8_t* e = d.row(j);
        std::uint8_t acc = 0;
        for (int i = 0; i < d.m; ++i) acc ^= f.mul(v[std::size_t(i)], e[i]);
        if (acc) ++w;
    }
    return w;
}

namespace {

// Tallies weight -> message count over all q^rows messages of the given rows.
std::map<long long, unsigned long long> tally_weights(const GaloisField& gf,
                                                      const std::uint8_t* rows, int k,
                                                      std::size_t len) {
    std::map<long long, unsigned long long> z;
    if (gf.degree() == 1) {
        std::vector<std::vector<std::uint64_t>> packed;
        for (int i = 0; i < k; ++i)
            packed.push_back(detail::pack_bits(rows + std::size_t(i) * len, len));
        detail::enumerate_weights_gf2(packed, len,
                                      [&](std::uint32_t, long long w) { ++z[w]; });
    } else {
        detail::enumerate_weights(gf, rows, k, len,
                                  [&](const std::uint8_t*, long long w) { ++z[w]; });
    }
    return z;
}

}  // namespace

WeightDistribution weight_distribution(const LinearCode& c, const Budget& budget) {
    const unsigned long long msgs = detail::ipow_checked(c.gf->size(), c.msg_dim);
    if (msgs > budget.max_messages)
        throw capacity_error("weight distribution needs " + std::to_string(msgs) +
                             " messages, over the message budget");

    WeightDistribution wd;
    wd.length = c.length;
    wd.zcounts = tally_weights(*c.gf, c.gen.data(), c.msg_dim, c.length);

    const unsigned long long z0 = wd.zcounts.count(0) ? wd.zcounts.at(0) : 0;
    const unsigned long long expect_z0 =
        detail::ipow_checked(c.gf->size(), c.msg_dim - c.dimension);
    if (z0 != expect_z0)
        throw std::logic_error("kernel count disagrees with q^(msg_dim - rank)");
    wd.z0 = z0;

    unsigned long long total = 0;
    for (const auto& [w, zw] : wd.zcounts) {
        if (zw % z0 != 0)
            throw std::logic_error("message count not divisible by the kernel size");
        wd.counts[w] = zw / z0;
        total += zw / z0;
    }
    if (total != detail::ipow_checked(c.gf->size(), c.dimension))
        throw std::logic_error("codeword counts do not sum to q^dimension");

    // Independent recount over the reduced basis, which hits every distinct
    // codeword exactly once.
    if (detail::ipow_checked(c.gf->size(), c.dimension) <= budget.max_codewords) {
        auto direct = tally_weights(*c.gf, c.basis.data(), c.dimension, c.length);
        if (direct != wd.counts)
            throw std::logic_error("basis recount disagrees with Z/z0");
    }
    return wd;
}

long long minimum_distance(const WeightDistribution& wd) {
    for (const auto& [w, a] : wd.counts)
        if (w > 0 && a > 0) return w;
    throw std::invalid_argument("zero code has no minimum distance");
}

std::vector<std::uint8_t> materialize_codewords(const LinearCode& c, const Budget& budget) {
    const unsigned long long count = detail::ipow_checked(c.gf->size(), c.dimension);
    if (count > budget.max_codewords)
        throw capacity_error("codeword store of " + std::to_string(count) +
                             " words exceeds the budget");
    const GaloisField& f = *c.gf;
    const std::size_t len = c.length;
    std::vector<std::uint8_t> store(std::size_t(count) * len, 0);
    std::vector<std::uint8_t> buf(len, 0);
    unsigned long long next = 0;
    auto rec = [&](auto&& self, int level) -> void {
        if (level == c.dimension) {
            std::memcpy(store.data() + std::size_t(next++) * len, buf.data(), len);
            return;
        }
        const std::uint8_t* row = c.basis_row(level);
        for (std::uint32_t v = 0; v < f.size(); ++v) {
            std::vector<std::uint8_t> saved;
            if (v == 0) {
                self(self, level + 1);
            } else {
                saved.assign(buf.begin(), buf.end());
                for (std::size_t j = 0; j < len; ++j)
                    buf[j] = std::uint8_t(saved[j] ^ f.mul(std::uint8_t(v), row[j]));
                self(self, level + 1);
                buf = saved;
            }
        }
    };
    rec(rec, 0);
    return store;
}

F8WeightValue closed_form_weight_f8(std::uint32_t alpha, std::uint32_t beta,
                                    std::uint32_t gamma, std::uint32_t L,
                                    std::uint32_t M, std::uint32_t N, int m) {
    if (m < 1 || m > 16) throw std::invalid_argument("ambient dimension m must be in 1..16");
    const std::uint32_t all = (m == 32) ? ~0u : ((1u << m) - 1);
    for (std::uint32_t s : {L, M, N})
        if (s == 0 || (s & ~all))
            throw std::invalid_argument("L, M, N must be nonempty subsets of [m]");
    for (std::uint32_t x : {alpha, beta, gamma})
        if (x & ~all) throw std::invalid_argument("message layer outside F_2^m");

    const std::uint32_t a = alpha, b = beta, g = gamma;
    int theta = phi(a, L) * phi(g, M) * phi(b, N)
              + phi(b, L) * phi(a ^ g, M) * phi(b ^ g, N)
              + phi(g, L) * phi(b, M) * phi(a ^ g, N)
              + phi(a ^ b, L) * phi(a, M) * phi(g, N)
              + phi(a ^ g, L) * phi(b ^ g, M) * phi(a ^ b ^ g, N)
              + phi(b ^ g, L) * phi(a ^ b ^ g, M) * phi(a ^ b, N)
              + phi(a ^ b ^ g, L) * phi(a ^ b, M) * phi(a, N);

    const int s = std::popcount(L) + std::popcount(M) + std::popcount(N);
    F8WeightValue out;
    out.theta = theta;
    out.weight = (7ll - theta) << (s - 3);

    const bool two_private = (int(((L & ~(M | N)) != 0)) + int(((M & ~(N | L)) != 0)) +
                              int(((N & ~(L | M)) != 0))) >= 2;
    if (two_private && theta != 0 && theta != 1 && theta != 3 && theta != 7)
        throw std::logic_error("theta outside {0,1,3,7} under the two-private-sets hypothesis");
    return out;
}

std::vector<std::uint32_t> message_layers(const GaloisField& gf,
                                          const std::vector<std::uint8_t>& v) {
    std::vector<std::uint32_t> layers(std::size_t(gf.degree()), 0);
    for (std::size_t i = 0; i < v.size(); ++i)
        for (int k = 0; k < gf.degree(); ++k)
            if ((v[i] >> k) & 1) layers[std::size_t(k)] |= 1u << i;
    return layers;
}

}  // namespace scodes
