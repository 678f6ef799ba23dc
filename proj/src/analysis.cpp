#include "scodes/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <numeric>
#include <stdexcept>

#include "scodes/enumerate.hpp"

namespace scodes {

long long griesmer_sum(int k, long long d, std::uint32_t q) {
    if (k < 1 || d < 1 || q < 2) throw std::invalid_argument("need k >= 1, d >= 1, q >= 2");
    long long acc = 0;
    long long p = 1;
    for (int i = 0; i < k; ++i) {
        acc += (d + p - 1) / p;
        if (p >= d) {
            acc += k - i - 1;  // every remaining term is ceil(d / p) = 1
            break;
        }
        p *= q;
    }
    return acc;
}

bool meets_griesmer(std::size_t length, int k, long long d, std::uint32_t q) {
    return (long long)length == griesmer_sum(k, d, q);
}

bool distance_optimal_by_griesmer(std::size_t length, int k, long long d, std::uint32_t q) {
    return griesmer_sum(k, d + 1, q) > (long long)length;
}

bool ashikhmin_barg(long long wmin, long long wmax, std::uint32_t q) {
    if (wmin < 0 || wmax < wmin) throw std::invalid_argument("need 0 <= wmin <= wmax");
    return (unsigned long long)(q)*std::uint64_t(wmin) >
           (unsigned long long)(q - 1) * std::uint64_t(wmax);
}

MinimalityResult is_minimal_exhaustive(const LinearCode& c, const Budget& budget) {
    MinimalityResult res;
    const unsigned long long count = detail::ipow_checked(c.gf->size(), c.dimension);
    const std::size_t words = c.length / 64 + 1;
    if (count > budget.max_codewords ||
        count * count / 2 * words > budget.max_support_ops) {
        res.status = MinimalityResult::Status::skipped;
        return res;
    }

    auto store = materialize_codewords(c, budget);
    const std::size_t len = c.length;
    std::vector<std::vector<std::uint64_t>> supp;
    std::vector<long long> wt;
    std::vector<std::size_t> idx;
    for (unsigned long long i = 0; i < count; ++i) {
        const std::uint8_t* w = store.data() + std::size_t(i) * len;
        auto bits = detail::pack_bits(w, len);
        const long long ww = detail::popcount_words(bits.data(), bits.size());
        if (ww == 0) continue;  // the zero word covers nothing of interest
        supp.push_back(std::move(bits));
        wt.push_back(ww);
        idx.push_back(std::size_t(i));
    }

    std::vector<std::size_t> order(supp.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return wt[a] < wt[b]; });

    const GaloisField& f = *c.gf;
    auto is_scalar_multiple = [&](const std::uint8_t* a, const std::uint8_t* b) {
        // supp(a) is contained in supp(b); test a == lambda * b.
        std::uint8_t lambda = 0;
        for (std::size_t j = 0; j < len; ++j)
            if (a[j]) {
                lambda = f.mul(a[j], f.inv(b[j]));
                break;
            }
        if (lambda == 0) return true;  // a is the zero word (not reached here)
        for (std::size_t j = 0; j < len; ++j)
            if (a[j] != f.mul(lambda, b[j])) return false;
        return true;
    };

    for (std::size_t oi = 0; oi < order.size(); ++oi) {
        const std::size_t a = order[oi];
        for (std::size_t oj = oi + 1; oj < order.size(); ++oj) {
            const std::size_t b = order[oj];
            bool contained = true;
            for (std::size_t w = 0; w < words && contained; ++w)
                contained = (supp[a][w] & ~supp[b][w]) == 0;
            if (!contained) continue;
            const std::uint8_t* wa = store.data() + idx[a] * len;
            const std::uint8_t* wb = store.data() + idx[b] * len;
            if (is_scalar_multiple(wa, wb)) continue;
            res.status = MinimalityResult::Status::not_minimal;
            res.covered.assign(wa, wa + len);
            res.covering.assign(wb, wb + len);
            return res;
        }
    }
    res.status = MinimalityResult::Status::minimal;
    return res;
}

namespace {

// All q^m elements in canonical order as flat rows, plus the m evaluation
// rows over those columns.
struct FullSpace {
    std::vector<std::uint8_t> elems;  // q^m rows of m bytes
    std::vector<std::uint8_t> gen;    // m rows of q^m bytes
    unsigned long long size = 0;
};

FullSpace full_space(const GaloisField& f, int m, const Budget& budget) {
    FullSpace fs;
    fs.size = detail::ipow_checked(f.size(), m);
    if (fs.size > budget.max_set_elements)
        throw capacity_error("ambient space exceeds the element-store budget");
    fs.elems.assign(std::size_t(fs.size) * m, 0);
    std::vector<std::uint8_t> cur(std::size_t(m), 0);
    for (unsigned long long e = 0; e < fs.size; ++e) {
        std::memcpy(fs.elems.data() + std::size_t(e) * m, cur.data(), std::size_t(m));
        for (int j = m - 1; j >= 0; --j) {
            if (++cur[std::size_t(j)] < f.size()) break;
            cur[std::size_t(j)] = 0;
        }
    }
    fs.gen.assign(std::size_t(m) * fs.size, 0);
    for (unsigned long long j = 0; j < fs.size; ++j)
        for (int i = 0; i < m; ++i)
            fs.gen[std::size_t(i) * fs.size + j] = fs.elems[std::size_t(j) * m + i];
    return fs;
}

void require_base_set(const DefiningSet& d) {
    if (d.punctured || d.complemented)
        throw std::invalid_argument(
            "weight relations start from the base set; pass the unmodified D");
}

}  // namespace

RelationCheck check_weight_relation(const DefiningSet& d, const Budget& budget) {
    require_base_set(d);
    const GaloisField& f = *d.gf;
    auto fs = full_space(f, d.m, budget);
    if (fs.size > budget.max_messages)
        throw capacity_error("relation check needs more messages than the budget allows");

    // 0x80-style flag words over the column bytes: sel marks D \ {0}, rest
    // marks the complement of D; the zero element column carries no flag.
    const std::size_t words = std::size_t(fs.size) / 8 + 1;
    std::vector<std::uint64_t> sel(words, 0), rest(words, 0);
    std::vector<std::uint8_t> zero(std::size_t(d.m), 0);
    for (unsigned long long j = 0; j < fs.size; ++j) {
        const std::uint8_t* e = fs.elems.data() + std::size_t(j) * d.m;
        const bool in_d = d.contains(e);
        const bool is_zero = std::memcmp(e, zero.data(), std::size_t(d.m)) == 0;
        if (is_zero) continue;
        (in_d ? sel : rest)[j / 8] |= 0x80ull << (8 * (j % 8));
    }

    RelationCheck rc;
    const long long expect = (long long)(f.size() - 1) * (long long)(fs.size / f.size());
    detail::enumerate_weights_split(
        f, fs.gen.data(), d.m, std::size_t(fs.size), sel, rest,
        [&](const std::uint8_t* digits, long long ws, long long wr) {
            ++rc.messages;
            bool vzero = true;
            for (int i = 0; i < d.m; ++i) vzero = vzero && digits[i] == 0;
            const long long want = vzero ? 0 : expect;
            if (rc.holds && ws + wr != want) {
                rc.holds = false;
                rc.counterexample.assign(digits, digits + d.m);
                rc.lhs = ws + wr;
                rc.rhs = want;
            }
        });
    return rc;
}

RelationCheck check_subfield_weight_relation(const DefiningSet& d, const Budget& budget) {
    require_base_set(d);
    const GaloisField& f = *d.gf;
    const int n = f.degree();
    const int k = n * d.m;
    if (k > 32) throw capacity_error("binary message space is wider than 32 bits");
    auto fs = full_space(f, d.m, budget);
    if ((1ull << k) > budget.max_messages)
        throw capacity_error("relation check needs more messages than the budget allows");

    // Binary trace stack over all columns; row (k', i) holds Tr(e_i eta^k').
    std::vector<std::vector<std::uint64_t>> rows;
    std::vector<std::uint8_t> raw(std::size_t(fs.size), 0);
    for (int kk = 0; kk < n; ++kk)
        for (int i = 0; i < d.m; ++i) {
            for (unsigned long long j = 0; j < fs.size; ++j)
                raw[std::size_t(j)] = std::uint8_t(
                    f.trace(f.mul(fs.elems[std::size_t(j) * d.m + i], f.eta_pow(kk))));
            rows.push_back(detail::pack_bits(raw.data(), std::size_t(fs.size)));
        }

    const std::size_t words = std::size_t(fs.size) / 64 + 1;
    std::vector<std::uint64_t> sel(words, 0), rest(words, 0);
    std::vector<std::uint8_t> zero(std::size_t(d.m), 0);
    for (unsigned long long j = 0; j < fs.size; ++j) {
        const std::uint8_t* e = fs.elems.data() + std::size_t(j) * d.m;
        if (std::memcmp(e, zero.data(), std::size_t(d.m)) == 0) continue;
        (d.contains(e) ? sel : rest)[j / 64] |= 1ull << (j % 64);
    }

    RelationCheck rc;
    const long long expect = 1ll << (k - 1);
    detail::enumerate_weights_gf2_split(
        rows, std::size_t(fs.size), sel, rest,
        [&](std::uint32_t msg, long long ws, long long wr) {
            ++rc.messages;
            const long long want = msg == 0 ? 0 : expect;
            if (rc.holds && ws + wr != want) {
                rc.holds = false;
                rc.counterexample.resize(std::size_t(k));
                for (int b = 0; b < k; ++b)
                    rc.counterexample[std::size_t(b)] = (msg >> b) & 1;
                rc.lhs = ws + wr;
                rc.rhs = want;
            }
        });
    return rc;
}

CodeReport analyze_code(const LinearCode& c, const Budget& budget) {
    CodeReport rep;
    auto wd = weight_distribution(c, budget);
    rep.length = c.length;
    rep.dimension = c.dimension;
    rep.z0 = wd.z0;
    rep.counts = wd.counts;
    rep.zcounts = wd.zcounts;
    rep.min_distance = minimum_distance(wd);

    long long wmax = 0;
    for (const auto& [w, a] : wd.counts)
        if (w > 0 && a > 0) wmax = w;
    const std::uint32_t q = c.gf->size();
    rep.griesmer = meets_griesmer(c.length, c.dimension, rep.min_distance, q);
    rep.distance_optimal_griesmer =
        distance_optimal_by_griesmer(c.length, c.dimension, rep.min_distance, q);
    rep.ashikhmin_barg = ashikhmin_barg(rep.min_distance, wmax, q);
    if (rep.griesmer && !rep.distance_optimal_griesmer)
        throw std::logic_error("a bound-meeting code must be distance optimal");

    auto mr = is_minimal_exhaustive(c, budget);
    switch (mr.status) {
        case MinimalityResult::Status::minimal: rep.minimal = true; break;
        case MinimalityResult::Status::not_minimal: rep.minimal = false; break;
        case MinimalityResult::Status::skipped: rep.minimal.reset(); break;
    }
    return rep;
}

}  // namespace scodes
