#include "scodes/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace scodes {

namespace {

constexpr int kMaxAmbient = 16;

void check_ambient(int m) {
    if (m < 1 || m > kMaxAmbient)
        throw std::invalid_argument("ambient dimension m must be between 1 and " +
                                    std::to_string(kMaxAmbient));
}

void check_mask(std::uint32_t mask, int m) {
    if (mask >> m)
        throw std::invalid_argument("subset mask " + std::to_string(mask) +
                                    " has coordinates outside [" + std::to_string(m) + "]");
}

}  // namespace

SimplicialComplex simplex_of(std::uint32_t subset_mask, int m) {
    check_ambient(m);
    check_mask(subset_mask, m);
    SimplicialComplex cx;
    cx.m = m;
    cx.facets = {subset_mask};
    // Standard submask walk: s = (s-1) & L visits every submask of L once.
    std::uint32_t s = subset_mask;
    for (;;) {
        cx.members.push_back(s);
        if (s == 0) break;
        s = (s - 1) & subset_mask;
    }
    std::sort(cx.members.begin(), cx.members.end());
    return cx;
}

SimplicialComplex complex_from_maximal(std::vector<std::uint32_t> facets, int m) {
    check_ambient(m);
    if (facets.empty()) throw std::invalid_argument("a complex needs at least one generator");
    for (auto f : facets) check_mask(f, m);

    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

    // Drop generators contained in another generator so facets form an antichain.
    std::vector<std::uint32_t> maximal;
    for (auto f : facets) {
        bool dominated = false;
        for (auto g : facets)
            if (f != g && (f & ~g) == 0) {
                dominated = true;
                break;
            }
        if (!dominated) maximal.push_back(f);
    }

    SimplicialComplex cx;
    cx.m = m;
    cx.facets = std::move(maximal);

    std::vector<bool> present(std::size_t(1) << m, false);
    for (auto f : cx.facets) {
        std::uint32_t s = f;
        for (;;) {
            present[s] = true;
            if (s == 0) break;
            s = (s - 1) & f;
        }
    }
    for (std::uint32_t v = 0; v < (1u << m); ++v)
        if (present[v]) cx.members.push_back(v);

    // |complex| must equal the inclusion-exclusion count over facet subsets.
    if (cx.facets.size() <= 20) {
        long long count = 0;
        const std::uint32_t nf = std::uint32_t(cx.facets.size());
        for (std::uint32_t sel = 1; sel < (1u << nf); ++sel) {
            std::uint32_t meet = ~0u;
            for (std::uint32_t i = 0; i < nf; ++i)
                if ((sel >> i) & 1) meet &= cx.facets[i];
            long long term = 1ll << std::popcount(meet & ((1u << m) - 1));
            count += (std::popcount(sel) & 1) ? term : -term;
        }
        if (count != (long long)cx.members.size())
            throw std::logic_error("complex size disagrees with inclusion-exclusion count");
    }
    return cx;
}

long long chi(std::uint32_t x, const std::vector<std::uint32_t>& members) {
    long long acc = 0;
    for (auto y : members) acc += (std::popcount(x & y) & 1) ? -1 : 1;
    return acc;
}

long long generating_function(const SimplicialComplex& cx,
                              const std::vector<long long>& y) {
    if ((int)y.size() != cx.m)
        throw std::invalid_argument("evaluation point must have m components");
    const std::uint32_t nf = std::uint32_t(cx.facets.size());
    if (nf > 25) throw std::invalid_argument("too many facets for inclusion-exclusion");
    long long acc = 0;
    for (std::uint32_t sel = 1; sel < (1u << nf); ++sel) {
        std::uint32_t meet = ~0u;
        for (std::uint32_t i = 0; i < nf; ++i)
            if ((sel >> i) & 1) meet &= cx.facets[i];
        long long term = 1;
        for (int i = 0; i < cx.m; ++i)
            if ((meet >> i) & 1) term *= 1 + y[i];
        acc += (std::popcount(sel) & 1) ? term : -term;
    }
    return acc;
}

}  // namespace scodes
