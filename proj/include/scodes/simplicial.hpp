#pragma once

#include <cstdint>
#include <vector>

namespace scodes {

// Subsets of F_2^m are handled as lists of bitmasks; coordinate i of [m] is
// bit i-1 of the mask.  A simplicial complex is a downward-closed subset: with
// every member it contains all submasks of that member.

struct SimplicialComplex {
    int m = 0;
    std::vector<std::uint32_t> facets;   // maximal members, an antichain, sorted
    std::vector<std::uint32_t> members;  // the full complex, sorted
};

// Down-set of a single subset L of [m]: all 2^|L| submasks of L.
SimplicialComplex simplex_of(std::uint32_t subset_mask, int m);

// Complex generated by the given maximal elements; redundant (dominated) and
// duplicate generators are dropped.  The member count is cross-checked against
// the inclusion-exclusion count over facet subsets when that sum is feasible.
SimplicialComplex complex_from_maximal(std::vector<std::uint32_t> facets, int m);

// phi(x | Y) = 1 iff the supports of x and Y are disjoint.
inline int phi(std::uint32_t x, std::uint32_t y_mask) {
    return (x & y_mask) == 0 ? 1 : 0;
}

// Character sum chi_x(P) = sum over y in P of (-1)^(x . y); P is any subset of
// F_2^m given as a mask list, not necessarily a complex.
long long chi(std::uint32_t x, const std::vector<std::uint32_t>& members);

// Multivariate generating function of the complex evaluated at the point y:
// the sum over members v of prod_i y_i^(v_i), computed by inclusion-exclusion
// over nonempty facet subsets S as sum (-1)^(|S|+1) prod_{i in meet(S)} (1+y_i).
long long generating_function(const SimplicialComplex& cx,
                              const std::vector<long long>& y);

}  // namespace scodes
