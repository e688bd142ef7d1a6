#pragma once

// Test-only oracles, independent of the library search paths: brute-force
// vanishing over all n! orderings, brute-force isomorphism over all vertex
// bijections, and seeded random hypergraph generation.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "uturan/hypergraph.hpp"
#include "uturan/vanishing.hpp"

namespace testutil {

using uturan::Hypergraph3;
using uturan::Ordering;
using uturan::Triple;

inline bool brute_force_vanishing(const Hypergraph3& h) {
    std::vector<int> seq(h.n);
    std::iota(seq.begin(), seq.end(), 0);
    do {
        Ordering ord{seq};
        auto res = uturan::roles_under_ordering(h, ord);
        if (std::holds_alternative<uturan::RoleAssignment>(res)) return true;
    } while (std::next_permutation(seq.begin(), seq.end()));
    return false;
}

inline bool brute_force_isomorphic(const Hypergraph3& a, const Hypergraph3& b) {
    if (a.n != b.n || a.edges.size() != b.edges.size()) return false;
    std::vector<int> perm(a.n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (uturan::relabel(a, perm).edges == b.edges) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Uniformly random m-edge hypergraph on n labeled vertices.
inline Hypergraph3 random_hypergraph(int n, int m, std::mt19937_64& rng) {
    std::vector<Triple> all;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) all.push_back({a, b, c});
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(std::min<size_t>(m, all.size()));
    return Hypergraph3::make(n, all);
}

/// Random hypergraph with each triple included independently.
inline Hypergraph3 random_hypergraph_p(int n, double p, std::mt19937_64& rng) {
    std::vector<Triple> edges;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (coin(rng) < p) edges.push_back({a, b, c});
    return Hypergraph3::make(n, edges);
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

/// Every labeled hypergraph on n vertices (2^C(n,3) of them); keep n small.
template <class Fn>
void for_each_labeled_hypergraph(int n, Fn&& fn) {
    std::vector<Triple> all;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) all.push_back({a, b, c});
    const size_t total = size_t{1} << all.size();
    for (size_t mask = 0; mask < total; ++mask) {
        std::vector<Triple> edges;
        for (size_t i = 0; i < all.size(); ++i)
            if (mask >> i & 1) edges.push_back(all[i]);
        fn(Hypergraph3::make(n, std::move(edges)));
    }
}

} // namespace testutil
