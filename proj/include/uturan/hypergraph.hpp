#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "uturan/errors.hpp"

namespace uturan {

using Vertex = int;

/// An unordered 3-element edge, stored with its vertices sorted ascending.
using Triple = std::array<Vertex, 3>;

/// Unordered vertex pair keyed as (min, max).
using PairKey = std::pair<int, int>;

inline PairKey pair_key(int u, int v) { return u < v ? PairKey{u, v} : PairKey{v, u}; }

inline Triple sorted_triple(Vertex a, Vertex b, Vertex c) {
    Triple t{a, b, c};
    std::sort(t.begin(), t.end());
    return t;
}

/// A 3-uniform hypergraph on labeled vertices 0..n-1.
///
/// Invariants: every edge has three distinct vertices < n, each triple is
/// sorted, the edge list is sorted and duplicate-free. Isolated vertices are
/// permitted (n may exceed the number of covered vertices). Values are
/// immutable after construction and safe to share across threads.
struct Hypergraph3 {
    int n = 0;
    std::vector<Triple> edges;

    /// Validates and normalizes. Throws Error on a repeated vertex inside an
    /// edge, an out-of-range vertex, or a duplicate edge.
    static Hypergraph3 make(int n, std::vector<Triple> raw) {
        if (n < 0) throw Error("vertex count must be non-negative");
        for (Triple& t : raw) {
            std::sort(t.begin(), t.end());
            if (t[0] == t[1] || t[1] == t[2])
                throw Error("repeated vertex inside an edge");
            if (t[0] < 0 || t[2] >= n)
                throw Error("vertex index out of range 0.." + std::to_string(n - 1));
        }
        std::sort(raw.begin(), raw.end());
        if (std::adjacent_find(raw.begin(), raw.end()) != raw.end())
            throw Error("duplicate edge");
        return Hypergraph3{n, std::move(raw)};
    }

    bool has_edge(const Triple& t) const {
        return std::binary_search(edges.begin(), edges.end(), t);
    }

    int edge_count() const { return static_cast<int>(edges.size()); }

    bool operator==(const Hypergraph3&) const = default;
};

/// Edges of `h` minus `e`. Throws Error if `e` is not an edge.
inline Hypergraph3 delete_edge(const Hypergraph3& h, Triple e) {
    std::sort(e.begin(), e.end());
    auto it = std::lower_bound(h.edges.begin(), h.edges.end(), e);
    if (it == h.edges.end() || *it != e)
        throw Error("edge not present");
    Hypergraph3 out = h;
    out.edges.erase(out.edges.begin() + (it - h.edges.begin()));
    return out;
}

/// Image of `h` under the vertex permutation `perm` (perm[v] = new label).
inline Hypergraph3 relabel(const Hypergraph3& h, std::span<const int> perm) {
    std::vector<Triple> out;
    out.reserve(h.edges.size());
    for (const Triple& t : h.edges)
        out.push_back(sorted_triple(perm[t[0]], perm[t[1]], perm[t[2]]));
    return Hypergraph3::make(h.n, std::move(out));
}

inline std::vector<int> vertex_degrees(const Hypergraph3& h) {
    std::vector<int> deg(h.n, 0);
    for (const Triple& t : h.edges)
        for (Vertex v : t) deg[v]++;
    return deg;
}

inline int isolated_vertex_count(const Hypergraph3& h) {
    auto deg = vertex_degrees(h);
    return static_cast<int>(std::count(deg.begin(), deg.end(), 0));
}

// ---------------------------------------------------------------------------
// Rank tables for small n. Edge sets of hypergraphs with n <= 8 fit in one
// 64-bit word indexed by the lexicographic rank of the triple; the search
// kernels (vanishing orderings, canonical forms, census) run on these masks.
// ---------------------------------------------------------------------------

inline constexpr int kMaskMaxN = 8; // C(8,3) = 56 <= 64

struct SmallGeometry {
    int n = 0;
    int pair_count = 0;
    int triple_count = 0;
    std::array<std::array<int, kMaskMaxN>, kMaskMaxN> pair_rank{};   // [u][v], u<v
    std::array<std::array<std::array<int, kMaskMaxN>, kMaskMaxN>, kMaskMaxN> triple_rank{};
    std::vector<std::array<int, 2>> pairs;            // rank -> (u,v)
    std::vector<Triple> triples;                      // rank -> (a,b,c)
    std::vector<std::array<int, 3>> triple_pair_ranks; // rank -> ranks of (ab, ac, bc)
    std::array<std::uint64_t, kMaskMaxN> vertex_mask{}; // triples containing v
    std::vector<std::uint64_t> pair_masks;            // triples containing the pair

    explicit SmallGeometry(int n_) : n(n_) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                pair_rank[u][v] = pair_count++;
                pairs.push_back({u, v});
            }
        pair_masks.assign(pair_count, 0);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c) {
                    int r = triple_count++;
                    triple_rank[a][b][c] = r;
                    triples.push_back({a, b, c});
                    triple_pair_ranks.push_back(
                        {pair_rank[a][b], pair_rank[a][c], pair_rank[b][c]});
                    std::uint64_t bit = std::uint64_t{1} << r;
                    vertex_mask[a] |= bit;
                    vertex_mask[b] |= bit;
                    vertex_mask[c] |= bit;
                    pair_masks[pair_rank[a][b]] |= bit;
                    pair_masks[pair_rank[a][c]] |= bit;
                    pair_masks[pair_rank[b][c]] |= bit;
                }
    }
};

inline const SmallGeometry& small_geometry(int n) {
    if (n < 0 || n > kMaskMaxN)
        throw BoundError("bit-mask tables support n <= " + std::to_string(kMaskMaxN));
    static const std::array<SmallGeometry, kMaskMaxN + 1> cache = [] {
        return std::array<SmallGeometry, kMaskMaxN + 1>{
            SmallGeometry(0), SmallGeometry(1), SmallGeometry(2),
            SmallGeometry(3), SmallGeometry(4), SmallGeometry(5),
            SmallGeometry(6), SmallGeometry(7), SmallGeometry(8)};
    }();
    return cache[n];
}

inline std::uint64_t edge_mask(const Hypergraph3& h, const SmallGeometry& geo) {
    std::uint64_t m = 0;
    for (const Triple& t : h.edges)
        m |= std::uint64_t{1} << geo.triple_rank[t[0]][t[1]][t[2]];
    return m;
}

inline Hypergraph3 hypergraph_from_mask(std::uint64_t mask, const SmallGeometry& geo) {
    std::vector<Triple> edges;
    for (std::uint64_t m = mask; m;) {
        int r = std::countr_zero(m);
        m &= m - 1;
        edges.push_back(geo.triples[r]);
    }
    return Hypergraph3{geo.n, std::move(edges)};
}

} // namespace uturan
