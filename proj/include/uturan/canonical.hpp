#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include "uturan/hypergraph.hpp"

namespace uturan {

/// Hard ceiling for the brute-force relabeling search; the per-call bound is
/// configurable below it (default 10).
inline constexpr int kMaxCanonicalN = 10;
inline constexpr int kDefaultCanonicalBound = 10;

/// Edge-set encoding over triple ranks, C(10,3) = 120 bits.
using EdgeBits = std::array<std::uint64_t, 2>;

/// Orders encodings lexicographically as sorted rank sequences: at the first
/// differing rank, the encoding that contains it is the smaller one.
inline bool edge_bits_less(const EdgeBits& a, const EdgeBits& b) {
    for (int w = 0; w < 2; ++w) {
        std::uint64_t d = a[w] ^ b[w];
        if (d) {
            std::uint64_t low = d & (~d + 1);
            return (a[w] & low) != 0;
        }
    }
    return false;
}

/// Isomorphism-invariant certificate of a hypergraph: the minimal edge-set
/// encoding over all vertex relabelings, plus the automorphism group order.
/// Equal for two hypergraphs of the same n iff they are isomorphic.
struct CanonicalForm {
    int n = 0;
    EdgeBits bits{0, 0};
    std::uint64_t automorphism_count = 1;

    bool operator==(const CanonicalForm& o) const { return n == o.n && bits == o.bits; }
    bool operator!=(const CanonicalForm& o) const { return !(*this == o); }
    bool operator<(const CanonicalForm& o) const {
        if (n != o.n) return n < o.n;
        return bits < o.bits;
    }
};

namespace detail {

// Rank tables for the generic (n <= 10) path.
struct CanonGeometry {
    int n;
    std::vector<int> rank3; // (a*n+b)*n+c for a<b<c
    std::vector<Triple> triples;

    explicit CanonGeometry(int n_) : n(n_), rank3(n_ * n_ * n_, -1) {
        int r = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c) {
                    rank3[(a * n + b) * n + c] = r++;
                    triples.push_back({a, b, c});
                }
    }
    int rank(int a, int b, int c) const { return rank3[(a * n + b) * n + c]; }
};

inline const CanonGeometry& canon_geometry(int n) {
    static std::vector<CanonGeometry> cache = [] {
        std::vector<CanonGeometry> v;
        for (int i = 0; i <= kMaxCanonicalN; ++i) v.emplace_back(i);
        return v;
    }();
    return cache[n];
}

// Vertices partitioned by (degree, sorted pair-degree multiset), classes in
// decreasing invariant order. Only class-respecting relabelings compete for
// the minimum; the invariant is itself isomorphism-invariant, so the
// restricted minimum still separates isomorphism classes.
struct VertexClasses {
    std::vector<std::vector<int>> members; // per class, vertex labels ascending
    std::vector<int> block_start;          // position block per class
};

inline VertexClasses vertex_classes(const Hypergraph3& h) {
    const int n = h.n;
    std::vector<std::vector<int>> key(n);
    std::vector<std::vector<int>> pd(n, std::vector<int>(n, 0));
    std::vector<int> deg(n, 0);
    for (const Triple& t : h.edges) {
        deg[t[0]]++; deg[t[1]]++; deg[t[2]]++;
        pd[t[0]][t[1]]++; pd[t[1]][t[0]]++;
        pd[t[0]][t[2]]++; pd[t[2]][t[0]]++;
        pd[t[1]][t[2]]++; pd[t[2]][t[1]]++;
    }
    for (int v = 0; v < n; ++v) {
        key[v].push_back(deg[v]);
        std::vector<int> row;
        for (int u = 0; u < n; ++u)
            if (u != v) row.push_back(pd[v][u]);
        std::sort(row.rbegin(), row.rend());
        key[v].insert(key[v].end(), row.begin(), row.end());
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return key[a] > key[b]; });
    VertexClasses vc;
    int pos = 0;
    for (int i = 0; i < n;) {
        int j = i;
        std::vector<int> cls;
        while (j < n && key[order[j]] == key[order[i]]) cls.push_back(order[j++]);
        std::sort(cls.begin(), cls.end());
        vc.block_start.push_back(pos);
        pos += static_cast<int>(cls.size());
        vc.members.push_back(std::move(cls));
        i = j;
    }
    return vc;
}

// Calls fn(perm) for every relabeling that maps each class onto its position
// block; perm[v] = new label. Yields exactly once for n = 0.
template <class Fn>
void for_each_class_perm(VertexClasses& vc, int n, Fn&& fn) {
    std::vector<int> perm(n);
    const int k = static_cast<int>(vc.members.size());
    while (true) {
        for (int c = 0; c < k; ++c)
            for (size_t i = 0; i < vc.members[c].size(); ++i)
                perm[vc.members[c][i]] = vc.block_start[c] + static_cast<int>(i);
        fn(perm);
        int c = k - 1;
        while (c >= 0 && !std::next_permutation(vc.members[c].begin(), vc.members[c].end()))
            --c;
        if (c < 0) break;
    }
}

} // namespace detail

/// Canonical form plus every relabeling that achieves it (as perm[v] = new
/// label). The labeling set is a full automorphism-group coset, so its size
/// equals the automorphism count.
struct CanonicalResult {
    CanonicalForm form;
    std::vector<std::vector<int>> min_labelings;
};

inline CanonicalResult canonical_labelings(const Hypergraph3& h,
                                           int bound = kDefaultCanonicalBound) {
    if (h.n > bound || h.n > kMaxCanonicalN)
        throw BoundError("canonical form limited to n <= " +
                         std::to_string(std::min(bound, kMaxCanonicalN)) +
                         ", got n = " + std::to_string(h.n));
    const auto& geo = detail::canon_geometry(h.n);
    auto vc = detail::vertex_classes(h);
    CanonicalResult res;
    res.form.n = h.n;
    bool have = false;
    detail::for_each_class_perm(vc, h.n, [&](const std::vector<int>& perm) {
        EdgeBits bits{0, 0};
        for (const Triple& t : h.edges) {
            int x = perm[t[0]], y = perm[t[1]], z = perm[t[2]];
            if (x > y) std::swap(x, y);
            if (y > z) std::swap(y, z);
            if (x > y) std::swap(x, y);
            int r = geo.rank(x, y, z);
            bits[r >> 6] |= std::uint64_t{1} << (r & 63);
        }
        if (!have || edge_bits_less(bits, res.form.bits)) {
            have = true;
            res.form.bits = bits;
            res.min_labelings.clear();
            res.min_labelings.push_back(perm);
        } else if (bits == res.form.bits) {
            res.min_labelings.push_back(perm);
        }
    });
    res.form.automorphism_count = res.min_labelings.size();
    return res;
}

inline CanonicalForm canonical_form(const Hypergraph3& h,
                                    int bound = kDefaultCanonicalBound) {
    return canonical_labelings(h, bound).form;
}

/// True iff a vertex bijection maps the edges of one onto the edges of the
/// other. Labeled graphs of different n are never isomorphic here; callers
/// pad to a common n when they mean to ignore isolated vertices.
inline bool are_isomorphic(const Hypergraph3& a, const Hypergraph3& b,
                           int bound = kDefaultCanonicalBound) {
    if (a.n != b.n || a.edges.size() != b.edges.size()) return false;
    return canonical_form(a, bound) == canonical_form(b, bound);
}

/// All automorphisms of h (perm[v] = image vertex).
inline std::vector<std::vector<int>> automorphisms(const Hypergraph3& h,
                                                   int bound = kDefaultCanonicalBound) {
    auto res = canonical_labelings(h, bound);
    const auto& g0 = res.min_labelings.front();
    std::vector<int> inv(h.n);
    for (int v = 0; v < h.n; ++v) inv[g0[v]] = v;
    std::vector<std::vector<int>> auts;
    auts.reserve(res.min_labelings.size());
    for (const auto& g : res.min_labelings) {
        std::vector<int> a(h.n);
        for (int v = 0; v < h.n; ++v) a[v] = inv[g[v]];
        auts.push_back(std::move(a));
    }
    return auts;
}

// ---------------------------------------------------------------------------
// Single-word fast path for n <= 8, used by the enumeration kernels.
// ---------------------------------------------------------------------------

struct Canon64 {
    std::uint64_t bits = 0;
    // Relabelings achieving the minimum, perm[v] = new label.
    std::vector<std::array<std::int8_t, kMaskMaxN>> min_labelings;
};

inline bool mask_encoding_less(std::uint64_t a, std::uint64_t b) {
    std::uint64_t d = a ^ b;
    if (!d) return false;
    std::uint64_t low = d & (~d + 1);
    return (a & low) != 0;
}

inline Canon64 canon64(std::uint64_t mask, const SmallGeometry& geo) {
    const int n = geo.n;
    // Invariants from the mask: degree and sorted pair-degree row per vertex.
    std::array<std::int64_t, kMaskMaxN> inv_key{};
    std::array<std::array<std::int8_t, kMaskMaxN>, kMaskMaxN> pd{};
    std::array<std::int8_t, kMaskMaxN> deg{};
    for (int p = 0; p < geo.pair_count; ++p) {
        int c = std::popcount(mask & geo.pair_masks[p]);
        auto [u, v] = geo.pairs[p];
        pd[u][v] = static_cast<std::int8_t>(c);
        pd[v][u] = static_cast<std::int8_t>(c);
    }
    for (int v = 0; v < n; ++v)
        deg[v] = static_cast<std::int8_t>(std::popcount(mask & geo.vertex_mask[v]));
    for (int v = 0; v < n; ++v) {
        std::array<std::int8_t, kMaskMaxN> row{};
        int k = 0;
        for (int u = 0; u < n; ++u)
            if (u != v) row[k++] = pd[v][u];
        std::sort(row.begin(), row.begin() + k, std::greater<>());
        std::int64_t key = deg[v];
        for (int i = 0; i < k; ++i) key = key * 64 + row[i];
        inv_key[v] = key;
    }
    // Class-respecting odometer, classes in decreasing invariant order.
    std::array<int, kMaskMaxN> order{};
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.begin() + n,
              [&](int a, int b) { return inv_key[a] != inv_key[b] ? inv_key[a] > inv_key[b] : a < b; });
    std::vector<std::vector<int>> classes;
    std::vector<int> starts;
    for (int i = 0; i < n;) {
        int j = i;
        std::vector<int> cls;
        while (j < n && inv_key[order[j]] == inv_key[order[i]]) cls.push_back(order[j++]);
        std::sort(cls.begin(), cls.end());
        starts.push_back(i);
        classes.push_back(std::move(cls));
        i = j;
    }

    Canon64 res;
    bool have = false;
    std::array<std::int8_t, kMaskMaxN> perm{};
    const int k = static_cast<int>(classes.size());
    while (true) {
        for (int c = 0; c < k; ++c)
            for (size_t i = 0; i < classes[c].size(); ++i)
                perm[classes[c][i]] = static_cast<std::int8_t>(starts[c] + i);
        std::uint64_t bits = 0;
        for (std::uint64_t m = mask; m;) {
            int r = std::countr_zero(m);
            m &= m - 1;
            const Triple& t = geo.triples[r];
            int x = perm[t[0]], y = perm[t[1]], z = perm[t[2]];
            if (x > y) std::swap(x, y);
            if (y > z) std::swap(y, z);
            if (x > y) std::swap(x, y);
            bits |= std::uint64_t{1} << geo.triple_rank[x][y][z];
        }
        if (!have || mask_encoding_less(bits, res.bits)) {
            have = true;
            res.bits = bits;
            res.min_labelings.clear();
            res.min_labelings.push_back(perm);
        } else if (bits == res.bits) {
            res.min_labelings.push_back(perm);
        }
        int c = k - 1;
        while (c >= 0 && !std::next_permutation(classes[c].begin(), classes[c].end()))
            --c;
        if (c < 0) break;
    }
    return res;
}

} // namespace uturan
