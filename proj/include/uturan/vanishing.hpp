#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "uturan/hypergraph.hpp"
#include "uturan/limits.hpp"

namespace uturan {

/// Role of a vertex pair inside an edge {v_i, v_j, v_k} with i < j < k in a
/// fixed ordering: (i,j) is the left pair, (i,k) the top pair, (j,k) the
/// right pair.
enum class Role : std::uint8_t { Left = 0, Top = 1, Right = 2 };

inline char role_char(Role r) { return "LTR"[static_cast<int>(r)]; }

inline std::optional<Role> role_from_char(char c) {
    switch (c) {
        case 'L': return Role::Left;
        case 'T': return Role::Top;
        case 'R': return Role::Right;
        default: return std::nullopt;
    }
}

/// A linear order on the vertices; seq[p] = vertex placed at position p.
struct Ordering {
    std::vector<int> seq;

    bool is_permutation_of(int n) const {
        if (static_cast<int>(seq.size()) != n) return false;
        std::vector<bool> seen(n, false);
        for (int v : seq) {
            if (v < 0 || v >= n || seen[v]) return false;
            seen[v] = true;
        }
        return true;
    }

    /// positions[v] = position of vertex v.
    std::vector<int> positions() const {
        std::vector<int> pos(seq.size());
        for (size_t p = 0; p < seq.size(); ++p) pos[seq[p]] = static_cast<int>(p);
        return pos;
    }

    bool operator==(const Ordering&) const = default;
};

/// Partial map from covered pairs to roles. Pairs lying in no common edge
/// are left unassigned.
using RoleAssignment = std::map<PairKey, Role>;

/// Two incident edges force different roles on `pair`.
struct RoleConflict {
    PairKey pair;
    Role first_role;
    Role second_role;
};

/// An ordering together with the role assignment witnessing that every edge
/// reads (Left, Top, Right) along the order.
struct VanishingCertificate {
    Ordering ordering;
    RoleAssignment roles;
};

/// The roles forced on every covered pair by the fixed ordering, or the
/// lexicographically least conflicting pair if two edges disagree.
inline std::variant<RoleAssignment, RoleConflict> roles_under_ordering(const Hypergraph3& h,
                                                                       const Ordering& ord) {
    if (!ord.is_permutation_of(h.n)) throw Error("ordering is not a permutation of 0..n-1");
    auto pos = ord.positions();
    RoleAssignment roles;
    std::optional<RoleConflict> conflict;
    auto force = [&](int u, int v, Role r) {
        PairKey key = pair_key(u, v);
        auto [it, inserted] = roles.emplace(key, r);
        if (!inserted && it->second != r) {
            RoleConflict c{key, it->second, r};
            if (!conflict || c.pair < conflict->pair) conflict = c;
        }
    };
    for (const Triple& t : h.edges) {
        // Edge vertices in order of position.
        int a = t[0], b = t[1], c = t[2];
        if (pos[a] > pos[b]) std::swap(a, b);
        if (pos[b] > pos[c]) std::swap(b, c);
        if (pos[a] > pos[b]) std::swap(a, b);
        force(a, b, Role::Left);
        force(a, c, Role::Top);
        force(b, c, Role::Right);
    }
    if (conflict) return *conflict;
    return roles;
}

namespace detail {

// Backtracking over vertex placements. A pair's role is forced as soon as an
// incident edge has two placed vertices (that pair must be Left: the third
// vertex can only come later) or all three (Top and Right follow). Candidates
// are tried in increasing label order, so the first completed ordering is the
// lexicographically least vanishing one.
struct VanishingSearch {
    int n;
    const std::vector<Triple>& edges;
    std::vector<std::vector<int>> incident; // vertex -> edge indices
    std::vector<int> pair_rank_flat;        // (u,v), u<v  ->  rank
    std::vector<std::int8_t> role;          // pair rank -> role or -1
    std::vector<int> pos;                   // vertex -> position or -1
    std::vector<int> order;                 // position -> vertex
    std::vector<int> trail;                 // pair ranks assigned, for undo

    explicit VanishingSearch(const Hypergraph3& h) : n(h.n), edges(h.edges) {
        incident.resize(n);
        for (size_t i = 0; i < edges.size(); ++i)
            for (int v : edges[i]) incident[v].push_back(static_cast<int>(i));
        pair_rank_flat.assign(n * n, -1);
        int r = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pair_rank_flat[u * n + v] = r++;
        role.assign(r, -1);
        pos.assign(n, -1);
        order.assign(n, -1);
    }

    int rank(int u, int v) const {
        return u < v ? pair_rank_flat[u * n + v] : pair_rank_flat[v * n + u];
    }

    bool force(int u, int v, Role want) {
        int pr = rank(u, v);
        if (role[pr] < 0) {
            role[pr] = static_cast<std::int8_t>(want);
            trail.push_back(pr);
            return true;
        }
        return role[pr] == static_cast<std::int8_t>(want);
    }

    bool place(int depth) {
        if (depth == n) return true;
        for (int v = 0; v < n; ++v) {
            if (pos[v] >= 0) continue;
            size_t mark = trail.size();
            pos[v] = depth;
            order[depth] = v;
            bool ok = true;
            for (int ei : incident[v]) {
                const Triple& t = edges[ei];
                int x = t[0] == v ? t[1] : t[0];
                int y = t[2] == v ? t[1] : t[2];
                bool px = pos[x] >= 0, py = pos[y] >= 0;
                if (px && py) {
                    int first = pos[x] < pos[y] ? x : y;
                    int second = pos[x] < pos[y] ? y : x;
                    ok = force(first, v, Role::Top) && force(second, v, Role::Right);
                } else if (px || py) {
                    ok = force(px ? x : y, v, Role::Left);
                }
                if (!ok) break;
            }
            if (ok && place(depth + 1)) return true;
            while (trail.size() > mark) {
                role[trail.back()] = -1;
                trail.pop_back();
            }
            pos[v] = -1;
        }
        return false;
    }
};

} // namespace detail

/// Exhaustive search for a vanishing ordering; returns the certificate for
/// the lexicographically least such ordering, or nullopt. Hypergraphs with no
/// edges are vanishing with the identity ordering and an empty role map.
inline std::optional<VanishingCertificate> find_vanishing_ordering(
    const Hypergraph3& h, const SearchLimits& limits = {}) {
    if (h.n > limits.max_vanishing_n)
        throw BoundError("vanishing-ordering search limited to n <= " +
                         std::to_string(limits.max_vanishing_n));
    detail::VanishingSearch s(h);
    if (!s.place(0)) return std::nullopt;
    VanishingCertificate cert;
    cert.ordering.seq.assign(s.order.begin(), s.order.end());
    for (int u = 0; u < h.n; ++u)
        for (int v = u + 1; v < h.n; ++v) {
            std::int8_t r = s.role[s.rank(u, v)];
            if (r >= 0) cert.roles.emplace(PairKey{u, v}, static_cast<Role>(r));
        }
    return cert;
}

/// Decision-only variant of find_vanishing_ordering.
inline bool is_vanishing(const Hypergraph3& h, const SearchLimits& limits = {}) {
    if (h.n > limits.max_vanishing_n)
        throw BoundError("vanishing-ordering search limited to n <= " +
                         std::to_string(limits.max_vanishing_n));
    detail::VanishingSearch s(h);
    return s.place(0);
}

/// O(m) check: the ordering's forced roles exist and agree with cert.roles on
/// every covered pair. Entries for uncovered pairs are ignored.
inline bool verify_vanishing_certificate(const Hypergraph3& h, const VanishingCertificate& cert) {
    if (!cert.ordering.is_permutation_of(h.n)) return false;
    auto forced = roles_under_ordering(h, cert.ordering);
    if (std::holds_alternative<RoleConflict>(forced)) return false;
    for (const auto& [key, r] : std::get<RoleAssignment>(forced)) {
        auto it = cert.roles.find(key);
        if (it == cert.roles.end() || it->second != r) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Mask kernel for the census: same search on stack arrays, decision only.
// ---------------------------------------------------------------------------

inline bool is_vanishing_mask(std::uint64_t mask, const SmallGeometry& geo) {
    if (!mask) return true;
    const int n = geo.n;
    int edge_rank[64];
    int m = 0;
    for (std::uint64_t w = mask; w;) {
        edge_rank[m++] = std::countr_zero(w);
        w &= w - 1;
    }
    int inc[kMaskMaxN][64];
    int inc_n[kMaskMaxN] = {};
    for (int i = 0; i < m; ++i)
        for (int v : geo.triples[edge_rank[i]]) inc[v][inc_n[v]++] = i;

    std::int8_t role[28];
    for (int i = 0; i < geo.pair_count; ++i) role[i] = -1;
    int pos[kMaskMaxN];
    for (int i = 0; i < n; ++i) pos[i] = -1;
    int trail[3 * 64];
    int trail_n = 0;

    auto force = [&](int u, int v, std::int8_t want) {
        int pr = u < v ? geo.pair_rank[u][v] : geo.pair_rank[v][u];
        if (role[pr] < 0) {
            role[pr] = want;
            trail[trail_n++] = pr;
            return true;
        }
        return role[pr] == want;
    };

    auto place = [&](auto&& self, int depth) -> bool {
        if (depth == n) return true;
        for (int v = 0; v < n; ++v) {
            if (pos[v] >= 0) continue;
            int mark = trail_n;
            pos[v] = depth;
            bool ok = true;
            for (int k = 0; k < inc_n[v] && ok; ++k) {
                const Triple& t = geo.triples[edge_rank[inc[v][k]]];
                int x = t[0] == v ? t[1] : t[0];
                int y = t[2] == v ? t[1] : t[2];
                bool px = pos[x] >= 0, py = pos[y] >= 0;
                if (px && py) {
                    int first = pos[x] < pos[y] ? x : y;
                    int second = pos[x] < pos[y] ? y : x;
                    ok = force(first, v, 1) && force(second, v, 2); // Top, Right
                } else if (px || py) {
                    ok = force(px ? x : y, v, 0); // Left
                }
            }
            if (ok && self(self, depth + 1)) return true;
            while (trail_n > mark) role[trail[--trail_n]] = -1;
            pos[v] = -1;
        }
        return false;
    };
    return place(place, 0);
}

} // namespace uturan
