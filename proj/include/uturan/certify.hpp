#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uturan/digraph_oracle.hpp"
#include "uturan/hypergraph.hpp"
#include "uturan/vanishing.hpp"

namespace uturan {

/// Spanning edge bipartition: part1 and part2 split the edge set, both parts
/// keep the full vertex set.
struct EdgeBipartition {
    std::vector<Triple> part1;
    std::vector<Triple> part2;
};

/// Shared-pair discipline between the two parts. A pair lying in an edge of
/// each part must be Right in part1 and Left in part2 (Horizontal), or Top in
/// part1 and Left in part2 (Vertical).
enum class BipartitionMode { Horizontal, Vertical };

inline const char* mode_name(BipartitionMode m) {
    return m == BipartitionMode::Horizontal ? "horizontal" : "vertical";
}

/// One ordering that is vanishing for both parts simultaneously, with the
/// shared-pair discipline of `mode`.
struct BipartitionCertificate {
    EdgeBipartition bipartition;
    Ordering ordering;
    RoleAssignment roles1;
    RoleAssignment roles2;
    BipartitionMode mode;
};

struct NonvanishingVerdict {
    bool vanishing = false;
    std::optional<NonvanishingEvidence> refutation;
};

/// Full witness that the uniform Turan density equals 1/27: no vanishing
/// ordering, plus bipartition certificates in both modes.
struct TuranCertificate {
    NonvanishingVerdict nonvanishing;
    BipartitionCertificate horizontal;
    BipartitionCertificate vertical;
};

namespace detail {

inline Role shared_role_part1(BipartitionMode mode) {
    return mode == BipartitionMode::Horizontal ? Role::Right : Role::Top;
}

// Ordering search over a fixed bipartition: one position sequence, one role
// array per part, shared pairs pre-seeded to the mode's discipline so that
// conflicting branches die at the first forcing.
struct BipartitionSearch {
    int n;
    std::vector<Triple> edges;      // all edges
    std::vector<int> part;          // 0 or 1 per edge
    std::vector<std::vector<int>> incident;
    std::vector<int> pair_rank_flat;
    std::vector<std::array<std::int8_t, 2>> role; // per pair: role in part 0 / part 1
    std::vector<int> pos, order;
    std::vector<int> trail; // encoded pair*2 + part

    BipartitionSearch(const Hypergraph3& h, const std::vector<bool>& in_part1,
                      BipartitionMode mode)
        : n(h.n), edges(h.edges) {
        part.resize(edges.size());
        incident.resize(n);
        for (size_t i = 0; i < edges.size(); ++i) {
            part[i] = in_part1[i] ? 0 : 1;
            for (int v : edges[i]) incident[v].push_back(static_cast<int>(i));
        }
        pair_rank_flat.assign(n * n, -1);
        int r = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pair_rank_flat[u * n + v] = r++;
        role.assign(r, {-1, -1});
        pos.assign(n, -1);
        order.assign(n, -1);
        // Pre-seed shared pairs.
        std::vector<std::array<bool, 2>> covered(r, {false, false});
        for (size_t i = 0; i < edges.size(); ++i) {
            const Triple& t = edges[i];
            covered[rank(t[0], t[1])][part[i]] = true;
            covered[rank(t[0], t[2])][part[i]] = true;
            covered[rank(t[1], t[2])][part[i]] = true;
        }
        for (int pr = 0; pr < r; ++pr)
            if (covered[pr][0] && covered[pr][1]) {
                role[pr][0] = static_cast<std::int8_t>(shared_role_part1(mode));
                role[pr][1] = static_cast<std::int8_t>(Role::Left);
            }
    }

    int rank(int u, int v) const {
        return u < v ? pair_rank_flat[u * n + v] : pair_rank_flat[v * n + u];
    }

    bool force(int u, int v, int p, Role want) {
        int pr = rank(u, v);
        if (role[pr][p] < 0) {
            role[pr][p] = static_cast<std::int8_t>(want);
            trail.push_back(pr * 2 + p);
            return true;
        }
        return role[pr][p] == static_cast<std::int8_t>(want);
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
                int p = part[ei];
                int x = t[0] == v ? t[1] : t[0];
                int y = t[2] == v ? t[1] : t[2];
                bool px = pos[x] >= 0, py = pos[y] >= 0;
                if (px && py) {
                    int first = pos[x] < pos[y] ? x : y;
                    int second = pos[x] < pos[y] ? y : x;
                    ok = force(first, v, p, Role::Top) && force(second, v, p, Role::Right);
                } else if (px || py) {
                    ok = force(px ? x : y, v, p, Role::Left);
                }
                if (!ok) break;
            }
            if (ok && place(depth + 1)) return true;
            while (trail.size() > mark) {
                int code = trail.back();
                trail.pop_back();
                role[code / 2][code % 2] = -1;
            }
            pos[v] = -1;
        }
        return false;
    }
};

} // namespace detail

/// Search over edge bipartitions (by increasing |part1|, then lexicographic)
/// and orderings; returns the first certificate in that order, or nullopt.
inline std::optional<BipartitionCertificate> find_bipartition_certificate(
    const Hypergraph3& h, BipartitionMode mode, const SearchLimits& limits = {}) {
    if (h.n > limits.max_certify_n)
        throw BoundError("bipartition search limited to n <= " +
                         std::to_string(limits.max_certify_n));
    const int m = h.edge_count();
    if (m > limits.max_certify_edges)
        throw BoundError("bipartition search limited to " +
                         std::to_string(limits.max_certify_edges) + " edges");

    std::vector<bool> in_part1(m);
    const std::uint32_t end = std::uint32_t{1} << m;
    for (int k = 0; k <= m; ++k) {
        // Gosper's hack over k-subsets of edge indices, ascending.
        std::uint32_t sub = (k == 0) ? 0 : (std::uint32_t{1} << k) - 1;
        while (true) {
            for (int i = 0; i < m; ++i) in_part1[i] = (sub >> i) & 1;
            detail::BipartitionSearch s(h, in_part1, mode);
            if (s.place(0)) {
                BipartitionCertificate cert;
                cert.mode = mode;
                for (int i = 0; i < m; ++i)
                    (in_part1[i] ? cert.bipartition.part1 : cert.bipartition.part2)
                        .push_back(h.edges[i]);
                cert.ordering.seq.assign(s.order.begin(), s.order.end());
                // Export the forced roles on pairs covered by each part.
                Hypergraph3 h1{h.n, cert.bipartition.part1};
                Hypergraph3 h2{h.n, cert.bipartition.part2};
                cert.roles1 = std::get<RoleAssignment>(roles_under_ordering(h1, cert.ordering));
                cert.roles2 = std::get<RoleAssignment>(roles_under_ordering(h2, cert.ordering));
                return cert;
            }
            if (k == 0) break;
            std::uint32_t c = sub & (~sub + 1);
            std::uint32_t r = sub + c;
            if (r >= end) break;
            sub = (((r ^ sub) >> 2) / c) | r;
        }
    }
    return std::nullopt;
}

/// Independent O(m^2) check of every certificate invariant, built on
/// roles_under_ordering only.
inline bool verify_bipartition_certificate(const Hypergraph3& h,
                                           const BipartitionCertificate& cert) {
    // The parts must exactly partition the edge set.
    std::vector<Triple> all = cert.bipartition.part1;
    all.insert(all.end(), cert.bipartition.part2.begin(), cert.bipartition.part2.end());
    for (Triple& t : all) std::sort(t.begin(), t.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
    if (all != h.edges) return false;
    if (!cert.ordering.is_permutation_of(h.n)) return false;

    Hypergraph3 h1, h2;
    try {
        h1 = Hypergraph3::make(h.n, cert.bipartition.part1);
        h2 = Hypergraph3::make(h.n, cert.bipartition.part2);
    } catch (const Error&) {
        return false;
    }
    auto check_part = [&](const Hypergraph3& part, const RoleAssignment& claimed) {
        auto forced = roles_under_ordering(part, cert.ordering);
        if (std::holds_alternative<RoleConflict>(forced)) return false;
        for (const auto& [key, r] : std::get<RoleAssignment>(forced)) {
            auto it = claimed.find(key);
            if (it == claimed.end() || it->second != r) return false;
        }
        return true;
    };
    if (!check_part(h1, cert.roles1) || !check_part(h2, cert.roles2)) return false;

    Role want1 = detail::shared_role_part1(cert.mode);
    for (const Triple& e1 : h1.edges)
        for (const Triple& e2 : h2.edges) {
            std::vector<int> common;
            std::set_intersection(e1.begin(), e1.end(), e2.begin(), e2.end(),
                                  std::back_inserter(common));
            if (common.size() != 2) continue;
            PairKey key{common[0], common[1]};
            auto r1 = cert.roles1.find(key);
            auto r2 = cert.roles2.find(key);
            if (r1 == cert.roles1.end() || r1->second != want1) return false;
            if (r2 == cert.roles2.end() || r2->second != Role::Left) return false;
        }
    return true;
}

/// Outcome of the full 1/27 certification; on failure, `failed_condition`
/// names the first condition that could not be established.
struct CertifyOutcome {
    std::optional<TuranCertificate> certificate;
    std::string failed_condition;
};

inline CertifyOutcome certify_uniform_turan_1_27(const Hypergraph3& h,
                                                 const SearchLimits& limits = {}) {
    if (h.n > limits.max_certify_n)
        throw BoundError("full certification limited to n <= " +
                         std::to_string(limits.max_certify_n) +
                         "; use certificate replay for larger instances");
    if (h.edge_count() > limits.max_certify_edges)
        throw BoundError("full certification limited to " +
                         std::to_string(limits.max_certify_edges) + " edges");
    CertifyOutcome out;
    if (find_vanishing_ordering(h, limits)) {
        out.failed_condition = "a vanishing ordering exists";
        return out;
    }
    OracleResult oracle = digraph_vanishing_oracle(h, limits);
    if (oracle.vanishing)
        throw Error("internal inconsistency: ordering search and digraph oracle disagree");
    auto horizontal = find_bipartition_certificate(h, BipartitionMode::Horizontal, limits);
    if (!horizontal) {
        out.failed_condition = "no horizontal bipartition certificate";
        return out;
    }
    auto vertical = find_bipartition_certificate(h, BipartitionMode::Vertical, limits);
    if (!vertical) {
        out.failed_condition = "no vertical bipartition certificate";
        return out;
    }
    TuranCertificate cert;
    cert.nonvanishing.vanishing = false;
    cert.nonvanishing.refutation = oracle.refutation;
    cert.horizontal = *horizontal;
    cert.vertical = *vertical;
    out.certificate = cert;
    return out;
}

/// Re-verifies the three conditions without relying on any search internals:
/// both bipartition certificates via roles_under_ordering, and non-vanishing
/// either from the polynomial refutation evidence or, when evidence is
/// absent, by a fresh ordering search (refused sizes verify as false).
inline bool verify_turan_certificate(const Hypergraph3& h, const TuranCertificate& cert,
                                     const SearchLimits& limits = {}) {
    if (cert.nonvanishing.vanishing) return false;
    if (cert.horizontal.mode != BipartitionMode::Horizontal ||
        cert.vertical.mode != BipartitionMode::Vertical)
        return false;
    if (!verify_bipartition_certificate(h, cert.horizontal)) return false;
    if (!verify_bipartition_certificate(h, cert.vertical)) return false;
    if (cert.nonvanishing.refutation)
        return validate_nonvanishing_evidence(h, *cert.nonvanishing.refutation);
    if (h.n > limits.max_vanishing_n) return false;
    return !find_vanishing_ordering(h, limits).has_value();
}

} // namespace uturan
