#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <queue>
#include <vector>

#include "uturan/hypergraph.hpp"
#include "uturan/vanishing.hpp"

namespace uturan {

struct DigraphEdge {
    int from = 0;
    int to = 0;
    int color = 0; // 1..3
    bool operator==(const DigraphEdge&) const = default;
};

/// A simple directed graph in which every hypergraph edge appears as a
/// cyclically directed triangle whose colors read 1,2,3 along the cycle.
/// pair_acyclic[k] tells whether the 2-color subgraph of color pair k
/// (k = 0,1,2 for {1,2},{1,3},{2,3}) is acyclic.
struct DigraphColoring {
    int n = 0;
    std::vector<DigraphEdge> edges;
    std::array<bool, 3> pair_acyclic{false, false, false};
};

inline constexpr std::array<std::pair<int, int>, 3> kColorPairs{
    {{1, 2}, {1, 3}, {2, 3}}};

/// Evidence that no consistent digraph has an acyclic 2-color subgraph.
/// Either the pair constraints are contradictory (conflict_pair set, no
/// digraph exists at all) or the canonical digraph is given together with a
/// directed cycle in each of the three 2-color subgraphs. When the hypergraph
/// is connected through shared pairs, the digraph is unique up to symmetry,
/// so the three cycles refute every consistent coloring.
struct NonvanishingEvidence {
    bool connected = false;
    std::optional<DigraphColoring> digraph;
    std::optional<PairKey> conflict_pair;
    std::array<std::vector<int>, 3> cycles; // vertex sequence per color pair
};

struct OracleResult {
    bool vanishing = false;
    std::optional<DigraphColoring> witness; // when vanishing
    std::optional<int> acyclic_pair;        // index into kColorPairs
    std::optional<NonvanishingEvidence> refutation;
};

namespace detail {

// Pair state: oriented edge (from, to) with a color, or unassigned.
struct PairAssign {
    bool set = false;
    int from = 0, to = 0;
    int color = 0;
};

// The symmetry group of consistent colorings has order 6: color rotations
// keep orientations, color transpositions reverse all orientations (a plain
// orientation swap alone breaks the cyclic 1,2,3 reading).
struct Variant {
    std::array<int, 4> color_map; // 1-based
    bool flip;
};

inline const std::array<Variant, 6>& variants() {
    static const std::array<Variant, 6> v = {{
        {{0, 1, 2, 3}, false}, // identity
        {{0, 2, 3, 1}, false}, // rotation
        {{0, 3, 1, 2}, false}, // rotation
        {{0, 2, 1, 3}, true},  // swap 1,2 + reverse
        {{0, 3, 2, 1}, true},  // swap 1,3 + reverse
        {{0, 1, 3, 2}, true},  // swap 2,3 + reverse
    }};
    return v;
}

inline PairAssign apply_variant(const PairAssign& a, const Variant& g) {
    PairAssign out = a;
    out.color = g.color_map[a.color];
    if (g.flip) std::swap(out.from, out.to);
    return out;
}

// Given one oriented colored pair of a triple, the whole triangle is forced:
// u -> v (c), v -> w (next c), w -> u (next next c).
inline std::array<PairAssign, 3> forced_triangle(const Triple& t, const PairAssign& seed_pair,
                                                 int u, int v) {
    int w = t[0] + t[1] + t[2] - u - v;
    auto next = [](int c) { return c % 3 + 1; };
    PairAssign e1{true, u, v, seed_pair.color};
    PairAssign e2{true, v, w, next(seed_pair.color)};
    PairAssign e3{true, w, u, next(next(seed_pair.color))};
    return {e1, e2, e3};
}

// DFS cycle detection on the subgraph with colors {ca, cb}; returns a
// directed cycle as a vertex sequence, or empty when acyclic.
inline std::vector<int> find_cycle(int n, const std::vector<PairAssign>& assign, int ca, int cb) {
    std::vector<std::vector<int>> adj(n);
    for (const auto& a : assign)
        if (a.set && (a.color == ca || a.color == cb)) adj[a.from].push_back(a.to);
    std::vector<int> state(n, 0); // 0 white, 1 gray, 2 black
    std::vector<int> stack, path;
    for (int s = 0; s < n; ++s) {
        if (state[s]) continue;
        // Iterative DFS with explicit path.
        std::vector<std::pair<int, size_t>> frames{{s, 0}};
        state[s] = 1;
        path = {s};
        while (!frames.empty()) {
            auto& [v, idx] = frames.back();
            if (idx < adj[v].size()) {
                int w = adj[v][idx++];
                if (state[w] == 1) {
                    auto it = std::find(path.begin(), path.end(), w);
                    return std::vector<int>(it, path.end());
                }
                if (state[w] == 0) {
                    state[w] = 1;
                    frames.push_back({w, 0});
                    path.push_back(w);
                }
            } else {
                state[v] = 2;
                frames.pop_back();
                path.pop_back();
            }
        }
    }
    return {};
}

} // namespace detail

/// Decides the existence of a vanishing ordering through the digraph
/// characterization: the hypergraph is vanishing iff some consistent colored
/// orientation has an acyclic 2-color subgraph. Fixing one pair of a seed
/// edge forces every edge reachable through shared pairs, so the search
/// branches only over independent components (6 symmetry choices each) and
/// the three color pairs.
inline OracleResult digraph_vanishing_oracle(const Hypergraph3& h,
                                             const SearchLimits& limits = {}) {
    OracleResult result;
    const int m = h.edge_count();
    if (m == 0) {
        result.vanishing = true;
        DigraphColoring g;
        g.n = h.n;
        g.pair_acyclic = {true, true, true};
        result.witness = g;
        result.acyclic_pair = 0;
        return result;
    }

    // Pair ranks and incidences.
    const int n = h.n;
    std::vector<int> pair_rank(n * n, -1);
    int npairs = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pair_rank[u * n + v] = npairs++;
    auto rank = [&](int u, int v) {
        return u < v ? pair_rank[u * n + v] : pair_rank[v * n + u];
    };
    std::vector<std::vector<int>> pair_edges(npairs); // pair -> incident edge indices
    for (int i = 0; i < m; ++i) {
        const Triple& t = h.edges[i];
        pair_edges[rank(t[0], t[1])].push_back(i);
        pair_edges[rank(t[0], t[2])].push_back(i);
        pair_edges[rank(t[1], t[2])].push_back(i);
    }

    // Components of edges linked by shared pairs; canonical assignment per
    // component by propagation from its lowest edge.
    std::vector<detail::PairAssign> assign(npairs);
    std::vector<int> comp(m, -1);
    std::vector<std::vector<int>> comp_pairs; // pair ranks owned by each component
    int ncomp = 0;
    for (int seed = 0; seed < m; ++seed) {
        if (comp[seed] >= 0) continue;
        int ci = ncomp++;
        comp_pairs.emplace_back();
        const Triple& st = h.edges[seed];
        detail::PairAssign sa{true, st[0], st[1], 1};
        std::queue<int> queue;
        auto settle = [&](const Triple& t, const detail::PairAssign& known, int u,
                          int v) -> bool {
            auto tri = detail::forced_triangle(t, known, u, v);
            for (const auto& pa : tri) {
                int pr = rank(pa.from, pa.to);
                if (!assign[pr].set) {
                    assign[pr] = pa;
                    comp_pairs[ci].push_back(pr);
                    for (int e2 : pair_edges[pr])
                        if (comp[e2] < 0) {
                            comp[e2] = ci;
                            queue.push(e2);
                        }
                } else if (assign[pr].from != pa.from || assign[pr].to != pa.to ||
                           assign[pr].color != pa.color) {
                    result.vanishing = false;
                    NonvanishingEvidence ev;
                    ev.conflict_pair = pair_key(pa.from, pa.to);
                    result.refutation = ev;
                    return false;
                }
            }
            return true;
        };
        comp[seed] = ci;
        queue.push(seed);
        if (!settle(st, sa, st[0], st[1])) return result;
        while (!queue.empty()) {
            int e = queue.front();
            queue.pop();
            const Triple& t = h.edges[e];
            // Anchor the triangle on any already-assigned pair of this edge.
            std::array<std::pair<int, int>, 3> prs{
                {{t[0], t[1]}, {t[0], t[2]}, {t[1], t[2]}}};
            for (auto [u, v] : prs) {
                int pr = rank(u, v);
                if (assign[pr].set) {
                    if (!settle(t, assign[pr], assign[pr].from, assign[pr].to)) return result;
                    break;
                }
            }
        }
    }

    long branches = 1;
    for (int i = 1; i < ncomp; ++i) {
        branches *= 6;
        if (branches > limits.max_digraph_branches)
            throw BoundError("digraph oracle: too many independent components (" +
                             std::to_string(ncomp) + ")");
    }

    // Enumerate per-component symmetry variants (component 0 fixed) and test
    // the three color pairs for acyclicity.
    std::vector<int> choice(ncomp, 0);
    std::vector<detail::PairAssign> current = assign;
    while (true) {
        for (int c = 1; c < ncomp; ++c)
            for (int pr : comp_pairs[c])
                current[pr] = detail::apply_variant(assign[pr], detail::variants()[choice[c]]);
        for (int k = 0; k < 3; ++k) {
            auto [ca, cb] = kColorPairs[k];
            if (detail::find_cycle(n, current, ca, cb).empty()) {
                result.vanishing = true;
                DigraphColoring g;
                g.n = n;
                for (const auto& a : current)
                    if (a.set) g.edges.push_back({a.from, a.to, a.color});
                for (int j = 0; j < 3; ++j)
                    g.pair_acyclic[j] =
                        detail::find_cycle(n, current, kColorPairs[j].first, kColorPairs[j].second)
                            .empty();
                result.witness = g;
                result.acyclic_pair = k;
                return result;
            }
        }
        int c = ncomp - 1;
        while (c >= 1 && choice[c] == 5) choice[c--] = 0;
        if (c < 1) break;
        ++choice[c];
    }

    // Every variant is cyclic in all three pairs; report the canonical one.
    result.vanishing = false;
    NonvanishingEvidence ev;
    ev.connected = (ncomp == 1);
    DigraphColoring g;
    g.n = n;
    for (const auto& a : assign)
        if (a.set) g.edges.push_back({a.from, a.to, a.color});
    g.pair_acyclic = {false, false, false};
    ev.digraph = g;
    for (int k = 0; k < 3; ++k)
        ev.cycles[k] = detail::find_cycle(n, assign, kColorPairs[k].first, kColorPairs[k].second);
    result.refutation = ev;
    return result;
}

/// Polynomial validation of a non-vanishing refutation, independent of any
/// ordering search. Conflict evidence is replayed by re-running the forced
/// propagation. Cycle evidence is accepted only for hypergraphs connected
/// through shared pairs: there the consistent digraph is unique up to the
/// 6-element symmetry, which permutes color pairs and preserves cycles, so
/// three per-pair cycles in the given digraph refute every coloring.
inline bool validate_nonvanishing_evidence(const Hypergraph3& h, const NonvanishingEvidence& ev) {
    if (h.edges.empty()) return false; // edgeless graphs are vanishing
    if (ev.conflict_pair) {
        OracleResult r = digraph_vanishing_oracle(h);
        return !r.vanishing && r.refutation && r.refutation->conflict_pair.has_value();
    }
    if (!ev.digraph) return false;

    // Edge map of the claimed digraph.
    const int n = h.n;
    if (ev.digraph->n != n) return false;
    std::vector<detail::PairAssign> assign(n * n);
    auto idx = [&](int u, int v) { return std::min(u, v) * n + std::max(u, v); };
    size_t covered = 0;
    for (const auto& e : ev.digraph->edges) {
        if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n || e.from == e.to) return false;
        if (e.color < 1 || e.color > 3) return false;
        if (assign[idx(e.from, e.to)].set) return false; // not simple
        assign[idx(e.from, e.to)] = {true, e.from, e.to, e.color};
        ++covered;
    }
    // Exactly the covered pairs, each hyperedge a cyclic triangle colored
    // 1,2,3 along its direction.
    std::vector<bool> pair_used(n * n, false);
    size_t distinct_pairs = 0;
    auto next = [](int c) { return c % 3 + 1; };
    for (const Triple& t : h.edges) {
        for (auto [u, v] : std::array<std::pair<int, int>, 3>{
                 {{t[0], t[1]}, {t[0], t[2]}, {t[1], t[2]}}}) {
            if (!assign[idx(u, v)].set) return false;
            if (!pair_used[idx(u, v)]) {
                pair_used[idx(u, v)] = true;
                ++distinct_pairs;
            }
        }
        const auto& ab = assign[idx(t[0], t[1])];
        auto tri = detail::forced_triangle(t, ab, ab.from, ab.to);
        for (const auto& want : tri) {
            const auto& got = assign[idx(want.from, want.to)];
            if (!got.set || got.from != want.from || got.to != want.to ||
                got.color != want.color)
                return false;
        }
    }
    if (distinct_pairs != covered) return false; // extra digraph edges

    // Connectivity of hyperedges through shared pairs.
    const int m = h.edge_count();
    std::vector<std::vector<int>> pair_edges(n * n);
    for (int i = 0; i < m; ++i) {
        const Triple& t = h.edges[i];
        pair_edges[idx(t[0], t[1])].push_back(i);
        pair_edges[idx(t[0], t[2])].push_back(i);
        pair_edges[idx(t[1], t[2])].push_back(i);
    }
    std::vector<bool> seen(m, false);
    std::queue<int> queue;
    queue.push(0);
    seen[0] = true;
    int reached = 1;
    while (!queue.empty()) {
        int e = queue.front();
        queue.pop();
        const Triple& t = h.edges[e];
        for (auto [u, v] : std::array<std::pair<int, int>, 3>{
                 {{t[0], t[1]}, {t[0], t[2]}, {t[1], t[2]}}})
            for (int e2 : pair_edges[idx(u, v)])
                if (!seen[e2]) {
                    seen[e2] = true;
                    ++reached;
                    queue.push(e2);
                }
    }
    if (reached != m || !ev.connected) return false;

    // Each claimed cycle must be a genuine directed cycle in its 2-color
    // subgraph.
    for (int k = 0; k < 3; ++k) {
        const auto& cyc = ev.cycles[k];
        if (cyc.size() < 2) return false;
        auto [ca, cb] = kColorPairs[k];
        for (size_t i = 0; i < cyc.size(); ++i) {
            int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
            if (u < 0 || u >= n || v < 0 || v >= n || u == v) return false;
            const auto& a = assign[idx(u, v)];
            if (!a.set || a.from != u || a.to != v) return false;
            if (a.color != ca && a.color != cb) return false;
        }
    }
    return true;
}

} // namespace uturan
