#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "uturan/format.hpp"
#include "uturan/hypergraph.hpp"
#include "uturan/limits.hpp"
#include "uturan/rational.hpp"

namespace uturan {

/// A hypergraph whose vertex set is split into parts V_ij (one per index
/// pair 1 <= i < j <= n, stored 0-based) such that every edge takes one
/// vertex from each of V_ij, V_ik, V_jk for some triad i < j < k. Vertices
/// are addressed as (part pair, index within part).
struct PartitionedHypergraph {
    struct Edge {
        int i, j, k; // triad indices, i < j < k
        int u, v, w; // u in V_ij, v in V_ik, w in V_jk
        auto operator<=>(const Edge&) const = default;
    };

    int n = 0;
    std::vector<int> part_sizes; // by pair rank
    std::vector<Edge> edges;     // sorted, unique

    static int pair_rank_of(int n, int a, int b) {
        if (a > b) std::swap(a, b);
        return a * n - a * (a + 1) / 2 + (b - a - 1);
    }
    int pair_rank(int a, int b) const { return pair_rank_of(n, a, b); }
    int part_size(int a, int b) const { return part_sizes[pair_rank(a, b)]; }

    static PartitionedHypergraph make(int n, std::vector<int> sizes, std::vector<Edge> raw) {
        if (n < 0) throw Error("index count must be non-negative");
        const int npairs = n * (n - 1) / 2;
        if (static_cast<int>(sizes.size()) != npairs)
            throw Error("expected " + std::to_string(npairs) + " part sizes");
        for (int s : sizes)
            if (s < 0) throw Error("negative part size");
        PartitionedHypergraph ph{n, std::move(sizes), {}};
        for (const Edge& e : raw) {
            if (!(0 <= e.i && e.i < e.j && e.j < e.k && e.k < n))
                throw Error("edge indices must satisfy 0 <= i < j < k < n");
            if (e.u < 0 || e.u >= ph.part_size(e.i, e.j) || e.v < 0 ||
                e.v >= ph.part_size(e.i, e.k) || e.w < 0 || e.w >= ph.part_size(e.j, e.k))
                throw Error("edge vertex index outside its part");
        }
        ph.edges = std::move(raw);
        std::sort(ph.edges.begin(), ph.edges.end());
        if (std::adjacent_find(ph.edges.begin(), ph.edges.end()) != ph.edges.end())
            throw Error("duplicate partitioned edge");
        return ph;
    }
};

/// Exact triad densities: edges in the triad over the product of its three
/// part sizes. Triads with an empty part get density 0 and are flagged.
struct TriadStats {
    struct Entry {
        int i, j, k;
        long edge_count;
        Rational density;
        bool degenerate; // some part empty
    };
    std::vector<Entry> triads;
    Rational minimum{0};
    bool has_triads = false;
};

inline TriadStats triad_stats(const PartitionedHypergraph& ph) {
    std::map<std::tuple<int, int, int>, long> counts;
    for (const auto& e : ph.edges) counts[{e.i, e.j, e.k}]++;
    TriadStats stats;
    for (int i = 0; i < ph.n; ++i)
        for (int j = i + 1; j < ph.n; ++j)
            for (int k = j + 1; k < ph.n; ++k) {
                long cnt = 0;
                if (auto it = counts.find({i, j, k}); it != counts.end()) cnt = it->second;
                long prod = static_cast<long>(ph.part_size(i, j)) * ph.part_size(i, k) *
                            ph.part_size(j, k);
                TriadStats::Entry e{i, j, k, cnt, Rational(0), prod == 0};
                if (prod != 0) e.density = Rational(BigInt(cnt), BigInt(prod));
                if (!stats.has_triads || e.density < stats.minimum) stats.minimum = e.density;
                stats.has_triads = true;
                stats.triads.push_back(std::move(e));
            }
    return stats;
}

/// A vertex of a partitioned hypergraph: part pair (a, b) plus the index
/// within that part.
struct PartVertex {
    int a, b;
    int index;
};

/// Normalized degree of v inside the (i,j,k)-triad: the number of triad
/// edges containing v over the product of the two opposite part sizes.
inline Rational part_vertex_degree(const PartitionedHypergraph& ph, int i, int j, int k,
                                   const PartVertex& v) {
    if (!(i < j && j < k)) throw Error("triad indices must be increasing");
    if (v.index < 0 || v.index >= ph.part_size(v.a, v.b))
        throw Error("vertex index outside its part");
    int lo = std::min(v.a, v.b), hi = std::max(v.a, v.b);
    int oa, ob; // opposite part pairs
    if (lo == i && hi == j) { oa = ph.pair_rank(i, k); ob = ph.pair_rank(j, k); }
    else if (lo == i && hi == k) { oa = ph.pair_rank(i, j); ob = ph.pair_rank(j, k); }
    else if (lo == j && hi == k) { oa = ph.pair_rank(i, j); ob = ph.pair_rank(i, k); }
    else throw Error("vertex is not in a part of this triad");
    long denom = static_cast<long>(ph.part_sizes[oa]) * ph.part_sizes[ob];
    if (denom == 0) throw Error("opposite part is empty");
    long cnt = 0;
    for (const auto& e : ph.edges) {
        if (e.i != i || e.j != j || e.k != k) continue;
        int val = (lo == i && hi == j) ? e.u : (lo == i && hi == k) ? e.v : e.w;
        if (val == v.index) ++cnt;
    }
    return Rational(BigInt(cnt), BigInt(denom));
}

/// Normalized codegree of two triad vertices in distinct parts: common triad
/// edges over the third part's size.
inline Rational pair_codegree(const PartitionedHypergraph& ph, int i, int j, int k,
                              const PartVertex& x, const PartVertex& y) {
    if (!(i < j && j < k)) throw Error("triad indices must be increasing");
    if (x.index < 0 || x.index >= ph.part_size(x.a, x.b) || y.index < 0 ||
        y.index >= ph.part_size(y.a, y.b))
        throw Error("vertex index outside its part");
    auto part_id = [&](const PartVertex& v) -> int {
        int lo = std::min(v.a, v.b), hi = std::max(v.a, v.b);
        if (lo == i && hi == j) return 0;
        if (lo == i && hi == k) return 1;
        if (lo == j && hi == k) return 2;
        throw Error("vertex is not in a part of this triad");
    };
    int px = part_id(x), py = part_id(y);
    if (px == py) throw Error("vertices are in the same part");
    int third = 3 - px - py;
    int third_size = third == 0   ? ph.part_size(i, j)
                     : third == 1 ? ph.part_size(i, k)
                                  : ph.part_size(j, k);
    if (third_size == 0) throw Error("third part is empty");
    long cnt = 0;
    for (const auto& e : ph.edges) {
        if (e.i != i || e.j != j || e.k != k) continue;
        std::array<int, 3> vals{e.u, e.v, e.w};
        if (vals[px] == x.index && vals[py] == y.index) ++cnt;
    }
    return Rational(BigInt(cnt), BigInt(third_size));
}

/// Same vertices and edges, parts re-indexed by V'_ij = V_(n-1-j)(n-1-i)
/// (0-based). An involution.
inline PartitionedHypergraph reverse_partitioned(const PartitionedHypergraph& ph) {
    const int n = ph.n;
    std::vector<int> sizes(ph.part_sizes.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            sizes[PartitionedHypergraph::pair_rank_of(n, a, b)] =
                ph.part_sizes[PartitionedHypergraph::pair_rank_of(n, n - 1 - b, n - 1 - a)];
    std::vector<PartitionedHypergraph::Edge> edges;
    for (const auto& e : ph.edges) {
        // Triad (i,j,k) maps to (n-1-k, n-1-j, n-1-i); the V_jk vertex
        // becomes the new left part's vertex and V_ij the new right one.
        PartitionedHypergraph::Edge r;
        r.i = n - 1 - e.k;
        r.j = n - 1 - e.j;
        r.k = n - 1 - e.i;
        r.u = e.w;
        r.v = e.v;
        r.w = e.u;
        edges.push_back(r);
    }
    return PartitionedHypergraph::make(n, std::move(sizes), std::move(edges));
}

/// Witness for an embedding of a labeled hypergraph into a partitioned one:
/// the chosen distinct indices per vertex, and the part vertex per pair.
struct PartitionedEmbedding {
    std::vector<int> index_map;        // H0 vertex -> index in [0, N)
    std::map<PairKey, int> pair_vertex; // H0 pair -> vertex inside its part
};

/// Exhaustive search over index injections and per-pair vertex choices such
/// that every H0 edge lands on an edge of ph. Every pair of chosen indices
/// must have a non-empty part.
inline std::optional<PartitionedEmbedding> embed_into_partitioned(
    const Hypergraph3& h0, const PartitionedHypergraph& ph, const SearchLimits& limits = {}) {
    if (h0.n > 7 || ph.n > 10)
        throw BoundError("partitioned embedding search limited to pattern n <= 7, host n <= 10");
    for (int s : ph.part_sizes)
        if (s > 8) throw BoundError("partitioned embedding search limited to part sizes <= 8");
    (void)limits;
    if (h0.n == 0) return PartitionedEmbedding{};
    if (h0.n > ph.n) return std::nullopt;

    // Triad edge lists.
    std::map<std::tuple<int, int, int>, std::vector<const PartitionedHypergraph::Edge*>> triads;
    for (const auto& e : ph.edges) triads[{e.i, e.j, e.k}].push_back(&e);

    std::vector<int> idx(h0.n, -1);
    std::vector<bool> used(ph.n, false);
    std::optional<PartitionedEmbedding> result;

    // Pair variables are assigned edge by edge once all indices are chosen.
    auto assign_pairs = [&](auto&& self, std::map<PairKey, int>& chosen, size_t ei) -> bool {
        if (ei == h0.edges.size()) return true;
        const Triple& t = h0.edges[ei];
        std::array<int, 3> tri{idx[t[0]], idx[t[1]], idx[t[2]]};
        // Sort triad indices; remember which H0 pair maps to which slot.
        std::array<int, 3> ord{0, 1, 2};
        std::sort(ord.begin(), ord.end(), [&](int a, int b) { return tri[a] < tri[b]; });
        int ti = tri[ord[0]], tj = tri[ord[1]], tk = tri[ord[2]];
        // Slot 0 = V_(ti,tj), 1 = V_(ti,tk), 2 = V_(tj,tk); the pair feeding a
        // slot joins the two H0 vertices whose indices sort into it.
        std::array<int, 3> vert{t[ord[0]], t[ord[1]], t[ord[2]]};
        std::array<PairKey, 3> slot_pair{pair_key(vert[0], vert[1]), pair_key(vert[0], vert[2]),
                                         pair_key(vert[1], vert[2])};
        auto it = triads.find({ti, tj, tk});
        if (it == triads.end()) return false;
        for (const auto* e : it->second) {
            std::array<int, 3> want{e->u, e->v, e->w};
            std::array<std::pair<PairKey, int>, 3> touched;
            int ntouched = 0;
            bool fits = true;
            for (int s = 0; s < 3 && fits; ++s) {
                auto found = chosen.find(slot_pair[s]);
                if (found == chosen.end()) {
                    chosen.emplace(slot_pair[s], want[s]);
                    touched[ntouched++] = {slot_pair[s], want[s]};
                } else if (found->second != want[s]) {
                    fits = false;
                }
            }
            if (fits && self(self, chosen, ei + 1)) return true;
            for (int s = 0; s < ntouched; ++s) chosen.erase(touched[s].first);
        }
        return false;
    };

    auto feasible_partial = [&](int v) {
        // Every chosen index pair must have a non-empty part.
        for (int u = 0; u < h0.n; ++u)
            if (u != v && idx[u] >= 0 && ph.part_size(std::min(idx[u], idx[v]),
                                                      std::max(idx[u], idx[v])) == 0)
                return false;
        return true;
    };

    auto place = [&](auto&& self, int v) -> bool {
        if (v == h0.n) {
            std::map<PairKey, int> chosen;
            if (!assign_pairs(assign_pairs, chosen, 0)) return false;
            // Fill uncovered pairs with the first vertex of their part.
            PartitionedEmbedding emb;
            emb.index_map = idx;
            for (int a = 0; a < h0.n; ++a)
                for (int b = a + 1; b < h0.n; ++b) {
                    PairKey key{a, b};
                    if (auto it = chosen.find(key); it != chosen.end())
                        emb.pair_vertex.emplace(key, it->second);
                    else
                        emb.pair_vertex.emplace(key, 0);
                }
            result = std::move(emb);
            return true;
        }
        for (int cand = 0; cand < ph.n; ++cand) {
            if (used[cand]) continue;
            idx[v] = cand;
            used[cand] = true;
            if (feasible_partial(v) && self(self, v + 1)) return true;
            used[cand] = false;
            idx[v] = -1;
        }
        return false;
    };

    if (place(place, 0)) return result;
    return std::nullopt;
}

// --- text format -------------------------------------------------------------

/// Format: header "P n"; then for each i = 0..n-2 a line with the sizes of
/// V_ij for j = i+1..n-1; then one line per edge: "i j u  i k v  j k w".
inline std::string serialize_partitioned(const PartitionedHypergraph& ph) {
    std::ostringstream os;
    os << "P " << ph.n;
    for (int i = 0; i + 1 < ph.n; ++i) {
        os << '\n';
        for (int j = i + 1; j < ph.n; ++j) {
            if (j > i + 1) os << ' ';
            os << ph.part_size(i, j);
        }
    }
    for (const auto& e : ph.edges)
        os << '\n'
           << e.i << ' ' << e.j << ' ' << e.u << "  " << e.i << ' ' << e.k << ' ' << e.v
           << "  " << e.j << ' ' << e.k << ' ' << e.w;
    return os.str();
}

inline PartitionedHypergraph parse_partitioned(std::string_view text) {
    auto lines = detail::content_lines(text);
    if (lines.empty()) throw ParseError(1, "missing header line \"P n\"");
    auto toks = detail::split_ws(lines[0].second);
    if (toks.size() != 2 || toks[0] != "P")
        throw ParseError(lines[0].first, "malformed header, expected \"P n\"");
    int n = detail::parse_int(toks[1], lines[0].first);
    if (n < 0) throw ParseError(lines[0].first, "negative index count");
    size_t li = 1;
    std::vector<int> sizes(n * (n - 1) / 2, 0);
    for (int i = 0; i + 1 < n; ++i, ++li) {
        if (li >= lines.size())
            throw ParseError(lines.back().first, "missing part-size rows");
        auto row = detail::split_ws(lines[li].second);
        if (static_cast<int>(row.size()) != n - 1 - i)
            throw ParseError(lines[li].first, "expected " + std::to_string(n - 1 - i) +
                                                  " part sizes in this row");
        for (int j = i + 1; j < n; ++j)
            sizes[PartitionedHypergraph::pair_rank_of(n, i, j)] =
                detail::parse_int(row[j - i - 1], lines[li].first);
    }
    std::vector<PartitionedHypergraph::Edge> edges;
    for (; li < lines.size(); ++li) {
        auto parts = detail::split_ws(lines[li].second);
        if (parts.size() != 9)
            throw ParseError(lines[li].first, "expected 9 numbers on an edge line");
        std::array<int, 9> v{};
        for (int t = 0; t < 9; ++t) v[t] = detail::parse_int(parts[t], lines[li].first);
        if (v[0] != v[3] || v[1] != v[6] || v[4] != v[7])
            throw ParseError(lines[li].first, "edge part pairs do not form a triad");
        edges.push_back({v[0], v[1], v[4], v[2], v[5], v[8]});
    }
    try {
        return PartitionedHypergraph::make(n, std::move(sizes), std::move(edges));
    } catch (const Error& e) {
        throw ParseError(static_cast<int>(lines.empty() ? 1 : lines.back().first), e.what());
    }
}

} // namespace uturan
