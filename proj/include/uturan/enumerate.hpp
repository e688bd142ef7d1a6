#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

#include "uturan/canonical.hpp"
#include "uturan/hypergraph.hpp"

namespace uturan {

// ---------------------------------------------------------------------------
// Isomorph-free enumeration by canonical augmentation (McKay's construction
// path): a child G+e is accepted iff e lies in the orbit of the canonical
// deletion edge of G+e (the edge mapped to the highest canonical rank), and
// augmentations are tried once per orbit of Aut(G). Each isomorphism class
// is then generated exactly once, with no global seen-set.
//
// The family being enumerated may be restricted by a downward-closed `keep`
// predicate (extending only kept graphs). Children outside the family are
// handed to the boundary callback without acceptance filtering; a boundary
// class can therefore be reported once per kept parent class, and consumers
// deduplicate by canonical form.
// ---------------------------------------------------------------------------

struct AugNode {
    std::uint64_t mask = 0;
    Canon64 canon;
};

class AugmentationEngine {
public:
    using KeepFn = std::function<bool(std::uint64_t)>;
    using NodeFn = std::function<void(std::uint64_t)>;
    using BoundaryFn = std::function<void(std::uint64_t)>;

    AugmentationEngine(int n, int max_edges, KeepFn keep)
        : geo_(small_geometry(n)), max_edges_(max_edges), keep_(std::move(keep)) {}

    const SmallGeometry& geometry() const { return geo_; }

    AugNode root() const { return make_node(0); }

    AugNode make_node(std::uint64_t mask) const { return {mask, canon64(mask, geo_)}; }

    /// Accepted children still inside the family; non-kept children go to
    /// `boundary` (may be null).
    std::vector<AugNode> expand(const AugNode& node, const BoundaryFn& boundary) const {
        std::vector<AugNode> kept_children;
        const int m = std::popcount(node.mask);
        if (m >= max_edges_) return kept_children;

        // Automorphisms of the node: compositions g0^{-1} . g over the
        // canonical labelings.
        const auto& labelings = node.canon.min_labelings;
        std::array<std::int8_t, kMaskMaxN> g0inv{};
        for (int v = 0; v < geo_.n; ++v) g0inv[labelings.front()[v]] = static_cast<std::int8_t>(v);

        // Orbit representatives of absent triples under Aut(node).
        const std::uint64_t full = geo_.triple_count == 64
                                       ? ~std::uint64_t{0}
                                       : (std::uint64_t{1} << geo_.triple_count) - 1;
        std::uint64_t absent = full & ~node.mask;
        std::vector<int> parent(geo_.triple_count);
        for (int i = 0; i < geo_.triple_count; ++i) parent[i] = i;
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        if (labelings.size() > 1) {
            for (const auto& g : labelings) {
                std::array<std::int8_t, kMaskMaxN> aut{};
                for (int v = 0; v < geo_.n; ++v) aut[v] = g0inv[g[v]];
                for (int r = 0; r < geo_.triple_count; ++r) {
                    const Triple& t = geo_.triples[r];
                    int x = aut[t[0]], y = aut[t[1]], z = aut[t[2]];
                    if (x > y) std::swap(x, y);
                    if (y > z) std::swap(y, z);
                    if (x > y) std::swap(x, y);
                    int img = geo_.triple_rank[x][y][z];
                    int a = find(r), b = find(img);
                    if (a != b) parent[std::max(a, b)] = std::min(a, b);
                }
            }
        }

        for (std::uint64_t rest = absent; rest;) {
            int r = std::countr_zero(rest);
            rest &= rest - 1;
            if (find(r) != r) continue; // not the orbit representative
            std::uint64_t child = node.mask | (std::uint64_t{1} << r);
            if (!keep_(child)) {
                if (boundary) boundary(child);
                continue;
            }
            Canon64 canon = canon64(child, geo_);
            int rstar = 63 - std::countl_zero(canon.bits);
            const Triple& t = geo_.triples[r];
            bool accept = false;
            for (const auto& g : canon.min_labelings) {
                int x = g[t[0]], y = g[t[1]], z = g[t[2]];
                if (x > y) std::swap(x, y);
                if (y > z) std::swap(y, z);
                if (x > y) std::swap(x, y);
                if (geo_.triple_rank[x][y][z] == rstar) {
                    accept = true;
                    break;
                }
            }
            if (accept) kept_children.push_back({child, std::move(canon)});
        }
        return kept_children;
    }

    /// Depth-first traversal of the whole subtree under `node`.
    void dfs(const AugNode& node, const NodeFn& on_node, const BoundaryFn& boundary,
             std::uint64_t& node_count) const {
        on_node(node.mask);
        ++node_count;
        for (const AugNode& child : expand(node, boundary))
            dfs(child, on_node, boundary, node_count);
    }

    /// Breadth-first expansion to the given depth (edge count). Nodes at
    /// depth < split_depth are visited; the returned vector holds the depth ==
    /// split_depth frontier, in deterministic order.
    std::vector<AugNode> frontier(int split_depth, const NodeFn& on_node,
                                  const BoundaryFn& boundary, std::uint64_t& node_count) const {
        std::vector<AugNode> level{root()};
        for (int depth = 0; depth < split_depth; ++depth) {
            std::vector<AugNode> next;
            for (const AugNode& node : level) {
                on_node(node.mask);
                ++node_count;
                for (AugNode& child : expand(node, boundary)) next.push_back(std::move(child));
            }
            level = std::move(next);
            if (level.empty()) break;
        }
        return level;
    }

private:
    const SmallGeometry& geo_;
    int max_edges_;
    KeepFn keep_;
};

/// Streams one representative per isomorphism class with at most max_edges
/// edges, in a deterministic depth-first order. `cursor_begin` many top-level
/// subtrees (tasks at split depth 2) are skipped on restart; the callback
/// additionally reports the advancing cursor so callers can checkpoint.
inline void enumerate_nonisomorphic(
    int n, int max_edges, const std::function<void(const Hypergraph3&)>& emit,
    int cursor_begin = 0, std::function<void(int)> on_cursor = {}, int split_depth = 2) {
    if (n > kMaskMaxN) throw BoundError("enumeration limited to n <= 8");
    const auto& geo = small_geometry(n);
    AugmentationEngine engine(n, max_edges, [](std::uint64_t) { return true; });
    std::uint64_t nodes = 0;
    AugmentationEngine::NodeFn emit_mask = [&](std::uint64_t mask) {
        emit(hypergraph_from_mask(mask, geo));
    };
    AugmentationEngine::NodeFn noop = [](std::uint64_t) {};
    // The shallow prefix was already delivered before any restart; a resumed
    // run recomputes it silently and skips completed tasks.
    std::vector<AugNode> tasks =
        engine.frontier(split_depth, cursor_begin == 0 ? emit_mask : noop, nullptr, nodes);
    for (size_t i = static_cast<size_t>(cursor_begin); i < tasks.size(); ++i) {
        engine.dfs(tasks[i], emit_mask, nullptr, nodes);
        if (on_cursor) on_cursor(static_cast<int>(i) + 1);
    }
}

} // namespace uturan
