#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <unordered_set>
#include <vector>

#include "uturan/hypergraph.hpp"
#include "uturan/vanishing.hpp"

namespace uturan {

/// Injective map from pattern vertices to host vertices.
struct VertexMap {
    std::vector<int> map; // map[pattern vertex] = host vertex
};

/// Exhaustive search for an injective vertex map under which every pattern
/// edge lands on a host edge (the host may have extra edges). Returns the
/// first map in the deterministic search order, or nullopt.
inline std::optional<VertexMap> contains_subhypergraph(const Hypergraph3& host,
                                                       const Hypergraph3& pattern,
                                                       const SearchLimits& limits = {}) {
    if (pattern.n > limits.max_subiso_pattern_n || host.n > limits.max_subiso_host_n)
        throw BoundError("subhypergraph search limited to pattern n <= " +
                         std::to_string(limits.max_subiso_pattern_n) + ", host n <= " +
                         std::to_string(limits.max_subiso_host_n));
    if (pattern.n > host.n) return std::nullopt;
    if (pattern.edges.size() > host.edges.size()) return std::nullopt;

    std::unordered_set<std::uint32_t> host_edges;
    for (const Triple& t : host.edges)
        host_edges.insert((std::uint32_t(t[0]) << 16) | (std::uint32_t(t[1]) << 8) |
                          std::uint32_t(t[2]));
    auto is_host_edge = [&](int a, int b, int c) {
        if (a > b) std::swap(a, b);
        if (b > c) std::swap(b, c);
        if (a > b) std::swap(a, b);
        return host_edges.count((std::uint32_t(a) << 16) | (std::uint32_t(b) << 8) |
                                std::uint32_t(c)) > 0;
    };

    // Place covered pattern vertices first, highest degree first; isolated
    // vertices go last and always fit (host has enough vertices).
    auto pdeg = vertex_degrees(pattern);
    std::vector<int> porder(pattern.n);
    std::iota(porder.begin(), porder.end(), 0);
    std::stable_sort(porder.begin(), porder.end(),
                     [&](int a, int b) { return pdeg[a] > pdeg[b]; });
    std::vector<int> depth_of(pattern.n);
    for (int d = 0; d < pattern.n; ++d) depth_of[porder[d]] = d;
    // Pattern edges checked at the depth their last vertex is placed.
    std::vector<std::vector<Triple>> check_at(pattern.n);
    for (const Triple& t : pattern.edges) {
        int d = std::max({depth_of[t[0]], depth_of[t[1]], depth_of[t[2]]});
        check_at[d].push_back(t);
    }

    auto hdeg = vertex_degrees(host);
    std::vector<int> image(pattern.n, -1);
    std::vector<bool> used(host.n, false);

    auto rec = [&](auto&& self, int depth) -> bool {
        if (depth == pattern.n) return true;
        int pv = porder[depth];
        for (int hv = 0; hv < host.n; ++hv) {
            if (used[hv] || hdeg[hv] < pdeg[pv]) continue;
            image[pv] = hv;
            used[hv] = true;
            bool ok = true;
            for (const Triple& t : check_at[depth])
                if (!is_host_edge(image[t[0]], image[t[1]], image[t[2]])) {
                    ok = false;
                    break;
                }
            if (ok && self(self, depth + 1)) return true;
            used[hv] = false;
            image[pv] = -1;
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    return VertexMap{image};
}

/// Checks that `vm` is injective, in range, and maps every pattern edge onto
/// a host edge.
inline bool verify_vertex_map(const Hypergraph3& host, const Hypergraph3& pattern,
                              const VertexMap& vm) {
    if (static_cast<int>(vm.map.size()) != pattern.n) return false;
    std::vector<bool> used(host.n, false);
    for (int hv : vm.map) {
        if (hv < 0 || hv >= host.n || used[hv]) return false;
        used[hv] = true;
    }
    for (const Triple& t : pattern.edges)
        if (!host.has_edge(sorted_triple(vm.map[t[0]], vm.map[t[1]], vm.map[t[2]])))
            return false;
    return true;
}

} // namespace uturan
