#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "uturan/hypergraph.hpp"
#include "uturan/rational.hpp"
#include "uturan/vanishing.hpp"

namespace uturan {

/// A color set with the ordered (left, top, right) color triples that admit
/// an edge. The single-triple palette over {A,B,C} is the vanishing pattern;
/// the two-color palettes below give the 4/27 constructions.
struct Palette {
    std::vector<std::string> colors;
    std::vector<std::array<int, 3>> allowed; // indices into colors: (l, t, r)

    int color_index(const std::string& name) const {
        for (size_t i = 0; i < colors.size(); ++i)
            if (colors[i] == name) return static_cast<int>(i);
        return -1;
    }

    void validate() const {
        if (colors.empty()) throw Error("palette has no colors");
        for (const auto& t : allowed)
            for (int c : t)
                if (c < 0 || c >= static_cast<int>(colors.size()))
                    throw Error("palette triple references an unknown color");
    }
};

/// Exact probability per color; probabilities are non-negative and sum to 1.
using ColorDistribution = std::map<std::string, Rational>;

inline void validate_distribution(const Palette& p, const ColorDistribution& dist) {
    if (dist.size() != p.colors.size())
        throw Error("distribution does not cover exactly the palette colors");
    Rational sum(0);
    for (const auto& c : p.colors) {
        auto it = dist.find(c);
        if (it == dist.end())
            throw Error("distribution missing color '" + c + "'");
        if (it->second < Rational(0)) throw Error("negative probability for '" + c + "'");
        sum += it->second;
    }
    if (sum != Rational(1)) throw Error("probabilities do not sum to 1");
}

/// An ordering plus pair coloring witnessing that every edge's (left, top,
/// right) colors form an allowed triple. Pairs covered by no edge stay
/// uncolored.
struct PaletteEmbedding {
    Ordering ordering;
    std::map<PairKey, int> coloring; // pair -> color index
};

/// The limiting edge density of the random palette construction: the
/// probability that an ordered triple of independently colored pairs forms an
/// allowed (left, top, right) combination. Exact rational arithmetic.
inline Rational palette_density(const Palette& p, const ColorDistribution& dist) {
    validate_distribution(p, dist);
    Rational total(0);
    for (const auto& t : p.allowed)
        total += dist.at(p.colors[t[0]]) * dist.at(p.colors[t[1]]) * dist.at(p.colors[t[2]]);
    return total;
}

/// Exhaustive backtracking over orderings and lazy pair colorings; a pair is
/// colored only once an incident edge is fully placed. Deterministic: vertex
/// candidates ascending, allowed triples in declaration order.
inline std::optional<PaletteEmbedding> find_palette_embedding(const Hypergraph3& h,
                                                              const Palette& p,
                                                              const SearchLimits& limits = {}) {
    p.validate();
    if (h.n > limits.max_palette_n)
        throw BoundError("palette embedding search limited to n <= " +
                         std::to_string(limits.max_palette_n));
    if (static_cast<int>(p.colors.size()) > limits.max_palette_colors)
        throw BoundError("palette embedding search limited to " +
                         std::to_string(limits.max_palette_colors) + " colors");
    const int n = h.n;
    if (p.allowed.empty() && !h.edges.empty()) return std::nullopt;

    std::uint32_t left_colors = 0;
    for (const auto& t : p.allowed) left_colors |= 1u << t[0];

    std::vector<std::vector<int>> incident(n);
    for (size_t i = 0; i < h.edges.size(); ++i)
        for (int v : h.edges[i]) incident[v].push_back(static_cast<int>(i));
    std::vector<int> pair_rank_flat(n * n, -1);
    int npairs = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pair_rank_flat[u * n + v] = npairs++;
    auto rank = [&](int u, int v) {
        return u < v ? pair_rank_flat[u * n + v] : pair_rank_flat[v * n + u];
    };

    std::vector<int> pos(n, -1), order(n, -1);
    std::vector<int> color(npairs, -1);

    // Pair ranks of (left, top, right) for a fully placed edge.
    auto edge_pairs = [&](const Triple& t) {
        int a = t[0], b = t[1], c = t[2];
        if (pos[a] > pos[b]) std::swap(a, b);
        if (pos[b] > pos[c]) std::swap(b, c);
        if (pos[a] > pos[b]) std::swap(a, b);
        return std::array<int, 3>{rank(a, b), rank(a, c), rank(b, c)};
    };

    auto place = [&](auto&& self, int depth) -> bool {
        if (depth == n) return true;
        for (int v = 0; v < n; ++v) {
            if (pos[v] >= 0) continue;
            pos[v] = depth;
            order[depth] = v;
            bool ok = true;
            std::vector<int> completed;
            for (int ei : incident[v]) {
                const Triple& t = h.edges[ei];
                int x = t[0] == v ? t[1] : t[0];
                int y = t[2] == v ? t[1] : t[2];
                bool px = pos[x] >= 0, py = pos[y] >= 0;
                if (px && py) {
                    completed.push_back(ei);
                } else if (px || py) {
                    // (placed, v) is this edge's left pair; a committed color
                    // must be usable as a left color.
                    int pr = rank(px ? x : y, v);
                    if (color[pr] >= 0 && !(left_colors & (1u << color[pr]))) {
                        ok = false;
                        break;
                    }
                }
            }
            if (ok) {
                // Branch over allowed triples for each edge completed by v.
                auto assign = [&](auto&& self2, size_t i) -> bool {
                    if (i == completed.size()) return self(self, depth + 1);
                    auto prs = edge_pairs(h.edges[completed[i]]);
                    for (const auto& tri : p.allowed) {
                        std::array<int, 3> touched{-1, -1, -1};
                        bool fits = true;
                        for (int k = 0; k < 3 && fits; ++k) {
                            if (color[prs[k]] < 0) {
                                color[prs[k]] = tri[k];
                                touched[k] = prs[k];
                            } else if (color[prs[k]] != tri[k]) {
                                fits = false;
                            }
                        }
                        if (fits && self2(self2, i + 1)) return true;
                        for (int k = 0; k < 3; ++k)
                            if (touched[k] >= 0) color[touched[k]] = -1;
                    }
                    return false;
                };
                if (assign(assign, 0)) return true;
            }
            pos[v] = -1;
        }
        return false;
    };
    if (!place(place, 0)) return std::nullopt;

    PaletteEmbedding emb;
    emb.ordering.seq.assign(order.begin(), order.end());
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (color[rank(u, v)] >= 0) emb.coloring.emplace(PairKey{u, v}, color[rank(u, v)]);
    return emb;
}

/// O(m) check of the embedding invariant: every covered pair carries a valid
/// color and every edge's (left, top, right) colors form an allowed triple.
inline bool verify_palette_embedding(const Hypergraph3& h, const Palette& p,
                                     const PaletteEmbedding& emb) {
    if (!emb.ordering.is_permutation_of(h.n)) return false;
    for (const auto& [key, c] : emb.coloring)
        if (c < 0 || c >= static_cast<int>(p.colors.size())) return false;
    auto pos = emb.ordering.positions();
    for (const Triple& t : h.edges) {
        int a = t[0], b = t[1], c = t[2];
        if (pos[a] > pos[b]) std::swap(a, b);
        if (pos[b] > pos[c]) std::swap(b, c);
        if (pos[a] > pos[b]) std::swap(a, b);
        auto l = emb.coloring.find(pair_key(a, b));
        auto tp = emb.coloring.find(pair_key(a, c));
        auto r = emb.coloring.find(pair_key(b, c));
        if (l == emb.coloring.end() || tp == emb.coloring.end() || r == emb.coloring.end())
            return false;
        std::array<int, 3> got{l->second, tp->second, r->second};
        bool ok = false;
        for (const auto& tri : p.allowed)
            if (tri == got) {
                ok = true;
                break;
            }
        if (!ok) return false;
    }
    return true;
}

struct BuiltinPalette {
    std::string name;
    Palette palette;
    ColorDistribution dist;
};

/// The three palettes in play: the uniform vanishing pattern with limiting
/// density 1/27, and the two red/blue 4/27 patterns (left+right red / top
/// blue, and left+top red / right blue) with red probability 2/3.
inline const std::vector<BuiltinPalette>& builtin_palettes() {
    static const std::vector<BuiltinPalette> all = [] {
        std::vector<BuiltinPalette> v;
        Rational third(1, 3);
        v.push_back({"vanishing",
                     Palette{{"A", "B", "C"}, {{0, 1, 2}}},
                     {{"A", third}, {"B", third}, {"C", third}}});
        Rational red(2, 3), blue(1, 3);
        v.push_back({"four27_a",
                     Palette{{"red", "blue"}, {{0, 1, 0}}},
                     {{"red", red}, {"blue", blue}}});
        v.push_back({"four27_b",
                     Palette{{"red", "blue"}, {{0, 0, 1}}},
                     {{"red", red}, {"blue", blue}}});
        return v;
    }();
    return all;
}

inline const BuiltinPalette* find_builtin_palette(const std::string& name) {
    for (const auto& b : builtin_palettes())
        if (b.name == name) return &b;
    return nullptr;
}

} // namespace uturan
