#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "uturan/certify.hpp"
#include "uturan/hypergraph.hpp"

namespace uturan {

namespace detail {

// Edges written as letter triples, a..g -> 0..6.
inline std::vector<Triple> letter_edges(const std::vector<std::string_view>& words) {
    std::vector<Triple> out;
    for (auto w : words) {
        if (w.size() != 3) throw Error("bad edge word");
        out.push_back(sorted_triple(w[0] - 'a', w[1] - 'a', w[2] - 'a'));
    }
    return out;
}

inline TuranCertificate assemble_certificate(const Hypergraph3& h,
                                             const std::vector<Triple>& part1,
                                             const Ordering& horizontal_order,
                                             const Ordering& vertical_order) {
    auto build = [&](const Ordering& ord, BipartitionMode mode) {
        BipartitionCertificate cert;
        cert.mode = mode;
        cert.ordering = ord;
        for (const Triple& t : h.edges) {
            bool in1 = std::find(part1.begin(), part1.end(), t) != part1.end();
            (in1 ? cert.bipartition.part1 : cert.bipartition.part2).push_back(t);
        }
        Hypergraph3 h1{h.n, cert.bipartition.part1};
        Hypergraph3 h2{h.n, cert.bipartition.part2};
        auto r1 = roles_under_ordering(h1, ord);
        auto r2 = roles_under_ordering(h2, ord);
        if (std::holds_alternative<RoleConflict>(r1) ||
            std::holds_alternative<RoleConflict>(r2))
            throw Error("family certificate ordering is not vanishing for a part");
        cert.roles1 = std::get<RoleAssignment>(r1);
        cert.roles2 = std::get<RoleAssignment>(r2);
        return cert;
    };
    TuranCertificate cert;
    cert.horizontal = build(horizontal_order, BipartitionMode::Horizontal);
    cert.vertical = build(vertical_order, BipartitionMode::Vertical);
    OracleResult oracle = digraph_vanishing_oracle(h);
    if (oracle.vanishing) throw Error("family graph unexpectedly has a vanishing ordering");
    cert.nonvanishing.vanishing = false;
    cert.nonvanishing.refutation = oracle.refutation;
    return cert;
}

} // namespace detail

/// The 7-vertex, 9-edge graph with uniform Turan density 1/27 (a..g -> 0..6)
/// and its hand-derived certificate: part1 = {abg}, horizontal ordering
/// egbdfac, vertical ordering ebgdfac.
inline std::pair<Hypergraph3, TuranCertificate> build_example9() {
    auto edges = detail::letter_edges(
        {"abc", "ade", "bcd", "bcf", "cde", "def", "abg", "cdg", "efg"});
    Hypergraph3 h = Hypergraph3::make(7, edges);
    auto part1 = detail::letter_edges({"abg"});
    auto ord = [](std::string_view s) {
        Ordering o;
        for (char c : s) o.seq.push_back(c - 'a');
        return o;
    };
    TuranCertificate cert =
        detail::assemble_certificate(h, part1, ord("egbdfac"), ord("ebgdfac"));
    return {h, cert};
}

/// The (5+3k)-vertex member of the three-chain family, with 3(k+2) edges:
/// per chain x in {c,d,e}, the edges a b x0, b x0 x1, the tight path
/// x0 x1 x2 ... x_{k-2} x_{k-1} x_k, and a closing edge x_{k-1} x_k y_k
/// joining the next chain cyclically (c->d, d->e, e->c).
///
/// Vertex labels: a=0, b=1, c_i=2+i, d_i=2+(k+1)+i, e_i=2+2(k+1)+i.
inline std::pair<Hypergraph3, TuranCertificate> build_example8(int k) {
    if (k < 1) throw Error("family parameter k must be >= 1");
    const int n = 5 + 3 * k;
    const int a = 0, b = 1;
    // chain 0 = c, 1 = d, 2 = e
    auto vx = [&](int chain, int i) { return 2 + chain * (k + 1) + i; };

    std::vector<Triple> edges;
    for (int chain = 0; chain < 3; ++chain) {
        int closing = vx((chain + 1) % 3, k);
        edges.push_back(sorted_triple(a, b, vx(chain, 0)));
        edges.push_back(sorted_triple(b, vx(chain, 0), vx(chain, 1)));
        for (int i = 0; i + 2 <= k; ++i)
            edges.push_back(sorted_triple(vx(chain, i), vx(chain, i + 1), vx(chain, i + 2)));
        edges.push_back(sorted_triple(vx(chain, k - 1), vx(chain, k), closing));
    }
    Hypergraph3 h = Hypergraph3::make(n, edges);

    // Blocks A, B, C collect the chain vertices whose index is congruent to
    // k-1, k, k+1 mod 3, with a and b slotted by k mod 3; c_k and d_k leave
    // block B and are placed individually between the blocks. Within a
    // block: c-chain, then d-chain, then e-chain, then a/b.
    const int ck = vx(0, k), dk = vx(1, k), ek = vx(2, k), ek1 = vx(2, k - 1);
    auto fill = [&](int residue) {
        std::vector<int> block;
        for (int chain = 0; chain < 3; ++chain)
            for (int i = 0; i <= k; ++i)
                if (((i - residue) % 3 + 3) % 3 == 0) {
                    int v = vx(chain, i);
                    if (v == ck || v == dk) continue;
                    block.push_back(v);
                }
        return block;
    };
    std::vector<int> blockA = fill(k - 1), blockB = fill(k), blockC = fill(k + 1);
    switch (k % 3) {
        case 0: blockA.push_back(b); blockC.push_back(a); break;
        case 1: blockB.push_back(a); blockC.push_back(b); break;
        default: blockA.push_back(a); blockB.push_back(b); break;
    }

    Ordering horizontal, vertical;
    for (int v : blockA)
        if (v != ek1) horizontal.seq.push_back(v);
    horizontal.seq.push_back(ck);
    horizontal.seq.push_back(ek1);
    horizontal.seq.push_back(dk);
    for (int v : blockB) horizontal.seq.push_back(v);
    for (int v : blockC) horizontal.seq.push_back(v);

    vertical.seq = blockA;
    vertical.seq.push_back(ck);
    vertical.seq.push_back(dk);
    for (int v : blockB) vertical.seq.push_back(v);
    for (int v : blockC) vertical.seq.push_back(v);

    std::vector<Triple> part1{sorted_triple(ek1, ek, ck)};
    TuranCertificate cert = detail::assemble_certificate(h, part1, horizontal, vertical);
    return {h, cert};
}

/// The nine minimal 7-vertex graphs with uniform Turan density 1/27, in
/// catalog order (a..g -> 0..6). The first one is isomorphic to the
/// build_example9 graph.
inline std::vector<Hypergraph3> paper_catalog_seven() {
    static const std::vector<std::vector<std::string_view>> lines = {
        {"abc", "abd", "abe", "acf", "acg", "bdf", "bdg", "cef", "deg"},
        {"abc", "abd", "abe", "acf", "acg", "bdf", "cdg", "cef", "efg"},
        {"abc", "abd", "abe", "acf", "adg", "bdf", "cef", "efg"},
        {"abc", "abd", "abe", "acf", "aeg", "bdf", "bfg", "cde", "cdg", "cef"},
        {"abc", "abd", "abe", "acf", "bcg", "bdf", "cde", "ceg", "efg"},
        {"abc", "abd", "ace", "adg", "bcf", "bde", "bfg", "cdf", "ceg"},
        {"abc", "abd", "ace", "aef", "afg", "bcf", "bde", "beg", "cdf", "cdg"},
        {"abc", "abd", "ace", "afg", "bcf", "bde", "bfg", "def"},
        {"abc", "abd", "ace", "bde", "bfg", "cdf", "ceg", "cfg"},
    };
    std::vector<Hypergraph3> out;
    for (const auto& line : lines)
        out.push_back(Hypergraph3::make(7, detail::letter_edges(line)));
    return out;
}

} // namespace uturan
