#include <catch2/catch_amalgamated.hpp>

#include "uturan/digraph_oracle.hpp"
#include "uturan/families.hpp"
#include "uturan/format.hpp"
#include "uturan/vanishing.hpp"

#include "helpers.hpp"

using namespace uturan;

namespace {

Hypergraph3 k4_complete() {
    return Hypergraph3::make(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

Hypergraph3 tight_cycle6() {
    std::vector<Triple> edges;
    for (int i = 0; i < 6; ++i) edges.push_back(sorted_triple(i, (i + 1) % 6, (i + 2) % 6));
    return Hypergraph3::make(6, edges);
}

} // namespace

TEST_CASE("roles of a single edge under the identity ordering") {
    Hypergraph3 h = Hypergraph3::make(3, {{0, 1, 2}});
    Ordering id{{0, 1, 2}};
    auto res = roles_under_ordering(h, id);
    REQUIRE(std::holds_alternative<RoleAssignment>(res));
    auto roles = std::get<RoleAssignment>(res);
    CHECK(roles.at({0, 1}) == Role::Left);
    CHECK(roles.at({0, 2}) == Role::Top);
    CHECK(roles.at({1, 2}) == Role::Right);
    CHECK(roles.size() == 3);
}

TEST_CASE("complete K4 conflicts under every ordering") {
    Hypergraph3 h = k4_complete();
    std::vector<int> seq{0, 1, 2, 3};
    do {
        auto res = roles_under_ordering(h, Ordering{seq});
        REQUIRE(std::holds_alternative<RoleConflict>(res));
        auto c = std::get<RoleConflict>(res);
        // The conflicted pairs are exactly (v1,v3), (v2,v3), (v2,v4); the
        // reported one is the lexicographically least by label.
        std::vector<PairKey> expected{pair_key(seq[0], seq[2]), pair_key(seq[1], seq[2]),
                                      pair_key(seq[1], seq[3])};
        std::sort(expected.begin(), expected.end());
        CHECK(c.pair == expected.front());
    } while (std::next_permutation(seq.begin(), seq.end()));
}

TEST_CASE("the middle pair is Right in the first edge and Left in the last") {
    // {v1,v2,v3} and {v2,v3,v4} alone already clash on the middle pair.
    Hypergraph3 h = Hypergraph3::make(4, {{0, 1, 2}, {1, 2, 3}});
    auto res = roles_under_ordering(h, Ordering{{0, 1, 2, 3}});
    REQUIRE(std::holds_alternative<RoleConflict>(res));
    auto c = std::get<RoleConflict>(res);
    CHECK(c.pair == PairKey{1, 2});
    CHECK(c.first_role == Role::Right);
    CHECK(c.second_role == Role::Left);
}

TEST_CASE("H2 = example9 minus abg is vanishing under egbdfac with ab Left") {
    auto [h, cert] = build_example9();
    Hypergraph3 h2 = delete_edge(h, sorted_triple(0, 1, 6)); // abg
    Ordering ord;
    for (char c : std::string("egbdfac")) ord.seq.push_back(c - 'a');
    auto res = roles_under_ordering(h2, ord);
    REQUIRE(std::holds_alternative<RoleAssignment>(res));
    CHECK(std::get<RoleAssignment>(res).at({0, 1}) == Role::Left); // pair ab
}

TEST_CASE("find_vanishing_ordering basics") {
    // Single edge: identity ordering.
    auto cert = find_vanishing_ordering(Hypergraph3::make(3, {{0, 1, 2}}));
    REQUIRE(cert.has_value());
    CHECK(cert->ordering.seq == std::vector<int>{0, 1, 2});

    // Edgeless: identity ordering, empty role map.
    auto empty = find_vanishing_ordering(Hypergraph3::make(5, {}));
    REQUIRE(empty.has_value());
    CHECK(empty->ordering.seq == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(empty->roles.empty());

    CHECK_FALSE(find_vanishing_ordering(k4_complete()).has_value());
    CHECK(find_vanishing_ordering(tight_cycle6()).has_value());

    auto [h9, c9] = build_example9();
    CHECK_FALSE(find_vanishing_ordering(h9).has_value());
}

TEST_CASE("search certificates always verify and match the brute force") {
    std::mt19937_64 rng(41);
    for (int it = 0; it < 300; ++it) {
        int n = 4 + static_cast<int>(rng() % 3);
        Hypergraph3 h = testutil::random_hypergraph(n, static_cast<int>(rng() % 8), rng);
        auto cert = find_vanishing_ordering(h);
        CHECK(cert.has_value() == testutil::brute_force_vanishing(h));
        if (cert) CHECK(verify_vanishing_certificate(h, *cert));
    }
}

TEST_CASE("verifier rejects a flipped role") {
    auto cert = find_vanishing_ordering(tight_cycle6());
    REQUIRE(cert.has_value());
    auto bad = *cert;
    auto it = bad.roles.begin();
    it->second = it->second == Role::Left ? Role::Top : Role::Left;
    CHECK_FALSE(verify_vanishing_certificate(tight_cycle6(), bad));
}

TEST_CASE("downward monotonicity: deleting edges preserves vanishing") {
    std::mt19937_64 rng(43);
    int tested = 0;
    while (tested < 40) {
        Hypergraph3 h = testutil::random_hypergraph(6, 5, rng);
        if (!find_vanishing_ordering(h)) continue;
        ++tested;
        Hypergraph3 cur = h;
        while (!cur.edges.empty()) {
            cur = delete_edge(cur, cur.edges[rng() % cur.edges.size()]);
            CHECK(find_vanishing_ordering(cur).has_value());
        }
    }
}

TEST_CASE("uncovered pairs never appear in certificates") {
    // Two disjoint edges on 6 vertices: pairs across the edges are unassigned.
    Hypergraph3 h = Hypergraph3::make(6, {{0, 1, 2}, {3, 4, 5}});
    auto cert = find_vanishing_ordering(h);
    REQUIRE(cert.has_value());
    CHECK(cert->roles.size() == 6);
    for (const auto& [key, role] : cert->roles) {
        bool covered = false;
        for (const Triple& t : h.edges)
            covered |= (std::find(t.begin(), t.end(), key.first) != t.end() &&
                        std::find(t.begin(), t.end(), key.second) != t.end());
        CHECK(covered);
    }
}

TEST_CASE("mask kernel agrees with the vector search") {
    const auto& geo = small_geometry(7);
    std::mt19937_64 rng(47);
    for (int it = 0; it < 500; ++it) {
        Hypergraph3 h = testutil::random_hypergraph(7, static_cast<int>(rng() % 12), rng);
        CHECK(is_vanishing_mask(edge_mask(h, geo), geo) == is_vanishing(h));
    }
}

TEST_CASE("bound enforcement") {
    Hypergraph3 big = Hypergraph3::make(13, {{0, 1, 2}});
    CHECK_THROWS_AS(find_vanishing_ordering(big), BoundError);
}

// --- digraph oracle ---------------------------------------------------------

TEST_CASE("oracle: single edge is vanishing") {
    auto r = digraph_vanishing_oracle(Hypergraph3::make(3, {{0, 1, 2}}));
    CHECK(r.vanishing);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->edges.size() == 3);
}

TEST_CASE("oracle: example9 graph is refuted with cycles in all three subgraphs") {
    auto [h, cert] = build_example9();
    auto r = digraph_vanishing_oracle(h);
    CHECK_FALSE(r.vanishing);
    REQUIRE(r.refutation.has_value());
    CHECK(r.refutation->connected);
    REQUIRE(r.refutation->digraph.has_value());
    for (int k = 0; k < 3; ++k) CHECK(r.refutation->cycles[k].size() >= 2);
    CHECK(validate_nonvanishing_evidence(h, *r.refutation));
}

TEST_CASE("oracle: the k=1 and k=2 chain family members are non-vanishing") {
    for (int k = 1; k <= 2; ++k) {
        auto [h, cert] = build_example8(k);
        auto r = digraph_vanishing_oracle(h);
        CHECK_FALSE(r.vanishing);
        REQUIRE(r.refutation.has_value());
        CHECK(validate_nonvanishing_evidence(h, *r.refutation));
    }
}

TEST_CASE("oracle equivalence: exhaustive n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        // One representative per isomorphism class via a canonical-form set
        // would also work; plain exhaustion is cheap here for n <= 4 and
        // sampled for n = 5.
        if (n <= 4) {
            testutil::for_each_labeled_hypergraph(n, [&](const Hypergraph3& h) {
                CHECK(digraph_vanishing_oracle(h).vanishing ==
                      find_vanishing_ordering(h).has_value());
            });
        }
    }
    std::mt19937_64 rng(53);
    for (int it = 0; it < 600; ++it) {
        Hypergraph3 h = testutil::random_hypergraph(5, static_cast<int>(rng() % 11), rng);
        CHECK(digraph_vanishing_oracle(h).vanishing == find_vanishing_ordering(h).has_value());
    }
}

TEST_CASE("oracle equivalence on random 6- and 7-vertex graphs") {
    std::mt19937_64 rng(59);
    for (int it = 0; it < 400; ++it) {
        int n = 6 + static_cast<int>(rng() % 2);
        Hypergraph3 h = testutil::random_hypergraph(n, static_cast<int>(rng() % 14), rng);
        CHECK(digraph_vanishing_oracle(h).vanishing == find_vanishing_ordering(h).has_value());
    }
}

TEST_CASE("evidence validation rejects tampering") {
    auto [h, cert] = build_example9();
    auto r = digraph_vanishing_oracle(h);
    REQUIRE(r.refutation.has_value());
    auto ev = *r.refutation;
    SECTION("recolored digraph edge") {
        ev.digraph->edges[0].color = ev.digraph->edges[0].color % 3 + 1;
        CHECK_FALSE(validate_nonvanishing_evidence(h, ev));
    }
    SECTION("truncated cycle") {
        ev.cycles[0].pop_back();
        CHECK_FALSE(validate_nonvanishing_evidence(h, ev));
    }
    SECTION("evidence against a vanishing graph") {
        Hypergraph3 h2 = delete_edge(h, sorted_triple(0, 1, 6));
        CHECK_FALSE(validate_nonvanishing_evidence(h2, ev));
    }
}
