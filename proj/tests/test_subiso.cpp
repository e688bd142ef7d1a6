#include <catch2/catch_amalgamated.hpp>

#include "uturan/families.hpp"
#include "uturan/sampling.hpp"
#include "uturan/subiso.hpp"

#include "helpers.hpp"

using namespace uturan;

TEST_CASE("single edge into any host with an edge") {
    Hypergraph3 pattern = Hypergraph3::make(3, {{0, 1, 2}});
    std::mt19937_64 rng(81);
    for (int it = 0; it < 30; ++it) {
        Hypergraph3 host = testutil::random_hypergraph(9, 1 + static_cast<int>(rng() % 10), rng);
        auto vm = contains_subhypergraph(host, pattern);
        REQUIRE(vm.has_value());
        CHECK(verify_vertex_map(host, pattern, *vm));
    }
}

TEST_CASE("pattern larger than host never embeds") {
    Hypergraph3 pattern = Hypergraph3::make(5, {{0, 1, 2}});
    Hypergraph3 host = Hypergraph3::make(4, {{0, 1, 2}, {0, 1, 3}});
    CHECK_FALSE(contains_subhypergraph(host, pattern).has_value());
}

TEST_CASE("self-containment always holds") {
    std::mt19937_64 rng(83);
    for (int it = 0; it < 40; ++it) {
        Hypergraph3 h = testutil::random_hypergraph(7, static_cast<int>(rng() % 10), rng);
        auto vm = contains_subhypergraph(h, h);
        REQUIRE(vm.has_value());
        CHECK(verify_vertex_map(h, h, *vm));
    }
}

TEST_CASE("containment is transitive on witnessed triples") {
    std::mt19937_64 rng(89);
    int hits = 0;
    for (int it = 0; it < 300 && hits < 25; ++it) {
        Hypergraph3 a = testutil::random_hypergraph(4, 1 + static_cast<int>(rng() % 2), rng);
        Hypergraph3 b = testutil::random_hypergraph(6, 3 + static_cast<int>(rng() % 4), rng);
        Hypergraph3 c = testutil::random_hypergraph(8, 8 + static_cast<int>(rng() % 8), rng);
        auto ab = contains_subhypergraph(b, a);
        auto bc = contains_subhypergraph(c, b);
        if (!ab || !bc) continue;
        ++hits;
        auto ac = contains_subhypergraph(c, a);
        REQUIRE(ac.has_value());
        // The composite map is itself a witness.
        VertexMap composed;
        for (int v = 0; v < a.n; ++v) composed.map.push_back(bc->map[ab->map[v]]);
        CHECK(verify_vertex_map(c, a, composed));
    }
    CHECK(hits > 0);
}

TEST_CASE("planted copies are found") {
    std::mt19937_64 rng(97);
    for (int it = 0; it < 40; ++it) {
        Hypergraph3 pattern = testutil::random_hypergraph(6, 4 + static_cast<int>(rng() % 4), rng);
        // Plant the pattern into a 12-vertex host under a random injection,
        // then add noise edges.
        auto inj = testutil::random_permutation(12, rng);
        std::vector<Triple> host_edges;
        for (const Triple& t : pattern.edges)
            host_edges.push_back(sorted_triple(inj[t[0]], inj[t[1]], inj[t[2]]));
        Hypergraph3 noise = testutil::random_hypergraph_p(12, 0.03, rng);
        for (const Triple& t : noise.edges) {
            Triple s = t;
            if (std::find(host_edges.begin(), host_edges.end(), s) == host_edges.end())
                host_edges.push_back(s);
        }
        Hypergraph3 host = Hypergraph3::make(12, host_edges);
        auto vm = contains_subhypergraph(host, pattern);
        REQUIRE(vm.has_value());
        CHECK(verify_vertex_map(host, pattern, *vm));
    }
}

TEST_CASE("the non-vanishing 7-vertex example is absent from vanishing-palette hosts") {
    // A copy inside a sampled host would transport the host's pair colors
    // into a vanishing ordering of the pattern, which has none.
    auto [pattern, cert] = uturan::build_example9();
    const auto& b = *find_builtin_palette("vanishing");
    for (std::uint64_t seed = 40; seed < 43; ++seed) {
        auto host = sample_palette_host(12, b.palette, b.dist, seed, "vanishing");
        CHECK_FALSE(contains_subhypergraph(host.hypergraph, pattern).has_value());
    }
}

TEST_CASE("subiso bounds") {
    Hypergraph3 pat = Hypergraph3::make(9, {{0, 1, 2}});
    Hypergraph3 host = Hypergraph3::make(10, {{0, 1, 2}});
    CHECK_THROWS_AS(contains_subhypergraph(host, pat), BoundError);
    Hypergraph3 host17 = Hypergraph3::make(17, {{0, 1, 2}});
    CHECK_THROWS_AS(contains_subhypergraph(host17, Hypergraph3::make(3, {{0, 1, 2}})),
                    BoundError);
}
