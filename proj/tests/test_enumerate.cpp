#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "uturan/census.hpp"
#include "uturan/enumerate.hpp"
#include "uturan/json_io.hpp"

#include "helpers.hpp"

using namespace uturan;

namespace {

// Independent route: enumerate all labeled graphs, deduplicate by canonical
// form.
std::set<CanonicalForm> brute_force_classes(int n, int max_edges) {
    std::set<CanonicalForm> forms;
    testutil::for_each_labeled_hypergraph(n, [&](const Hypergraph3& h) {
        if (h.edge_count() <= max_edges) forms.insert(canonical_form(h));
    });
    return forms;
}

} // namespace

TEST_CASE("n=3: two classes") {
    int count = 0;
    enumerate_nonisomorphic(3, 1, [&](const Hypergraph3&) { ++count; });
    CHECK(count == 2);
}

TEST_CASE("n=4, max_edges=4: class count matches the labeled brute force") {
    // All 16 labeled edge sets on 4 vertices collapse to one class per edge
    // count (every pair of triples meets in two vertices), so 5 classes.
    auto expected = brute_force_classes(4, 4);
    CHECK(expected.size() == 5);
    std::set<CanonicalForm> got;
    int emitted = 0;
    enumerate_nonisomorphic(4, 4, [&](const Hypergraph3& h) {
        ++emitted;
        got.insert(canonical_form(h));
    });
    CHECK(emitted == 5);
    CHECK(got == expected);
}

TEST_CASE("every yielded graph is its own canonical representative") {
    const auto& geo = small_geometry(5);
    enumerate_nonisomorphic(5, 4, [&](const Hypergraph3& h) {
        auto canon = canon64(edge_mask(h, geo), geo);
        CHECK(canon.bits == edge_mask(h, geo));
    });
}

TEST_CASE("isomorph-freeness at n=5: identical class counts per edge level") {
    auto expected = brute_force_classes(5, 10);
    std::set<CanonicalForm> got;
    int emitted = 0;
    enumerate_nonisomorphic(5, 10, [&](const Hypergraph3& h) {
        ++emitted;
        got.insert(canonical_form(h));
    });
    CHECK(static_cast<size_t>(emitted) == expected.size()); // no duplicates
    CHECK(got == expected);
}

TEST_CASE("max_edges bound respected") {
    int over = 0;
    enumerate_nonisomorphic(5, 3, [&](const Hypergraph3& h) {
        if (h.edge_count() > 3) ++over;
    });
    CHECK(over == 0);
}

TEST_CASE("cursor restart yields the same tail") {
    std::vector<std::string> full;
    enumerate_nonisomorphic(5, 5, [&](const Hypergraph3& h) {
        full.push_back(serialize_hypergraph(h));
    });
    // Count prefix emissions (depth < 2) plus the first two tasks by running
    // with a cursor observer.
    std::vector<std::string> prefix_and_rest;
    std::vector<int> cursors;
    enumerate_nonisomorphic(
        5, 5, [&](const Hypergraph3& h) { prefix_and_rest.push_back(serialize_hypergraph(h)); },
        0, [&](int c) { cursors.push_back(c); });
    REQUIRE(cursors.size() >= 2);
    CHECK(prefix_and_rest == full);
    // Restart from cursor 1: the stream must continue exactly after the
    // first task's subtree.
    std::vector<std::string> tail;
    enumerate_nonisomorphic(5, 5,
                            [&](const Hypergraph3& h) { tail.push_back(serialize_hypergraph(h)); },
                            1);
    REQUIRE(tail.size() < full.size());
    std::vector<std::string> expected_tail(full.end() - tail.size(), full.end());
    CHECK(tail == expected_tail);
}

TEST_CASE("minimal census at n=4: exactly the 3-edge class") {
    Catalog cat = find_minimal_nonvanishing(4);
    REQUIRE(cat.records.size() == 1);
    CHECK(cat.records[0].representative.edge_count() == 3);
    CHECK(cat.records[0].minimal);
    CHECK_FALSE(cat.records[0].vanishing);
    // K4 itself is not minimal: its 3-edge subgraph is already non-vanishing.
    Hypergraph3 k4 = Hypergraph3::make(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    bool k4_present = false;
    for (const auto& r : cat.records) k4_present |= are_isomorphic(r.representative, k4);
    bool all_subgraphs_vanishing = true;
    for (const Triple& e : k4.edges)
        all_subgraphs_vanishing &= is_vanishing(delete_edge(k4, e));
    CHECK(k4_present == all_subgraphs_vanishing);
    CHECK_FALSE(k4_present);
}

TEST_CASE("minimal census at n=5 matches the labeled brute force") {
    std::set<CanonicalForm> expected;
    testutil::for_each_labeled_hypergraph(5, [&](const Hypergraph3& h) {
        if (testutil::brute_force_vanishing(h)) return;
        for (const Triple& e : h.edges)
            if (!testutil::brute_force_vanishing(delete_edge(h, e))) return;
        expected.insert(canonical_form(h));
    });
    Catalog cat = find_minimal_nonvanishing(5);
    std::set<CanonicalForm> got;
    for (const auto& r : cat.records) {
        CHECK(r.minimal);
        got.insert(r.form);
    }
    CHECK(got == expected);
}

TEST_CASE("census determinism: jobs and checkpointing do not change the catalog") {
    Catalog a = find_minimal_nonvanishing(5);
    CensusOptions two_jobs;
    two_jobs.jobs = 2;
    Catalog b = find_minimal_nonvanishing(5, two_jobs);
    Catalog a_classified = classify_catalog(a);
    Catalog b_classified = classify_catalog(b);
    CHECK(catalog_digest(a_classified) == catalog_digest(b_classified));

    // Interrupt simulation: run with a checkpoint, strip half the completed
    // tasks, resume, and compare digests.
    std::string path = "census5_checkpoint.json";
    std::remove(path.c_str());
    CensusOptions with_cp;
    with_cp.checkpoint_path = path;
    Catalog c = find_minimal_nonvanishing(5, with_cp);
    {
        std::ifstream in(path);
        nlohmann::json j = nlohmann::json::parse(in);
        in.close();
        nlohmann::json pruned = nlohmann::json::object();
        size_t i = 0, total = j["done"].size();
        for (auto& [key, val] : j["done"].items())
            if (i++ < total / 2) pruned[key] = val;
        j["done"] = pruned;
        std::ofstream out(path);
        out << j.dump();
    }
    CensusOptions resume;
    resume.checkpoint_path = path;
    resume.resume = true;
    Catalog d = find_minimal_nonvanishing(5, resume);
    CHECK(catalog_digest(classify_catalog(c)) == catalog_digest(classify_catalog(d)));
    std::remove(path.c_str());
}

TEST_CASE("checkpoint mismatch is refused") {
    std::string path = "census_mismatch_checkpoint.json";
    std::remove(path.c_str());
    CensusOptions with_cp;
    with_cp.checkpoint_path = path;
    find_minimal_nonvanishing(4, with_cp);
    CensusOptions resume;
    resume.checkpoint_path = path;
    resume.resume = true;
    CHECK_THROWS_AS(find_minimal_nonvanishing(5, resume), Error);
    std::remove(path.c_str());
}
