#pragma once

#include <atomic>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "uturan/canonical.hpp"
#include "uturan/certify.hpp"
#include "uturan/enumerate.hpp"
#include "uturan/format.hpp"
#include "uturan/palette.hpp"
#include "uturan/sha256.hpp"
#include "uturan/vanishing.hpp"

namespace uturan {

enum class CensusBucket { Unclassified, Certified127, PaletteAvoided, Unresolved };

inline const char* bucket_name(CensusBucket b) {
    switch (b) {
        case CensusBucket::Certified127: return "CERTIFIED_1_27";
        case CensusBucket::PaletteAvoided: return "PALETTE_AVOIDED";
        case CensusBucket::Unresolved: return "UNRESOLVED";
        default: return "UNCLASSIFIED";
    }
}

/// One minimal non-vanishing isomorphism class: the canonical representative,
/// re-verified verdicts, and (after classification) the certificate or
/// palette-avoidance evidence.
struct CensusRecord {
    Hypergraph3 representative; // the canonically labeled representative
    CanonicalForm form;
    bool vanishing = false;
    bool minimal = false;
    int isolated_vertex_count = 0;
    std::optional<TuranCertificate> turan_certificate;
    std::map<std::string, bool> palette_embeddable; // per builtin 4/27 palette
    CensusBucket bucket = CensusBucket::Unclassified;
    std::string note;
};

struct Catalog {
    int n = 0;
    std::vector<CensusRecord> records; // sorted by canonical form
    std::uint64_t nodes_explored = 0;  // vanishing classes visited
    int tasks_total = 0;
    int split_depth = 0;
};

struct CensusOptions {
    int jobs = 1;
    int max_edges = -1;   // cap on edge counts; -1 = all of C(n,3)
    int split_depth = -1; // -1: pick the smallest depth with enough tasks
    std::string checkpoint_path;
    bool resume = false;
    std::function<void(const std::string&)> progress; // side-channel lines
};

namespace detail {

inline std::string mask_hex(std::uint64_t m) {
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(m));
    return buf;
}

inline std::uint64_t parse_mask_hex(const std::string& s) {
    return std::stoull(s, nullptr, 16);
}

/// Boundary handler for the census: a non-vanishing child of a vanishing
/// node is minimal iff every single-edge deletion is vanishing. Reports the
/// canonical bits (the dedupe key doubles as the canonical representative).
struct MinimalCollector {
    const SmallGeometry& geo;
    std::vector<std::uint64_t> found; // canonical masks

    void operator()(std::uint64_t child) {
        for (std::uint64_t rest = child; rest;) {
            std::uint64_t bit = rest & (~rest + 1);
            rest &= rest - 1;
            if (!is_vanishing_mask(child & ~bit, geo)) return;
        }
        found.push_back(canon64(child, geo).bits);
    }
};

struct TaskOutcome {
    std::vector<std::uint64_t> minimal; // canonical masks, sorted unique
    std::uint64_t nodes = 0;
};

inline nlohmann::json outcome_to_json(const TaskOutcome& o) {
    nlohmann::json j;
    j["nodes"] = o.nodes;
    auto& arr = j["results"] = nlohmann::json::array();
    for (std::uint64_t m : o.minimal) arr.push_back(mask_hex(m));
    return j;
}

inline TaskOutcome outcome_from_json(const nlohmann::json& j) {
    TaskOutcome o;
    o.nodes = j.at("nodes").get<std::uint64_t>();
    for (const auto& s : j.at("results")) o.minimal.push_back(parse_mask_hex(s.get<std::string>()));
    return o;
}

} // namespace detail

/// Isomorph-free census of minimal non-vanishing graphs on exactly n labeled
/// vertices (isolated vertices allowed): canonical augmentation over the
/// downward-closed family of vanishing graphs; a non-vanishing child whose
/// deletions all vanish is minimal. Work is sharded into independent subtree
/// tasks at a fixed depth; results are merged as canonical-form sets, so the
/// catalog is identical for any job count, interleaving, or resume point.
inline Catalog find_minimal_nonvanishing(int n, const CensusOptions& options = {}) {
    if (n > kMaskMaxN) throw BoundError("census limited to n <= 8");
    const auto& geo = small_geometry(n);
    int max_edges = options.max_edges < 0 ? geo.triple_count
                                          : std::min(options.max_edges, geo.triple_count);
    AugmentationEngine engine(n, max_edges,
                              [&geo](std::uint64_t m) { return is_vanishing_mask(m, geo); });

    auto log = [&](const std::string& s) {
        if (options.progress) options.progress(s);
    };

    // Phase 1: breadth-first prefix, single-threaded and cheap. Choose the
    // split depth so there are enough tasks to shard.
    int depth = options.split_depth;
    if (depth < 0) {
        depth = 2;
        std::uint64_t probe_nodes = 0;
        AugmentationEngine::NodeFn noop = [](std::uint64_t) {};
        while (depth < 6) {
            auto probe = engine.frontier(depth, noop, nullptr, probe_nodes);
            if (static_cast<int>(probe.size()) >= std::max(32, 8 * options.jobs) ||
                probe.empty())
                break;
            ++depth;
        }
    }

    detail::MinimalCollector base_collector{geo, {}};
    std::uint64_t base_nodes = 0;
    AugmentationEngine::NodeFn count_only = [](std::uint64_t) {};
    std::vector<AugNode> tasks = engine.frontier(
        depth, count_only, [&](std::uint64_t c) { base_collector(c); }, base_nodes);
    std::sort(tasks.begin(), tasks.end(),
              [](const AugNode& a, const AugNode& b) { return a.canon.bits < b.canon.bits; });

    std::vector<std::string> task_ids;
    task_ids.reserve(tasks.size());
    for (const auto& t : tasks) task_ids.push_back(detail::mask_hex(t.canon.bits));

    detail::TaskOutcome base;
    base.nodes = base_nodes;
    base.minimal = std::move(base_collector.found);
    std::sort(base.minimal.begin(), base.minimal.end());
    base.minimal.erase(std::unique(base.minimal.begin(), base.minimal.end()),
                       base.minimal.end());

    // Phase 2: checkpoint state.
    std::map<std::string, detail::TaskOutcome> done;
    if (options.resume) {
        if (options.checkpoint_path.empty())
            throw Error("resume requires a checkpoint path");
        std::ifstream in(options.checkpoint_path);
        if (!in) throw Error("checkpoint '" + options.checkpoint_path + "' not found");
        nlohmann::json j = nlohmann::json::parse(in);
        if (j.at("n").get<int>() != n || j.at("split_depth").get<int>() != depth ||
            j.at("max_edges").get<int>() != max_edges ||
            j.at("task_ids").get<std::vector<std::string>>() != task_ids)
            throw Error("checkpoint does not match this census run; refusing to resume");
        for (auto& [key, val] : j.at("done").items())
            done[key] = detail::outcome_from_json(val);
        log("resumed: " + std::to_string(done.size()) + "/" + std::to_string(tasks.size()) +
            " tasks already complete");
    }

    std::mutex mu;
    auto write_checkpoint = [&] {
        if (options.checkpoint_path.empty()) return;
        nlohmann::json j;
        j["version"] = 1;
        j["n"] = n;
        j["split_depth"] = depth;
        j["max_edges"] = max_edges;
        j["task_ids"] = task_ids;
        j["base"] = detail::outcome_to_json(base);
        auto& d = j["done"] = nlohmann::json::object();
        for (const auto& [key, val] : done) d[key] = detail::outcome_to_json(val);
        std::string tmp = options.checkpoint_path + ".tmp";
        std::ofstream out(tmp);
        out << j.dump();
        out.close();
        std::rename(tmp.c_str(), options.checkpoint_path.c_str());
    };
    write_checkpoint();

    // Phase 3: run the remaining tasks.
    std::atomic<size_t> next{0};
    std::atomic<int> completed{static_cast<int>(done.size())};
    auto worker = [&] {
        const auto& geo_local = geo;
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            {
                std::lock_guard<std::mutex> lock(mu);
                if (done.count(task_ids[i])) continue;
            }
            detail::MinimalCollector collector{geo_local, {}};
            detail::TaskOutcome outcome;
            AugmentationEngine::NodeFn counter = [](std::uint64_t) {};
            engine.dfs(tasks[i], counter, [&](std::uint64_t c) { collector(c); },
                       outcome.nodes);
            outcome.minimal = std::move(collector.found);
            std::sort(outcome.minimal.begin(), outcome.minimal.end());
            outcome.minimal.erase(
                std::unique(outcome.minimal.begin(), outcome.minimal.end()),
                outcome.minimal.end());
            std::lock_guard<std::mutex> lock(mu);
            done[task_ids[i]] = std::move(outcome);
            int c = ++completed;
            write_checkpoint();
            log("task " + std::to_string(c) + "/" + std::to_string(tasks.size()) +
                " done (" + std::to_string(done[task_ids[i]].nodes) + " nodes)");
        }
    };
    int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    // Phase 4: deterministic merge.
    std::set<std::uint64_t> classes(base.minimal.begin(), base.minimal.end());
    std::uint64_t nodes = base.nodes;
    for (const auto& [key, outcome] : done) {
        classes.insert(outcome.minimal.begin(), outcome.minimal.end());
        nodes += outcome.nodes;
    }

    Catalog catalog;
    catalog.n = n;
    catalog.nodes_explored = nodes;
    catalog.tasks_total = static_cast<int>(tasks.size());
    catalog.split_depth = depth;
    for (std::uint64_t bits : classes) {
        CensusRecord rec;
        rec.representative = hypergraph_from_mask(bits, geo);
        auto canon = canon64(bits, geo);
        rec.form = CanonicalForm{n, {canon.bits, 0},
                                 static_cast<std::uint64_t>(canon.min_labelings.size())};
        // Minimality is re-verified, never assumed from the search path.
        rec.vanishing = is_vanishing(rec.representative);
        rec.minimal = !rec.vanishing;
        for (const Triple& e : rec.representative.edges)
            if (!is_vanishing(delete_edge(rec.representative, e))) rec.minimal = false;
        rec.isolated_vertex_count = uturan::isolated_vertex_count(rec.representative);
        catalog.records.push_back(std::move(rec));
    }
    std::sort(catalog.records.begin(), catalog.records.end(),
              [](const CensusRecord& a, const CensusRecord& b) { return a.form < b.form; });
    return catalog;
}

/// Fills the certification / palette-avoidance verdicts. Every record lands
/// in exactly one bucket; UNRESOLVED is flagged in the note.
inline Catalog classify_catalog(Catalog catalog, const SearchLimits& limits = {}) {
    for (CensusRecord& rec : catalog.records) {
        if (rec.vanishing || !rec.minimal) {
            rec.bucket = CensusBucket::Unresolved;
            rec.note = "record is not minimal non-vanishing";
            continue;
        }
        try {
            auto outcome = certify_uniform_turan_1_27(rec.representative, limits);
            if (outcome.certificate) {
                if (!verify_turan_certificate(rec.representative, *outcome.certificate, limits))
                    throw Error("internal: certificate failed re-verification");
                rec.turan_certificate = std::move(outcome.certificate);
            }
        } catch (const BoundError& e) {
            rec.note = std::string("certification skipped: ") + e.what();
        }
        for (const char* name : {"four27_a", "four27_b"}) {
            const auto* b = find_builtin_palette(name);
            rec.palette_embeddable[name] =
                find_palette_embedding(rec.representative, b->palette, limits).has_value();
        }
        if (rec.turan_certificate) {
            rec.bucket = CensusBucket::Certified127;
        } else if (!rec.palette_embeddable["four27_a"] || !rec.palette_embeddable["four27_b"]) {
            rec.bucket = CensusBucket::PaletteAvoided;
        } else {
            rec.bucket = CensusBucket::Unresolved;
            if (rec.note.empty())
                rec.note = "not certified at 1/27 and embeds in both 4/27 palettes";
        }
    }
    return catalog;
}

struct CensusSummary {
    int total = 0;
    int certified = 0;
    int palette_avoided = 0;
    int unresolved = 0;
    int with_isolated_vertices = 0;
};

inline CensusSummary summarize_catalog(const Catalog& catalog) {
    CensusSummary s;
    s.total = static_cast<int>(catalog.records.size());
    for (const auto& r : catalog.records) {
        if (r.bucket == CensusBucket::Certified127) ++s.certified;
        if (r.bucket == CensusBucket::PaletteAvoided) ++s.palette_avoided;
        if (r.bucket == CensusBucket::Unresolved) ++s.unresolved;
        if (r.isolated_vertex_count > 0) ++s.with_isolated_vertices;
    }
    return s;
}

/// Text catalog: one hypergraph block per record, '#' headers in between.
inline std::string catalog_text(const Catalog& catalog) {
    std::ostringstream os;
    os << "# minimal non-vanishing census, n = " << catalog.n << ", " << catalog.records.size()
       << " classes\n";
    for (size_t i = 0; i < catalog.records.size(); ++i) {
        const auto& r = catalog.records[i];
        os << "# record " << i << " bucket " << bucket_name(r.bucket) << "\n"
           << serialize_hypergraph(r.representative) << "\n";
    }
    return os.str();
}

inline std::string catalog_digest(const Catalog& catalog);

} // namespace uturan
