#pragma once

// JSON wire formats for certificates, palettes, samples, and catalogs.
// nlohmann::json keeps object keys sorted, so every serialization here is
// byte-deterministic for equal inputs.

#include <string>

#include <json.hpp>

#include "uturan/census.hpp"
#include "uturan/certify.hpp"
#include "uturan/digraph_oracle.hpp"
#include "uturan/palette.hpp"
#include "uturan/partitioned.hpp"
#include "uturan/sampling.hpp"
#include "uturan/sha256.hpp"
#include "uturan/vanishing.hpp"

namespace uturan {

using nlohmann::json;

namespace detail {

inline std::string pair_str(const PairKey& p) {
    return std::to_string(p.first) + "," + std::to_string(p.second);
}

inline PairKey parse_pair_str(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw Error("bad pair key '" + s + "'");
    return pair_key(std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1)));
}

inline std::string color_pair_str(int idx) {
    auto [a, b] = kColorPairs[idx];
    return std::to_string(a) + "," + std::to_string(b);
}

} // namespace detail

// --- roles & vanishing certificates ----------------------------------------

inline json roles_to_json(const RoleAssignment& roles) {
    json j = json::object();
    for (const auto& [key, role] : roles)
        j[detail::pair_str(key)] = std::string(1, role_char(role));
    return j;
}

inline RoleAssignment roles_from_json(const json& j) {
    RoleAssignment roles;
    for (const auto& [key, val] : j.items()) {
        std::string s = val.get<std::string>();
        auto role = s.size() == 1 ? role_from_char(s[0]) : std::nullopt;
        if (!role) throw Error("bad role '" + s + "'");
        roles.emplace(detail::parse_pair_str(key), *role);
    }
    return roles;
}

inline json certificate_to_json(const VanishingCertificate& cert) {
    return json{{"ordering", cert.ordering.seq}, {"roles", roles_to_json(cert.roles)}};
}

inline VanishingCertificate certificate_from_json(const json& j) {
    VanishingCertificate cert;
    cert.ordering.seq = j.at("ordering").get<std::vector<int>>();
    cert.roles = roles_from_json(j.at("roles"));
    return cert;
}

// --- digraphs and refutations ------------------------------------------------

inline json digraph_to_json(const DigraphColoring& g) {
    json edges = json::array();
    for (const auto& e : g.edges) edges.push_back({e.from, e.to, e.color});
    json acyclic = json::object();
    for (int k = 0; k < 3; ++k) acyclic[detail::color_pair_str(k)] = g.pair_acyclic[k];
    return json{{"n", g.n}, {"edges", edges}, {"acyclic_pairs", acyclic}};
}

inline DigraphColoring digraph_from_json(const json& j) {
    DigraphColoring g;
    g.n = j.at("n").get<int>();
    for (const auto& e : j.at("edges"))
        g.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>()});
    if (j.contains("acyclic_pairs"))
        for (int k = 0; k < 3; ++k) {
            auto key = detail::color_pair_str(k);
            if (j["acyclic_pairs"].contains(key))
                g.pair_acyclic[k] = j["acyclic_pairs"][key].get<bool>();
        }
    return g;
}

inline json evidence_to_json(const NonvanishingEvidence& ev) {
    json j;
    j["connected"] = ev.connected;
    j["digraph"] = ev.digraph ? digraph_to_json(*ev.digraph) : json(nullptr);
    j["conflict_pair"] = ev.conflict_pair
                             ? json{ev.conflict_pair->first, ev.conflict_pair->second}
                             : json(nullptr);
    json cycles = json::object();
    for (int k = 0; k < 3; ++k) cycles[detail::color_pair_str(k)] = ev.cycles[k];
    j["cycles"] = cycles;
    return j;
}

inline NonvanishingEvidence evidence_from_json(const json& j) {
    NonvanishingEvidence ev;
    ev.connected = j.at("connected").get<bool>();
    if (!j.at("digraph").is_null()) ev.digraph = digraph_from_json(j["digraph"]);
    if (!j.at("conflict_pair").is_null())
        ev.conflict_pair = pair_key(j["conflict_pair"].at(0).get<int>(),
                                    j["conflict_pair"].at(1).get<int>());
    for (int k = 0; k < 3; ++k) {
        auto key = detail::color_pair_str(k);
        if (j.at("cycles").contains(key))
            ev.cycles[k] = j["cycles"][key].get<std::vector<int>>();
    }
    return ev;
}

inline json oracle_result_to_json(const OracleResult& r) {
    json j;
    j["vanishing"] = r.vanishing;
    j["witness"] = r.witness ? digraph_to_json(*r.witness) : json(nullptr);
    j["acyclic_pair"] =
        r.acyclic_pair ? json(detail::color_pair_str(*r.acyclic_pair)) : json(nullptr);
    j["refutation"] = r.refutation ? evidence_to_json(*r.refutation) : json(nullptr);
    return j;
}

// --- bipartition / full certificates -----------------------------------------

inline json triples_to_json(const std::vector<Triple>& ts) {
    json arr = json::array();
    for (const Triple& t : ts) arr.push_back({t[0], t[1], t[2]});
    return arr;
}

inline std::vector<Triple> triples_from_json(const json& j) {
    std::vector<Triple> out;
    for (const auto& t : j)
        out.push_back(sorted_triple(t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>()));
    return out;
}

inline json bipartition_certificate_to_json(const BipartitionCertificate& c) {
    return json{{"mode", mode_name(c.mode)},
                {"part1", triples_to_json(c.bipartition.part1)},
                {"part2", triples_to_json(c.bipartition.part2)},
                {"ordering", c.ordering.seq},
                {"roles1", roles_to_json(c.roles1)},
                {"roles2", roles_to_json(c.roles2)}};
}

inline BipartitionCertificate bipartition_certificate_from_json(const json& j) {
    BipartitionCertificate c;
    std::string mode = j.at("mode").get<std::string>();
    if (mode == "horizontal") c.mode = BipartitionMode::Horizontal;
    else if (mode == "vertical") c.mode = BipartitionMode::Vertical;
    else throw Error("bad mode '" + mode + "'");
    c.bipartition.part1 = triples_from_json(j.at("part1"));
    c.bipartition.part2 = triples_from_json(j.at("part2"));
    c.ordering.seq = j.at("ordering").get<std::vector<int>>();
    c.roles1 = roles_from_json(j.at("roles1"));
    c.roles2 = roles_from_json(j.at("roles2"));
    return c;
}

inline json turan_certificate_to_json(const TuranCertificate& c) {
    json nv;
    nv["vanishing"] = c.nonvanishing.vanishing;
    nv["refutation"] =
        c.nonvanishing.refutation ? evidence_to_json(*c.nonvanishing.refutation) : json(nullptr);
    return json{{"nonvanishing", nv},
                {"horizontal", bipartition_certificate_to_json(c.horizontal)},
                {"vertical", bipartition_certificate_to_json(c.vertical)}};
}

inline TuranCertificate turan_certificate_from_json(const json& j) {
    TuranCertificate c;
    c.nonvanishing.vanishing = j.at("nonvanishing").at("vanishing").get<bool>();
    if (!j.at("nonvanishing").at("refutation").is_null())
        c.nonvanishing.refutation = evidence_from_json(j["nonvanishing"]["refutation"]);
    c.horizontal = bipartition_certificate_from_json(j.at("horizontal"));
    c.vertical = bipartition_certificate_from_json(j.at("vertical"));
    return c;
}

// --- palettes ----------------------------------------------------------------

inline json palette_to_json(const Palette& p, const ColorDistribution* dist = nullptr) {
    json allowed = json::array();
    for (const auto& t : p.allowed)
        allowed.push_back({p.colors[t[0]], p.colors[t[1]], p.colors[t[2]]});
    json j{{"colors", p.colors}, {"allowed", allowed}};
    if (dist) {
        json probs = json::object();
        for (const auto& [color, prob] : *dist) probs[color] = to_string(prob);
        j["probs"] = probs;
    }
    return j;
}

inline std::pair<Palette, ColorDistribution> palette_from_json(const json& j) {
    Palette p;
    p.colors = j.at("colors").get<std::vector<std::string>>();
    for (const auto& t : j.at("allowed")) {
        std::array<int, 3> tri{};
        for (int k = 0; k < 3; ++k) {
            tri[k] = p.color_index(t.at(k).get<std::string>());
            if (tri[k] < 0) throw Error("allowed triple uses unknown color");
        }
        p.allowed.push_back(tri);
    }
    p.validate();
    ColorDistribution dist;
    if (j.contains("probs"))
        for (const auto& [color, prob] : j["probs"].items())
            dist[color] = parse_rational(prob.get<std::string>());
    return {p, dist};
}

inline json embedding_to_json(const PaletteEmbedding& emb, const Palette& p) {
    json colors = json::object();
    for (const auto& [key, c] : emb.coloring) colors[detail::pair_str(key)] = p.colors[c];
    return json{{"ordering", emb.ordering.seq}, {"pair_colors", colors}};
}

inline PaletteEmbedding embedding_from_json(const json& j, const Palette& p) {
    PaletteEmbedding emb;
    emb.ordering.seq = j.at("ordering").get<std::vector<int>>();
    for (const auto& [key, val] : j.at("pair_colors").items()) {
        int c = p.color_index(val.get<std::string>());
        if (c < 0) throw Error("embedding uses unknown color");
        emb.coloring.emplace(detail::parse_pair_str(key), c);
    }
    return emb;
}

// --- host samples -------------------------------------------------------------

inline json host_sample_transcript(const HostSample& s) {
    json colors = json::object();
    for (const auto& [key, c] : s.pair_colors)
        colors[detail::pair_str(key)] = s.palette.colors[c];
    json j;
    j["rng"] = "mt19937_64-rejection";
    j["seed"] = s.seed;
    j["palette"] = s.palette_name.empty() ? palette_to_json(s.palette) : json(s.palette_name);
    j["pair_colors"] = colors;
    return j;
}

// --- catalogs -------------------------------------------------------------------

inline json census_record_to_json(const CensusRecord& r) {
    json j;
    j["hypergraph"] = serialize_hypergraph(r.representative);
    j["canonical"] = detail::mask_hex(r.form.bits[0]);
    j["automorphisms"] = r.form.automorphism_count;
    j["vanishing"] = r.vanishing;
    j["minimal"] = r.minimal;
    j["isolated_vertices"] = r.isolated_vertex_count;
    j["bucket"] = bucket_name(r.bucket);
    j["palette_embeddable"] = r.palette_embeddable;
    j["turan_certificate"] =
        r.turan_certificate ? turan_certificate_to_json(*r.turan_certificate) : json(nullptr);
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

inline json catalog_to_json(const Catalog& c) {
    json records = json::array();
    for (const auto& r : c.records) records.push_back(census_record_to_json(r));
    auto s = summarize_catalog(c);
    return json{{"n", c.n},
                {"records", records},
                {"nodes_explored", c.nodes_explored},
                {"tasks", c.tasks_total},
                {"split_depth", c.split_depth},
                {"summary",
                 {{"total", s.total},
                  {"certified_1_27", s.certified},
                  {"palette_avoided", s.palette_avoided},
                  {"unresolved", s.unresolved},
                  {"with_isolated_vertices", s.with_isolated_vertices}}}};
}

inline std::string catalog_digest(const Catalog& c) {
    return Sha256::hex_digest(catalog_text(c) + "\n" + catalog_to_json(c).dump());
}

} // namespace uturan
