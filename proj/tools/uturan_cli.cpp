// Command-line surface: vanishing decisions, 1/27 certification, certificate
// replay, palette embeddings, the minimal-nonvanishing census, palette-host
// sampling, and density measurement. Verdict output is JSON on stdout
// (--pretty for a human transcript); progress goes to stderr. Exit codes:
// 0 success / positive verdict, 1 negative verdict, 2 input error, 3 bounds.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "uturan/census.hpp"
#include "uturan/certify.hpp"
#include "uturan/digraph_oracle.hpp"
#include "uturan/families.hpp"
#include "uturan/format.hpp"
#include "uturan/json_io.hpp"
#include "uturan/manifest.hpp"
#include "uturan/palette.hpp"
#include "uturan/sampling.hpp"
#include "uturan/subiso.hpp"

using namespace uturan;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitBounds = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << content;
}

Hypergraph3 load_hypergraph(const std::string& path) { return parse_hypergraph(read_file(path)); }

struct Emitter {
    RunManifest manifest;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    bool pretty = false;

    /// Prints the result document plus the manifest; the manifest digest
    /// covers the result payload and any files written earlier.
    void finish(json result) {
        manifest.add_output("stdout", result.dump());
        manifest.finalize();
        manifest.wall_clock_sec =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        result["manifest"] = manifest.to_json();
        std::cout << (pretty ? result.dump(2) : result.dump()) << "\n";
    }
};

int default_jobs() {
    if (const char* env = std::getenv("TURAN_JOBS")) {
        int j = std::atoi(env);
        if (j > 0) return j;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

std::pair<Palette, ColorDistribution> resolve_palette(const std::string& name_or_path) {
    if (const auto* b = find_builtin_palette(name_or_path)) return {b->palette, b->dist};
    std::ifstream probe(name_or_path);
    if (!probe) throw Error("unknown palette '" + name_or_path + "' (not a builtin, not a file)");
    return palette_from_json(json::parse(read_file(name_or_path)));
}

// --- subcommands -------------------------------------------------------------

int cmd_check_vanishing(const std::string& input, Emitter& em) {
    Hypergraph3 h = load_hypergraph(input);
    auto cert = find_vanishing_ordering(h);
    json out;
    out["vanishing"] = cert.has_value();
    if (cert) {
        out["certificate"] = certificate_to_json(*cert);
        em.finish(out);
        return kExitOk;
    }
    OracleResult oracle = digraph_vanishing_oracle(h);
    if (oracle.vanishing) throw Error("internal: oracle disagrees with ordering search");
    out["refutation"] = oracle.refutation ? evidence_to_json(*oracle.refutation) : json(nullptr);
    em.finish(out);
    return kExitNegative;
}

int cmd_certify(const std::string& input, const std::string& certificate_path, bool verify_only,
                Emitter& em) {
    Hypergraph3 h = load_hypergraph(input);
    if (verify_only) {
        if (certificate_path.empty()) throw Error("--verify-only needs --certificate");
        TuranCertificate cert =
            turan_certificate_from_json(json::parse(read_file(certificate_path)));
        bool ok = verify_turan_certificate(h, cert);
        em.finish(json{{"verified", ok}});
        return ok ? kExitOk : kExitNegative;
    }
    CertifyOutcome outcome = certify_uniform_turan_1_27(h);
    json out;
    out["certified"] = outcome.certificate.has_value();
    if (outcome.certificate) {
        if (!verify_turan_certificate(h, *outcome.certificate))
            throw Error("internal: certificate failed re-verification");
        out["certificate"] = turan_certificate_to_json(*outcome.certificate);
        em.finish(out);
        return kExitOk;
    }
    out["failed_condition"] = outcome.failed_condition;
    em.finish(out);
    return kExitNegative;
}

int cmd_verify(const std::string& input, const std::string& certificate_path,
               const std::string& type, Emitter& em) {
    Hypergraph3 h = load_hypergraph(input);
    json doc = json::parse(read_file(certificate_path));
    bool ok = false;
    if (type == "turan" || (type == "auto" && doc.contains("horizontal"))) {
        ok = verify_turan_certificate(h, turan_certificate_from_json(doc));
    } else if (type == "vanishing" || (type == "auto" && doc.contains("roles"))) {
        ok = verify_vanishing_certificate(h, certificate_from_json(doc));
    } else {
        throw Error("cannot determine certificate type; pass --type turan|vanishing");
    }
    em.finish(json{{"verified", ok}});
    return ok ? kExitOk : kExitNegative;
}

int cmd_embed_palette(const std::string& input, const std::string& palette_name, Emitter& em) {
    Hypergraph3 h = load_hypergraph(input);
    auto [palette, dist] = resolve_palette(palette_name);
    auto emb = find_palette_embedding(h, palette);
    json out;
    out["embeddable"] = emb.has_value();
    out["palette"] = palette_to_json(palette, dist.empty() ? nullptr : &dist);
    if (emb) {
        if (!verify_palette_embedding(h, palette, *emb))
            throw Error("internal: embedding failed re-verification");
        out["embedding"] = embedding_to_json(*emb, palette);
    }
    em.finish(out);
    return emb ? kExitOk : kExitNegative;
}

int cmd_census(int vertices, int max_edges, int jobs, const std::string& checkpoint, bool resume,
               const std::string& output, Emitter& em) {
    CensusOptions opt;
    opt.jobs = jobs;
    opt.max_edges = max_edges;
    opt.checkpoint_path = checkpoint;
    opt.resume = resume;
    opt.progress = [](const std::string& line) { std::cerr << "census: " << line << "\n"; };
    Catalog cat = classify_catalog(find_minimal_nonvanishing(vertices, opt));
    auto s = summarize_catalog(cat);
    std::string text = catalog_text(cat);
    json sidecar = catalog_to_json(cat);
    if (!output.empty()) {
        write_file(output + ".catalog.txt", text);
        write_file(output + ".catalog.json", sidecar.dump(2));
        em.manifest.add_output(output + ".catalog.txt", text);
        em.manifest.add_output(output + ".catalog.json", sidecar.dump(2));
    }
    json out;
    out["summary"] = sidecar["summary"];
    out["catalog_digest"] = catalog_digest(cat);
    if (output.empty()) out["catalog"] = sidecar;
    em.finish(out);
    std::cerr << "census: " << s.total << " minimal, " << s.certified << " certified, "
              << s.palette_avoided << " avoided, " << s.unresolved << " unresolved, "
              << s.with_isolated_vertices << " with isolated vertices\n";
    return kExitOk;
}

int cmd_sample(int n, const std::string& palette_name, std::uint64_t seed,
               const std::string& output, Emitter& em) {
    auto [palette, dist] = resolve_palette(palette_name);
    if (dist.empty()) throw Error("palette '" + palette_name + "' carries no distribution");
    HostSample sample = sample_palette_host(n, palette, dist, seed, palette_name);
    em.manifest.seeds["sample"] = std::to_string(seed);
    std::string text = serialize_hypergraph(sample.hypergraph);
    json transcript = host_sample_transcript(sample);
    json out;
    out["n"] = n;
    out["edges"] = sample.hypergraph.edge_count();
    out["density"] = to_string(overall_density(sample.hypergraph));
    out["palette_density"] = to_string(palette_density(palette, dist));
    if (!output.empty()) {
        write_file(output + ".hg", text);
        write_file(output + ".transcript.json", transcript.dump(2));
        em.manifest.add_output(output + ".hg", text);
        em.manifest.add_output(output + ".transcript.json", transcript.dump(2));
    } else {
        out["hypergraph"] = text;
        out["transcript"] = transcript;
    }
    em.finish(out);
    return kExitOk;
}

int cmd_measure(const std::string& input, const std::string& d_str, const std::string& eps_str,
                const std::string& mode, long trials, std::uint64_t seed, Emitter& em) {
    Hypergraph3 h = load_hypergraph(input);
    bool exact = mode == "exact";
    Rational eps = parse_rational(eps_str);
    em.manifest.seeds["measure"] = std::to_string(seed);
    json out;
    out["n"] = h.n;
    out["edges"] = h.edge_count();
    out["overall_density"] = to_string(overall_density(h));
    out["mode"] = exact ? "exact" : "sampled";
    auto eld = epsilon_linear_density(h, eps, exact, trials, seed);
    out["epsilon_linear_density"] = {{"eps", to_string(eps)},
                                     {"value", to_string(eld.value)},
                                     {"exact", eld.exact},
                                     {"subsets_checked", eld.subsets_checked},
                                     {"contract", eld.exact ? "exact minimum"
                                                            : "upper bound from sampling"}};
    bool violated = false;
    if (!d_str.empty()) {
        Rational d = parse_rational(d_str);
        auto verdict = check_d_eps_dense(h, d, eps, exact, trials, seed);
        violated = verdict.violated;
        json v;
        v["d"] = to_string(d);
        v["eps"] = to_string(eps);
        v["violated"] = verdict.violated;
        v["exact"] = verdict.exact;
        v["subsets_checked"] = verdict.subsets_checked;
        v["contract"] = verdict.exact ? "all subsets checked"
                                      : "one-sided: only found violations are reported";
        if (verdict.violated) v["witness"] = verdict.witness;
        out["d_eps_dense"] = v;
    }
    em.finish(out);
    return violated ? kExitNegative : kExitOk;
}

int cmd_examples(const std::string& which, int k, const std::string& output, Emitter& em) {
    Hypergraph3 h;
    TuranCertificate cert;
    if (which == "example9") {
        std::tie(h, cert) = build_example9();
    } else if (which == "example8") {
        std::tie(h, cert) = build_example8(k);
    } else {
        throw Error("unknown example '" + which + "' (use example9 or example8)");
    }
    if (!verify_turan_certificate(h, cert))
        throw Error("internal: example certificate failed verification");
    std::string text = serialize_hypergraph(h);
    json cert_json = turan_certificate_to_json(cert);
    json out;
    out["which"] = which;
    if (which == "example8") out["k"] = k;
    out["n"] = h.n;
    out["edges"] = h.edge_count();
    if (!output.empty()) {
        write_file(output + ".hg", text);
        write_file(output + ".certificate.json", cert_json.dump(2));
        em.manifest.add_output(output + ".hg", text);
        em.manifest.add_output(output + ".certificate.json", cert_json.dump(2));
    } else {
        out["hypergraph"] = text;
        out["certificate"] = cert_json;
    }
    em.finish(out);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"uniform Turan density toolkit for 3-uniform hypergraphs"};
    app.require_subcommand(1);

    Emitter em;
    for (int i = 0; i < argc; ++i) em.manifest.argv.push_back(argv[i]);
    app.add_flag("--pretty", em.pretty, "indent JSON output");

    std::string input, certificate_path, output, palette_name = "vanishing";
    std::string verify_type = "auto", mode = "sampled", d_str, eps_str = "0";
    std::string checkpoint;
    bool verify_only = false, resume = false;
    int vertices = 7, max_edges = -1, n = 100, k = 1, jobs = default_jobs();
    long trials = 10000;
    std::uint64_t seed = 0;
    std::string which = "example9";

    auto* check = app.add_subcommand("check-vanishing", "decide the vanishing-ordering property");
    check->add_option("input", input, "hypergraph file")->required();

    auto* certify = app.add_subcommand("certify", "search for a 1/27 certificate");
    certify->add_option("input", input, "hypergraph file")->required();
    certify->add_flag("--verify-only", verify_only, "only replay a given certificate");
    certify->add_option("--certificate", certificate_path, "certificate JSON to replay");

    auto* verify = app.add_subcommand("verify", "replay a certificate against a hypergraph");
    verify->add_option("input", input, "hypergraph file")->required();
    verify->add_option("--certificate", certificate_path, "certificate JSON")->required();
    verify->add_option("--type", verify_type, "turan|vanishing|auto");

    auto* embed = app.add_subcommand("embed-palette", "search for a palette embedding");
    embed->add_option("input", input, "hypergraph file")->required();
    embed->add_option("--palette", palette_name, "builtin name or palette JSON file");

    auto* census = app.add_subcommand("census", "minimal non-vanishing census");
    census->add_option("--vertices", vertices, "labeled vertex count")->required();
    census->add_option("--max-edges", max_edges,
                       "only explore graphs with at most this many edges");
    census->add_option("--jobs", jobs, "worker threads (default TURAN_JOBS or cores)");
    census->add_option("--checkpoint", checkpoint, "checkpoint file path");
    census->add_flag("--resume", resume, "resume from the checkpoint");
    census->add_option("--output", output, "output file prefix");

    auto* sample = app.add_subcommand("sample", "sample a random palette host");
    sample->add_option("--n", n, "vertex count")->required();
    sample->add_option("--palette", palette_name, "builtin name or palette JSON file");
    sample->add_option("--seed", seed, "RNG seed");
    sample->add_option("--output", output, "output file prefix");

    auto* measure = app.add_subcommand("measure", "density measurements on a hypergraph");
    measure->add_option("input", input, "hypergraph file")->required();
    measure->add_option("--eps", eps_str, "epsilon as a rational, e.g. 1/100");
    measure->add_option("--d", d_str, "density threshold for the (d,eps)-dense check");
    measure->add_option("--mode", mode, "exact|sampled");
    measure->add_option("--trials", trials, "sampled-mode trials");
    measure->add_option("--seed", seed, "RNG seed");

    auto* examples = app.add_subcommand("examples", "emit a known certified family member");
    examples->add_option("--which", which, "example9|example8");
    examples->add_option("--k", k, "family parameter for example8");
    examples->add_option("--output", output, "output file prefix");

    CLI11_PARSE(app, argc, argv);
    em.manifest.subcommand = app.get_subcommands().front()->get_name();

    try {
        if (check->parsed()) return cmd_check_vanishing(input, em);
        if (certify->parsed()) return cmd_certify(input, certificate_path, verify_only, em);
        if (verify->parsed()) return cmd_verify(input, certificate_path, verify_type, em);
        if (embed->parsed()) return cmd_embed_palette(input, palette_name, em);
        if (census->parsed())
            return cmd_census(vertices, max_edges, jobs, checkpoint, resume, output, em);
        if (sample->parsed()) return cmd_sample(n, palette_name, seed, output, em);
        if (measure->parsed())
            return cmd_measure(input, d_str, eps_str, mode, trials, seed, em);
        if (examples->parsed()) return cmd_examples(which, k, output, em);
        std::cerr << "no subcommand\n";
        return kExitInput;
    } catch (const BoundError& e) {
        std::cerr << "bound exceeded: " << e.what() << "\n";
        return kExitBounds;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const json::exception& e) {
        std::cerr << "json error: " << e.what() << "\n";
        return kExitInput;
    }
}
