#pragma once

#include <chrono>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "uturan/sha256.hpp"

namespace uturan {

inline constexpr const char* kVersion = "0.1.0";

/// Provenance record emitted with every CLI run. The digest covers the
/// produced outputs (files or the result payload), never the wall clock, so
/// reruns with identical inputs give identical digests.
struct RunManifest {
    std::string subcommand;
    std::vector<std::string> argv;
    std::map<std::string, std::string> seeds;   // name -> value
    std::map<std::string, std::string> outputs; // path -> sha256
    double wall_clock_sec = 0;
    std::string digest;

    void add_output(const std::string& path, const std::string& content) {
        outputs[path] = Sha256::hex_digest(content);
    }

    void finalize() {
        Sha256 h;
        for (const auto& [path, d] : outputs) {
            h.update(path);
            h.update("\0", 1);
            h.update(d);
            h.update("\n", 1);
        }
        auto bytes = h.finish();
        static const char* digits = "0123456789abcdef";
        digest.clear();
        for (auto b : bytes) {
            digest.push_back(digits[b >> 4]);
            digest.push_back(digits[b & 15]);
        }
    }

    nlohmann::json to_json() const {
        return nlohmann::json{{"subcommand", subcommand}, {"argv", argv},
                              {"seeds", seeds},           {"outputs", outputs},
                              {"wall_clock_sec", wall_clock_sec}, {"digest", digest},
                              {"version", kVersion}};
    }
};

} // namespace uturan
