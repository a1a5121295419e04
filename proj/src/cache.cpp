#include "belab/cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "belab/canonical.hpp"
#include "json.hpp"

namespace belab {

const char* kToolVersion = "belab-0.1.0";

BettiCache BettiCache::from_env() {
    BettiCache cache;
    if (const char* dir = std::getenv("BELAB_CACHE")) cache.dir = dir;
    return cache;
}

std::string BettiCache::key_for(const Graph& g, const PolyRing& ring) const {
    uint64_t h = canonical_hash(g);
    std::ostringstream key;
    key << std::hex << h << std::dec << "-p" << ring.characteristic << "-"
        << (ring.order == MonomialOrder::degrevlex ? "drl" : "lex");
    return key.str();
}

std::optional<BettiTable> BettiCache::get(const Graph& g, const PolyRing& ring) const {
    if (dir.empty()) return std::nullopt;
    std::string key = key_for(g, ring);
    std::ifstream in(std::filesystem::path(dir) / (key + ".json"));
    if (!in) return std::nullopt;
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        nlohmann::json j = nlohmann::json::parse(buffer.str());
        if (j.at("version").get<std::string>() != kToolVersion) return std::nullopt;
        if (j.at("key").get<std::string>() != key) return std::nullopt;
        return BettiTable::from_json(j.at("betti").get<std::string>());
    } catch (const std::exception& e) {
        std::fprintf(stderr, "belab cache: dropping corrupt entry %s (%s)\n", key.c_str(), e.what());
        return std::nullopt;
    }
}

void BettiCache::put(const Graph& g, const PolyRing& ring, const BettiTable& bt) const {
    if (dir.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    std::string key = key_for(g, ring);
    nlohmann::json j;
    j["version"] = kToolVersion;
    j["key"] = key;
    j["betti"] = bt.to_json();
    auto path = std::filesystem::path(dir) / (key + ".json");
    auto tmp = std::filesystem::path(dir) / (key + ".tmp." + std::to_string(::getpid()));
    {
        std::ofstream out(tmp);
        out << j.dump();
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace belab
