#pragma once

#include <optional>
#include <string>

#include "belab/graph.hpp"
#include "belab/resolution.hpp"

namespace belab {

extern const char* kToolVersion;

/// Content-addressed Betti table cache.  Keys combine the canonical graph
/// hash with the characteristic, order, and tool version, so isomorphic
/// graphs share entries and stale versions miss.
struct BettiCache {
    std::string dir;  // empty = disabled

    static BettiCache from_env();  // BELAB_CACHE

    std::string key_for(const Graph& g, const PolyRing& ring) const;
    std::optional<BettiTable> get(const Graph& g, const PolyRing& ring) const;
    void put(const Graph& g, const PolyRing& ring, const BettiTable& bt) const;  // atomic write
};

}  // namespace belab
