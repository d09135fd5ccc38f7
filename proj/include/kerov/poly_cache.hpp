#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "kerov/cumulant_poly.hpp"

namespace kerov {

inline constexpr const char* kEngineVersion = "1.0.0";

// Single-file JSON cache of computed Kerov polynomials, keyed by k. Entries
// carry the engine version and a checksum; anything stale is recomputed.
class PolyCache {
public:
    explicit PolyCache(std::string path);

    // KEROV_CACHE env var, else "kerov_cache.json" in the working directory.
    static std::string default_path();

    std::optional<CumulantPoly> get(int k) const;
    void put(int k, const CumulantPoly& poly);
    bool dirty() const { return dirty_; }
    void save();  // best effort; never throws

private:
    std::string path_;
    nlohmann::json doc_;
    bool dirty_ = false;
};

}  // namespace kerov
