#include "kerov/poly_cache.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "kerov/serialize.hpp"

namespace kerov {

namespace {

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

}  // namespace

PolyCache::PolyCache(std::string path) : path_(std::move(path)) {
    doc_ = nlohmann::json::object();
    doc_["entries"] = nlohmann::json::object();
    std::ifstream in(path_);
    if (!in) return;
    try {
        nlohmann::json loaded = nlohmann::json::parse(in);
        if (loaded.is_object() && loaded.contains("entries") && loaded["entries"].is_object())
            doc_ = std::move(loaded);
    } catch (const nlohmann::json::exception&) {
        // unreadable cache: start over
    }
}

std::string PolyCache::default_path() {
    if (const char* env = std::getenv("KEROV_CACHE"); env && *env) return env;
    return "kerov_cache.json";
}

std::optional<CumulantPoly> PolyCache::get(int k) const {
    const auto& entries = doc_.at("entries");
    auto it = entries.find(std::to_string(k));
    if (it == entries.end()) return std::nullopt;
    try {
        const nlohmann::json& entry = *it;
        if (entry.at("engine_version").get<std::string>() != kEngineVersion) return std::nullopt;
        std::string body = entry.at("poly").dump();
        if (fnv1a_hex(body) != entry.at("checksum").get<std::string>()) return std::nullopt;
        return poly_from_json(Family::Free, entry.at("poly"));
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void PolyCache::put(int k, const CumulantPoly& poly) {
    nlohmann::json entry;
    entry["k"] = k;
    entry["engine_version"] = kEngineVersion;
    entry["poly"] = poly_to_json(poly);
    entry["checksum"] = fnv1a_hex(entry["poly"].dump());
    doc_["entries"][std::to_string(k)] = std::move(entry);
    dirty_ = true;
}

void PolyCache::save() {
    if (!dirty_) return;
    std::ofstream out(path_);
    if (!out) return;
    out << doc_.dump() << '\n';
    dirty_ = false;
}

}  // namespace kerov
