#include "evictlab/cache.hpp"

#include <cstdlib>
#include <fstream>

#include <nlohmann/json.hpp>

#include "evictlab/core.hpp"

namespace evictlab {

std::string CacheRecord::jsonl() const {
    nlohmann::json j;
    j["graph6"] = graph6;
    if (!canonical.empty()) j["canonical"] = canonical;
    if (alpha) j["alpha"] = *alpha;
    if (gamma) j["gamma"] = *gamma;
    if (theta) j["theta"] = *theta;
    if (eviction) j["eviction"] = *eviction;
    if (eternal) j["eternal"] = *eternal;
    j["version"] = version;
    j["timestamp"] = timestamp;
    return j.dump();
}

CacheRecord CacheRecord::parse(const std::string& line) {
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.contains("graph6"))
        throw ParseError(ParseError::Kind::bad_format, "cache: bad record line");
    try {
        CacheRecord r;
        r.graph6 = j["graph6"].get<std::string>();
        if (j.contains("canonical")) r.canonical = j["canonical"].get<std::string>();
        auto opt = [&](const char* key) -> std::optional<int> {
            if (j.contains(key)) return j[key].get<int>();
            return std::nullopt;
        };
        r.alpha = opt("alpha");
        r.gamma = opt("gamma");
        r.theta = opt("theta");
        r.eviction = opt("eviction");
        r.eternal = opt("eternal");
        if (j.contains("version")) r.version = j["version"].get<std::string>();
        if (j.contains("timestamp")) r.timestamp = j["timestamp"].get<long long>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(ParseError::Kind::bad_format, std::string("cache: bad field type: ") + e.what());
    }
}

Cache::Cache(std::string path) : path_(std::move(path)) {
    load();
}

std::string Cache::default_path() {
    if (const char* env = std::getenv("EVICTLAB_CACHE"); env && *env) return env;
    return "evictlab-cache.jsonl";
}

void Cache::load() {
    records_.clear();
    std::ifstream in(path_);
    if (!in) return;  // absent cache is an empty cache
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        records_.push_back(CacheRecord::parse(line));
    }
}

const CacheRecord* Cache::find(const std::string& graph6) const {
    for (const auto& r : records_)
        if (r.graph6 == graph6) return &r;
    for (const auto& r : records_)
        if (!r.canonical.empty() && r.canonical == graph6) return &r;
    return nullptr;
}

void Cache::append(const CacheRecord& record) {
    records_.push_back(record);
    std::ofstream out(path_, std::ios::app);
    if (!out) throw Error("cache: cannot open " + path_ + " for writing");
    out << record.jsonl() << '\n';
}

void Cache::clear() {
    records_.clear();
    std::ofstream out(path_, std::ios::trunc);
    if (!out) throw Error("cache: cannot open " + path_ + " for truncation");
}

}  // namespace evictlab
