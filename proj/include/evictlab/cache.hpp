#pragma once

#include <optional>
#include <string>
#include <vector>

namespace evictlab {

inline constexpr const char* solver_version = "evictlab-0.1.0";

/// One JSON line per solved graph. Keyed by the verbatim graph6 record, with
/// a canonical-form alias when the brute-force canonicalizer applies (n <= 8).
struct CacheRecord {
    std::string graph6;
    std::string canonical;  // empty when n > 8
    std::optional<int> alpha, gamma, theta, eviction, eternal;
    std::string version;
    long long timestamp = 0;  // seconds since epoch

    std::string jsonl() const;
    static CacheRecord parse(const std::string& line);
};

class Cache {
public:
    explicit Cache(std::string path);

    /// $EVICTLAB_CACHE, or ./evictlab-cache.jsonl
    static std::string default_path();

    const std::string& path() const { return path_; }
    const std::vector<CacheRecord>& records() const { return records_; }

    /// Lookup by verbatim graph6, falling back to the canonical alias.
    const CacheRecord* find(const std::string& graph6) const;

    void append(const CacheRecord& record);  // persists immediately
    void clear();                            // truncates the file

private:
    void load();

    std::string path_;
    std::vector<CacheRecord> records_;
};

}  // namespace evictlab
