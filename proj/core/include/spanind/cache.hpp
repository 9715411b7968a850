#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

namespace spanind {

/**
 * One line of the append-only result cache. Records are line-delimited
 * JSON so a crash can at worst truncate the final line; corrupted lines
 * are skipped with a warning on load. Records whose tool version does
 * not match the current one are kept but marked stale and recomputed on
 * demand.
 */
struct CacheRecord {
    std::string group;
    std::string mode;  // "p" or "q"
    int param = 0;
    int value = 0;
    nlohmann::json certificate;
    bool proved = false;
    std::string version;
    std::int64_t timestamp = 0;
    bool stale = false;
};

class ResultCache {
public:
    ResultCache() = default;  // disabled cache
    explicit ResultCache(std::string path);

    bool enabled() const { return !path_.empty(); }
    std::size_t size() const;
    const std::vector<std::string>& warnings() const { return warnings_; }

    /**
     * Returns the stored record for the key if present, fresh, and its
     * certificate re-verifies; otherwise nullopt. Failing certificates
     * are dropped with a warning.
     */
    std::optional<CacheRecord> lookup(const std::string& group, const std::string& mode,
                                      int param);

    /// Appends a record to the file and the in-memory index.
    void append(CacheRecord record);

private:
    using Key = std::tuple<std::string, std::string, int>;

    std::string path_;
    std::map<Key, CacheRecord> index_;
    std::vector<std::string> warnings_;
    mutable std::mutex mutex_;
};

}  // namespace spanind
