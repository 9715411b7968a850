#include "spanind/cache.hpp"

#include <chrono>
#include <fstream>

#include "spanind/json_io.hpp"
#include "spanind/version.hpp"

namespace spanind {

namespace {

nlohmann::json record_to_json(const CacheRecord& rec) {
    return nlohmann::json{{"group", rec.group},     {"mode", rec.mode},
                          {"param", rec.param},     {"value", rec.value},
                          {"certificate", rec.certificate}, {"proved", rec.proved},
                          {"version", rec.version}, {"timestamp", rec.timestamp}};
}

CacheRecord record_from_json(const nlohmann::json& j) {
    CacheRecord rec;
    rec.group = j.at("group").get<std::string>();
    rec.mode = j.at("mode").get<std::string>();
    rec.param = j.at("param").get<int>();
    rec.value = j.at("value").get<int>();
    rec.certificate = j.at("certificate");
    rec.proved = j.at("proved").get<bool>();
    rec.version = j.at("version").get<std::string>();
    rec.timestamp = j.at("timestamp").get<std::int64_t>();
    return rec;
}

}  // namespace

ResultCache::ResultCache(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    if (!in) return;  // nothing cached yet
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            auto rec = record_from_json(nlohmann::json::parse(line));
            rec.stale = rec.version != kVersion;
            index_[{rec.group, rec.mode, rec.param}] = std::move(rec);
        } catch (const std::exception& e) {
            warnings_.push_back("skipping cache line " + std::to_string(lineno) + ": " +
                                e.what());
        }
    }
}

std::size_t ResultCache::size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return index_.size();
}

std::optional<CacheRecord> ResultCache::lookup(const std::string& group, const std::string& mode,
                                               int param) {
    std::lock_guard<std::mutex> lock(mutex_);
    const auto it = index_.find({group, mode, param});
    if (it == index_.end()) return std::nullopt;
    if (it->second.stale) return std::nullopt;  // recompute on demand
    try {
        const auto cert = certificate_from_json(it->second.certificate);
        if (!verify_certificate(cert).claim_ok) {
            warnings_.push_back("cached certificate failed re-verification for " + group + "/" +
                                mode + "/" + std::to_string(param));
            return std::nullopt;
        }
    } catch (const std::exception& e) {
        warnings_.push_back(std::string("cached certificate unreadable: ") + e.what());
        return std::nullopt;
    }
    return it->second;
}

void ResultCache::append(CacheRecord record) {
    std::lock_guard<std::mutex> lock(mutex_);
    if (record.timestamp == 0) {
        record.timestamp = std::chrono::duration_cast<std::chrono::seconds>(
                               std::chrono::system_clock::now().time_since_epoch())
                               .count();
    }
    if (record.version.empty()) record.version = kVersion;
    if (enabled()) {
        std::ofstream out(path_, std::ios::app);
        if (!out) throw std::runtime_error("cache path not writable: " + path_);
        out << record_to_json(record).dump() << '\n';
    }
    index_[{record.group, record.mode, record.param}] = std::move(record);
}

}  // namespace spanind
