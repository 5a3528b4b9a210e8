#pragma once
// Content-addressed on-disk record store; writes are atomic renames.

#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "maycalc/core.hpp"

namespace maycalc {

struct CacheKey
{
    int p = 3;
    std::string module;
    Int s = 0, t = 0;
    int schema_version = 1;

    std::string str() const;
};

std::uint64_t fnv1a64(const std::string& data);

class DiskCache
{
public:
    // Environment override for the cache directory.
    static constexpr const char* kEnvVar = "MAYCALC_CACHE_DIR";

    explicit DiskCache(std::string dir);
    // Flag value if non-empty, else the environment variable, else disabled.
    static std::optional<std::string> resolve_dir(const std::string& flag);

    bool enabled() const { return enabled_; }
    const std::string& dir() const { return dir_; }

    std::optional<std::string> get(const CacheKey& key) const;
    // Returns false (and records a warning) when the record could not be stored.
    bool put(const CacheKey& key, const std::string& content) const;

    std::string path_for(const CacheKey& key) const;
    std::vector<std::string> warnings() const;

private:
    void warn(const std::string& w) const;

    std::string dir_;
    bool enabled_ = false;
    mutable std::mutex mu_;
    mutable std::vector<std::string> warnings_;
};

}  // namespace maycalc
