#include "maycalc/disk_cache.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include <unistd.h>

namespace fs = std::filesystem;

namespace maycalc {

std::string CacheKey::str() const
{
    return "p=" + std::to_string(p) + ";module=" + module + ";s=" + std::to_string(s) + ";t=" + std::to_string(t) +
           ";v=" + std::to_string(schema_version);
}

std::uint64_t fnv1a64(const std::string& data)
{
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

std::string hex(std::uint64_t v)
{
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << v;
    return os.str();
}

}  // namespace

DiskCache::DiskCache(std::string dir) : dir_(std::move(dir))
{
    std::error_code ec;
    fs::create_directories(dir_, ec);
    enabled_ = !ec && fs::is_directory(dir_, ec);
    if (!enabled_)
        warn("cache directory '" + dir_ + "' unusable; continuing without cache");
}

std::optional<std::string> DiskCache::resolve_dir(const std::string& flag)
{
    if (!flag.empty())
        return flag;
    if (const char* env = std::getenv(kEnvVar); env && *env)
        return std::string(env);
    return std::nullopt;
}

std::string DiskCache::path_for(const CacheKey& key) const
{
    return (fs::path(dir_) / (key.module + "-" + hex(fnv1a64(key.str())) + ".rec")).string();
}

void DiskCache::warn(const std::string& w) const
{
    std::lock_guard lk(mu_);
    warnings_.push_back(w);
}

std::vector<std::string> DiskCache::warnings() const
{
    std::lock_guard lk(mu_);
    return warnings_;
}

// Record layout: "maycalc-cache <key> <content-hash>\n<content>"
std::optional<std::string> DiskCache::get(const CacheKey& key) const
{
    if (!enabled_)
        return std::nullopt;
    const std::string path = path_for(key);
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return std::nullopt;
    std::string header;
    if (!std::getline(in, header)) {
        warn("corrupted cache record " + path);
        return std::nullopt;
    }
    std::ostringstream body;
    body << in.rdbuf();
    std::string content = body.str();
    std::istringstream hs(header);
    std::string magic, k, h;
    hs >> magic >> k >> h;
    if (magic != "maycalc-cache") {
        warn("corrupted cache record " + path);
        return std::nullopt;
    }
    if (k != key.str()) {
        warn("corrupted cache record " + path + " (key mismatch)");
        return std::nullopt;
    }
    if (h != hex(fnv1a64(content))) {
        warn("corrupted cache record " + path + " (hash mismatch)");
        return std::nullopt;
    }
    return content;
}

bool DiskCache::put(const CacheKey& key, const std::string& content) const
{
    if (!enabled_)
        return false;
    const std::string path = path_for(key);
    if (auto existing = get(key); existing && *existing == content)
        return true;
    static std::atomic<unsigned long> counter{0};
    std::ostringstream tmpname;
    tmpname << path << ".tmp." << ::getpid() << "." << std::hash<std::thread::id>()(std::this_thread::get_id()) << "."
            << counter++;
    const std::string tmp = tmpname.str();
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            warn("cannot write cache record " + tmp);
            return false;
        }
        out << "maycalc-cache " << key.str() << " " << hex(fnv1a64(content)) << "\n" << content;
        if (!out) {
            warn("cannot write cache record " + tmp);
            std::remove(tmp.c_str());
            return false;
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        warn("cannot rename cache record into place: " + ec.message());
        std::remove(tmp.c_str());
        return false;
    }
    return true;
}

}  // namespace maycalc
