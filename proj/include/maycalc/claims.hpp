#pragma once
// Claims files: JSON arrays of checkable statements, evaluated against the library.

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "json.hpp"
#include "maycalc/certify.hpp"

namespace maycalc {

class DiskCache;

enum class ClaimStatus { Pass, Fail, Uncertified, SkippedConjectural, Error };
const char* status_name(ClaimStatus s);

struct ClaimResult
{
    std::size_t index = 0;
    std::string kind;
    std::string source;
    ClaimStatus status = ClaimStatus::Error;
    std::string computed;
    std::string detail;
};

struct ClaimsReport
{
    std::vector<ClaimResult> results;
    std::size_t count(ClaimStatus s) const;
    // 0 when nothing failed, 1 otherwise.
    int exit_code() const;
    std::string text() const;
};

struct RunOptions
{
    bool include_conjectures = false;
    unsigned workers = 0;  // 0 = hardware concurrency
    const DiskCache* cache = nullptr;
};

const std::vector<std::string>& claim_kinds();

// Throws ParseError (with line/column) when the document is not valid JSON.
nlohmann::json parse_claims_text(const std::string& text);
nlohmann::json load_claims_file(const std::string& path);

ClaimsReport run_claims(const nlohmann::json& claims, const RunOptions& opt = {});
ClaimsReport run_claims_file(const std::string& path, const RunOptions& opt = {});

// Engines shared between claims, one per prime.
class EnginePool
{
public:
    explicit EnginePool(const DiskCache* cache = nullptr) : cache_(cache) {}
    const SphereExt& get(int p);

private:
    const DiskCache* cache_;
    std::mutex mu_;
    std::map<int, std::unique_ptr<SphereExt>> engines_;
};

ClaimResult evaluate_claim(const nlohmann::json& claim, std::size_t index, EnginePool& pool,
                           const RunOptions& opt = {});

}  // namespace maycalc
