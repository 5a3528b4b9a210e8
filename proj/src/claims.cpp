#include "maycalc/claims.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "maycalc/disk_cache.hpp"
#include "maycalc/expr.hpp"
#include "maycalc/greek.hpp"
#include "maycalc/les.hpp"
#include "maycalc/serialize.hpp"

namespace maycalc {

using nlohmann::json;

const char* status_name(ClaimStatus s)
{
    switch (s) {
    case ClaimStatus::Pass: return "pass";
    case ClaimStatus::Fail: return "fail";
    case ClaimStatus::Uncertified: return "uncertified";
    case ClaimStatus::SkippedConjectural: return "skipped-conjectural";
    case ClaimStatus::Error: return "error";
    }
    return "?";
}

std::size_t ClaimsReport::count(ClaimStatus s) const
{
    return static_cast<std::size_t>(
        std::count_if(results.begin(), results.end(), [s](const ClaimResult& r) { return r.status == s; }));
}

int ClaimsReport::exit_code() const
{
    return count(ClaimStatus::Fail) + count(ClaimStatus::Error) ? 1 : 0;
}

std::string ClaimsReport::text() const
{
    std::ostringstream os;
    for (const auto& r : results) {
        os << "#" << r.index << " " << status_name(r.status) << " " << r.kind;
        if (!r.source.empty())
            os << " [" << r.source << "]";
        if (!r.computed.empty())
            os << " computed=" << r.computed;
        if (!r.detail.empty())
            os << " (" << r.detail << ")";
        os << "\n";
    }
    os << "summary: " << count(ClaimStatus::Pass) << " pass, " << count(ClaimStatus::Fail) << " fail, "
       << count(ClaimStatus::Uncertified) << " uncertified, " << count(ClaimStatus::SkippedConjectural)
       << " skipped-conjectural, " << count(ClaimStatus::Error) << " error\n";
    return os.str();
}

const std::vector<std::string>& claim_kinds()
{
    static const std::vector<std::string> k = {"e1_basis",  "e2_dim",    "ext_vanishing", "dr_window",
                                               "les_dim",   "beta_list", "ext0_list",     "ext1_bpk_list",
                                               "stem",      "thom"};
    return k;
}

json parse_claims_text(const std::string& text)
{
    try {
        json j = json::parse(text);
        if (!j.is_array())
            throw Error(ErrorCode::ParseError, "claims document must be a JSON array (line 1, column 1)");
        return j;
    }
    catch (const json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
            if (text[k] == '\n') {
                ++line;
                col = 1;
            }
            else
                ++col;
        }
        throw Error(ErrorCode::ParseError,
                    "claims parse error at line " + std::to_string(line) + ", column " + std::to_string(col));
    }
}

json load_claims_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::IOError, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_claims_text(ss.str());
}

const SphereExt& EnginePool::get(int p)
{
    std::lock_guard lk(mu_);
    auto it = engines_.find(p);
    if (it == engines_.end()) {
        PrimeContext ctx(p);
        ReportStore st = cache_ ? disk_report_store(*cache_) : ReportStore{};
        it = engines_.emplace(p, std::make_unique<SphereExt>(ctx, st)).first;
    }
    return *it->second;
}

namespace {

struct Ctx
{
    const json& c;
    PrimeContext pc;
    std::map<std::string, Int> vars;

    Int num(const std::string& key) const
    {
        if (!c.contains(key))
            throw Error(ErrorCode::InvalidParams, "missing parameter '" + key + "'");
        return value(c.at(key));
    }
    Int num_or(const std::string& key, Int dflt) const { return c.contains(key) ? num(key) : dflt; }
    Int value(const json& v) const
    {
        if (v.is_number_integer())
            return v.get<Int>();
        if (v.is_string())
            return eval_expr(v.get<std::string>(), pc, vars);
        throw Error(ErrorCode::InvalidParams, "expected integer or expression, got " + v.dump());
    }
};

PrimeContext prime_of(const json& c)
{
    if (!c.contains("p") || !c.at("p").is_number_integer())
        throw Error(ErrorCode::InvalidParams, "claim needs an integer 'p'");
    return PrimeContext(c.at("p").get<int>());
}

std::map<std::string, Int> vars_of(const json& c, const PrimeContext& pc)
{
    std::map<std::string, Int> v;
    if (c.contains("vars"))
        for (const auto& [k, x] : c.at("vars").items()) {
            if (x.is_number_integer())
                v[k] = x.get<Int>();
            else
                v[k] = eval_expr(x.get<std::string>(), pc, v);
        }
    return v;
}

std::string join(const std::vector<std::string>& xs)
{
    json j = xs;
    return j.dump();
}

void compare_sets(ClaimResult& r, std::vector<std::string> got, std::vector<std::string> want)
{
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    r.computed = join(got);
    r.status = got == want ? ClaimStatus::Pass : ClaimStatus::Fail;
    if (r.status == ClaimStatus::Fail)
        r.detail = "expected " + join(want);
}

std::vector<std::string> strings(const json& j)
{
    if (!j.is_array())
        throw Error(ErrorCode::InvalidParams, "expectation must be a list of strings");
    return j.get<std::vector<std::string>>();
}

void eval_ext_vanishing(ClaimResult& r, const SphereExt& ext, Int s, Int t, const json& expect)
{
    Certificate c = ext.dim(s, t);
    r.computed = c.label();
    const bool certified = c.certified();
    if (expect.is_string() && expect == "zero") {
        r.status = c.vanishes() ? ClaimStatus::Pass : certified ? ClaimStatus::Fail : ClaimStatus::Uncertified;
    }
    else if (expect.is_string() && expect == "nonzero") {
        r.status = c.vanishes() ? ClaimStatus::Fail
                                : certified ? (c.dim >= 1 ? ClaimStatus::Pass : ClaimStatus::Fail)
                                            : ClaimStatus::Uncertified;
    }
    else if (expect.is_number_integer()) {
        const auto d = expect.get<std::size_t>();
        if (certified)
            r.status = c.dim == d ? ClaimStatus::Pass : ClaimStatus::Fail;
        else
            r.status = c.dim < d ? ClaimStatus::Fail : ClaimStatus::Uncertified;
    }
    else
        throw Error(ErrorCode::InvalidParams, "ext_vanishing expects \"zero\", \"nonzero\" or an integer");
}

void eval_window(ClaimResult& r, const SphereExt& ext, const Ctx& x)
{
    const Int s = x.num("s"), t = x.num("t");
    const int r_min = static_cast<int>(x.num_or("r_min", 2)), r_max = static_cast<int>(x.num_or("r_max", r_min));
    WindowReport w = adams_dr_window(ext, s, t, r_min, r_max);
    const json& e = x.c.at("expect");
    std::ostringstream os;
    os << "not_boundary=" << w.not_boundary << " permanent=" << w.permanent_up_to_rmax
       << " live_targets=" << json(w.live_targets).dump();
    r.computed = os.str();
    bool fail = false, unsure = false;
    // A non-vanishing answer is only "certainly nonzero" when the cell is dim-certified.
    auto live_certain = [&](const Certificate& c) { return !c.vanishes() && ext.dim(c.s, c.t).certified(); };
    if (e.contains("not_boundary")) {
        if (e.at("not_boundary").get<bool>() != w.not_boundary) {
            if (w.not_boundary)
                fail = true;
            else {
                bool certain = false;
                for (Int rr = 2; rr <= s; ++rr)
                    certain = certain || live_certain(ext.vanishing(s - rr, t - rr + 1));
                (certain ? fail : unsure) = true;
            }
        }
    }
    if (e.contains("permanent")) {
        if (e.at("permanent").get<bool>() != w.permanent_up_to_rmax) {
            if (w.permanent_up_to_rmax)
                fail = true;
            else {
                bool certain = false;
                for (const auto& en : w.entries)
                    certain = certain || live_certain(en.target);
                (certain ? fail : unsure) = true;
            }
        }
    }
    if (e.contains("live_targets")) {
        auto want = e.at("live_targets").get<std::vector<int>>();
        if (want != w.live_targets)
            fail = true;
    }
    r.status = fail ? ClaimStatus::Fail : unsure ? ClaimStatus::Uncertified : ClaimStatus::Pass;
}

void eval_les(ClaimResult& r, const SphereExt& ext, const Ctx& x)
{
    const Spectrum sp = parse_spectrum(x.c.at("spectrum").get<std::string>());
    const Column col = parse_column(x.c.value("column", std::string("cohomology")));
    const Int s = x.num("s"), t = x.num("t");
    SphereTable tab = table_for(ext, sp, col, s, t);
    DimInterval d = ext_dims(tab, sp, col, s, t);
    r.computed = d.str();
    const json& e = x.c.at("expect");
    if (e.contains("exact")) {
        const Int v = e.at("exact");
        r.status = d.exact() && d.lo == v ? ClaimStatus::Pass : d.contains(v) ? ClaimStatus::Uncertified
                                                                             : ClaimStatus::Fail;
    }
    else if (e.contains("at_least")) {
        const Int v = e.at("at_least");
        r.status = d.lo >= v ? ClaimStatus::Pass : d.hi < v ? ClaimStatus::Fail : ClaimStatus::Uncertified;
    }
    else if (e.contains("at_most")) {
        const Int v = e.at("at_most");
        r.status = d.hi <= v ? ClaimStatus::Pass : d.lo > v ? ClaimStatus::Fail : ClaimStatus::Uncertified;
    }
    else
        throw Error(ErrorCode::InvalidParams, "les_dim expects {exact|at_least|at_most: n}");
}

void eval_thom(ClaimResult& r, const Ctx& x)
{
    const std::string idx = x.c.at("index");
    const std::string want = x.c.at("expect");
    std::string got;
    try {
        NamedClass c = idx.rfind("gamma", 0) == 0 ? thom_image(parse_gamma(idx), x.pc) : thom_image(parse_beta(idx), x.pc);
        got = c.display();
    }
    catch (const Error& e) {
        if (e.code() != ErrorCode::NoDictionaryEntry)
            throw;
        got = "none";
    }
    r.computed = got;
    r.status = got == want ? ClaimStatus::Pass : ClaimStatus::Fail;
}

}  // namespace

ClaimResult evaluate_claim(const json& claim, std::size_t index, EnginePool& pool, const RunOptions& opt)
{
    ClaimResult r;
    r.index = index;
    try {
        if (!claim.is_object())
            throw Error(ErrorCode::InvalidParams, "claim must be an object");
        r.kind = claim.value("kind", std::string());
        r.source = claim.value("source", std::string());
        if (claim.value("conjectural", false) && !opt.include_conjectures) {
            r.status = ClaimStatus::SkippedConjectural;
            return r;
        }
        if (std::find(claim_kinds().begin(), claim_kinds().end(), r.kind) == claim_kinds().end())
            throw Error(ErrorCode::InvalidParams, "unknown claim kind '" + r.kind + "'");
        PrimeContext pc = prime_of(claim);
        Ctx x{claim, pc, vars_of(claim, pc)};
        const json& expect = claim.at("expect");
        const SphereExt& ext = pool.get(pc.p());

        if (r.kind == "e1_basis") {
            std::vector<std::string> got, want;
            for (const auto& m : enumerate_basis(pc, x.num("s"), x.num("t")))
                got.push_back(to_string(m));
            for (const auto& w : strings(expect)) {
                Monomial m = parse_monomial(w, pc);
                m.coeff = 1;
                want.push_back(to_string(m));
            }
            compare_sets(r, got, want);
        }
        else if (r.kind == "e2_dim") {
            auto rep = ext.e2(x.num("s"), x.num("t"));
            r.computed = std::to_string(rep->e2_total);
            r.status = static_cast<Int>(rep->e2_total) == x.value(expect) ? ClaimStatus::Pass : ClaimStatus::Fail;
        }
        else if (r.kind == "ext_vanishing")
            eval_ext_vanishing(r, ext, x.num("s"), x.num("t"), expect);
        else if (r.kind == "dr_window")
            eval_window(r, ext, x);
        else if (r.kind == "les_dim")
            eval_les(r, ext, x);
        else if (r.kind == "beta_list") {
            std::vector<std::string> got;
            for (const auto& b : enumerate_beta(pc, x.num("t")))
                got.push_back(to_string(b));
            compare_sets(r, got, strings(expect));
        }
        else if (r.kind == "ext0_list") {
            std::vector<std::string> got;
            for (const auto& g : enumerate_ext0_KR(pc, static_cast<int>(x.num("n")), x.num_or("t", 1)))
                got.push_back(to_string(g));
            compare_sets(r, got, strings(expect));
        }
        else if (r.kind == "ext1_bpk_list") {
            std::vector<std::string> got;
            for (const auto& g : enumerate_ext1_BPK(pc, static_cast<int>(x.num("n"))).generators)
                got.push_back(to_string(g));
            compare_sets(r, got, strings(expect));
        }
        else if (r.kind == "stem") {
            std::map<std::string, Int> params;
            if (claim.contains("params"))
                for (const auto& [k, v] : claim.at("params").items())
                    params[k] = x.value(v);
            StemResult st = stem_of(claim.at("family").get<std::string>(), params, pc);
            r.computed = std::to_string(st.stem);
            r.status = st.stem == x.value(expect) ? ClaimStatus::Pass : ClaimStatus::Fail;
        }
        else if (r.kind == "thom")
            eval_thom(r, x);
    }
    catch (const Error& e) {
        r.status = ClaimStatus::Error;
        r.detail = std::string(error_code_name(e.code())) + ": " + e.what();
    }
    catch (const std::exception& e) {
        r.status = ClaimStatus::Error;
        r.detail = e.what();
    }
    return r;
}

ClaimsReport run_claims(const json& claims, const RunOptions& opt)
{
    ClaimsReport rep;
    rep.results.resize(claims.size());
    EnginePool pool(opt.cache);
    unsigned n = opt.workers ? opt.workers : std::max(1u, std::thread::hardware_concurrency());
    n = std::min<unsigned>(n, static_cast<unsigned>(std::max<std::size_t>(1, claims.size())));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t k; (k = next++) < claims.size();)
            rep.results[k] = evaluate_claim(claims[k], k, pool, opt);
    };
    std::vector<std::thread> th;
    for (unsigned k = 1; k < n; ++k)
        th.emplace_back(work);
    work();
    for (auto& t : th)
        t.join();
    return rep;
}

ClaimsReport run_claims_file(const std::string& path, const RunOptions& opt)
{
    return run_claims(load_claims_file(path), opt);
}

}  // namespace maycalc
