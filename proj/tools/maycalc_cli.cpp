// maycalc: May E1/E2 queries, Ext certificates, LES intervals, Greek-letter
// bookkeeping, charts and the claims verifier.

#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "maycalc/certify.hpp"
#include "maycalc/chart.hpp"
#include "maycalc/claims.hpp"
#include "maycalc/disk_cache.hpp"
#include "maycalc/expr.hpp"
#include "maycalc/greek.hpp"
#include "maycalc/les.hpp"
#include "maycalc/serialize.hpp"

using namespace maycalc;
using nlohmann::json;

namespace {

struct Common
{
    int prime = 5;
    std::string cache_dir;
};

struct Bidegree
{
    std::string s = "0", t = "0";
};

void add_common(CLI::App* sub, Common& c)
{
    sub->add_option("-p,--prime", c.prime, "odd prime")->default_val(5);
    sub->add_option("--cache-dir", c.cache_dir,
                    std::string("cache directory (default: $") + DiskCache::kEnvVar + ")");
}

void add_bidegree(CLI::App* sub, Bidegree& b)
{
    sub->add_option("-s,--s", b.s, "homological degree (expression)")->required();
    sub->add_option("-t,--t", b.t, "internal degree (expression in p, q)")->required();
}

std::unique_ptr<DiskCache> open_cache(const Common& c)
{
    if (auto dir = DiskCache::resolve_dir(c.cache_dir))
        return std::make_unique<DiskCache>(*dir);
    return nullptr;
}

SphereExt engine(const PrimeContext& ctx, const std::unique_ptr<DiskCache>& cache)
{
    return SphereExt(ctx, cache ? disk_report_store(*cache) : ReportStore{});
}

void flush_warnings(const std::unique_ptr<DiskCache>& cache)
{
    if (cache)
        for (const auto& w : cache->warnings())
            std::cerr << "warning: " << w << "\n";
}

std::map<std::string, Int> parse_assignments(const std::vector<std::string>& kvs, const PrimeContext& ctx)
{
    std::map<std::string, Int> out;
    for (const auto& kv : kvs) {
        auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
            throw Error(ErrorCode::ParseError, "expected name=value, got '" + kv + "'");
        out[kv.substr(0, eq)] = eval_expr(kv.substr(eq + 1), ctx, out);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"May spectral sequence and Ext bookkeeping at odd primes"};
    app.require_subcommand(1);
    Common common;
    Bidegree bd;
    bool as_json = false;

    auto* basis = app.add_subcommand("basis", "E1 basis in bidegree (s,t)");
    add_common(basis, common);
    add_bidegree(basis, bd);

    std::string element_text;
    auto* d1c = app.add_subcommand("d1", "apply the May d1 to an element");
    add_common(d1c, common);
    d1c->add_option("element", element_text, "e.g. \"a1 h[1,0]\" or \"h[2,0] + 2 a0 h[1,1]\"")->required();

    bool reversed = false;
    auto* e2c = app.add_subcommand("e2", "E2 dimensions and representatives at (s,t)");
    add_common(e2c, common);
    add_bidegree(e2c, bd);
    e2c->add_flag("--reversed", reversed, "recompute with the generator order reversed");
    e2c->add_flag("--json", as_json);

    bool with_basis = false;
    auto* vanish = app.add_subcommand("vanish", "vanishing and dimension certificate for Ext^{s,t}");
    add_common(vanish, common);
    add_bidegree(vanish, bd);
    vanish->add_flag("--json", as_json);
    vanish->add_flag("--basis", with_basis, "include the E2 basis in JSON output");

    int r_min = 2, r_max = 2;
    auto* window = app.add_subcommand("window", "Adams d_r source/target window around (s,t)");
    add_common(window, common);
    add_bidegree(window, bd);
    window->add_option("--r-min", r_min)->default_val(2);
    window->add_option("--r-max", r_max)->default_val(2);
    window->add_flag("--json", as_json);

    std::string spectrum = "M", column = "cohomology";
    auto* les = app.add_subcommand("les", "Ext dimension interval for M, L or K");
    add_common(les, common);
    add_bidegree(les, bd);
    les->add_option("-x,--spectrum", spectrum, "sphere|M|L|K")->default_val("M");
    les->add_option("-c,--column", column, "cohomology|homology")->default_val("cohomology");
    les->add_flag("--json", as_json);

    std::string beta_t, ext0_n, ext0_t = "1", ext1_n, thom_index;
    bool strict = false;
    auto* greek = app.add_subcommand("greek", "Greek-letter generator lists and Thom images");
    add_common(greek, common);
    greek->add_option("--beta", beta_t, "list admissible beta indices with internal degree T");
    greek->add_flag("--strict", strict, "use b <= s instead of b <= p^s when a = 1");
    greek->add_option("--ext0", ext0_n, "Ext^0 generators in degree t p^n (p+1) q for this n");
    greek->add_option("--ext0-t", ext0_t, "multiplier t for --ext0")->default_val("1");
    greek->add_option("--ext1-bpk", ext1_n, "Ext^1 generators over BP_*K in degree p^n q for this n");
    greek->add_option("--thom", thom_index, "Thom image of beta[a,s,b,c] or gamma[t,n,s,i]");

    std::string family;
    std::vector<std::string> params;
    auto* stems = app.add_subcommand("stems", "stem of a named family; without a family, list the families");
    add_common(stems, common);
    stems->add_option("family", family);
    stems->add_option("--param", params, "name=value (repeatable)");

    ChartWindow cw;
    std::string format = "json", out_path;
    auto* chart = app.add_subcommand("chart", "emit a sphere Ext chart");
    add_common(chart, common);
    chart->add_option("--s-min", cw.s_min)->default_val(0);
    chart->add_option("--s-max", cw.s_max)->required();
    chart->add_option("--t-min", cw.t_min)->default_val(0);
    chart->add_option("--t-max", cw.t_max)->required();
    chart->add_option("--max-cells", cw.max_cells)->default_val(500000);
    chart->add_option("-f,--format", format, "json|svg|tsv")->default_val("json");
    chart->add_option("-o,--output", out_path, "output file")->required();

    std::string claims_path;
    RunOptions run_opt;
    auto* verify = app.add_subcommand("verify", "evaluate a claims file");
    add_common(verify, common);
    verify->add_option("claims", claims_path, "claims JSON file")->required();
    verify->add_flag("--include-conjectures", run_opt.include_conjectures);
    verify->add_option("-j,--workers", run_opt.workers, "worker threads (0 = all cores)")->default_val(0);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const PrimeContext ctx(common.prime);
        auto cache = open_cache(common);
        auto S = [&] { return eval_expr(bd.s, ctx); };
        auto T = [&] { return eval_expr(bd.t, ctx); };
        int rc = 0;

        if (*basis) {
            const Int s = S(), t = T();
            for (const auto& m : enumerate_basis(ctx, s, t))
                std::cout << to_string(m) << "\tu=" << tridegree(m, ctx).u << "\n";
        }
        else if (*d1c) {
            std::cout << to_string(d1(parse_element(element_text, ctx), ctx)) << "\n";
        }
        else if (*e2c) {
            const Int s = S(), t = T();
            E2Report r = reversed ? e2_at(ctx, s, t, {true}) : *engine(ctx, cache).e2(s, t);
            if (as_json)
                std::cout << to_json(r, ctx).dump(2) << "\n";
            else {
                std::cout << "E2^{" << s << "," << t << "}: e1=" << r.e1_total << " e2=" << r.e2_total << "\n";
                for (const auto& [u, b] : r.per_weight) {
                    if (b.e1_dim() == 0)
                        continue;
                    std::cout << "  u=" << u << " e1=" << b.e1_dim() << " cycles=" << b.cycle_dim
                              << " boundaries=" << b.boundary_dim << " e2=" << b.e2_dim << "\n";
                    for (const auto& x : b.representatives)
                        std::cout << "    " << to_string(x) << "\n";
                }
            }
        }
        else if (*vanish) {
            auto ext = engine(ctx, cache);
            Certificate c = ext.dim(S(), T());
            if (as_json)
                std::cout << to_json(c, with_basis).dump(2) << "\n";
            else
                std::cout << "Ext^{" << c.s << "," << c.t << "}: " << c.label() << "\n";
        }
        else if (*window) {
            auto ext = engine(ctx, cache);
            WindowReport w = adams_dr_window(ext, S(), T(), r_min, r_max);
            if (as_json)
                std::cout << to_json(w).dump(2) << "\n";
            else {
                for (const auto& e : w.entries) {
                    std::cout << "r=" << e.r << " target (" << e.target.s << "," << e.target.t
                              << "): " << e.target.label();
                    if (e.source)
                        std::cout << "  source (" << e.source->s << "," << e.source->t << "): " << e.source->label();
                    std::cout << "\n";
                }
                std::cout << "not_boundary=" << (w.not_boundary ? "yes" : "no")
                          << " permanent_through_r_max=" << (w.permanent_up_to_rmax ? "yes" : "no") << "\n";
            }
        }
        else if (*les) {
            auto ext = engine(ctx, cache);
            const Spectrum x = parse_spectrum(spectrum);
            const Column col = parse_column(column);
            const Int s = S(), t = T();
            SphereTable tab = table_for(ext, x, col, s, t);
            DimInterval d = ext_dims(tab, x, col, s, t);
            if (as_json)
                std::cout << to_json(d, x, s, t).dump(2) << "\n";
            else
                std::cout << "Ext^{" << s << "," << t << "}(" << spectrum_name(x) << "): " << d.str() << "\n";
        }
        else if (*greek) {
            bool any = false;
            if (!beta_t.empty()) {
                any = true;
                for (const auto& b : enumerate_beta(ctx, eval_expr(beta_t, ctx), {strict}))
                    std::cout << to_string(b) << "\n";
            }
            if (!ext0_n.empty()) {
                any = true;
                for (const auto& g : enumerate_ext0_KR(ctx, static_cast<int>(eval_expr(ext0_n, ctx)),
                                                       eval_expr(ext0_t, ctx)))
                    std::cout << to_string(g) << "\n";
            }
            if (!ext1_n.empty()) {
                any = true;
                Ext1Result r = enumerate_ext1_BPK(ctx, static_cast<int>(eval_expr(ext1_n, ctx)));
                for (const auto& g : r.generators)
                    std::cout << to_string(g) << "\n";
                for (const auto& n : r.notes)
                    std::cout << "# " << n << "\n";
            }
            if (!thom_index.empty()) {
                any = true;
                NamedClass c = thom_index.rfind("gamma", 0) == 0 ? thom_image(parse_gamma(thom_index), ctx)
                                                                 : thom_image(parse_beta(thom_index), ctx);
                std::cout << c.display() << " in Ext^{" << c.s << "," << c.t << "}\n";
            }
            if (!any)
                throw Error(ErrorCode::InvalidParams, "greek needs one of --beta, --ext0, --ext1-bpk, --thom");
        }
        else if (*stems) {
            if (family.empty()) {
                for (const auto& f : stem_families())
                    std::cout << f << "\n";
            }
            else {
                StemResult r = stem_of(family, parse_assignments(params, ctx), ctx);
                std::cout << "stem " << r.stem;
                if (r.bidegree)
                    std::cout << " at (s,t) = (" << r.bidegree->first << "," << r.bidegree->second << ")";
                if (r.conjectural)
                    std::cout << " [conjectural]";
                if (!r.metadata.empty())
                    std::cout << " [" << r.metadata << "]";
                std::cout << "\n";
            }
        }
        else if (*chart) {
            auto ext = engine(ctx, cache);
            emit_chart(build_chart(ext, cw), format, out_path);
        }
        else if (*verify) {
            run_opt.cache = cache.get();
            ClaimsReport rep = run_claims_file(claims_path, run_opt);
            std::cout << rep.text();
            rc = rep.exit_code();
        }
        flush_warnings(cache);
        return rc;
    }
    catch (const Error& e) {
        std::cerr << "error (" << error_code_name(e.code()) << "): " << e.what() << "\n";
        switch (e.code()) {
        case ErrorCode::ParseError:
        case ErrorCode::InvalidPrime:
        case ErrorCode::UnknownName:
        case ErrorCode::UnknownFamily:
        case ErrorCode::InvalidParams:
        case ErrorCode::InvalidRange:
            return 2;
        default:
            return 1;
        }
    }
    catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
