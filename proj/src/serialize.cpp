#include "maycalc/serialize.hpp"

#include "maycalc/disk_cache.hpp"

namespace maycalc {

using nlohmann::json;

json to_json(const E2Report& r, const PrimeContext& ctx)
{
    json weights = json::array();
    for (const auto& [u, b] : r.per_weight) {
        json reps = json::array(), basis = json::array(), bnd = json::array();
        for (const auto& e : b.representatives)
            reps.push_back(to_string(e));
        for (const auto& k : b.basis)
            basis.push_back(to_string(Monomial{k, 1}));
        for (const auto& e : b.boundaries)
            bnd.push_back(to_string(e));
        weights.push_back({{"u", u},
                           {"e1", b.e1_dim()},
                           {"cycles", b.cycle_dim},
                           {"boundaries", b.boundary_dim},
                           {"e2", b.e2_dim},
                           {"reps", reps},
                           {"permanent", b.permanent_span},
                           {"basis", basis},
                           {"boundary_basis", bnd}});
    }
    return {{"schema", kSchema}, {"p", ctx.p()},         {"s", r.s},          {"t", r.t},
            {"e1", r.e1_total},  {"e2", r.e2_total},     {"weights", weights}};
}

E2Report e2_report_from_json(const json& j, const PrimeContext& ctx)
{
    if (j.at("schema") != kSchema || j.at("p").get<int>() != ctx.p())
        throw Error(ErrorCode::ParseError, "E2 record has the wrong schema or prime");
    E2Report r;
    r.s = j.at("s");
    r.t = j.at("t");
    r.e1_total = j.at("e1");
    r.e2_total = j.at("e2");
    for (const auto& w : j.at("weights")) {
        WeightBlock b;
        b.u = w.at("u");
        b.cycle_dim = w.at("cycles");
        b.boundary_dim = w.at("boundaries");
        b.e2_dim = w.at("e2");
        b.permanent_span = w.at("permanent");
        for (const auto& m : w.at("basis"))
            b.basis.push_back(parse_monomial(m.get<std::string>(), ctx).factors);
        for (const auto& e : w.at("reps"))
            b.representatives.push_back(parse_element(e.get<std::string>(), ctx));
        for (const auto& e : w.at("boundary_basis"))
            b.boundaries.push_back(parse_element(e.get<std::string>(), ctx));
        if (b.basis.size() != w.at("e1").get<std::size_t>() || b.representatives.size() != b.e2_dim)
            throw Error(ErrorCode::ParseError, "inconsistent E2 record");
        r.per_weight.emplace(b.u, std::move(b));
    }
    return r;
}

json to_json(const Certificate& c, bool with_basis)
{
    json j = {{"s", c.s},
              {"t", c.t},
              {"verdict", verdict_name(c.verdict)},
              {"dim", c.dim},
              {"e1", c.evidence ? c.evidence->e1_total : 0},
              {"e2", c.evidence ? c.evidence->e2_total : 0}};
    if (with_basis && c.evidence) {
        json basis = json::array();
        for (const auto& [u, b] : c.evidence->per_weight)
            for (const auto& k : b.basis)
                basis.push_back(to_string(Monomial{k, 1}));
        j["basis"] = basis;
    }
    return j;
}

json to_json(const WindowReport& w)
{
    json entries = json::array();
    for (const auto& e : w.entries) {
        json src = e.source ? to_json(*e.source) : json{{"vacuous", true}};
        entries.push_back({{"r", e.r}, {"target", to_json(e.target)}, {"source", src}});
    }
    return {{"s", w.s},
            {"t", w.t},
            {"r_min", w.r_min},
            {"r_max", w.r_max},
            {"entries", entries},
            {"not_boundary", w.not_boundary},
            {"permanent_up_to_rmax", w.permanent_up_to_rmax},
            {"live_targets", w.live_targets}};
}

json to_json(const DimInterval& d, Spectrum x, Int s, Int t)
{
    return {{"spectrum", spectrum_name(x)}, {"s", s},           {"t", t},
            {"lo", d.lo},                   {"hi", d.hi},       {"exact", d.exact()},
            {"provenance", d.provenance}};
}

ReportStore disk_report_store(const DiskCache& cache)
{
    ReportStore st;
    const DiskCache* c = &cache;
    st.load = [c](int p, Int s, Int t) -> std::optional<E2Report> {
        auto rec = c->get({p, "e2", s, t, kSchemaVersion});
        if (!rec)
            return std::nullopt;
        try {
            PrimeContext ctx(p);
            return e2_report_from_json(json::parse(*rec), ctx);
        }
        catch (const std::exception&) {
            return std::nullopt;
        }
    };
    st.save = [c](int p, const E2Report& r) {
        PrimeContext ctx(p);
        c->put({p, "e2", r.s, r.t, kSchemaVersion}, to_json(r, ctx).dump());
    };
    return st;
}

}  // namespace maycalc
