#include "maycalc/certify.hpp"

#include <mutex>

namespace maycalc {

const char* verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::E1Empty: return "E1Empty";
    case Verdict::E2Zero: return "E2Zero";
    case Verdict::DimCertified: return "DimCertified";
    case Verdict::UpperBound: return "UpperBound";
    }
    return "?";
}

std::string Certificate::label() const
{
    std::string r = verdict_name(verdict);
    if (verdict == Verdict::DimCertified || verdict == Verdict::UpperBound)
        r += "(" + std::to_string(dim) + ")";
    return r;
}

std::shared_ptr<const E2Report> SphereExt::e2(Int s, Int t) const
{
    const auto key = std::make_pair(s, t);
    {
        std::shared_lock lk(mu_);
        auto it = cells_.find(key);
        if (it != cells_.end())
            return it->second;
    }
    std::optional<E2Report> loaded;
    if (store_.load)
        loaded = store_.load(ctx_.p(), s, t);
    bool fresh = !loaded;
    auto rep = std::make_shared<const E2Report>(loaded ? std::move(*loaded) : e2_at(ctx_, s, t));
    {
        std::unique_lock lk(mu_);
        auto [it, inserted] = cells_.emplace(key, rep);
        if (!inserted)
            return it->second;
    }
    if (fresh && store_.save)
        store_.save(ctx_.p(), *rep);
    return rep;
}

std::size_t SphereExt::cached_cells() const
{
    std::shared_lock lk(mu_);
    return cells_.size();
}

Certificate SphereExt::vanishing(Int s, Int t) const
{
    Certificate c;
    c.s = s;
    c.t = t;
    if (s < 0 || t < 0) {
        c.verdict = Verdict::E1Empty;
        return c;
    }
    c.evidence = e2(s, t);
    if (c.evidence->e1_total == 0)
        c.verdict = Verdict::E1Empty;
    else if (c.evidence->e2_total == 0)
        c.verdict = Verdict::E2Zero;
    else {
        c.verdict = Verdict::UpperBound;
        c.dim = c.evidence->e2_total;
    }
    return c;
}

bool SphereExt::outgoing_safe(Int s, Int t) const
{
    if (s < 0 || t < 0)
        return true;
    if (e2(s + 1, t)->e2_total == 0)
        return true;
    return e2(s, t)->all_permanent();
}

bool SphereExt::incoming_safe(Int s, Int t) const
{
    return outgoing_safe(s - 1, t);
}

Certificate SphereExt::dim(Int s, Int t) const
{
    Certificate c = vanishing(s, t);
    if (c.vanishes())
        return c;
    if (outgoing_safe(s, t) && incoming_safe(s, t))
        c.verdict = Verdict::DimCertified;
    return c;
}

Certificate certify_ext_vanishing(const PrimeContext& ctx, Int s, Int t) { return SphereExt(ctx).vanishing(s, t); }

Certificate certify_ext_dim(const PrimeContext& ctx, Int s, Int t) { return SphereExt(ctx).dim(s, t); }

std::string NamedClass::display() const
{
    std::string r = name;
    if (!params.empty()) {
        r += "(";
        for (std::size_t k = 0; k < params.size(); ++k)
            r += (k ? "," : "") + std::to_string(params[k]);
        r += ")";
    }
    return r;
}

std::vector<std::string> named_class_names()
{
    return {"h", "b", "a0", "alpha2~", "g0", "g", "k", "l", "l'", "beta~", "gamma~", "h0h", "h0b", "h0hh"};
}

namespace {

Monomial mono(std::initializer_list<Factor> fs, const PrimeContext& ctx)
{
    Element e = Element::one();
    for (const auto& f : fs)
        e = multiply(e, Element(Monomial{{f}, 1}), ctx);
    auto ms = e.monomials();
    return ms.empty() ? Monomial{{}, 0} : ms.front();
}

void need(bool ok, const std::string& what)
{
    if (!ok)
        throw Error(ErrorCode::ParamsOutOfRange, what);
}

}  // namespace

NamedClass resolve_named(const std::string& name, const std::vector<Int>& params, const PrimeContext& ctx)
{
    const Int p = ctx.p(), q = ctx.q();
    auto P = [&](Int e) { return ctx.pow(static_cast<int>(e)); };
    auto nparams = [&](std::size_t n) {
        if (params.size() != n)
            throw Error(ErrorCode::ParamsOutOfRange,
                        name + " takes " + std::to_string(n) + " parameter(s), got " + std::to_string(params.size()));
    };
    NamedClass c;
    c.name = name;
    c.params = params;
    using G = Generator;
    if (name == "h") {
        nparams(1);
        Int n = params[0];
        need(n >= 0 && n <= 30, "h_n needs 0 <= n");
        c.s = 1;
        c.t = P(n) * q;
        c.rep = mono({{G::h(1, static_cast<int>(n)), 1}}, ctx);
        if (n >= 1)
            c.known_differential = "d2(h_" + std::to_string(n) + ") = a0 b_" + std::to_string(n - 1);
    }
    else if (name == "b") {
        nparams(1);
        Int k = params[0];
        need(k >= 0 && k <= 30, "b_k needs 0 <= k");
        c.s = 2;
        c.t = P(k + 1) * q;
        c.rep = mono({{G::b(1, static_cast<int>(k)), 1}}, ctx);
    }
    else if (name == "a0") {
        nparams(0);
        c.s = 1;
        c.t = 1;
        c.rep = mono({{G::a(0), 1}}, ctx);
    }
    else if (name == "alpha2~") {
        nparams(0);
        c.s = 2;
        c.t = 2 * q + 1;
        c.rep = mono({{G::h(1, 0), 1}, {G::a(1), 1}}, ctx);
    }
    else if (name == "g0") {
        nparams(0);
        c.s = 2;
        c.t = p * q + 2 * q;
        c.rep = mono({{G::h(2, 0), 1}, {G::h(1, 0), 1}}, ctx);
        c.known_differential = "d2(g0) = b0 alpha2~";
    }
    else if (name == "g" || name == "l") {
        nparams(1);
        Int n = params[0];
        need(n >= 1, name + "_n needs n >= 1");
        c.s = name == "g" ? 2 : 3;
        c.t = P(n + 1) * q + 2 * P(n) * q;
        c.conjectural = n >= 3;
    }
    else if (name == "k" || name == "l'") {
        nparams(1);
        Int n = params[0];
        need(n >= 1, name + "_n needs n >= 1");
        c.s = name == "k" ? 2 : 3;
        c.t = 2 * P(n + 1) * q + P(n) * q;
        c.conjectural = n >= 3;
    }
    else if (name == "beta~") {
        nparams(1);
        Int s = params[0];
        need(s >= 2 && s < p, "beta~_s needs 2 <= s < p");
        c.s = s;
        c.t = s * p * q + (s - 1) * q + s - 2;
    }
    else if (name == "gamma~") {
        nparams(1);
        Int s = params[0];
        need(s >= 3 && s < p, "gamma~_s needs 3 <= s < p");
        c.s = s;
        c.t = s * p * p * q + (s - 1) * p * q + (s - 2) * q + s - 3;
        if (s == 3)
            c.rep = mono({{G::h(2, 1), 1}, {G::h(1, 2), 1}, {G::h(3, 0), 1}}, ctx);
        else
            c.rep = mono({{G::h(2, 1), 1}, {G::h(1, 2), 1}, {G::h(3, 0), 1}, {G::a(3), static_cast<int>(s - 3)}}, ctx);
    }
    else if (name == "h0h") {
        nparams(1);
        Int n = params[0];
        need(n >= 1 && n <= 30, "h0 h_n needs n >= 1");
        c.s = 2;
        c.t = P(n) * q + q;
        c.rep = mono({{G::h(1, 0), 1}, {G::h(1, static_cast<int>(n)), 1}}, ctx);
    }
    else if (name == "h0b") {
        nparams(1);
        Int k = params[0];
        need(k >= 0 && k <= 30, "h0 b_k needs k >= 0");
        c.s = 3;
        c.t = P(k + 1) * q + q;
        c.rep = mono({{G::h(1, 0), 1}, {G::b(1, static_cast<int>(k)), 1}}, ctx);
    }
    else if (name == "h0hh") {
        nparams(2);
        Int n = params[0], m = params[1];
        need(n >= 1 && m >= 1 && n != m && n <= 30 && m <= 30, "h0 h_n h_m needs distinct n, m >= 1");
        c.s = 3;
        c.t = P(n) * q + P(m) * q + q;
        c.rep = mono({{G::h(1, 0), 1}, {G::h(1, static_cast<int>(n)), 1}, {G::h(1, static_cast<int>(m)), 1}}, ctx);
    }
    else
        throw Error(ErrorCode::UnknownName, "unknown class name '" + name + "'");

    if (c.rep) {
        TriDegree d = tridegree(*c.rep, ctx);
        if (d.s != c.s || d.t != c.t)
            throw std::logic_error("representative degree mismatch for " + c.display() + ": " + to_string(d));
    }
    return c;
}

WindowReport adams_dr_window(const SphereExt& ext, Int s, Int t, int r_min, int r_max)
{
    if (r_min < 2 || r_max < r_min)
        throw Error(ErrorCode::InvalidRange, "need 2 <= r_min <= r_max");
    WindowReport rep;
    rep.s = s;
    rep.t = t;
    rep.r_min = r_min;
    rep.r_max = r_max;
    rep.permanent_up_to_rmax = true;
    for (int r = r_min; r <= r_max; ++r) {
        WindowEntry e;
        e.r = r;
        e.target = ext.vanishing(s + r, t + r - 1);
        if (s - r >= 0)
            e.source = ext.vanishing(s - r, t - r + 1);
        if (!e.target.vanishes()) {
            rep.permanent_up_to_rmax = false;
            rep.live_targets.push_back(r);
        }
        rep.entries.push_back(std::move(e));
    }
    rep.not_boundary = true;
    for (Int r = 2; r <= s; ++r)
        if (!ext.vanishing(s - r, t - r + 1).vanishes())
            rep.not_boundary = false;
    return rep;
}

WindowReport adams_dr_window(const PrimeContext& ctx, Int s, Int t, int r_min, int r_max)
{
    return adams_dr_window(SphereExt(ctx), s, t, r_min, r_max);
}

ProductResult product_nonzero_at_e2(const SphereExt& ext, const std::vector<NamedClass>& classes)
{
    const auto& ctx = ext.ctx();
    ProductResult res;
    Element acc = Element::one();
    for (const auto& c : classes) {
        if (!c.rep)
            throw Error(ErrorCode::MissingRepresentative, c.display() + " has no May representative");
        acc = multiply(acc, Element(*c.rep), ctx);
        res.s += c.s;
        res.t += c.t;
        res.conjectural = res.conjectural || c.conjectural;
    }
    res.rep = acc;
    if (acc.is_zero()) {
        res.note = "product vanishes in E1";
        return res;
    }
    res.cycle = d1(acc, ctx).is_zero();
    if (!res.cycle) {
        res.note = "product is not a d1-cycle";
        return res;
    }
    auto cell = ext.e2(res.s, res.t);
    res.nonzero = !is_boundary(acc, *cell, ctx);
    res.note = res.nonzero ? "nonzero in May E2; Ext-level nonvanishing needs a collapse certificate"
                           : "d1-boundary";
    return res;
}

ProductResult product_nonzero_at_e2(const PrimeContext& ctx, const std::vector<NamedClass>& classes)
{
    return product_nonzero_at_e2(SphereExt(ctx), classes);
}

}  // namespace maycalc
