#include "maycalc/les.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace maycalc {

std::string DimInterval::str() const
{
    if (exact())
        return "exact " + std::to_string(lo);
    return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
}

DimInterval operator+(const DimInterval& a, const DimInterval& b)
{
    DimInterval r{a.lo + b.lo, a.hi + b.hi, a.provenance};
    r.provenance.insert(r.provenance.end(), b.provenance.begin(), b.provenance.end());
    return r;
}

DimInterval kernel_dim(const DimInterval& A, const RankInterval& r)
{
    return {std::max<Int>(0, A.lo - r.hi), std::max<Int>(0, A.hi - r.lo), {}};
}

DimInterval cokernel_dim(const DimInterval& B, const RankInterval& r)
{
    return {std::max<Int>(0, B.lo - r.hi), std::max<Int>(0, B.hi - r.lo), {}};
}

DimInterval SphereCell::dim() const
{
    return {static_cast<Int>(dim_certificate.dim_lo()), static_cast<Int>(dim_certificate.dim_hi()), {}};
}

SphereTable::SphereTable(const SphereExt& ext, std::pair<Int, Int> s_range, std::pair<Int, Int> t_range,
                         const TableOptions& opt)
    : p_(ext.ctx().p()), q_(ext.ctx().q()), s_range_(s_range), t_range_(t_range)
{
    const auto& ctx = ext.ctx();
    s_range_.first = std::max<Int>(0, s_range_.first);
    t_range_.first = std::max<Int>(0, t_range_.first);
    std::vector<std::pair<Int, Int>> keys;
    Int ns = std::max<Int>(0, s_range_.second - s_range_.first + 1);
    Int nt = std::max<Int>(0, t_range_.second - t_range_.first + 1);
    if (ns * nt > static_cast<Int>(opt.max_cells))
        throw Error(ErrorCode::WindowTooLarge, "sphere window has " + std::to_string(ns * nt) + " cells, cap is " +
                                                   std::to_string(opt.max_cells));
    for (Int s = s_range_.first; s <= s_range_.second; ++s)
        for (Int t = t_range_.first; t <= t_range_.second; ++t)
            keys.emplace_back(s, t);

    std::vector<SphereCell> out(keys.size());
    unsigned nthreads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
    nthreads = std::min<unsigned>(nthreads, static_cast<unsigned>(std::max<std::size_t>(1, keys.size())));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t k; (k = next++) < keys.size();) {
            auto [s, t] = keys[k];
            out[k].s = s;
            out[k].t = t;
            out[k].dim_certificate = ext.dim(s, t);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < nthreads; ++k)
        pool.emplace_back(work);
    work();
    for (auto& th : pool)
        th.join();
    for (auto& c : out)
        cells_.emplace(std::make_pair(c.s, c.t), std::move(c));

    // Multiplication ranks, witnessed on E2 between certified cells.
    std::vector<SphereCell*> ptrs;
    for (auto& [k, c] : cells_)
        ptrs.push_back(&c);
    next = 0;
    auto rank_work = [&] {
        for (std::size_t k; (k = next++) < ptrs.size();) {
            SphereCell& c = *ptrs[k];
            if (!c.dim_certificate.certified() || c.dim_certificate.dim == 0)
                continue;
            auto reps = c.dim_certificate.evidence->representatives();
            auto image_rank = [&](Int ds, Int dt, const Generator& g) -> Int {
                Int s2 = c.s + ds, t2 = c.t + dt;
                if (!covers(s2, t2))
                    return 0;
                const auto& tgt = cells_.at({s2, t2}).dim_certificate;
                if (!tgt.certified() || tgt.dim == 0)
                    return 0;
                std::vector<Element> imgs;
                Element gen(Monomial{{{g, 1}}, 1});
                for (const auto& r : reps)
                    imgs.push_back(multiply(r, gen, ctx));
                return static_cast<Int>(e2_span_rank(imgs, *tgt.evidence, ctx));
            };
            c.a0_rank_lower = image_rank(1, 1, Generator::a(0));
            c.h0_rank_lower = image_rank(1, q_, Generator::h(1, 0));
        }
    };
    pool.clear();
    for (unsigned k = 1; k < nthreads; ++k)
        pool.emplace_back(rank_work);
    rank_work();
    for (auto& th : pool)
        th.join();
}

SphereTable sphere_table(const SphereExt& ext, std::pair<Int, Int> s_range, std::pair<Int, Int> t_range,
                         const TableOptions& opt)
{
    return SphereTable(ext, s_range, t_range, opt);
}

bool SphereTable::covers(Int s, Int t) const
{
    if (s < 0 || t < 0)
        return true;
    return s >= s_range_.first && s <= s_range_.second && t >= t_range_.first && t <= t_range_.second;
}

const SphereCell& SphereTable::cell(Int s, Int t) const
{
    auto it = cells_.find({s, t});
    if (it == cells_.end())
        throw Error(ErrorCode::InsufficientWindow,
                    "cell (" + std::to_string(s) + "," + std::to_string(t) + ") is outside the sphere window");
    return it->second;
}

DimInterval SphereTable::dim(Int s, Int t) const
{
    if (s < 0 || t < 0)
        return {0, 0, {}};
    return cell(s, t).dim();
}

void SphereTable::widen(Int s, Int t)
{
    auto it = cells_.find({s, t});
    if (it == cells_.end())
        throw Error(ErrorCode::InsufficientWindow, "cell outside window");
    auto& cert = it->second.dim_certificate;
    if (!cert.vanishes() || cert.evidence) {
        cert.verdict = Verdict::UpperBound;
        cert.dim = cert.evidence ? cert.evidence->e2_total : cert.dim;
    }
}

namespace {

RankInterval rank_between(const SphereTable& tab, Int s, Int t, Int ds, Int dt, bool a0,
                          const std::map<std::pair<Int, Int>, RankInterval>& overrides)
{
    auto ov = overrides.find({s, t});
    if (ov != overrides.end())
        return ov->second;
    DimInterval src = tab.dim(s, t), tgt = tab.dim(s + ds, t + dt);
    RankInterval r{0, std::min(src.hi, tgt.hi)};
    if (s >= 0 && t >= 0) {
        const auto& c = tab.cell(s, t);
        const auto& d = tab.cell(s + ds, t + dt);
        if (c.dim_certificate.certified() && d.dim_certificate.certified())
            r.lo = std::min(r.hi, a0 ? c.a0_rank_lower : c.h0_rank_lower);
    }
    return r;
}

}  // namespace

RankInterval SphereTable::a0_rank(Int s, Int t) const { return rank_between(*this, s, t, 1, 1, true, a0_override_); }

RankInterval SphereTable::h0_rank(Int s, Int t) const
{
    return rank_between(*this, s, t, 1, q_, false, h0_override_);
}

Spectrum parse_spectrum(const std::string& s)
{
    if (s == "S" || s == "sphere")
        return Spectrum::Sphere;
    if (s == "M")
        return Spectrum::M;
    if (s == "L")
        return Spectrum::L;
    if (s == "K" || s == "V1" || s == "V(1)")
        return Spectrum::K;
    throw Error(ErrorCode::InvalidParams, "unknown spectrum '" + s + "'");
}

Column parse_column(const std::string& s)
{
    if (s == "cohomology" || s == "H*X")
        return Column::Cohomology;
    if (s == "homology" || s == "dual")
        return Column::Homology;
    throw Error(ErrorCode::InvalidParams, "unknown column '" + s + "'");
}

const char* spectrum_name(Spectrum x)
{
    switch (x) {
    case Spectrum::Sphere: return "S";
    case Spectrum::M: return "M";
    case Spectrum::L: return "L";
    case Spectrum::K: return "K";
    }
    return "?";
}

namespace {

std::string at(Int s, Int t) { return "(" + std::to_string(s) + "," + std::to_string(t) + ")"; }

// Shared shape: ker(f: S(s,t-shift) -> S(s+1,t)) + coker(f: S(s-1,t-shift) -> S(s,t)).
DimInterval two_cell(const SphereTable& tab, Int s, Int t, Int shift, bool a0)
{
    auto need = [&](Int ss, Int tt) {
        if (!tab.covers(ss, tt))
            throw Error(ErrorCode::InsufficientWindow, "sphere window does not cover " + at(ss, tt));
    };
    need(s, t - shift);
    need(s + 1, t);
    need(s - 1, t - shift);
    need(s, t);
    const char* f = a0 ? "a0" : "h0";
    RankInterval r1 = a0 ? tab.a0_rank(s, t - shift) : tab.h0_rank(s, t - shift);
    RankInterval r2 = a0 ? tab.a0_rank(s - 1, t - shift) : tab.h0_rank(s - 1, t - shift);
    DimInterval ker = kernel_dim(tab.dim(s, t - shift), r1);
    DimInterval cok = cokernel_dim(tab.dim(s, t), r2);
    ker.provenance.push_back(std::string("ker ") + f + " " + at(s, t - shift) + "->" + at(s + 1, t) + " = " +
                             ker.str());
    cok.provenance.push_back(std::string("coker ") + f + " " + at(s - 1, t - shift) + "->" + at(s, t) + " = " +
                             cok.str());
    return cok + ker;
}

}  // namespace

DimInterval ext_dims_M(const SphereTable& table, Int s, Int t)
{
    if (s < 0 || t < 0)
        return {0, 0, {}};
    return two_cell(table, s, t, 1, true);
}

DimInterval ext_dims_L(const SphereTable& table, Int s, Int t)
{
    if (s < 0 || t < 0)
        return {0, 0, {}};
    return two_cell(table, s, t, table.q(), false);
}

DimInterval ext_dims_K(const SphereTable& table, Int s, Int t)
{
    if (s < 0 || t < 0)
        return {0, 0, {}};
    const Int sh = table.q() + 1;
    // Connecting map M(s', t') -> M(s'+1, t'+q+1); its rank is not May-computable.
    DimInterval src_c = ext_dims_M(table, s - 1, t - sh), tgt_c = ext_dims_M(table, s, t);
    DimInterval src_k = ext_dims_M(table, s, t - sh), tgt_k = ext_dims_M(table, s + 1, t);
    DimInterval cok = cokernel_dim(tgt_c, {0, std::min(src_c.hi, tgt_c.hi)});
    DimInterval ker = kernel_dim(src_k, {0, std::min(src_k.hi, tgt_k.hi)});
    cok.provenance.push_back("coker delta M" + at(s - 1, t - sh) + "->M" + at(s, t) + " = " + cok.str());
    ker.provenance.push_back("ker delta M" + at(s, t - sh) + "->M" + at(s + 1, t) + " = " + ker.str());
    return cok + ker;
}

DimInterval ext_dims(const SphereTable& table, Spectrum x, Column c, Int s, Int t)
{
    const Int q = table.q();
    if (c == Column::Homology) {
        switch (x) {
        case Spectrum::Sphere: break;
        case Spectrum::M: t += 1; break;
        case Spectrum::L: t += q; break;
        case Spectrum::K: t += q + 2; break;
        }
    }
    switch (x) {
    case Spectrum::Sphere: {
        DimInterval d = table.dim(s, t);
        d.provenance.push_back("sphere " + at(s, t));
        return d;
    }
    case Spectrum::M: return ext_dims_M(table, s, t);
    case Spectrum::L: return ext_dims_L(table, s, t);
    case Spectrum::K: return ext_dims_K(table, s, t);
    }
    return {};
}

std::pair<std::pair<Int, Int>, std::pair<Int, Int>> required_window(const PrimeContext& ctx, Spectrum x, Column c,
                                                                    Int s, Int t)
{
    const Int q = ctx.q();
    if (c == Column::Homology) {
        if (x == Spectrum::M)
            t += 1;
        else if (x == Spectrum::L)
            t += q;
        else if (x == Spectrum::K)
            t += q + 2;
    }
    switch (x) {
    case Spectrum::Sphere: return {{s, s}, {t, t}};
    case Spectrum::M: return {{s - 1, s + 1}, {t - 1, t}};
    case Spectrum::L: return {{s - 1, s + 1}, {t - q, t}};
    case Spectrum::K: return {{s - 2, s + 2}, {t - q - 2, t}};
    }
    return {};
}

SphereTable table_for(const SphereExt& ext, Spectrum x, Column c, Int s, Int t, const TableOptions& opt)
{
    auto [sr, tr] = required_window(ext.ctx(), x, c, s, t);
    return SphereTable(ext, sr, tr, opt);
}

}  // namespace maycalc
