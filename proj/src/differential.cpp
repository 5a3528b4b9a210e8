#include "maycalc/differential.hpp"

#include <algorithm>
#include <stdexcept>

namespace maycalc {

Element d1(const Generator& g, const PrimeContext& ctx)
{
    Element r;
    switch (g.kind) {
    case GenKind::B: break;
    case GenKind::H:
        for (int k = 1; k < g.i; ++k) {
            Element x(Monomial{{{Generator::h(g.i - k, k + g.j), 1}}, 1});
            Element y(Monomial{{{Generator::h(k, g.j), 1}}, 1});
            r.add(multiply(x, y, ctx), ctx, -1);
        }
        break;
    case GenKind::A:
        for (int k = 0; k < g.i; ++k) {
            Element x(Monomial{{{Generator::a(k), 1}}, 1});
            Element y(Monomial{{{Generator::h(g.i - k, k), 1}}, 1});
            r.add(multiply(x, y, ctx), ctx, -1);
        }
        break;
    }
    return r;
}

Element d1(const Monomial& m, const PrimeContext& ctx)
{
    Element r;
    const auto& fs = m.factors;
    int odd_before = 0;
    for (std::size_t f = 0; f < fs.size(); ++f) {
        const auto& fac = fs[f];
        Element dg = d1(fac.gen, ctx);
        if (!dg.is_zero() && ctx.reduce(fac.exp) != 0) {
            MonoKey left(fs.begin(), fs.begin() + f), right(fs.begin() + f + 1, fs.end());
            if (fac.exp > 1)
                left.push_back({fac.gen, fac.exp - 1});
            Element term = multiply(Element(Monomial{left, 1}), dg, ctx);
            term = multiply(term, Element(Monomial{right, 1}), ctx);
            Int sign = (odd_before & 1) ? -1 : 1;
            r.add(term, ctx, sign * fac.exp * static_cast<Int>(m.coeff));
        }
        if (fac.gen.odd())
            odd_before += fac.exp;
    }
    return r;
}

Element d1(const Element& x, const PrimeContext& ctx)
{
    Element r;
    for (const auto& m : x.monomials())
        r.add(d1(m, ctx), ctx);
    return r;
}

bool is_known_permanent(const MonoKey& k)
{
    bool has_h10 = false;
    int a1 = 0;
    for (const auto& f : k) {
        const auto& g = f.gen;
        if (g.kind == GenKind::A) {
            if (g.i == 0)
                continue;
            if (g.i == 1) {
                a1 = f.exp;
                continue;
            }
            return false;
        }
        if (g.i != 1)
            return false;
        if (g.kind == GenKind::H && g.j == 0)
            has_h10 = true;
    }
    return a1 == 0 || (a1 == 1 && has_h10);
}

bool E2Report::all_permanent() const
{
    for (const auto& [u, b] : per_weight)
        if (b.e2_dim > 0 && !b.permanent_span)
            return false;
    return true;
}

std::vector<Element> E2Report::representatives() const
{
    std::vector<Element> r;
    for (const auto& [u, b] : per_weight)
        for (const auto& e : b.representatives)
            r.push_back(e);
    return r;
}

std::map<Int, Element> split_by_weight(const Element& x, const PrimeContext& ctx)
{
    std::map<Int, Element> out;
    for (const auto& [k, c] : x.terms())
        out[tridegree(k, ctx).u].add_term(k, c, ctx);
    return out;
}

namespace {

struct Basis
{
    std::vector<MonoKey> keys;
    std::map<MonoKey, std::size_t> index;
};

// Per-weight bases of one (s,t) cell.
std::map<Int, Basis> bases_by_weight(const PrimeContext& ctx, Int s, Int t)
{
    std::map<Int, Basis> out;
    for (const auto& m : enumerate_basis(ctx, s, t)) {
        Int u = tridegree(m, ctx).u;
        auto& b = out[u];
        b.index.emplace(m.factors, b.keys.size());
        b.keys.push_back(m.factors);
    }
    return out;
}

int reorder_sign(const MonoKey& k)
{
    int odd = 0;
    for (const auto& f : k)
        if (f.gen.odd())
            ++odd;
    return ((odd * (odd - 1) / 2) & 1) ? -1 : 1;
}

// Coordinate system: canonical, or reversed order with reordering signs.
struct Frame
{
    const Basis* basis = nullptr;
    bool reversed = false;

    std::size_t size() const { return basis ? basis->keys.size() : 0; }
    std::size_t pos(std::size_t canonical) const { return reversed ? size() - 1 - canonical : canonical; }
    std::size_t canonical(std::size_t pos) const { return reversed ? size() - 1 - pos : pos; }
    int sign(std::size_t canonical) const { return reversed ? reorder_sign(basis->keys[canonical]) : 1; }

    FpVec coords(const Element& x, const PrimeContext& ctx) const
    {
        FpVec v(size(), 0);
        for (const auto& [k, c] : x.terms()) {
            auto it = basis->index.find(k);
            if (it == basis->index.end())
                throw std::logic_error("d1 image outside the expected tridegree: " + to_string(Monomial{k, c}));
            v[pos(it->second)] = ctx.reduce(static_cast<Int>(c) * sign(it->second));
        }
        return v;
    }

    Element element(const FpVec& v, const PrimeContext& ctx) const
    {
        Element e;
        for (std::size_t k = 0; k < v.size(); ++k)
            if (v[k]) {
                std::size_t c = canonical(k);
                e.add_term(basis->keys[c], static_cast<Int>(v[k]) * sign(c), ctx);
            }
        return e;
    }
};

}  // namespace

E2Report e2_at(const PrimeContext& ctx, Int s, Int t, const E2Options& opt)
{
    E2Report rep;
    rep.s = s;
    rep.t = t;
    auto here = bases_by_weight(ctx, s, t);
    if (here.empty())
        return rep;
    auto above = bases_by_weight(ctx, s + 1, t);
    auto below = bases_by_weight(ctx, s - 1, t);
    const Basis empty;

    for (const auto& [u, basis] : here) {
        WeightBlock blk;
        blk.u = u;
        blk.basis = basis.keys;
        Frame fh{&basis, opt.reversed_order};
        auto ita = above.find(u - 1);
        Frame fa{ita == above.end() ? &empty : &ita->second, opt.reversed_order};
        auto itb = below.find(u + 1);
        Frame fb{itb == below.end() ? &empty : &itb->second, opt.reversed_order};

        // outgoing d1: here -> above
        std::vector<FpVec> cols(fh.size());
        for (std::size_t k = 0; k < fh.size(); ++k) {
            std::size_t c = fh.canonical(k);
            Element img = d1(Monomial{basis.keys[c], 1}, ctx).scaled(fh.sign(c), ctx);
            cols[k] = fa.size() ? fa.coords(img, ctx) : FpVec{};
            if (!fa.size() && !img.is_zero())
                throw std::logic_error("d1 image outside the expected tridegree");
        }
        KernelResult ker = kernel_of(ctx, cols, fh.size(), fa.size());
        blk.cycle_dim = ker.kernel.size();

        // incoming d1: below -> here
        EchelonSpace bnd(ctx, fh.size());
        for (std::size_t k = 0; k < fb.size(); ++k) {
            std::size_t c = fb.canonical(k);
            Element img = d1(Monomial{fb.basis->keys[c], 1}, ctx).scaled(fb.sign(c), ctx);
            bnd.insert(fh.coords(img, ctx));
        }
        blk.boundary_dim = bnd.rank();
        if (blk.boundary_dim > blk.cycle_dim)
            throw std::logic_error("d1 o d1 != 0: boundaries exceed cycles");

        EchelonSpace span = bnd;
        for (auto v : ker.kernel) {
            span.reduce(v);
            if (!is_zero(v)) {
                span.insert(v);
                blk.representatives.push_back(fh.element(v, ctx));
            }
        }
        blk.e2_dim = blk.representatives.size();
        if (blk.e2_dim != blk.cycle_dim - blk.boundary_dim)
            throw std::logic_error("boundary not contained in cycle space");

        // Echelon basis of the boundary space, in canonical coordinates.
        Frame canon{&basis, false};
        EchelonSpace b2(ctx, fh.size());
        for (std::size_t k = 0; k < fb.size(); ++k) {
            FpVec v = canon.coords(d1(Monomial{fb.basis->keys[k], 1}, ctx), ctx);
            b2.reduce(v);
            if (!is_zero(v)) {
                b2.insert(v);
                blk.boundaries.push_back(canon.element(v, ctx));
            }
        }
        EchelonSpace perm = b2;
        for (std::size_t k = 0; k < basis.keys.size(); ++k)
            if (is_known_permanent(basis.keys[k])) {
                FpVec e(basis.keys.size(), 0);
                e[k] = 1;
                perm.insert(e);
            }
        blk.permanent_span = perm.rank() == blk.cycle_dim;

        rep.e1_total += blk.e1_dim();
        rep.e2_total += blk.e2_dim;
        rep.per_weight.emplace(u, std::move(blk));
    }
    return rep;
}

FpVec coordinates(const Element& x, const WeightBlock& block, const PrimeContext& ctx)
{
    FpVec v(block.basis.size(), 0);
    for (const auto& [k, c] : x.terms()) {
        auto it = std::lower_bound(block.basis.begin(), block.basis.end(), k);
        if (it == block.basis.end() || *it != k)
            throw std::logic_error("element not in weight block: " + to_string(Monomial{k, c}));
        v[static_cast<std::size_t>(it - block.basis.begin())] = ctx.reduce(c);
    }
    return v;
}

Element from_coordinates(const FpVec& v, const WeightBlock& block, const PrimeContext& ctx)
{
    Element e;
    for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k])
            e.add_term(block.basis[k], v[k], ctx);
    return e;
}

namespace {

EchelonSpace boundary_space(const WeightBlock& blk, const PrimeContext& ctx)
{
    EchelonSpace sp(ctx, blk.basis.size());
    for (const auto& b : blk.boundaries)
        sp.insert(coordinates(b, blk, ctx));
    return sp;
}

}  // namespace

bool is_boundary(const Element& x, const E2Report& rep, const PrimeContext& ctx)
{
    for (const auto& [u, part] : split_by_weight(x, ctx)) {
        auto it = rep.per_weight.find(u);
        if (it == rep.per_weight.end())
            throw std::logic_error("element weight not present in cell");
        if (!boundary_space(it->second, ctx).contains(coordinates(part, it->second, ctx)))
            return false;
    }
    return true;
}

std::size_t e2_span_rank(const std::vector<Element>& xs, const E2Report& rep, const PrimeContext& ctx)
{
    // E2 is the direct sum of its weight blocks; concatenate reduced coordinates.
    std::map<Int, std::pair<EchelonSpace, std::size_t>> spaces;
    std::size_t total_dim = 0;
    for (const auto& [u, blk] : rep.per_weight) {
        spaces.emplace(u, std::make_pair(boundary_space(blk, ctx), total_dim));
        total_dim += blk.basis.size();
    }
    EchelonSpace img(ctx, total_dim);
    for (const auto& x : xs) {
        FpVec v(total_dim, 0);
        for (const auto& [u, part] : split_by_weight(x, ctx)) {
            auto it = rep.per_weight.find(u);
            if (it == rep.per_weight.end())
                throw std::logic_error("element weight not present in cell");
            auto& [sp, off] = spaces.at(u);
            FpVec c = coordinates(part, it->second, ctx);
            sp.reduce(c);
            std::copy(c.begin(), c.end(), v.begin() + static_cast<std::ptrdiff_t>(off));
        }
        img.insert(v);
    }
    return img.rank();
}

}  // namespace maycalc
