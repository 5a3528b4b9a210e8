// Acceptance suite: one pass/fail line per criterion, with pinned tolerances
// (all exact) and wall-clock limits. Usage: acceptance [criterion-number ...]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "maycalc/certify.hpp"
#include "maycalc/differential.hpp"
#include "maycalc/greek.hpp"
#include "maycalc/les.hpp"
#include "../support/oracles.hpp"
#include "../support/properties.hpp"

using namespace maycalc;

namespace {

struct Outcome
{
    std::size_t checks = 0;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what)
    {
        ++checks;
        if (!ok)
            failures.push_back(what);
    }
};

struct Criterion
{
    int id;
    std::string title;
    double limit_s;
    std::function<void(Outcome&)> run;
};

std::string set_text(const std::set<std::string>& xs)
{
    std::string r = "{";
    for (const auto& x : xs)
        r += (r.size() > 1 ? ", " : "") + x;
    return r + "}";
}

std::string cell(Int s, Int t) { return "(" + std::to_string(s) + "," + std::to_string(t) + ")"; }

std::set<std::string> basis_texts(const PrimeContext& c, Int s, Int t)
{
    std::set<std::string> r;
    for (const auto& m : enumerate_basis(c, s, t))
        r.insert(to_string(m));
    return r;
}

template <class T>
std::set<std::string> texts(const std::vector<T>& xs)
{
    std::set<std::string> r;
    for (const auto& x : xs)
        r.insert(to_string(x));
    return r;
}

std::string h1(Int j) { return "h[1," + std::to_string(j) + "]"; }
std::string b1(Int j) { return "b[1," + std::to_string(j) + "]"; }

// Four- and five-line E1 bases and the Ext conclusions for tq = (p^n + p^m) q.
void two_h_family(Outcome& o)
{
    PrimeContext c(7);
    SphereExt ext(c);
    const Int q = c.q();
    for (auto [n, m] : {std::pair<Int, Int>{4, 2}, {5, 3}}) {
        const Int tq = (c.pow(static_cast<int>(n)) + c.pow(static_cast<int>(m))) * q;
        const std::string tag = " (n,m)=(" + std::to_string(n) + "," + std::to_string(m) + ")";
        auto basis = [&](Int s, Int t, std::set<std::string> want) {
            auto got = basis_texts(c, s, t);
            o.expect(got == want, "E1" + cell(s, t) + tag + " = " + set_text(got) + ", want " + set_text(want));
        };
        const std::string hn = h1(n), hm = h1(m), bn = b1(n - 1), bm = b1(m - 1);
        basis(4, tq, {bm + " " + bn});
        basis(4, tq + 1, {"a0 " + hn + " " + bm, "a0 " + hm + " " + bn});
        basis(4, tq + 2, {"a0^2 " + hm + " " + hn});
        basis(4, tq + 2 * q + 1, {"a1 h[1,0] " + hm + " " + hn});
        basis(4, tq + q, {"h[1,0] " + hn + " " + bm, "h[1,0] " + hm + " " + bn});
        basis(3, tq + 1, {"a0 " + hm + " " + hn});
        basis(3, tq, {hn + " " + bm, hm + " " + bn});
        basis(3, tq + q, {"h[1,0] " + hm + " " + hn});
        basis(3, tq + 2 * q + 1, {});
        for (Int r : {3, 4})
            basis(4, tq + r * q + 1, {});
        for (Int r : {2, 3, 4})
            for (Int u : {-1, 0})
                basis(4, tq + r * q + u, {});
        basis(5, tq + q + 1, {"a0 h[1,0] " + hn + " " + bm, "a0 h[1,0] " + hm + " " + bn, "a1 " + bm + " " + bn});
        for (Int r : {3, 4})
            basis(5, tq + r * q + 1, {});
        for (Int r : {2, 3})
            basis(5, tq + r * q, {});
        basis(5, tq + 2 * q + 1, {"a1 h[1,0] " + hn + " " + bm, "a1 h[1,0] " + hm + " " + bn});
        basis(5, tq + 1, {"a0 " + bm + " " + bn});
        basis(5, tq + 2, {"a0^2 " + hm + " " + bn, "a0^2 " + hn + " " + bm});

        auto zero = [&](Int s, Int t) {
            Certificate k = ext.vanishing(s, t);
            o.expect(k.vanishes(), "Ext" + cell(s, t) + tag + " not certified zero: " + k.label());
        };
        auto e2dim = [&](Int s, Int t, std::size_t d) {
            auto rep = ext.e2(s, t);
            o.expect(rep->e2_total == d, "E2" + cell(s, t) + tag + " dim " + std::to_string(rep->e2_total) +
                                             ", want " + std::to_string(d));
            Certificate k = ext.dim(s, t);
            o.expect(k.dim_hi() == d, "Ext" + cell(s, t) + tag + " " + k.label());
        };
        for (Int r : {2, 3, 4})
            for (Int u : {-1, 0})
                zero(4, tq + r * q + u);
        for (Int r : {3, 4})
            zero(4, tq + r * q + 1);
        e2dim(4, tq + q, 2);
        e2dim(4, tq, 1);
        e2dim(4, tq + 1, 2);
        for (Int r : {1, 3, 4})
            zero(5, tq + r * q + 1);
        for (Int r : {2, 3})
            zero(5, tq + r * q);
        e2dim(5, tq + 2 * q + 1, 2);
        e2dim(5, tq + 2, 2);
        e2dim(5, tq + 1, 1);

        Element a0sq_bb = parse_element("a0^2 " + bm + " " + bn, c);
        auto rep6 = ext.e2(6, tq + 2);
        o.expect(d1(a0sq_bb, c).is_zero(), "a0^2 b b is not a d1-cycle" + tag);
        o.expect(!is_boundary(a0sq_bb, *rep6, c), "a0^2 b b is a d1-boundary" + tag);
    }
}

// Ext^1 over BP_*K in degree p^n q, p = 5.
void bpk_ext1(Outcome& o)
{
    PrimeContext c(5);
    const Int p = 5;
    for (int n : {2, 4, 6}) {
        std::set<std::string> want{"h" + std::to_string(n), "c2[1," + std::to_string(n - 2) + "]"};
        for (int k = 1; n - 2 * k >= 0; ++k) {
            const int i = n - 2 * k;
            const Int a = (oracle::pw(p, 2 * k) - 1) / (p + 1);
            want.insert("v2^" + std::to_string(a * oracle::pw(p, i)) + " h" + std::to_string(i));
        }
        auto got = texts(enumerate_ext1_BPK(c, n).generators);
        o.expect(got == want, "n=" + std::to_string(n) + ": " + set_text(got) + ", want " + set_text(want));
    }
}

// Ext^0 over BP_*/(p, v1^(p^n - 1)) and the beta generators in degree p^(n+1) q + q, p = 5.
void bp_ext0_beta(Outcome& o)
{
    PrimeContext c(5);
    const Int p = 5, q = c.q();
    for (int n = 1; n <= 4; ++n) {
        std::set<std::string> e0{"v2^" + std::to_string(oracle::pw(p, n))};
        std::set<std::string> beta{"beta[1," + std::to_string(n) + "," + std::to_string(oracle::pw(p, n) - 1) + ",0]"};
        for (int r = 1; n - 2 * r >= 0; ++r) {
            const Int tr = (oracle::pw(p, 2 * r + 1) + 1) / (p + 1);
            const Int low = oracle::pw(p, n - 2 * r);
            e0.insert("v1^" + std::to_string(oracle::pw(p, n) - low) + " c1~[" + std::to_string(tr) + "," +
                      std::to_string(n - 2 * r) + "]");
            if (low - 1 >= 1)
                beta.insert("beta[" + std::to_string(tr) + "," + std::to_string(n - 2 * r) + "," +
                            std::to_string(low - 1) + ",0]");
            o.expect(t_r(r, c) == tr, "t_r(" + std::to_string(r) + ")");
        }
        auto g0 = texts(enumerate_ext0_KR(c, n, 1));
        o.expect(g0 == e0, "Ext0 n=" + std::to_string(n) + ": " + set_text(g0) + ", want " + set_text(e0));
        o.expect(ext0_KR_degree(c, n, 1) == oracle::pw(p, n) * (p + 1) * q, "Ext0 degree n=" + std::to_string(n));
        auto gb = texts(enumerate_beta(c, oracle::pw(p, n + 1) * q + q));
        o.expect(gb == beta, "beta n=" + std::to_string(n) + ": " + set_text(gb) + ", want " + set_text(beta));
        o.expect(gb == oracle::beta_brute(p, oracle::pw(p, n + 1) + 1), "beta brute force n=" + std::to_string(n));
    }
}

// Hypotheses (I)(II)(III) at sigma = h_n, sigma' = b_(n-1), p = 7.
void a0_pair_audit(Outcome& o)
{
    PrimeContext c(7);
    SphereExt ext(c);
    const Int q = c.q();
    for (int n : {2, 3}) {
        const Int tq = c.pow(n) * q;
        const Int s = 1;
        const std::string tag = " n=" + std::to_string(n);
        auto zero = [&](Int ss, Int t) {
            Certificate k = ext.vanishing(ss, t);
            o.expect(k.verdict == Verdict::E1Empty || k.verdict == Verdict::E2Zero,
                     "Ext" + cell(ss, t) + tag + " " + k.label());
        };
        auto nonzero = [&](Int ss, Int t) {
            Certificate k = ext.dim(ss, t);
            o.expect((k.verdict == Verdict::DimCertified || k.verdict == Verdict::UpperBound) && k.dim >= 1,
                     "Ext" + cell(ss, t) + tag + " " + k.label());
        };
        auto zero_or_one = [&](Int ss, Int t) {
            Certificate k = ext.dim(ss, t);
            o.expect(k.vanishes() || k.dim_hi() == 1, "Ext" + cell(ss, t) + tag + " " + k.label());
        };
        // (I)
        for (Int r : {2, 3, 4})
            for (Int u : {1, 2})
                zero(s, tq + r * q - u);
        nonzero(s + 1, tq + q);  // h0 sigma
        nonzero(s + 1, tq + 1);  // a0 sigma
        zero(s + 1, tq - q);
        for (Int k : {2, 3, 4})
            for (Int r : {0, 1})
                zero(s + 1, tq + k * q + r - 1);
        for (Int k : {1, 2, 3})
            for (Int r : {0, 1})
                zero(s + 1, tq + k * q + r - 2);
        // (II)
        for (Int r : {2, 3, 4})
            for (Int u : {-1, 0})
                zero(s + 2, tq + r * q + u);
        for (Int r : {3, 4})
            zero(s + 2, tq + r * q + 1);
        zero_or_one(s + 2, tq);
        nonzero(s + 2, tq + q);  // h0 sigma'
        // (III)
        for (Int r : {1, 3, 4})
            zero(s + 3, tq + r * q + 1);
        for (Int r : {2, 3})
            zero(s + 3, tq + r * q);
        nonzero(s + 3, tq + 2 * q + 1);
        nonzero(s + 3, tq + 2);
        zero_or_one(s + 3, tq + 1);
    }
}

// d_r window for gamma~_3 g0 h_3 at p = 7, and the product at E2.
void gamma_window(Outcome& o)
{
    PrimeContext c(7);
    SphereExt ext(c);
    const Int p = 7, q = c.q(), n = 3, s = 3;
    const Int t = oracle::pw(p, n) * q + s * (p * p + p + 1) * q + s - 3;
    WindowReport w = adams_dr_window(ext, s + 3, t, 2, 6);
    for (const auto& e : w.entries) {
        const Int ss = s + 3 - e.r, tt = oracle::pw(p, n) * q + s * (p * p + p + 1) * q + s - 2 - e.r;
        o.expect(e.source && e.source->s == ss && e.source->t == tt, "window source cell for r=" + std::to_string(e.r));
        o.expect(e.source_vanishes(), "source" + cell(ss, tt) + " not certified zero");
    }
    o.expect(w.entries.size() == 5, "window has 5 entries");
    o.expect(w.not_boundary, "not_boundary");
    ProductResult pr = product_nonzero_at_e2(
        ext, {resolve_named("g0", {}, c), resolve_named("h", {n}, c), resolve_named("gamma~", {s}, c)});
    o.expect(pr.s == s + 3 && pr.t == t, "product bidegree " + cell(pr.s, pr.t));
    o.expect(pr.cycle, "product representative is a d1-cycle");
    o.expect(pr.nonzero, "product representative " + to_string(pr.rep) + " is zero in E2" + cell(pr.s, pr.t));
}

// M, L and K dimension intervals through the long exact sequences.
void les_corpus(Outcome& o)
{
    for (int p : {5, 7}) {
        SphereExt ext((PrimeContext(p)));
        const Int q = ext.ctx().q();
        for (int n : {2, 3}) {
            const Int T = ext.ctx().pow(n) * q;
            auto want = [&](Spectrum x, Column col, Int s, Int t, const std::string& expect) {
                DimInterval d = ext_dims(table_for(ext, x, col, s, t), x, col, s, t);
                const std::string where = std::string(spectrum_name(x)) +
                                          (col == Column::Homology ? " homology " : " ") + cell(s, t) +
                                          " p=" + std::to_string(p);
                if (expect == "at least 1")
                    o.expect(d.lo >= 1, where + " " + d.str());
                else
                    o.expect(d.str() == expect, where + " " + d.str() + ", want " + expect);
            };
            want(Spectrum::L, Column::Cohomology, 2, T + q, "exact 0");
            for (Int s : {2, 3})
                for (Int r : {1, 2})
                    want(Spectrum::K, Column::Cohomology, s, T + r, "exact 0");
            want(Spectrum::M, Column::Homology, 2, T, "exact 0");
            want(Spectrum::M, Column::Homology, 3, T + 1, "exact 0");
            want(Spectrum::K, Column::Homology, 2, T, "exact 0");
            want(Spectrum::K, Column::Homology, 3, T + 1, "exact 0");
            want(Spectrum::M, Column::Cohomology, 1, T, "exact 1");
            want(Spectrum::K, Column::Cohomology, 1, T, "at least 1");
        }
    }
}

void property_suites(Outcome& o)
{
    for (int p : {3, 5, 7}) {
        PrimeContext c(p);
        std::vector<std::string> notes;
        const std::string tag = " p=" + std::to_string(p);
        o.expect(props::d1_squared(c, 1000, 101 + p, notes) == 0, "d1 d1 != 0" + tag);
        o.expect(props::derivation_law(c, 1000, 211 + p, notes) == 0, "derivation law" + tag);
        o.expect(props::graded_commutativity(c, 1000, 307 + p, notes) == 0, "graded commutativity" + tag);
        o.expect(props::associativity(c, 1000, 401 + p, notes) == 0, "associativity" + tag);
        o.expect(props::degree_additivity(c, 1000, 503 + p, notes) == 0, "degree additivity" + tag);
        o.expect(props::basis_vs_oracle(c, 6, 2000, notes) == 0, "basis vs oracle" + tag);
        o.expect(props::reversal_invariance(c, 5, props::sample_degrees(c, 2000, 40, 601 + p), notes) == 0,
                 "reversal invariance" + tag);
        for (std::size_t k = 0; k < notes.size() && k < 3; ++k)
            o.failures.push_back(notes[k]);
    }
}

// Stems against (t - s) of independently assembled bidegrees.
void stem_formulas(Outcome& o)
{
    for (int p : {5, 7}) {
        PrimeContext c(p);
        const Int q = c.q();
        auto named = [&](const std::string& name, std::vector<Int> params) {
            NamedClass k = resolve_named(name, params, c);
            return std::pair<Int, Int>{k.s, k.t};
        };
        auto add = [](std::pair<Int, Int> a, std::pair<Int, Int> b) {
            return std::pair<Int, Int>{a.first + b.first, a.second + b.second};
        };
        const auto h0 = named("h", {0}), g0 = named("g0", {});
        std::size_t covered = 0;
        auto check = [&](const std::string& fam, std::map<std::string, Int> params, std::pair<Int, Int> want) {
            std::ostringstream where;
            where << fam << " p=" << p;
            for (const auto& [k, v] : params)
                where << " " << k << "=" << v;
            StemResult r = stem_of(fam, params, c);
            o.expect(r.stem == want.second - want.first,
                     where.str() + ": stem " + std::to_string(r.stem) + ", want " + std::to_string(want.second - want.first));
            o.expect(r.bidegree && *r.bidegree == want, where.str() + ": bidegree");
        };
        std::set<std::string> seen;
        auto mark = [&](const std::string& f) { seen.insert(f); ++covered; };
        for (Int n = 1; n <= 4; ++n) {
            const auto hn = named("h", {n}), bn = named("b", {n - 1});
            check("h0hn", {{"n", n}}, add(h0, hn)), mark("h0hn");
            check("h0bn", {{"n", n}}, add(h0, bn)), mark("h0bn");
            check("hn_K", {{"n", n}}, {1, oracle::pw(p, n) * q}), mark("hn_K");
            check("g0hn_K", {{"n", n}}, add(g0, hn)), mark("g0hn_K");
            check("g0bn_K", {{"n", n}}, add(g0, bn)), mark("g0bn_K");
            check("h0gn", {{"n", n}}, add(h0, named("g", {n}))), mark("h0gn");
            check("h0ln", {{"n", n}}, add(h0, named("l", {n}))), mark("h0ln");
            check("h0kn", {{"n", n}}, add(h0, named("k", {n}))), mark("h0kn");
            check("h0lpn", {{"n", n}}, add(h0, named("l'", {n}))), mark("h0lpn");
            for (Int sp : {Int{1}, oracle::pw(p, n) - 1}) {
                // gamma_{p^n/s}: p^n |v3| - s |v2| - |v1| in filtration 3
                const Int v1 = q, v2 = (p + 1) * q, v3 = (p * p + p + 1) * q;
                check("gamma_pn_s", {{"n", n}, {"s", sp}}, {3, oracle::pw(p, n) * v3 - sp * v2 - v1}), mark("gamma_pn_s");
            }
            for (Int tt : {1, 2})
                for (Int sb : {Int{1}, oracle::pw(p, n)}) {
                    const Int v1 = q, v2 = (p + 1) * q;
                    check("beta_tpn_s", {{"t", tt}, {"n", n}, {"s", sb}}, {2, tt * oracle::pw(p, n) * v2 - sb * v1}),
                        mark("beta_tpn_s");
                    check("beta_tpn_j_i", {{"t", tt}, {"n", n}, {"j", sb}, {"i", 0}},
                          {2, tt * oracle::pw(p, n) * v2 - sb * v1}),
                        mark("beta_tpn_j_i");
                }
            for (Int m = 1; m + 2 <= n; ++m) {
                const auto hm = named("h", {m}), bm = named("b", {m - 1});
                check("h0hnhm", {{"n", n}, {"m", m}}, add(add(h0, hn), hm)), mark("h0hnhm");
                check("h0hnbm", {{"n", n}, {"m", m}}, add(add(h0, hn), bm)), mark("h0hnbm");
                check("g0hnhm_K", {{"n", n}, {"m", m}}, add(add(g0, hn), hm)), mark("g0hnhm_K");
                check("g0hnbm_K", {{"n", n}, {"m", m}}, add(add(g0, hn), bm)), mark("g0hnbm_K");
            }
            for (Int s = 3; s < p; ++s) {
                const auto gs = named("gamma~", {s});
                check("g0hn_gamma", {{"n", n}, {"s", s}}, add(add(g0, hn), gs)), mark("g0hn_gamma");
                check("g0bn_gamma", {{"n", n}, {"s", s}}, add(add(g0, bn), gs)), mark("g0bn_gamma");
                check("h0hn_gamma", {{"n", n}, {"s", s}}, add(add(h0, hn), gs)), mark("h0hn_gamma");
                check("h0bn_gamma", {{"n", n}, {"s", s}}, add(add(h0, bn), gs)), mark("h0bn_gamma");
                for (Int m = 1; m + 2 <= n; ++m) {
                    const auto hm = named("h", {m}), bm = named("b", {m - 1});
                    check("g0hnhm_gamma", {{"n", n}, {"m", m}, {"s", s}}, add(add(add(g0, hn), hm), gs)),
                        mark("g0hnhm_gamma");
                    check("g0hnbm_gamma", {{"n", n}, {"m", m}, {"s", s}}, add(add(add(g0, hn), bm), gs)),
                        mark("g0hnbm_gamma");
                    check("h0hnhm_gamma", {{"n", n}, {"m", m}, {"s", s}}, add(add(add(h0, hn), hm), gs)),
                        mark("h0hnhm_gamma");
                    check("h0hnbm_gamma", {{"n", n}, {"m", m}, {"s", s}}, add(add(add(h0, hn), bm), gs)),
                        mark("h0hnbm_gamma");
                }
            }
        }
        for (Int s = 3; s < p; ++s) {
            check("gamma_s", {{"s", s}}, named("gamma~", {s})), mark("gamma_s");
            // representative h[1,2] h[2,1] h[3,0] a3^(s-3) from the generator degree table
            Int t = 0;
            for (const auto& g : oracle::generators_upto(p, 4 * oracle::pw(p, 3))) {
                const bool in_rep = (g.kind == 'h' && ((g.i == 1 && g.j == 2) || (g.i == 2 && g.j == 1) ||
                                                       (g.i == 3 && g.j == 0)));
                if (in_rep)
                    t += g.t;
                if (g.kind == 'a' && g.i == 3)
                    t += (s - 3) * g.t;
            }
            const Int closed = s * p * p * q + (s - 1) * p * q + (s - 2) * q + s - 3;
            o.expect(t == closed, "gamma~_" + std::to_string(s) + " representative degree " + std::to_string(t) +
                                      ", want " + std::to_string(closed));
            NamedClass gs = resolve_named("gamma~", {s}, c);
            o.expect(gs.rep && tridegree(*gs.rep, c).t == t, "gamma~ representative tridegree");
        }
        for (const auto& f : stem_families())
            o.expect(seen.count(f) == 1, "family " + f + " not exercised");
        o.expect(covered > 0, "no stems checked");
    }
}

}  // namespace

int main(int argc, char** argv)
{
    const std::vector<Criterion> all{
        {1, "two-h family E1 bases and Ext conclusions, p=7", 60, two_h_family},
        {2, "Ext^1(BP_*K) generator lists, p=5, n=2,4,6", 1, bpk_ext1},
        {3, "Ext^0 and beta generator lists, p=5, n=1..4", 1, bp_ext0_beta},
        {4, "h_n / b_(n-1) hypothesis audit, p=7, n=2,3", 300, a0_pair_audit},
        {5, "gamma~_3 g0 h_3 d_r window and E2 product, p=7", 120, gamma_window},
        {6, "M / L / K long exact sequence corpus", 120, les_corpus},
        {7, "algebraic property suites", 600, property_suites},
        {8, "stem formulas and gamma~ degree identity", 10, stem_formulas},
    };
    std::set<int> pick;
    for (int k = 1; k < argc; ++k)
        pick.insert(std::atoi(argv[k]));
    int failed = 0;
    for (const auto& cr : all) {
        if (!pick.empty() && !pick.count(cr.id))
            continue;
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            cr.run(o);
        }
        catch (const std::exception& e) {
            o.failures.push_back(std::string("exception: ") + e.what());
        }
        const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (dt > cr.limit_s)
            o.failures.push_back("time limit exceeded");
        const bool ok = o.failures.empty();
        failed += !ok;
        std::printf("criterion %d %s  %-52s checks=%zu time=%.2fs limit=%.0fs\n", cr.id, ok ? "PASS" : "FAIL",
                    cr.title.c_str(), o.checks, dt, cr.limit_s);
        for (std::size_t k = 0; k < o.failures.size() && k < 10; ++k)
            std::printf("    %s\n", o.failures[k].c_str());
        std::fflush(stdout);
    }
    return failed ? 1 : 0;
}
