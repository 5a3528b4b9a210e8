#include "maycalc/greek.hpp"

#include <algorithm>
#include <functional>
#include <regex>

namespace maycalc {

Int beta_degree(const BetaIndex& idx, const PrimeContext& ctx)
{
    const Int p = ctx.p(), q = ctx.q();
    return idx.a * ctx.pow(idx.s) * (p + 1) * q - idx.b * q;
}

Int gamma_degree(const GammaIndex& idx, const PrimeContext& ctx)
{
    const Int p = ctx.p(), q = ctx.q();
    return idx.t * ctx.pow(idx.n) * (p * p + p + 1) * q - idx.s * (p + 1) * q - idx.i * q;
}

Int alpha_degree(const AlphaIndex& idx, const PrimeContext& ctx) { return idx.t * ctx.pow(idx.n) * ctx.q(); }

Int admissibility_bound(int k, const PrimeContext& ctx)
{
    if (k < 0)
        throw Error(ErrorCode::InvalidParams, "negative admissibility index");
    if (k == 0)
        return 1;
    return ctx.pow(k) + ctx.pow(k - 1) - 1;
}

bool beta_admissible(const BetaIndex& idx, const PrimeContext& ctx, const AdmissibilityOptions& opt)
{
    const Int p = ctx.p();
    if (idx.a < 1 || idx.a % p == 0 || idx.s < 0 || idx.b < 1 || idx.c < 0 || idx.c > idx.s)
        return false;
    if (idx.a == 1 && idx.b > (opt.strict_verbatim ? Int(idx.s) : ctx.pow(idx.s)))
        return false;
    const Int pc = ctx.pow(idx.c);
    if (idx.b % pc != 0 || idx.b > admissibility_bound(idx.s - idx.c, ctx))
        return false;
    if (idx.b % (pc * p) == 0) {
        if (idx.s - idx.c - 1 < 0)
            return false;
        if (!(admissibility_bound(idx.s - idx.c - 1, ctx) < idx.b))
            return false;
    }
    return true;
}

std::vector<BetaIndex> enumerate_beta(const PrimeContext& ctx, Int t_internal, const AdmissibilityOptions& opt)
{
    std::vector<BetaIndex> out;
    const Int p = ctx.p(), q = ctx.q();
    if (t_internal <= 0 || t_internal % q != 0)
        return out;
    const Int T = t_internal / q;
    // a p^s (p+1) = T + b with 1 <= b <= a_s
    for (int s = 0;; ++s) {
        const Int unit = ctx.pow(s) * (p + 1);
        const Int bmax = admissibility_bound(s, ctx);
        if (unit > T + bmax)
            break;
        for (Int a = std::max<Int>(1, (T + 1 + unit - 1) / unit); a * unit <= T + bmax; ++a) {
            if (a % p == 0)
                continue;
            const Int b = a * unit - T;
            for (int c = 0; c <= s; ++c) {
                BetaIndex idx{a, s, b, c};
                if (beta_admissible(idx, ctx, opt))
                    out.push_back(idx);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Int q_torsion_exponent(Int a, int s, const PrimeContext& ctx)
{
    if (a != 1)
        throw Error(ErrorCode::InvalidParams, "q(a p^s) is only determined for a = 1");
    return ctx.pow(s);
}

Int q1_bound(Int a, int s, const PrimeContext& ctx)
{
    if (s == 0)
        return 1;
    if (a == 1)
        return ctx.pow(s);
    return ctx.pow(s) + ctx.pow(s - 1) - 1;
}

Int t_r(int r, const PrimeContext& ctx)
{
    const Int p = ctx.p();
    return (ctx.pow(2 * r + 1) + 1) / (p + 1);
}

Int a_r(int r, Int t, const PrimeContext& ctx)
{
    const Int p = ctx.p();
    return (t * ctx.pow(2 * r + 1) + t * ctx.pow(2 * r) - ctx.pow(2 * r) + 1) / (p + 1);
}

Int ext0_KR_degree(const PrimeContext& ctx, int n, Int t) { return t * ctx.pow(n) * (ctx.p() + 1) * ctx.q(); }

std::vector<BPGen> enumerate_ext0_KR(const PrimeContext& ctx, int n, Int t)
{
    const Int p = ctx.p(), q = ctx.q();
    if (n < 1 || t < 1 || t % p == 0)
        throw Error(ErrorCode::InvalidParams, "need n >= 1 and t >= 1 prime to p");
    const Int pn = ctx.pow(n);
    const bool torus = t == 1;
    std::vector<BPGen> out;
    // v1^b c1~(a p^s): b + a p^s (p+1) = t p^n (p+1), so p^s | b.  The lower
    // bound leaves at most a few multiples of p^s below p^n.
    for (int s = 0; s <= n; ++s) {
        const Int ps = ctx.pow(s);
        const Int loosest = torus ? std::max<Int>(0, pn - 1 - (ps + (s ? ctx.pow(s - 1) : 1)))
                                  : std::max<Int>(1, pn - (ps + (s ? ctx.pow(s - 1) : 1)));
        const Int top = pn - 1;
        for (Int b = (loosest + ps - 1) / ps * ps; b <= top; b += ps) {
            if (b == 0) {
                // pure power v2^(t p^n): a p^s = t p^n
                if (s == n) {
                    BPGen g;
                    g.kind = BPKind::V2Power;
                    g.v2_exp = t * pn;
                    g.degree = t * pn * (p + 1) * q;
                    out.push_back(g);
                }
                continue;
            }
            const Int rem = t * pn * (p + 1) - b;
            if (rem <= 0 || rem % (ps * (p + 1)) != 0)
                continue;
            const Int a = rem / (ps * (p + 1));
            if (a % p == 0)
                continue;
            const Int q1 = q1_bound(a, s, ctx);
            const Int lower = torus ? std::max<Int>(0, pn - 1 - q1) : pn - q1;
            if (b < lower)
                continue;
            BPGen g;
            g.kind = BPKind::V1C1;
            g.v1_exp = b;
            g.a = a;
            g.s = s;
            g.degree = b * q + a * ps * (p + 1) * q;
            out.push_back(g);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Ext1Result enumerate_ext1_BPK(const PrimeContext& ctx, int n)
{
    const Int p = ctx.p(), q = ctx.q();
    if (n < 2)
        throw Error(ErrorCode::InvalidParams, "need n >= 2");
    const Int pn = ctx.pow(n);
    Ext1Result res;
    // v2^b h_i: b (p+1) = p^i (p^(n-i) - 1)
    for (int i = n; i >= 0; --i) {
        const Int num = ctx.pow(n - i) - 1;
        if (num % (p + 1) != 0)
            continue;
        BPGen g;
        g.kind = BPKind::V2H;
        g.h = i;
        g.v2_exp = ctx.pow(i) * (num / (p + 1));
        g.degree = pn * q;
        res.generators.push_back(g);
    }
    // v2^b c2(p^s), 0 <= b < q(p^s) = p^s; |c2(p^s)| = p^(s+2) q
    for (int s = 0; s + 2 <= n; ++s) {
        const Int rem = pn - ctx.pow(s + 2);
        if (rem < 0 || rem % (p + 1) != 0)
            continue;
        const Int b = rem / (p + 1);
        if (b >= q_torsion_exponent(1, s, ctx))
            continue;
        BPGen g;
        g.kind = BPKind::C2;
        g.a = 1;
        g.s = s;
        g.v2_exp = b;
        g.degree = pn * q;
        res.generators.push_back(g);
    }
    // v2^b w2: degree is a multiple of (p+1) q, p^n q never is
    for (Int b = 0; (p + 1) * (p + 1) + b * (p + 1) <= pn; ++b)
        if ((p + 1) * (p + 1) + b * (p + 1) == pn) {
            BPGen g;
            g.kind = BPKind::W2;
            g.v2_exp = b;
            g.degree = pn * q;
            res.generators.push_back(g);
        }
    res.notes.push_back("c2(a p^s) with a >= 2: q(a p^s) is not determined, candidates not resolved (degree-uncertain)");
    return res;
}

std::vector<AlphaIndex> alpha_generators(const PrimeContext& ctx, Int t_internal)
{
    const Int p = ctx.p(), q = ctx.q();
    if (t_internal <= 0 || t_internal % q != 0)
        return {};
    Int m = t_internal / q;
    int n = 0;
    while (m % p == 0) {
        m /= p;
        ++n;
    }
    return {AlphaIndex{m, n}};
}

NamedClass thom_image(const BetaIndex& idx, const PrimeContext& ctx)
{
    NamedClass c;
    if (idx.c == 0 && idx.a == 1 && idx.s >= 1 && idx.b == ctx.pow(idx.s) - 1)
        c = resolve_named("h0h", {idx.s + 1}, ctx);
    else if (idx.c == 0 && idx.a == 1 && idx.b == ctx.pow(idx.s))
        c = resolve_named("b", {idx.s}, ctx);
    else
        throw Error(ErrorCode::NoDictionaryEntry, "no Thom dictionary entry for " + to_string(idx));
    if (c.s != 2 || c.t != beta_degree(idx, ctx))
        throw std::logic_error("Thom image degree mismatch for " + to_string(idx));
    return c;
}

NamedClass thom_image(const GammaIndex& idx, const PrimeContext& ctx)
{
    // gamma_{p^(n-2) / p^(n-2) - p^(m-1), p^(m-1) - 1} -> h0 h_n h_m
    if (idx.t == 1 && idx.i >= 1) {
        Int pm1 = idx.i + 1;
        int m1 = 0;
        while (pm1 % ctx.p() == 0) {
            pm1 /= ctx.p();
            ++m1;
        }
        if (pm1 == 1 && m1 >= 1 && idx.s == ctx.pow(idx.n) - ctx.pow(m1) && idx.s >= 1) {
            NamedClass c = resolve_named("h0hh", {idx.n + 2, m1 + 1}, ctx);
            if (c.s != 3 || c.t != gamma_degree(idx, ctx))
                throw std::logic_error("Thom image degree mismatch for " + to_string(idx));
            return c;
        }
    }
    throw Error(ErrorCode::NoDictionaryEntry, "no Thom dictionary entry for " + to_string(idx));
}

namespace {

struct Family
{
    std::vector<std::string> params;
    // (filtration, internal degree) of the class
    std::function<std::pair<Int, Int>(const std::map<std::string, Int>&, const PrimeContext&)> bidegree;
    // stem as stated for the family, computed independently of the bidegree
    std::function<Int(const std::map<std::string, Int>&, const PrimeContext&)> stem;
    bool conjectural = false;
    std::string metadata;
    std::function<void(const std::map<std::string, Int>&, const PrimeContext&)> check;
};

const std::map<std::string, Family>& families()
{
    using P = std::map<std::string, Int>;
    using C = PrimeContext;
    static const std::map<std::string, Family> f = [] {
        std::map<std::string, Family> m;
        auto pw = [](const C& c, Int e) { return c.pow(static_cast<int>(e)); };
        auto gt = [pw](const P& x, const C& c) {  // internal degree of gamma~_s
            Int p = c.p(), q = c.q(), s = x.at("s");
            (void)pw;
            return s * p * p * q + (s - 1) * p * q + (s - 2) * q + s - 3;
        };
        auto gstem = [](const P& x, const C& c) {  // stem of gamma_s
            Int p = c.p(), q = c.q(), s = x.at("s");
            return s * p * p * q + (s - 1) * p * q + (s - 2) * q - 3;
        };
        auto g0stem = [](const C& c) { return c.p() * c.q() + 2 * c.q() - 2; };
        auto h0stem = [](const C& c) { return c.q() - 1; };
        auto hstem = [pw](const P& x, const C& c, const char* k) { return pw(c, x.at(k)) * c.q() - 1; };
        auto bstem = [pw](const P& x, const C& c, const char* k) { return pw(c, x.at(k)) * c.q() - 2; };
        auto srange = [](const P& x, const C& c) {
            if (x.at("s") < 3 || x.at("s") >= c.p())
                throw Error(ErrorCode::ParamsOutOfRange, "need 3 <= s < p");
        };

        m["h0hn"] = {{"n"},
                     [pw](const P& x, const C& c) { return std::make_pair<Int, Int>(2, pw(c, x.at("n")) * c.q() + c.q()); },
                     [pw](const P& x, const C& c) { return pw(c, x.at("n")) * c.q() + c.q() - 2; }};
        m["h0bn"] = {{"n"},
                     [pw](const P& x, const C& c) { return std::make_pair<Int, Int>(3, pw(c, x.at("n")) * c.q() + c.q()); },
                     [pw](const P& x, const C& c) { return pw(c, x.at("n")) * c.q() + c.q() - 3; }};
        m["h0hnhm"] = {{"n", "m"},
                       [pw](const P& x, const C& c) {
                           return std::make_pair<Int, Int>(3, (pw(c, x.at("n")) + pw(c, x.at("m")) + 1) * c.q());
                       },
                       [pw](const P& x, const C& c) {
                           return pw(c, x.at("n")) * c.q() + pw(c, x.at("m")) * c.q() + c.q() - 3;
                       }};
        m["h0hnbm"] = {{"n", "m"},
                       [pw](const P& x, const C& c) {
                           return std::make_pair<Int, Int>(4, (pw(c, x.at("n")) + pw(c, x.at("m")) + 1) * c.q());
                       },
                       [pw](const P& x, const C& c) {
                           return pw(c, x.at("n")) * c.q() + pw(c, x.at("m")) * c.q() + c.q() - 4;
                       }};
        m["gamma_s"] = {{"s"}, [gt](const P& x, const C& c) { return std::make_pair(x.at("s"), gt(x, c)); }, gstem,
                        false, "", srange};
        m["gamma_pn_s"] = {{"n", "s"},
                           [](const P& x, const C& c) {
                               GammaIndex g{1, static_cast<int>(x.at("n")), x.at("s"), 1};
                               return std::make_pair<Int, Int>(3, gamma_degree(g, c));
                           },
                           [pw](const P& x, const C& c) {
                               Int n = x.at("n"), s = x.at("s"), p = c.p(), q = c.q();
                               return pw(c, n + 2) * q + (pw(c, n) - s) * (p + 1) * q - q - 3;
                           },
                           false, "Adams-Novikov filtration",
                           [pw](const P& x, const C& c) {
                               if (x.at("s") < 1 || x.at("s") > pw(c, x.at("n")) - 1)
                                   throw Error(ErrorCode::ParamsOutOfRange, "need 1 <= s <= p^n - 1");
                           }};
        m["beta_tpn_s"] = {{"t", "n", "s"},
                           [](const P& x, const C& c) {
                               BetaIndex b{x.at("t"), static_cast<int>(x.at("n")), x.at("s"), 0};
                               return std::make_pair<Int, Int>(2, beta_degree(b, c));
                           },
                           [pw](const P& x, const C& c) {
                               return x.at("t") * pw(c, x.at("n")) * (c.p() + 1) * c.q() - x.at("s") * c.q() - 2;
                           },
                           false, "Adams-Novikov filtration"};
        m["beta_tpn_j_i"] = {{"t", "n", "j", "i"},
                             [](const P& x, const C& c) {
                                 BetaIndex b{x.at("t"), static_cast<int>(x.at("n")), x.at("j"),
                                             static_cast<int>(x.at("i"))};
                                 return std::make_pair<Int, Int>(2, beta_degree(b, c));
                             },
                             [pw](const P& x, const C& c) {
                                 return x.at("t") * pw(c, x.at("n")) * (c.p() + 1) * c.q() - x.at("j") * c.q() - 2;
                             },
                             false, "Adams-Novikov filtration; order p^(i+1) recorded, not verified"};
        m["hn_K"] = {{"n"},
                     [pw](const P& x, const C& c) { return std::make_pair<Int, Int>(1, pw(c, x.at("n")) * c.q()); },
                     [pw](const P& x, const C& c) { return pw(c, x.at("n")) * c.q() - 1; }, false,
                     "Adams-Novikov filtration, V(1) coefficients"};
        auto g0K = [pw](Int filt, Int off) {
            return Family{{"n"},
                          [pw, filt](const P& x, const C& c) {
                              return std::make_pair(filt, pw(c, x.at("n")) * c.q() + c.p() * c.q() + 2 * c.q());
                          },
                          [pw, off](const P& x, const C& c) {
                              return pw(c, x.at("n")) * c.q() + c.p() * c.q() + 2 * c.q() - off;
                          },
                          false, "V(1) coefficients"};
        };
        m["g0hn_K"] = g0K(3, 3);
        m["g0bn_K"] = g0K(4, 4);
        auto g0K2 = [pw](Int filt, Int off) {
            return Family{{"n", "m"},
                          [pw, filt](const P& x, const C& c) {
                              return std::make_pair(filt, (pw(c, x.at("n")) + pw(c, x.at("m")) + c.p() + 2) * c.q());
                          },
                          [pw, off](const P& x, const C& c) {
                              return pw(c, x.at("n")) * c.q() + pw(c, x.at("m")) * c.q() + c.p() * c.q() +
                                     2 * c.q() - off;
                          },
                          false, "V(1) coefficients"};
        };
        m["g0hnhm_K"] = g0K2(4, 4);
        m["g0hnbm_K"] = g0K2(5, 5);

        // Products with gamma~_s; stems are sums of factor stems.
        auto prod = [gt, gstem, srange](std::vector<std::string> ps, Int extra_filt, std::function<Int(const P&, const C&)> tpart,
                                       std::function<Int(const P&, const C&)> stempart) {
            ps.push_back("s");
            return Family{ps,
                          [=](const P& x, const C& c) { return std::make_pair(x.at("s") + extra_filt, tpart(x, c) + gt(x, c)); },
                          [=](const P& x, const C& c) { return stempart(x, c) + gstem(x, c); }, false, "", srange};
        };
        auto PN = [pw](const P& x, const C& c) { return pw(c, x.at("n")) * c.q(); };
        auto PM = [pw](const P& x, const C& c) { return pw(c, x.at("m")) * c.q(); };
        auto G0T = [](const C& c) { return c.p() * c.q() + 2 * c.q(); };
        m["g0hn_gamma"] = prod({"n"}, 3, [=](const P& x, const C& c) { return G0T(c) + PN(x, c); },
                               [=](const P& x, const C& c) { return g0stem(c) + hstem(x, c, "n"); });
        m["g0bn_gamma"] = prod({"n"}, 4, [=](const P& x, const C& c) { return G0T(c) + PN(x, c); },
                               [=](const P& x, const C& c) { return g0stem(c) + bstem(x, c, "n"); });
        m["g0hnhm_gamma"] = prod({"n", "m"}, 4, [=](const P& x, const C& c) { return G0T(c) + PN(x, c) + PM(x, c); },
                                 [=](const P& x, const C& c) { return g0stem(c) + hstem(x, c, "n") + hstem(x, c, "m"); });
        m["g0hnbm_gamma"] = prod({"n", "m"}, 5, [=](const P& x, const C& c) { return G0T(c) + PN(x, c) + PM(x, c); },
                                 [=](const P& x, const C& c) { return g0stem(c) + hstem(x, c, "n") + bstem(x, c, "m"); });
        m["h0hn_gamma"] = prod({"n"}, 2, [=](const P& x, const C& c) { return c.q() + PN(x, c); },
                               [=](const P& x, const C& c) { return h0stem(c) + hstem(x, c, "n"); });
        m["h0bn_gamma"] = prod({"n"}, 3, [=](const P& x, const C& c) { return c.q() + PN(x, c); },
                               [=](const P& x, const C& c) { return h0stem(c) + bstem(x, c, "n"); });
        m["h0hnhm_gamma"] = prod({"n", "m"}, 3, [=](const P& x, const C& c) { return c.q() + PN(x, c) + PM(x, c); },
                                 [=](const P& x, const C& c) { return h0stem(c) + hstem(x, c, "n") + hstem(x, c, "m"); });
        m["h0hnbm_gamma"] = prod({"n", "m"}, 4, [=](const P& x, const C& c) { return c.q() + PN(x, c) + PM(x, c); },
                                 [=](const P& x, const C& c) { return h0stem(c) + hstem(x, c, "n") + bstem(x, c, "m"); });

        // Conjectural h0-multiples of g_n, l_n, k_n, l'_n.
        auto conj = [pw](Int filt, Int two_first, Int off) {
            return Family{{"n"},
                          [pw, filt, two_first](const P& x, const C& c) {
                              Int n = x.at("n");
                              Int t = two_first ? 2 * pw(c, n + 1) + pw(c, n) : pw(c, n + 1) + 2 * pw(c, n);
                              return std::make_pair(filt, (t + 1) * c.q());
                          },
                          [pw, two_first, off](const P& x, const C& c) {
                              Int n = x.at("n"), q = c.q();
                              Int base = two_first ? 2 * pw(c, n + 1) * q + pw(c, n) * q : pw(c, n + 1) * q + 2 * pw(c, n) * q;
                              return base + q - off;
                          },
                          true, "conjectural"};
        };
        m["h0gn"] = conj(3, 0, 3);
        m["h0ln"] = conj(4, 0, 4);
        m["h0kn"] = conj(3, 1, 3);
        m["h0lpn"] = conj(4, 1, 4);
        return m;
    }();
    return f;
}

}  // namespace

std::vector<std::string> stem_families()
{
    std::vector<std::string> r;
    for (const auto& [k, v] : families())
        r.push_back(k);
    return r;
}

StemResult stem_of(const std::string& family, const std::map<std::string, Int>& params, const PrimeContext& ctx)
{
    auto it = families().find(family);
    if (it == families().end())
        throw Error(ErrorCode::UnknownFamily, "unknown family '" + family + "'");
    const Family& f = it->second;
    for (const auto& k : f.params)
        if (!params.count(k))
            throw Error(ErrorCode::InvalidParams, "family " + family + " needs parameter '" + k + "'");
    for (const auto& [k, v] : params)
        if (std::find(f.params.begin(), f.params.end(), k) == f.params.end())
            throw Error(ErrorCode::InvalidParams, "family " + family + " has no parameter '" + k + "'");
    if (f.check)
        f.check(params, ctx);
    StemResult r;
    r.stem = f.stem(params, ctx);
    r.bidegree = f.bidegree(params, ctx);
    r.conjectural = f.conjectural;
    r.metadata = f.metadata;
    if (r.bidegree->second - r.bidegree->first != r.stem)
        throw std::logic_error("stem formula disagrees with bidegree for " + family);
    return r;
}

std::string to_string(const BetaIndex& idx)
{
    return "beta[" + std::to_string(idx.a) + "," + std::to_string(idx.s) + "," + std::to_string(idx.b) + "," +
           std::to_string(idx.c) + "]";
}

std::string to_string(const GammaIndex& idx)
{
    std::string r = "gamma[" + std::to_string(idx.t) + "," + std::to_string(idx.n) + "," + std::to_string(idx.s);
    if (idx.i != 1)
        r += "," + std::to_string(idx.i);
    return r + "]";
}

std::string to_string(const AlphaIndex& idx)
{
    return "alpha[" + std::to_string(idx.t) + "," + std::to_string(idx.n) + "]";
}

std::string to_string(const BPGen& g)
{
    auto v2 = [](Int e) { return e ? "v2^" + std::to_string(e) + " " : std::string(); };
    switch (g.kind) {
    case BPKind::V2Power: return "v2^" + std::to_string(g.v2_exp);
    case BPKind::V1C1:
        return (g.v1_exp ? "v1^" + std::to_string(g.v1_exp) + " " : std::string()) + "c1~[" + std::to_string(g.a) +
               "," + std::to_string(g.s) + "]";
    case BPKind::V2H: return v2(g.v2_exp) + "h" + std::to_string(g.h);
    case BPKind::C2: return v2(g.v2_exp) + "c2[" + std::to_string(g.a) + "," + std::to_string(g.s) + "]";
    case BPKind::W2: return v2(g.v2_exp) + "w2";
    }
    return "?";
}

namespace {

std::vector<Int> parse_bracket(const std::string& text, const std::string& head, std::size_t min_n, std::size_t max_n)
{
    std::regex re("^\\s*" + head + "\\[\\s*(\\d+(\\s*,\\s*\\d+)*)\\s*\\]\\s*$");
    std::smatch m;
    if (!std::regex_match(text, m, re))
        throw Error(ErrorCode::ParseError, "cannot parse '" + text + "' as " + head + "[...]");
    std::vector<Int> v;
    std::string body = m[1];
    std::regex num("\\d+");
    for (auto it = std::sregex_iterator(body.begin(), body.end(), num); it != std::sregex_iterator(); ++it) {
        if (it->str().size() > 15)
            throw Error(ErrorCode::ParseError, "index too large in '" + text + "'");
        v.push_back(std::stoll(it->str()));
    }
    if (v.size() < min_n || v.size() > max_n)
        throw Error(ErrorCode::ParseError, "wrong number of indices in '" + text + "'");
    return v;
}

}  // namespace

BetaIndex parse_beta(const std::string& text)
{
    auto v = parse_bracket(text, "beta", 3, 4);
    return {v[0], static_cast<int>(v[1]), v[2], v.size() > 3 ? static_cast<int>(v[3]) : 0};
}

GammaIndex parse_gamma(const std::string& text)
{
    auto v = parse_bracket(text, "gamma", 3, 4);
    return {v[0], static_cast<int>(v[1]), v[2], v.size() > 3 ? v[3] : 1};
}

}  // namespace maycalc
