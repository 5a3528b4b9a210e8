#include "maycalc/core.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>
#include <sstream>

namespace maycalc {

const char* error_code_name(ErrorCode c)
{
    switch (c) {
    case ErrorCode::InvalidPrime: return "InvalidPrime";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::ParamsOutOfRange: return "ParamsOutOfRange";
    case ErrorCode::MissingRepresentative: return "MissingRepresentative";
    case ErrorCode::InvalidRange: return "InvalidRange";
    case ErrorCode::InsufficientWindow: return "InsufficientWindow";
    case ErrorCode::WindowTooLarge: return "WindowTooLarge";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::NoDictionaryEntry: return "NoDictionaryEntry";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IOError: return "IOError";
    }
    return "Unknown";
}

bool is_prime(Int n)
{
    if (n < 2)
        return false;
    for (Int d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

Int ipow(Int base, int exp)
{
    if (exp < 0)
        throw Error(ErrorCode::InvalidParams, "negative exponent");
    Int r = 1;
    for (int k = 0; k < exp; ++k) {
        if (base != 0 && std::abs(r) > std::numeric_limits<Int>::max() / std::abs(base))
            throw Error(ErrorCode::InvalidParams, "integer overflow in power");
        r *= base;
    }
    return r;
}

PrimeContext::PrimeContext(int p) : p_(p)
{
    if (p < 3 || !is_prime(p) || p > 46337)
        throw Error(ErrorCode::InvalidPrime, "prime must be an odd prime, got " + std::to_string(p));
}

std::uint32_t PrimeContext::reduce(Int x) const
{
    Int r = x % p_;
    if (r < 0)
        r += p_;
    return static_cast<std::uint32_t>(r);
}

std::uint32_t PrimeContext::inv(std::uint32_t x) const
{
    // Fermat: x^(p-2)
    std::uint64_t r = 1, b = x % p_;
    for (int e = p_ - 2; e > 0; e >>= 1) {
        if (e & 1)
            r = r * b % p_;
        b = b * b % p_;
    }
    return static_cast<std::uint32_t>(r);
}

std::string to_string(const TriDegree& d)
{
    return "(" + std::to_string(d.s) + "," + std::to_string(d.t) + "," + std::to_string(d.u) + ")";
}

TriDegree tridegree(const Generator& g, const PrimeContext& ctx)
{
    const Int p = ctx.p();
    switch (g.kind) {
    case GenKind::H: return {1, 2 * (ctx.pow(g.i) - 1) * ctx.pow(g.j), 2 * g.i - 1};
    case GenKind::B: return {2, 2 * (ctx.pow(g.i) - 1) * ctx.pow(g.j + 1), p * (2 * g.i - 1)};
    case GenKind::A: return {1, 2 * ctx.pow(g.i) - 1, 2 * g.i + 1};
    }
    return {};
}

std::string to_string(const Generator& g)
{
    switch (g.kind) {
    case GenKind::A: return "a" + std::to_string(g.i);
    case GenKind::H: return "h[" + std::to_string(g.i) + "," + std::to_string(g.j) + "]";
    case GenKind::B: return "b[" + std::to_string(g.i) + "," + std::to_string(g.j) + "]";
    }
    return "?";
}

int Monomial::filtration() const
{
    int s = 0;
    for (const auto& f : factors)
        s += f.gen.filtration() * f.exp;
    return s;
}

int Monomial::odd_count() const
{
    int c = 0;
    for (const auto& f : factors)
        if (f.gen.odd())
            c += f.exp;
    return c;
}

TriDegree tridegree(const MonoKey& k, const PrimeContext& ctx)
{
    TriDegree d;
    for (const auto& f : k)
        d = d + tridegree(f.gen, ctx) * f.exp;
    return d;
}

TriDegree tridegree(const Monomial& m, const PrimeContext& ctx) { return tridegree(m.factors, ctx); }

Element::Element(const Monomial& m)
{
    if (m.coeff != 0)
        terms_[m.factors] = m.coeff;
}

void Element::add_term(const MonoKey& k, Int c, const PrimeContext& ctx)
{
    std::uint32_t r = ctx.reduce(c);
    if (r == 0)
        return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, r);
        return;
    }
    std::uint32_t v = (it->second + r) % ctx.p();
    if (v == 0)
        terms_.erase(it);
    else
        it->second = v;
}

void Element::add(const Element& o, const PrimeContext& ctx, Int scale)
{
    for (const auto& [k, c] : o.terms_)
        add_term(k, static_cast<Int>(c) * scale, ctx);
}

Element Element::scaled(Int c, const PrimeContext& ctx) const
{
    Element r;
    r.add(*this, ctx, c);
    return r;
}

std::vector<Monomial> Element::monomials() const
{
    std::vector<Monomial> r;
    for (const auto& [k, c] : terms_)
        r.push_back({k, c});
    return r;
}

int multiply_keys(const MonoKey& x, const MonoKey& y, MonoKey& out)
{
    out.clear();
    out.reserve(x.size() + y.size());
    // Moving an odd factor of y past each odd factor of x that sorts after it.
    int swaps = 0;
    int odd_x_remaining = 0;
    for (const auto& f : x)
        if (f.gen.odd())
            odd_x_remaining += f.exp;
    std::size_t a = 0, b = 0;
    while (a < x.size() || b < y.size()) {
        if (b == y.size() || (a < x.size() && x[a].gen < y[b].gen)) {
            if (x[a].gen.odd())
                odd_x_remaining -= x[a].exp;
            out.push_back(x[a++]);
        }
        else if (a == x.size() || y[b].gen < x[a].gen) {
            if (y[b].gen.odd())
                swaps += odd_x_remaining * y[b].exp;
            out.push_back(y[b++]);
        }
        else {
            if (x[a].gen.odd())
                return 0;
            out.push_back({x[a].gen, x[a].exp + y[b].exp});
            ++a;
            ++b;
        }
    }
    return (swaps & 1) ? -1 : 1;
}

Element multiply(const Element& x, const Element& y, const PrimeContext& ctx)
{
    Element r;
    MonoKey k;
    for (const auto& [kx, cx] : x.terms())
        for (const auto& [ky, cy] : y.terms()) {
            int sg = multiply_keys(kx, ky, k);
            if (sg != 0)
                r.add_term(k, static_cast<Int>(sg) * cx * cy, ctx);
        }
    return r;
}

Element multiply(const Monomial& x, const Monomial& y, const PrimeContext& ctx)
{
    return multiply(Element(x), Element(y), ctx);
}

std::vector<Generator> generators_bounded(const PrimeContext& ctx, Int t_max)
{
    std::vector<Generator> out;
    auto fits = [&](const Generator& g) { return tridegree(g, ctx).t <= t_max; };
    for (int i = 0; fits(Generator::a(i)); ++i)
        out.push_back(Generator::a(i));
    for (int i = 1; fits(Generator::h(i, 0)); ++i)
        for (int j = 0; fits(Generator::h(i, j)); ++j)
            out.push_back(Generator::h(i, j));
    for (int i = 1; fits(Generator::b(i, 0)); ++i)
        for (int j = 0; fits(Generator::b(i, j)); ++j)
            out.push_back(Generator::b(i, j));
    return out;
}

std::vector<Monomial> enumerate_basis(const PrimeContext& ctx, Int s, Int t)
{
    std::vector<Monomial> out;
    if (s < 0 || t < 0)
        return out;
    if (s == 0) {
        if (t == 0)
            out.push_back(Monomial{});
        return out;
    }
    if (t < s)
        return out;
    const auto gens = generators_bounded(ctx, t);
    std::vector<TriDegree> deg;
    for (const auto& g : gens)
        deg.push_back(tridegree(g, ctx));

    MonoKey cur;
    std::function<void(std::size_t, Int, Int)> rec = [&](std::size_t k, Int sr, Int tr) {
        if (sr == 0) {
            if (tr == 0)
                out.push_back({cur, 1});
            return;
        }
        // every remaining factor has t >= s, so t_rem < s_rem is hopeless
        if (tr < sr)
            return;
        for (std::size_t idx = k; idx < gens.size(); ++idx) {
            const auto& d = deg[idx];
            if (d.s > sr || d.t > tr)
                continue;
            int max_e = gens[idx].odd() ? 1 : static_cast<int>(std::min(sr / d.s, tr / d.t));
            for (int e = 1; e <= max_e; ++e) {
                cur.push_back({gens[idx], e});
                rec(idx + 1, sr - d.s * e, tr - d.t * e);
                cur.pop_back();
            }
        }
    };
    rec(0, s, t);
    std::sort(out.begin(), out.end(),
              [](const Monomial& x, const Monomial& y) { return x.factors < y.factors; });
    return out;
}

Int degree_residue(const Generator& g, const PrimeContext& ctx, Int modulus)
{
    if (modulus < 1)
        throw Error(ErrorCode::InvalidParams, "modulus must be >= 1");
    return tridegree(g, ctx).t % modulus;
}

std::string to_string(const Monomial& m)
{
    std::ostringstream os;
    bool first = true;
    if (m.coeff != 1 || m.factors.empty()) {
        os << m.coeff;
        first = false;
    }
    for (const auto& f : m.factors) {
        if (!first)
            os << ' ';
        first = false;
        os << to_string(f.gen);
        if (f.exp != 1)
            os << '^' << f.exp;
    }
    return os.str();
}

std::string to_string(const Element& e)
{
    if (e.is_zero())
        return "0";
    std::string r;
    for (const auto& m : e.monomials()) {
        if (!r.empty())
            r += " + ";
        r += to_string(m);
    }
    return r;
}

namespace {

[[noreturn]] void parse_fail(const std::string& text, std::size_t pos, const std::string& what)
{
    throw Error(ErrorCode::ParseError,
                "cannot parse monomial '" + text + "' at column " + std::to_string(pos + 1) + ": " + what);
}

Int read_int(const std::string& s, std::size_t& pos)
{
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
        ++pos;
    if (start == pos)
        parse_fail(s, pos, "expected integer");
    if (pos - start > 12)
        parse_fail(s, start, "integer too large");
    return std::stoll(s.substr(start, pos - start));
}

void expect_char(const std::string& s, std::size_t& pos, char c)
{
    if (pos >= s.size() || s[pos] != c)
        parse_fail(s, pos, std::string("expected '") + c + "'");
    ++pos;
}

}  // namespace

Monomial parse_monomial(const std::string& text, const PrimeContext& ctx)
{
    std::istringstream is(text);
    std::vector<std::string> toks;
    for (std::string tok; is >> tok;)
        toks.push_back(tok);
    if (toks.empty())
        parse_fail(text, 0, "empty monomial");
    Int coeff = 1;
    std::size_t start = 0;
    if (std::isdigit(static_cast<unsigned char>(toks[0][0]))) {
        std::size_t pos = 0;
        coeff = read_int(toks[0], pos);
        if (pos != toks[0].size())
            parse_fail(text, 0, "bad coefficient");
        start = 1;
    }
    Element acc(Monomial{{}, ctx.reduce(coeff)});
    for (std::size_t k = start; k < toks.size(); ++k) {
        const std::string& tk = toks[k];
        std::size_t pos = 0;
        Generator g;
        if (tk[0] == 'a') {
            ++pos;
            g = Generator::a(static_cast<int>(read_int(tk, pos)));
        }
        else if (tk[0] == 'h' || tk[0] == 'b') {
            ++pos;
            expect_char(tk, pos, '[');
            int i = static_cast<int>(read_int(tk, pos));
            expect_char(tk, pos, ',');
            int j = static_cast<int>(read_int(tk, pos));
            expect_char(tk, pos, ']');
            if (i < 1)
                parse_fail(tk, 0, "first index must be >= 1");
            g = tk[0] == 'h' ? Generator::h(i, j) : Generator::b(i, j);
        }
        else
            parse_fail(tk, 0, "unknown generator");
        int e = 1;
        if (pos < tk.size() && tk[pos] == '^') {
            ++pos;
            e = static_cast<int>(read_int(tk, pos));
            if (e < 1)
                parse_fail(tk, pos, "exponent must be >= 1");
        }
        if (pos != tk.size())
            parse_fail(tk, pos, "trailing characters");
        if (g.odd() && e > 1) {
            acc = Element();
            continue;
        }
        acc = multiply(acc, Element(Monomial{{{g, e}}, 1}), ctx);
    }
    // Canonicalised; a vanishing product is coefficient 0 on the empty key.
    if (acc.is_zero())
        return Monomial{{}, 0};
    auto ms = acc.monomials();
    return ms.front();
}

Element parse_element(const std::string& text, const PrimeContext& ctx)
{
    Element r;
    std::string trimmed = text;
    trimmed.erase(0, trimmed.find_first_not_of(' '));
    if (trimmed == "0")
        return r;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t plus = text.find(" + ", pos);
        std::string part = text.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos);
        Monomial m = parse_monomial(part, ctx);
        r.add(Element(m), ctx);
        if (plus == std::string::npos)
            break;
        pos = plus + 3;
    }
    return r;
}

}  // namespace maycalc
