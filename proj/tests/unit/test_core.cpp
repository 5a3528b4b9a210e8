#include "doctest.h"

#include <set>

#include "maycalc/core.hpp"
#include "../support/oracles.hpp"

using namespace maycalc;

namespace {
std::set<std::string> basis_text(const PrimeContext& ctx, Int s, Int t)
{
    std::set<std::string> r;
    for (const auto& m : enumerate_basis(ctx, s, t))
        r.insert(to_string(m));
    return r;
}
}  // namespace

TEST_CASE("prime context")
{
    CHECK(is_prime(7));
    CHECK_FALSE(is_prime(9));
    CHECK_THROWS_AS(PrimeContext(2), Error);
    CHECK_THROWS_AS(PrimeContext(9), Error);
    PrimeContext c(5);
    CHECK(c.q() == 8);
    CHECK(c.inv(2) == 3);
    CHECK(c.reduce(-1) == 4);
}

TEST_CASE("generator tridegrees")
{
    PrimeContext c5(5);
    CHECK(tridegree(Generator::h(1, 0), c5) == TriDegree{1, 8, 1});
    CHECK(tridegree(Generator::b(1, 0), c5) == TriDegree{2, 40, 5});
    CHECK(tridegree(Generator::a(0), c5) == TriDegree{1, 1, 1});
    for (int p : {3, 5, 7}) {
        PrimeContext c(p);
        for (const auto& g : oracle::generators_upto(p, 5000)) {
            Generator G = g.kind == 'a' ? Generator::a(g.i) : g.kind == 'h' ? Generator::h(g.i, g.j) : Generator::b(g.i, g.j);
            TriDegree d = tridegree(G, c);
            CHECK(d.s == g.s);
            CHECK(d.t == g.t);
            CHECK(to_string(G) == g.text());
        }
    }
}

TEST_CASE("monomial tridegree is additive")
{
    PrimeContext c(7);
    Monomial m = parse_monomial("b[1,3] b[1,1]", c);
    TriDegree d = tridegree(m, c);
    CHECK(d == tridegree(Generator::b(1, 3), c) + tridegree(Generator::b(1, 1), c));
    CHECK(d.s == 4);
    CHECK(d.t == 29400);
    CHECK(d.u == 2 * 7);
}

TEST_CASE("generators_bounded")
{
    PrimeContext c5(5), c7(7);
    auto g = generators_bounded(c5, 8);
    REQUIRE(g.size() == 2);
    CHECK(g[0] == Generator::a(0));
    CHECK(g[1] == Generator::h(1, 0));
    CHECK(generators_bounded(c5, 0).empty());
    auto g7 = generators_bounded(c7, 600);
    std::set<std::string> names;
    for (const auto& x : g7) {
        names.insert(to_string(x));
        CHECK(tridegree(x, c7).t <= 600);
    }
    for (const char* n : {"h[1,0]", "h[1,1]", "h[1,2]", "h[2,0]", "a0", "a1", "a2", "b[1,0]", "b[1,1]"})
        CHECK(names.count(n) == 1);
    CHECK(names.size() == oracle::generators_upto(7, 600).size());
}

TEST_CASE("products and signs")
{
    PrimeContext c(5);
    CHECK(parse_monomial("h[1,0] h[1,0]", c).coeff == 0);
    Element x = multiply(parse_monomial("a0", c), parse_monomial("b[1,0]", c), c);
    CHECK(to_string(x) == "a0 b[1,0]");
    Element y = multiply(parse_monomial("h[1,1]", c), parse_monomial("h[1,0]", c), c);
    CHECK(to_string(y) == "4 h[1,0] h[1,1]");
    MonoKey out;
    CHECK(multiply_keys(parse_monomial("h[1,0]", c).factors, parse_monomial("h[1,0]", c).factors, out) == 0);
}

TEST_CASE("text round trip")
{
    PrimeContext c(5);
    Monomial m = parse_monomial("2 a0^2 h[1,0] b[1,3]", c);
    CHECK(m.coeff == 2);
    CHECK(to_string(m) == "2 a0^2 h[1,0] b[1,3]");
    CHECK(to_string(parse_monomial("b[1,3] h[1,0] a0^2", c)) == "a0^2 h[1,0] b[1,3]");
    Element e = parse_element("h[2,0] + 2 a0 h[1,1] + h[2,0]", c);
    CHECK(to_string(e) == "2 a0 h[1,1] + 2 h[2,0]");
    CHECK(to_string(Element()) == "0");
    CHECK_THROWS_AS(parse_monomial("x[1,2]", c), Error);
    CHECK_THROWS_AS(parse_monomial("h[0,1]", c), Error);
    CHECK(to_string(TriDegree{1, 8, 1}) == "(1,8,1)");
}

TEST_CASE("degree residues")
{
    PrimeContext c(7);
    CHECK(degree_residue(Generator::h(2, 1), c, 28812) == 672);
    CHECK(degree_residue(Generator::a(1), c, 28812) == 13);
    CHECK(degree_residue(Generator::b(1, 2), c, 1) == 0);
}

TEST_CASE("enumerate_basis examples")
{
    PrimeContext c7(7), c5(5);
    const Int tq = (2401 + 49) * 12;
    CHECK(basis_text(c7, 4, tq) == std::set<std::string>{"b[1,1] b[1,3]"});
    CHECK(basis_text(c7, 3, tq + 12) == std::set<std::string>{"h[1,0] h[1,2] h[1,4]"});
    CHECK(basis_text(c5, 0, 0) == std::set<std::string>{"1"});
    CHECK(basis_text(c5, 2, 16).empty());
    CHECK(basis_text(c5, -1, 0).empty());
    CHECK(basis_text(c5, 1, -3).empty());
}

TEST_CASE("enumerate_basis agrees with the multiset oracle on a small window")
{
    for (int p : {3, 5}) {
        PrimeContext c(p);
        auto all = oracle::all_monomials(p, 4, 300);
        for (Int s = 0; s <= 4; ++s)
            for (Int t = 0; t <= 300; ++t) {
                auto it = all.find({s, t});
                auto want = it == all.end() ? std::set<std::string>{} : it->second;
                CHECK_MESSAGE(basis_text(c, s, t) == want, "p=" << p << " s=" << s << " t=" << t);
            }
    }
}
