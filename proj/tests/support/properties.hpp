#pragma once
// Algebraic property checks shared by the unit tests and the acceptance run.
// Each returns the number of violations and appends a short note per failure.

#include <random>
#include <string>
#include <vector>

#include "maycalc/differential.hpp"
#include "oracles.hpp"

namespace props {

using namespace maycalc;

inline Monomial build(const std::vector<oracle::RandFactor>& fs, const PrimeContext& c, std::uint32_t coeff)
{
    Element e = Element::one();
    for (const auto& f : fs) {
        Generator g = f.kind == 'a' ? Generator::a(f.i) : f.kind == 'h' ? Generator::h(f.i, f.j) : Generator::b(f.i, f.j);
        e = multiply(e, Element(Monomial{{{g, f.e}}, 1}), c);
    }
    auto ms = e.monomials();
    if (ms.empty())
        return Monomial{{}, 0};
    ms.front().coeff = coeff;
    return ms.front();
}

// Nonzero random monomial with a random unit coefficient.
inline Monomial random_monomial(std::mt19937_64& rng, const PrimeContext& c, int max_factors = 4)
{
    std::uniform_int_distribution<std::uint32_t> co(1, c.p() - 1);
    while (true) {
        Monomial m = build(oracle::random_factors(rng, max_factors), c, co(rng));
        if (m.coeff)
            return m;
    }
}

inline int parity(const Monomial& m) { return m.odd_count() % 2; }

inline std::size_t d1_squared(const PrimeContext& c, std::size_t n, std::uint64_t seed, std::vector<std::string>& notes)
{
    std::mt19937_64 rng(seed);
    std::size_t bad = 0;
    for (std::size_t k = 0; k < n; ++k) {
        Monomial m = random_monomial(rng, c, 5);
        if (!d1(d1(m, c), c).is_zero()) {
            ++bad;
            notes.push_back("d1 d1 != 0 on " + to_string(m));
        }
    }
    return bad;
}

inline std::size_t derivation_law(const PrimeContext& c, std::size_t n, std::uint64_t seed, std::vector<std::string>& notes)
{
    std::mt19937_64 rng(seed);
    std::size_t bad = 0;
    for (std::size_t k = 0; k < n; ++k) {
        Monomial x = random_monomial(rng, c, 3), y = random_monomial(rng, c, 3);
        Element lhs = d1(multiply(x, y, c), c);
        Element rhs = multiply(d1(x, c), Element(y), c);
        rhs.add(multiply(Element(x), d1(y, c), c), c, parity(x) ? -1 : 1);
        if (!(lhs == rhs)) {
            ++bad;
            notes.push_back("Leibniz fails on " + to_string(x) + " * " + to_string(y));
        }
    }
    return bad;
}

inline std::size_t graded_commutativity(const PrimeContext& c, std::size_t n, std::uint64_t seed,
                                        std::vector<std::string>& notes)
{
    std::mt19937_64 rng(seed);
    std::size_t bad = 0;
    for (std::size_t k = 0; k < n; ++k) {
        Monomial x = random_monomial(rng, c, 3), y = random_monomial(rng, c, 3);
        Element xy = multiply(x, y, c), yx = multiply(y, x, c);
        if (!(xy == yx.scaled(parity(x) * parity(y) ? -1 : 1, c))) {
            ++bad;
            notes.push_back("commutativity fails on " + to_string(x) + ", " + to_string(y));
        }
    }
    return bad;
}

inline std::size_t associativity(const PrimeContext& c, std::size_t n, std::uint64_t seed, std::vector<std::string>& notes)
{
    std::mt19937_64 rng(seed);
    std::size_t bad = 0;
    for (std::size_t k = 0; k < n; ++k) {
        Monomial x = random_monomial(rng, c, 2), y = random_monomial(rng, c, 2), z = random_monomial(rng, c, 2);
        Element l = multiply(multiply(x, y, c), Element(z), c);
        Element r = multiply(Element(x), multiply(y, z, c), c);
        if (!(l == r)) {
            ++bad;
            notes.push_back("associativity fails on " + to_string(x) + ", " + to_string(y) + ", " + to_string(z));
        }
    }
    return bad;
}

inline std::size_t degree_additivity(const PrimeContext& c, std::size_t n, std::uint64_t seed,
                                     std::vector<std::string>& notes)
{
    std::mt19937_64 rng(seed);
    std::size_t bad = 0;
    for (std::size_t k = 0; k < n; ++k) {
        Monomial x = random_monomial(rng, c, 3), y = random_monomial(rng, c, 3);
        TriDegree want = tridegree(x, c) + tridegree(y, c);
        for (const auto& m : multiply(x, y, c).monomials())
            if (!(tridegree(m, c) == want)) {
                ++bad;
                notes.push_back("degree not additive on " + to_string(x) + " * " + to_string(y));
            }
        for (const auto& m : d1(x, c).monomials()) {
            TriDegree d = tridegree(m, c), s = tridegree(x, c);
            if (d.s != s.s + 1 || d.t != s.t || d.u != s.u - 1) {
                ++bad;
                notes.push_back("d1 degree wrong on " + to_string(x));
            }
        }
    }
    return bad;
}

// enumerate_basis against the exhaustive multiset oracle on s <= s_max, t <= t_max.
inline std::size_t basis_vs_oracle(const PrimeContext& c, Int s_max, Int t_max, std::vector<std::string>& notes)
{
    auto want = oracle::monomial_digests(c.p(), s_max, t_max);
    std::size_t bad = 0;
    for (Int s = 0; s <= s_max; ++s)
        for (Int t = 0; t <= t_max; ++t) {
            std::pair<std::size_t, std::uint64_t> got{0, 0};
            for (const auto& m : enumerate_basis(c, s, t)) {
                ++got.first;
                got.second += oracle::text_hash(to_string(m));
            }
            auto it = want.find({s, t});
            auto w = it == want.end() ? std::pair<std::size_t, std::uint64_t>{0, 0} : it->second;
            if (got != w) {
                ++bad;
                notes.push_back("basis mismatch at p=" + std::to_string(c.p()) + " (" + std::to_string(s) + "," +
                                std::to_string(t) + "): " + std::to_string(got.first) + " vs " +
                                std::to_string(w.first));
            }
        }
    return bad;
}

// E2 dimensions per weight agree between the canonical and reversed generator orders.
inline std::size_t reversal_invariance(const PrimeContext& c, Int s_max, const std::vector<Int>& ts,
                                       std::vector<std::string>& notes)
{
    std::size_t bad = 0;
    for (Int t : ts)
        for (Int s = 0; s <= s_max; ++s) {
            E2Report a = e2_at(c, s, t), b = e2_at(c, s, t, {true});
            bool same = a.e2_total == b.e2_total && a.per_weight.size() == b.per_weight.size();
            for (const auto& [u, blk] : a.per_weight) {
                auto it = b.per_weight.find(u);
                same = same && it != b.per_weight.end() && it->second.e2_dim == blk.e2_dim &&
                       it->second.cycle_dim == blk.cycle_dim && it->second.boundary_dim == blk.boundary_dim;
            }
            if (!same) {
                ++bad;
                notes.push_back("reversal changes E2 at p=" + std::to_string(c.p()) + " (" + std::to_string(s) + "," +
                                std::to_string(t) + ")");
            }
        }
    return bad;
}

// Internal degrees where E1 is nonempty in low filtration, for sampling.
inline std::vector<Int> sample_degrees(const PrimeContext& c, Int t_max, std::size_t n, std::uint64_t seed)
{
    std::vector<Int> ts;
    for (Int t = 0; t <= t_max; ++t)
        if (!enumerate_basis(c, 3, t).empty() || !enumerate_basis(c, 2, t).empty())
            ts.push_back(t);
    std::mt19937_64 rng(seed);
    std::shuffle(ts.begin(), ts.end(), rng);
    if (ts.size() > n)
        ts.resize(n);
    std::sort(ts.begin(), ts.end());
    return ts;
}

}  // namespace props
