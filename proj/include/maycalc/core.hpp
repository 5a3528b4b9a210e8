#pragma once
// Trigraded May E1 algebra E(h_ij) (x) P(b_ij) (x) P(a_i) over F_p, p odd.

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace maycalc {

using Int = std::int64_t;

enum class ErrorCode
{
    InvalidPrime,
    UnknownName,
    ParamsOutOfRange,
    MissingRepresentative,
    InvalidRange,
    InsufficientWindow,
    WindowTooLarge,
    InvalidParams,
    NoDictionaryEntry,
    UnknownFamily,
    ParseError,
    IOError,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error
{
public:
    Error(ErrorCode code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

bool is_prime(Int n);
// Exact power; throws InvalidParams on overflow of int64.
Int ipow(Int base, int exp);

class PrimeContext
{
public:
    explicit PrimeContext(int p);
    int p() const { return p_; }
    Int q() const { return 2 * (p_ - 1); }
    Int pow(int e) const { return ipow(p_, e); }
    std::uint32_t inv(std::uint32_t x) const;
    std::uint32_t neg(std::uint32_t x) const { return x == 0 ? 0 : p_ - x; }
    std::uint32_t reduce(Int x) const;

private:
    int p_;
};

struct TriDegree
{
    Int s = 0, t = 0, u = 0;
    TriDegree operator+(const TriDegree& o) const { return {s + o.s, t + o.t, u + o.u}; }
    TriDegree operator*(Int k) const { return {s * k, t * k, u * k}; }
    auto operator<=>(const TriDegree&) const = default;
};

std::string to_string(const TriDegree& d);

enum class GenKind : std::uint8_t { A = 0, H = 1, B = 2 };

// Canonical order: A(i) < H(i,j) < B(i,j); lexicographic in (i,j) within a kind.
struct Generator
{
    GenKind kind = GenKind::A;
    int i = 0;
    int j = 0;  // always 0 for A

    static Generator h(int i, int j) { return {GenKind::H, i, j}; }
    static Generator b(int i, int j) { return {GenKind::B, i, j}; }
    static Generator a(int i) { return {GenKind::A, i, 0}; }

    int filtration() const { return kind == GenKind::B ? 2 : 1; }
    // Only the exterior generators are odd in total degree s+t.
    bool odd() const { return kind == GenKind::H; }
    auto operator<=>(const Generator&) const = default;
};

TriDegree tridegree(const Generator& g, const PrimeContext& ctx);
std::string to_string(const Generator& g);

struct Factor
{
    Generator gen;
    int exp = 1;
    auto operator<=>(const Factor&) const = default;
};

using MonoKey = std::vector<Factor>;  // sorted by generator, exponents >= 1

struct Monomial
{
    MonoKey factors;
    std::uint32_t coeff = 1;

    int filtration() const;
    int odd_count() const;
    bool operator==(const Monomial&) const = default;
};

TriDegree tridegree(const Monomial& m, const PrimeContext& ctx);
TriDegree tridegree(const MonoKey& k, const PrimeContext& ctx);

class Element
{
public:
    Element() = default;
    explicit Element(const Monomial& m);
    static Element one() { return Element(Monomial{}); }

    const std::map<MonoKey, std::uint32_t>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const MonoKey& k, Int c, const PrimeContext& ctx);
    void add(const Element& o, const PrimeContext& ctx, Int scale = 1);
    Element scaled(Int c, const PrimeContext& ctx) const;
    std::vector<Monomial> monomials() const;

    bool operator==(const Element&) const = default;

private:
    std::map<MonoKey, std::uint32_t> terms_;
};

// Product of two basis keys in canonical order; returns sign (+1/-1) or 0.
int multiply_keys(const MonoKey& x, const MonoKey& y, MonoKey& out);

Element multiply(const Element& x, const Element& y, const PrimeContext& ctx);
Element multiply(const Monomial& x, const Monomial& y, const PrimeContext& ctx);

std::vector<Generator> generators_bounded(const PrimeContext& ctx, Int t_max);

// All coefficient-1 monomials with (s,t), sorted canonically.
std::vector<Monomial> enumerate_basis(const PrimeContext& ctx, Int s, Int t);

Int degree_residue(const Generator& g, const PrimeContext& ctx, Int modulus);

// Text forms: "2 a0^2 h[1,0] b[1,3]"; element terms joined by " + ".
std::string to_string(const Monomial& m);
std::string to_string(const Element& e);
Monomial parse_monomial(const std::string& text, const PrimeContext& ctx);
Element parse_element(const std::string& text, const PrimeContext& ctx);

}  // namespace maycalc
