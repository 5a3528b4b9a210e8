#pragma once
// Greek-letter index combinatorics on the BP side.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "maycalc/certify.hpp"

namespace maycalc {

// beta_{a p^s / b, c+1}
struct BetaIndex
{
    Int a = 1;
    int s = 0;
    Int b = 1;
    int c = 0;
    auto operator<=>(const BetaIndex&) const = default;
};

// gamma index (t, n, s, i): the element gamma_{t p^n / s, i}
struct GammaIndex
{
    Int t = 1;
    int n = 0;
    Int s = 1;
    Int i = 1;
    auto operator<=>(const GammaIndex&) const = default;
};

struct AlphaIndex
{
    Int t = 1;
    int n = 0;
    auto operator<=>(const AlphaIndex&) const = default;
};

// Bidegree (2, a p^s (p+1) q - b q).
Int beta_degree(const BetaIndex& idx, const PrimeContext& ctx);
Int gamma_degree(const GammaIndex& idx, const PrimeContext& ctx);
Int alpha_degree(const AlphaIndex& idx, const PrimeContext& ctx);

struct AdmissibilityOptions
{
    // Use the condition b <= s (instead of b <= p^s) for a = 1.
    bool strict_verbatim = false;
};

// a_0 = 1, a_k = p^k + p^(k-1) - 1
Int admissibility_bound(int k, const PrimeContext& ctx);
bool beta_admissible(const BetaIndex& idx, const PrimeContext& ctx, const AdmissibilityOptions& opt = {});
std::vector<BetaIndex> enumerate_beta(const PrimeContext& ctx, Int t_internal, const AdmissibilityOptions& opt = {});

enum class BPKind { V2Power, V1C1, V2H, C2, W2 };

struct BPGen
{
    BPKind kind = BPKind::V2Power;
    Int v1_exp = 0;  // V1C1
    Int v2_exp = 0;  // V2Power, V2H, W2
    int h = 0;       // V2H
    Int a = 1;       // V1C1, C2: index a p^s
    int s = 0;
    Int degree = 0;
    bool degree_uncertain = false;
    auto operator<=>(const BPGen&) const = default;
};

Int q_torsion_exponent(Int a, int s, const PrimeContext& ctx);    // q(a p^s), a = 1 only
Int q1_bound(Int a, int s, const PrimeContext& ctx);              // q_1(a p^s)
Int t_r(int r, const PrimeContext& ctx);                          // (p^(2r+1)+1)/(p+1)
Int a_r(int r, Int t, const PrimeContext& ctx);                   // (t p^(2r+1) + t p^(2r) - p^(2r) + 1)/(p+1)

std::vector<BPGen> enumerate_ext0_KR(const PrimeContext& ctx, int n, Int t);
Int ext0_KR_degree(const PrimeContext& ctx, int n, Int t);  // t p^n (p+1) q

struct Ext1Result
{
    std::vector<BPGen> generators;
    std::vector<std::string> notes;  // degree-uncertain torsion candidates
};
Ext1Result enumerate_ext1_BPK(const PrimeContext& ctx, int n);

std::vector<AlphaIndex> alpha_generators(const PrimeContext& ctx, Int t_internal);

// Adams class for a Thom-dictionary pattern; throws NoDictionaryEntry.
NamedClass thom_image(const BetaIndex& idx, const PrimeContext& ctx);
NamedClass thom_image(const GammaIndex& idx, const PrimeContext& ctx);

struct StemResult
{
    Int stem = 0;
    std::optional<std::pair<Int, Int>> bidegree;  // (s,t) where the family has one
    bool conjectural = false;
    std::string metadata;
};

std::vector<std::string> stem_families();
StemResult stem_of(const std::string& family, const std::map<std::string, Int>& params, const PrimeContext& ctx);

// Text forms.
std::string to_string(const BetaIndex& idx);
std::string to_string(const GammaIndex& idx);
std::string to_string(const AlphaIndex& idx);
std::string to_string(const BPGen& g);
BetaIndex parse_beta(const std::string& text);
GammaIndex parse_gamma(const std::string& text);

}  // namespace maycalc
