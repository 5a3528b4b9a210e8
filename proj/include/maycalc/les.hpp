#pragma once
// Ext dimensions of M (Moore), L (cofibre of alpha_1) and K = V(1) through
// their long exact sequences, as intervals.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "maycalc/certify.hpp"

namespace maycalc {

struct DimInterval
{
    Int lo = 0, hi = 0;
    std::vector<std::string> provenance;

    bool exact() const { return lo == hi; }
    bool contains(Int d) const { return lo <= d && d <= hi; }
    std::string str() const;
};

DimInterval operator+(const DimInterval& a, const DimInterval& b);

// Rank of a map as an interval; hi defaults to the min of the dims.
struct RankInterval
{
    Int lo = 0, hi = 0;
};

// ker/coker sizes of a map f: A -> B with rank in r.
DimInterval kernel_dim(const DimInterval& A, const RankInterval& r);
DimInterval cokernel_dim(const DimInterval& B, const RankInterval& r);

struct SphereCell
{
    Int s = 0, t = 0;
    Certificate dim_certificate;
    // E2-witnessed lower bounds on ranks of h0: (s,t)->(s+1,t+q) and a0: (s,t)->(s+1,t+1).
    Int h0_rank_lower = 0;
    Int a0_rank_lower = 0;

    DimInterval dim() const;
};

struct TableOptions
{
    std::size_t max_cells = 200000;
    unsigned threads = 0;  // 0 = hardware concurrency
};

class SphereTable
{
public:
    SphereTable() = default;
    SphereTable(const SphereExt& ext, std::pair<Int, Int> s_range, std::pair<Int, Int> t_range,
                const TableOptions& opt = {});

    bool covers(Int s, Int t) const;
    // Cells with s < 0 or t < 0 are zero and always covered.
    DimInterval dim(Int s, Int t) const;
    const SphereCell& cell(Int s, Int t) const;
    RankInterval a0_rank(Int s, Int t) const;  // out of (s,t)
    RankInterval h0_rank(Int s, Int t) const;
    Int q() const { return q_; }
    int p() const { return p_; }

    // Override rank of a0 / h0 out of a cell (sanity cases only).
    void force_a0_rank(Int s, Int t, RankInterval r) { a0_override_[{s, t}] = r; }
    void force_h0_rank(Int s, Int t, RankInterval r) { h0_override_[{s, t}] = r; }
    // Forget the certification of a cell, keeping only its upper bound.
    void widen(Int s, Int t);

    const std::map<std::pair<Int, Int>, SphereCell>& cells() const { return cells_; }

private:
    int p_ = 3;
    Int q_ = 4;
    std::pair<Int, Int> s_range_{0, -1}, t_range_{0, -1};
    std::map<std::pair<Int, Int>, SphereCell> cells_;
    std::map<std::pair<Int, Int>, RankInterval> a0_override_, h0_override_;
};

SphereTable sphere_table(const SphereExt& ext, std::pair<Int, Int> s_range, std::pair<Int, Int> t_range,
                         const TableOptions& opt = {});

enum class Spectrum { Sphere, M, L, K };
// Cohomology column: Ext(H*X, Z_p). Homology column: Ext(Z_p, H*X).
enum class Column { Cohomology, Homology };

Spectrum parse_spectrum(const std::string& s);
Column parse_column(const std::string& s);
const char* spectrum_name(Spectrum x);

DimInterval ext_dims_M(const SphereTable& table, Int s, Int t);
DimInterval ext_dims_L(const SphereTable& table, Int s, Int t);
DimInterval ext_dims_K(const SphereTable& table, Int s, Int t);
DimInterval ext_dims(const SphereTable& table, Spectrum x, Column c, Int s, Int t);

// Smallest sphere window sufficient for ext_dims at (s,t).
std::pair<std::pair<Int, Int>, std::pair<Int, Int>> required_window(const PrimeContext& ctx, Spectrum x, Column c,
                                                                    Int s, Int t);
SphereTable table_for(const SphereExt& ext, Spectrum x, Column c, Int s, Int t, const TableOptions& opt = {});

}  // namespace maycalc
