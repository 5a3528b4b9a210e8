#pragma once
// May d1 and E2 = H(E1, d1), one (s,t) cell at a time.

#include <map>
#include <string>
#include <vector>

#include "maycalc/core.hpp"
#include "maycalc/linalg.hpp"

namespace maycalc {

Element d1(const Generator& g, const PrimeContext& ctx);
Element d1(const Monomial& m, const PrimeContext& ctx);
Element d1(const Element& x, const PrimeContext& ctx);

// Products of a0, h[1,j], b[1,j] and the pair h[1,0] a1.
bool is_known_permanent(const MonoKey& k);

struct WeightBlock
{
    Int u = 0;
    std::vector<MonoKey> basis;
    std::size_t cycle_dim = 0;
    std::size_t boundary_dim = 0;
    std::size_t e2_dim = 0;
    std::vector<Element> representatives;
    std::vector<Element> boundaries;  // echelon basis of d1-image
    // Cycles are spanned by boundaries and products of known permanent cycles.
    bool permanent_span = false;

    std::size_t e1_dim() const { return basis.size(); }
};

struct E2Report
{
    Int s = 0, t = 0;
    std::map<Int, WeightBlock> per_weight;
    std::size_t e1_total = 0;
    std::size_t e2_total = 0;

    // Every E2 class of the cell is a product of known permanent cycles.
    bool all_permanent() const;
    std::vector<Element> representatives() const;
};

struct E2Options
{
    // Recompute with the generator order reversed: columns permuted and
    // basis monomials rescaled by the reordering sign.
    bool reversed_order = false;
};

E2Report e2_at(const PrimeContext& ctx, Int s, Int t, const E2Options& opt = {});

// Coordinates of the weight-u part of x in a block basis.
FpVec coordinates(const Element& x, const WeightBlock& block, const PrimeContext& ctx);
Element from_coordinates(const FpVec& v, const WeightBlock& block, const PrimeContext& ctx);

// Split an element of tridegree (s,t,*) by weight.
std::map<Int, Element> split_by_weight(const Element& x, const PrimeContext& ctx);

// Zero iff x (a cycle in the report's cell) is a d1-boundary.
bool is_boundary(const Element& x, const E2Report& rep, const PrimeContext& ctx);

// Rank of the span of the images of xs in E2 of the report's cell.
std::size_t e2_span_rank(const std::vector<Element>& xs, const E2Report& rep, const PrimeContext& ctx);

}  // namespace maycalc
