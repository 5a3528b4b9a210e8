#pragma once
// Dense echelon spaces over F_p.

#include <cstdint>
#include <map>
#include <vector>

#include "maycalc/core.hpp"

namespace maycalc {

using FpVec = std::vector<std::uint32_t>;

bool is_zero(const FpVec& v);

// Row space kept in echelon form, pivot = first nonzero coordinate, pivot entry 1.
class EchelonSpace
{
public:
    EchelonSpace(const PrimeContext& ctx, std::size_t dim) : ctx_(ctx), dim_(dim) {}

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }

    void reduce(FpVec& v) const;
    // Same as reduce, recording v_in - v_out as a combination of inserted vectors' tags.
    void reduce_tracked(FpVec& v, FpVec& tag) const;

    // Returns true when v was independent of the current span.
    bool insert(FpVec v);
    bool insert_tracked(FpVec v, FpVec tag);

    bool contains(FpVec v) const;

private:
    void axpy(FpVec& v, const FpVec& row, std::uint32_t c) const;

    PrimeContext ctx_;
    std::size_t dim_;
    std::map<std::size_t, std::pair<FpVec, FpVec>> rows_;  // pivot -> (row, tag)
};

struct KernelResult
{
    std::size_t rank = 0;
    std::vector<FpVec> kernel;  // basis of the kernel, in domain coordinates
};

// columns[j] is the image of the j-th domain basis vector.
KernelResult kernel_of(const PrimeContext& ctx, const std::vector<FpVec>& columns, std::size_t domain_dim,
                       std::size_t target_dim);

}  // namespace maycalc
