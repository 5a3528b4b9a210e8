#include "maycalc/linalg.hpp"

namespace maycalc {

bool is_zero(const FpVec& v)
{
    for (auto x : v)
        if (x)
            return false;
    return true;
}

void EchelonSpace::axpy(FpVec& v, const FpVec& row, std::uint32_t c) const
{
    const std::uint64_t p = ctx_.p();
    for (std::size_t k = 0; k < row.size(); ++k)
        if (row[k])
            v[k] = static_cast<std::uint32_t>((v[k] + (p - c) * row[k]) % p);
}

void EchelonSpace::reduce(FpVec& v) const
{
    for (const auto& [piv, rt] : rows_)
        if (v[piv])
            axpy(v, rt.first, v[piv]);
}

void EchelonSpace::reduce_tracked(FpVec& v, FpVec& tag) const
{
    for (const auto& [piv, rt] : rows_)
        if (v[piv]) {
            std::uint32_t c = v[piv];
            axpy(v, rt.first, c);
            axpy(tag, rt.second, c);
        }
}

bool EchelonSpace::insert(FpVec v)
{
    FpVec tag;
    return insert_tracked(std::move(v), tag);
}

bool EchelonSpace::insert_tracked(FpVec v, FpVec tag)
{
    bool tracked = !tag.empty();
    if (tracked)
        reduce_tracked(v, tag);
    else
        reduce(v);
    std::size_t piv = 0;
    while (piv < v.size() && v[piv] == 0)
        ++piv;
    if (piv == v.size())
        return false;
    std::uint32_t inv = ctx_.inv(v[piv]);
    const std::uint64_t p = ctx_.p();
    for (auto& x : v)
        x = static_cast<std::uint32_t>(x * static_cast<std::uint64_t>(inv) % p);
    for (auto& x : tag)
        x = static_cast<std::uint32_t>(x * static_cast<std::uint64_t>(inv) % p);
    rows_.emplace(piv, std::make_pair(std::move(v), std::move(tag)));
    return true;
}

bool EchelonSpace::contains(FpVec v) const
{
    reduce(v);
    return is_zero(v);
}

KernelResult kernel_of(const PrimeContext& ctx, const std::vector<FpVec>& columns, std::size_t domain_dim,
                       std::size_t target_dim)
{
    KernelResult res;
    EchelonSpace images(ctx, target_dim);
    for (std::size_t j = 0; j < domain_dim; ++j) {
        FpVec v = columns[j];
        FpVec tag(domain_dim, 0);
        tag[j] = 1;
        if (target_dim == 0) {
            res.kernel.push_back(tag);
            continue;
        }
        images.reduce_tracked(v, tag);
        if (is_zero(v))
            res.kernel.push_back(tag);
        else
            images.insert_tracked(v, tag);
    }
    res.rank = images.rank();
    return res;
}

}  // namespace maycalc
