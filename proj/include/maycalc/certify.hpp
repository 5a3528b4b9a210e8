#pragma once
// Certified statements about Ext_A^{s,t}(Z_p,Z_p) from May E1/E2 data.

#include <functional>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "maycalc/core.hpp"
#include "maycalc/differential.hpp"

namespace maycalc {

enum class Verdict { E1Empty, E2Zero, DimCertified, UpperBound };

const char* verdict_name(Verdict v);

struct Certificate
{
    Int s = 0, t = 0;
    Verdict verdict = Verdict::E1Empty;
    std::size_t dim = 0;  // certified dim, or upper bound
    std::shared_ptr<const E2Report> evidence;

    bool vanishes() const { return verdict == Verdict::E1Empty || verdict == Verdict::E2Zero; }
    bool certified() const { return verdict != Verdict::UpperBound; }
    std::size_t dim_lo() const { return certified() ? dim : 0; }
    std::size_t dim_hi() const { return dim; }
    std::string label() const;
};

// Hook for persisting E2 reports between processes.
struct ReportStore
{
    std::function<std::optional<E2Report>(int p, Int s, Int t)> load;
    std::function<void(int p, const E2Report&)> save;
};

// Thread-safe memo of E2 reports for one prime; shared by every certificate.
class SphereExt
{
public:
    explicit SphereExt(const PrimeContext& ctx, ReportStore store = {}) : ctx_(ctx), store_(std::move(store)) {}

    const PrimeContext& ctx() const { return ctx_; }

    std::shared_ptr<const E2Report> e2(Int s, Int t) const;
    Certificate vanishing(Int s, Int t) const;
    Certificate dim(Int s, Int t) const;

    // No later May differential leaves (s,t) / enters (s,t).
    bool outgoing_safe(Int s, Int t) const;
    bool incoming_safe(Int s, Int t) const;

    std::size_t cached_cells() const;

private:
    PrimeContext ctx_;
    ReportStore store_;
    mutable std::shared_mutex mu_;
    struct KeyHash
    {
        std::size_t operator()(const std::pair<Int, Int>& k) const
        {
            return std::hash<Int>()(k.first) * 1000003u ^ std::hash<Int>()(k.second);
        }
    };
    mutable std::unordered_map<std::pair<Int, Int>, std::shared_ptr<const E2Report>, KeyHash> cells_;
};

Certificate certify_ext_vanishing(const PrimeContext& ctx, Int s, Int t);
Certificate certify_ext_dim(const PrimeContext& ctx, Int s, Int t);

struct NamedClass
{
    std::string name;
    std::vector<Int> params;
    Int s = 0, t = 0;
    std::optional<Monomial> rep;
    std::optional<std::string> known_differential;
    bool conjectural = false;

    std::string display() const;
};

// Names: h (n), b (k, the class b_k), a0, alpha2~, g0, g (n), k (n), l (n),
// l' (n), beta~ (s), gamma~ (s), and products h0h (n), h0b (k), h0hh (n,m).
NamedClass resolve_named(const std::string& name, const std::vector<Int>& params, const PrimeContext& ctx);
std::vector<std::string> named_class_names();

struct WindowEntry
{
    int r = 0;
    Certificate target;
    std::optional<Certificate> source;  // empty when s - r < 0
    bool source_vanishes() const { return !source || source->vanishes(); }
};

struct WindowReport
{
    Int s = 0, t = 0;
    int r_min = 0, r_max = 0;
    std::vector<WindowEntry> entries;
    // Sources vanish for every 2 <= r <= s.
    bool not_boundary = false;
    // Targets vanish for every r in [r_min, r_max].
    bool permanent_up_to_rmax = false;
    std::vector<int> live_targets;
};

WindowReport adams_dr_window(const SphereExt& ext, Int s, Int t, int r_min, int r_max);
WindowReport adams_dr_window(const PrimeContext& ctx, Int s, Int t, int r_min, int r_max);

struct ProductResult
{
    bool nonzero = false;
    bool cycle = true;
    Element rep;
    Int s = 0, t = 0;
    bool conjectural = false;
    std::string note;
};

ProductResult product_nonzero_at_e2(const SphereExt& ext, const std::vector<NamedClass>& classes);
ProductResult product_nonzero_at_e2(const PrimeContext& ctx, const std::vector<NamedClass>& classes);

}  // namespace maycalc
