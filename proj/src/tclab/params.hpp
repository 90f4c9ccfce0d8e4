#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace tclab {

/// Thrown when a run would exceed a configured resource budget.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Validated parameter tuple: p prime and 1 <= k <= c <= d < c+d <= p.
/// Every sum, sweep and module check is quantified over these.
class Params {
public:
    static Params create(std::uint64_t p, std::uint64_t c,
                         std::uint64_t d, std::uint64_t k);

    std::uint64_t p() const { return p_; }
    std::uint64_t c() const { return c_; }
    std::uint64_t d() const { return d_; }
    std::uint64_t k() const { return k_; }

    /// Upper end of the strict ell-domain [1, c+d+1-k].
    long long ell_max() const {
        return static_cast<long long>(c_ + d_ + 1 - k_);
    }

    auto operator<=>(const Params&) const = default;

private:
    Params(std::uint64_t p, std::uint64_t c, std::uint64_t d, std::uint64_t k)
        : p_(p), c_(c), d_(d), k_(k) {}

    std::uint64_t p_, c_, d_, k_;
};

/// Evaluation index. Strict indices must lie in [1, c+d+1-k]; the
/// exploratory flag lifts the domain check. Exploratory values are
/// excluded from every verification verdict.
struct EllIndex {
    long long ell = 1;
    bool exploratory = false;

    EllIndex(long long e) : ell(e) {}            // NOLINT(google-explicit-constructor)
    EllIndex(long long e, bool x) : ell(e), exploratory(x) {}
};

/// All admissible tuples with p <= p_max, in lexicographic (p, c, d, k) order.
std::vector<Params> enumerate_params(std::uint64_t p_max);

} // namespace tclab
