#pragma once

#include "tclab/arith.hpp"
#include "tclab/gfp.hpp"
#include "tclab/params.hpp"

#include <cstdint>
#include <map>
#include <utility>

namespace tclab::tensor {

inline constexpr std::uint64_t kDefaultDimBudget = 4096;

/// Sparse GF(p) vector on the grid basis v_{i,j}, 1 <= i <= m, 1 <= j <= n.
/// Zero coefficients are never stored.
class TensorVector {
public:
    using Key = std::pair<long long, long long>;

    TensorVector(std::uint64_t p, long long m, long long n);

    std::uint64_t modulus() const { return p_; }
    long long grid_rows() const { return m_; }
    long long grid_cols() const { return n_; }

    /// Accumulates coeff (mod p) onto position (i, j); drops stored zeros.
    void add(long long i, long long j, std::uint64_t coeff);

    const std::map<Key, std::uint64_t>& coeffs() const { return coeffs_; }
    bool empty() const { return coeffs_.empty(); }
    std::size_t support_size() const { return coeffs_.size(); }

    TensorVector scaled(std::uint64_t factor) const;
    gfp::FpVector dense() const;  // row-major over the full m*n grid

    bool operator==(const TensorVector&) const = default;

private:
    std::uint64_t p_;
    long long m_, n_;
    std::map<Key, std::uint64_t> coeffs_;
};

/// The operator Delta = g - 1 in the nice basis:
/// v_{i,j} -> v_{i-1,j} + v_{i,j-1}, with any index 0 giving the zero vector.
TensorVector delta_apply(const TensorVector& v);
TensorVector delta_power(TensorVector v, std::uint64_t t);

/// (i,j)-entry of the p x p matrix B(c,d;p):
///   binom(c-i, c+d-i-j+1) binom(i+j-2, i-1)  mod p
/// (generalized binomial; the upper index c-i may be negative).
arith::Residue norman_entry(std::uint64_t c, std::uint64_t d, std::uint64_t p,
                            std::uint64_t i, std::uint64_t j);

/// The generator candidate for the summand of dimension 2p-lambda_k inside
/// V_{p+c} (x) V_{p+d}; supported on the anti-diagonal i+j = 2p+k.
TensorVector build_generator(const Params& pr);

/// sum_{ell=1}^{c+d+1-k} (-1)^(ell-1) v_{ell, c+d+2-k-ell}; the target of
/// Delta^(2p-lambda_k-1) applied to the generator, up to the factor f(1).
TensorVector alt_vector(const Params& pr);

struct GeneratorReport {
    Params params;
    std::uint64_t lambda_k = 0;    // c + d - 2k + 1
    std::uint64_t module_dim = 0;  // 2p - lambda_k
    arith::Residue f1;             // computed independently from the sum side
    std::size_t support_size = 0;
    std::size_t expected_support_size = 0;  // (c+1-k) + (d+1-k)
    bool coefficient_vanished = false;      // some y-coefficient reduced to 0
    bool top_power_matches_f1_alt = false;  // Delta^(dim-1) y == f(1) * alt
    bool next_power_vanishes = false;       // Delta^dim y == 0
    bool top_power_nonzero = false;
    std::uint64_t cyclic_span_dim = 0;      // rank of {y, Delta y, ...}
    bool span_dim_ok = false;

    bool passed() const {
        return top_power_matches_f1_alt && next_power_vanishes &&
               top_power_nonzero && span_dim_ok;
    }
};

/// Runs the four generator assertions for one tuple. Any failure signals
/// either an implementation bug or a genuine discrepancy with the source
/// derivation; it is reported, never patched over.
GeneratorReport check_generator(const Params& pr);

using DecompositionSpec = gfp::JordanType;

/// Closed-form decomposition of V_{p+c} (x) V_{p+d}:
///   {2p+lambda_k} + (d-c) copies of {2p} + {2p-lambda_k}
///   + (p-c-d) copies of {p} + {lambda_k},   k = 1..c.
DecompositionSpec decompose_closed(std::uint64_t p, std::uint64_t c, std::uint64_t d);

/// Jordan type of Delta on the full m x n grid over GF(p); the rank-profile
/// oracle behind decompose_rank, also usable for small V_m (x) V_n checks.
DecompositionSpec grid_jordan_type(std::uint64_t p, long long m, long long n,
                                   std::uint64_t dim_budget = kDefaultDimBudget);

/// Independent decomposition of V_{p+c} (x) V_{p+d} by rank profiles; must
/// equal decompose_closed. Throws BudgetError when (p+c)(p+d) exceeds the
/// dimension budget (0 = unlimited).
DecompositionSpec decompose_rank(std::uint64_t p, std::uint64_t c, std::uint64_t d,
                                 std::uint64_t dim_budget = kDefaultDimBudget);

} // namespace tclab::tensor
