#pragma once

#include "tclab/arith.hpp"
#include "tclab/params.hpp"

#include <vector>

namespace tclab::sums {

using arith::BigInt;
using arith::Residue;

enum class Form { defining, rewritten };

/// Defining sum over j = 1..c+1-k:
///   binom(k+j-2, k-1) binom(c+d-k, d+j-1) binom(p-c-d+2k-2, k+j-1-ell)
BigInt C_def(const Params& pr, EllIndex ell);

/// Rewritten form (signed sum over r = 0..k-1):
///   (-1)^r binom(c-1-r, k-1-r) binom(c+d-k, r) binom(p+k-r-2, c-ell-r)
BigInt C_alt(const Params& pr, EllIndex ell);

/// Defining sum over j = 1..d+1-k:
///   binom(d-j, k-1) binom(c+d-k, j-1) binom(p-c-d+2k-2, p+k+j-d-1-ell)
BigInt D_def(const Params& pr, EllIndex ell);

/// Rewritten form (signed sum over j = 0..k-1):
///   (-1)^j binom(d-1-j, k-1-j) binom(c+d-k, j) binom(p+k-2-j, ell+k-2-c-j)
BigInt D_alt(const Params& pr, EllIndex ell);

/// f = C + (-1)^k D, in the requested form. Both forms agree on the strict
/// ell-domain; that equality is a test target, never assumed here.
BigInt f_eval(const Params& pr, EllIndex ell, Form form = Form::rewritten);

/// f(ell) mod p computed entirely in residue arithmetic (Lucas binomials on
/// the rewritten forms). Strict-domain only; cross-checks the exact path.
Residue f_residue_fast(const Params& pr, long long ell);

/// The sequence f(1..c+d+1-k), exact values alongside their mod-p residues.
struct SumTable {
    Params params;
    std::vector<BigInt> values;     // values[i] = f(i+1)
    std::vector<Residue> residues;  // residues[i] = values[i] mod p
};

SumTable f_table(const Params& pr);

/// The two signed auxiliary sums with closed forms (no p involved);
/// preconditions 1 <= k <= c <= d, strict ell-domain [1, c+d-k].
BigInt F_direct(long long c, long long d, long long k, EllIndex ell);
BigInt G_direct(long long c, long long d, long long k, EllIndex ell);
BigInt F_closed(long long c, long long d, long long k, EllIndex ell);
BigInt G_closed(long long c, long long d, long long k, EllIndex ell);

/// binom(c-1,k-1) - binom(k-1+j,k-1) == sum_{r=1}^{k-1} (-1)^(r-1)
///   binom(c-k-j, r) binom(c-1-r, k-1-r),   for 1 <= k <= c, 0 <= j <= c-k.
bool lemma_c1_check(long long c, long long k, long long j);

/// Vanishing of the double sum
///   sum_{r=0}^{k-1} (-1)^(r+1) binom(c-1-r,k-1-r) binom(c+d-k,r)
///     * sum_{j=ell}^{-1} binom(c+d-k-r, c-k-j-r) binom(p-c-d+2k-2, k+j-ell)
/// for ell in [1-k, -1]; vacuously true when k = 1 (empty ell-range).
bool lemma_lk_check(const Params& pr, long long ell);

/// binom(d-1,k-1) - binom(d-1-j,k-1) == sum_{r=1}^{k-1} (-1)^(r-1)
///   binom(d-1-r, k-1-r) binom(j, r),      for 1 <= k <= d, 0 <= j <= k-1.
bool lemma_d1_check(long long d, long long k, long long j);

} // namespace tclab::sums
