#include "tclab/sums.hpp"

#include <stdexcept>
#include <string>

namespace tclab::sums {

namespace {

using arith::binomial;
using arith::binomial_mod;

void require_strict(const Params& pr, const EllIndex& ell) {
    if (ell.exploratory) return;
    if (ell.ell < 1 || ell.ell > pr.ell_max())
        throw std::invalid_argument(
            "ell=" + std::to_string(ell.ell) + " outside strict domain [1, " +
            std::to_string(pr.ell_max()) + "]; pass exploratory to evaluate anyway");
}

void require_fg_args(long long c, long long d, long long k, const EllIndex& ell) {
    if (!(1 <= k && k <= c && c <= d))
        throw std::invalid_argument("requires 1 <= k <= c <= d");
    if (!ell.exploratory && (ell.ell < 1 || ell.ell > c + d - k))
        throw std::invalid_argument(
            "ell=" + std::to_string(ell.ell) + " outside strict domain [1, " +
            std::to_string(c + d - k) + "]; pass exploratory to evaluate anyway");
}

long long sgn(long long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

} // namespace

BigInt C_def(const Params& pr, EllIndex ell) {
    require_strict(pr, ell);
    const long long p = static_cast<long long>(pr.p());
    const long long c = static_cast<long long>(pr.c());
    const long long d = static_cast<long long>(pr.d());
    const long long k = static_cast<long long>(pr.k());
    const long long l = ell.ell;
    BigInt acc = 0;
    for (long long j = 1; j <= c + 1 - k; ++j) {
        acc += binomial(k + j - 2, k - 1) * binomial(c + d - k, d + j - 1) *
               binomial(p - c - d + 2 * k - 2, k + j - 1 - l);
    }
    return acc;
}

BigInt C_alt(const Params& pr, EllIndex ell) {
    require_strict(pr, ell);
    const long long p = static_cast<long long>(pr.p());
    const long long c = static_cast<long long>(pr.c());
    const long long d = static_cast<long long>(pr.d());
    const long long k = static_cast<long long>(pr.k());
    const long long l = ell.ell;
    BigInt acc = 0;
    for (long long r = 0; r <= k - 1; ++r) {
        acc += sgn(r) * binomial(c - 1 - r, k - 1 - r) * binomial(c + d - k, r) *
               binomial(p + k - r - 2, c - l - r);
    }
    return acc;
}

BigInt D_def(const Params& pr, EllIndex ell) {
    require_strict(pr, ell);
    const long long p = static_cast<long long>(pr.p());
    const long long c = static_cast<long long>(pr.c());
    const long long d = static_cast<long long>(pr.d());
    const long long k = static_cast<long long>(pr.k());
    const long long l = ell.ell;
    BigInt acc = 0;
    for (long long j = 1; j <= d + 1 - k; ++j) {
        acc += binomial(d - j, k - 1) * binomial(c + d - k, j - 1) *
               binomial(p - c - d + 2 * k - 2, p + k + j - d - 1 - l);
    }
    return acc;
}

BigInt D_alt(const Params& pr, EllIndex ell) {
    require_strict(pr, ell);
    const long long p = static_cast<long long>(pr.p());
    const long long c = static_cast<long long>(pr.c());
    const long long d = static_cast<long long>(pr.d());
    const long long k = static_cast<long long>(pr.k());
    const long long l = ell.ell;
    BigInt acc = 0;
    for (long long j = 0; j <= k - 1; ++j) {
        acc += sgn(j) * binomial(d - 1 - j, k - 1 - j) * binomial(c + d - k, j) *
               binomial(p + k - 2 - j, l + k - 2 - c - j);
    }
    return acc;
}

BigInt f_eval(const Params& pr, EllIndex ell, Form form) {
    const bool even_k = pr.k() % 2 == 0;
    if (form == Form::defining) {
        BigInt d = D_def(pr, ell);
        return C_def(pr, ell) + (even_k ? d : -d);
    }
    BigInt d = D_alt(pr, ell);
    return C_alt(pr, ell) + (even_k ? d : -d);
}

Residue f_residue_fast(const Params& pr, long long ell) {
    const long long p = static_cast<long long>(pr.p());
    const long long c = static_cast<long long>(pr.c());
    const long long d = static_cast<long long>(pr.d());
    const long long k = static_cast<long long>(pr.k());
    if (ell < 1 || ell > pr.ell_max())
        throw std::invalid_argument("f_residue_fast: ell outside strict domain");
    Residue acc(0, pr.p());
    for (long long r = 0; r <= k - 1; ++r) {
        if (c - ell - r < 0) continue;
        Residue term = binomial_mod(c - 1 - r, k - 1 - r, pr.p()) *
                       binomial_mod(c + d - k, r, pr.p()) *
                       binomial_mod(p + k - r - 2, c - ell - r, pr.p());
        acc = (r % 2 == 0) ? acc + term : acc - term;
    }
    for (long long j = 0; j <= k - 1; ++j) {
        if (ell + k - 2 - c - j < 0) continue;
        Residue term = binomial_mod(d - 1 - j, k - 1 - j, pr.p()) *
                       binomial_mod(c + d - k, j, pr.p()) *
                       binomial_mod(p + k - 2 - j, ell + k - 2 - c - j, pr.p());
        // overall sign (-1)^k (-1)^j
        acc = ((k + j) % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

SumTable f_table(const Params& pr) {
    SumTable table{pr, {}, {}};
    const long long n = pr.ell_max();
    table.values.reserve(static_cast<std::size_t>(n));
    table.residues.reserve(static_cast<std::size_t>(n));
    for (long long ell = 1; ell <= n; ++ell) {
        table.values.push_back(f_eval(pr, ell, Form::rewritten));
        table.residues.push_back(Residue::from_bigint(table.values.back(), pr.p()));
    }
    return table;
}

BigInt F_direct(long long c, long long d, long long k, EllIndex ell) {
    require_fg_args(c, d, k, ell);
    const long long l = ell.ell;
    BigInt acc = 0;
    for (long long r = 0; r <= k - 1; ++r) {
        acc += sgn(r) * binomial(c - 1 - r, k - 1 - r) * binomial(c + d - k, r) *
               binomial(k - 1 - r, k + l - c - 1);
    }
    return acc;
}

BigInt G_direct(long long c, long long d, long long k, EllIndex ell) {
    require_fg_args(c, d, k, ell);
    const long long l = ell.ell;
    BigInt acc = 0;
    for (long long r = 0; r <= k - 1; ++r) {
        acc += sgn(r) * binomial(d - 1 - r, k - 1 - r) * binomial(c + d - k, r) *
               binomial(k - 1 - r, c - l);
    }
    return acc;
}

BigInt F_closed(long long c, long long d, long long k, EllIndex ell) {
    require_fg_args(c, d, k, ell);
    const long long l = ell.ell;
    return sgn(l - c) * binomial(l - 1, c - k) * binomial(c + d - k - l, d - k);
}

BigInt G_closed(long long c, long long d, long long k, EllIndex ell) {
    require_fg_args(c, d, k, ell);
    const long long l = ell.ell;
    return sgn(l + k - c - 1) * binomial(l - 1, c - k) * binomial(c + d - k - l, d - k);
}

bool lemma_c1_check(long long c, long long k, long long j) {
    if (!(1 <= k && k <= c))
        throw std::invalid_argument("lemma_c1_check: requires 1 <= k <= c");
    if (!(0 <= j && j <= c - k))
        throw std::invalid_argument("lemma_c1_check: requires 0 <= j <= c-k");
    BigInt lhs = binomial(c - 1, k - 1) - binomial(k - 1 + j, k - 1);
    BigInt rhs = 0;
    for (long long r = 1; r <= k - 1; ++r) {
        rhs += sgn(r - 1) * binomial(c - k - j, r) * binomial(c - 1 - r, k - 1 - r);
    }
    return lhs == rhs;
}

bool lemma_lk_check(const Params& pr, long long ell) {
    const long long p = static_cast<long long>(pr.p());
    const long long c = static_cast<long long>(pr.c());
    const long long d = static_cast<long long>(pr.d());
    const long long k = static_cast<long long>(pr.k());
    if (ell < 1 - k || ell > -1) {
        if (k == 1) return true;  // empty ell-range
        throw std::invalid_argument("lemma_lk_check: requires 1-k <= ell <= -1");
    }
    BigInt acc = 0;
    for (long long r = 0; r <= k - 1; ++r) {
        BigInt inner = 0;
        for (long long j = ell; j <= -1; ++j) {
            inner += binomial(c + d - k - r, c - k - j - r) *
                     binomial(p - c - d + 2 * k - 2, k + j - ell);
        }
        acc += sgn(r + 1) * binomial(c - 1 - r, k - 1 - r) *
               binomial(c + d - k, r) * inner;
    }
    return acc == 0;
}

bool lemma_d1_check(long long d, long long k, long long j) {
    if (!(1 <= k && k <= d))
        throw std::invalid_argument("lemma_d1_check: requires 1 <= k <= d");
    if (!(0 <= j && j <= k - 1))
        throw std::invalid_argument("lemma_d1_check: requires 0 <= j <= k-1");
    BigInt lhs = binomial(d - 1, k - 1) - binomial(d - 1 - j, k - 1);
    BigInt rhs = 0;
    for (long long r = 1; r <= k - 1; ++r) {
        rhs += sgn(r - 1) * binomial(d - 1 - r, k - 1 - r) * binomial(j, r);
    }
    return lhs == rhs;
}

} // namespace tclab::sums
