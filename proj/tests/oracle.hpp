// Test-only oracle, deliberately independent of the library code paths:
// binomials come from the additive Pascal recurrence (no multiplication or
// division), and the sums below are fresh transcriptions of their defining
// expressions. Nothing here calls into tclab beyond the BigInt alias.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace oracle {

using BigInt = boost::multiprecision::cpp_int;

// Pascal recurrence, extended to negative upper index by
//   binom(n, k) = binom(n+1, k) - binom(n, k-1).
inline const BigInt& binom(long long n, long long k) {
    static std::map<std::pair<long long, long long>, BigInt> memo;
    static const BigInt zero = 0, one = 1;
    if (k < 0) return zero;
    if (k == 0) return one;
    if (n == 0) return zero;  // k > 0 here
    auto key = std::make_pair(n, k);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    BigInt value;
    if (n > 0) {
        value = binom(n - 1, k - 1) + binom(n - 1, k);
    } else {
        value = binom(n + 1, k) - binom(n, k - 1);
    }
    return memo.emplace(key, std::move(value)).first->second;
}

inline BigInt C_def(long long p, long long c, long long d, long long k, long long ell) {
    BigInt acc = 0;
    for (long long j = 1; j <= c + 1 - k; ++j)
        acc += binom(k + j - 2, k - 1) * binom(c + d - k, d + j - 1) *
               binom(p - c - d + 2 * k - 2, k + j - 1 - ell);
    return acc;
}

inline BigInt D_def(long long p, long long c, long long d, long long k, long long ell) {
    BigInt acc = 0;
    for (long long j = 1; j <= d + 1 - k; ++j)
        acc += binom(d - j, k - 1) * binom(c + d - k, j - 1) *
               binom(p - c - d + 2 * k - 2, p + k + j - d - 1 - ell);
    return acc;
}

inline BigInt f(long long p, long long c, long long d, long long k, long long ell) {
    BigInt dpart = D_def(p, c, d, k, ell);
    return (k % 2 == 0) ? C_def(p, c, d, k, ell) + dpart
                        : C_def(p, c, d, k, ell) - dpart;
}

inline std::vector<BigInt> f_table(long long p, long long c, long long d, long long k) {
    std::vector<BigInt> out;
    for (long long ell = 1; ell <= c + d + 1 - k; ++ell)
        out.push_back(f(p, c, d, k, ell));
    return out;
}

// Every (p, c, d, k) with p prime <= p_max and 1 <= k <= c <= d < c+d <= p,
// by exhaustive filtering over the full quadruple box.
inline std::vector<std::array<std::uint64_t, 4>> all_tuples(std::uint64_t p_max) {
    auto prime = [](std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t q = 2; q * q <= n; ++q)
            if (n % q == 0) return false;
        return true;
    };
    std::vector<std::array<std::uint64_t, 4>> out;
    for (std::uint64_t p = 2; p <= p_max; ++p)
        for (std::uint64_t c = 1; c <= p_max; ++c)
            for (std::uint64_t d = 1; d <= p_max; ++d)
                for (std::uint64_t k = 1; k <= p_max; ++k)
                    if (prime(p) && 1 <= k && k <= c && c <= d && d < c + d &&
                        c + d <= p)
                        out.push_back({p, c, d, k});
    return out;
}

} // namespace oracle
