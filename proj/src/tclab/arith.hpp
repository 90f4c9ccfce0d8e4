#pragma once

#include <cstdint>
#include <boost/multiprecision/cpp_int.hpp>

namespace tclab::arith {

/// Arbitrary-precision signed integer. Every sum in the library is exact;
/// nothing is ever rounded or wrapped.
using BigInt = boost::multiprecision::cpp_int;

/// Deterministic primality test, correct for all n < 2^64.
bool is_prime(std::uint64_t n);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// An element of GF(p), stored as its canonical representative in [0, p).
/// Arithmetic between residues of different moduli is a logic error and throws.
class Residue {
public:
    Residue(std::int64_t value, std::uint64_t modulus);
    static Residue from_bigint(const BigInt& x, std::uint64_t modulus);

    std::uint64_t value() const { return value_; }
    std::uint64_t modulus() const { return modulus_; }
    bool is_zero() const { return value_ == 0; }

    Residue operator-() const;
    Residue operator+(const Residue& rhs) const;
    Residue operator-(const Residue& rhs) const;
    Residue operator*(const Residue& rhs) const;
    Residue inverse() const;

    bool operator==(const Residue& rhs) const = default;

private:
    std::uint64_t value_;
    std::uint64_t modulus_;
};

/// Generalized binomial coefficient, total on all integer pairs:
///   k < 0            -> 0
///   0 <= n < k       -> 0
///   otherwise        -> n(n-1)...(n-k+1) / k!   (exact; n may be negative)
BigInt binomial(long long n, long long k);

/// binomial(n, k) mod p for n, k >= 0 and p prime, computed digit-wise in
/// base p (Lucas). Negative arguments are rejected: the generalized cases
/// must go through the exact path and be reduced afterwards.
Residue binomial_mod(long long n, long long k, std::uint64_t p);

} // namespace tclab::arith
