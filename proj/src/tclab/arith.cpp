#include "tclab/arith.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace tclab::arith {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    // Miller-Rabin with a witness set that is deterministic below 2^64.
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

Residue::Residue(std::int64_t value, std::uint64_t modulus)
    : value_(0), modulus_(modulus) {
    if (modulus < 2)
        throw std::invalid_argument("Residue: modulus must be at least 2");
    std::int64_t m = static_cast<std::int64_t>(modulus);
    std::int64_t r = value % m;
    if (r < 0) r += m;
    value_ = static_cast<std::uint64_t>(r);
}

Residue Residue::from_bigint(const BigInt& x, std::uint64_t modulus) {
    if (modulus < 2)
        throw std::invalid_argument("Residue: modulus must be at least 2");
    BigInt r = x % modulus;
    if (r < 0) r += modulus;
    return Residue(r.convert_to<std::int64_t>(), modulus);
}

namespace {
void require_same_modulus(const Residue& a, const Residue& b) {
    if (a.modulus() != b.modulus())
        throw std::invalid_argument("Residue: mixed moduli");
}
} // namespace

Residue Residue::operator-() const {
    return Residue(value_ == 0 ? 0 : static_cast<std::int64_t>(modulus_ - value_),
                   modulus_);
}

Residue Residue::operator+(const Residue& rhs) const {
    require_same_modulus(*this, rhs);
    std::uint64_t s = value_ + rhs.value_;
    if (s >= modulus_) s -= modulus_;
    return Residue(static_cast<std::int64_t>(s), modulus_);
}

Residue Residue::operator-(const Residue& rhs) const {
    require_same_modulus(*this, rhs);
    std::uint64_t s = value_ + modulus_ - rhs.value_;
    if (s >= modulus_) s -= modulus_;
    return Residue(static_cast<std::int64_t>(s), modulus_);
}

Residue Residue::operator*(const Residue& rhs) const {
    require_same_modulus(*this, rhs);
    return Residue(static_cast<std::int64_t>(mul_mod(value_, rhs.value_, modulus_)),
                   modulus_);
}

Residue Residue::inverse() const {
    if (value_ == 0)
        throw std::invalid_argument("Residue: zero has no inverse");
    return Residue(static_cast<std::int64_t>(pow_mod(value_, modulus_ - 2, modulus_)),
                   modulus_);
}

namespace {

// Balanced product of (n - lo), (n - lo - 1), ..., (n - hi + 1).
BigInt falling_range_product(long long n, long long lo, long long hi) {
    if (hi - lo <= 8) {
        BigInt acc = 1;
        for (long long i = lo; i < hi; ++i) acc *= BigInt(n - i);
        return acc;
    }
    long long mid = lo + (hi - lo) / 2;
    return falling_range_product(n, lo, mid) * falling_range_product(n, mid, hi);
}

BigInt factorial_range_product(long long lo, long long hi) {
    if (hi - lo <= 8) {
        BigInt acc = 1;
        for (long long i = lo; i < hi; ++i) acc *= BigInt(i + 1);
        return acc;
    }
    long long mid = lo + (hi - lo) / 2;
    return factorial_range_product(lo, mid) * factorial_range_product(mid, hi);
}

std::shared_ptr<const std::vector<std::uint32_t>> primes_up_to(std::uint32_t limit) {
    static std::mutex mu;
    static std::shared_ptr<const std::vector<std::uint32_t>> cache;
    static std::uint32_t cached_limit = 0;
    std::lock_guard<std::mutex> lock(mu);
    if (cache && limit <= cached_limit) return cache;
    std::uint32_t target = std::max(limit, cached_limit * 2);
    std::vector<bool> composite(static_cast<std::size_t>(target) + 1, false);
    auto primes = std::make_shared<std::vector<std::uint32_t>>();
    for (std::uint32_t q = 2; q <= target; ++q) {
        if (composite[q]) continue;
        primes->push_back(q);
        for (std::uint64_t m = static_cast<std::uint64_t>(q) * q; m <= target; m += q)
            composite[static_cast<std::size_t>(m)] = true;
    }
    cache = primes;
    cached_limit = target;
    return cache;
}

BigInt balanced_product(const std::vector<BigInt>& factors, std::size_t lo,
                        std::size_t hi) {
    if (hi - lo == 0) return BigInt(1);
    if (hi - lo == 1) return factors[lo];
    std::size_t mid = lo + (hi - lo) / 2;
    return balanced_product(factors, lo, mid) * balanced_product(factors, mid, hi);
}

// Exact binomial through prime factorization (Legendre exponents), avoiding
// the single huge division of the quotient form. Requires 0 <= k <= n.
BigInt binomial_factored(std::uint64_t n, std::uint64_t k) {
    auto primes = primes_up_to(static_cast<std::uint32_t>(n));
    std::vector<BigInt> factors;
    const std::uint64_t nk = n - k;
    for (std::uint32_t q : *primes) {
        if (q > n) break;
        std::uint64_t exponent = 0;
        for (std::uint64_t qt = q; qt <= n; qt *= q) {
            exponent += n / qt - k / qt - nk / qt;
            if (qt > n / q) break;  // next power would overflow past n anyway
        }
        if (exponent == 0) continue;
        BigInt power = 1;
        for (std::uint64_t e = 0; e < exponent; ++e) power *= q;
        factors.push_back(std::move(power));
    }
    return balanced_product(factors, 0, factors.size());
}

std::uint64_t binomial_digit_mod(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
    // n, k < p here
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        num = mul_mod(num, (n - i) % p, p);
        den = mul_mod(den, (i + 1) % p, p);
    }
    return mul_mod(num, pow_mod(den, p - 2, p), p);
}

} // namespace

BigInt binomial(long long n, long long k) {
    if (k < 0) return BigInt(0);
    if (k == 0) return BigInt(1);
    if (n >= 0) {
        if (k > n) return BigInt(0);
        k = std::min(k, n - k);
        if (k == 0) return BigInt(1);
    }
    if (k <= 64) {
        // Incremental falling factorial; each division is exact because the
        // prefix equals binomial(n, i+1).
        BigInt acc = 1;
        for (long long i = 0; i < k; ++i) {
            acc *= BigInt(n - i);
            acc /= BigInt(i + 1);
        }
        return acc;
    }
    if (n > 0 && n <= 50'000'000)
        return binomial_factored(static_cast<std::uint64_t>(n),
                                 static_cast<std::uint64_t>(k));
    return falling_range_product(n, 0, k) / factorial_range_product(0, k);
}

Residue binomial_mod(long long n, long long k, std::uint64_t p) {
    if (n < 0 || k < 0)
        throw std::invalid_argument(
            "binomial_mod: negative arguments; use the exact path instead");
    if (p < 2)
        throw std::invalid_argument("binomial_mod: modulus must be at least 2");
    std::uint64_t un = static_cast<std::uint64_t>(n);
    std::uint64_t uk = static_cast<std::uint64_t>(k);
    std::uint64_t acc = 1;
    while (un || uk) {
        std::uint64_t nd = un % p, kd = uk % p;
        if (kd > nd) return Residue(0, p);
        acc = mul_mod(acc, binomial_digit_mod(nd, kd, p), p);
        un /= p;
        uk /= p;
    }
    return Residue(static_cast<std::int64_t>(acc), p);
}

} // namespace tclab::arith
