#include "specjoin/numtheory.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "specjoin/errors.hpp"

namespace specjoin::numtheory {

namespace {

void require_positive(u64 n, const char* what) {
    if (n == 0) throw InvalidArgument(std::string(what) + ": argument must be >= 1");
}

using u128 = unsigned __int128;

constexpr u64 kTrialLimit = 1 << 16;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
    u64 out = 1 % m;
    base %= m;
    for (; exp; exp >>= 1) {
        if (exp & 1) out = mul_mod(out, base, m);
        base = mul_mod(base, base, m);
    }
    return out;
}

// Deterministic for all 64-bit inputs with these bases.
bool miller_rabin(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
        if (n % p == 0) return n == p;
    u64 d = n - 1;
    unsigned s = 0;
    while (d % 2 == 0) d /= 2, ++s;
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s && composite; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) composite = false;
        }
        if (composite) return false;
    }
    return true;
}

// Pollard rho with Brent's cycle detection; n is odd and composite.
u64 rho_divisor(u64 n) {
    for (u64 c = 1;; ++c) {
        auto f = [&](u64 x) { return (mul_mod(x, x, n) + c) % n; };
        u64 x = 2, y = 2, d = 1;
        for (u64 len = 1; d == 1; len *= 2) {
            x = y;
            for (u64 i = 0; i < len && d == 1; ++i) {
                y = f(y);
                d = std::gcd(x > y ? x - y : y - x, n);
            }
        }
        if (d != n) return d;
    }
}

void split_large(u64 n, std::vector<u64>& primes) {
    if (n == 1) return;
    if (miller_rabin(n)) {
        primes.push_back(n);
        return;
    }
    const u64 d = rho_divisor(n);
    split_large(d, primes);
    split_large(n / d, primes);
}

}  // namespace

u64 checked_mul(u64 a, u64 b) {
    u64 out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw OverflowError("64-bit overflow in " + std::to_string(a) + " * " + std::to_string(b));
    return out;
}

u64 checked_add(u64 a, u64 b) {
    u64 out = 0;
    if (__builtin_add_overflow(a, b, &out))
        throw OverflowError("64-bit overflow in " + std::to_string(a) + " + " + std::to_string(b));
    return out;
}

u64 checked_pow(u64 base, unsigned exp) {
    u64 out = 1;
    for (unsigned i = 0; i < exp; ++i) out = checked_mul(out, base);
    return out;
}

FactoredInteger::FactoredInteger(u64 value) : value_(value) {
    require_positive(value, "factorize");
    u64 rest = value;
    for (u64 p = 2; p < kTrialLimit && p <= rest / p; p += (p == 2 ? 1 : 2)) {
        if (rest % p != 0) continue;
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        factors_.push_back({p, e});
    }
    std::vector<u64> large;
    split_large(rest, large);
    std::sort(large.begin(), large.end());
    for (u64 p : large) {
        if (!factors_.empty() && factors_.back().prime == p)
            ++factors_.back().exponent;
        else
            factors_.push_back({p, 1});
    }
}

u64 FactoredInteger::totient() const {
    u64 phi = 1;
    for (const auto& [p, e] : factors_) phi = checked_mul(phi, checked_pow(p, e - 1) * (p - 1));
    return phi;
}

u64 FactoredInteger::divisor_count() const {
    u64 count = 1;
    for (const auto& f : factors_) count = checked_mul(count, f.exponent + 1);
    return count;
}

std::vector<u64> FactoredInteger::divisors() const {
    std::vector<u64> out{1};
    for (const auto& [p, e] : factors_) {
        const std::size_t base = out.size();
        u64 pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

FactoredInteger factorize(u64 n) { return FactoredInteger(n); }

u64 totient(u64 n) { return FactoredInteger(n).totient(); }

std::vector<u64> divisors(u64 n) { return FactoredInteger(n).divisors(); }

std::vector<u64> proper_divisors(u64 n) {
    require_positive(n, "proper_divisors");
    if (n < 2) throw InvalidArgument("proper_divisors: argument must be >= 2");
    auto all = divisors(n);
    return {all.begin() + 1, all.end() - 1};
}

bool is_prime(u64 n) { return n >= 2 && FactoredInteger(n).is_prime(); }

bool totient_sum_check(u64 n) {
    const FactoredInteger f(n);
    u64 sum = 0;
    for (u64 d : f.divisors()) sum = checked_add(sum, totient(d));
    return sum == n;
}

}  // namespace specjoin::numtheory
