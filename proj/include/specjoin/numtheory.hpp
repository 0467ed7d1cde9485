#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace specjoin::numtheory {

using u64 = std::uint64_t;

struct PrimePower {
    u64 prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Positive integer together with its canonical factorization
/// (primes strictly increasing, exponents >= 1; empty for 1).
class FactoredInteger {
public:
    explicit FactoredInteger(u64 value);

    u64 value() const noexcept { return value_; }
    const std::vector<PrimePower>& factors() const noexcept { return factors_; }

    /// Number of distinct prime factors.
    std::size_t omega() const noexcept { return factors_.size(); }
    bool is_prime() const noexcept { return factors_.size() == 1 && factors_[0].exponent == 1; }
    bool is_prime_power() const noexcept { return factors_.size() == 1; }
    /// Product of two distinct primes.
    bool is_semiprime_squarefree() const noexcept {
        return factors_.size() == 2 && factors_[0].exponent == 1 && factors_[1].exponent == 1;
    }

    u64 totient() const;
    u64 divisor_count() const;
    std::vector<u64> divisors() const;

private:
    u64 value_;
    std::vector<PrimePower> factors_;
};

// Checked 64-bit arithmetic; throws OverflowError instead of wrapping.
u64 checked_mul(u64 a, u64 b);
u64 checked_add(u64 a, u64 b);
u64 checked_pow(u64 base, unsigned exp);

FactoredInteger factorize(u64 n);
u64 totient(u64 n);
std::vector<u64> divisors(u64 n);
std::vector<u64> proper_divisors(u64 n);
bool is_prime(u64 n);

/// Self-test of the identity sum_{d|n} phi(d) = n.
bool totient_sum_check(u64 n);

}  // namespace specjoin::numtheory
