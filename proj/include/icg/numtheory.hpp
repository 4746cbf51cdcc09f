#pragma once

// Exact arithmetic functions over positive integers: factorization, divisor
// lists, Euler's totient, the Moebius function, the radical, Ramanujan sums
// c(r, n) and the unity sums s(r, n) = sum_{i<n} w_n^{ir}.
//
// Everything is int64_t with checked overflow. Trial division is used for
// factoring; the library targets moduli up to roughly 10^6.

#include <cstdint>
#include <span>
#include <vector>

#include "icg/error.hpp"

namespace icg {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out)) fail(ErrorKind::Overflow, "integer addition");
    return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_sub_overflow(a, b, &out)) fail(ErrorKind::Overflow, "integer subtraction");
    return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) fail(ErrorKind::Overflow, "integer multiplication");
    return out;
}

struct PrimePower {
    std::int64_t prime;
    int exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
    std::int64_t n = 1;
    std::vector<PrimePower> factors;  // primes strictly increasing

    /// Number of distinct prime divisors.
    std::size_t distinct_primes() const noexcept { return factors.size(); }
    bool square_free() const noexcept;
};

/// Throws InvalidArgument for n < 1.
Factorization factorize(std::int64_t n);

bool is_prime(std::int64_t n);

/// All positive divisors of n, ascending.
std::vector<std::int64_t> divisors(std::int64_t n);
/// Divisors of n excluding n itself.
std::vector<std::int64_t> proper_divisors(std::int64_t n);

std::int64_t euler_phi(std::int64_t n);
std::int64_t euler_phi(const Factorization& f);

int mobius(std::int64_t n);
int mobius(const Factorization& f);

/// Product of the distinct primes dividing n (the largest square-free divisor).
std::int64_t radical(std::int64_t n);
std::int64_t radical(const Factorization& f);

/// c(r, n) = mu(n/g) * phi(n) / phi(n/g) with g = gcd(r, n). Negative r is
/// reduced modulo n; r = 0 gives phi(n).
std::int64_t ramanujan_sum(std::int64_t r, std::int64_t n);

/// n when n divides r, otherwise 0.
std::int64_t unity_sum(std::int64_t r, std::int64_t n);

// Totient and Moebius values for every divisor of a fixed modulus, so that
// c(r, m) for m | n can be evaluated without refactoring. Spectrum assembly
// evaluates O(n * tau(n)) Ramanujan sums and goes through this table.
class DivisorTable {
public:
    explicit DivisorTable(std::int64_t n);

    std::int64_t modulus() const noexcept { return n_; }
    const Factorization& factorization() const noexcept { return factorization_; }
    std::span<const std::int64_t> divisors() const noexcept { return divisors_; }

    std::int64_t phi(std::int64_t d) const { return phi_[index_of(d)]; }
    int mu(std::int64_t d) const { return mu_[index_of(d)]; }

    /// c(r, m) for a divisor m of the modulus.
    std::int64_t ramanujan(std::int64_t r, std::int64_t m) const;

private:
    std::size_t index_of(std::int64_t d) const;

    std::int64_t n_;
    Factorization factorization_;
    std::vector<std::int64_t> divisors_;
    std::vector<std::int64_t> phi_;
    std::vector<int> mu_;
};

}  // namespace icg
