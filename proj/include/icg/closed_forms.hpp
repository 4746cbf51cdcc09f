#pragma once

// Closed forms for unitary Cayley graphs X_n = ICG_n(1), and the two
// distance-equienergetic families
//
//     (ICG_{3p}(1), ICG_{3p}(1, p))          p > 3 prime
//     (ICG_{2pq}(1, p), ICG_{2pq}(1, q))     p > q > 3 primes
//
// These are evaluated from n's factorization and checked in the tests
// against the general distance-spectrum path.

#include <cstdint>

#include "icg/icg_core.hpp"
#include "icg/numtheory.hpp"
#include "icg/spectrum.hpp"

namespace icg {

enum class UcgCaseTag { Prime, PowerOfTwo, OddComposite, EvenWithOddPrime };

std::string_view to_string(UcgCaseTag tag) noexcept;

struct UcgCase {
    std::int64_t n;
    UcgCaseTag tag;
    std::int64_t phi;
    int k;           // distinct prime divisors
    std::int64_t m;  // radical
    Factorization factorization;
};

/// Throws ModulusTooSmall for n <= 1. 2 and 3 are Prime, 4, 8, ... PowerOfTwo.
UcgCase classify_ucg(std::int64_t n);

/// DE(X_n) from the case formulas.
///
/// Odd composite n: the published formula
///     2 (2n + phi (2^{k-1} - 1) - m - 2 + prod (2 - p_i))
/// assumes |2 - phi(n)/phi(l)| = phi(n)/phi(l) - 2 for every square-free l | n
/// with mu(l) = -1, which fails for l = n (ratio 1). So when n is square-free
/// with an odd number of primes the true energy is larger by 2 phi(n). This
/// function includes that term; ucg_distance_energy_uncorrected() does not.
std::int64_t ucg_distance_energy(std::int64_t n);

/// The case formulas exactly as derived, without the square-free boundary term.
std::int64_t ucg_distance_energy_uncorrected(std::int64_t n);

/// r-indexed distance spectrum of X_n assembled per case from Ramanujan sums.
IndexedSpectrum ucg_distance_spectrum(std::int64_t n);

/// F_n(s): common neighbours of two vertices of X_n whose difference is s.
std::int64_t common_neighbors(std::int64_t n, std::int64_t s);

/// Multiplicity of 0 in the adjacency spectrum of X_n: n - rad(n).
std::int64_t nullity(std::int64_t n);

struct AbsSumCheck {
    int shift;
    std::int64_t direct;                 // sum_{i=0}^{n-1} |c(i, n) + shift|
    std::int64_t closed_form;            // n-m+phi 2^k+prod(2-p_i), scaled by shift
    std::int64_t corrected_closed_form;  // closed_form plus the ratio<shift boundary terms

    bool agrees() const noexcept { return direct == closed_form; }
};

/// shift 2 gives the odd-composite sum S, shift 1 the even sum S'.
/// Throws InvalidArgument for other shifts.
AbsSumCheck eigen_abs_sum(std::int64_t n, int shift);

enum class Sign { Negative, Zero, Positive };

std::string_view to_string(Sign sign) noexcept;

/// 2(phi(n) - 1) - n/2, the distance eigenvalue of X_n at r = n/2 for even n.
std::int64_t lehmer_value(std::int64_t n);
/// Sign of lehmer_value(n). Throws OddModulus for odd n.
Sign lehmer_check(std::int64_t n);

struct FamilyPair {
    IcgSpec left;
    IcgSpec right;
    std::int64_t predicted_energy;
    IndexedSpectrum predicted_left;
    IndexedSpectrum predicted_right;
};

/// (ICG_{3p}(1), ICG_{3p}(1, p)), both with energy 12(p - 1).
/// Throws NotPrime, PTooSmall (p <= 3).
FamilyPair family_3p(std::int64_t p);

/// (ICG_{2pq}(1, p), ICG_{2pq}(1, q)), both with energy 12pq - 4p - 4q - 4.
/// Throws NotPrime, OrderViolation unless p > q > 3.
FamilyPair family_2pq(std::int64_t p, std::int64_t q);

}  // namespace icg
