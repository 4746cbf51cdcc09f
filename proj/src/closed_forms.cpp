#include "icg/closed_forms.hpp"

#include <numeric>
#include <string>

namespace icg {

namespace {

std::int64_t abs64(std::int64_t v) { return v < 0 ? checked_sub(0, v) : v; }

std::int64_t pow2(int k) { return std::int64_t{1} << k; }

std::int64_t prod_two_minus_p(const Factorization& f) {
    std::int64_t prod = 1;
    for (const auto& pp : f.factors) prod = checked_mul(prod, 2 - pp.prime);
    return prod;
}

// Sum over square-free l | n with mu(l) = -1 and phi(n)/phi(l) < shift of
// phi(l) * (|shift - ratio| - (ratio - shift)).
std::int64_t boundary_correction(const DivisorTable& table, int shift) {
    const std::int64_t phi_n = table.phi(table.modulus());
    std::int64_t total = 0;
    for (const std::int64_t l : table.divisors()) {
        if (table.mu(l) != -1) continue;
        const std::int64_t ratio = phi_n / table.phi(l);
        if (ratio >= shift) continue;
        total = checked_add(total, checked_mul(table.phi(l), 2 * (shift - ratio)));
    }
    return total;
}

void require_modulus(std::int64_t n) {
    if (n <= 1) fail(ErrorKind::ModulusTooSmall, "modulus must exceed 1, got " + std::to_string(n));
}

std::int64_t odd_composite_energy(const UcgCase& c, bool corrected) {
    const std::int64_t n = c.n;
    std::int64_t de = 2 * n;
    de = checked_add(de, checked_mul(c.phi, pow2(c.k - 1) - 1));
    de = checked_sub(de, c.m + 2);
    de = checked_add(de, prod_two_minus_p(c.factorization));
    de = checked_mul(de, 2);
    if (corrected) de = checked_add(de, boundary_correction(DivisorTable(n), 2));
    return de;
}

std::int64_t even_with_odd_prime_energy(const UcgCase& c) {
    const std::int64_t n = c.n;
    const std::int64_t phi = c.phi;
    // 2S' with S' = n - m + phi 2^k; the prod(2 - p_i) term vanishes since p_1 = 2.
    std::int64_t de = checked_mul(2, checked_add(n - c.m, checked_mul(phi, pow2(c.k))));
    de = checked_sub(de, 2 + 2 * phi);  // |2 + 2 c(0, n)|
    de = checked_sub(de, 2 * phi - 2);  // |2 + 2 c(n/2, n)|, c(n/2, n) = -phi
    de = checked_add(de, 5 * n / 2 - 2 * (phi + 1));
    de = checked_add(de, abs64(lehmer_value(n)));
    return de;
}

std::int64_t energy(std::int64_t n, bool corrected) {
    const UcgCase c = classify_ucg(n);
    switch (c.tag) {
        case UcgCaseTag::Prime: return 2 * (n - 1);
        case UcgCaseTag::PowerOfTwo: return 4 * (n - 2);
        case UcgCaseTag::OddComposite: return odd_composite_energy(c, corrected);
        case UcgCaseTag::EvenWithOddPrime: return even_with_odd_prime_energy(c);
    }
    return 0;
}

void require_prime(std::int64_t p) {
    if (!is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
}

// Distance eigenvalue of ICG_{2ab}(1, a) at r, from the gcd of r with 2ab.
std::int64_t two_pq_eigenvalue(std::int64_t r, std::int64_t a, std::int64_t b) {
    const bool even = r % 2 == 0;
    const bool by_a = r % a == 0;
    const bool by_b = r % b == 0;
    if (by_a && by_b) return even ? 3 * a * b + 2 * a - 2 : a * b - 2 * a - 2;
    if (by_a) return even ? 2 * a - 2 : -2 * a - 2;
    return -2;
}

}  // namespace

std::string_view to_string(UcgCaseTag tag) noexcept {
    switch (tag) {
        case UcgCaseTag::Prime: return "Prime";
        case UcgCaseTag::PowerOfTwo: return "PowerOfTwo";
        case UcgCaseTag::OddComposite: return "OddComposite";
        case UcgCaseTag::EvenWithOddPrime: return "EvenWithOddPrime";
    }
    return "Unknown";
}

std::string_view to_string(Sign sign) noexcept {
    switch (sign) {
        case Sign::Negative: return "negative";
        case Sign::Zero: return "zero";
        case Sign::Positive: return "positive";
    }
    return "unknown";
}

UcgCase classify_ucg(std::int64_t n) {
    require_modulus(n);
    UcgCase c{n, UcgCaseTag::Prime, 0, 0, 0, factorize(n)};
    c.phi = euler_phi(c.factorization);
    c.k = static_cast<int>(c.factorization.distinct_primes());
    c.m = radical(c.factorization);
    const auto& factors = c.factorization.factors;
    if (factors.size() == 1 && factors[0].exponent == 1) {
        c.tag = UcgCaseTag::Prime;
    } else if (factors.size() == 1 && factors[0].prime == 2) {
        c.tag = UcgCaseTag::PowerOfTwo;
    } else if (n % 2 == 1) {
        c.tag = UcgCaseTag::OddComposite;
    } else {
        c.tag = UcgCaseTag::EvenWithOddPrime;
    }
    return c;
}

std::int64_t ucg_distance_energy(std::int64_t n) { return energy(n, true); }

std::int64_t ucg_distance_energy_uncorrected(std::int64_t n) { return energy(n, false); }

IndexedSpectrum ucg_distance_spectrum(std::int64_t n) {
    const UcgCase c = classify_ucg(n);
    const DivisorTable table(n);
    std::vector<std::int64_t> mu(static_cast<std::size_t>(n));
    for (std::int64_t r = 0; r < n; ++r) {
        std::int64_t value = 0;
        switch (c.tag) {
            case UcgCaseTag::Prime:
                value = r == 0 ? n - 1 : -1;
                break;
            case UcgCaseTag::PowerOfTwo:
                value = r == 0 ? 3 * n / 2 - 2 : (r == n / 2 ? n / 2 - 2 : -2);
                break;
            case UcgCaseTag::OddComposite:
                value = r == 0 ? 2 * (n - 1) - c.phi : -2 - table.ramanujan(r, n);
                break;
            case UcgCaseTag::EvenWithOddPrime:
                if (r == 0) {
                    value = 5 * n / 2 - 2 * (c.phi + 1);
                } else if (r == n / 2) {
                    value = lehmer_value(n);
                } else {
                    value = -2 - 2 * table.ramanujan(r, n);
                }
                break;
        }
        mu[static_cast<std::size_t>(r)] = value;
    }
    return IndexedSpectrum(std::move(mu));
}

std::int64_t common_neighbors(std::int64_t n, std::int64_t s) {
    require_modulus(n);
    if (s < 1 || s >= n) {
        fail(ErrorKind::SNotReduced, "difference " + std::to_string(s) + " not in 1.." + std::to_string(n - 1));
    }
    // n * prod (p - eps(p)) / p, exact since rad(n) | n.
    const auto f = factorize(n);
    std::int64_t value = n / radical(f);
    for (const auto& pp : f.factors) {
        const std::int64_t eps = s % pp.prime == 0 ? 1 : 2;
        value = checked_mul(value, pp.prime - eps);
    }
    return value;
}

std::int64_t nullity(std::int64_t n) {
    require_modulus(n);
    return n - radical(n);
}

AbsSumCheck eigen_abs_sum(std::int64_t n, int shift) {
    require_modulus(n);
    if (shift != 1 && shift != 2) fail(ErrorKind::InvalidArgument, "shift must be 1 or 2");
    const DivisorTable table(n);
    const auto& f = table.factorization();

    AbsSumCheck out{shift, 0, 0, 0};
    for (std::int64_t i = 0; i < n; ++i) out.direct = checked_add(out.direct, abs64(table.ramanujan(i, n) + shift));

    const std::int64_t phi = table.phi(n);
    const std::int64_t base = checked_add(n - radical(f), prod_two_minus_p(f));
    out.closed_form = checked_add(checked_mul(shift, base), checked_mul(phi, pow2(static_cast<int>(f.distinct_primes()))));
    out.corrected_closed_form = checked_add(out.closed_form, boundary_correction(table, shift));
    return out;
}

std::int64_t lehmer_value(std::int64_t n) {
    require_modulus(n);
    if (n % 2 != 0) fail(ErrorKind::OddModulus, std::to_string(n) + " is odd");
    return 2 * (euler_phi(n) - 1) - n / 2;
}

Sign lehmer_check(std::int64_t n) {
    const std::int64_t v = lehmer_value(n);
    return v < 0 ? Sign::Negative : (v == 0 ? Sign::Zero : Sign::Positive);
}

FamilyPair family_3p(std::int64_t p) {
    require_prime(p);
    if (p <= 3) fail(ErrorKind::PTooSmall, "family needs a prime p > 3, got " + std::to_string(p));
    const std::int64_t n = 3 * p;
    const std::int64_t q = 3;

    std::vector<std::int64_t> right(static_cast<std::size_t>(n));
    for (std::int64_t r = 0; r < n; ++r) {
        const bool by_p = r % p == 0;
        const bool by_q = r % q == 0;
        std::int64_t value = -2;
        if (by_p && by_q) {
            value = p * q + p - 2;
        } else if (by_p) {
            value = p - 2;
        }
        right[static_cast<std::size_t>(r)] = value;
    }
    return FamilyPair{IcgSpec(n, {1}), IcgSpec(n, {1, p}), 12 * (p - 1), ucg_distance_spectrum(n),
                      IndexedSpectrum(std::move(right))};
}

FamilyPair family_2pq(std::int64_t p, std::int64_t q) {
    require_prime(p);
    require_prime(q);
    if (!(p > q && q > 3)) {
        fail(ErrorKind::OrderViolation, "need p > q > 3, got p=" + std::to_string(p) + " q=" + std::to_string(q));
    }
    const std::int64_t n = 2 * p * q;
    std::vector<std::int64_t> left(static_cast<std::size_t>(n));
    std::vector<std::int64_t> right(static_cast<std::size_t>(n));
    for (std::int64_t r = 0; r < n; ++r) {
        left[static_cast<std::size_t>(r)] = two_pq_eigenvalue(r, p, q);
        right[static_cast<std::size_t>(r)] = two_pq_eigenvalue(r, q, p);
    }
    return FamilyPair{IcgSpec(n, {1, p}), IcgSpec(n, {1, q}), 12 * p * q - 4 * p - 4 * q - 4,
                      IndexedSpectrum(std::move(left)), IndexedSpectrum(std::move(right))};
}

}  // namespace icg
