#include "icg/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace icg {

namespace {

void require_positive(std::int64_t n) {
    if (n < 1) fail(ErrorKind::InvalidArgument, "expected a positive integer, got " + std::to_string(n));
}

std::int64_t reduce(std::int64_t r, std::int64_t n) {
    std::int64_t m = r % n;
    return m < 0 ? m + n : m;
}

}  // namespace

bool Factorization::square_free() const noexcept {
    return std::all_of(factors.begin(), factors.end(), [](const PrimePower& pp) { return pp.exponent == 1; });
}

Factorization factorize(std::int64_t n) {
    require_positive(n);
    Factorization f;
    f.n = n;
    std::int64_t rest = n;
    for (std::int64_t p = 2; p <= rest / p; p += (p == 2 ? 1 : 2)) {
        if (rest % p != 0) continue;
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        f.factors.push_back({p, e});
    }
    if (rest > 1) f.factors.push_back({rest, 1});
    return f;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    const auto f = factorize(n);
    return f.factors.size() == 1 && f.factors[0].exponent == 1;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    const auto f = factorize(n);
    std::vector<std::int64_t> out{1};
    for (const auto& [p, e] : f.factors) {
        const std::size_t existing = out.size();
        std::int64_t power = 1;
        for (int i = 1; i <= e; ++i) {
            power *= p;
            for (std::size_t j = 0; j < existing; ++j) out.push_back(out[j] * power);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::int64_t> proper_divisors(std::int64_t n) {
    auto out = divisors(n);
    out.pop_back();
    return out;
}

std::int64_t euler_phi(const Factorization& f) {
    std::int64_t phi = 1;
    for (const auto& [p, e] : f.factors) {
        phi *= p - 1;
        for (int i = 1; i < e; ++i) phi *= p;
    }
    return phi;
}

std::int64_t euler_phi(std::int64_t n) { return euler_phi(factorize(n)); }

int mobius(const Factorization& f) {
    if (!f.square_free()) return 0;
    return f.factors.size() % 2 == 0 ? 1 : -1;
}

int mobius(std::int64_t n) { return mobius(factorize(n)); }

std::int64_t radical(const Factorization& f) {
    std::int64_t m = 1;
    for (const auto& pp : f.factors) m *= pp.prime;
    return m;
}

std::int64_t radical(std::int64_t n) { return radical(factorize(n)); }

std::int64_t ramanujan_sum(std::int64_t r, std::int64_t n) {
    require_positive(n);
    const std::int64_t g = std::gcd(reduce(r, n), n);  // gcd(0, n) = n
    const auto q = factorize(n / g);
    return mobius(q) * (euler_phi(n) / euler_phi(q));
}

std::int64_t unity_sum(std::int64_t r, std::int64_t n) {
    require_positive(n);
    return r % n == 0 ? n : 0;
}

DivisorTable::DivisorTable(std::int64_t n) : n_(n), factorization_(factorize(n)), divisors_(icg::divisors(n)) {
    phi_.reserve(divisors_.size());
    mu_.reserve(divisors_.size());
    for (const std::int64_t d : divisors_) {
        // Factor d from the prime list of n; no trial division needed.
        Factorization fd;
        fd.n = d;
        std::int64_t rest = d;
        for (const auto& pp : factorization_.factors) {
            int e = 0;
            while (rest % pp.prime == 0) {
                rest /= pp.prime;
                ++e;
            }
            if (e > 0) fd.factors.push_back({pp.prime, e});
        }
        phi_.push_back(euler_phi(fd));
        mu_.push_back(mobius(fd));
    }
}

std::size_t DivisorTable::index_of(std::int64_t d) const {
    const auto it = std::lower_bound(divisors_.begin(), divisors_.end(), d);
    if (it == divisors_.end() || *it != d) {
        fail(ErrorKind::NonDivisor, std::to_string(d) + " does not divide " + std::to_string(n_));
    }
    return static_cast<std::size_t>(it - divisors_.begin());
}

std::int64_t DivisorTable::ramanujan(std::int64_t r, std::int64_t m) const {
    const std::int64_t g = std::gcd(reduce(r, m), m);
    const std::int64_t q = m / g;
    return mu(q) * (phi(m) / phi(q));
}

}  // namespace icg
