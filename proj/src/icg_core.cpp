#include "icg/icg_core.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "icg/numtheory.hpp"

namespace icg {

IcgSpec::IcgSpec(std::int64_t n, std::vector<std::int64_t> divisor_set) : n_(n) {
    if (n <= 1) fail(ErrorKind::ModulusTooSmall, "modulus must exceed 1, got " + std::to_string(n));
    if (divisor_set.empty()) fail(ErrorKind::EmptyDivisorSet, "divisor set of ICG_" + std::to_string(n));
    for (const std::int64_t d : divisor_set) {
        if (d <= 0 || d == n) {
            fail(ErrorKind::ImproperDivisor, std::to_string(d) + " is not a proper positive divisor of " + std::to_string(n));
        }
        if (n % d != 0) fail(ErrorKind::NonDivisor, std::to_string(d) + " does not divide " + std::to_string(n));
    }
    std::sort(divisor_set.begin(), divisor_set.end());
    divisor_set.erase(std::unique(divisor_set.begin(), divisor_set.end()), divisor_set.end());
    divisors_ = std::move(divisor_set);
}

bool IcgSpec::contains(std::int64_t d) const { return std::binary_search(divisors_.begin(), divisors_.end(), d); }

IcgSpec validate(std::int64_t n, std::vector<std::int64_t> divisor_set) { return IcgSpec(n, std::move(divisor_set)); }

GcdClass gcd_class(std::int64_t n, std::int64_t d) {
    const IcgSpec checked(n, {d});
    GcdClass out{d, {}};
    out.members.reserve(static_cast<std::size_t>(euler_phi(n / d)));
    for (std::int64_t k = d; k < n; k += d) {
        if (std::gcd(k, n) == d) out.members.push_back(k);
    }
    return out;
}

std::vector<std::int64_t> symbol_set(const IcgSpec& spec) {
    std::vector<std::int64_t> out;
    for (std::int64_t k = 1; k < spec.n(); ++k) {
        if (spec.contains(std::gcd(k, spec.n()))) out.push_back(k);
    }
    return out;
}

std::int64_t degree(const IcgSpec& spec) {
    std::int64_t total = 0;
    for (const std::int64_t d : spec.divisor_set()) total = checked_add(total, euler_phi(spec.n() / d));
    return total;
}

bool is_connected(const IcgSpec& spec) {
    std::int64_t g = 0;
    for (const std::int64_t d : spec.divisor_set()) g = std::gcd(g, d);
    return g == 1;
}

std::vector<IcgSpec> enumerate_specs(std::int64_t n, bool connected_only) {
    const auto proper = proper_divisors(n);
    const std::size_t t = proper.size();
    if (t >= 63) fail(ErrorKind::InvalidArgument, "too many divisors to enumerate");
    std::vector<IcgSpec> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << t); ++mask) {
        std::vector<std::int64_t> chosen;
        std::int64_t g = 0;
        for (std::size_t i = 0; i < t; ++i) {
            if (mask & (std::uint64_t{1} << i)) {
                chosen.push_back(proper[i]);
                g = std::gcd(g, proper[i]);
            }
        }
        if (connected_only && g != 1) continue;
        out.emplace_back(n, std::move(chosen));
    }
    return out;
}

IndexedSpectrum adjacency_spectrum(const IcgSpec& spec) {
    const std::int64_t n = spec.n();
    const DivisorTable table(n);
    std::vector<std::int64_t> values(static_cast<std::size_t>(n), 0);
    for (std::int64_t k = 0; k < n; ++k) {
        std::int64_t lambda = 0;
        for (const std::int64_t d : spec.divisor_set()) lambda = checked_add(lambda, table.ramanujan(k, n / d));
        values[static_cast<std::size_t>(k)] = lambda;
    }
    return IndexedSpectrum(std::move(values));
}

DenseIntMatrix adjacency_matrix(const IcgSpec& spec, std::int64_t cap) {
    const std::int64_t n = spec.n();
    if (n > cap) fail(ErrorKind::CapExceeded, "order " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    const auto order = static_cast<std::size_t>(n);
    DenseIntMatrix a(order);
    for (std::int64_t s = 1; s < n; ++s) {
        if (!spec.contains(std::gcd(s, n))) continue;
        for (std::size_t i = 0; i < order; ++i) a(i, (i + static_cast<std::size_t>(s)) % order) = 1;
    }
    return a;
}

std::optional<std::vector<std::int64_t>> recognize_integral_symbol(std::int64_t n,
                                                                   std::span<const std::int64_t> symbol) {
    if (n <= 1) fail(ErrorKind::ModulusTooSmall, "modulus must exceed 1, got " + std::to_string(n));
    std::vector<char> present(static_cast<std::size_t>(n), 0);
    for (const std::int64_t s : symbol) {
        if (s < 1 || s >= n) {
            fail(ErrorKind::InvalidArgument, "symbol element " + std::to_string(s) + " outside 1.." + std::to_string(n - 1));
        }
        present[static_cast<std::size_t>(s)] = 1;
    }
    for (std::int64_t s = 1; s < n; ++s) {
        if (present[static_cast<std::size_t>(s)] && !present[static_cast<std::size_t>(n - s)]) {
            fail(ErrorKind::AsymmetricSymbol, std::to_string(s) + " present but " + std::to_string(n - s) + " missing");
        }
    }

    // Touched classes must be complete: count hits per gcd and compare with phi(n/d).
    std::map<std::int64_t, std::int64_t> hits;
    for (std::int64_t s = 1; s < n; ++s) {
        if (present[static_cast<std::size_t>(s)]) ++hits[std::gcd(s, n)];
    }
    if (hits.empty()) return std::nullopt;
    std::vector<std::int64_t> out;
    for (const auto& [d, count] : hits) {
        if (count != euler_phi(n / d)) return std::nullopt;
        out.push_back(d);
    }
    return out;
}

}  // namespace icg
