#pragma once

// Integral circulant graphs ICG_n(D): vertices Z_n, with a ~ b exactly when
// gcd(a - b, n) lies in the divisor set D. The symbol set is the union of the
// gcd classes G_n(d), d in D, which is what makes the adjacency spectrum
// integral.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "icg/error.hpp"
#include "icg/matrix.hpp"
#include "icg/spectrum.hpp"

namespace icg {

// A validated pair (n, D). Construction enforces n > 1 and that D is a
// nonempty set of proper divisors of n; the stored divisors are sorted and
// deduplicated.
class IcgSpec {
public:
    IcgSpec(std::int64_t n, std::vector<std::int64_t> divisor_set);

    std::int64_t n() const noexcept { return n_; }
    std::span<const std::int64_t> divisor_set() const noexcept { return divisors_; }
    bool contains(std::int64_t d) const;

    friend bool operator==(const IcgSpec&, const IcgSpec&) = default;

private:
    std::int64_t n_;
    std::vector<std::int64_t> divisors_;
};

/// Same checks as the IcgSpec constructor.
IcgSpec validate(std::int64_t n, std::vector<std::int64_t> divisor_set);

struct GcdClass {
    std::int64_t divisor;
    std::vector<std::int64_t> members;  // ascending
};

/// G_n(d) = {k : gcd(k, n) = d, 1 <= k < n}.
GcdClass gcd_class(std::int64_t n, std::int64_t d);

/// Union of the gcd classes of the divisor set, ascending.
std::vector<std::int64_t> symbol_set(const IcgSpec& spec);

std::int64_t degree(const IcgSpec& spec);

bool is_connected(const IcgSpec& spec);

/// Every IcgSpec on n (nonempty subsets of the proper divisors), in
/// increasing bitmask order over the ascending divisor list.
std::vector<IcgSpec> enumerate_specs(std::int64_t n, bool connected_only = true);

/// lambda_k = sum_{d in D} c(k, n/d) for k = 0..n-1.
IndexedSpectrum adjacency_spectrum(const IcgSpec& spec);

/// 0/1 adjacency matrix; throws CapExceeded when n > cap.
DenseIntMatrix adjacency_matrix(const IcgSpec& spec, std::int64_t cap = kDefaultOracleCap);

/// Returns D when the symmetric set S is exactly a union of gcd classes of n,
/// std::nullopt otherwise. Throws AsymmetricSymbol if S is not closed under
/// negation mod n.
std::optional<std::vector<std::int64_t>> recognize_integral_symbol(std::int64_t n,
                                                                   std::span<const std::int64_t> symbol);

}  // namespace icg
